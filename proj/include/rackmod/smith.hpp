#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rackmod {

using BigInt = boost::multiprecision::cpp_int;

/// Integer matrix stored by rows; only nonzero entries are kept.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  /// Adds v to entry (r, c), dropping it if the sum is zero.
  void add(std::size_t r, std::size_t c, std::int64_t v);
  std::int64_t get(std::size_t r, std::size_t c) const;
  const std::map<std::size_t, std::int64_t>& row(std::size_t r) const { return data_[r]; }
  std::size_t nonzeros() const;

  std::vector<std::vector<std::int64_t>> to_dense() const;
  /// this * other; throws std::overflow_error on int64 overflow.
  SparseMatrix multiply(const SparseMatrix& other) const;
  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::map<std::size_t, std::int64_t>> data_;
};

struct SmithResult {
  /// Nonzero diagonal entries d₁ | d₂ | … (all positive).
  std::vector<BigInt> factors;
  std::size_t rank = 0;
  /// True if int64 arithmetic overflowed and the computation was redone with
  /// arbitrary precision.
  bool used_bigint = false;
};

/// Unit pivots are eliminated first on the sparse matrix, the remainder is
/// reduced densely with smallest-entry pivoting. Entries beyond 2^62 in
/// magnitude trigger a restart in arbitrary precision.
SmithResult smith_normal_form(const SparseMatrix& m);
SmithResult smith_normal_form(const std::vector<std::vector<std::int64_t>>& m);

}  // namespace rackmod
