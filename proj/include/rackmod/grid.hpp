#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rackmod {

/// Elements of every finite carrier are 0-based indices.
using Elem = std::uint32_t;

/// A permutation of {0..n-1}, stored as its image list. Products follow the
/// right-action convention: compose(p, q) applies p first, then q.
using Perm = std::vector<Elem>;

/// Dense row-major table of element indices (operation tables, action tables,
/// Cayley tables).
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, Elem fill = 0);

  /// Throws MalformedInput if the rows are ragged.
  static Grid from_rows(const std::vector<std::vector<Elem>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }

  std::span<const Elem> row(std::size_t r) const {
    return {cells_.data() + r * cols_, cols_};
  }
  /// Column c as a list indexed by row.
  std::vector<Elem> column(std::size_t c) const;

  const std::vector<Elem>& cells() const noexcept { return cells_; }
  std::vector<std::vector<Elem>> to_rows() const;

  bool operator==(const Grid&) const = default;
  auto operator<=>(const Grid& o) const {
    if (auto c = rows_ <=> o.rows_; c != 0) return c;
    if (auto c = cols_ <=> o.cols_; c != 0) return c;
    return cells_ <=> o.cells_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> cells_;
};

namespace perm {

Perm identity(std::size_t n);
bool is_permutation(std::span<const Elem> p);
/// Applies p first, then q.
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
bool is_identity(const Perm& p);

}  // namespace perm

}  // namespace rackmod
