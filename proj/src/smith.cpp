#include "rackmod/smith.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rackmod {

void SparseMatrix::add(std::size_t r, std::size_t c, std::int64_t v) {
  if (v == 0) return;
  auto& row = data_[r];
  auto [it, inserted] = row.emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  }
}

std::int64_t SparseMatrix::get(std::size_t r, std::size_t c) const {
  auto it = data_[r].find(c);
  return it == data_[r].end() ? 0 : it->second;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
  SparseMatrix m(dense.size(), dense.empty() ? 0 : dense.front().size());
  for (std::size_t r = 0; r < dense.size(); ++r)
    for (std::size_t c = 0; c < dense[r].size(); ++c) m.add(r, c, dense[r][c]);
  return m;
}

std::vector<std::vector<std::int64_t>> SparseMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_, 0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out[r][c] = v;
  return out;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shapes do not chain");
  SparseMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [k, a] : data_[r])
      for (const auto& [c, b] : other.data_[k]) {
        std::int64_t prod;
        if (__builtin_mul_overflow(a, b, &prod)) throw std::overflow_error("matrix product overflow");
        out.add(r, c, prod);
      }
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const auto& row) { return row.empty(); });
}

namespace {

struct Overflow {};

constexpr std::int64_t kLimit = std::int64_t{1} << 62;

std::int64_t checked(__int128 v) {
  if (v > kLimit || v < -kLimit) throw Overflow{};
  return static_cast<std::int64_t>(v);
}

// a - q*b
std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  return checked(static_cast<__int128>(a) - static_cast<__int128>(q) * b);
}
BigInt sub_mul(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }

std::int64_t add(std::int64_t a, std::int64_t b) { return checked(static_cast<__int128>(a) + b); }
BigInt add(const BigInt& a, const BigInt& b) { return a + b; }

template <class T>
T magnitude(const T& v) {
  return v < 0 ? T(-v) : v;
}

// Eliminates every unit pivot that appears, returning the number eliminated
// and leaving the remaining rows in `rows`.
template <class T>
std::size_t eliminate_units(std::vector<std::map<std::size_t, T>>& rows, std::size_t cols) {
  std::vector<std::set<std::size_t>> in_col(cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) in_col[c].insert(r);

  std::size_t eliminated = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].empty()) continue;
      // pick the unit entry of row i whose column is sparsest
      std::size_t best = cols;
      for (const auto& [c, v] : rows[i])
        if ((v == 1 || v == -1) && (best == cols || in_col[c].size() < in_col[best].size())) best = c;
      if (best == cols) continue;
      const std::size_t j = best;
      const T pivot = rows[i].at(j);
      const std::vector<std::size_t> targets(in_col[j].begin(), in_col[j].end());
      for (std::size_t k : targets) {
        if (k == i) continue;
        const T q = rows[k].at(j) * pivot;  // pivot is its own inverse
        for (const auto& [c, v] : rows[i]) {
          auto it = rows[k].find(c);
          T next = sub_mul(it == rows[k].end() ? T(0) : it->second, q, v);
          if (next == 0) {
            if (it != rows[k].end()) {
              rows[k].erase(it);
              in_col[c].erase(k);
            }
          } else if (it == rows[k].end()) {
            rows[k].emplace(c, next);
            in_col[c].insert(k);
          } else {
            it->second = next;
          }
        }
      }
      for (const auto& [c, v] : rows[i]) in_col[c].erase(i);
      rows[i].clear();
      ++eliminated;
      progress = true;
    }
  }
  return eliminated;
}

template <class T>
std::vector<T> dense_smith(std::vector<std::vector<T>> a) {
  const std::size_t rows = a.size(), cols = rows ? a.front().size() : 0;
  std::vector<T> diag;
  auto find_min = [&](std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    T best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (!found || magnitude(a[i][j]) < best)) {
          best = magnitude(a[i][j]);
          pi = i;
          pj = j;
          found = true;
        }
    return found;
  };
  auto move_to = [&](std::size_t t, std::size_t i, std::size_t j) {
    std::swap(a[t], a[i]);
    for (auto& row : a) std::swap(row[t], row[j]);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t pi = 0, pj = 0;
    if (!find_min(t, pi, pj)) break;
    move_to(t, pi, pj);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const T q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] = sub_mul(a[i][j], q, a[t][j]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const T q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] = sub_mul(a[i][j], q, a[i][t]);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        // bring the smallest remainder in row t / column t to the pivot
        std::size_t bi = t, bj = t;
        T best = magnitude(a[t][t]);
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a[i][t] != 0 && magnitude(a[i][t]) < best) best = magnitude(a[i][t]), bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[t][j] != 0 && magnitude(a[t][j]) < best) best = magnitude(a[t][j]), bi = t, bj = j;
        std::swap(a[t], a[bi]);
        for (auto& row : a) std::swap(row[t], row[bj]);
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = t; c < cols; ++c) a[t][c] = add(a[t][c], a[i][c]);
            divides = false;
          }
      if (divides) break;
    }
    diag.push_back(magnitude(a[t][t]));
  }
  return diag;
}

template <class T>
std::vector<T> smith_factors(const SparseMatrix& m) {
  std::vector<std::map<std::size_t, T>> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) rows[r].emplace(c, T(v));
  const std::size_t units = eliminate_units(rows, m.cols());

  std::vector<std::size_t> live_rows;
  std::set<std::size_t> live_cols;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) continue;
    live_rows.push_back(r);
    for (const auto& [c, v] : rows[r]) live_cols.insert(c);
  }
  const std::vector<std::size_t> cols(live_cols.begin(), live_cols.end());
  std::vector<std::vector<T>> dense(live_rows.size(), std::vector<T>(cols.size(), T(0)));
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (const auto& [c, v] : rows[live_rows[i]])
      dense[i][std::lower_bound(cols.begin(), cols.end(), c) - cols.begin()] = v;

  std::vector<T> factors(units, T(1));
  for (auto& d : dense_smith(std::move(dense))) factors.push_back(std::move(d));
  return factors;
}

}  // namespace

SmithResult smith_normal_form(const SparseMatrix& m) {
  SmithResult result;
  try {
    for (auto v : smith_factors<std::int64_t>(m)) result.factors.emplace_back(v);
  } catch (const Overflow&) {
    result.factors = smith_factors<BigInt>(m);
    result.used_bigint = true;
  }
  result.rank = result.factors.size();
  return result;
}

SmithResult smith_normal_form(const std::vector<std::vector<std::int64_t>>& m) {
  return smith_normal_form(SparseMatrix::from_dense(m));
}

}  // namespace rackmod
