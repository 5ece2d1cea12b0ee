#include "rackmod/grid.hpp"

#include <numeric>

#include "rackmod/errors.hpp"

namespace rackmod {

Grid::Grid(std::size_t rows, std::size_t cols, Elem fill)
    : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

Grid Grid::from_rows(const std::vector<std::vector<Elem>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Grid g(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw MalformedInput("ragged table: row " + std::to_string(r) + " has " +
                           std::to_string(rows[r].size()) + " entries, expected " +
                           std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) g(r, c) = rows[r][c];
  }
  return g;
}

std::vector<Elem> Grid::column(std::size_t c) const {
  std::vector<Elem> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<std::vector<Elem>> Grid::to_rows() const {
  std::vector<std::vector<Elem>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

namespace perm {

Perm identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), Elem{0});
  return p;
}

bool is_permutation(std::span<const Elem> p) {
  std::vector<bool> seen(p.size(), false);
  for (Elem v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = q[p[i]];
  return out;
}

Perm inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<Elem>(i);
  return out;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

}  // namespace perm

}  // namespace rackmod
