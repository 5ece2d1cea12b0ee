#include "rackmod/rack.hpp"

#include <numeric>
#include <string>

#include "rackmod/errors.hpp"

namespace rackmod {

namespace {

void check_shape(const Grid& table, std::optional<Elem> basepoint) {
  if (!table.square()) throw MalformedInput("operation table is not square");
  if (table.rows() == 0) throw MalformedInput("operation table is empty");
  for (Elem v : table.cells())
    if (v >= table.rows()) throw MalformedInput("table entry " + std::to_string(v) + " out of range");
  if (basepoint && *basepoint >= table.rows())
    throw MalformedInput("basepoint " + std::to_string(*basepoint) + " out of range");
}

}  // namespace

ValidationReport validate_rack(const Grid& table, std::optional<Elem> basepoint) {
  check_shape(table, basepoint);
  ValidationReport report;
  const std::size_t n = table.rows();
  for (Elem b = 0; b < n; ++b) {
    std::vector<std::int64_t> preimage(n, -1);
    for (Elem a = 0; a < n; ++a) {
      auto& slot = preimage[table(a, b)];
      if (slot >= 0) {
        report.add("column-bijective", {b, slot, a});
      } else {
        slot = a;
      }
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (table(table(a, b), c) != table(table(a, c), table(b, c)))
          report.add("self-distributive", {a, b, c});
  if (basepoint) {
    const Elem e = *basepoint;
    for (Elem x = 0; x < n; ++x) {
      if (table(e, x) != e) report.add("basepoint-left", {x});
      if (table(x, e) != x) report.add("basepoint-right", {x});
    }
  }
  return report;
}

Rack::Rack(Grid table, std::optional<Elem> basepoint)
    : table_(std::move(table)), basepoint_(basepoint) {
  auto report = validate_rack(table_, basepoint_);
  if (!report.valid()) throw ValidationError("not a rack", std::move(report));
  const std::size_t n = size();
  inverse_ = Grid(n, n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) inverse_(table_(a, b), b) = a;
}

bool Rack::is_quandle() const {
  for (Elem a = 0; a < size(); ++a)
    if (op(a, a) != a) return false;
  return true;
}

bool Rack::is_trivial() const {
  for (Elem a = 0; a < size(); ++a)
    for (Elem b = 0; b < size(); ++b)
      if (op(a, b) != a) return false;
  return true;
}

Rack Rack::with_basepoint(std::optional<Elem> basepoint) const { return Rack(table_, basepoint); }

namespace racks {

Rack trivial(std::size_t n) {
  Grid t(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t(a, b) = static_cast<Elem>(a);
  return Rack(std::move(t));
}

Rack dihedral(std::size_t n) {
  Grid t(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t(a, b) = static_cast<Elem>((2 * b + n - a) % n);
  return Rack(std::move(t));
}

Rack two_element_flip() { return Rack(Grid::from_rows({{1, 1}, {0, 0}})); }

Rack cyclic_shift(std::size_t n) {
  Grid t(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t(a, b) = static_cast<Elem>((a + 1) % n);
  return Rack(std::move(t));
}

}  // namespace racks

ValidationReport validate_left_rack(const Grid& left) {
  check_shape(left, std::nullopt);
  ValidationReport report;
  const std::size_t n = left.rows();
  for (Elem a = 0; a < n; ++a)
    if (!perm::is_permutation(left.row(a))) report.add("row-bijective", {a});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (left(a, left(b, c)) != left(left(a, b), left(a, c)))
          report.add("left-self-distributive", {a, b, c});
  return report;
}

Rack left_to_right(const Grid& left) {
  auto report = validate_left_rack(left);
  if (!report.valid()) throw ValidationError("not a left rack", std::move(report));
  const std::size_t n = left.rows();
  Grid right(n, n);
  // z◁x is the preimage of z under y ↦ x▷y.
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) right(left(x, y), x) = y;
  return Rack(std::move(right));
}

Grid right_to_left(const Rack& rack) {
  const std::size_t n = rack.size();
  Grid left(n, n);
  for (Elem x = 0; x < n; ++x)
    for (Elem z = 0; z < n; ++z) left(x, rack.op(z, x)) = z;
  return left;
}

Rack conj_rack(const FiniteGroup& group) {
  const std::size_t n = group.size();
  Grid t(n, n);
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h) t(g, h) = group.conj(g, h);
  return Rack(std::move(t), group.identity());
}

std::vector<std::vector<Elem>> orbits(const Rack& rack) {
  const std::size_t n = rack.size();
  std::vector<Elem> parent(n);
  std::iota(parent.begin(), parent.end(), Elem{0});
  auto find = [&](Elem x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // a◁⁻¹b lies in the same class as a because a = (a◁⁻¹b)◁b.
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem ra = find(a), rb = find(rack.op(a, b));
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  std::vector<std::vector<Elem>> blocks;
  std::vector<std::int64_t> block_of(n, -1);
  for (Elem a = 0; a < n; ++a) {
    Elem r = find(a);
    if (block_of[r] < 0) {
      block_of[r] = static_cast<std::int64_t>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of[r]].push_back(a);
  }
  return blocks;
}

Perm inner_permutation(const Rack& rack, Elem b) {
  if (b >= rack.size()) throw MalformedInput("element out of range");
  return rack.table().column(b);
}

ValidationReport validate_morphism(const Rack& source, const Rack& target, std::span<const Elem> map) {
  if (map.size() != source.size())
    throw MalformedInput("morphism has " + std::to_string(map.size()) + " entries, expected " +
                         std::to_string(source.size()));
  for (Elem v : map)
    if (v >= target.size()) throw MalformedInput("morphism value out of range");
  ValidationReport report;
  for (Elem a = 0; a < source.size(); ++a)
    for (Elem b = 0; b < source.size(); ++b)
      if (map[source.op(a, b)] != target.op(map[a], map[b])) report.add("homomorphism", {a, b});
  if (source.pointed() && target.pointed() && map[*source.basepoint()] != *target.basepoint())
    report.add("basepoint", {*source.basepoint()});
  return report;
}

}  // namespace rackmod
