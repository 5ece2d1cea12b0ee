#include "rackmod/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "rackmod/errors.hpp"

namespace rackmod {

ValidationReport validate_group(const Grid& cayley) {
  ValidationReport report;
  const std::size_t n = cayley.rows();
  if (!cayley.square() || n == 0) {
    report.add("square-nonempty", {static_cast<std::int64_t>(cayley.rows()),
                                   static_cast<std::int64_t>(cayley.cols())});
    return report;
  }
  for (Elem v : cayley.cells()) {
    if (v >= n) {
      report.add("closure", {static_cast<std::int64_t>(v)});
      return report;
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (cayley(cayley(a, b), c) != cayley(a, cayley(b, c))) report.add("associative", {a, b, c});

  std::optional<Elem> identity;
  for (Elem e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) ok = cayley(e, a) == a && cayley(a, e) == a;
    if (ok) identity = e;
  }
  if (!identity) {
    report.add("identity");
    return report;
  }
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b)
      found = cayley(a, b) == *identity && cayley(b, a) == *identity;
    if (!found) report.add("inverse", {a});
  }
  return report;
}

FiniteGroup::FiniteGroup(Grid cayley) : cayley_(std::move(cayley)) {
  if (!cayley_.square()) throw MalformedInput("Cayley table is not square");
  for (Elem v : cayley_.cells())
    if (v >= cayley_.rows())
      throw MalformedInput("Cayley table entry " + std::to_string(v) + " out of range");
  auto report = validate_group(cayley_);
  if (!report.valid()) throw ValidationError("not a group", std::move(report));
  const std::size_t n = size();
  for (Elem e = 0; e < n; ++e) {
    if (cayley_(e, e) == e) {
      identity_ = e;
      break;
    }
  }
  inverse_.assign(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (cayley_(a, b) == identity_) inverse_[a] = b;
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  Grid t(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t(a, b) = static_cast<Elem>((a + b) % n);
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::symmetric(std::size_t k) {
  std::vector<Perm> elems;
  Perm p = perm::identity(k);
  do elems.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<Perm, Elem> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Elem>(i);
  Grid t(elems.size(), elems.size());
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b)
      t(a, b) = index.at(perm::compose(elems[a], elems[b]));
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
  Perm rotation(n), reflection(n);
  for (std::size_t i = 0; i < n; ++i) {
    rotation[i] = static_cast<Elem>((i + 1) % n);
    reflection[i] = static_cast<Elem>((n - i) % n);
  }
  return from_permutations({rotation, reflection});
}

FiniteGroup FiniteGroup::quaternion() {
  // Elements are (sign, unit) with unit in {1, i, j, k}; index = 4*sign + unit.
  // unit_mul[u][v] = (sign flip, unit) for u*v.
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kFlip[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  Grid t(8, 8);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a % 4, ub = b % 4;
      const int sign = (a / 4) ^ (b / 4) ^ kFlip[ua][ub];
      t(a, b) = static_cast<Elem>(4 * sign + kUnit[ua][ub]);
    }
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.size(), nb = b.size();
  Grid t(na * nb, na * nb);
  for (std::size_t x = 0; x < na * nb; ++x)
    for (std::size_t y = 0; y < na * nb; ++y)
      t(x, y) = static_cast<Elem>(a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Perm>& generators, std::size_t cap) {
  if (generators.empty()) return trivial();
  const std::size_t degree = generators.front().size();
  std::vector<Perm> elems{perm::identity(degree)};
  std::map<Perm, Elem> index{{elems.front(), 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      Perm next = perm::compose(elems[head], g);
      if (index.emplace(next, static_cast<Elem>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (elems.size() > cap) throw ResourceError("permutation group closure exceeds cap", elems.size());
      }
    }
  }
  Grid t(elems.size(), elems.size());
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b)
      t(a, b) = index.at(perm::compose(elems[a], elems[b]));
  return FiniteGroup(std::move(t));
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < size(); ++a)
    for (Elem b = a + 1; b < size(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::is_homomorphism(std::span<const Elem> f, const FiniteGroup& target) const {
  if (f.size() != size()) return false;
  for (Elem v : f)
    if (v >= target.size()) return false;
  for (Elem a = 0; a < size(); ++a)
    for (Elem b = 0; b < size(); ++b)
      if (f[mul(a, b)] != target.mul(f[a], f[b])) return false;
  return true;
}

std::vector<NamedGroup> small_group_corpus() {
  std::vector<NamedGroup> out;
  for (std::size_t n = 1; n <= 8; ++n) {
    static const char* kNames[] = {"", "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8"};
    out.push_back({kNames[n], FiniteGroup::cyclic(n)});
  }
  const auto z2 = FiniteGroup::cyclic(2);
  out.push_back({"Z2xZ2", FiniteGroup::direct_product(z2, z2)});
  out.push_back({"S3", FiniteGroup::symmetric(3)});
  out.push_back({"Z2xZ4", FiniteGroup::direct_product(z2, FiniteGroup::cyclic(4))});
  out.push_back({"Z2xZ2xZ2", FiniteGroup::direct_product(z2, FiniteGroup::direct_product(z2, z2))});
  out.push_back({"D4", FiniteGroup::dihedral(4)});
  out.push_back({"Q8", FiniteGroup::quaternion()});
  return out;
}

}  // namespace rackmod
