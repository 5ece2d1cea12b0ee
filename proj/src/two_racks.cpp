#include "rackmod/two_racks.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <string>

#include "rackmod/enumerate.hpp"
#include "rackmod/errors.hpp"

namespace rackmod {

namespace {

constexpr Elem kNone = std::numeric_limits<Elem>::max();

struct Structure {
  std::size_t n0, n1;
  const std::vector<Elem>& s;
  const std::vector<Elem>& t;
  const std::vector<Elem>& i;
  const std::vector<CompTriple>& comp;
};

void check_shapes(const Structure& x) {
  if (x.s.size() != x.n1 || x.t.size() != x.n1) throw MalformedInput("s and t must have one entry per morphism");
  if (x.i.size() != x.n0) throw MalformedInput("i must have one entry per object");
  for (std::size_t f = 0; f < x.n1; ++f)
    if (x.s[f] >= x.n0 || x.t[f] >= x.n0) throw MalformedInput("s or t value out of range");
  for (Elem v : x.i)
    if (v >= x.n1) throw MalformedInput("i value out of range");
  for (const auto& c : x.comp)
    for (Elem v : c)
      if (v >= x.n1) throw MalformedInput("composition entry out of range");
}

// lookup(f, g) = g∘f or kNone.
Grid category_checks(const Structure& x, ValidationReport& report) {
  check_shapes(x);
  for (Elem a = 0; a < x.n0; ++a) {
    if (x.s[x.i[a]] != a) report.add("s-section", {a});
    if (x.t[x.i[a]] != a) report.add("t-section", {a});
  }
  Grid lookup(x.n1, x.n1, kNone);
  for (const auto& [f, g, h] : x.comp) {
    if (x.t[f] != x.s[g]) {
      report.add("comp-domain", {f, g});
      continue;
    }
    if (lookup(f, g) != kNone) {
      report.add("comp-unique", {f, g});
      continue;
    }
    lookup(f, g) = h;
    if (x.s[h] != x.s[f]) report.add("comp-source", {f, g, h});
    if (x.t[h] != x.t[g]) report.add("comp-target", {f, g, h});
  }
  for (Elem f = 0; f < x.n1; ++f)
    for (Elem g = 0; g < x.n1; ++g)
      if (x.t[f] == x.s[g] && lookup(f, g) == kNone) report.add("comp-total", {f, g});
  for (Elem f = 0; f < x.n1; ++f) {
    const Elem left = lookup(f, x.i[x.t[f]]);
    if (left != kNone && left != f) report.add("identity-left", {f});
    const Elem right = lookup(x.i[x.s[f]], f);
    if (right != kNone && right != f) report.add("identity-right", {f});
  }
  for (Elem f = 0; f < x.n1; ++f)
    for (Elem g = 0; g < x.n1; ++g) {
      const Elem gf = lookup(f, g);
      if (gf == kNone) continue;
      for (Elem h = 0; h < x.n1; ++h) {
        const Elem hg = lookup(g, h);
        if (hg == kNone) continue;
        const Elem a = lookup(gf, h), b = lookup(f, hg);
        if (a != kNone && b != kNone && a != b) report.add("associative", {f, g, h});
      }
    }
  return lookup;
}

// (g1·g2)∘(f1·f2) = (g1∘f1)·(g2∘f2) on composable pairs.
void interchange_checks(const Grid& lookup, std::size_t n1, const std::function<Elem(Elem, Elem)>& op,
                        ValidationReport& report) {
  std::vector<std::array<Elem, 3>> pairs;
  for (Elem f = 0; f < n1; ++f)
    for (Elem g = 0; g < n1; ++g)
      if (lookup(f, g) != kNone) pairs.push_back({f, g, lookup(f, g)});
  for (const auto& [f1, g1, h1] : pairs)
    for (const auto& [f2, g2, h2] : pairs) {
      const Elem lhs = lookup(op(f1, f2), op(g1, g2));
      if (lhs == kNone || lhs != op(h1, h2)) report.add("middle-four-exchange", {f1, g1, f2, g2});
    }
}

Structure structure_of(const Strict2Rack& x) {
  return {x.r0.size(), x.r1.size(), x.s, x.t, x.i, x.comp};
}

ValidationReport rack_level_checks(const Strict2Rack& x, Grid& lookup) {
  ValidationReport report;
  check_shapes(structure_of(x));
  if (!x.r0.pointed()) report.add("pointed", {0});
  if (!x.r1.pointed()) report.add("pointed", {1});
  report.merge(validate_morphism(x.r1, x.r0, x.s), "s");
  report.merge(validate_morphism(x.r1, x.r0, x.t), "t");
  report.merge(validate_morphism(x.r0, x.r1, x.i), "i");
  lookup = category_checks(structure_of(x), report);
  return report;
}

void require_valid(const Strict2Rack& x) {
  auto report = validate_2rack(x);
  if (!report.valid()) throw ValidationError("not a strict 2-rack", std::move(report));
}

void require_pointed(const Strict2Rack& x) {
  if (!x.r0.pointed() || !x.r1.pointed()) throw PreconditionError("strict 2-racks need pointed racks on both levels");
}

std::vector<Elem> fibre(const std::vector<Elem>& map, Elem value) {
  std::vector<Elem> out;
  for (Elem f = 0; f < map.size(); ++f)
    if (map[f] == value) out.push_back(f);
  return out;
}

}  // namespace

ValidationReport validate_category_axioms(const Strict2Rack& x) {
  Grid lookup;
  return rack_level_checks(x, lookup);
}

ValidationReport validate_2rack(const Strict2Rack& x) {
  Grid lookup;
  auto report = rack_level_checks(x, lookup);
  interchange_checks(lookup, x.r1.size(), [&](Elem a, Elem b) { return x.r1.op(a, b); }, report);
  return report;
}

ValidationReport kernels_act_trivially(const Strict2Rack& x) {
  require_pointed(x);
  check_shapes(structure_of(x));
  const Elem e = *x.r0.basepoint();
  const auto ks = fibre(x.s, e), kt = fibre(x.t, e);
  ValidationReport report;
  for (Elem a : ks)
    for (Elem b : kt) {
      if (x.r1.op(b, a) != b) report.add("ker(s) on ker(t)", {b, a});
      if (x.r1.op(a, b) != a) report.add("ker(t) on ker(s)", {a, b});
    }
  return report;
}

ValidationReport validate_1cat_rack(const OneCatRack& x) {
  const std::size_t n = x.r.size();
  if (x.s.size() != n || x.t.size() != n) throw MalformedInput("s and t must have one entry per element");
  for (std::size_t k = 0; k < n; ++k)
    if (x.s[k] >= n || x.t[k] >= n) throw MalformedInput("s or t value out of range");
  for (Elem v : x.n)
    if (v >= n) throw MalformedInput("subrack element out of range");

  ValidationReport report;
  std::vector<bool> in_n(n, false);
  for (Elem v : x.n) in_n[v] = true;
  if (!x.r.pointed()) {
    report.add("pointed");
  } else if (!in_n[*x.r.basepoint()]) {
    report.add("basepoint-in-subrack", {*x.r.basepoint()});
  }
  for (Elem a : x.n)
    for (Elem b : x.n)
      if (!in_n[x.r.op(a, b)]) report.add("subrack", {a, b});
  report.merge(validate_morphism(x.r, x.r, x.s), "s");
  report.merge(validate_morphism(x.r, x.r, x.t), "t");
  for (Elem a = 0; a < n; ++a) {
    if (!in_n[x.s[a]]) report.add("s-image", {a});
    if (!in_n[x.t[a]]) report.add("t-image", {a});
  }
  for (Elem a : x.n) {
    if (x.s[a] != a) report.add("s-retraction", {a});
    if (x.t[a] != a) report.add("t-retraction", {a});
  }
  if (x.r.pointed()) {
    const Elem e = *x.r.basepoint();
    for (Elem a : fibre(x.s, e))
      for (Elem b : fibre(x.t, e)) {
        if (x.r.op(b, a) != b) report.add("ker(s) on ker(t)", {b, a});
        if (x.r.op(a, b) != a) report.add("ker(t) on ker(s)", {a, b});
      }
  }
  return report;
}

OneCatRack to_1cat_rack(const Strict2Rack& x) {
  require_pointed(x);
  require_valid(x);
  OneCatRack out{x.r1, x.i, {}, {}};
  std::sort(out.n.begin(), out.n.end());
  out.n.erase(std::unique(out.n.begin(), out.n.end()), out.n.end());
  for (std::size_t f = 0; f < x.r1.size(); ++f) {
    out.s.push_back(x.i[x.s[f]]);
    out.t.push_back(x.i[x.t[f]]);
  }
  return out;
}

StandardConstruction standard_construction(const Strict2Rack& x) {
  require_pointed(x);
  require_valid(x);
  auto kernel = fibre(x.s, *x.r0.basepoint());
  std::vector<Elem> position(x.r1.size(), kNone);
  for (Elem k = 0; k < kernel.size(); ++k) position[kernel[k]] = k;

  const std::size_t m = kernel.size();
  Grid action(m, x.r0.size());
  std::vector<Elem> p(m);
  for (Elem k = 0; k < m; ++k) {
    for (Elem r = 0; r < x.r0.size(); ++r) {
      const Elem moved = position[x.r1.op(kernel[k], x.i[r])];
      if (moved == kNone) throw InconsistencyError("ker(s) is not closed under the action of i(R0)");
      action(k, r) = moved;
    }
    p[k] = x.t[kernel[k]];
  }
  return {std::move(kernel), CrossedModule{RackAction{x.r0, m, std::move(action)}, std::move(p)}};
}

PeifferScan peiffer_discrepancy_scan(const Strict2Rack& x) {
  const auto sc = standard_construction(x);
  const auto& cm = sc.crossed_module;
  const std::size_t m = sc.kernel.size();
  std::vector<Elem> position(x.r1.size(), kNone);
  for (Elem k = 0; k < m; ++k) position[sc.kernel[k]] = k;

  PeifferScan out;
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) {
      ++out.pairs;
      const Elem induced = cm.action.act(a, cm.p[b]);
      const Elem inherited = position[x.r1.op(sc.kernel[a], sc.kernel[b])];
      if (induced != inherited) out.disagreements.push_back({a, b});
    }
  return out;
}

Strict2Rack discrete_2rack(const Rack& r0) {
  if (!r0.pointed()) throw PreconditionError("the discrete 2-rack needs a pointed rack");
  Strict2Rack out{r0, r0, perm::identity(r0.size()), perm::identity(r0.size()), perm::identity(r0.size()), {}};
  for (Elem f = 0; f < r0.size(); ++f) out.comp.push_back({f, f, f});
  return out;
}

namespace {

ValidationReport group_level_checks(const Strict2Group& g, Grid& lookup) {
  const Structure st{g.g0.size(), g.g1.size(), g.s, g.t, g.i, g.comp};
  check_shapes(st);
  ValidationReport report;
  if (!g.g1.is_homomorphism(g.s, g.g0)) report.add("s-homomorphism");
  if (!g.g1.is_homomorphism(g.t, g.g0)) report.add("t-homomorphism");
  if (!g.g0.is_homomorphism(g.i, g.g1)) report.add("i-homomorphism");
  lookup = category_checks(st, report);
  return report;
}

}  // namespace

ValidationReport validate_group_category(const Strict2Group& g) {
  Grid lookup;
  return group_level_checks(g, lookup);
}

ValidationReport validate_2group(const Strict2Group& g) {
  Grid lookup;
  auto report = group_level_checks(g, lookup);
  interchange_checks(lookup, g.g1.size(), [&](Elem a, Elem b) { return g.g1.mul(a, b); }, report);
  return report;
}

Strict2Group two_group_from_group_crossmod(const GroupCrossedModule& gc) {
  auto report = validate_group_crossmod(gc, false);
  if (!report.valid()) throw PreconditionError("not a pre-crossed module of groups: " + report.summary());
  const FiniteGroup& m = gc.m;
  const FiniteGroup& n = gc.n;
  const std::size_t nm = m.size(), nn = n.size(), total = nm * nn;
  auto pack = [nn](Elem a, Elem b) { return static_cast<Elem>(a * nn + b); };

  Grid cayley(total, total);
  for (Elem a = 0; a < nm; ++a)
    for (Elem b = 0; b < nn; ++b)
      for (Elem a2 = 0; a2 < nm; ++a2)
        for (Elem b2 = 0; b2 < nn; ++b2)
          cayley(pack(a, b), pack(a2, b2)) = pack(m.mul(a, gc.action(a2, n.inv(b))), n.mul(b, b2));

  Strict2Group out{n, FiniteGroup(std::move(cayley)), {}, {}, {}, {}};
  for (Elem a = 0; a < nm; ++a)
    for (Elem b = 0; b < nn; ++b) {
      out.s.push_back(b);
      out.t.push_back(n.mul(gc.mu[a], b));
    }
  for (Elem b = 0; b < nn; ++b) out.i.push_back(pack(m.identity(), b));
  for (Elem a = 0; a < nm; ++a)
    for (Elem b = 0; b < nn; ++b) {
      const Elem target = n.mul(gc.mu[a], b);
      for (Elem a2 = 0; a2 < nm; ++a2) out.comp.push_back({pack(a, b), pack(a2, target), pack(m.mul(a2, a), b)});
    }
  return out;
}

GroupCrossedModule group_crossmod_from_2group(const Strict2Group& g) {
  auto report = validate_group_category(g);
  if (!report.valid()) throw ValidationError("not a category object in groups", std::move(report));
  const auto kernel = fibre(g.s, g.g0.identity());
  std::vector<Elem> position(g.g1.size(), kNone);
  for (Elem k = 0; k < kernel.size(); ++k) position[kernel[k]] = k;

  const std::size_t nk = kernel.size(), nn = g.g0.size();
  Grid cayley(nk, nk), action(nk, nn);
  std::vector<Elem> mu(nk);
  for (Elem a = 0; a < nk; ++a) {
    for (Elem b = 0; b < nk; ++b) cayley(a, b) = position[g.g1.mul(kernel[a], kernel[b])];
    for (Elem c = 0; c < nn; ++c) action(a, c) = position[g.g1.conj(kernel[a], g.i[c])];
    mu[a] = g.t[kernel[a]];
  }
  return GroupCrossedModule{FiniteGroup(std::move(cayley)), g.g0, std::move(mu), std::move(action)};
}

Strict2Rack conj_2rack(const Strict2Group& g) {
  auto report = validate_2group(g);
  if (!report.valid()) throw ValidationError("not a strict 2-group", std::move(report));
  return Strict2Rack{conj_rack(g.g0), conj_rack(g.g1), g.s, g.t, g.i, g.comp};
}

Strict2Group two_group_from_abelian_augmented(const AugmentedRack& ar, const FiniteGroup& x_group) {
  if (x_group.size() != ar.set_size) throw MalformedInput("group on X has the wrong order");
  auto report = validate_augmented(ar);
  if (!report.valid()) throw PreconditionError("not an augmented rack: " + report.summary());
  if (!x_group.is_abelian()) throw PreconditionError("X is not an abelian group");
  for (Elem g = 0; g < ar.group.size(); ++g)
    for (Elem a = 0; a < ar.set_size; ++a)
      for (Elem b = 0; b < ar.set_size; ++b)
        if (ar.group_action(x_group.mul(a, b), g) != x_group.mul(ar.group_action(a, g), ar.group_action(b, g)))
          throw PreconditionError("G does not act on X by group automorphisms: witness (" + std::to_string(a) +
                                  ", " + std::to_string(b) + ", " + std::to_string(g) + ")");
  if (!x_group.is_homomorphism(ar.p, ar.group)) throw PreconditionError("p is not a group homomorphism");
  return two_group_from_group_crossmod(GroupCrossedModule{x_group, ar.group, ar.p, ar.group_action});
}

TwoRackSearch enumerate_small_2racks(std::size_t max_r1, std::size_t max_r0, std::size_t node_cap) {
  auto pointed_upto = [](std::size_t bound) {
    std::vector<Rack> out;
    for (std::size_t n = 1; n <= bound; ++n)
      for (auto& r : enumerate_racks(n, RackFlavor::pointed).representatives) out.push_back(std::move(r));
    return out;
  };
  const auto objects = pointed_upto(max_r0), arrows = pointed_upto(max_r1);

  TwoRackSearch out;
  std::size_t nodes = 0;
  // every map dom → cod preserving basepoints and ◁
  auto morphisms = [](const Rack& dom, const Rack& cod) {
    std::vector<std::vector<Elem>> found;
    std::vector<Elem> map(dom.size(), 0);
    const std::size_t total = [&] {
      std::size_t c = 1;
      for (std::size_t k = 0; k < dom.size(); ++k) c *= cod.size();
      return c;
    }();
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t rest = code;
      for (auto& v : map) {
        v = static_cast<Elem>(rest % cod.size());
        rest /= cod.size();
      }
      if (validate_morphism(dom, cod, map).valid()) found.push_back(map);
    }
    return found;
  };

  for (const Rack& r0 : objects)
    for (const Rack& r1 : arrows) {
      const auto ups = morphisms(r0, r1), downs = morphisms(r1, r0);
      for (const auto& i : ups)
        for (const auto& s : downs)
          for (const auto& t : downs) {
            bool sections = true;
            for (Elem a = 0; a < r0.size(); ++a) sections = sections && s[i[a]] == a && t[i[a]] == a;
            if (!sections) continue;

            const std::size_t n1 = r1.size();
            std::vector<std::array<Elem, 2>> pairs;
            for (Elem f = 0; f < n1; ++f)
              for (Elem g = 0; g < n1; ++g)
                if (t[f] == s[g]) pairs.push_back({f, g});
            Grid lookup(n1, n1, kNone);

            auto associative_so_far = [&] {
              for (const auto& [f, g] : pairs) {
                const Elem gf = lookup(f, g);
                if (gf == kNone) continue;
                for (Elem h = 0; h < n1; ++h) {
                  if (t[g] != s[h]) continue;
                  const Elem hg = lookup(g, h);
                  if (hg == kNone) continue;
                  const Elem a = lookup(gf, h), b = lookup(f, hg);
                  if (a != kNone && b != kNone && a != b) return false;
                }
              }
              return true;
            };

            std::function<void(std::size_t)> fill = [&](std::size_t k) {
              if (out.truncated) return;
              if (++nodes > node_cap) {
                out.truncated = true;
                return;
              }
              if (k == pairs.size()) {
                Strict2Rack x{r0, r1, s, t, i, {}};
                for (const auto& [f, g] : pairs) x.comp.push_back({f, g, lookup(f, g)});
                if (!validate_category_axioms(x).valid()) return;
                ++out.candidates;
                if (validate_2rack(x).valid())
                  out.valid.push_back(std::move(x));
                else
                  out.mfe_violating.push_back(std::move(x));
                return;
              }
              const auto [f, g] = pairs[k];
              std::vector<Elem> options;
              if (g == i[t[f]])
                options = {f};
              else if (f == i[s[g]])
                options = {g};
              else
                for (Elem h = 0; h < n1; ++h)
                  if (s[h] == s[f] && t[h] == t[g]) options.push_back(h);
              for (Elem h : options) {
                lookup(f, g) = h;
                if (associative_so_far()) fill(k + 1);
                lookup(f, g) = kNone;
              }
            };
            fill(0);
          }
    }
  return out;
}

std::vector<Strict2Rack> mfe_mutation_scan(const Strict2Rack& base, std::uint64_t seed, std::size_t trials) {
  check_shapes(structure_of(base));
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> free_entries;
  for (std::size_t k = 0; k < base.comp.size(); ++k) {
    const auto& [f, g, h] = base.comp[k];
    if (g != base.i[base.t[f]] && f != base.i[base.s[g]]) free_entries.push_back(k);
  }
  std::vector<Strict2Rack> found;
  if (free_entries.empty()) return found;
  std::set<std::vector<CompTriple>> seen;
  std::uniform_int_distribution<std::size_t> pick(0, free_entries.size() - 1), count(1, 3);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Strict2Rack x = base;
    for (std::size_t c = count(rng); c > 0; --c) {
      auto& entry = x.comp[free_entries[pick(rng)]];
      std::vector<Elem> options;
      for (Elem h = 0; h < x.r1.size(); ++h)
        if (x.s[h] == x.s[entry[0]] && x.t[h] == x.t[entry[1]]) options.push_back(h);
      entry[2] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    }
    if (!seen.insert(x.comp).second) continue;
    if (!validate_category_axioms(x).valid()) continue;
    if (validate_2rack(x).has("middle-four-exchange")) found.push_back(std::move(x));
  }
  return found;
}

}  // namespace rackmod
