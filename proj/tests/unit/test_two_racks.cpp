#include <algorithm>

#include "doctest.h"
#include "rackmod/errors.hpp"
#include "rackmod/two_racks.hpp"
#include "support/corpus.hpp"

using namespace rackmod;

namespace {

std::vector<Rack> pointed_racks_up_to(std::size_t n) {
  std::vector<Rack> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto& r : enumerate_racks(k, RackFlavor::pointed).representatives) out.push_back(r);
  return out;
}

GroupCrossedModule trivial_group_crossmod(const FiniteGroup& m, const FiniteGroup& n) {
  Grid action(m.size(), n.size());
  for (Elem a = 0; a < m.size(); ++a)
    for (Elem b = 0; b < n.size(); ++b) action(a, b) = a;
  return {m, n, std::vector<Elem>(m.size(), n.identity()), action};
}

// Every automorphism of m, as an image list.
std::vector<std::vector<Elem>> automorphisms(const FiniteGroup& m) {
  std::vector<std::vector<Elem>> out;
  for (const auto& p : corpus::all_perms(m.size()))
    if (m.is_homomorphism(p, m)) out.push_back(p);
  return out;
}

// All pre-crossed modules M → N (Peiffer not required) with |M| ≤ 3.
std::vector<GroupCrossedModule> small_pre_crossed_modules(const FiniteGroup& m, const FiniteGroup& n) {
  const auto auts = automorphisms(m);
  std::vector<GroupCrossedModule> out;
  std::vector<std::size_t> aut_choice(n.size(), 0);
  while (true) {
    Grid action(m.size(), n.size());
    for (Elem b = 0; b < n.size(); ++b)
      for (Elem a = 0; a < m.size(); ++a) action(a, b) = auts[aut_choice[b]][a];
    std::vector<Elem> mu(m.size(), 0);
    while (true) {
      GroupCrossedModule gc{m, n, mu, action};
      if (validate_group_crossmod(gc, false).valid()) out.push_back(gc);
      std::size_t k = 0;
      while (k < mu.size() && ++mu[k] == n.size()) mu[k++] = 0;
      if (k == mu.size()) break;
    }
    std::size_t k = 0;
    while (k < aut_choice.size() && ++aut_choice[k] == auts.size()) aut_choice[k++] = 0;
    if (k == aut_choice.size()) break;
  }
  return out;
}

// Direct loop over ker(s) × ker(t), independent of kernels_act_trivially.
bool kernels_commute(const Strict2Rack& x) {
  const Elem e = *x.r0.basepoint();
  for (Elem a = 0; a < x.r1.size(); ++a)
    for (Elem b = 0; b < x.r1.size(); ++b)
      if (x.s[a] == e && x.t[b] == e && (x.r1.op(a, b) != a || x.r1.op(b, a) != b)) return false;
  return true;
}

std::vector<FiniteGroup> groups_up_to(std::size_t n) {
  std::vector<FiniteGroup> out;
  for (const auto& g : small_group_corpus())
    if (g.group.size() <= n) out.push_back(g.group);
  return out;
}

}  // namespace

TEST_CASE("discrete 2-racks") {
  for (const auto& r : pointed_racks_up_to(3)) {
    const auto x = discrete_2rack(r);
    CHECK(validate_2rack(x).valid());
    CHECK(kernels_act_trivially(x).valid());
    const auto one = to_1cat_rack(x);
    CHECK(validate_1cat_rack(one).valid());
    CHECK(one.n.size() == r.size());
    const auto sc = standard_construction(x);
    CHECK(sc.kernel == std::vector<Elem>{*r.basepoint()});
    CHECK(sc.crossed_module.set_size() == 1);
    CHECK(validate_crossed_module(sc.crossed_module).valid());
    CHECK(peiffer_discrepancy_scan(x).agree());
  }
  CHECK_THROWS_AS(discrete_2rack(racks::trivial(2)), PreconditionError);
}

TEST_CASE("2-group of the identity crossed module on Z/2") {
  const auto z2 = FiniteGroup::cyclic(2);
  const auto g = two_group_from_group_crossmod(identity_group_crossmod(z2));
  CHECK(validate_2group(g).valid());
  CHECK(g.g1.size() == 4);
  CHECK(g.g1.is_abelian());
  CHECK(g.comp.size() == 8);  // each morphism composes with |M| = 2 others
  // s(m,n) = n, t(m,n) = m+n
  CHECK(g.s == std::vector<Elem>{0, 1, 0, 1});
  CHECK(g.t == std::vector<Elem>{0, 1, 1, 0});

  const auto x = conj_2rack(g);
  CHECK(validate_2rack(x).valid());
  CHECK(x.r1.is_trivial());
  const auto sc = standard_construction(x);
  CHECK(sc.kernel == std::vector<Elem>{0, 2});
  CHECK(sc.crossed_module.set_size() == 2);
  CHECK(sc.crossed_module.p == std::vector<Elem>{0, 1});
  CHECK(validate_crossed_module(sc.crossed_module).valid());
  CHECK(validate_1cat_rack(to_1cat_rack(x)).valid());
}

TEST_CASE("one mutated composition breaks the 2-rack") {
  // μ trivial, so every hom-set is a copy of Z/3 and compositions can be rewired.
  const auto x = conj_2rack(two_group_from_group_crossmod(trivial_group_crossmod(FiniteGroup::cyclic(3), FiniteGroup::cyclic(2))));
  REQUIRE(validate_2rack(x).valid());
  std::size_t mutants = 0;
  for (std::size_t k = 0; k < x.comp.size(); ++k) {
    const auto [f, g, h] = x.comp[k];
    if (g == x.i[x.t[f]] || f == x.i[x.s[g]]) continue;
    for (Elem h2 = 0; h2 < x.r1.size(); ++h2) {
      if (h2 == h || x.s[h2] != x.s[f] || x.t[h2] != x.t[g]) continue;
      auto y = x;
      y.comp[k][2] = h2;
      const auto report = validate_2rack(y);
      CHECK_FALSE(report.valid());
      CHECK((report.has("associative") || report.has("middle-four-exchange")));
      ++mutants;
    }
  }
  CHECK(mutants > 0);
}

TEST_CASE("validate_2rack shape and domain errors") {
  auto x = discrete_2rack(racks::trivial(1).with_basepoint(0));
  auto y = x;
  y.comp.clear();
  CHECK(validate_2rack(y).has("comp-total"));
  y = x;
  y.comp.push_back(y.comp.front());
  CHECK(validate_2rack(y).has("comp-unique"));
  y = x;
  y.s = {0, 0};
  CHECK_THROWS_AS(validate_2rack(y), MalformedInput);

  const auto p = racks::trivial(2).with_basepoint(0);
  auto two = discrete_2rack(p);
  two.comp.push_back({0, 1, 0});
  CHECK(validate_2rack(two).has("comp-domain"));
}

TEST_CASE("unpointed morphism rack is rejected") {
  auto x = discrete_2rack(racks::trivial(2).with_basepoint(0));
  x.r1 = x.r1.with_basepoint(std::nullopt);
  CHECK(validate_2rack(x).has("pointed"));
  CHECK_THROWS_AS(to_1cat_rack(x), PreconditionError);
}

TEST_CASE("group crossed module round trip") {
  std::size_t count = 0;
  const auto groups = groups_up_to(6);
  for (const auto& m : groups) {
    for (const auto& n : groups) {
      std::vector<GroupCrossedModule> inputs;
      if (m.size() <= 3)
        inputs = small_pre_crossed_modules(m, n);
      else
        inputs.push_back(trivial_group_crossmod(m, n));
      if (m == n) inputs.push_back(identity_group_crossmod(m));
      for (const auto& gc : inputs) {
        const auto g = two_group_from_group_crossmod(gc);
        CHECK(validate_group_category(g).valid());
        CHECK(g.g1.size() == m.size() * n.size());
        CHECK(group_crossmod_from_2group(g) == gc);
        // The interchange law holds exactly when Peiffer does.
        const bool peiffer = validate_group_crossmod(gc, true).valid();
        CHECK(validate_2group(g).valid() == peiffer);
        if (!peiffer) {
          CHECK_THROWS_AS(conj_2rack(g), ValidationError);
          ++count;
          continue;
        }
        const auto x = conj_2rack(g);
        CHECK(validate_2rack(x).valid());
        CHECK(kernels_act_trivially(x).valid());
        CHECK(kernels_commute(x));
        const auto sc = standard_construction(x);
        CHECK(sc.kernel.size() == m.size());
        CHECK(validate_crossed_module(sc.crossed_module).valid());
        CHECK(peiffer_discrepancy_scan(x).agree());
        ++count;
      }
    }
  }
  CHECK(count > 50);
}

TEST_CASE("two_group_from_group_crossmod preconditions and small cases") {
  const auto z2 = FiniteGroup::cyclic(2);
  const auto trivial = two_group_from_group_crossmod(trivial_group_crossmod(FiniteGroup::trivial(), FiniteGroup::trivial()));
  CHECK(conj_2rack(trivial) == discrete_2rack(conj_rack(FiniteGroup::trivial())));

  const auto s3 = FiniteGroup::symmetric(3);
  const auto discrete = conj_2rack(two_group_from_group_crossmod(trivial_group_crossmod(FiniteGroup::trivial(), s3)));
  CHECK(validate_2rack(discrete).valid());
  CHECK(discrete.r0.size() == 6);

  // μ: Z/2 → S3 onto a transposition, N acting trivially: not equivariant.
  Elem transposition = 0;
  for (Elem a = 1; a < 6; ++a)
    if (s3.mul(a, a) == s3.identity()) transposition = a;
  GroupCrossedModule bad{z2, s3, {s3.identity(), transposition}, Grid(2, 6)};
  for (Elem b = 0; b < 6; ++b) bad.action(1, b) = 1;
  CHECK_THROWS_AS(two_group_from_group_crossmod(bad), PreconditionError);
}

TEST_CASE("two_group_from_abelian_augmented") {
  const auto z2 = FiniteGroup::cyclic(2);
  AugmentedRack ar{z2, 2, Grid::from_rows({{0, 0}, {1, 1}}), {0, 1}};
  const auto g = two_group_from_abelian_augmented(ar, z2);
  CHECK(validate_2group(g).valid());
  CHECK(g.g1.size() == 4);

  const auto z3 = FiniteGroup::cyclic(3);
  AugmentedRack ar3{FiniteGroup::trivial(), 3, Grid::from_rows({{0}, {1}, {2}}), {0, 0, 0}};
  CHECK(validate_2group(two_group_from_abelian_augmented(ar3, z3)).valid());

  const auto s3 = FiniteGroup::symmetric(3);
  Grid fixed(6, 1);
  for (Elem a = 0; a < 6; ++a) fixed(a, 0) = a;
  AugmentedRack nonabelian{FiniteGroup::trivial(), 6, fixed, std::vector<Elem>(6, 0)};
  CHECK_THROWS_AS(two_group_from_abelian_augmented(nonabelian, s3), PreconditionError);

  // Translation by 1 is not additive on Z/3.
  const auto z2g = FiniteGroup::cyclic(2);
  AugmentedRack shifted{z2g, 3, Grid::from_rows({{0, 0}, {1, 1}, {2, 2}}), {0, 0, 0}};
  CHECK_NOTHROW(two_group_from_abelian_augmented(shifted, z3));
  shifted.group_action = Grid::from_rows({{0, 1}, {1, 2}, {2, 0}});
  CHECK_THROWS_AS(two_group_from_abelian_augmented(shifted, z3), PreconditionError);
}

TEST_CASE("small 2-rack search") {
  const auto search = enumerate_small_2racks(3, 2);
  CHECK_FALSE(search.truncated);
  CHECK(search.candidates == search.valid.size() + search.mfe_violating.size());
  CHECK(search.valid.size() > 0);
  for (const auto& x : search.valid) {
    CHECK(kernels_act_trivially(x).valid());
    CHECK(kernels_commute(x));
    CHECK(validate_crossed_module(standard_construction(x).crossed_module).valid());
    CHECK(validate_1cat_rack(to_1cat_rack(x)).valid());
  }
  std::size_t kernel_failures = 0;
  for (const auto& x : search.mfe_violating) {
    CHECK(validate_category_axioms(x).valid());
    CHECK(validate_2rack(x).has("middle-four-exchange"));
    CHECK(kernels_act_trivially(x).valid() == kernels_commute(x));
    kernel_failures += !kernels_commute(x);
  }
  // Without the middle four exchange the kernels can interact.
  CHECK(kernel_failures > 0);
}

TEST_CASE("mutation scan keeps category axioms") {
  const auto search = enumerate_small_2racks(4, 2);
  std::size_t bases = 0;
  for (const auto& x : search.valid) {
    const auto a = mfe_mutation_scan(x, 7, 300);
    if (a.empty()) continue;
    ++bases;
    CHECK(a == mfe_mutation_scan(x, 7, 300));
    for (const auto& y : a) {
      CHECK(validate_category_axioms(y).valid());
      CHECK(validate_2rack(y).has("middle-four-exchange"));
    }
  }
  CHECK(bases > 0);
}
