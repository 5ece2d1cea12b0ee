#include <tuple>

#include "doctest.h"
#include "rackmod/crossmod.hpp"
#include "rackmod/errors.hpp"
#include "support/corpus.hpp"

using namespace rackmod;

TEST_CASE("validate_action") {
  for (const auto& r : corpus::racks_up_to(3)) {
    CHECK(validate_action(self_action(r)).valid());
    CHECK(validate_action(trivial_action(r, 3)).valid());
  }
  // Break one entry of the dihedral self-action: column 0 stops being a
  // bijection and the compatibility law fails on some triple.
  auto a = self_action(racks::dihedral(3));
  a.action(1, 0) = 1;
  auto report = validate_action(a);
  CHECK_FALSE(report.valid());
  CHECK(report.has("bijective"));
  CHECK(report.has("compatible"));
  // Recheck the reported triple by hand.
  for (const auto& v : report.violations()) {
    if (v.rule != "compatible") continue;
    const Elem x = v.witness[0], r = v.witness[1], s = v.witness[2];
    CHECK(a.act(a.act(x, r), s) != a.act(a.act(x, s), a.rack.op(r, s)));
  }
  CHECK_THROWS_AS(validate_action(RackAction{racks::trivial(2), 2, Grid(2, 3)}), MalformedInput);
}

TEST_CASE("acts_by_automorphisms") {
  for (const auto& r : corpus::racks_up_to(3)) {
    CHECK(acts_by_automorphisms(self_action(r), r.table()));
    CHECK(acts_by_automorphisms(trivial_action(r, r.size()), r.table()));
  }
  // The trivial action preserves every table, so the mutation is applied to
  // the source of the self-action instead.
  const auto d3 = racks::dihedral(3);
  Grid mutated = d3.table();
  mutated(0, 1) = 0;
  CHECK_FALSE(acts_by_automorphisms(self_action(d3), mutated));
  CHECK(acts_by_automorphisms(trivial_action(d3, 3), mutated));
}

TEST_CASE("hemi_semi_direct") {
  for (const auto& r : corpus::racks_up_to(3)) {
    auto point = hemi_semi_direct(trivial_action(r, 1));
    CHECK(point.table() == r.table());
  }
  const auto d3 = racks::dihedral(3);
  auto h = hemi_semi_direct(self_action(d3));
  // (0,1)◁(0,2) = (0·2, 1◁2) = (2·2 − 0, 2·2 − 1) mod 3 = (1, 0)
  CHECK(h.op(0 * 3 + 1, 0 * 3 + 2) == 1 * 3 + 0);

  const auto flip = racks::two_element_flip();
  auto t = hemi_semi_direct(trivial_action(flip, 3));
  for (Elem i = 0; i < 6; ++i)
    for (Elem j = 0; j < 6; ++j) CHECK(t.op(i, j) == (i / 2) * 2 + flip.op(i % 2, j % 2));
}

TEST_CASE("hemi_semi_direct is a rack for every action with |X|, |R| <= 3") {
  std::size_t count = 0;
  for (const auto& r : corpus::racks_up_to(3))
    for (std::size_t m = 1; m <= 3; ++m)
      for (const auto& a : corpus::all_actions(r, m)) {
        auto h = hemi_semi_direct(a);
        REQUIRE(validate_rack(h.table()).valid());
        ++count;
      }
  CHECK(count > 0);
}

TEST_CASE("validate_augmented") {
  for (const auto& [name, g] : small_group_corpus()) {
    INFO(name);
    CHECK(validate_augmented(conjugation_augmented(g)).valid());
    CHECK(validate_augmented({g, 1, Grid(1, g.size(), 0), {g.identity()}}).valid());
  }
  const auto s3 = FiniteGroup::symmetric(3);
  AugmentedRack translation{s3, 6, s3.cayley(), {0, 1, 2, 3, 4, 5}};
  auto report = validate_augmented(translation);
  CHECK_FALSE(report.valid());
  CHECK(report.has("augmentation"));
  CHECK_FALSE(report.has("action-compatible"));
}

TEST_CASE("induced_rack") {
  const auto s3 = FiniteGroup::symmetric(3);
  auto conj = conjugation_augmented(s3);
  CHECK(induced_rack(conj).table() == conj_rack(s3).table());

  AugmentedRack constant = conj;
  constant.p.assign(6, s3.identity());
  CHECK(induced_rack(constant).is_trivial());

  for (const auto& r : corpus::racks_up_to(4)) CHECK(induced_rack(identity_crossed_module(r)) == r.with_basepoint({}));
}

TEST_CASE("induced racks carry p to a morphism") {
  for (const auto& [name, g] : small_group_corpus()) {
    auto ar = conjugation_augmented(g);
    auto x = induced_rack(ar);
    CHECK(validate_morphism(x, conj_rack(g).with_basepoint({}), ar.p).valid());
  }
  for (const auto& r : corpus::racks_up_to(2))
    for (std::size_t m = 1; m <= 3; ++m)
      for (const auto& cm : corpus::all_crossed_modules(r, m))
        CHECK(validate_morphism(induced_rack(cm), r.with_basepoint({}), cm.p).valid());
}

TEST_CASE("validate_crossed_module") {
  for (const auto& r : corpus::racks_up_to(4)) CHECK(validate_crossed_module(identity_crossed_module(r)).valid());

  // p: X → point with the trivial action; Peiffer forces a trivial source.
  const auto point = racks::trivial(1);
  CrossedModule to_point{trivial_action(point, 2), {0, 0}};
  CHECK(validate_crossed_module(to_point).valid());
  CHECK(validate_crossed_module(to_point, racks::trivial(2).table()).valid());
  auto report = validate_crossed_module(to_point, racks::two_element_flip().table());
  CHECK(report.has("peiffer"));

  auto gc = identity_group_crossmod(FiniteGroup::cyclic(2));
  CHECK(validate_group_crossmod(gc).valid());
  CHECK(validate_crossed_module(crossmod_from_group_crossmod(gc)).valid());

  // Non-equivariant map.
  auto bad = identity_crossed_module(racks::dihedral(3));
  bad.p = {0, 0, 1};
  CHECK(validate_crossed_module(bad).has("equivariant"));
}

TEST_CASE("group crossed modules over the corpus become crossed modules of racks") {
  for (const auto& [name, g] : small_group_corpus()) {
    INFO(name);
    auto gc = identity_group_crossmod(g);
    REQUIRE(validate_group_crossmod(gc).valid());
    auto cm = crossmod_from_group_crossmod(gc);
    CHECK(validate_crossed_module(cm).valid());
    CHECK(induced_rack(cm) == conj_rack(g).with_basepoint({}));
  }
}

TEST_CASE("crossed module round trips") {
  auto id = identity_crossed_module(racks::two_element_flip());
  CHECK(roundtrip_crossmod(id) == id);

  std::size_t count = 0;
  for (const auto& r : corpus::racks_up_to(3))
    for (std::size_t m = 1; m <= 3; ++m)
      for (const auto& cm : corpus::all_crossed_modules(r, m)) {
        REQUIRE(roundtrip_crossmod(cm) == cm);
        auto gar = to_generalized(cm);
        REQUIRE(validate_generalized(gar).valid());
        REQUIRE(roundtrip_genaug(gar) == gar);
        ++count;
      }
  CHECK(count > 100);

  GeneralizedAugmentedRack constant{trivial_action(racks::trivial(3), 2), {1, 1}};
  CHECK(roundtrip_genaug(constant) == constant);
}

namespace {

// c(x,y) = (y, x·p(y)) evaluated straight on pairs.
std::pair<Elem, Elem> swap_act(const AugmentedRack& a, const AugmentedRack& b, Elem x, Elem y) {
  return {y, a.group_action(x, b.p[y])};
}

}  // namespace

TEST_CASE("tensor and braiding") {
  const auto g = FiniteGroup::symmetric(3);
  AugmentedRack point{g, 1, Grid(1, 6, 0), {g.identity()}};
  CHECK(braiding(point, point) == std::vector<Elem>{0});

  auto z2 = conjugation_augmented(FiniteGroup::cyclic(2));
  // abelian: c(x, y) = (y, x); index x*2 + y ↦ y*2 + x
  CHECK(braiding(z2, z2) == std::vector<Elem>{0, 2, 1, 3});

  auto s3 = conjugation_augmented(g);
  auto t = tensor_augmented(s3, s3);
  CHECK(validate_augmented(t).valid());
  CHECK(validate_braiding(s3, s3).valid());
  auto c = braiding(s3, s3), ci = braiding_inverse(s3, s3);
  for (Elem i = 0; i < c.size(); ++i) CHECK(ci[c[i]] == i);

  CHECK_THROWS_AS(tensor_augmented(s3, z2), IncompatibleError);
}

TEST_CASE("braid relation on Conj(S3)") {
  const auto s3 = conjugation_augmented(FiniteGroup::symmetric(3));
  CHECK(check_braid_relation(s3, s3, s3).valid());

  // Independent evaluation of both composites on all 216 triples.
  std::size_t agree = 0;
  for (Elem x = 0; x < 6; ++x)
    for (Elem y = 0; y < 6; ++y)
      for (Elem z = 0; z < 6; ++z) {
        auto [a1, a2] = swap_act(s3, s3, x, y);
        auto [a3, a4] = swap_act(s3, s3, a2, z);
        auto [a5, a6] = swap_act(s3, s3, a1, a3);
        auto [b1, b2] = swap_act(s3, s3, y, z);
        auto [b3, b4] = swap_act(s3, s3, x, b1);
        auto [b5, b6] = swap_act(s3, s3, b4, b2);
        agree += std::tie(a5, a6, a4) == std::tie(b3, b5, b6);
      }
  CHECK(agree == 216);
}

TEST_CASE("braiding preserves p for every group of order <= 6") {
  for (const auto& [name, g] : small_group_corpus()) {
    if (g.size() > 6) continue;
    INFO(name);
    auto a = conjugation_augmented(g);
    AugmentedRack point{g, 1, Grid(1, g.size(), 0), {g.identity()}};
    for (const auto* x : {&a, &point})
      for (const auto* y : {&a, &point}) {
        CHECK(validate_braiding(*x, *y).valid());
        for (Elem u = 0; u < x->set_size; ++u)
          for (Elem v = 0; v < y->set_size; ++v)
            CHECK(g.mul(y->p[v], x->p[x->group_action(u, y->p[v])]) == g.mul(x->p[u], y->p[v]));
      }
  }
}

TEST_CASE("assemble_from_pair") {
  const auto g = FiniteGroup::symmetric(3);
  const auto a0 = conjugation_augmented(g);
  std::vector<Elem> id{0, 1, 2, 3, 4, 5};
  AugmentedPair pair{a0, a0, id, id, a0.group_action};
  auto result = assemble_from_pair(pair);
  REQUIRE(result.conditions.valid());
  REQUIRE(result.crossed_module);
  CHECK(validate_crossed_module(*result.crossed_module).valid());
  CHECK(*result.crossed_module == identity_crossed_module(induced_rack(a0)));

  auto not_hom = pair;
  not_hom.beta = {0, 1, 1, 1, 1, 1};
  CHECK_THROWS_AS(assemble_from_pair(not_hom), PreconditionError);

  // A single-cell change can never keep circ a permutation action, so the
  // mutant swaps conjugation for right translation, another valid action.
  auto translated = pair;
  translated.circ = g.cayley();
  auto failed = assemble_from_pair(translated);
  CHECK_FALSE(failed.crossed_module);
  CHECK(failed.conditions.has("condition 3"));
  for (const auto& v : failed.conditions.violations()) {
    if (v.rule != "condition 3") continue;
    const Elem x = v.witness[0], y = v.witness[1], h = v.witness[2];
    CHECK(g.mul(g.conj(y, x), h) != g.conj(g.mul(y, h), g.mul(x, h)));
  }
}

TEST_CASE("assemble_from_pair on the identity covering of every corpus group") {
  for (const auto& [name, g] : small_group_corpus()) {
    const auto a0 = conjugation_augmented(g);
    std::vector<Elem> id(g.size());
    for (Elem i = 0; i < g.size(); ++i) id[i] = i;
    auto result = assemble_from_pair({a0, a0, id, id, a0.group_action});
    REQUIRE(result.crossed_module);
    CHECK(*result.crossed_module == identity_crossed_module(induced_rack(a0)));
  }
}
