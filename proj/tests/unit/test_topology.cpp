#include <numeric>

#include "doctest.h"
#include "rackmod/errors.hpp"
#include "rackmod/group_bridge.hpp"
#include "rackmod/topology.hpp"
#include "support/corpus.hpp"

using namespace rackmod;

namespace {

std::size_t action_orbit_count(const RackAction& a) {
  std::vector<std::size_t> parent(a.set_size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Elem x = 0; x < a.set_size; ++x)
    for (Elem r = 0; r < a.rack.size(); ++r) parent[find(x)] = find(a.act(x, r));
  std::size_t roots = 0;
  for (std::size_t x = 0; x < a.set_size; ++x) roots += find(x) == x;
  return roots;
}

}  // namespace

TEST_CASE("nerve cube counts") {
  auto one = nerve(racks::trivial(1), 4);
  CHECK(one.cube_counts == std::vector<std::size_t>{1, 1, 1, 1, 1});
  for (const auto& d : one.boundaries) CHECK(d.is_zero());

  CHECK(nerve(racks::two_element_flip(), 3).cube_counts == std::vector<std::size_t>{1, 2, 4, 8});
  CHECK(covering_nerve(self_action(racks::dihedral(3)), 2).cube_counts == std::vector<std::size_t>{3, 9, 27});

  CHECK_THROWS_AS(nerve(racks::trivial(2), 5), ResourceError);
  CHECK_THROWS_AS(nerve(racks::trivial(5), 4, {4, 100}), ResourceError);
}

TEST_CASE("homology of trivial racks") {
  auto h1 = homology(nerve(racks::trivial(1), 4));
  REQUIRE(h1.size() == 4);
  for (const auto& h : h1) {
    CHECK(h.betti == 1);
    CHECK(h.torsion.empty());
  }
  auto h2 = homology(nerve(racks::trivial(2), 4));
  REQUIRE(h2.size() == 4);
  for (const auto& h : h2) {
    CHECK(h.betti == (std::size_t{1} << h.k));
    CHECK(h.torsion.empty());
  }
}

TEST_CASE("homology of the two-element flip rack") {
  auto h = homology(nerve(racks::two_element_flip(), 3));
  CHECK(h[0].betti == 1);
  CHECK(h[1].betti == 1);
  CHECK(h[1].torsion.empty());
}

TEST_CASE("boundary squares to zero") {
  for (const auto& r : corpus::racks_up_to(4)) CHECK(boundary_squares_to_zero(nerve(r, 4)));
  for (const auto& r : corpus::racks_up_to(3))
    for (const auto& a : corpus::all_actions(r, 2)) CHECK(boundary_squares_to_zero(covering_nerve(a, 3)));
}

TEST_CASE("betti1 = abelianization rank = orbit count for racks of order <= 4") {
  for (const auto& r : corpus::racks_up_to(4)) {
    auto h = homology(nerve(r, 2));
    const auto orbit_count = orbits(r).size();
    CHECK(h[0].betti == 1);
    CHECK(h[0].torsion.empty());
    CHECK(h[1].betti == orbit_count);
    CHECK(h[1].torsion.empty());
    CHECK(abelianization(as_presentation(r)).rank == orbit_count);
  }
}

TEST_CASE("H0 of the covering nerve counts orbits of the acted set") {
  for (const auto& r : corpus::racks_up_to(3))
    for (std::size_t m = 1; m <= 3; ++m)
      for (const auto& a : corpus::all_actions(r, m)) {
        auto h = homology(covering_nerve(a, 1));
        CHECK(h[0].betti == action_orbit_count(a));
      }
}

TEST_CASE("covering_check") {
  auto id = covering_check(identity_crossed_module(racks::dihedral(3)));
  CHECK(id.covering);
  CHECK(id.source_stabilizers == id.target_stabilizers);

  std::size_t checked = 0;
  for (const auto& r : corpus::racks_up_to(3))
    for (std::size_t m = 1; m <= 3; ++m)
      for (const auto& cm : corpus::all_crossed_modules(r, m)) {
        REQUIRE(covering_check(cm).covering);
        ++checked;
      }
  CHECK(checked > 100);
}

TEST_CASE("covering_check finds a witness for a non-equivariant mutant") {
  bool found = false;
  for (const auto& r : corpus::racks_up_to(3)) {
    for (const auto& cm : corpus::all_crossed_modules(r, 2)) {
      for (Elem x = 0; x < 2 && !found; ++x)
        for (Elem v = 0; v < r.size() && !found; ++v) {
          auto mutant = cm;
          mutant.p[x] = v;
          if (validate_crossed_module(mutant).valid()) continue;
          auto check = covering_check(mutant);
          if (check.covering) continue;
          found = true;
          const auto& g = *check.witness;
          const Elem w = *check.witness_point;
          CHECK(g[r.size() + w] == r.size() + w);
          CHECK(g[mutant.p[w]] != mutant.p[w]);
        }
      if (found) break;
    }
    if (found) break;
  }
  CHECK(found);
}
