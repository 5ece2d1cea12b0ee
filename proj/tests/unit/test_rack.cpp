#include <random>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "rackmod/enumerate.hpp"
#include "rackmod/errors.hpp"
#include "rackmod/rack.hpp"

using namespace rackmod;

TEST_CASE("validate_rack on the small fixed tables") {
  CHECK(validate_rack(Grid::from_rows({{0}})).valid());
  CHECK(validate_rack(Grid::from_rows({{1, 1}, {0, 0}})).valid());

  auto bad = validate_rack(Grid::from_rows({{0, 0}, {0, 1}}));
  CHECK_FALSE(bad.valid());
  CHECK(bad.has("column-bijective"));
  CHECK(bad.violations().front().witness == std::vector<std::int64_t>{0, 0, 1});
}

TEST_CASE("validate_rack rejects malformed input") {
  CHECK_THROWS_AS(validate_rack(Grid::from_rows({{0, 2}, {1, 0}})), MalformedInput);
  CHECK_THROWS_AS(validate_rack(Grid::from_rows({{0, 1}})), MalformedInput);
  CHECK_THROWS_AS(Grid::from_rows({{0, 1}, {0}}), MalformedInput);
  CHECK_THROWS_AS(validate_rack(Grid::from_rows({{0}}), Elem{3}), MalformedInput);
}

TEST_CASE("validate_rack truncates long violation lists") {
  // Constant table of size 12: every column repeats the value 11 times.
  Grid g(12, 12, 0);
  auto report = validate_rack(g);
  CHECK(report.violations().size() == ValidationReport::kMaxListed);
  CHECK(report.truncated() > 0);
}

TEST_CASE("pointed axioms") {
  auto conj = conj_rack(FiniteGroup::symmetric(3));
  CHECK(conj.pointed());
  CHECK(validate_rack(conj.table(), Elem{0}).valid());
  // The dihedral quandle has no basepoint: 0◁1 = 2 != 0.
  auto report = validate_rack(racks::dihedral(3).table(), Elem{0});
  CHECK(report.has("basepoint-left"));
}

TEST_CASE("validate_rack agrees with the definitional oracle on all tables of order <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t cells = n * n;
    std::size_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) total *= n;
    for (std::size_t code = 0; code < total; ++code) {
      Grid g(n, n);
      std::size_t c = code;
      for (std::size_t i = 0; i < cells; ++i) {
        g(i / n, i % n) = static_cast<Elem>(c % n);
        c /= n;
      }
      REQUIRE(validate_rack(g).valid() == oracle::is_rack(oracle::to_table(g)));
    }
  }
}

TEST_CASE("left_to_right") {
  // x▷x = y, x▷y = x, y▷y = x, y▷x = y with x = 0, y = 1.
  auto right = left_to_right(Grid::from_rows({{1, 0}, {1, 0}}));
  CHECK(right.table() == Grid::from_rows({{1, 1}, {0, 0}}));

  Grid trivial_left(3, 3);
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) trivial_left(a, b) = b;
  CHECK(left_to_right(trivial_left).is_trivial());

  Grid dihedral_left(3, 3);
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) dihedral_left(a, b) = (2 * a + 3 - b) % 3;
  auto r = left_to_right(dihedral_left);
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) {
      // invert the column by direct search
      Elem z = 0;
      while (dihedral_left(b, z) != a) ++z;
      CHECK(r.op(a, b) == z);
      CHECK(r.op(a, b) == (2 * b + 3 - a) % 3);
    }

  CHECK_THROWS_AS(left_to_right(Grid::from_rows({{0, 0}, {1, 1}})), ValidationError);
}

TEST_CASE("right_to_left inverts left_to_right on all racks of order <= 4") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& r : enumerate_racks(n, RackFlavor::racks).representatives) {
      auto left = right_to_left(r);
      CHECK(validate_left_rack(left).valid());
      CHECK(left_to_right(left) == r);
    }
}

TEST_CASE("conj_rack") {
  auto z2 = conj_rack(FiniteGroup::cyclic(2));
  CHECK(z2.is_trivial());
  CHECK(z2.size() == 2);
  CHECK(conj_rack(FiniteGroup::trivial()).size() == 1);

  const auto s3 = FiniteGroup::symmetric(3);
  auto blocks = orbits(conj_rack(s3));
  // brute-force conjugacy classes
  std::set<std::set<Elem>> classes;
  for (Elem g = 0; g < s3.size(); ++g) {
    std::set<Elem> cls;
    for (Elem h = 0; h < s3.size(); ++h) cls.insert(s3.conj(g, h));
    classes.insert(cls);
  }
  std::multiset<std::size_t> sizes, expected{1, 2, 3};
  for (const auto& b : blocks) sizes.insert(b.size());
  CHECK(sizes == expected);
  CHECK(classes.size() == blocks.size());
  for (const auto& b : blocks) CHECK(classes.count(std::set<Elem>(b.begin(), b.end())) == 1);

  for (const auto& [name, g] : small_group_corpus()) {
    INFO(name);
    CHECK(validate_rack(conj_rack(g).table(), g.identity()).valid());
  }
}

TEST_CASE("orbits") {
  CHECK(orbits(racks::trivial(4)).size() == 4);
  CHECK(orbits(racks::two_element_flip()) == std::vector<std::vector<Elem>>{{0, 1}});
  CHECK(orbits(racks::dihedral(3)).size() == 1);
  CHECK(orbits(racks::dihedral(4)).size() == 2);
}

TEST_CASE("inner_permutation") {
  auto t = racks::trivial(3);
  for (Elem b = 0; b < 3; ++b) CHECK(perm::is_identity(inner_permutation(t, b)));
  auto flip = racks::two_element_flip();
  CHECK(inner_permutation(flip, 0) == Perm{1, 0});
  CHECK(inner_permutation(flip, 1) == Perm{1, 0});
  CHECK(inner_permutation(racks::dihedral(3), 0) == Perm{0, 2, 1});
}

TEST_CASE("inner permutations form a rack morphism into Conj(Sym)") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& r : enumerate_racks(n, RackFlavor::racks).representatives)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) {
          auto pb = inner_permutation(r, b), pc = inner_permutation(r, c);
          REQUIRE(perm::is_permutation(pb));
          // right-action convention: g_{b◁c} = g_c^{-1} g_b g_c
          auto expected = perm::compose(perm::compose(perm::inverse(pc), pb), pc);
          REQUIRE(inner_permutation(r, r.op(b, c)) == expected);
        }
}

TEST_CASE("validate_morphism") {
  auto d3 = racks::dihedral(3);
  CHECK(validate_morphism(d3, d3, std::vector<Elem>{0, 1, 2}).valid());
  auto conj = conj_rack(FiniteGroup::symmetric(3));
  CHECK(validate_morphism(conj, conj, std::vector<Elem>(6, 0)).valid());
  auto t2 = racks::trivial(2);
  CHECK(validate_morphism(t2, t2, std::vector<Elem>{1, 0}).valid());
  // constant map out of a quandle into a non-quandle fails
  CHECK_FALSE(validate_morphism(d3, racks::two_element_flip(), std::vector<Elem>{0, 0, 0}).valid());
  CHECK_THROWS_AS(validate_morphism(d3, d3, std::vector<Elem>{0, 1}), MalformedInput);
}

TEST_CASE("enumerate_racks counts match the labelled-orbit oracle") {
  CHECK(enumerate_racks(1, RackFlavor::racks).count() == 1);
  for (int n = 1; n <= 4; ++n) {
    INFO("n = " << n);
    CHECK(enumerate_racks(n, RackFlavor::racks).count() == oracle::count_rack_classes(n, false));
    CHECK(enumerate_racks(n, RackFlavor::quandles).count() == oracle::count_rack_classes(n, true));
  }
  CHECK(oracle::count_rack_classes(3, false) == 6);
  CHECK(oracle::count_rack_classes(3, true) == 3);
}

TEST_CASE("enumerate_racks representatives are valid and pairwise non-isomorphic") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto flavor : {RackFlavor::racks, RackFlavor::quandles, RackFlavor::pointed}) {
      auto result = enumerate_racks(n, flavor);
      const auto& reps = result.representatives;
      for (std::size_t i = 0; i < reps.size(); ++i) {
        CHECK(validate_rack(reps[i].table(), reps[i].basepoint()).valid());
        if (flavor == RackFlavor::quandles) CHECK(reps[i].is_quandle());
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
          // direct permutation search, independent of canonical_form
          bool iso = false;
          for (const auto& pi : oracle::all_perms(static_cast<int>(n))) {
            if (flavor == RackFlavor::pointed && pi[0] != 0) continue;
            bool all = true;
            for (Elem a = 0; a < n && all; ++a)
              for (Elem b = 0; b < n && all; ++b)
                all = reps[j].op(pi[a], pi[b]) == static_cast<Elem>(pi[reps[i].op(a, b)]);
            iso = iso || all;
          }
          CHECK_FALSE(iso);
        }
      }
    }
}

TEST_CASE("enumerate_racks order 5 and the cap") {
  CHECK(enumerate_racks(5, RackFlavor::racks).count() == 74);
  CHECK(enumerate_racks(5, RackFlavor::quandles).count() == 22);
  CHECK_THROWS_AS(enumerate_racks(6, RackFlavor::racks), ResourceError);
}

TEST_CASE("enumerate_racks is independent of the job count") {
  auto one = enumerate_racks(4, RackFlavor::racks, {5, 1});
  auto four = enumerate_racks(4, RackFlavor::racks, {5, 4});
  REQUIRE(one.count() == four.count());
  for (std::size_t i = 0; i < one.count(); ++i)
    CHECK(one.representatives[i] == four.representatives[i]);
}

TEST_CASE("canonical_form is a relabelling invariant") {
  std::mt19937 rng(7);
  for (const auto& r : enumerate_racks(4, RackFlavor::racks).representatives) {
    Perm pi = perm::identity(4);
    std::shuffle(pi.begin(), pi.end(), rng);
    Grid relabelled(4, 4);
    for (Elem a = 0; a < 4; ++a)
      for (Elem b = 0; b < 4; ++b) relabelled(pi[a], pi[b]) = pi[r.op(a, b)];
    CHECK(canonical_form(Rack(relabelled)) == canonical_form(r));
  }
}
