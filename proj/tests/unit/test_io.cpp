#include "doctest.h"
#include "rackmod/io.hpp"
#include "support/corpus.hpp"

using namespace rackmod;
using io::Json;

TEST_CASE("sha256") {
  // FIPS 180-2 test vectors.
  CHECK(io::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(io::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("json round trips") {
  for (const auto& r : corpus::racks_up_to(3)) {
    CHECK(io::rack_from_json(Json::parse(io::dump(io::to_json(r)))) == r);
    for (const auto& cm : corpus::all_crossed_modules(r, 2)) {
      const auto back = io::crossmod_from_json(io::to_json(cm));
      CHECK(back.action.action == cm.action.action);
      CHECK(back.p == cm.p);
      CHECK(back.target() == cm.target());
    }
  }
  const auto s3 = FiniteGroup::symmetric(3);
  CHECK(io::group_from_json(io::to_json(s3)).cayley() == s3.cayley());

  const auto pointed = racks::trivial(3).with_basepoint(Elem{1});
  CHECK(io::rack_from_json(io::to_json(pointed)).basepoint() == Elem{1});

  const auto p = as_presentation(racks::dihedral(3));
  const auto q = io::presentation_from_json(io::to_json(p));
  CHECK(q.generator_count == p.generator_count);
  CHECK(q.relators == p.relators);

  const auto d = bundled_diagram("trefoil");
  CHECK(io::diagram_from_json(io::to_json(d)) == d);
  const auto hopf = braid_closure(3, {1, 1});
  CHECK(io::diagram_from_json(io::to_json(hopf)) == hopf);

  const auto x = discrete_2rack(racks::trivial(2).with_basepoint(Elem{0}));
  const auto y = io::two_rack_from_json(io::to_json(x));
  CHECK(y.r1 == x.r1);
  CHECK(y.s == x.s);
  CHECK(y.comp == x.comp);

  const auto t = rack_trunk(racks::dihedral(3));
  const auto u = io::trunk_from_json(io::to_json(t));
  CHECK(u.vertices == t.vertices);
  CHECK(u.squares == t.squares);
}

TEST_CASE("malformed json") {
  CHECK_THROWS_AS(io::rack_from_json(Json::parse(R"({"table": [[0]]})")), MalformedInput);
  CHECK_THROWS_AS(io::rack_from_json(Json::parse(R"({"type": "group", "table": [[0]]})")), MalformedInput);
  CHECK_THROWS_AS(io::rack_from_json(Json::parse(R"({"type": "rack", "table": [[0, 1]]})")), MalformedInput);
  CHECK_THROWS_AS(io::rack_from_json(Json::parse(R"({"type": "rack", "table": [[-1]]})")), MalformedInput);
  CHECK_THROWS_AS(io::rack_from_json(Json::parse(R"({"type": "rack", "size": 2, "table": [[0]]})")),
                  MalformedInput);
  CHECK_THROWS_AS(io::rack_from_json(Json::parse(R"({"type": "rack", "table": [[1, 1], [1, 0]]})")),
                  ValidationError);
  CHECK_THROWS_AS(io::word_from_json(Json::parse("[1, 0]")), MalformedInput);
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/rack.json"), io::IoError);
}

TEST_CASE("named racks and groups") {
  CHECK(io::named_rack("trivial:4") == racks::trivial(4));
  CHECK(io::named_rack("dihedral:5") == racks::dihedral(5));
  CHECK(io::named_rack("flip") == racks::two_element_flip());
  CHECK(io::named_rack("conj:S3").size() == 6);
  CHECK(io::named_group("Z7").size() == 7);
  CHECK(io::named_group("S4").size() == 24);
  CHECK_THROWS_AS(io::named_rack("dihedral:x"), MalformedInput);
  CHECK_THROWS_AS(io::named_group("Q9"), MalformedInput);
}
