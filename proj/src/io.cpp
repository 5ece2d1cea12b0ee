#include "rackmod/io.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace rackmod::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw MalformedInput(std::string("expected an object with field '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw MalformedInput(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw MalformedInput(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

Elem element(const Json& j, const char* what) {
  const auto v = integer(j, what);
  if (v < 0 || v > std::numeric_limits<std::int32_t>::max())
    throw MalformedInput(std::string(what) + " out of range");
  return static_cast<Elem>(v);
}

std::size_t count(const Json& j, const char* what) { return element(j, what); }

std::vector<Elem> elements(const Json& j, const char* what) {
  if (!j.is_array()) throw MalformedInput(std::string(what) + " must be an array");
  std::vector<Elem> out;
  for (const auto& v : j) out.push_back(element(v, what));
  return out;
}

void expect_type(const Json& j, const char* type) {
  if (type_of(j) != type)
    throw MalformedInput(std::string("expected type '") + type + "', got '" + type_of(j) + "'");
}

Json square_table(const Grid& g) { return to_json(g); }

}  // namespace

Json read_json_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 failed");
  std::ostringstream out;
  for (unsigned int k = 0; k < length; ++k) out << std::hex << std::setw(2) << std::setfill('0') << int{digest[k]};
  return out.str();
}

std::string type_of(const Json& j) {
  const auto& t = field(j, "type");
  if (!t.is_string()) throw MalformedInput("field 'type' must be a string");
  return t.get<std::string>();
}

Json to_json(const Grid& g) { return g.to_rows(); }

Grid grid_from_json(const Json& j) {
  if (!j.is_array()) throw MalformedInput("table must be an array of rows");
  std::vector<std::vector<Elem>> rows;
  for (const auto& row : j) rows.push_back(elements(row, "table entry"));
  return Grid::from_rows(rows);
}

Json to_json(const Rack& r) {
  Json j{{"type", "rack"}, {"size", r.size()}, {"table", square_table(r.table())}};
  if (r.basepoint()) j["basepoint"] = *r.basepoint();
  return j;
}

std::pair<Grid, std::optional<Elem>> raw_rack_from_json(const Json& j) {
  expect_type(j, "rack");
  Grid table = grid_from_json(field(j, "table"));
  if (j.contains("size") && count(j["size"], "size") != table.rows())
    throw MalformedInput("size does not match the table");
  std::optional<Elem> basepoint;
  if (j.contains("basepoint") && !j["basepoint"].is_null()) basepoint = element(j["basepoint"], "basepoint");
  return {std::move(table), basepoint};
}

Rack rack_from_json(const Json& j) {
  auto [table, basepoint] = raw_rack_from_json(j);
  return Rack(std::move(table), basepoint);
}

Json to_json(const FiniteGroup& g) {
  return {{"type", "group"}, {"size", g.size()}, {"cayley", square_table(g.cayley())}};
}

FiniteGroup group_from_json(const Json& j) {
  expect_type(j, "group");
  return FiniteGroup(grid_from_json(field(j, "cayley")));
}

Json to_json(const RackAction& a) {
  return {{"type", "action"}, {"rack", to_json(a.rack)}, {"set_size", a.set_size}, {"action", to_json(a.action)}};
}

RackAction action_from_json(const Json& j) {
  expect_type(j, "action");
  return {rack_from_json(field(j, "rack")), count(field(j, "set_size"), "set_size"),
          grid_from_json(field(j, "action"))};
}

Json to_json(const CrossedModule& cm) {
  return {{"type", "crossmod"},
          {"target", to_json(cm.target())},
          {"action", to_json(cm.action.action)},
          {"p", cm.p}};
}

CrossedModule crossmod_from_json(const Json& j) {
  expect_type(j, "crossmod");
  Grid action = grid_from_json(field(j, "action"));
  const std::size_t m = j.contains("set_size") ? count(j["set_size"], "set_size") : action.rows();
  return {RackAction{rack_from_json(field(j, "target")), m, std::move(action)}, elements(field(j, "p"), "p")};
}

std::optional<Grid> claimed_source_from_json(const Json& j) {
  if (!j.contains("source_table") || j["source_table"].is_null()) return std::nullopt;
  return grid_from_json(j["source_table"]);
}

Json to_json(const AugmentedRack& ar) {
  return {{"type", "augmented"},
          {"group", to_json(ar.group)},
          {"set_size", ar.set_size},
          {"action", to_json(ar.group_action)},
          {"p", ar.p}};
}

AugmentedRack augmented_from_json(const Json& j) {
  expect_type(j, "augmented");
  Grid action = grid_from_json(field(j, "action"));
  const std::size_t m = j.contains("set_size") ? count(j["set_size"], "set_size") : action.rows();
  return {group_from_json(field(j, "group")), m, std::move(action), elements(field(j, "p"), "p")};
}

Json to_json(const GroupCrossedModule& gc) {
  return {{"type", "group_crossmod"},
          {"M", to_json(gc.m)},
          {"N", to_json(gc.n)},
          {"mu", gc.mu},
          {"action", to_json(gc.action)}};
}

GroupCrossedModule group_crossmod_from_json(const Json& j) {
  expect_type(j, "group_crossmod");
  return {group_from_json(field(j, "M")), group_from_json(field(j, "N")), elements(field(j, "mu"), "mu"),
          grid_from_json(field(j, "action"))};
}

Json to_json(const GroupPresentation& p) {
  return {{"type", "presentation"}, {"generators", p.generator_count}, {"relators", p.relators}};
}

Word word_from_json(const Json& j) {
  if (!j.is_array()) throw MalformedInput("a word must be an array of letters");
  Word w;
  for (const auto& v : j) {
    const auto letter = integer(v, "letter");
    if (letter == 0 || letter > std::numeric_limits<std::int32_t>::max() ||
        letter < -std::numeric_limits<std::int32_t>::max())
      throw MalformedInput("letter out of range");
    w.push_back(static_cast<std::int32_t>(letter));
  }
  return w;
}

GroupPresentation presentation_from_json(const Json& j) {
  expect_type(j, "presentation");
  GroupPresentation p;
  p.generator_count = count(field(j, "generators"), "generators");
  const auto& relators = field(j, "relators");
  if (!relators.is_array()) throw MalformedInput("relators must be an array");
  for (const auto& r : relators) {
    p.relators.push_back(word_from_json(r));
    check_word(p.relators.back(), p.generator_count);
  }
  return p;
}

namespace {

Json comp_json(const std::vector<CompTriple>& comp) {
  Json out = Json::array();
  for (const auto& c : comp) out.push_back({c[0], c[1], c[2]});
  return out;
}

std::vector<CompTriple> comp_from_json(const Json& j) {
  if (!j.is_array()) throw MalformedInput("comp must be an array of triples");
  std::vector<CompTriple> out;
  for (const auto& t : j) {
    const auto v = elements(t, "comp entry");
    if (v.size() != 3) throw MalformedInput("comp entries are triples [f, g, g∘f]");
    out.push_back({v[0], v[1], v[2]});
  }
  return out;
}

}  // namespace

Json to_json(const Strict2Rack& x) {
  return {{"type", "2rack"}, {"R0", to_json(x.r0)}, {"R1", to_json(x.r1)}, {"s", x.s},
          {"t", x.t},        {"i", x.i},            {"comp", comp_json(x.comp)}};
}

Strict2Rack two_rack_from_json(const Json& j) {
  expect_type(j, "2rack");
  return {rack_from_json(field(j, "R0")), rack_from_json(field(j, "R1")), elements(field(j, "s"), "s"),
          elements(field(j, "t"), "t"),   elements(field(j, "i"), "i"),   comp_from_json(field(j, "comp"))};
}

Json to_json(const Strict2Group& g) {
  return {{"type", "2group"}, {"G0", to_json(g.g0)}, {"G1", to_json(g.g1)}, {"s", g.s},
          {"t", g.t},         {"i", g.i},            {"comp", comp_json(g.comp)}};
}

Strict2Group two_group_from_json(const Json& j) {
  expect_type(j, "2group");
  return {group_from_json(field(j, "G0")), group_from_json(field(j, "G1")), elements(field(j, "s"), "s"),
          elements(field(j, "t"), "t"),     elements(field(j, "i"), "i"),     comp_from_json(field(j, "comp"))};
}

Json to_json(const Trunk& t) {
  Json edges = Json::array(), squares = Json::array();
  for (const auto& e : t.edges) edges.push_back({{"s", e.s}, {"t", e.t}});
  for (const auto& q : t.squares) squares.push_back({q[0], q[1], q[2], q[3]});
  Json j{{"type", "trunk"}, {"vertices", t.vertices}, {"edges", edges}, {"squares", squares}};
  if (t.identities) j["identities"] = *t.identities;
  return j;
}

Trunk trunk_from_json(const Json& j) {
  expect_type(j, "trunk");
  Trunk t;
  t.vertices = count(field(j, "vertices"), "vertices");
  const auto& edges = field(j, "edges");
  if (!edges.is_array()) throw MalformedInput("edges must be an array");
  for (const auto& e : edges) t.edges.push_back({element(field(e, "s"), "s"), element(field(e, "t"), "t")});
  const auto& squares = field(j, "squares");
  if (!squares.is_array()) throw MalformedInput("squares must be an array");
  for (const auto& q : squares) {
    const auto v = elements(q, "square side");
    if (v.size() != 4) throw MalformedInput("squares are quadruples [a, b, c, d]");
    t.squares.push_back({v[0], v[1], v[2], v[3]});
  }
  if (j.contains("identities") && !j["identities"].is_null()) t.identities = elements(j["identities"], "identity");
  return t;
}

Json to_json(const Trunkified& t) {
  return {{"type", "trunkified"},
          {"source", to_json(t.source)},
          {"target", to_json(t.target)},
          {"vertex_map", t.map.vertex_map},
          {"edge_map", t.map.edge_map}};
}

Json to_json(const LinkDiagram& d) {
  Json crossings = Json::array();
  for (const auto& x : d.crossings)
    crossings.push_back({{"arcs", {x.labels[0], x.labels[1], x.labels[2], x.labels[3]}}, {"sign", x.sign}});
  Json j{{"type", "pd"}, {"crossings", crossings}};
  if (d.free_loops) j["loops"] = d.free_loops;
  return j;
}

LinkDiagram diagram_from_json(const Json& j) {
  expect_type(j, "pd");
  const auto& crossings = field(j, "crossings");
  if (!crossings.is_array()) throw MalformedInput("crossings must be an array");
  std::vector<Crossing> out;
  for (const auto& x : crossings) {
    const auto& arcs = field(x, "arcs");
    if (!arcs.is_array() || arcs.size() != 4) throw MalformedInput("a crossing has four edge labels");
    Crossing c;
    for (std::size_t k = 0; k < 4; ++k) c.labels[k] = integer(arcs[k], "edge label");
    if (x.contains("sign")) {
      const auto s = integer(x["sign"], "sign");
      if (s != 1 && s != -1) throw MalformedInput("sign must be +1 or -1");
      c.sign = static_cast<int>(s);
    }
    out.push_back(c);
  }
  std::size_t loops = j.contains("loops") ? count(j["loops"], "loops") : 0;
  if (out.empty() && !j.contains("loops")) loops = 1;
  return make_diagram(std::move(out), loops);
}

Json to_json(const RackPresentation& p) {
  Json relations = Json::array();
  for (const auto& r : p.relations) relations.push_back({{"a", r.a}, {"b", r.b}, {"c", r.c}, {"inverse", r.inverse}});
  return {{"type", "rack_presentation"}, {"generators", p.generators}, {"relations", relations}};
}

Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json to_json(const CubicalComplex& c) {
  Json boundaries = Json::array();
  for (const auto& d : c.boundaries) {
    Json entries = Json::array();
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (const auto& [col, v] : d.row(r)) entries.push_back({r, col, v});
    boundaries.push_back({{"rows", d.rows()}, {"cols", d.cols()}, {"entries", entries}});
  }
  return {{"type", "nerve"},
          {"dim", c.dim},
          {"rack_size", c.rack_size},
          {"set_size", c.set_size},
          {"cube_counts", c.cube_counts},
          {"boundaries", boundaries}};
}

Json to_json(const std::vector<HomologyDegree>& h) {
  Json degrees = Json::array();
  for (const auto& d : h) {
    Json torsion = Json::array();
    for (const auto& t : d.torsion) torsion.push_back(to_json(t));
    degrees.push_back({{"k", d.k}, {"betti", d.betti}, {"torsion", torsion}});
  }
  return {{"degrees", degrees}};
}

Json to_json(const ValidationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations()) violations.push_back({{"rule", v.rule}, {"witness", v.witness}});
  return {{"valid", r.valid()}, {"violations", violations}, {"truncated", r.truncated()}, {"total", r.total()}};
}

FiniteGroup named_group(const std::string& name) {
  for (const auto& g : small_group_corpus())
    if (name == g.name) return g.group;
  if (name.size() > 1 && name[0] == 'Z') {
    std::size_t n = 0;
    const auto [end, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
    if (ec == std::errc() && end == name.data() + name.size() && n > 0 && n <= 4096) return FiniteGroup::cyclic(n);
  }
  if (name.size() == 2 && name[0] == 'S' && name[1] >= '1' && name[1] <= '5')
    return FiniteGroup::symmetric(static_cast<std::size_t>(name[1] - '0'));
  throw MalformedInput("unknown group '" + name + "'");
}

Rack named_rack(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto number = [&] {
    std::size_t n = 0;
    const auto [end, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
    if (ec != std::errc() || end != arg.data() + arg.size() || n == 0 || n > 4096)
      throw MalformedInput("bad size in rack spec '" + spec + "'");
    return n;
  };
  if (kind == "trivial") return racks::trivial(number());
  if (kind == "dihedral") return racks::dihedral(number());
  if (kind == "cyclic") return racks::cyclic_shift(number());
  if (kind == "flip" && arg.empty()) return racks::two_element_flip();
  if (kind == "conj") return conj_rack(named_group(arg));
  return rack_from_json(read_json_file(spec));
}

}  // namespace rackmod::io
