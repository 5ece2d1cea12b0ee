#include "rackmod/trunks.hpp"

#include <set>
#include <string>
#include <unordered_map>

#include "rackmod/errors.hpp"

namespace rackmod {

namespace {

std::vector<std::vector<Elem>> squares_by_bottom(const Trunk& t) {
  std::vector<std::vector<Elem>> out(t.edges.size());
  for (Elem k = 0; k < t.squares.size(); ++k) out[t.squares[k][0]].push_back(k);
  return out;
}

std::vector<std::vector<Elem>> edges_by_source(const Trunk& t) {
  std::vector<std::vector<Elem>> out(t.vertices);
  for (Elem e = 0; e < t.edges.size(); ++e) out[t.edges[e].s].push_back(e);
  return out;
}

void check_c2(const Trunk& t, ValidationReport& report) {
  const auto by_bottom = squares_by_bottom(t);
  for (Elem i1 = 0; i1 < t.squares.size(); ++i1) {
    const auto [a, b, c, d] = t.squares[i1];
    for (Elem i2 : by_bottom[d]) {
      const auto& s2 = t.squares[i2];  // (BDYT)
      for (Elem i3 : by_bottom[c]) {
        const auto& s3 = t.squares[i3];  // (CDZT)
        if (s3[3] != s2[3]) continue;
        bool completed = false;
        for (Elem ja : by_bottom[a]) {  // (ABXY)
          const auto& sa = t.squares[ja];
          if (sa[3] != s2[1]) continue;
          for (Elem jb : by_bottom[b]) {  // (ACXZ)
            const auto& sb = t.squares[jb];
            if (sb[1] != sa[1] || sb[3] != s3[1]) continue;
            for (Elem jc : by_bottom[sa[2]]) {  // (XYZT)
              const auto& sc = t.squares[jc];
              if (sc[1] == sb[2] && sc[2] == s3[2] && sc[3] == s2[2]) {
                completed = true;
                break;
              }
            }
            if (completed) break;
          }
          if (completed) break;
        }
        if (!completed) report.add("C2", {i1, i2, i3});
      }
    }
  }
}

}  // namespace

ValidationReport validate_trunk(const Trunk& t) {
  const std::size_t ne = t.edges.size();
  for (const auto& e : t.edges)
    if (e.s >= t.vertices || e.t >= t.vertices) throw MalformedInput("trunk edge endpoint out of range");
  for (const auto& q : t.squares)
    for (Elem e : q)
      if (e >= ne) throw MalformedInput("square side out of range");
  if (t.identities) {
    if (t.identities->size() != t.vertices) throw MalformedInput("one identity per vertex required");
    for (Elem e : *t.identities)
      if (e >= ne) throw MalformedInput("identity edge out of range");
  }

  ValidationReport report;
  for (Elem k = 0; k < t.squares.size(); ++k) {
    const auto [a, b, c, d] = t.squares[k];
    const auto &ea = t.edges[a], &eb = t.edges[b], &ec = t.edges[c], &ed = t.edges[d];
    if (ea.s != eb.s || eb.t != ec.s || ea.t != ed.s || ec.t != ed.t) report.add("square-shape", {k});
  }
  if (t.identities) {
    std::set<Square> present(t.squares.begin(), t.squares.end());
    const auto& id = *t.identities;
    for (Elem v = 0; v < t.vertices; ++v)
      if (t.edges[id[v]].s != v || t.edges[id[v]].t != v) report.add("identity-loop", {v});
    for (Elem a = 0; a < ne; ++a) {
      const auto& e = t.edges[a];
      if (!present.contains(Square{a, id[e.s], a, id[e.t]})) report.add("identity-square", {a});
    }
  }
  return report;
}

ValidationReport validate_corner(const Trunk& t) {
  auto report = validate_trunk(t);
  const std::size_t ne = t.edges.size();
  std::unordered_map<std::uint64_t, std::size_t> count;
  for (const auto& q : t.squares) ++count[std::uint64_t{q[0]} * ne + q[1]];
  for (const auto& from : edges_by_source(t))
    for (Elem a : from)
      for (Elem b : from) {
        const auto it = count.find(std::uint64_t{a} * ne + b);
        const std::size_t n = it == count.end() ? 0 : it->second;
        if (n != 1) report.add("C1", {a, b, static_cast<std::int64_t>(n)});
      }
  check_c2(t, report);
  return report;
}

Trunk rack_trunk(const Rack& rack) {
  const std::size_t n = rack.size();
  Trunk t;
  t.vertices = 1;
  t.edges.assign(n, TrunkEdge{0, 0});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t.squares.push_back({a, b, rack.op(a, b), b});
  if (rack.pointed()) t.identities = std::vector<Elem>{*rack.basepoint()};
  return t;
}

Trunk action_rack_trunk(const RackAction& a) {
  auto report = validate_action(a);
  if (!report.valid()) throw ValidationError("not a rack action", std::move(report));
  const std::size_t n = a.rack.size(), m = a.set_size;
  auto edge = [n](Elem x, Elem r) { return static_cast<Elem>(x * n + r); };
  Trunk t;
  t.vertices = m;
  for (Elem x = 0; x < m; ++x)
    for (Elem r = 0; r < n; ++r) t.edges.push_back({x, a.act(x, r)});
  for (Elem x = 0; x < m; ++x)
    for (Elem r = 0; r < n; ++r)
      for (Elem r2 = 0; r2 < n; ++r2)
        t.squares.push_back({edge(x, r), edge(x, r2), edge(a.act(x, r2), a.rack.op(r, r2)), edge(a.act(x, r), r2)});
  if (a.rack.pointed()) {
    const Elem e = *a.rack.basepoint();
    std::vector<Elem> id;
    for (Elem x = 0; x < m && a.act(x, e) == x; ++x) id.push_back(edge(x, e));
    if (id.size() == m) t.identities = std::move(id);
  }
  return t;
}

Trunk extended_rack_trunk(const Rack& rack) { return action_rack_trunk(self_action(rack)); }

CornerOps corner_ops(const Trunk& t) {
  auto report = validate_corner(t);
  if (!report.valid()) throw ValidationError("not a corner trunk", std::move(report));
  const std::size_t ne = t.edges.size();
  CornerOps ops{Grid(ne, ne, kNoEdge), Grid(ne, ne, kNoEdge)};
  for (const auto& [a, b, c, d] : t.squares) {
    ops.left(a, b) = c;
    ops.right(a, b) = d;
  }
  auto L = [&](Elem x, Elem y) { return x == kNoEdge || y == kNoEdge ? kNoEdge : ops.left(x, y); };
  auto R = [&](Elem x, Elem y) { return x == kNoEdge || y == kNoEdge ? kNoEdge : ops.right(x, y); };
  auto fail = [](int which, Elem a, Elem b, Elem c) {
    throw InconsistencyError("corner identity " + std::to_string(which) + " fails on edges (" + std::to_string(a) +
                             ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
  };
  for (const auto& from : edges_by_source(t))
    for (Elem a : from)
      for (Elem b : from)
        for (Elem c : from) {
          const Elem l1 = L(L(a, b), R(b, c)), r1 = L(L(a, c), L(b, c));
          if (l1 == kNoEdge || l1 != r1) fail(1, a, b, c);
          const Elem l2 = R(R(b, c), R(b, a)), r2 = R(L(b, c), R(c, a));
          if (l2 == kNoEdge || l2 != r2) fail(2, a, b, c);
          const Elem l3 = L(R(b, a), R(b, c)), r3 = R(L(b, c), L(a, c));
          if (l3 == kNoEdge || l3 != r3) fail(3, a, b, c);
        }
  return ops;
}

ValidationReport validate_trunk_map(const Trunk& from, const Trunk& to, const TrunkMap& map) {
  if (map.vertex_map.size() != from.vertices || map.edge_map.size() != from.edges.size())
    throw MalformedInput("trunk map has the wrong length");
  for (Elem v : map.vertex_map)
    if (v >= to.vertices) throw MalformedInput("vertex image out of range");
  for (Elem e : map.edge_map)
    if (e >= to.edges.size()) throw MalformedInput("edge image out of range");

  ValidationReport report;
  for (Elem e = 0; e < from.edges.size(); ++e) {
    const auto& image = to.edges[map.edge_map[e]];
    if (image.s != map.vertex_map[from.edges[e].s]) report.add("source", {e});
    if (image.t != map.vertex_map[from.edges[e].t]) report.add("target", {e});
  }
  if (from.identities && to.identities)
    for (Elem v = 0; v < from.vertices; ++v)
      if (map.edge_map[(*from.identities)[v]] != (*to.identities)[map.vertex_map[v]]) report.add("identity", {v});
  std::set<Square> present(to.squares.begin(), to.squares.end());
  for (Elem k = 0; k < from.squares.size(); ++k) {
    Square image;
    for (std::size_t side = 0; side < 4; ++side) image[side] = map.edge_map[from.squares[k][side]];
    if (!present.contains(image)) report.add("square", {k});
  }
  return report;
}

Trunkified induced_trunk_map(const RackAction& a, const std::vector<Elem>& p) {
  const std::size_t n = a.rack.size();
  if (p.size() != a.set_size) throw MalformedInput("p has the wrong length");
  for (Elem v : p)
    if (v >= n) throw MalformedInput("p value out of range");
  Trunkified out{action_rack_trunk(a), extended_rack_trunk(a.rack), {p, {}}};
  for (Elem x = 0; x < a.set_size; ++x)
    for (Elem r = 0; r < n; ++r) out.map.edge_map.push_back(static_cast<Elem>(p[x] * n + r));
  return out;
}

Trunkified trunkified_from_crossmod(const CrossedModule& cm) {
  auto report = validate_crossed_module(cm);
  if (!report.valid()) throw ValidationError("not a crossed module", std::move(report));
  return induced_trunk_map(cm.action, cm.p);
}

CrossedModule crossmod_from_trunkified(const Trunkified& tm) {
  const std::size_t n = tm.target.vertices, m = tm.source.vertices;
  if (tm.target.edges.size() != n * n) throw PreconditionError("target is not an extended rack trunk");
  if (tm.source.edges.size() != m * n) throw PreconditionError("source is not an action trunk over the target rack");

  std::optional<Elem> basepoint;
  if (tm.target.identities && n > 0) basepoint = static_cast<Elem>((*tm.target.identities)[0] % n);
  Grid table(n, n), action(m, n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) table(a, b) = tm.target.edges[a * n + b].t;
  for (Elem x = 0; x < m; ++x)
    for (Elem r = 0; r < n; ++r) action(x, r) = tm.source.edges[x * n + r].t;

  std::optional<CrossedModule> cm;
  try {
    cm = CrossedModule{RackAction{Rack(std::move(table), basepoint), m, std::move(action)}, tm.map.vertex_map};
    if (extended_rack_trunk(cm->target()) != tm.target) throw PreconditionError("target is not an extended rack trunk");
    if (action_rack_trunk(cm->action) != tm.source) throw PreconditionError("source is not the action trunk");
  } catch (const ValidationError& e) {
    throw PreconditionError(std::string("trunks do not come from a rack action: ") + e.what());
  }
  if (tm.map.vertex_map.size() != m) throw PreconditionError("vertex map has the wrong length");
  if (tm.map.edge_map.size() != m * n) throw PreconditionError("edge map has the wrong length");
  for (Elem x = 0; x < m; ++x) {
    if (tm.map.vertex_map[x] >= n) throw PreconditionError("vertex map value out of range");
    for (Elem r = 0; r < n; ++r)
      if (tm.map.edge_map[x * n + r] != tm.map.vertex_map[x] * n + r)
        throw PreconditionError("edge map is not (x,r) ↦ (p(x),r) at edge " + std::to_string(x * n + r));
  }
  auto report = validate_trunk_map(tm.source, tm.target, tm.map);
  if (!report.valid()) throw PreconditionError("not a trunk map: " + report.summary());
  if (!validate_crossed_module(*cm).valid()) throw InconsistencyError("trunk map does not give a crossed module");
  return *std::move(cm);
}

}  // namespace rackmod
