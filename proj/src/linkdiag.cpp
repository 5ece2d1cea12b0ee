#include "rackmod/linkdiag.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "rackmod/errors.hpp"

namespace rackmod {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

LinkDiagram make_diagram(std::vector<Crossing> crossings, std::size_t free_loops,
                         const std::vector<std::size_t>& positions) {
  auto pos = [&](std::size_t c) { return positions.empty() ? c : positions[c]; };
  const std::size_t nc = crossings.size();

  std::map<std::int64_t, std::vector<std::pair<std::size_t, int>>> occurrences;
  for (std::size_t c = 0; c < nc; ++c)
    for (int slot = 0; slot < 4; ++slot) occurrences[crossings[c].labels[slot]].push_back({c, slot});
  std::vector<std::int64_t> labels;  // sorted, index = compact edge id
  for (const auto& [label, occ] : occurrences) {
    if (occ.size() != 2)
      throw ParseError("edge label " + std::to_string(label) + " occurs " + std::to_string(occ.size()) +
                           " time(s); every edge needs one start and one end",
                       pos(occ.back().first));
    labels.push_back(label);
  }
  auto partner = [&](std::size_t c, int slot) {
    const auto& occ = occurrences.at(crossings[c].labels[slot]);
    return occ[0] == std::pair{c, slot} ? occ[1] : occ[0];
  };

  // +1 incoming, −1 outgoing
  std::vector<std::array<int, 4>> dir(nc, {0, 0, 0, 0});
  std::deque<std::pair<std::size_t, int>> queue;
  auto set = [&](std::size_t c, int slot, int d) {
    if (dir[c][slot] == d) return;
    if (dir[c][slot] == -d)
      throw MalformedInput("orientation does not close up at edge " + std::to_string(crossings[c].labels[slot]));
    dir[c][slot] = d;
    queue.push_back({c, slot});
  };
  auto drain = [&] {
    while (!queue.empty()) {
      const auto [c, slot] = queue.front();
      queue.pop_front();
      const int d = dir[c][slot];
      if (slot == 1 || slot == 3) set(c, 4 - slot, -d);
      const auto [c2, slot2] = partner(c, slot);
      set(c2, slot2, -d);
    }
  };
  for (std::size_t c = 0; c < nc; ++c) {
    set(c, 0, 1);
    set(c, 2, -1);
  }
  drain();
  for (std::size_t c = 0; c < nc; ++c) {
    if (dir[c][1] != 0) continue;
    const auto& l = crossings[c].labels;
    bool l_in;
    if (crossings[c].sign != 0)
      l_in = crossings[c].sign > 0;
    else
      l_in = l[1] == l[3] + 1 || l[3] > l[1] + 1;
    set(c, 3, l_in ? 1 : -1);
    drain();
  }
  for (std::size_t c = 0; c < nc; ++c) {
    const int derived = dir[c][3] == 1 ? 1 : -1;
    if (crossings[c].sign != 0 && crossings[c].sign != derived)
      throw MalformedInput("sign of crossing " + std::to_string(c) + " contradicts the orientation");
    crossings[c].sign = derived;
  }

  auto edge = [&](std::int64_t label) {
    return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };
  UnionFind arcs(labels.size()), comps(labels.size());
  for (const auto& x : crossings) {
    arcs.unite(edge(x.labels[1]), edge(x.labels[3]));
    comps.unite(edge(x.labels[1]), edge(x.labels[3]));
    comps.unite(edge(x.labels[0]), edge(x.labels[2]));
  }
  // Roots are the smallest members, so numbering roots in index order numbers
  // arcs by their smallest label.
  std::vector<Elem> arc_id(labels.size());
  LinkDiagram d;
  for (std::size_t e = 0; e < labels.size(); ++e)
    if (arcs.find(e) == e) arc_id[e] = static_cast<Elem>(d.arc_count++);
  for (std::size_t e = 0; e < labels.size(); ++e) arc_id[e] = arc_id[arcs.find(e)];

  std::map<std::size_t, std::vector<Elem>> by_component;
  for (std::size_t e = 0; e < labels.size(); ++e) by_component[comps.find(e)].push_back(arc_id[e]);
  for (auto& [root, list] : by_component) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    d.components.push_back(std::move(list));
  }
  for (std::size_t k = 0; k < free_loops; ++k) d.components.push_back({static_cast<Elem>(d.arc_count++)});
  for (const auto& x : crossings) {
    std::array<Elem, 4> a;
    for (int slot = 0; slot < 4; ++slot) a[slot] = arc_id[edge(x.labels[slot])];
    d.arcs.push_back(a);
  }
  d.crossings = std::move(crossings);
  d.free_loops = free_loops;
  return d;
}

LinkDiagram parse_pd(std::string_view code) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < code.size() && (std::isspace(static_cast<unsigned char>(code[i])) || code[i] == ',')) ++i;
  };
  auto expect = [&](char ch) {
    skip();
    if (i >= code.size() || code[i] != ch) throw ParseError(std::string("expected '") + ch + "'", i);
    ++i;
  };
  auto integer = [&] {
    skip();
    const std::size_t start = i;
    if (i < code.size() && (code[i] == '-' || code[i] == '+')) ++i;
    const std::size_t digits = i;
    while (i < code.size() && std::isdigit(static_cast<unsigned char>(code[i]))) ++i;
    if (i == digits || i - digits > 15) throw ParseError("expected an edge label", start);
    return std::stoll(std::string(code.substr(start, i - start)));
  };

  skip();
  if (code.substr(i, 2) == "PD") i += 2;
  skip();
  bool bracketed = false;
  if (i < code.size() && code[i] == '[') {
    bracketed = true;
    ++i;
  }
  std::vector<Crossing> crossings;
  std::vector<std::size_t> positions;
  while (true) {
    skip();
    if (i >= code.size() || code[i] == ']') break;
    if (code[i] != 'X') throw ParseError("expected 'X['", i);
    positions.push_back(i);
    ++i;
    expect('[');
    Crossing x;
    for (auto& label : x.labels) label = integer();
    expect(']');
    while (i < code.size() && code[i] == ' ') ++i;
    if (i < code.size() && (code[i] == '+' || code[i] == '-')) x.sign = code[i++] == '+' ? 1 : -1;
    crossings.push_back(x);
  }
  if (bracketed) expect(']');
  skip();
  if (i != code.size()) throw ParseError("unexpected trailing input", i);
  const std::size_t loops = crossings.empty() ? 1 : 0;
  return make_diagram(std::move(crossings), loops, positions);
}

std::string format_pd(const LinkDiagram& d) {
  std::ostringstream out;
  out << "PD[";
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const auto& l = d.crossings[c].labels;
    out << (c ? ", " : "") << "X[" << l[0] << ',' << l[1] << ',' << l[2] << ',' << l[3] << ']'
        << (d.crossings[c].sign > 0 ? '+' : '-');
  }
  out << ']';
  return out.str();
}

LinkDiagram braid_closure(std::size_t strands, const std::vector<int>& word) {
  if (strands == 0) throw MalformedInput("a braid needs at least one strand");
  std::vector<std::int64_t> current(strands);
  std::iota(current.begin(), current.end(), 1);
  std::int64_t next = static_cast<std::int64_t>(strands) + 1;
  std::vector<Crossing> crossings;
  for (int letter : word) {
    const std::size_t k = static_cast<std::size_t>(letter < 0 ? -letter : letter);
    if (k == 0 || k >= strands) throw MalformedInput("braid letter " + std::to_string(letter) + " out of range");
    const std::size_t p = k - 1, q = k;
    const std::int64_t in_left = current[p], in_right = current[q];
    const std::int64_t out_left = next++, out_right = next++;
    if (letter > 0)
      crossings.push_back({{in_right, out_right, out_left, in_left}, 1});
    else
      crossings.push_back({{in_left, in_right, out_right, out_left}, -1});
    current[p] = out_left;
    current[q] = out_right;
  }
  std::map<std::int64_t, std::int64_t> closing;
  std::size_t loops = 0;
  for (std::size_t p = 0; p < strands; ++p) {
    const auto initial = static_cast<std::int64_t>(p + 1);
    if (current[p] == initial)
      ++loops;
    else
      closing[current[p]] = initial;
  }
  for (auto& x : crossings)
    for (auto& label : x.labels)
      if (auto it = closing.find(label); it != closing.end()) label = it->second;
  return make_diagram(std::move(crossings), loops);
}

RackPresentation fundamental_rack_presentation(const LinkDiagram& d) {
  RackPresentation p;
  p.generators = d.arc_count;
  for (std::size_t c = 0; c < d.crossings.size(); ++c)
    p.relations.push_back({d.arcs[c][0], d.arcs[c][1], d.arcs[c][2], d.crossings[c].sign < 0});
  return p;
}

std::uint64_t count_colorings(const RackPresentation& p, const Rack& rack) {
  const std::size_t n = p.generators;
  for (const auto& r : p.relations)
    if (r.a >= n || r.b >= n || r.c >= n) throw MalformedInput("relation refers to a missing generator");
  const Elem size = static_cast<Elem>(rack.size());
  constexpr Elem unset = std::numeric_limits<Elem>::max();

  std::vector<bool> constrained(n, false);
  for (const auto& r : p.relations) constrained[r.a] = constrained[r.b] = constrained[r.c] = true;
  std::vector<Elem> order;
  for (Elem g = 0; g < n; ++g)
    if (constrained[g]) order.push_back(g);

  std::vector<Elem> value(n, unset);
  std::vector<Elem> trail;
  // Forces every value a relation determines; false on a contradiction.
  auto propagate = [&] {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : p.relations) {
        if (value[r.b] == unset) continue;
        const Elem b = value[r.b];
        if (value[r.a] != unset) {
          const Elem c = r.inverse ? rack.inv_op(value[r.a], b) : rack.op(value[r.a], b);
          if (value[r.c] == unset) {
            value[r.c] = c;
            trail.push_back(r.c);
            changed = true;
          } else if (value[r.c] != c) {
            return false;
          }
        } else if (value[r.c] != unset) {
          value[r.a] = r.inverse ? rack.op(value[r.c], b) : rack.inv_op(value[r.c], b);
          trail.push_back(r.a);
          changed = true;
        }
      }
    }
    return true;
  };

  std::uint64_t total = 0;
  auto add = [&](std::uint64_t v) {
    if (__builtin_add_overflow(total, v, &total)) throw ResourceError("coloring count exceeds 64 bits");
  };
  auto search = [&](auto&& self, std::size_t k) -> void {
    while (k < order.size() && value[order[k]] != unset) ++k;
    if (k == order.size()) {
      add(1);
      return;
    }
    for (Elem v = 0; v < size; ++v) {
      const std::size_t mark = trail.size();
      value[order[k]] = v;
      trail.push_back(order[k]);
      if (propagate()) self(self, k + 1);
      while (trail.size() > mark) {
        value[trail.back()] = unset;
        trail.pop_back();
      }
    }
  };
  search(search, 0);

  for (Elem g = 0; g < n; ++g)
    if (!constrained[g] && __builtin_mul_overflow(total, std::uint64_t{size}, &total))
      throw ResourceError("coloring count exceeds 64 bits");
  return total;
}

LinkDiagram bundled_diagram(std::string_view name) {
  if (name == "unknot") return parse_pd("PD[]");
  if (name == "trefoil") return parse_pd("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]");
  if (name == "figure-eight") return braid_closure(3, {1, -2, 1, -2});
  if (name == "hopf") return braid_closure(2, {1, 1});
  throw MalformedInput("unknown diagram '" + std::string(name) + "'");
}

std::vector<DiagramPair> bundled_moves() {
  return {
      {"trefoil", "R2", braid_closure(2, {1, 1, 1}), braid_closure(2, {1, 1, -1, 1, 1})},
      {"trefoil", "R3", braid_closure(3, {1, 2, 1, 2}), braid_closure(3, {2, 1, 2, 2})},
      {"figure-eight", "R2", braid_closure(3, {1, -2, 1, -2}), braid_closure(3, {1, -2, 2, -2, 1, -2})},
      {"mixed", "R3", braid_closure(3, {-1, 2, 1, 2}), braid_closure(3, {2, 1, -2, 2})},
      {"hopf", "R2", braid_closure(2, {1, 1}), braid_closure(2, {1, -1, 1, 1})},
      {"trefoil", "R1", braid_closure(2, {1, 1, 1}), braid_closure(3, {1, 1, 1, 2})},
      {"trefoil", "R1", braid_closure(2, {1, 1, 1}), braid_closure(3, {1, 1, 1, -2})},
  };
}

std::vector<InvarianceResult> coloring_invariance_check(const std::vector<DiagramPair>& pairs, const Rack& rack) {
  std::vector<InvarianceResult> out;
  for (const auto& pair : pairs)
    out.push_back({pair.name, pair.move, count_colorings(fundamental_rack_presentation(pair.before), rack),
                   count_colorings(fundamental_rack_presentation(pair.after), rack)});
  return out;
}

}  // namespace rackmod
