#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rackmod/grid.hpp"
#include "rackmod/rack.hpp"

namespace rackmod {

/// X[i, j, k, l]: edge labels counterclockwise from the incoming under-edge
/// i; k is the outgoing under-edge and j, l the over-edges. Sign +1 when the
/// over-strand runs l → j, −1 when it runs j → l, 0 for "derive".
struct Crossing {
  std::array<std::int64_t, 4> labels{};
  int sign = 0;

  bool operator==(const Crossing&) const = default;
};

struct LinkDiagram {
  std::vector<Crossing> crossings;  // signs always filled in
  std::size_t free_loops = 0;       // crossingless components
  std::size_t arc_count = 0;
  /// Arc of each slot of each crossing; arcs are numbered by their smallest
  /// edge label, free loops last.
  std::vector<std::array<Elem, 4>> arcs;
  /// Arcs of each link component.
  std::vector<std::vector<Elem>> components;

  bool operator==(const LinkDiagram&) const = default;
};

/// Checks that every edge label occurs exactly twice and that the
/// orientations close up. The orientation comes from the under-strands and
/// is propagated along edges; a component that only passes over uses
/// explicit signs, else consecutive numbering. Throws ParseError (position =
/// positions[c], or the crossing index) for a dangling or overused label and
/// MalformedInput for an explicit sign that contradicts the orientation.
LinkDiagram make_diagram(std::vector<Crossing> crossings, std::size_t free_loops = 0,
                         const std::vector<std::size_t>& positions = {});

/// "PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]", brackets optional, each X may be
/// followed by + or −. An empty code is the unknot (one free loop).
LinkDiagram parse_pd(std::string_view code);
std::string format_pd(const LinkDiagram& d);

/// Closure of a braid on `strands` strands; letter ±k is σ_k^±1 crossing
/// strands k and k+1 (1-based), σ_k positive with the left strand over.
LinkDiagram braid_closure(std::size_t strands, const std::vector<int>& word);

/// a◁b = c, or a◁⁻¹b = c when `inverse`.
struct RackRelation {
  Elem a = 0, b = 0, c = 0;
  bool inverse = false;

  bool operator==(const RackRelation&) const = default;
};

struct RackPresentation {
  std::size_t generators = 0;
  std::vector<RackRelation> relations;

  bool operator==(const RackPresentation&) const = default;
};

/// One generator per arc; per crossing with incoming under-arc a, over-arc b
/// and outgoing under-arc c the relation a◁b = c (inverse when negative).
RackPresentation fundamental_rack_presentation(const LinkDiagram& d);

/// Exact number of assignments generators → R satisfying every relation.
/// Throws MalformedInput for out-of-range labels and ResourceError if the
/// count does not fit in 64 bits.
std::uint64_t count_colorings(const RackPresentation& p, const Rack& rack);

struct DiagramPair {
  std::string name;
  std::string move;  // "R1", "R2" or "R3"
  LinkDiagram before;
  LinkDiagram after;
};

/// Trefoil, figure eight and Hopf link rewritten by R2, R3 and R1 moves
/// (as braid closures).
std::vector<DiagramPair> bundled_moves();

/// Named diagrams: unknot, trefoil, figure-eight, hopf.
LinkDiagram bundled_diagram(std::string_view name);

struct InvarianceResult {
  std::string name;
  std::string move;
  std::uint64_t before = 0;
  std::uint64_t after = 0;
  bool agree() const noexcept { return before == after; }
};

/// Coloring counts on both sides of each pair.
std::vector<InvarianceResult> coloring_invariance_check(const std::vector<DiagramPair>& pairs, const Rack& rack);

}  // namespace rackmod
