#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "rackmod/crossmod.hpp"
#include "rackmod/grid.hpp"
#include "rackmod/rack.hpp"
#include "rackmod/report.hpp"

namespace rackmod {

struct TrunkEdge {
  Elem s = 0;
  Elem t = 0;

  bool operator==(const TrunkEdge&) const = default;
};

/// Preferred square (a, b, c, d): bottom a: A→B, left b: A→C, top c: C→D,
/// right d: B→D.
using Square = std::array<Elem, 4>;

struct Trunk {
  std::size_t vertices = 0;
  std::vector<TrunkEdge> edges;
  std::vector<Square> squares;
  std::optional<std::vector<Elem>> identities;  // e_A per vertex

  bool operator==(const Trunk&) const = default;
};

/// Square shapes and, with identities, loops e_A and the squares
/// (a, e_A, a, e_B). Throws MalformedInput for out-of-range indices.
ValidationReport validate_trunk(const Trunk& t);

/// Trunk checks plus C1 (rule "C1", witness {a, b, number of squares}) and
/// C2 (rule "C2", witness: the indices of the three given squares).
ValidationReport validate_corner(const Trunk& t);

/// One vertex, edge r per element, square (a, b, a◁b, b). With a basepoint e
/// the identity is edge e.
Trunk rack_trunk(const Rack& rack);
/// Vertices X, edge (x,r): x → x·r with index x·|R| + r, squares
/// ((x,r), (x,r'), (x·r', r◁r'), (x·r, r')). Identities (x, e) when R is
/// pointed and e acts trivially.
Trunk action_rack_trunk(const RackAction& a);
Trunk extended_rack_trunk(const Rack& rack);

constexpr Elem kNoEdge = std::numeric_limits<Elem>::max();

/// a◁b is the top and a▷b the right side of the C1 square with bottom a and
/// left b; kNoEdge where s(a) ≠ s(b).
struct CornerOps {
  Grid left;   // ◁
  Grid right;  // ▷
};

/// Throws ValidationError unless validate_corner passes, and
/// InconsistencyError if one of
///   (a◁b)◁(b▷c) = (a◁c)◁(b◁c)
///   (b▷c)▷(b▷a) = (b◁c)▷(c▷a)
///   (b▷a)◁(b▷c) = (b◁c)▷(a◁c)
/// fails on a triple of edges with a common source.
CornerOps corner_ops(const Trunk& t);

struct TrunkMap {
  std::vector<Elem> vertex_map;
  std::vector<Elem> edge_map;

  bool operator==(const TrunkMap&) const = default;
};

/// Rules "source", "target", "identity" and "square" (witness: square index).
/// Throws MalformedInput for maps of the wrong length or range.
ValidationReport validate_trunk_map(const Trunk& from, const Trunk& to, const TrunkMap& map);

/// T_X(R) → T_R(R) with the trunks it connects.
struct Trunkified {
  Trunk source;
  Trunk target;
  TrunkMap map;

  bool operator==(const Trunkified&) const = default;
};

/// Vertex map p, edge map (x,r) ↦ (p(x), r), with no check on p.
Trunkified induced_trunk_map(const RackAction& a, const std::vector<Elem>& p);

/// Throws ValidationError for an invalid crossed module.
Trunkified trunkified_from_crossmod(const CrossedModule& cm);

/// Reads R off the extended trunk (basepoint from its identities), the
/// action off the action trunk and p off the vertex map. Throws
/// PreconditionError unless both trunks and the edge map have exactly the
/// induced shape and the map is a valid trunk map.
CrossedModule crossmod_from_trunkified(const Trunkified& tm);

}  // namespace rackmod
