#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rackmod/grid.hpp"
#include "rackmod/group.hpp"
#include "rackmod/report.hpp"

namespace rackmod {

/// Checks the right-rack axioms on table(a, b) = a◁b: every column map
/// a ↦ a◁b is a bijection, and (a◁b)◁c = (a◁c)◁(b◁c). With a basepoint e it
/// also checks e◁x = e and x◁e = x.
///
/// Throws MalformedInput if the table is not square or has an out-of-range
/// entry (or basepoint).
ValidationReport validate_rack(const Grid& table, std::optional<Elem> basepoint = std::nullopt);

/// A finite right rack, optionally pointed. Always valid after construction.
class Rack {
 public:
  /// Throws MalformedInput / ValidationError (see validate_rack).
  explicit Rack(Grid table, std::optional<Elem> basepoint = std::nullopt);

  std::size_t size() const noexcept { return table_.rows(); }
  /// a◁b
  Elem op(Elem a, Elem b) const { return table_(a, b); }
  /// The unique x with x◁b = a.
  Elem inv_op(Elem a, Elem b) const { return inverse_(a, b); }

  const Grid& table() const noexcept { return table_; }
  std::optional<Elem> basepoint() const noexcept { return basepoint_; }
  bool pointed() const noexcept { return basepoint_.has_value(); }
  bool is_quandle() const;
  bool is_trivial() const;

  /// Same table with a different (validated) basepoint, or none.
  Rack with_basepoint(std::optional<Elem> basepoint) const;

  bool operator==(const Rack& o) const {
    return table_ == o.table_ && basepoint_ == o.basepoint_;
  }

 private:
  Grid table_;
  Grid inverse_;
  std::optional<Elem> basepoint_;
};

/// Named constructors for the racks that recur throughout the library.
namespace racks {
Rack trivial(std::size_t n);
/// a◁b = 2b − a mod n (Takasaki quandle).
Rack dihedral(std::size_t n);
/// The two-element rack a◁b = 1 − a: the right-rack form of the left rack
/// x▷x = y, x▷y = x, y▷y = x, y▷x = y.
Rack two_element_flip();
/// a◁b = a + 1 mod n.
Rack cyclic_shift(std::size_t n);
}  // namespace racks

/// Converts a left rack (table(a, b) = a▷b, each row b ↦ a▷b bijective,
/// a▷(b▷c) = (a▷b)▷(a▷c)) into the right rack with z◁x = (x▷·)⁻¹(z).
/// Throws ValidationError if the input is not a left rack.
Rack left_to_right(const Grid& left_table);
/// Inverse of left_to_right.
Grid right_to_left(const Rack& rack);

ValidationReport validate_left_rack(const Grid& left_table);

/// Conj(G): g◁h = h⁻¹gh, pointed at the identity.
Rack conj_rack(const FiniteGroup& group);

/// Finest partition closed under a ~ a◁b and a ~ a◁⁻¹b. Blocks are sorted and
/// listed in order of their smallest element.
std::vector<std::vector<Elem>> orbits(const Rack& rack);

/// The bijection a ↦ a◁b.
Perm inner_permutation(const Rack& rack, Elem b);

/// Checks map[a◁b] = map[a]◁map[b] (and, when both racks are pointed,
/// that basepoints correspond).
ValidationReport validate_morphism(const Rack& source, const Rack& target, std::span<const Elem> map);

}  // namespace rackmod
