#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rackmod/grid.hpp"
#include "rackmod/group.hpp"
#include "rackmod/rack.hpp"
#include "rackmod/report.hpp"

namespace rackmod {

/// A right action of a rack on {0..set_size-1}: action(x, r) = x·r.
struct RackAction {
  Rack rack;
  std::size_t set_size = 0;
  Grid action;

  Elem act(Elem x, Elem r) const { return action(x, r); }
  bool operator==(const RackAction&) const = default;
};

/// Bijectivity of each x ↦ x·r and (x·r)·r' = (x·r')·(r◁r').
/// Throws MalformedInput on shape or range errors.
ValidationReport validate_action(const RackAction& a);

RackAction self_action(const Rack& rack);
RackAction trivial_action(const Rack& rack, std::size_t set_size);

/// (x◁y)·s = (x·s)◁(y·s) for the rack `source` on the acted set.
bool acts_by_automorphisms(const RackAction& a, const Grid& source);

/// Rack on X×R, (x,r)◁(x',r') = (x·r', r◁r'); the pair (x,r) has index
/// x*|R| + r. Throws ValidationError for an invalid action.
Rack hemi_semi_direct(const RackAction& a);

/// A right G-set X with p: X → G such that p(x·g) = g⁻¹p(x)g.
struct AugmentedRack {
  FiniteGroup group;
  std::size_t set_size = 0;
  Grid group_action;  // set_size × |G|
  std::vector<Elem> p;

  bool operator==(const AugmentedRack&) const = default;
};

ValidationReport validate_augmented(const AugmentedRack& ar);

/// X = G acted on by right conjugation, p = id.
AugmentedRack conjugation_augmented(const FiniteGroup& group);

/// x◁y = x·p(y). Throws ValidationError if the input is invalid.
Rack induced_rack(const AugmentedRack& ar);

/// A crossed module of racks, stored without its source rack: the table
/// x◁y = x·p(y) is derived on demand.
struct CrossedModule {
  RackAction action;
  std::vector<Elem> p;

  const Rack& target() const noexcept { return action.rack; }
  std::size_t set_size() const noexcept { return action.set_size; }
  bool operator==(const CrossedModule&) const = default;
};

/// The derived table x·p(y), without validation.
Grid derived_source_table(const CrossedModule& cm);
/// Throws ValidationError if the crossed module is invalid.
Rack induced_rack(const CrossedModule& cm);

/// Checks the action, equivariance p(x·s) = p(x)◁s, that the derived table
/// is a rack acted on by automorphisms, and, when `claimed_source` is given,
/// that it coincides with the derived table.
ValidationReport validate_crossed_module(const CrossedModule& cm,
                                         const std::optional<Grid>& claimed_source = std::nullopt);

/// id: R → R with the self-action.
CrossedModule identity_crossed_module(const Rack& rack);

/// An augmented rack as a crossed module over Conj(G).
CrossedModule crossmod_from_augmented(const AugmentedRack& ar);

/// Rack R, R-set X and p with p(x·r) = p(x)◁r.
struct GeneralizedAugmentedRack {
  RackAction action;
  std::vector<Elem> p;

  bool operator==(const GeneralizedAugmentedRack&) const = default;
};

ValidationReport validate_generalized(const GeneralizedAugmentedRack& gar);
GeneralizedAugmentedRack to_generalized(const CrossedModule& cm);
/// Throws ValidationError if the result would not be a crossed module.
CrossedModule from_generalized(const GeneralizedAugmentedRack& gar);

CrossedModule roundtrip_crossmod(const CrossedModule& cm);
GeneralizedAugmentedRack roundtrip_genaug(const GeneralizedAugmentedRack& gar);

/// Crossed module of groups μ: M → N with a right action action(m, n) = m^n.
struct GroupCrossedModule {
  FiniteGroup m;
  FiniteGroup n;
  std::vector<Elem> mu;
  Grid action;  // |M| × |N|

  bool operator==(const GroupCrossedModule&) const = default;
};

/// Homomorphism, action by automorphisms, equivariance μ(m^n) = n⁻¹μ(m)n and,
/// unless `require_peiffer` is false, Peiffer m^{μ(m')} = m'⁻¹mm'.
ValidationReport validate_group_crossmod(const GroupCrossedModule& gc, bool require_peiffer = true);

/// id: G → G with conjugation.
GroupCrossedModule identity_group_crossmod(const FiniteGroup& g);

/// X = M as a set acted on by Conj(N) through m^n, p = μ.
CrossedModule crossmod_from_group_crossmod(const GroupCrossedModule& gc);

/// Diagonal action, p(x,y) = p₁(x)p₂(y); (x,y) has index x*|Y| + y.
/// Throws IncompatibleError if the groups differ.
AugmentedRack tensor_augmented(const AugmentedRack& a1, const AugmentedRack& a2);

/// c(x,y) = (y, x·p₂(y)) as an index map X×Y → Y×X.
std::vector<Elem> braiding(const AugmentedRack& a1, const AugmentedRack& a2);
/// Inverse of braiding(a1, a2), computed by inverting the table.
std::vector<Elem> braiding_inverse(const AugmentedRack& a1, const AugmentedRack& a2);

/// Bijectivity, G-equivariance and p-preservation of c_{X,Y}.
ValidationReport validate_braiding(const AugmentedRack& a1, const AugmentedRack& a2);

/// (c_{Y,Z}⊗1)(1⊗c_{X,Z})(c_{X,Y}⊗1) = (1⊗c_{X,Y})(c_{X,Z}⊗1)(1⊗c_{Y,Z})
/// on every triple of X⊗Y⊗Z.
ValidationReport check_braid_relation(const AugmentedRack& x, const AugmentedRack& y, const AugmentedRack& z);

/// Data for assembling α: X₁ → X₀ into a crossed module of racks.
struct AugmentedPair {
  AugmentedRack a1;
  AugmentedRack a0;
  std::vector<Elem> alpha;  // X₁ → X₀
  std::vector<Elem> beta;   // G₁ → G₀
  Grid circ;                // X₁ × G₀ → X₁
};

struct AssemblyResult {
  ValidationReport conditions;  // rules "condition 1", "condition 2", "condition 3"
  std::optional<CrossedModule> crossed_module;
};

/// Throws PreconditionError when β is not a homomorphism, α is not a map of
/// group-sets over β, the square p₀α = βp₁ fails, or circ is not a right
/// G₀-action. Otherwise checks
///   1. x*g = x∘β(g),
///   2. α(x∘g) = α(x)·g,
///   3. (y*p₁(x))∘g = (y∘g)*p₁(x∘g),
/// and on success returns α: X₁ → induced_rack(a0) acted on by x∘p₀(y).
AssemblyResult assemble_from_pair(const AugmentedPair& data);

}  // namespace rackmod
