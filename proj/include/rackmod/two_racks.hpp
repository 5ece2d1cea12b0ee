#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "rackmod/crossmod.hpp"
#include "rackmod/group.hpp"
#include "rackmod/rack.hpp"
#include "rackmod/report.hpp"

namespace rackmod {

/// Composition entries (f, g, g∘f), defined for t(f) = s(g).
using CompTriple = std::array<Elem, 3>;

struct Strict2Rack {
  Rack r0;  // objects
  Rack r1;  // morphisms
  std::vector<Elem> s, t;  // R1 → R0
  std::vector<Elem> i;     // R0 → R1
  std::vector<CompTriple> comp;

  bool operator==(const Strict2Rack&) const = default;
};

/// All category-object axioms. Rules: "pointed", "s"/"t"/"i" (morphism
/// failures, prefixed), "s-section", "t-section", "comp-domain",
/// "comp-unique", "comp-total", "comp-source", "comp-target",
/// "identity-left", "identity-right", "associative",
/// "middle-four-exchange".
ValidationReport validate_2rack(const Strict2Rack& x);
/// Same checks without the middle four exchange.
ValidationReport validate_category_axioms(const Strict2Rack& x);

/// ker(s) and ker(t) are the fibres over the basepoint of R0. Rules
/// "ker(s) on ker(t)" with witness (b, a): b◁a ≠ b for b ∈ ker(t), a ∈ ker(s),
/// and "ker(t) on ker(s)" symmetrically.
ValidationReport kernels_act_trivially(const Strict2Rack& x);

struct OneCatRack {
  Rack r;
  std::vector<Elem> n;     // sorted subrack elements
  std::vector<Elem> s, t;  // R → R with values in N

  bool operator==(const OneCatRack&) const = default;
};

ValidationReport validate_1cat_rack(const OneCatRack& x);

/// R := R1, N := i(R0), s and t followed by i. Throws PreconditionError if
/// either rack is unpointed and ValidationError if the input is invalid.
OneCatRack to_1cat_rack(const Strict2Rack& x);

/// X := ker(s), listed in increasing order, x·r := x◁i(r), p := t on X.
struct StandardConstruction {
  std::vector<Elem> kernel;  // R1 element of each point of X
  CrossedModule crossed_module;
};
StandardConstruction standard_construction(const Strict2Rack& x);

/// Compares x·p(y) (the induced product) with x◁y in R1 on ker(s). Asserts
/// nothing; the disagreeing pairs are listed as kernel positions.
struct PeifferScan {
  std::size_t pairs = 0;
  std::vector<std::array<Elem, 2>> disagreements;
  bool agree() const noexcept { return disagreements.empty(); }
};
PeifferScan peiffer_discrepancy_scan(const Strict2Rack& x);

/// R1 = R0, s = t = i = id, f∘f = f. Throws PreconditionError for an
/// unpointed rack.
Strict2Rack discrete_2rack(const Rack& r0);

struct Strict2Group {
  FiniteGroup g0;
  FiniteGroup g1;
  std::vector<Elem> s, t, i;
  std::vector<CompTriple> comp;

  bool operator==(const Strict2Group&) const = default;
};

/// s, t, i homomorphisms, sections, category laws, and composition a group
/// homomorphism on composable pairs (rule "middle-four-exchange").
ValidationReport validate_2group(const Strict2Group& g);
/// Everything in validate_2group except the middle four exchange.
ValidationReport validate_group_category(const Strict2Group& g);

/// Objects N, morphisms M⋊N with (m,n)(m',n') = (m·m'^(n⁻¹), nn') and
/// (m,n) ↦ index m·|N| + n, s(m,n) = n, t(m,n) = μ(m)n, i(n) = (1,n),
/// (m',n')∘(m,n) = (m'm, n). Peiffer is not required: without it the result
/// satisfies validate_group_category but not the middle four exchange.
/// Throws PreconditionError on a non-equivariant μ or a non-automorphic action.
Strict2Group two_group_from_group_crossmod(const GroupCrossedModule& gc);

/// M := ker(s) in increasing index order, N := G0, μ := t, m^n := i(n)⁻¹ m i(n).
/// Only the category-level axioms are required.
GroupCrossedModule group_crossmod_from_2group(const Strict2Group& g);

/// Conj on both levels (pointed at the identities).
Strict2Rack conj_2rack(const Strict2Group& g);

/// `x_group` is a group structure on the augmented set. Requires it abelian,
/// the action by group automorphisms and p a homomorphism; then applies the
/// semi-direct construction.
Strict2Group two_group_from_abelian_augmented(const AugmentedRack& ar, const FiniteGroup& x_group);

/// Exhaustive search over pointed R0 (order ≤ max_r0), pointed R1
/// (order ≤ max_r1), structure maps and compositions satisfying the category
/// axioms. Candidates failing only the middle four exchange are kept apart.
struct TwoRackSearch {
  std::vector<Strict2Rack> valid;
  std::vector<Strict2Rack> mfe_violating;
  std::size_t candidates = 0;  // category-valid objects seen
  bool truncated = false;
};
TwoRackSearch enumerate_small_2racks(std::size_t max_r1 = 4, std::size_t max_r0 = 2,
                                     std::size_t node_cap = 2000000);

/// Seeded random rewiring of composition entries of `base` (keeping
/// sources, targets and identities); returns the category-valid mutants that
/// break the middle four exchange.
std::vector<Strict2Rack> mfe_mutation_scan(const Strict2Rack& base, std::uint64_t seed, std::size_t trials);

}  // namespace rackmod
