#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rackmod/crossmod.hpp"
#include "rackmod/rack.hpp"
#include "rackmod/smith.hpp"

namespace rackmod {

struct NerveLimits {
  std::size_t max_dim = 4;
  std::size_t max_cubes = 1000000;  // per degree
};

/// Cubes of degree 0..dim. In the rack nerve a k-cube is a tuple
/// (r₁,…,r_k) with index Σ r_i·|R|^(k-i); in the covering nerve it is
/// (x; r₁,…,r_k) with index x·|R|^k + tuple index.
struct CubicalComplex {
  std::size_t dim = 0;
  std::size_t rack_size = 0;
  std::size_t set_size = 0;  // 0 for a rack nerve
  std::vector<std::size_t> cube_counts;
  /// boundaries[k] is ∂_k : C_k → C_{k-1} with rows indexed by (k-1)-cubes;
  /// boundaries[0] is the empty 0 × |C_0| matrix.
  std::vector<SparseMatrix> boundaries;
};

/// ∂ = Σᵢ (−1)ⁱ (dᵢ⁰ − dᵢ¹), dᵢ⁰ deletes r_i, dᵢ¹ deletes r_i and replaces
/// r_j by r_j◁r_i for j < i (and x by x·r_i). Throws ResourceError when dim
/// or a cube count exceeds the limits.
CubicalComplex nerve(const Rack& rack, std::size_t dim, const NerveLimits& limits = {});
CubicalComplex covering_nerve(const RackAction& action, std::size_t dim, const NerveLimits& limits = {});

/// True iff ∂_k ∂_{k+1} = 0 for every k.
bool boundary_squares_to_zero(const CubicalComplex& c);

struct HomologyDegree {
  std::size_t k = 0;
  std::size_t betti = 0;
  std::vector<BigInt> torsion;
};

/// H_k for k = 0..dim-1 (H_dim would need ∂_{dim+1}).
std::vector<HomologyDegree> homology(const CubicalComplex& c);

struct CoveringCheck {
  bool covering = true;
  std::size_t group_order = 0;
  /// |Stab(x)| and |Stab(p(x))| inside the operator quotient, per x.
  std::vector<std::size_t> source_stabilizers;
  std::vector<std::size_t> target_stabilizers;
  /// First element fixing x but not p(x), as a permutation of R ⊔ X, and x.
  std::optional<Perm> witness;
  std::optional<Elem> witness_point;
};

/// Builds the operator image on R ⊔ X and checks Stab(x) ⊆ Stab(p(x)) for
/// every x. Only needs a valid action and a map p of the right shape, so
/// non-equivariant data can be probed too. Throws ResourceError past cap.
CoveringCheck covering_check(const CrossedModule& cm, std::size_t cap = 1000000);

}  // namespace rackmod
