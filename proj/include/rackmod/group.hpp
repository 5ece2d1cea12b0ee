#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rackmod/grid.hpp"
#include "rackmod/report.hpp"

namespace rackmod {

/// Checks closure, associativity, a two-sided identity and inverses.
ValidationReport validate_group(const Grid& cayley);

/// A finite group given by its Cayley table, cayley(a, b) = a*b.
/// Always valid after construction.
class FiniteGroup {
 public:
  /// Throws MalformedInput for non-square or out-of-range tables and
  /// ValidationError when the group axioms fail.
  explicit FiniteGroup(Grid cayley);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);
  /// Sym(k) on permutations in lexicographic order (identity is element 0),
  /// multiplied in the right-action convention.
  static FiniteGroup symmetric(std::size_t k);
  static FiniteGroup dihedral(std::size_t n);  // order 2n
  static FiniteGroup quaternion();             // Q8
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  /// Group generated by permutations of a common degree, elements in BFS order
  /// from the identity. Throws ResourceError if the closure exceeds `cap`.
  static FiniteGroup from_permutations(const std::vector<Perm>& generators,
                                       std::size_t cap = 100000);

  std::size_t size() const noexcept { return cayley_.rows(); }
  Elem mul(Elem a, Elem b) const { return cayley_(a, b); }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem identity() const noexcept { return identity_; }
  /// b^-1 a b
  Elem conj(Elem a, Elem b) const { return mul(mul(inverse_[b], a), b); }

  const Grid& cayley() const noexcept { return cayley_; }
  bool is_abelian() const;
  /// True iff `f` (indexed by this group's elements) is a homomorphism into `target`.
  bool is_homomorphism(std::span<const Elem> f, const FiniteGroup& target) const;

  bool operator==(const FiniteGroup& o) const { return cayley_ == o.cayley_; }

 private:
  Grid cayley_;
  std::vector<Elem> inverse_;
  Elem identity_ = 0;
};

/// Standard small groups of order <= 8 used as a test and CLI corpus,
/// paired with a short name.
struct NamedGroup {
  const char* name;
  FiniteGroup group;
};
std::vector<NamedGroup> small_group_corpus();

}  // namespace rackmod
