#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "rackmod/crossmod.hpp"
#include "rackmod/group.hpp"
#include "rackmod/rack.hpp"
#include "rackmod/report.hpp"
#include "rackmod/smith.hpp"

namespace rackmod {

/// A word in the free group: letter +(i+1) is generator i, -(i+1) its inverse.
using Word = std::vector<std::int32_t>;

Word free_reduce(const Word& w);
Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);
/// Word for generator i.
inline Word gen(std::size_t i) { return {static_cast<std::int32_t>(i + 1)}; }

struct GroupPresentation {
  std::size_t generator_count = 0;
  std::vector<Word> relators;

  bool operator==(const GroupPresentation&) const = default;
};

/// Throws MalformedInput if a letter is 0 or names a missing generator.
void check_word(const Word& w, std::size_t generator_count);
/// Freely reduces every relator and drops those that become empty.
GroupPresentation normalized(const GroupPresentation& p);

/// One generator per element and the relator y⁻¹x⁻¹y(x◁y) for every ordered
/// pair, freely reduced; relators that reduce to the empty word are dropped.
GroupPresentation as_presentation(const Rack& rack);

struct AbelianInvariants {
  std::vector<BigInt> torsion;  // invariant factors > 1
  std::size_t rank = 0;
};

/// Exponent-sum matrix of the relators, one row per relator.
SparseMatrix relation_matrix(const GroupPresentation& p);
AbelianInvariants abelianization(const GroupPresentation& p);

/// A permutation group with its elements enumerated breadth-first from the
/// identity over the generators.
struct PermutationGroup {
  std::size_t degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> elements;

  std::size_t order() const noexcept { return elements.size(); }
};

/// Throws ResourceError (with the partial size) once the closure exceeds cap.
PermutationGroup permutation_closure(std::size_t degree, std::vector<Perm> generators,
                                     std::size_t cap = 1000000);

/// The group generated by g_r, r ∈ R, acting as (−◁r) on R and (−·r) on each
/// acted set, all placed side by side: R occupies points 0..|R|-1, set i
/// starts at offsets[i].
struct OperatorImage {
  PermutationGroup group;
  std::vector<Perm> rack_generators;  // g_r for every r, duplicates kept
  std::vector<std::size_t> offsets;
};

OperatorImage operator_image(const Rack& rack, const std::vector<RackAction>& sets = {},
                             std::size_t cap = 1000000);

/// Value of a word under the generator images in G.
Elem evaluate_word(const Word& w, std::span<const Elem> images, const FiniteGroup& g);
/// Value of a word under permutation images (right-action product).
Perm evaluate_word(const Word& w, const std::vector<Perm>& images, std::size_t degree);

struct GroupHomExtension {
  std::vector<Elem> generator_images;
  ValidationReport relators;  // rule "relator" with the relator index
};

/// Throws PreconditionError if f is not a rack morphism R → Conj(G).
GroupHomExtension extend_to_group_hom(const Rack& rack, const FiniteGroup& group, std::span<const Elem> f);

enum class WordVerdict { equal, distinct, unknown };
const char* verdict_name(WordVerdict v);

struct WordEqualityOptions {
  std::size_t budget = 100000;     // visited words in the rewriting search
  std::size_t max_length = 16;     // longest word the search keeps
  /// Candidate quotients: generator images in some symmetric group. Images
  /// that do not kill every relator are ignored.
  std::vector<std::vector<Perm>> quotients;
  /// Also search homomorphisms into S2, S3, S4 (bounded backtracking).
  bool search_small_quotients = true;
  std::size_t quotient_search_nodes = 200000;
};

struct WordEqualityResult {
  WordVerdict verdict = WordVerdict::unknown;
  std::string method;  // "identical", "rewriting", "abelianization", "quotient", ""
  std::size_t visited = 0;
};

/// Equal and Distinct are both proofs; Unknown means neither search succeeded
/// within the budget.
WordEqualityResult word_equality(const GroupPresentation& p, const Word& w1, const Word& w2,
                                 const WordEqualityOptions& options = {});

/// As applied to a crossed module p: X → R: presentations of As(X◁) and
/// As(R), the generator-level boundary and action, and the checks that were
/// run syntactically and in the combined operator quotient.
struct GroupLevelCrossedModule {
  GroupPresentation source;
  GroupPresentation target;
  std::vector<std::size_t> boundary;  // generator x ↦ generator p(x)
  Grid action;                        // generator x acted on by generator r
  std::size_t quotient_order = 0;
  ValidationReport checks;
};

/// Throws InconsistencyError if any check fails.
GroupLevelCrossedModule as_crossed_module(const CrossedModule& cm, std::size_t cap = 1000000);

/// The As(R)-action on X realised through the operator quotient Q on R ⊔ X,
/// with p(x) = g_{p(x)} ∈ Q. Throws ResourceError if |Q| exceeds cap.
struct QuotientAugmentedRack {
  AugmentedRack augmented;
  std::vector<Perm> elements;  // permutation for each group element index
  ValidationReport checks;
};
QuotientAugmentedRack augmented_from_crossmod(const CrossedModule& cm, std::size_t cap = 5000);

/// As(X◁) → G for an augmented rack p: X → G, with the relators, the
/// equivariance on words up to `word_length` and Peiffer verified in G.
struct GroupCrossedModuleFromAugmented {
  GroupPresentation source;
  std::vector<Elem> boundary;
  ValidationReport checks;
};
GroupCrossedModuleFromAugmented group_crossmod_from_augmented(const AugmentedRack& ar, std::size_t word_length = 2);

}  // namespace rackmod
