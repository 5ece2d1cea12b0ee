#include "rackmod/group_bridge.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "rackmod/errors.hpp"

namespace rackmod {

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const { return boost::hash_range(p.begin(), p.end()); }
};
struct WordHash {
  std::size_t operator()(const Word& w) const { return boost::hash_range(w.begin(), w.end()); }
};

std::size_t letter_index(std::int32_t letter) { return static_cast<std::size_t>(std::abs(letter)) - 1; }

std::int32_t letter(std::size_t i, bool inverse = false) {
  const auto v = static_cast<std::int32_t>(i + 1);
  return inverse ? -v : v;
}

}  // namespace

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

void check_word(const Word& w, std::size_t generator_count) {
  for (auto l : w)
    if (l == 0 || letter_index(l) >= generator_count)
      throw MalformedInput("word letter " + std::to_string(l) + " does not name one of " +
                           std::to_string(generator_count) + " generators");
}

GroupPresentation normalized(const GroupPresentation& p) {
  GroupPresentation out{p.generator_count, {}};
  for (const auto& r : p.relators) {
    check_word(r, p.generator_count);
    auto reduced = free_reduce(r);
    if (!reduced.empty()) out.relators.push_back(std::move(reduced));
  }
  return out;
}

GroupPresentation as_presentation(const Rack& rack) {
  GroupPresentation p{rack.size(), {}};
  for (Elem x = 0; x < rack.size(); ++x)
    for (Elem y = 0; y < rack.size(); ++y) {
      auto r = free_reduce({letter(y, true), letter(x, true), letter(y), letter(rack.op(x, y))});
      if (!r.empty()) p.relators.push_back(std::move(r));
    }
  return p;
}

SparseMatrix relation_matrix(const GroupPresentation& p) {
  SparseMatrix m(p.relators.size(), p.generator_count);
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    check_word(p.relators[i], p.generator_count);
    for (auto l : p.relators[i]) m.add(i, letter_index(l), l > 0 ? 1 : -1);
  }
  return m;
}

AbelianInvariants abelianization(const GroupPresentation& p) {
  auto snf = smith_normal_form(relation_matrix(p));
  AbelianInvariants out;
  for (const auto& f : snf.factors)
    if (f > 1) out.torsion.push_back(f);
  out.rank = p.generator_count - snf.rank;
  return out;
}

PermutationGroup permutation_closure(std::size_t degree, std::vector<Perm> generators, std::size_t cap) {
  for (const auto& g : generators)
    if (g.size() != degree || !perm::is_permutation(g)) throw MalformedInput("generator is not a permutation");
  PermutationGroup group{degree, std::move(generators), {perm::identity(degree)}};
  std::unordered_set<Perm, PermHash> seen{group.elements.front()};
  for (std::size_t head = 0; head < group.elements.size(); ++head) {
    for (const auto& g : group.generators) {
      Perm next = perm::compose(group.elements[head], g);
      if (seen.insert(next).second) {
        group.elements.push_back(std::move(next));
        if (group.elements.size() > cap)
          throw ResourceError("permutation closure exceeds cap " + std::to_string(cap), group.elements.size());
      }
    }
  }
  return group;
}

OperatorImage operator_image(const Rack& rack, const std::vector<RackAction>& sets, std::size_t cap) {
  std::vector<std::size_t> offsets;
  std::size_t degree = rack.size();
  for (const auto& a : sets) {
    if (!(a.rack == rack) && a.rack.table() != rack.table())
      throw IncompatibleError("action is over a different rack");
    auto report = validate_action(a);
    if (!report.valid()) throw ValidationError("not a rack action", std::move(report));
    offsets.push_back(degree);
    degree += a.set_size;
  }
  OperatorImage image;
  image.offsets = offsets;
  for (Elem r = 0; r < rack.size(); ++r) {
    Perm g(degree);
    for (Elem a = 0; a < rack.size(); ++a) g[a] = rack.op(a, r);
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (Elem x = 0; x < sets[i].set_size; ++x)
        g[offsets[i] + x] = static_cast<Elem>(offsets[i] + sets[i].act(x, r));
    image.rack_generators.push_back(std::move(g));
  }
  std::vector<Perm> distinct;
  for (const auto& g : image.rack_generators)
    if (!perm::is_identity(g) && std::find(distinct.begin(), distinct.end(), g) == distinct.end())
      distinct.push_back(g);
  image.group = permutation_closure(degree, std::move(distinct), cap);
  return image;
}

Elem evaluate_word(const Word& w, std::span<const Elem> images, const FiniteGroup& g) {
  Elem acc = g.identity();
  for (auto l : w) {
    const Elem v = images[letter_index(l)];
    acc = g.mul(acc, l > 0 ? v : g.inv(v));
  }
  return acc;
}

Perm evaluate_word(const Word& w, const std::vector<Perm>& images, std::size_t degree) {
  Perm acc = perm::identity(degree);
  for (auto l : w) {
    const auto& v = images[letter_index(l)];
    acc = perm::compose(acc, l > 0 ? v : perm::inverse(v));
  }
  return acc;
}

GroupHomExtension extend_to_group_hom(const Rack& rack, const FiniteGroup& group, std::span<const Elem> f) {
  auto morphism = validate_morphism(rack.with_basepoint({}), conj_rack(group).with_basepoint({}), f);
  if (!morphism.valid())
    throw PreconditionError("map is not a rack morphism into Conj(G): " + morphism.summary());
  GroupHomExtension out{{f.begin(), f.end()}, {}};
  const auto p = as_presentation(rack);
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    if (evaluate_word(p.relators[i], out.generator_images, group) != group.identity())
      out.relators.add("relator", {static_cast<std::int64_t>(i)});
  return out;
}

const char* verdict_name(WordVerdict v) {
  switch (v) {
    case WordVerdict::equal: return "equal";
    case WordVerdict::distinct: return "distinct";
    case WordVerdict::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// Free and cyclic reduction followed by the least rotation: the class of a
// word under conjugation, which preserves being trivial.
Word cyclic_normal_form(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) ++lo, --hi;
  Word core(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
  if (core.empty()) return core;
  Word best = core;
  for (std::size_t s = 1; s < core.size(); ++s) {
    Word rot(core.begin() + static_cast<std::ptrdiff_t>(s), core.end());
    rot.insert(rot.end(), core.begin(), core.begin() + static_cast<std::ptrdiff_t>(s));
    if (rot < best) best = std::move(rot);
  }
  return best;
}

std::vector<std::int64_t> exponent_vector(const Word& w, std::size_t k) {
  std::vector<std::int64_t> v(k, 0);
  for (auto l : w) v[letter_index(l)] += l > 0 ? 1 : -1;
  return v;
}

BigInt factor_product(const SmithResult& s) {
  BigInt out = 1;
  for (const auto& f : s.factors) out *= f;
  return out;
}

// Is the exponent vector of w outside the relator lattice?
bool abelian_separates(const GroupPresentation& p, const Word& w) {
  SparseMatrix m = relation_matrix(p);
  SparseMatrix extended(m.rows() + 1, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) extended.add(r, c, v);
  const auto v = exponent_vector(w, p.generator_count);
  for (std::size_t c = 0; c < v.size(); ++c) extended.add(m.rows(), c, v[c]);
  const auto a = smith_normal_form(m), b = smith_normal_form(extended);
  return a.rank != b.rank || factor_product(a) != factor_product(b);
}

bool kills_relators(const GroupPresentation& p, const std::vector<Perm>& images) {
  if (images.size() != p.generator_count || images.empty()) return false;
  const std::size_t degree = images.front().size();
  for (const auto& g : images)
    if (g.size() != degree || !perm::is_permutation(g)) return false;
  for (const auto& r : p.relators)
    if (!perm::is_identity(evaluate_word(r, images, degree))) return false;
  return true;
}

// Backtracking over generator images in Sym(degree); relators are checked as
// soon as all their generators are assigned.
bool small_quotient_separates(const GroupPresentation& p, const Word& w, std::size_t degree,
                              std::size_t& nodes_left) {
  std::vector<Perm> elems;
  Perm q = perm::identity(degree);
  do elems.push_back(q);
  while (std::next_permutation(q.begin(), q.end()));

  const std::size_t k = p.generator_count;
  std::vector<std::vector<const Word*>> ready(k);
  for (const auto& r : p.relators) {
    std::size_t top = 0;
    for (auto l : r) top = std::max(top, letter_index(l));
    ready[top].push_back(&r);
  }
  std::vector<Perm> images(k, perm::identity(degree));
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) return !perm::is_identity(evaluate_word(w, images, degree));
    for (const auto& e : elems) {
      if (nodes_left == 0) return false;
      --nodes_left;
      images[i] = e;
      bool ok = true;
      for (const Word* r : ready[i])
        if (!perm::is_identity(evaluate_word(*r, images, degree))) {
          ok = false;
          break;
        }
      if (ok && self(self, i + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

WordEqualityResult word_equality(const GroupPresentation& presentation, const Word& w1, const Word& w2,
                                 const WordEqualityOptions& options) {
  check_word(w1, presentation.generator_count);
  check_word(w2, presentation.generator_count);
  const auto p = normalized(presentation);
  const Word target = free_reduce(concat(w1, inverse_word(w2)));
  if (target.empty()) return {WordVerdict::equal, "identical", 0};

  if (abelian_separates(p, target)) return {WordVerdict::distinct, "abelianization", 0};
  for (const auto& images : options.quotients)
    if (kills_relators(p, images) && !perm::is_identity(evaluate_word(target, images, images.front().size())))
      return {WordVerdict::distinct, "quotient", 0};
  if (options.search_small_quotients) {
    std::size_t nodes = options.quotient_search_nodes;
    for (std::size_t degree = 2; degree <= 4 && nodes > 0; ++degree)
      if (small_quotient_separates(p, target, degree, nodes)) return {WordVerdict::distinct, "quotient", 0};
  }

  // Breadth-first insertion of conjugates of relators, i.e. every cyclic
  // rotation of r and r⁻¹, with free and cyclic reduction after each move.
  std::set<Word> pieces;
  for (const auto& r : p.relators)
    for (const auto& base : {r, inverse_word(r)})
      for (std::size_t s = 0; s < base.size(); ++s) {
        Word rot(base.begin() + static_cast<std::ptrdiff_t>(s), base.end());
        rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(s));
        pieces.insert(rot);
      }
  const Word start = cyclic_normal_form(target);
  std::unordered_set<Word, WordHash> visited{start};
  std::deque<Word> queue{start};
  while (!queue.empty()) {
    const Word w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t pos = 0; pos < std::max<std::size_t>(w.size(), 1); ++pos)
      for (const auto& piece : pieces) {
        Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        next.insert(next.end(), piece.begin(), piece.end());
        next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
        next = cyclic_normal_form(next);
        if (next.empty()) return {WordVerdict::equal, "rewriting", visited.size()};
        if (next.size() > options.max_length || visited.size() >= options.budget) continue;
        if (visited.insert(next).second) queue.push_back(std::move(next));
      }
  }
  return {WordVerdict::unknown, "", visited.size()};
}

GroupLevelCrossedModule as_crossed_module(const CrossedModule& cm, std::size_t cap) {
  auto valid = validate_crossed_module(cm);
  if (!valid.valid()) throw ValidationError("not a crossed module", std::move(valid));
  const Rack& r = cm.target();
  const Rack x = induced_rack(cm);
  const std::size_t m = cm.set_size();

  GroupLevelCrossedModule out;
  out.source = as_presentation(x);
  out.target = as_presentation(r);
  out.boundary.assign(cm.p.begin(), cm.p.end());
  out.action = cm.action.action;
  auto& checks = out.checks;

  // Syntactic: equivariance is the As(R) relator for (p(x), s) and Peiffer is
  // the As(X) relator for (x, y).
  for (Elem a = 0; a < m; ++a)
    for (Elem s = 0; s < r.size(); ++s)
      if (cm.p[cm.action.act(a, s)] != r.op(cm.p[a], s)) checks.add("equivariance-generator", {a, s});
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      for (Elem s = 0; s < r.size(); ++s)
        if (cm.action.act(x.op(a, b), s) != x.op(cm.action.act(a, s), cm.action.act(b, s)))
          checks.add("automorphism-generator", {a, b, s});

  const auto image = operator_image(r, {cm.action}, cap);
  out.quotient_order = image.group.order();
  const std::size_t degree = image.group.degree, off = image.offsets.front();
  const auto& g = image.rack_generators;
  std::vector<Perm> boundary_images;
  for (Elem a = 0; a < m; ++a) boundary_images.push_back(g[cm.p[a]]);
  for (std::size_t i = 0; i < out.source.relators.size(); ++i)
    if (!perm::is_identity(evaluate_word(out.source.relators[i], boundary_images, degree)))
      checks.add("source-relator-in-quotient", {static_cast<std::int64_t>(i)});
  for (std::size_t i = 0; i < out.target.relators.size(); ++i)
    if (!perm::is_identity(evaluate_word(out.target.relators[i], g, degree)))
      checks.add("target-relator-in-quotient", {static_cast<std::int64_t>(i)});
  for (Elem a = 0; a < m; ++a)
    for (Elem s = 0; s < r.size(); ++s) {
      const auto rhs = perm::compose(perm::compose(perm::inverse(g[s]), g[cm.p[a]]), g[s]);
      if (g[cm.p[cm.action.act(a, s)]] != rhs) checks.add("equivariance-in-quotient", {a, s});
    }
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      if (g[cm.p[b]][off + a] != off + x.op(a, b)) checks.add("peiffer-in-quotient", {a, b});
  if (!checks.valid()) throw InconsistencyError("group-level crossed module check failed: " + checks.summary());
  return out;
}

QuotientAugmentedRack augmented_from_crossmod(const CrossedModule& cm, std::size_t cap) {
  auto valid = validate_crossed_module(cm);
  if (!valid.valid()) throw ValidationError("not a crossed module", std::move(valid));
  const auto image = operator_image(cm.target(), {cm.action}, cap);
  const auto& elems = image.group.elements;
  const std::size_t n = elems.size(), m = cm.set_size(), off = image.offsets.front();
  std::unordered_map<Perm, Elem, PermHash> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(elems[i], static_cast<Elem>(i));
  Grid cayley(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) cayley(a, b) = index.at(perm::compose(elems[a], elems[b]));
  Grid action(m, n);
  for (Elem x = 0; x < m; ++x)
    for (std::size_t h = 0; h < n; ++h) action(x, h) = static_cast<Elem>(elems[h][off + x] - off);
  std::vector<Elem> p(m);
  for (Elem x = 0; x < m; ++x) p[x] = index.at(image.rack_generators[cm.p[x]]);

  QuotientAugmentedRack out{{FiniteGroup(std::move(cayley)), m, std::move(action), std::move(p)}, elems, {}};
  out.checks = validate_augmented(out.augmented);
  return out;
}

GroupCrossedModuleFromAugmented group_crossmod_from_augmented(const AugmentedRack& ar, std::size_t word_length) {
  const Rack x = induced_rack(ar);
  const auto& g = ar.group;
  const std::size_t m = ar.set_size;
  GroupCrossedModuleFromAugmented out{as_presentation(x), ar.p, {}};
  auto& checks = out.checks;
  for (std::size_t i = 0; i < out.source.relators.size(); ++i)
    if (evaluate_word(out.source.relators[i], out.boundary, g) != g.identity())
      checks.add("relator", {static_cast<std::int64_t>(i)});

  // Equivariance ∂(w^h) = h⁻¹∂(w)h on all words up to word_length, where h
  // acts letterwise through the action on generators.
  std::vector<Word> words{{}};
  for (std::size_t len = 1; len <= word_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : words)
      if (w.size() == len - 1)
        for (std::size_t i = 0; i < m; ++i)
          for (bool inv : {false, true}) {
            Word e = w;
            e.push_back(letter(i, inv));
            next.push_back(std::move(e));
          }
    words.insert(words.end(), next.begin(), next.end());
  }
  for (std::size_t wi = 0; wi < words.size(); ++wi)
    for (Elem h = 0; h < g.size(); ++h) {
      Word moved = words[wi];
      for (auto& l : moved) l = letter(ar.group_action(letter_index(l), h), l < 0);
      if (evaluate_word(moved, out.boundary, g) != g.conj(evaluate_word(words[wi], out.boundary, g), h))
        checks.add("equivariance", {static_cast<std::int64_t>(wi), h});
    }
  // Peiffer on generators: x^{∂(y)} is the generator x·p(y) = x◁y, and
  // y⁻¹xy(x◁y)⁻¹ is a relator killed above; check the generator identity.
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      if (ar.group_action(a, ar.p[b]) != x.op(a, b)) checks.add("peiffer", {a, b});
  return out;
}

}  // namespace rackmod
