#include "rackmod/crossmod.hpp"

#include <string>

#include "rackmod/errors.hpp"

namespace rackmod {

namespace {

std::string witness_text(std::initializer_list<std::int64_t> values) {
  std::string out = "(";
  for (auto v : values) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(v);
  }
  return out + ")";
}

void check_table(const Grid& table, std::size_t rows, std::size_t cols, std::size_t range, const char* what) {
  if (table.rows() != rows || table.cols() != cols)
    throw MalformedInput(std::string(what) + " has shape " + std::to_string(table.rows()) + "x" +
                         std::to_string(table.cols()) + ", expected " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  for (Elem v : table.cells())
    if (v >= range) throw MalformedInput(std::string(what) + " entry " + std::to_string(v) + " out of range");
}

void check_map(const std::vector<Elem>& map, std::size_t size, std::size_t range, const char* what) {
  if (map.size() != size)
    throw MalformedInput(std::string(what) + " has " + std::to_string(map.size()) + " entries, expected " +
                         std::to_string(size));
  for (Elem v : map)
    if (v >= range) throw MalformedInput(std::string(what) + " value " + std::to_string(v) + " out of range");
}

// Right group action laws: x·e = x and (x·g)·h = x·(gh).
void check_group_action(const FiniteGroup& g, const Grid& action, ValidationReport& report) {
  const std::size_t m = action.rows();
  for (Elem x = 0; x < m; ++x)
    if (action(x, g.identity()) != x) report.add("action-identity", {x});
  for (Elem x = 0; x < m; ++x)
    for (Elem a = 0; a < g.size(); ++a)
      for (Elem b = 0; b < g.size(); ++b)
        if (action(action(x, a), b) != action(x, g.mul(a, b))) report.add("action-compatible", {x, a, b});
}

}  // namespace

ValidationReport validate_action(const RackAction& a) {
  if (a.set_size == 0) throw MalformedInput("acted set is empty");
  const std::size_t n = a.rack.size();
  check_table(a.action, a.set_size, n, a.set_size, "action table");
  ValidationReport report;
  for (Elem r = 0; r < n; ++r) {
    std::vector<std::int64_t> preimage(a.set_size, -1);
    for (Elem x = 0; x < a.set_size; ++x) {
      auto& slot = preimage[a.act(x, r)];
      if (slot >= 0)
        report.add("bijective", {r, slot, x});
      else
        slot = x;
    }
  }
  for (Elem x = 0; x < a.set_size; ++x)
    for (Elem r = 0; r < n; ++r)
      for (Elem s = 0; s < n; ++s)
        if (a.act(a.act(x, r), s) != a.act(a.act(x, s), a.rack.op(r, s))) report.add("compatible", {x, r, s});
  return report;
}

RackAction self_action(const Rack& rack) { return {rack, rack.size(), rack.table()}; }

RackAction trivial_action(const Rack& rack, std::size_t set_size) {
  Grid action(set_size, rack.size());
  for (Elem x = 0; x < set_size; ++x)
    for (Elem r = 0; r < rack.size(); ++r) action(x, r) = x;
  return {rack, set_size, std::move(action)};
}

bool acts_by_automorphisms(const RackAction& a, const Grid& source) {
  check_table(source, a.set_size, a.set_size, a.set_size, "source table");
  for (Elem x = 0; x < a.set_size; ++x)
    for (Elem y = 0; y < a.set_size; ++y)
      for (Elem s = 0; s < a.rack.size(); ++s)
        if (a.act(source(x, y), s) != source(a.act(x, s), a.act(y, s))) return false;
  return true;
}

Rack hemi_semi_direct(const RackAction& a) {
  auto report = validate_action(a);
  if (!report.valid()) throw ValidationError("not a rack action", std::move(report));
  const std::size_t n = a.rack.size(), size = a.set_size * n;
  Grid table(size, size);
  for (Elem i = 0; i < size; ++i)
    for (Elem j = 0; j < size; ++j) {
      const Elem x = i / n, r = i % n, s = j % n;
      table(i, j) = a.act(x, s) * n + a.rack.op(r, s);
    }
  return Rack(std::move(table));
}

ValidationReport validate_augmented(const AugmentedRack& ar) {
  if (ar.set_size == 0) throw MalformedInput("augmented set is empty");
  const auto& g = ar.group;
  check_table(ar.group_action, ar.set_size, g.size(), ar.set_size, "group action table");
  check_map(ar.p, ar.set_size, g.size(), "augmentation");
  ValidationReport report;
  check_group_action(g, ar.group_action, report);
  for (Elem x = 0; x < ar.set_size; ++x)
    for (Elem h = 0; h < g.size(); ++h)
      if (ar.p[ar.group_action(x, h)] != g.conj(ar.p[x], h)) report.add("augmentation", {x, h});
  return report;
}

AugmentedRack conjugation_augmented(const FiniteGroup& group) {
  const std::size_t n = group.size();
  Grid action(n, n);
  std::vector<Elem> p(n);
  for (Elem x = 0; x < n; ++x) {
    p[x] = x;
    for (Elem h = 0; h < n; ++h) action(x, h) = group.conj(x, h);
  }
  return {group, n, std::move(action), std::move(p)};
}

Rack induced_rack(const AugmentedRack& ar) {
  auto report = validate_augmented(ar);
  if (!report.valid()) throw ValidationError("not an augmented rack", std::move(report));
  Grid table(ar.set_size, ar.set_size);
  for (Elem x = 0; x < ar.set_size; ++x)
    for (Elem y = 0; y < ar.set_size; ++y) table(x, y) = ar.group_action(x, ar.p[y]);
  return Rack(std::move(table));
}

Grid derived_source_table(const CrossedModule& cm) {
  const std::size_t m = cm.set_size();
  Grid table(m, m);
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y) table(x, y) = cm.action.act(x, cm.p[y]);
  return table;
}

Rack induced_rack(const CrossedModule& cm) {
  auto report = validate_crossed_module(cm);
  if (!report.valid()) throw ValidationError("not a crossed module", std::move(report));
  return Rack(derived_source_table(cm));
}

ValidationReport validate_crossed_module(const CrossedModule& cm, const std::optional<Grid>& claimed_source) {
  ValidationReport report;
  report.merge(validate_action(cm.action), "action");
  check_map(cm.p, cm.set_size(), cm.target().size(), "crossed module map");
  const auto& r = cm.target();
  for (Elem x = 0; x < cm.set_size(); ++x)
    for (Elem s = 0; s < r.size(); ++s)
      if (cm.p[cm.action.act(x, s)] != r.op(cm.p[x], s)) report.add("equivariant", {x, s});
  const Grid source = derived_source_table(cm);
  report.merge(validate_rack(source), "source");
  for (Elem x = 0; x < cm.set_size(); ++x)
    for (Elem y = 0; y < cm.set_size(); ++y)
      for (Elem s = 0; s < r.size(); ++s)
        if (cm.action.act(source(x, y), s) != source(cm.action.act(x, s), cm.action.act(y, s)))
          report.add("automorphism", {x, y, s});
  if (claimed_source) {
    check_table(*claimed_source, cm.set_size(), cm.set_size(), cm.set_size(), "source table");
    for (Elem x = 0; x < cm.set_size(); ++x)
      for (Elem y = 0; y < cm.set_size(); ++y)
        if ((*claimed_source)(x, y) != source(x, y)) report.add("peiffer", {x, y});
  }
  return report;
}

CrossedModule identity_crossed_module(const Rack& rack) {
  std::vector<Elem> p(rack.size());
  for (Elem x = 0; x < rack.size(); ++x) p[x] = x;
  return {self_action(rack), std::move(p)};
}

CrossedModule crossmod_from_augmented(const AugmentedRack& ar) {
  auto report = validate_augmented(ar);
  if (!report.valid()) throw ValidationError("not an augmented rack", std::move(report));
  return {{conj_rack(ar.group), ar.set_size, ar.group_action}, ar.p};
}

ValidationReport validate_generalized(const GeneralizedAugmentedRack& gar) {
  ValidationReport report;
  report.merge(validate_action(gar.action), "action");
  const auto& r = gar.action.rack;
  check_map(gar.p, gar.action.set_size, r.size(), "augmentation");
  for (Elem x = 0; x < gar.action.set_size; ++x)
    for (Elem s = 0; s < r.size(); ++s)
      if (gar.p[gar.action.act(x, s)] != r.op(gar.p[x], s)) report.add("augmentation", {x, s});
  return report;
}

GeneralizedAugmentedRack to_generalized(const CrossedModule& cm) { return {cm.action, cm.p}; }

CrossedModule from_generalized(const GeneralizedAugmentedRack& gar) {
  CrossedModule cm{gar.action, gar.p};
  auto report = validate_crossed_module(cm);
  if (!report.valid()) throw ValidationError("generalized augmented rack does not give a crossed module", std::move(report));
  return cm;
}

CrossedModule roundtrip_crossmod(const CrossedModule& cm) {
  auto report = validate_crossed_module(cm);
  if (!report.valid()) throw ValidationError("not a crossed module", std::move(report));
  return from_generalized(to_generalized(cm));
}

GeneralizedAugmentedRack roundtrip_genaug(const GeneralizedAugmentedRack& gar) {
  auto report = validate_generalized(gar);
  if (!report.valid()) throw ValidationError("not a generalized augmented rack", std::move(report));
  return to_generalized(from_generalized(gar));
}

ValidationReport validate_group_crossmod(const GroupCrossedModule& gc, bool require_peiffer) {
  const auto& m = gc.m;
  const auto& n = gc.n;
  check_map(gc.mu, m.size(), n.size(), "mu");
  check_table(gc.action, m.size(), n.size(), m.size(), "group crossed module action");
  ValidationReport report;
  for (Elem a = 0; a < m.size(); ++a)
    for (Elem b = 0; b < m.size(); ++b)
      if (gc.mu[m.mul(a, b)] != n.mul(gc.mu[a], gc.mu[b])) report.add("mu-homomorphism", {a, b});
  check_group_action(n, gc.action, report);
  for (Elem a = 0; a < m.size(); ++a)
    for (Elem b = 0; b < m.size(); ++b)
      for (Elem g = 0; g < n.size(); ++g)
        if (gc.action(m.mul(a, b), g) != m.mul(gc.action(a, g), gc.action(b, g)))
          report.add("automorphism", {a, b, g});
  for (Elem a = 0; a < m.size(); ++a)
    for (Elem g = 0; g < n.size(); ++g)
      if (gc.mu[gc.action(a, g)] != n.conj(gc.mu[a], g)) report.add("equivariant", {a, g});
  if (require_peiffer)
    for (Elem a = 0; a < m.size(); ++a)
      for (Elem b = 0; b < m.size(); ++b)
        if (gc.action(a, gc.mu[b]) != m.conj(a, b)) report.add("peiffer", {a, b});
  return report;
}

GroupCrossedModule identity_group_crossmod(const FiniteGroup& g) {
  auto conj = conjugation_augmented(g);
  return {g, g, conj.p, conj.group_action};
}

CrossedModule crossmod_from_group_crossmod(const GroupCrossedModule& gc) {
  auto report = validate_group_crossmod(gc);
  if (!report.valid()) throw ValidationError("not a crossed module of groups", std::move(report));
  return {{conj_rack(gc.n), gc.m.size(), gc.action}, gc.mu};
}

AugmentedRack tensor_augmented(const AugmentedRack& a1, const AugmentedRack& a2) {
  if (!(a1.group == a2.group)) throw IncompatibleError("augmented racks over different groups");
  const auto& g = a1.group;
  const std::size_t n1 = a1.set_size, n2 = a2.set_size;
  Grid action(n1 * n2, g.size());
  std::vector<Elem> p(n1 * n2);
  for (Elem x = 0; x < n1; ++x)
    for (Elem y = 0; y < n2; ++y) {
      const Elem i = x * n2 + y;
      p[i] = g.mul(a1.p[x], a2.p[y]);
      for (Elem h = 0; h < g.size(); ++h) action(i, h) = a1.group_action(x, h) * n2 + a2.group_action(y, h);
    }
  return {g, n1 * n2, std::move(action), std::move(p)};
}

std::vector<Elem> braiding(const AugmentedRack& a1, const AugmentedRack& a2) {
  if (!(a1.group == a2.group)) throw IncompatibleError("augmented racks over different groups");
  const std::size_t n1 = a1.set_size, n2 = a2.set_size;
  std::vector<Elem> c(n1 * n2);
  for (Elem x = 0; x < n1; ++x)
    for (Elem y = 0; y < n2; ++y) c[x * n2 + y] = y * n1 + a1.group_action(x, a2.p[y]);
  return c;
}

std::vector<Elem> braiding_inverse(const AugmentedRack& a1, const AugmentedRack& a2) {
  const auto c = braiding(a1, a2);
  if (!perm::is_permutation(c)) throw InconsistencyError("braiding is not a bijection");
  return perm::inverse(c);
}

ValidationReport validate_braiding(const AugmentedRack& a1, const AugmentedRack& a2) {
  ValidationReport report;
  const auto c = braiding(a1, a2);
  if (!perm::is_permutation(c)) {
    report.add("bijective");
    return report;
  }
  const auto xy = tensor_augmented(a1, a2), yx = tensor_augmented(a2, a1);
  const auto& g = a1.group;
  for (Elem i = 0; i < c.size(); ++i) {
    for (Elem h = 0; h < g.size(); ++h)
      if (c[xy.group_action(i, h)] != yx.group_action(c[i], h)) report.add("equivariant", {i, h});
    if (yx.p[c[i]] != xy.p[i]) report.add("augmentation-preserving", {i});
  }
  return report;
}

ValidationReport check_braid_relation(const AugmentedRack& x, const AugmentedRack& y, const AugmentedRack& z) {
  // c applied to a pair (u, v) of sets a, b: (u, v) ↦ (v, u·p_b(v)).
  auto c = [](const AugmentedRack& a, const AugmentedRack& b, Elem u, Elem v) {
    return std::pair<Elem, Elem>{v, a.group_action(u, b.p[v])};
  };
  if (!(x.group == y.group) || !(y.group == z.group))
    throw IncompatibleError("augmented racks over different groups");
  ValidationReport report;
  for (Elem u = 0; u < x.set_size; ++u)
    for (Elem v = 0; v < y.set_size; ++v)
      for (Elem w = 0; w < z.set_size; ++w) {
        // left: X⊗Y⊗Z → Y⊗X⊗Z → Y⊗Z⊗X → Z⊗Y⊗X
        auto [l1, l2] = c(x, y, u, v);
        auto [l3, l4] = c(x, z, l2, w);
        auto [l5, l6] = c(y, z, l1, l3);
        // right: X⊗Y⊗Z → X⊗Z⊗Y → Z⊗X⊗Y → Z⊗Y⊗X
        auto [r1, r2] = c(y, z, v, w);
        auto [r3, r4] = c(x, z, u, r1);
        auto [r5, r6] = c(x, y, r4, r2);
        if (l5 != r3 || l6 != r5 || l4 != r6) report.add("braid", {u, v, w});
      }
  return report;
}

AssemblyResult assemble_from_pair(const AugmentedPair& d) {
  const auto& a1 = d.a1;
  const auto& a0 = d.a0;
  const auto& g1 = a1.group;
  const auto& g0 = a0.group;
  for (const auto* a : {&a1, &a0}) {
    auto report = validate_augmented(*a);
    if (!report.valid()) throw ValidationError("not an augmented rack", std::move(report));
  }
  check_map(d.alpha, a1.set_size, a0.set_size, "alpha");
  check_map(d.beta, g1.size(), g0.size(), "beta");
  check_table(d.circ, a1.set_size, g0.size(), a1.set_size, "circ table");

  for (Elem a = 0; a < g1.size(); ++a)
    for (Elem b = 0; b < g1.size(); ++b)
      if (d.beta[g1.mul(a, b)] != g0.mul(d.beta[a], d.beta[b]))
        throw PreconditionError("beta is not a group homomorphism: witness " + witness_text({a, b}));
  for (Elem x = 0; x < a1.set_size; ++x)
    for (Elem g = 0; g < g1.size(); ++g)
      if (d.alpha[a1.group_action(x, g)] != a0.group_action(d.alpha[x], d.beta[g]))
        throw PreconditionError("alpha is not a map of group-sets over beta: witness " + witness_text({x, g}));
  for (Elem x = 0; x < a1.set_size; ++x)
    if (a0.p[d.alpha[x]] != d.beta[a1.p[x]])
      throw PreconditionError("square p0 alpha = beta p1 does not commute: witness " + witness_text({x}));
  {
    ValidationReport report;
    check_group_action(g0, d.circ, report);
    if (!report.valid()) {
      const auto& w = report.violations().front();
      std::string text = "circ is not a right action (" + w.rule + "): witness (";
      for (std::size_t i = 0; i < w.witness.size(); ++i) text += (i ? ", " : "") + std::to_string(w.witness[i]);
      throw PreconditionError(text + ")");
    }
  }

  AssemblyResult result;
  auto& cond = result.conditions;
  for (Elem x = 0; x < a1.set_size; ++x)
    for (Elem g = 0; g < g1.size(); ++g)
      if (a1.group_action(x, g) != d.circ(x, d.beta[g])) cond.add("condition 1", {x, g});
  for (Elem x = 0; x < a1.set_size; ++x)
    for (Elem g = 0; g < g0.size(); ++g)
      if (d.alpha[d.circ(x, g)] != a0.group_action(d.alpha[x], g)) cond.add("condition 2", {x, g});
  for (Elem x = 0; x < a1.set_size; ++x)
    for (Elem y = 0; y < a1.set_size; ++y)
      for (Elem g = 0; g < g0.size(); ++g)
        if (d.circ(a1.group_action(y, a1.p[x]), g) != a1.group_action(d.circ(y, g), a1.p[d.circ(x, g)]))
          cond.add("condition 3", {x, y, g});
  if (!cond.valid()) return result;

  const Rack target = induced_rack(a0);
  Grid action(a1.set_size, a0.set_size);
  for (Elem x = 0; x < a1.set_size; ++x)
    for (Elem y = 0; y < a0.set_size; ++y) action(x, y) = d.circ(x, a0.p[y]);
  result.crossed_module = CrossedModule{{target, a1.set_size, std::move(action)}, d.alpha};
  return result;
}

}  // namespace rackmod
