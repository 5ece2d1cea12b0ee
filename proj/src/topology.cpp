#include "rackmod/topology.hpp"

#include <string>

#include "rackmod/errors.hpp"
#include "rackmod/group_bridge.hpp"

namespace rackmod {

namespace {

std::size_t checked_count(std::size_t base, std::size_t k, std::size_t factor, std::size_t cap) {
  std::size_t count = factor;
  for (std::size_t i = 0; i < k; ++i) {
    if (base != 0 && count > cap / base) throw ResourceError("cube count exceeds cap " + std::to_string(cap), count);
    count *= base;
  }
  if (count > cap) throw ResourceError("cube count exceeds cap " + std::to_string(cap), count);
  return count;
}

CubicalComplex build(const Rack& rack, const RackAction* action, std::size_t dim, const NerveLimits& limits) {
  if (dim > limits.max_dim)
    throw ResourceError("dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(limits.max_dim), dim);
  const std::size_t n = rack.size();
  const std::size_t m = action ? action->set_size : 1;
  CubicalComplex c;
  c.dim = dim;
  c.rack_size = n;
  c.set_size = action ? action->set_size : 0;
  for (std::size_t k = 0; k <= dim; ++k) c.cube_counts.push_back(checked_count(n, k, m, limits.max_cubes));
  c.boundaries.emplace_back(0, c.cube_counts[0]);

  std::vector<Elem> r;
  for (std::size_t k = 1; k <= dim; ++k) {
    const std::size_t tuples = c.cube_counts[k] / m, lower = tuples / n;
    SparseMatrix d(c.cube_counts[k - 1], c.cube_counts[k]);
    r.assign(k, 0);
    for (std::size_t idx = 0; idx < c.cube_counts[k]; ++idx) {
      const Elem x = static_cast<Elem>(idx / tuples);
      std::size_t t = idx % tuples;
      for (std::size_t j = k; j-- > 0;) {
        r[j] = static_cast<Elem>(t % n);
        t /= n;
      }
      for (std::size_t i = 0; i < k; ++i) {
        // r[i] sits at 1-based position i+1
        const std::int64_t sign = (i + 1) % 2 == 0 ? 1 : -1;
        std::size_t f0 = 0, f1 = 0;
        for (std::size_t j = 0; j < k; ++j) {
          if (j == i) continue;
          f0 = f0 * n + r[j];
          f1 = f1 * n + (j < i ? rack.op(r[j], r[i]) : r[j]);
        }
        const Elem x1 = action ? action->act(x, r[i]) : 0;
        d.add(x * lower + f0, idx, sign);
        d.add(x1 * lower + f1, idx, -sign);
      }
    }
    c.boundaries.push_back(std::move(d));
  }
  return c;
}

}  // namespace

CubicalComplex nerve(const Rack& rack, std::size_t dim, const NerveLimits& limits) {
  return build(rack, nullptr, dim, limits);
}

CubicalComplex covering_nerve(const RackAction& action, std::size_t dim, const NerveLimits& limits) {
  auto report = validate_action(action);
  if (!report.valid()) throw ValidationError("not a rack action", std::move(report));
  return build(action.rack, &action, dim, limits);
}

bool boundary_squares_to_zero(const CubicalComplex& c) {
  for (std::size_t k = 1; k < c.dim; ++k)
    if (!c.boundaries[k].multiply(c.boundaries[k + 1]).is_zero()) return false;
  return true;
}

std::vector<HomologyDegree> homology(const CubicalComplex& c) {
  std::vector<SmithResult> snf;
  for (const auto& d : c.boundaries) snf.push_back(smith_normal_form(d));
  std::vector<HomologyDegree> out;
  for (std::size_t k = 0; k < c.dim; ++k) {
    HomologyDegree h;
    h.k = k;
    h.betti = c.cube_counts[k] - snf[k].rank - snf[k + 1].rank;
    for (const auto& f : snf[k + 1].factors)
      if (f > 1) h.torsion.push_back(f);
    out.push_back(std::move(h));
  }
  return out;
}

CoveringCheck covering_check(const CrossedModule& cm, std::size_t cap) {
  const Rack& r = cm.target();
  const std::size_t m = cm.set_size();
  if (cm.p.size() != m) throw MalformedInput("crossed module map has the wrong length");
  for (Elem v : cm.p)
    if (v >= r.size()) throw MalformedInput("crossed module map value out of range");
  const auto image = operator_image(r, {cm.action}, cap);
  const std::size_t off = image.offsets.front();

  CoveringCheck out;
  out.group_order = image.group.order();
  out.source_stabilizers.assign(m, 0);
  out.target_stabilizers.assign(m, 0);
  for (const auto& g : image.group.elements)
    for (Elem x = 0; x < m; ++x) {
      const bool fixes_x = g[off + x] == off + x;
      const bool fixes_px = g[cm.p[x]] == cm.p[x];
      out.source_stabilizers[x] += fixes_x;
      out.target_stabilizers[x] += fixes_px;
      if (fixes_x && !fixes_px && out.covering) {
        out.covering = false;
        out.witness = g;
        out.witness_point = x;
      }
    }
  return out;
}

}  // namespace rackmod
