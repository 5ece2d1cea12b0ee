#include "rackmod/enumerate.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <thread>

#include "rackmod/errors.hpp"

namespace rackmod {

namespace {

// A rack on {0..n-1} is the same thing as a family of column permutations
// sigma_b(a) = a◁b with sigma_c ∘ sigma_b = sigma_{b◁c} ∘ sigma_c. The search
// assigns columns one at a time and propagates that identity: whenever
// sigma_b and sigma_c are known, sigma_{sigma_c(b)} is forced.
class ColumnSearch {
 public:
  ColumnSearch(std::size_t n, RackFlavor flavor) : n_(n), flavor_(flavor) {
    Perm p = perm::identity(n);
    do all_perms_.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }

  const std::vector<Perm>& all_perms() const { return all_perms_; }

  // Runs the search with column 0 fixed to each candidate in `first_columns`.
  void run(const std::vector<Perm>& first_columns, std::set<Grid>& out) const {
    for (const auto& first : first_columns) {
      State state(n_);
      if (!assign(state, 0, first)) continue;
      recurse(state, out);
    }
  }

 private:
  using State = std::vector<std::optional<Perm>>;

  bool admissible(Elem b, const Perm& sigma) const {
    switch (flavor_) {
      case RackFlavor::racks:
        return true;
      case RackFlavor::quandles:
        return sigma[b] == b;
      case RackFlavor::pointed:
        // basepoint 0: 0◁x = 0 and x◁0 = x.
        return sigma[0] == 0 && (b != 0 || perm::is_identity(sigma));
    }
    return true;
  }

  bool assign(State& state, Elem b, const Perm& sigma) const {
    if (!admissible(b, sigma)) return false;
    state[b] = sigma;
    return propagate(state);
  }

  bool propagate(State& state) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Elem c = 0; c < n_; ++c) {
        if (!state[c]) continue;
        const Perm& sc = *state[c];
        const Perm sc_inv = perm::inverse(sc);
        for (Elem b = 0; b < n_; ++b) {
          if (!state[b]) continue;
          const Perm& sb = *state[b];
          Perm required(n_);
          for (Elem y = 0; y < n_; ++y) required[y] = sc[sb[sc_inv[y]]];
          const Elem d = sc[b];
          if (!state[d]) {
            if (!admissible(d, required)) return false;
            state[d] = std::move(required);
            changed = true;
          } else if (*state[d] != required) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void recurse(State& state, std::set<Grid>& out) const {
    auto next = std::find_if(state.begin(), state.end(), [](const auto& s) { return !s; });
    if (next == state.end()) {
      Grid table(n_, n_);
      for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b) table(a, b) = (*state[b])[a];
      std::optional<Elem> base;
      if (flavor_ == RackFlavor::pointed) base = 0;
      out.insert(canonical_form(Rack(std::move(table), base)));
      return;
    }
    const Elem b = static_cast<Elem>(next - state.begin());
    for (const auto& sigma : all_perms_) {
      State copy = state;
      if (assign(copy, b, sigma)) recurse(copy, out);
    }
  }

  std::size_t n_;
  RackFlavor flavor_;
  std::vector<Perm> all_perms_;
};

}  // namespace

Grid canonical_form(const Rack& rack) {
  const std::size_t n = rack.size();
  const auto base = rack.basepoint();
  Perm pi = perm::identity(n);
  std::optional<Grid> best;
  Grid candidate(n, n);
  do {
    if (base && pi[*base] != 0) continue;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) candidate(pi[a], pi[b]) = pi[rack.op(a, b)];
    if (!best || candidate.cells() < best->cells()) best = candidate;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return *best;
}

bool isomorphic(const Rack& a, const Rack& b) {
  if (a.size() != b.size() || a.pointed() != b.pointed()) return false;
  return canonical_form(a) == canonical_form(b);
}

EnumerationResult enumerate_racks(std::size_t n, RackFlavor flavor, const EnumerateOptions& options) {
  if (n == 0) throw PreconditionError("order must be positive");
  if (n > options.max_order)
    throw ResourceError("order " + std::to_string(n) + " exceeds enumeration cap " +
                        std::to_string(options.max_order));
  ColumnSearch search(n, flavor);
  const auto& perms = search.all_perms();
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(perms.size())));

  std::vector<std::set<Grid>> partial(jobs);
  auto work = [&](unsigned j) {
    std::vector<Perm> mine;
    for (std::size_t i = j; i < perms.size(); i += jobs) mine.push_back(perms[i]);
    search.run(mine, partial[j]);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
  }

  std::set<Grid> all;
  for (auto& s : partial) all.merge(s);
  EnumerationResult result{n, flavor, {}};
  std::optional<Elem> base;
  if (flavor == RackFlavor::pointed) base = 0;
  for (const auto& table : all) result.representatives.emplace_back(table, base);
  return result;
}

const char* flavor_name(RackFlavor flavor) {
  switch (flavor) {
    case RackFlavor::racks:
      return "racks";
    case RackFlavor::quandles:
      return "quandles";
    case RackFlavor::pointed:
      return "pointed";
  }
  return "racks";
}

RackFlavor parse_flavor(const std::string& name) {
  if (name == "racks") return RackFlavor::racks;
  if (name == "quandles") return RackFlavor::quandles;
  if (name == "pointed") return RackFlavor::pointed;
  throw MalformedInput("unknown rack flavor '" + name + "'");
}

}  // namespace rackmod
