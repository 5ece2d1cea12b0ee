#pragma once

// Exhaustive generators for the small structures the suites sweep over.

#include <algorithm>
#include <vector>

#include "rackmod/crossmod.hpp"
#include "rackmod/enumerate.hpp"

namespace corpus {

using namespace rackmod;

inline std::vector<Perm> all_perms(std::size_t n) {
  std::vector<Perm> out;
  Perm p = perm::identity(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Every valid action of `rack` on {0..m-1}, in lexicographic order of the
/// column choices.
inline std::vector<RackAction> all_actions(const Rack& rack, std::size_t m) {
  const auto perms = all_perms(m);
  const std::size_t n = rack.size();
  std::vector<std::size_t> choice(n, 0);
  std::vector<RackAction> out;
  while (true) {
    Grid table(m, n);
    for (Elem r = 0; r < n; ++r)
      for (Elem x = 0; x < m; ++x) table(x, r) = perms[choice[r]][x];
    RackAction a{rack, m, std::move(table)};
    if (validate_action(a).valid()) out.push_back(std::move(a));
    std::size_t i = 0;
    while (i < n && ++choice[i] == perms.size()) choice[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// Every valid crossed module with target `rack` on a set of size m.
inline std::vector<CrossedModule> all_crossed_modules(const Rack& rack, std::size_t m) {
  std::vector<CrossedModule> out;
  const std::size_t n = rack.size();
  for (const auto& a : all_actions(rack, m)) {
    std::vector<Elem> p(m, 0);
    while (true) {
      CrossedModule cm{a, p};
      if (validate_crossed_module(cm).valid()) out.push_back(std::move(cm));
      std::size_t i = 0;
      while (i < m && ++p[i] == n) p[i++] = 0;
      if (i == m) break;
    }
  }
  return out;
}

inline std::vector<Rack> racks_up_to(std::size_t n) {
  std::vector<Rack> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto& r : enumerate_racks(k, RackFlavor::racks).representatives) out.push_back(std::move(r));
  return out;
}

}  // namespace corpus
