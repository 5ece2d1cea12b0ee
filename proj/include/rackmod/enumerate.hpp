#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rackmod/grid.hpp"
#include "rackmod/rack.hpp"

namespace rackmod {

enum class RackFlavor { racks, quandles, pointed };

struct EnumerateOptions {
  std::size_t max_order = 5;
  unsigned jobs = 1;
};

/// One representative per isomorphism class, in canonical form, sorted by
/// canonical table. Pointed representatives have basepoint 0 and are counted
/// up to basepoint-preserving isomorphism.
struct EnumerationResult {
  std::size_t order = 0;
  RackFlavor flavor = RackFlavor::racks;
  std::vector<Rack> representatives;

  std::size_t count() const noexcept { return representatives.size(); }
};

/// Throws ResourceError when n exceeds options.max_order.
EnumerationResult enumerate_racks(std::size_t n, RackFlavor flavor, const EnumerateOptions& options = {});

/// Lexicographically smallest relabelled table over all n! relabellings
/// (for pointed racks: over relabellings sending the basepoint to 0).
Grid canonical_form(const Rack& rack);

bool isomorphic(const Rack& a, const Rack& b);

const char* flavor_name(RackFlavor flavor);
RackFlavor parse_flavor(const std::string& name);

}  // namespace rackmod
