#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "rackmod/crossmod.hpp"
#include "rackmod/errors.hpp"
#include "rackmod/group.hpp"
#include "rackmod/group_bridge.hpp"
#include "rackmod/linkdiag.hpp"
#include "rackmod/rack.hpp"
#include "rackmod/report.hpp"
#include "rackmod/topology.hpp"
#include "rackmod/trunks.hpp"
#include "rackmod/two_racks.hpp"

namespace rackmod::io {

using Json = nlohmann::json;

/// Reading a file failed (missing, unreadable, not JSON).
class IoError : public Error {
 public:
  using Error::Error;
};

Json read_json_file(const std::string& path);
/// Two-space indented, keys sorted, trailing newline.
std::string dump(const Json& j);
std::string sha256_hex(std::string_view bytes);
std::string read_file(const std::string& path);

/// The "type" field, or MalformedInput.
std::string type_of(const Json& j);

// All readers throw MalformedInput for missing or mistyped fields; the
// object constructors may additionally throw ValidationError.

Json to_json(const Grid& g);
Grid grid_from_json(const Json& j);

Json to_json(const Rack& r);
Rack rack_from_json(const Json& j);
/// Table and basepoint without validation, for `check`.
std::pair<Grid, std::optional<Elem>> raw_rack_from_json(const Json& j);

Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

Json to_json(const RackAction& a);
RackAction action_from_json(const Json& j);

/// {"type":"crossmod","target":rack,"action":[[...]],"p":[...],"source_table"?}
Json to_json(const CrossedModule& cm);
CrossedModule crossmod_from_json(const Json& j);
std::optional<Grid> claimed_source_from_json(const Json& j);

Json to_json(const AugmentedRack& ar);
AugmentedRack augmented_from_json(const Json& j);

Json to_json(const GroupCrossedModule& gc);
GroupCrossedModule group_crossmod_from_json(const Json& j);

Json to_json(const GroupPresentation& p);
GroupPresentation presentation_from_json(const Json& j);
Word word_from_json(const Json& j);

Json to_json(const Strict2Rack& x);
Strict2Rack two_rack_from_json(const Json& j);

Json to_json(const Strict2Group& g);
Strict2Group two_group_from_json(const Json& j);

Json to_json(const Trunk& t);
Trunk trunk_from_json(const Json& j);
Json to_json(const Trunkified& t);

/// PD JSON {"type":"pd","crossings":[{"arcs":[a,b,c,d],"sign":±1}],"loops"?}.
Json to_json(const LinkDiagram& d);
LinkDiagram diagram_from_json(const Json& j);
Json to_json(const RackPresentation& p);

Json to_json(const CubicalComplex& c);
Json to_json(const std::vector<HomologyDegree>& h);
Json to_json(const ValidationReport& r);
/// Integers that fit in int64 as numbers, larger ones as decimal strings.
Json to_json(const BigInt& v);

/// "trivial:n", "dihedral:n", "cyclic:n", "flip", "conj:<group>" with a
/// corpus group name, or a path to a rack file.
Rack named_rack(const std::string& spec);
/// Corpus group name (e.g. "S3", "Z4") or "Z<n>".
FiniteGroup named_group(const std::string& name);

}  // namespace rackmod::io
