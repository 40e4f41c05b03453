#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "tautilt/action.hpp"
#include "tautilt/chartable.hpp"
#include "tautilt/decide.hpp"
#include "tautilt/quiver.hpp"
#include "tautilt/repcheck.hpp"
#include "tautilt/zigzag.hpp"

namespace tautilt::io {

using Json = nlohmann::ordered_json;

/// Parses text into a document; ParseError carries line and column.
Json parse_json(const std::string& text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

using GroupSpec = std::variant<GroupPresentation, FrattiniInput>;

/// Structural parse of a .group.json document. Unknown fields, missing fields
/// and ragged or wrongly sized matrices raise ParseError naming the location.
/// Entries are reduced mod p^e (mod p in Frattini mode). Group-theoretic
/// validity is left to the validators. `mode` overrides a missing "mode" field
/// and must agree with a present one.
GroupSpec parse_group_spec(const std::string& text, std::optional<std::string> mode = std::nullopt);
Json group_spec_to_json(const GroupPresentation& pres);
Json group_spec_to_json(const FrattiniInput& inp);
std::string serialize_group_spec(const GroupSpec& spec);

Json quiver_to_json(const BoundQuiver& q);
BoundQuiver quiver_from_json(const Json& j);

Json cycle_to_json(const ZigzagCycle& c);
Json verdict_to_json(const Verdict& v);
Json hyperfocal_to_json(const HyperfocalData& hd);

/// A certificate document: either a verdict (with "certificate") or a bare
/// {"arrows": [...], "quiver"?: {...}}.
struct CertificateDoc {
  std::vector<std::size_t> arrows;
  std::optional<BoundQuiver> quiver;
};
CertificateDoc certificate_from_json(const Json& j);

Json rep_to_json(const BoundQuiver& q, const QuiverRep& rep);
QuiverRep rep_from_json(const BoundQuiver& q, const Json& j);

/// {"order", "root_order", "classes": [{name, size}], "characters": [{name,
/// values}], "module": values}; a value is an integer, a "a/b" string, or a
/// list of [coefficient, k] terms meaning sum coefficient * zeta^k.
CharacterTable table_from_json(const Json& j);

}  // namespace tautilt::io
