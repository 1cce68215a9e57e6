#pragma once

#include <string>

#include <json.hpp>

#include "gq/incidence.hpp"
#include "gq/perm.hpp"

namespace gq {

using Json = nlohmann::ordered_json;

/// {"name": ..., "points": n, "lines": [[...], ...]} with canonical line order.
Json structure_to_json(const IncidenceStructure& s);
IncidenceStructure structure_from_json(const Json& j);

/// Compact single-line text followed by a newline; write(read(x)) == x for
/// canonical inputs.
std::string dump_structure(const IncidenceStructure& s);
IncidenceStructure parse_structure(const std::string& text);

Json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);

/// {"domain": n, "generators": [[...], ...]}
Json group_to_json(const PermGroup& g);
PermGroup group_from_json(const Json& j);

} // namespace gq
