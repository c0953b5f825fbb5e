#pragma once

// JSON encodings of globular sets and computads. Output goes through
// nlohmann::json, whose objects keep keys sorted, so dumps are byte-stable.
// The schemas are described in docs/formats.md.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cattkit/computad.hpp"

namespace cattkit {

using Json = nlohmann::json;

/// Generator names, one list per dimension.
using GenNames = std::vector<std::vector<std::string>>;

Json to_json(const GlobSet& x);
GlobSet globset_from_json(const Json& j);

Json to_json(const Cell& cell);
Json to_json(const Sphere& s);
/// Unnamed generators are called `v<dim>.<index>`.
Json to_json(const Computad& c, const GenNames& names = {});

Cell cell_from_json(const Json& j);
Sphere sphere_from_json(const Json& j);
/// Structural decoding only; run check_computad for validity. Throws ParseError.
Computad computad_from_json(const Json& j, GenNames* names = nullptr);

/// Parses text as JSON, reporting malformed input as ParseError.
Json parse_json(std::string_view text);

}  // namespace cattkit
