#pragma once

#include <string>

#include <json.hpp>

#include "certitrack/diagnostics.hpp"
#include "certitrack/polysys.hpp"
#include "certitrack/tracker.hpp"

namespace certitrack {

// System file:
//   { "n": int, "vars": int = n+1,
//     "polys": [ { "degree": int, "terms": [ { "exp": [ints], "re": "p/q", "im": "p/q" } ] } ] }
// Every parse failure (malformed JSON, wrong shapes, non-homogeneous terms,
// bad rational literals) throws ParseError.
PolySystem system_from_json(const nlohmann::json& j);
nlohmann::json system_to_json(const PolySystem& sys);

// Point file: { "z": [ { "re": "p/q", "im": "p/q" }, ... ] }
QVector vector_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const QVector& v);

// Tracking result: { "status", "steps", "z_star", "trace" }; all rationals as
// exact "p/q" strings, so identical runs serialize byte-identically.
nlohmann::json result_to_json(const TrackResult& res);

nlohmann::json bounds_to_json(const std::vector<BoundsRow>& rows);

PolySystem load_system_file(const std::string& path);
QVector load_vector_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace certitrack
