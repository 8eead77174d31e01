#pragma once

// Text serializations of ActionGraph windows. All writers are
// byte-deterministic: vertices and edges come out in the graph's order.

#include <string>

#include <json.hpp>

#include "sl3/graphs.hpp"

namespace sl3 {

enum class ExportFormat : std::uint8_t { Dot, Json, Csv };

std::optional<ExportFormat> parse_export_format(std::string_view s) noexcept;

/// One node per vertex, labelled "p,q" (or "orb(p,q)" for Whittaker orbits);
/// an edge of multiplicity m is written m times, each with mult=m.
std::string to_dot(const ActionGraph& g);

/// {"category","functor","window","vertices":[{"id","off","eig"}],"edges":[...]}
nlohmann::ordered_json to_json(const ActionGraph& g);
std::string to_json_text(const ActionGraph& g);

/// Header "from_p,from_q,to_p,to_q,mult,move", one row per edge.
std::string to_csv(const ActionGraph& g);

std::string render(const ActionGraph& g, ExportFormat f);

/// Inverse of to_json. Throws Error{InvalidArgument} on malformed input.
ActionGraph graph_from_json(const nlohmann::json& j);

}  // namespace sl3
