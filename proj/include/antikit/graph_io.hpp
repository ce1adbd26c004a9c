#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "antikit/digraph.hpp"

namespace antikit {

// "oedge v1" text format: a header line `n m`, then m lines `u v` for the
// edge u->v. ASCII decimal, 0-indexed, LF-terminated.

/// Parses oedge text. Throws Error(ParseError) on malformed text and the
/// EdgeError family on invalid edges.
OrientedGraph parse_oedge(std::string_view text);
std::string write_oedge(const Digraph& g);

/// Same as parse_oedge but the digraph may contain 2-cycles.
Digraph parse_oedge_digraph(std::string_view text);

/// JSON mirror: {"n": int, "edges": [[u, v], ...]}.
nlohmann::json graph_to_json(const Digraph& g);
OrientedGraph graph_from_json(const nlohmann::json& j);
Digraph digraph_from_json(const nlohmann::json& j);

/// Reads either format; JSON is recognised by a leading '{'.
OrientedGraph load_graph(const std::filesystem::path& path);
Digraph load_digraph(const std::filesystem::path& path);
void save_oedge(const Digraph& g, const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace antikit
