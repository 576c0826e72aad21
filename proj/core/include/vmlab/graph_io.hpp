#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "vmlab/graph.hpp"

namespace vmlab {

// Text graph format: first line "n m", then m lines "u v" over integer ids.
// Vertices of degree zero follow as single-id lines, so that any graph
// (including one with id gaps left by deletions) round-trips exactly.
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);
Graph graph_from_stream(std::istream& in);

void write_graph_file(const Graph& g, const std::string& path);
Graph read_graph_file(const std::string& path);

// DOT export for visualization; roles, when given, become node labels.
std::string graph_to_dot(const Graph& g,
                         const std::map<VertexId, std::string>* roles = nullptr);

// Role sidecar: one "id role" line per vertex.
std::string roles_to_text(const std::map<VertexId, std::string>& roles);
std::map<VertexId, std::string> roles_from_text(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace vmlab
