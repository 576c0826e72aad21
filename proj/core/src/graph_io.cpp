#include "vmlab/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace vmlab {

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  std::vector<std::pair<VertexId, VertexId>> edges;
  const auto& ids = g.vertices();
  for (size_t i = 0; i < ids.size(); ++i)
    for (size_t j = i + 1; j < ids.size(); ++j)
      if (g.adjacent(ids[i], ids[j])) edges.emplace_back(ids[i], ids[j]);
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  for (VertexId v : ids)
    if (g.degree(v) == 0) out << v << '\n';
  return out.str();
}

Graph graph_from_stream(std::istream& in) {
  int n = 0;
  long m = 0;
  if (!(in >> n >> m)) throw ValidationError("graph header: expected 'n m'");
  if (n < 0 || m < 0) throw ValidationError("graph header: negative counts");
  std::vector<std::pair<VertexId, VertexId>> edges;
  VertexSet seen;
  for (long i = 0; i < m; ++i) {
    VertexId u, v;
    if (!(in >> u >> v)) throw ValidationError("graph body: expected edge line");
    edges.emplace_back(u, v);
    seen.insert(u);
    seen.insert(v);
  }
  VertexId w;
  while (in >> w) seen.insert(w);
  if (static_cast<int>(seen.size()) != n)
    throw ValidationError("graph body: " + std::to_string(seen.size()) +
                          " vertices listed, header says " + std::to_string(n));
  return Graph::from_edges(std::vector<VertexId>(seen.begin(), seen.end()), edges);
}

Graph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  return graph_from_stream(in);
}

void write_graph_file(const Graph& g, const std::string& path) {
  write_text_file(path, graph_to_text(g));
}

Graph read_graph_file(const std::string& path) { return graph_from_text(read_text_file(path)); }

std::string graph_to_dot(const Graph& g, const std::map<VertexId, std::string>* roles) {
  std::ostringstream out;
  out << "graph g {\n";
  for (VertexId v : g.vertices()) {
    out << "  " << v;
    if (roles && roles->count(v)) out << " [label=\"" << roles->at(v) << "\"]";
    out << ";\n";
  }
  const auto& ids = g.vertices();
  for (size_t i = 0; i < ids.size(); ++i)
    for (size_t j = i + 1; j < ids.size(); ++j)
      if (g.adjacent(ids[i], ids[j])) out << "  " << ids[i] << " -- " << ids[j] << ";\n";
  out << "}\n";
  return out.str();
}

std::string roles_to_text(const std::map<VertexId, std::string>& roles) {
  std::ostringstream out;
  for (const auto& [id, role] : roles) out << id << ' ' << role << '\n';
  return out.str();
}

std::map<VertexId, std::string> roles_from_text(const std::string& text) {
  std::map<VertexId, std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    VertexId id;
    std::string role;
    if (!(ls >> id >> role)) throw ValidationError("role line: expected 'id role'");
    out[id] = role;
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot open for writing: " + path);
  f << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace vmlab
