#include "turan/hypergraph.hpp"

#include <fstream>
#include <sstream>

namespace turan {

RMultigraph parse_graph(std::istream& in) {
  std::string line;
  bool have_header = false;
  int r = 0, n = 0;
  std::vector<std::vector<int>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<long long> vals;
    long long v;
    while (tokens >> v) vals.push_back(v);
    if (!tokens.eof())
      throw validation_error("graph parse: bad token on line " + std::to_string(lineno));
    if (vals.empty()) continue;
    if (!have_header) {
      if (vals.size() != 2)
        throw validation_error("graph parse: header must be 'r n' (line " +
                               std::to_string(lineno) + ")");
      r = static_cast<int>(vals[0]);
      n = static_cast<int>(vals[1]);
      have_header = true;
      continue;
    }
    edges.emplace_back(vals.begin(), vals.end());
  }
  if (!have_header) throw validation_error("graph parse: missing 'r n' header");
  return RMultigraph::make(r, n, edges);
}

RMultigraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

RMultigraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open graph file: " + path);
  return parse_graph(in);
}

std::string serialize_graph(const RMultigraph& g) {
  std::ostringstream out;
  out << g.r() << ' ' << g.n() << '\n';
  for (const auto& e : g.edges()) {
    const auto& verts = e.verts();
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (i) out << ' ';
      out << verts[i];
    }
    out << '\n';
  }
  return out.str();
}

void save_graph(const RMultigraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw validation_error("cannot write graph file: " + path);
  out << serialize_graph(g);
}

}  // namespace turan
