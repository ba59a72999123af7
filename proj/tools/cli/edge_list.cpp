#include "cli/edge_list.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

namespace distspec::cli {

namespace {

bool read_int(std::istringstream& in, long& value) {
  std::string token;
  if (!(in >> token)) return false;
  std::size_t used = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == token.size();
}

}  // namespace

Graph parse_edge_list(std::string_view text, const std::string& name) {
  std::istringstream stream{std::string(text)};
  std::string line;
  int line_no = 0;
  long vertex_count = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream in(line);
    std::string tag;
    in >> tag;
    std::string trailing;
    if (tag == "p") {
      if (vertex_count >= 0) throw EdgeListError(line_no, "duplicate 'p' line");
      if (!read_int(in, vertex_count) || vertex_count < 0) throw EdgeListError(line_no, "expected 'p <vertex_count>'");
      if (in >> trailing) throw EdgeListError(line_no, "unexpected trailing text");
    } else if (tag == "e") {
      if (vertex_count < 0) throw EdgeListError(line_no, "edge before the 'p' line");
      long u = 0, v = 0;
      if (!read_int(in, u) || !read_int(in, v)) throw EdgeListError(line_no, "expected 'e <u> <v>'");
      if (in >> trailing) throw EdgeListError(line_no, "unexpected trailing text");
      if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
        throw EdgeListError(line_no, "vertex out of range 0.." + std::to_string(vertex_count - 1));
      }
      if (u == v) throw EdgeListError(line_no, "self-loop at vertex " + std::to_string(u));
      const Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
      if (!seen.insert(e).second) throw EdgeListError(line_no, "duplicate edge");
      edges.push_back(e);
    } else {
      throw EdgeListError(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (vertex_count < 0) throw EdgeListError(line_no, "missing 'p <vertex_count>' line");
  return Graph::from_edges(name, static_cast<int>(vertex_count), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# " << g.name() << "\n";
  out << "p " << g.order() << "\n";
  for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
  return out.str();
}

}  // namespace distspec::cli
