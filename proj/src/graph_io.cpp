#include "csflab/graph_io.hpp"

#include <sstream>
#include <string_view>
#include <string>

#include "csflab/errors.hpp"

namespace csflab {

namespace {

constexpr const char* kHeader = ">>graph6<<";

int triangle_bits(int n) { return n * (n - 1) / 2; }

}  // namespace

Graph parse_graph6(const std::string& raw) {
  // Trim trailing newline/whitespace and optional format header.
  std::string_view text{raw};
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  if (text.substr(0, 10) == kHeader) text.remove_prefix(10);
  if (text.empty()) throw ParseError("graph6: empty input");

  for (char c : text)
    if (c < 63 || c > 126)
      throw ParseError("graph6: character out of printable range");

  int first = text[0] - 63;
  if (first == 63)
    throw ParseError("graph6: multi-byte vertex counts exceed 16 vertices");
  int n = first;
  if (n > kMaxVertices)
    throw ParseError("graph6: vertex count exceeds 16");

  int bits = triangle_bits(n);
  int expected = 1 + (bits + 5) / 6;
  if (static_cast<int>(text.size()) != expected)
    throw ParseError("graph6: length does not match vertex count");

  Graph g(n);
  int index = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      int group = 1 + index / 6;
      int bit = 5 - index % 6;
      if (((text[group] - 63) >> bit) & 1) g.add_edge(u, v);
      ++index;
    }
  }
  // Padding bits beyond the triangle must be zero.
  for (; index < 6 * ((bits + 5) / 6); ++index) {
    int group = 1 + index / 6;
    int bit = 5 - index % 6;
    if (((text[group] - 63) >> bit) & 1)
      throw ParseError("graph6: nonzero padding bits");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bits = triangle_bits(n);
  int groups = (bits + 5) / 6;
  std::string body(groups, char(63));
  int index = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (g.has_edge(u, v)) body[index / 6] += char(1 << (5 - index % 6));
      ++index;
    }
  }
  out += body;
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in{text};
  std::string line;
  int n = -1;
  bool have_n = false;
  Graph g(0);
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    if (!have_n) {
      if (!(ls >> n))
        throw ParseError("edge list: first line must be the vertex count");
      std::string rest;
      if (ls >> rest)
        throw ParseError("edge list: first line must be the vertex count");
      if (n < 0 || n > kMaxVertices)
        throw ParseError("edge list: vertex count must be between 0 and 16");
      g = Graph(n);
      have_n = true;
      continue;
    }
    std::string probe;
    if (!(ls >> probe)) continue;  // blank line
    ls.clear();
    ls.seekg(0);
    int u, v;
    std::string rest;
    if (!(ls >> u >> v) || (ls >> rest))
      throw ParseError("edge list: line " + std::to_string(lineno) +
                       " is not \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("edge list: line " + std::to_string(lineno) +
                       " has a vertex out of range");
    if (u == v)
      throw ParseError("edge list: line " + std::to_string(lineno) +
                       " is a loop");
    if (g.has_edge(u, v))
      throw ParseError("edge list: line " + std::to_string(lineno) +
                       " repeats an edge");
    g.add_edge(u, v);
  }
  if (!have_n) throw ParseError("edge list: empty input");
  return g;
}

Graph parse_graph(const std::string& text, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(text)
                                       : parse_edge_list(text);
}

}  // namespace csflab
