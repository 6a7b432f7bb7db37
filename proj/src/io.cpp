#include "zf/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace zf {

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::size_t parse_count(std::istringstream& in, std::size_t line_no, const char* what) {
  long long value = 0;
  if (!(in >> value) || value < 0) {
    throw ParseError("line " + std::to_string(line_no) + ": expected " + what);
  }
  return static_cast<std::size_t>(value);
}

void expect_end(std::istringstream& in, std::size_t line_no) {
  std::string extra;
  if (in >> extra) {
    throw ParseError("line " + std::to_string(line_no) + ": unexpected token '" + extra + "'");
  }
}

Graph finish(std::size_t n, const std::vector<Edge>& edges, DuplicatePolicy policy) {
  try {
    return build_graph(n, edges, policy);
  } catch (const GraphError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Graph read_edge_list(std::istream& in, DuplicatePolicy policy) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_comment(line);
    if (blank(line)) continue;
    std::istringstream fields(line);
    if (!have_header) {
      n = parse_count(fields, line_no, "vertex count");
      m = parse_count(fields, line_no, "edge count");
      expect_end(fields, line_no);
      have_header = true;
      continue;
    }
    Vertex u = parse_count(fields, line_no, "edge endpoint");
    Vertex v = parse_count(fields, line_no, "edge endpoint");
    expect_end(fields, line_no);
    edges.emplace_back(u, v);
  }
  if (!have_header) throw ParseError("missing 'n m' header");
  if (edges.size() != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges but " +
                     std::to_string(edges.size()) + " were listed");
  }
  return finish(n, edges, policy);
}

Graph read_dimacs(std::istream& in, DuplicatePolicy policy) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    std::istringstream fields(line);
    std::string kind;
    fields >> kind;
    if (kind == "c") continue;
    if (kind == "p") {
      std::string format;
      fields >> format;
      if (format != "edge" && format != "col") {
        throw ParseError("line " + std::to_string(line_no) + ": unsupported problem '" +
                         format + "'");
      }
      n = parse_count(fields, line_no, "vertex count");
      m = parse_count(fields, line_no, "edge count");
      have_header = true;
    } else if (kind == "e") {
      if (!have_header) throw ParseError("edge line before 'p edge' header");
      std::size_t u = parse_count(fields, line_no, "edge endpoint");
      std::size_t v = parse_count(fields, line_no, "edge endpoint");
      if (u == 0 || v == 0) {
        throw ParseError("line " + std::to_string(line_no) + ": DIMACS vertices are 1-indexed");
      }
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown line type '" + kind + "'");
    }
  }
  if (!have_header) throw ParseError("missing 'p edge n m' header");
  if (edges.size() != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges but " +
                     std::to_string(edges.size()) + " were listed");
  }
  return finish(n, edges, policy);
}

Graph read_graph(std::istream& in, DuplicatePolicy policy) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(strip_comment(line));
    std::string first;
    if (!(fields >> first)) continue;
    std::istringstream again(text);
    if (first == "p" || first == "c") return read_dimacs(again, policy);
    return read_edge_list(again, policy);
  }
  throw ParseError("empty graph description");
}

Graph read_graph_file(const std::string& path, DuplicatePolicy policy) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_graph(in, policy);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string edge_list_string(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

void write_dot(std::ostream& out, const Graph& g, const std::map<Vertex, std::string>& fill) {
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (auto it = fill.find(v); it != fill.end()) {
      out << " [style=filled, fillcolor=\"" << it->second << "\"]";
    }
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

}  // namespace zf
