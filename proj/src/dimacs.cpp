#include "ramsey/dimacs.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace ramsey::dimacs {

namespace {

bool blank(const std::string &line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::size_t parse_count(std::istringstream &ss, std::size_t line,
                        const char *what) {
  long long x = 0;
  if (!(ss >> x))
    throw ParseError(line, std::string("expected ") + what);
  if (x < 0)
    throw ParseError(line, std::string("negative ") + what);
  return static_cast<std::size_t>(x);
}

} // namespace

Graph read(std::istream &in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t seen_edges = 0;
  GraphBuilder builder(0);

  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line))
      continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "c")
      continue;
    if (tag == "p") {
      if (have_header)
        throw ParseError(lineno, "duplicate problem line");
      std::string format;
      ss >> format;
      if (format != "edge")
        throw ParseError(lineno, "expected 'p edge <n> <m>'");
      n = parse_count(ss, lineno, "vertex count");
      m = parse_count(ss, lineno, "edge count");
      if (n > std::numeric_limits<Vertex>::max())
        throw ParseError(lineno, "vertex count too large");
      builder = GraphBuilder(n);
      have_header = true;
      continue;
    }
    if (tag == "e") {
      if (!have_header)
        throw ParseError(lineno, "edge before problem line");
      const std::size_t u = parse_count(ss, lineno, "edge endpoint");
      const std::size_t v = parse_count(ss, lineno, "edge endpoint");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(lineno, "endpoint out of range 1.." +
                                     std::to_string(n));
      if (u == v)
        throw ParseError(lineno, "self-loop on vertex " + std::to_string(u));
      const auto a = static_cast<Vertex>(u - 1);
      const auto b = static_cast<Vertex>(v - 1);
      if (builder.has_edge(a, b))
        throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " +
                                     std::to_string(v));
      builder.add_edge(a, b);
      ++seen_edges;
      continue;
    }
    throw ParseError(lineno, "unrecognised line '" + line + "'");
  }
  if (!have_header)
    throw ParseError(lineno, "missing problem line");
  if (seen_edges != m)
    throw ParseError(lineno, "header declares " + std::to_string(m) +
                                 " edges, found " +
                                 std::to_string(seen_edges));
  return std::move(builder).build();
}

Graph read_string(const std::string &text) {
  std::istringstream in(text);
  return read(in);
}

Graph read_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  return read(in);
}

void write(std::ostream &out, const Graph &g) {
  const auto edges = g.edges();
  out << "p edge " << g.size() << ' ' << edges.size() << '\n';
  for (const Edge &e : edges)
    out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

std::string to_string(const Graph &g) {
  std::ostringstream out;
  write(out, g);
  return out.str();
}

void write_file(const std::filesystem::path &path, const Graph &g) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  write(out, g);
}

} // namespace ramsey::dimacs
