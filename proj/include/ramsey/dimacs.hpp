#ifndef RAMSEY_DIMACS_HPP
#define RAMSEY_DIMACS_HPP

#include "ramsey/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace ramsey::dimacs {

struct ParseError : std::runtime_error {
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}

  std::size_t line;
};

/// Reads `p edge <n> <m>` followed by exactly m `e <u> <v>` lines (1-indexed).
/// Lines starting with `c` and blank lines are skipped. Duplicate edges
/// (in either orientation), self-loops and out-of-range endpoints are
/// rejected.
Graph read(std::istream &in);
Graph read_string(const std::string &text);
Graph read_file(const std::filesystem::path &path);

/// Canonical form: the problem line, then edges with u < v in ascending
/// order. No comments, one trailing newline per line.
void write(std::ostream &out, const Graph &g);
std::string to_string(const Graph &g);
void write_file(const std::filesystem::path &path, const Graph &g);

} // namespace ramsey::dimacs

#endif // RAMSEY_DIMACS_HPP
