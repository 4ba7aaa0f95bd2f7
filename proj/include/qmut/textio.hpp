#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "qmut/decide.hpp"
#include "qmut/explore.hpp"
#include "qmut/quiver.hpp"

namespace qmut {

class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// Text format: first line the vertex count n, then n lines of n
/// space-separated integers (the exchange matrix, row-major), then optional
/// "# label <vertex> <name>" lines. Other "#" lines are comments. Parsing
/// validates the quiver invariants and reports the first problem with its
/// line and column.
Quiver parse_quiver(std::string_view text);

/// Inverse of parse_quiver: single spaces, newline-terminated rows, label
/// lines for labeled vertices. parse(emit(q)) == q for every valid quiver,
/// and emit(parse(t)) == t for text already in this shape.
std::string emit_quiver(const Quiver& q);

/// Graphviz digraph with one edge line per arrow, so an entry of
/// multiplicity m yields m parallel edges.
std::string emit_dot(const Quiver& q);

nlohmann::json json_of(const CanonicalForm& form);
nlohmann::json json_of(const ClassReport& report);
nlohmann::json json_of(const Certificate& cert);
nlohmann::json json_of(const Verdict& verdict);

/// Compact single-line JSON renderings (schema documented in the README).
std::string emit_json(const ClassReport& report);
std::string emit_json(const Verdict& verdict);

}  // namespace qmut
