#include "qmut/textio.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace qmut {

namespace {

struct Line {
  int number = 0;  // 1-based
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    lines.push_back({number++, text.substr(pos, end - pos)});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  // A trailing newline produces one final empty piece; drop it.
  if (!lines.empty() && lines.back().text.empty()) lines.pop_back();
  return lines;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

bool blank(std::string_view s) {
  for (char c : s)
    if (!is_space(c)) return false;
  return true;
}

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && is_space(s[pos])) ++pos;
    if (pos >= s.size()) break;
    const std::size_t start = pos;
    while (pos < s.size() && !is_space(s[pos])) ++pos;
    tokens.push_back(
        {s.substr(start, pos - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

long long parse_integer(const Token& token, int line) {
  long long value = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range)
    throw ParseError(line, token.column, "integer out of range: '" +
                                             std::string(token.text) + "'");
  if (ec != std::errc() || ptr != last)
    throw ParseError(line, token.column,
                     "malformed integer: '" + std::string(token.text) + "'");
  return value;
}

}  // namespace

Quiver parse_quiver(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  std::size_t cursor = 0;
  while (cursor < lines.size() && blank(lines[cursor].text)) ++cursor;
  if (cursor >= lines.size())
    throw ParseError(1, 1, "missing vertex count");

  const Line& head = lines[cursor];
  const std::vector<Token> head_tokens = tokenize(head.text);
  if (head_tokens.size() != 1)
    throw ParseError(head.number, 1, "expected a single vertex count");
  const long long n = parse_integer(head_tokens[0], head.number);
  if (n < 1 || n > 10000)
    throw ParseError(head.number, head_tokens[0].column,
                     "vertex count must be between 1 and 10000");
  ++cursor;

  Quiver q(static_cast<int>(n));
  std::vector<std::vector<Token>> row_tokens(n);
  for (int i = 0; i < n; ++i, ++cursor) {
    if (cursor >= lines.size())
      throw ParseError(static_cast<int>(lines.size()) + 1, 1,
                       "expected " + std::to_string(n) + " matrix rows, got " +
                           std::to_string(i));
    const Line& line = lines[cursor];
    row_tokens[i] = tokenize(line.text);
    if (row_tokens[i].size() != static_cast<std::size_t>(n))
      throw ParseError(line.number, 1,
                       "row " + std::to_string(i) + " has " +
                           std::to_string(row_tokens[i].size()) +
                           " entries, expected " + std::to_string(n));
  }

  // Fill the full matrix first, then let validate() judge it; this way the
  // error points at the offending entry instead of a derived location.
  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      entries.push_back(
          parse_integer(row_tokens[i][j], lines[cursor - n + i].number));
  q = Quiver(static_cast<int>(n), std::move(entries));

  if (const auto violation = validate(q)) {
    const int i = violation->i >= 0 ? violation->i : 0;
    const int j = violation->j >= 0 ? violation->j : 0;
    throw ParseError(lines[cursor - n + i].number, row_tokens[i][j].column,
                     violation->message);
  }

  for (; cursor < lines.size(); ++cursor) {
    const Line& line = lines[cursor];
    if (blank(line.text)) continue;
    const std::vector<Token> tokens = tokenize(line.text);
    if (tokens[0].text.front() != '#')
      throw ParseError(line.number, tokens[0].column,
                       "unexpected content after the matrix");
    if (tokens.size() >= 2 && tokens[0].text == "#" &&
        tokens[1].text == "label") {
      if (tokens.size() < 4)
        throw ParseError(line.number, tokens[1].column,
                         "label line needs a vertex index and a name");
      const long long v = parse_integer(tokens[2], line.number);
      if (v < 0 || v >= n)
        throw ParseError(line.number, tokens[2].column,
                         "label vertex out of range");
      // The name is everything after the index token, verbatim.
      const std::size_t name_start = tokens[3].column - 1;
      q.set_label(static_cast<int>(v),
                  std::string(line.text.substr(name_start)));
    }
    // Other '#' lines are comments.
  }
  return q;
}

std::string emit_quiver(const Quiver& q) {
  std::string out = std::to_string(q.size());
  out.push_back('\n');
  for (int i = 0; i < q.size(); ++i) {
    for (int j = 0; j < q.size(); ++j) {
      if (j > 0) out.push_back(' ');
      out += std::to_string(q(i, j));
    }
    out.push_back('\n');
  }
  if (q.has_labels()) {
    for (int i = 0; i < q.size(); ++i) {
      if (q.label(i).empty()) continue;
      out += "# label " + std::to_string(i) + " " + q.label(i) + "\n";
    }
  }
  return out;
}

std::string emit_dot(const Quiver& q) {
  std::string out = "digraph quiver {\n";
  for (int i = 0; i < q.size(); ++i) {
    out += "  " + std::to_string(i);
    if (q.has_labels() && !q.label(i).empty()) {
      std::string escaped;
      for (char c : q.label(i)) {
        if (c == '"' || c == '\\') escaped.push_back('\\');
        escaped.push_back(c);
      }
      out += " [label=\"" + escaped + "\"]";
    }
    out += ";\n";
  }
  for (int i = 0; i < q.size(); ++i) {
    for (int j = 0; j < q.size(); ++j) {
      for (Entry m = 0; m < q(i, j); ++m)
        out += "  " + std::to_string(i) + " -> " + std::to_string(j) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

namespace {

nlohmann::json matrix_json(int n, const std::vector<Entry>& matrix) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < n; ++j)
      row.push_back(matrix[static_cast<std::size_t>(i) * n + j]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string truncation_name(Truncation t) {
  switch (t) {
    case Truncation::MaxQuivers: return "max-quivers";
    case Truncation::MaxDepth: return "max-depth";
    case Truncation::MaxEntry: return "max-entry";
  }
  return "?";
}

}  // namespace

nlohmann::json json_of(const CanonicalForm& form) {
  return {{"n", form.n},
          {"matrix", matrix_json(form.n, form.matrix)},
          {"hash", hash_hex(form.hash)},
          {"perm", form.perm}};
}

nlohmann::json json_of(const ClassReport& report) {
  nlohmann::json reps = nlohmann::json::array();
  for (const ClassEntry& entry : report.representatives) {
    reps.push_back({{"matrix", matrix_json(entry.form.n, entry.form.matrix)},
                    {"hash", hash_hex(entry.form.hash)},
                    {"witness", entry.witness}});
  }
  nlohmann::json truncated = nlohmann::json::array();
  for (Truncation t : report.truncated_reasons)
    truncated.push_back(truncation_name(t));
  return {{"complete", report.complete},
          {"representatives", std::move(reps)},
          {"truncated_reasons", std::move(truncated)}};
}

nlohmann::json json_of(const Certificate& cert) {
  switch (cert.kind) {
    case Certificate::Kind::ThreeVertexInvariant:
      return {{"kind", "three-vertex-invariant"},
              {"vertices", cert.vertices},
              {"weights", cert.weights},
              {"constant", cert.constant}};
    case Certificate::Kind::CyclicSubquiver: {
      nlohmann::json inner =
          cert.inner ? json_of(*cert.inner) : nlohmann::json();
      return {{"kind", "cyclic-subquiver"},
              {"vertices", cert.vertices},
              {"inner", std::move(inner)}};
    }
    case Certificate::Kind::ExhaustedClass: {
      nlohmann::json report =
          cert.report ? json_of(*cert.report) : nlohmann::json();
      return {{"kind", "exhausted-class"}, {"report", std::move(report)}};
    }
  }
  return {};
}

nlohmann::json json_of(const Verdict& verdict) {
  nlohmann::json out;
  switch (verdict.kind) {
    case Verdict::Kind::MutationAcyclic:
      out = {{"verdict", "mutation-acyclic"}, {"witness", verdict.witness}};
      break;
    case Verdict::Kind::MutationCyclic:
      out = {{"verdict", "mutation-cyclic"},
             {"certificate", verdict.certificate
                                 ? json_of(*verdict.certificate)
                                 : nlohmann::json()}};
      break;
    case Verdict::Kind::Unknown:
      out = {{"verdict", "unknown"},
             {"report",
              verdict.report ? json_of(*verdict.report) : nlohmann::json()}};
      break;
  }
  if (verdict.stage != 0) out["stage"] = verdict.stage;
  return out;
}

std::string emit_json(const ClassReport& report) {
  return json_of(report).dump();
}

std::string emit_json(const Verdict& verdict) {
  return json_of(verdict).dump();
}

}  // namespace qmut
