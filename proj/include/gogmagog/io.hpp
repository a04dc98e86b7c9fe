#pragma once

// Text and JSON forms of triangles, ASMs and tableaux.
//
// Triangle text: first line n, then n lines from the top row (n entries)
// down to the bottom row (1 entry). JSON: {"n": N, "rows_top_down": [...]}.
// ASM text: first line n, then n lines of n entries. JSON: {"n": N, "rows": [...]}.

#include <cctype>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gogmagog/asm.hpp"
#include "gogmagog/tableau.hpp"
#include "gogmagog/triangle.hpp"

namespace gogmagog {

namespace detail {

inline std::vector<int> parse_int_line(const std::string& line, int line_no) {
  std::istringstream in(line);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw InvalidInput("line " + std::to_string(line_no) + ": not an integer: '" + tok + "'");
    out.push_back(x);
  }
  return out;
}

/// Non-blank lines of the input, each parsed as integers; line numbers kept for messages.
inline std::vector<std::vector<int>> read_int_lines(std::istream& in) {
  std::vector<std::vector<int>> lines;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(parse_int_line(line, line_no));
  }
  return lines;
}

inline bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

inline int header_size(const std::vector<std::vector<int>>& lines) {
  if (lines.empty() || lines[0].size() != 1 || lines[0][0] < 1)
    throw InvalidInput("first line must hold the size n");
  return lines[0][0];
}

}  // namespace detail

inline nlohmann::json triangle_to_json(const GtTriangle& t) {
  return {{"n", t.size()}, {"rows_top_down", t.rows_top_down()}};
}

inline GtTriangle triangle_from_json(const nlohmann::json& j) {
  try {
    auto rows = j.at("rows_top_down").get<std::vector<std::vector<int>>>();
    const int n = j.at("n").get<int>();
    if (static_cast<int>(rows.size()) != n) throw InvalidInput("\"n\" does not match the number of rows");
    return GtTriangle::from_rows_top_down(std::move(rows));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad triangle JSON: ") + e.what());
  }
}

/// Rows are kept as read; a wrong row length surfaces later as a shape
/// violation from validate_gt.
inline GtTriangle parse_triangle(const std::string& text) {
  if (detail::looks_like_json(text)) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("bad JSON: ") + e.what());
    }
    return triangle_from_json(j);
  }
  std::istringstream in(text);
  auto lines = detail::read_int_lines(in);
  const int n = detail::header_size(lines);
  if (static_cast<int>(lines.size()) != n + 1)
    throw InvalidInput("expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
  lines.erase(lines.begin());
  return GtTriangle::from_rows_top_down(std::move(lines));
}

inline GtTriangle read_triangle(std::istream& in) {
  return parse_triangle(std::string(std::istreambuf_iterator<char>(in), {}));
}

inline std::string format_triangle(const GtTriangle& t) {
  std::ostringstream out;
  out << t.size() << '\n';
  for (const auto& row : t.rows_top_down()) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
    out << '\n';
  }
  return out.str();
}

/// Single-line form used in reports: "1 2 3 / 1 3 / 2".
inline std::string inline_triangle(const GtTriangle& t) {
  std::ostringstream out;
  const auto& rows = t.rows_top_down();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out << " / ";
    for (std::size_t c = 0; c < rows[r].size(); ++c) out << (c ? " " : "") << rows[r][c];
  }
  return out.str();
}

inline nlohmann::json asm_to_json(const Asm& a) { return {{"n", a.size()}, {"rows", a.rows()}}; }

inline Asm parse_asm(const std::string& text) {
  if (detail::looks_like_json(text)) {
    try {
      const auto j = nlohmann::json::parse(text);
      const auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
      if (static_cast<int>(rows.size()) != j.at("n").get<int>()) throw InvalidInput("\"n\" does not match the matrix");
      return Asm::from_rows(rows);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("bad ASM JSON: ") + e.what());
    }
  }
  std::istringstream in(text);
  auto lines = detail::read_int_lines(in);
  const int n = detail::header_size(lines);
  if (static_cast<int>(lines.size()) != n + 1)
    throw InvalidInput("expected " + std::to_string(n) + " matrix rows, found " + std::to_string(lines.size() - 1));
  lines.erase(lines.begin());
  return Asm::from_rows(lines);
}

inline std::string format_asm(const Asm& a) {
  std::ostringstream out;
  out << a.size() << '\n';
  for (int i = 1; i <= a.size(); ++i) {
    for (int j = 1; j <= a.size(); ++j) out << (j > 1 ? " " : "") << a(i, j);
    out << '\n';
  }
  return out.str();
}

/// French display: top row first, so the longest row is printed last.
inline std::string format_ssyt(const Ssyt& s) {
  std::ostringstream out;
  for (auto it = s.rows.rbegin(); it != s.rows.rend(); ++it) {
    for (std::size_t c = 0; c < it->size(); ++c) out << (c ? " " : "") << (*it)[c];
    out << '\n';
  }
  return out.str();
}

inline nlohmann::json ssyt_to_json(const Ssyt& s) { return {{"rows_bottom_up", s.rows}}; }

}  // namespace gogmagog
