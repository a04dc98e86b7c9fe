#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "gogmagog/asm.hpp"
#include "gogmagog/io.hpp"
#include "gogmagog/triangle.hpp"

// "1 2 3 / 1 3 / 2" -> triangle, rows listed from the top.
inline gogmagog::GtTriangle tri(const std::string& text) {
  std::vector<std::vector<int>> rows(1);
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "/") {
      rows.emplace_back();
    } else {
      rows.back().push_back(std::stoi(tok));
    }
  }
  return gogmagog::GtTriangle::from_rows_top_down(rows);
}

inline gogmagog::Asm paper_asm() {
  return gogmagog::Asm::from_rows({{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {1, -1, 0, 0, 1}, {0, 1, -1, 1, 0}, {0, 0, 1, 0, 0}});
}

inline gogmagog::Asm anti_diagonal(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) rows[i][n - 1 - i] = 1;
  return gogmagog::Asm::from_rows(rows);
}

// x(i,j) = j
inline gogmagog::GtTriangle staircase(int n) {
  gogmagog::GtTriangle t(n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) t(i, j) = j;
  return t;
}

namespace gogmagog {

inline void PrintTo(const GtTriangle& t, std::ostream* os) { *os << inline_triangle(t); }

}  // namespace gogmagog
