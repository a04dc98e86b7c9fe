#pragma once

// Semistandard tableaux (French convention), reading words and RSK row
// insertion. Together these give a second, word-level route to the
// Schutzenberger involution on Gelfand-Tsetlin triangles.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gogmagog/triangle.hpp"

namespace gogmagog {

using Word = std::vector<int>;

/// rows[0] is the bottom (longest) row. Rows weakly increase left to right,
/// columns strictly increase bottom to top.
struct Ssyt {
  std::vector<std::vector<int>> rows;
  friend bool operator==(const Ssyt&, const Ssyt&) = default;
};

inline bool is_valid_ssyt(const Ssyt& s) {
  for (std::size_t r = 0; r < s.rows.size(); ++r) {
    const auto& row = s.rows[r];
    if (row.empty()) return false;
    if (!std::is_sorted(row.begin(), row.end())) return false;
    if (r == 0) continue;
    const auto& below = s.rows[r - 1];
    if (row.size() > below.size()) return false;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] <= below[c]) return false;
    }
  }
  return true;
}

/// Tableau whose letters <= i fill the shape given by row i of t (read as a
/// partition, largest part first).
inline Ssyt gt_to_ssyt(const GtTriangle& t) {
  const int n = t.size();
  // shape(i, r) = r-th largest part of row i = x(i, i - r + 1), 0 past the end.
  auto shape = [&](int i, int r) { return (i >= 1 && r <= i) ? t(i, i - r + 1) : 0; };
  Ssyt s;
  for (int r = 1; r <= n; ++r) {
    std::vector<int> row;
    for (int letter = r; letter <= n; ++letter) {
      const int count = shape(letter, r) - shape(letter - 1, r);
      row.insert(row.end(), count, letter);
    }
    if (row.empty()) break;
    s.rows.push_back(std::move(row));
  }
  return s;
}

/// Inverse of gt_to_ssyt for tableaux over the alphabet 1..n.
inline GtTriangle ssyt_to_gt(const Ssyt& s, int n) {
  if (static_cast<int>(s.rows.size()) > n) throw InvalidInput("tableau has more rows than the alphabet size");
  for (const auto& row : s.rows)
    for (int x : row)
      if (x < 1 || x > n) throw InvalidInput("tableau letter outside 1..n");

  GtTriangle t(n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int r = 1; r <= i; ++r) {
      int count = 0;
      if (r <= static_cast<int>(s.rows.size())) {
        const auto& row = s.rows[r - 1];
        count = static_cast<int>(std::upper_bound(row.begin(), row.end(), i) - row.begin());
      }
      t(i, i - r + 1) = count;
    }
  }
  return t;
}

/// Rows from top to bottom, each read left to right.
inline Word reading_word(const Ssyt& s) {
  Word w;
  for (auto it = s.rows.rbegin(); it != s.rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

/// Reverse the word and replace each letter i by n + 1 - i.
inline Word word_complement_reverse(const Word& w, int n) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = n + 1 - x;
  return out;
}

/// Row insertion: each letter bumps the leftmost entry strictly greater
/// than it into the next row up.
inline Ssyt rsk_insertion_tableau(const Word& w) {
  Ssyt p;
  for (int letter : w) {
    int x = letter;
    for (std::size_t r = 0;; ++r) {
      if (r == p.rows.size()) {
        p.rows.push_back({x});
        break;
      }
      auto& row = p.rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        break;
      }
      std::swap(x, *it);
    }
  }
  return p;
}

inline GtTriangle schutzenberger_word_oracle(const GtTriangle& t) {
  const int n = t.size();
  const Word w = reading_word(gt_to_ssyt(t));
  return ssyt_to_gt(rsk_insertion_tableau(word_complement_reverse(w, n)), n);
}

}  // namespace gogmagog
