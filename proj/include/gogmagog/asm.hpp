#pragma once

// Alternating sign matrices and the column-partial-sum bijection with Gog
// triangles.

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gogmagog/triangle.hpp"

namespace gogmagog {

class Asm {
 public:
  Asm() = default;
  explicit Asm(int n) : n_(n), m_(static_cast<std::size_t>(n) * n, 0) {}

  static Asm from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    Asm a(n);
    for (int r = 0; r < n; ++r) {
      if (static_cast<int>(rows[r].size()) != n) throw InvalidInput("matrix is not square");
      for (int c = 0; c < n; ++c) a(r + 1, c + 1) = rows[r][c];
    }
    return a;
  }

  static Asm identity(int n) {
    Asm a(n);
    for (int i = 1; i <= n; ++i) a(i, i) = 1;
    return a;
  }

  int size() const { return n_; }
  int operator()(int i, int j) const { return m_[(i - 1) * n_ + (j - 1)]; }
  int& operator()(int i, int j) { return m_[(i - 1) * n_ + (j - 1)]; }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) out[i - 1][j - 1] = (*this)(i, j);
    return out;
  }

  friend bool operator==(const Asm&, const Asm&) = default;
  friend auto operator<=>(const Asm&, const Asm&) = default;

 private:
  int n_ = 0;
  std::vector<int> m_;
};

enum class AsmViolationKind { BadEntry, Row, Column };

struct AsmViolation {
  AsmViolationKind kind;
  int index = 0;  // row or column (1-based); for BadEntry the row
  int column = 0;
  std::string message;
};

/// Entries outside {-1,0,1} are reported first and on their own. Otherwise
/// each line must have prefix sums in {0,1} ending at 1, which is exactly
/// "nonzeros alternate, starting and ending with +1".
inline std::vector<AsmViolation> validate_asm(const Asm& a) {
  std::vector<AsmViolation> out;
  const int n = a.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int x = a(i, j);
      if (x < -1 || x > 1) {
        std::ostringstream msg;
        msg << "entry (" << i << "," << j << ")=" << x << " is not in {-1,0,1}";
        out.push_back({AsmViolationKind::BadEntry, i, j, msg.str()});
      }
    }
  }
  if (!out.empty()) return out;

  auto check_line = [&](bool by_row, int idx) {
    int sum = 0;
    bool alternates = true;
    for (int t = 1; t <= n; ++t) {
      sum += by_row ? a(idx, t) : a(t, idx);
      if (sum < 0 || sum > 1) alternates = false;
    }
    const char* what = by_row ? "row" : "column";
    const auto kind = by_row ? AsmViolationKind::Row : AsmViolationKind::Column;
    if (!alternates) {
      out.push_back({kind, idx, 0, std::string(what) + " " + std::to_string(idx) + ": signs do not alternate"});
    } else if (sum != 1) {
      out.push_back({kind, idx, 0, std::string(what) + " " + std::to_string(idx) + ": sum is " + std::to_string(sum)});
    }
  };
  for (int i = 1; i <= n; ++i) check_line(true, i);
  for (int j = 1; j <= n; ++j) check_line(false, j);
  return out;
}

inline bool is_asm(const Asm& a) { return validate_asm(a).empty(); }

/// Row i of the triangle lists the columns where the column partial sum
/// M(n-i+1, j) + ... + M(n, j) equals 1.
inline GtTriangle asm_to_gog(const Asm& a) {
  const int n = a.size();
  std::vector<int> partial(n + 1, 0);
  std::vector<std::vector<int>> bottom_up;
  for (int r = n; r >= 1; --r) {
    std::vector<int> row;
    for (int j = 1; j <= n; ++j) {
      partial[j] += a(r, j);
      if (partial[j] == 1) row.push_back(j);
    }
    bottom_up.push_back(std::move(row));
  }
  std::reverse(bottom_up.begin(), bottom_up.end());
  return GtTriangle::from_rows_top_down(std::move(bottom_up));
}

/// Inverse of asm_to_gog: matrix row r is the difference of the 0/1
/// indicator vectors of triangle rows n-r+1 and n-r.
inline Asm gog_to_asm(const GtTriangle& t) {
  const int n = t.size();
  Asm a(n);
  for (int i = n; i >= 1; --i) {
    std::vector<int> here(n + 1, 0);
    for (int x : t.row(i)) here[x] = 1;
    std::vector<int> below(n + 1, 0);
    if (i > 1)
      for (int x : t.row(i - 1)) below[x] = 1;
    const int r = n - i + 1;
    for (int j = 1; j <= n; ++j) a(r, j) = here[j] - below[j];
  }
  return a;
}

/// Sum of M(i,j) * M(i',j') over i < i', j > j'.
inline long asm_inversion_number(const Asm& a) {
  const int n = a.size();
  long total = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (a(i, j) == 0) continue;
      for (int i2 = i + 1; i2 <= n; ++i2)
        for (int j2 = 1; j2 < j; ++j2) total += a(i, j) * a(i2, j2);
    }
  return total;
}

inline int asm_negative_count(const Asm& a) {
  int count = 0;
  for (int i = 1; i <= a.size(); ++i)
    for (int j = 1; j <= a.size(); ++j) count += a(i, j) == -1;
  return count;
}

/// Inversions of the matching Gog triangle: the pair count above minus the
/// number of -1 entries. The two agree on permutation matrices only.
inline long asm_gog_inversions(const Asm& a) { return asm_inversion_number(a) - asm_negative_count(a); }

}  // namespace gogmagog
