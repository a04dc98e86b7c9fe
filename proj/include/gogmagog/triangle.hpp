#pragma once

// Gelfand-Tsetlin triangles and the Gog / Magog family predicates.
//
// Indexing is 1-based throughout the public surface: x(i, j) with
// n >= i >= j >= 1. Row n is the top row, row 1 is the single bottom entry.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gogmagog {

/// Raised when an input object does not satisfy an operation's precondition.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an algorithm detects a state its own invariants rule out.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Family { Gt, Gog, Magog, Gogam };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::Gt: return "gt";
    case Family::Gog: return "gog";
    case Family::Magog: return "magog";
    case Family::Gogam: return "gogam";
  }
  return "?";
}

/// Triangular integer array. Rows are stored top-down, so the defaulted
/// ordering is lexicographic in reading order (row n first).
class GtTriangle {
 public:
  GtTriangle() = default;

  /// Constant triangle of size n.
  GtTriangle(int n, int fill) {
    rows_.reserve(n);
    for (int i = n; i >= 1; --i) rows_.emplace_back(i, fill);
  }

  static GtTriangle from_rows_top_down(std::vector<std::vector<int>> rows) {
    GtTriangle t;
    t.rows_ = std::move(rows);
    return t;
  }

  int size() const { return static_cast<int>(rows_.size()); }

  bool has_valid_shape() const {
    const int n = size();
    for (int r = 0; r < n; ++r) {
      if (static_cast<int>(rows_[r].size()) != n - r) return false;
    }
    return true;
  }

  bool defined(int i, int j) const { return i >= 1 && i <= size() && j >= 1 && j <= i; }

  int operator()(int i, int j) const { return rows_[size() - i][j - 1]; }
  int& operator()(int i, int j) { return rows_[size() - i][j - 1]; }

  std::span<const int> row(int i) const { return rows_[size() - i]; }
  std::span<int> row(int i) { return rows_[size() - i]; }

  const std::vector<std::vector<int>>& rows_top_down() const { return rows_; }

  friend bool operator==(const GtTriangle&, const GtTriangle&) = default;
  friend auto operator<=>(const GtTriangle&, const GtTriangle&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

enum class ViolationKind { Shape, NonPositive, LowerBound, UpperBound };

struct Violation {
  ViolationKind kind;
  int i = 0;
  int j = 0;
  std::string message;
};

/// All violations of the interlacing conditions x(i+1,j) <= x(i,j) <= x(i+1,j+1)
/// and of positivity. Shape problems are reported on their own; when the shape
/// is wrong no inequality is checked.
inline std::vector<Violation> validate_gt(const GtTriangle& t) {
  std::vector<Violation> out;
  const int n = t.size();
  if (n == 0) {
    out.push_back({ViolationKind::Shape, 0, 0, "empty triangle"});
    return out;
  }
  const auto& rows = t.rows_top_down();
  for (int r = 0; r < n; ++r) {
    const int i = n - r;
    if (static_cast<int>(rows[r].size()) != i) {
      std::ostringstream msg;
      msg << "row " << i << " has " << rows[r].size() << " entries, expected " << i;
      out.push_back({ViolationKind::Shape, i, 0, msg.str()});
    }
  }
  if (!out.empty()) return out;

  for (int i = n; i >= 1; --i) {
    for (int j = 1; j <= i; ++j) {
      const int x = t(i, j);
      if (x < 1) {
        std::ostringstream msg;
        msg << "x(" << i << "," << j << ")=" << x << " is not positive";
        out.push_back({ViolationKind::NonPositive, i, j, msg.str()});
      }
      if (i == n) continue;
      if (t(i + 1, j) > x) {
        std::ostringstream msg;
        msg << "x(" << i << "," << j << ")=" << x << " < x(" << i + 1 << "," << j << ")=" << t(i + 1, j);
        out.push_back({ViolationKind::LowerBound, i, j, msg.str()});
      }
      if (x > t(i + 1, j + 1)) {
        std::ostringstream msg;
        msg << "x(" << i << "," << j << ")=" << x << " > x(" << i + 1 << "," << j + 1
            << ")=" << t(i + 1, j + 1);
        out.push_back({ViolationKind::UpperBound, i, j, msg.str()});
      }
    }
  }
  return out;
}

inline bool is_valid_gt(const GtTriangle& t) { return validate_gt(t).empty(); }

/// Rows strictly increasing below the top, top row pinned to 1..n.
inline bool is_gog(const GtTriangle& t) {
  const int n = t.size();
  for (int j = 1; j <= n; ++j) {
    if (t(n, j) != j) return false;
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j < i; ++j) {
      if (t(i, j) >= t(i, j + 1)) return false;
    }
  }
  return true;
}

/// Diagonal bound x(i,i) <= i.
inline bool is_magog(const GtTriangle& t) {
  for (int i = 1; i <= t.size(); ++i) {
    if (t(i, i) > i) return false;
  }
  return true;
}

/// The pinned-cell condition of an (n,k) trapezoid: x(i,j) = j (Gog) or
/// x(i,j) = 1 (Magog, Gogam) whenever i - j >= k. Family membership itself
/// is not re-checked here. A width k > n pins nothing.
inline bool is_trapezoid(const GtTriangle& t, Family kind, int k) {
  const int n = t.size();
  if (k < 1) throw std::invalid_argument("trapezoid width out of range");
  if (kind == Family::Gt) throw std::invalid_argument("trapezoids are defined for gog, magog and gogam");
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; i - j >= k; ++j) {
      const int pinned = kind == Family::Gog ? j : 1;
      if (t(i, j) != pinned) return false;
    }
  }
  return true;
}

struct Inversion {
  int i = 0;
  int j = 0;
  friend bool operator==(const Inversion&, const Inversion&) = default;
  friend auto operator<=>(const Inversion&, const Inversion&) = default;
};

/// Pairs (i,j) with x(i,j) = x(i+1,j), in lexicographic order.
inline std::vector<Inversion> inversions(const GtTriangle& t) {
  std::vector<Inversion> out;
  const int n = t.size();
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j <= i; ++j) {
      if (t(i, j) == t(i + 1, j)) out.push_back({i, j});
    }
  }
  return out;
}

/// Number of inversions (k,l) with (i,j) = (k+p, l+p) for some 1 <= p <= n-k.
inline int covering_count(const GtTriangle& t, int i, int j) {
  if (!t.defined(i, j)) throw std::invalid_argument("cell out of range");
  int count = 0;
  for (int p = 1; i - p >= 1 && j - p >= 1; ++p) {
    const int k = i - p;
    const int l = j - p;
    if (l <= k && t(k, l) == t(k + 1, l)) ++count;
  }
  return count;
}

/// Membership in the (n,2,k) Gog subclass: x(j,j) = n for j >= k and
/// x(j,j-1) = max(x(k,k-1), j-1) for j >= k. The undefined entry x(k,0)
/// (k = 1) drops out of the max, and the condition at j = 1 refers to the
/// nonexistent cell x(1,0) and is skipped.
inline bool is_gog_trapezoid_n2k(const GtTriangle& t, int k) {
  const int n = t.size();
  if (k < 1 || k > n) throw std::invalid_argument("subclass index out of range");
  for (int j = k; j <= n; ++j) {
    if (t(j, j) != n) return false;
  }
  for (int j = std::max(k, 2); j <= n; ++j) {
    const int expected = k >= 2 ? std::max(t(k, k - 1), j - 1) : j - 1;
    if (t(j, j - 1) != expected) return false;
  }
  return true;
}

}  // namespace gogmagog
