#pragma once

// Exhaustive generators for every family, plus the product formula for A_n.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gogmagog/asm.hpp"
#include "gogmagog/schutzenberger.hpp"
#include "gogmagog/triangle.hpp"

namespace gogmagog {

using BigInt = boost::multiprecision::cpp_int;

/// A_n = prod_{j=0}^{n-1} (3j+1)! / (n+j)!, evaluated exactly.
inline BigInt a_n(int n) {
  if (n < 1) throw std::invalid_argument("a_n: n must be positive");
  auto factorial = [](int m) {
    BigInt f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  BigInt num = 1;
  BigInt den = 1;
  for (int j = 0; j < n; ++j) {
    num *= factorial(3 * j + 1);
    den *= factorial(n + j);
  }
  return num / den;
}

struct FamilySpec {
  Family kind = Family::Gog;
  int n = 1;
  std::optional<int> k;      // trapezoid width
  std::optional<int> bound;  // entry bound, required for raw GT triangles
};

namespace detail {

/// Cell-by-cell backtracking in reading order (top row left to right, then
/// downward). Each cell ranges over the interval allowed by the interlacing
/// conditions intersected with the family's own constraints.
template <class Visit>
void backtrack_triangles(const FamilySpec& spec, Visit&& visit) {
  const int n = spec.n;
  const int cap = spec.kind == Family::Gt ? *spec.bound : n;
  GtTriangle t(n, 0);
  std::vector<std::pair<int, int>> cells;
  for (int i = n; i >= 1; --i)
    for (int j = 1; j <= i; ++j) cells.emplace_back(i, j);

  auto rec = [&](auto&& self, std::size_t c) -> void {
    if (c == cells.size()) {
      visit(static_cast<const GtTriangle&>(t));
      return;
    }
    const auto [i, j] = cells[c];
    int lo = 1;
    int hi = cap;
    if (i < n) {
      lo = std::max(lo, t(i + 1, j));
      hi = std::min(hi, t(i + 1, j + 1));
    } else if (j > 1) {
      lo = std::max(lo, t(i, j - 1));
    }
    switch (spec.kind) {
      case Family::Gog:
        if (i == n) {
          lo = std::max(lo, j);
          hi = std::min(hi, j);
        } else if (j > 1) {
          lo = std::max(lo, t(i, j - 1) + 1);
        }
        break;
      case Family::Magog:
        if (i == j) hi = std::min(hi, i);
        break;
      default:
        break;
    }
    if (spec.k && i - j >= *spec.k) {
      const int pinned = spec.kind == Family::Gog ? j : 1;
      lo = std::max(lo, pinned);
      hi = std::min(hi, pinned);
    }
    for (int x = lo; x <= hi; ++x) {
      t(i, j) = x;
      self(self, c + 1);
    }
  };
  rec(rec, 0);
}

inline bool satisfies_family(const GtTriangle& t, const FamilySpec& spec) {
  if (!is_valid_gt(t)) return false;
  switch (spec.kind) {
    case Family::Gt:
      for (const auto& row : t.rows_top_down())
        for (int x : row)
          if (x > *spec.bound) return false;
      return true;
    case Family::Gog:
      return is_gog(t) && (!spec.k || is_trapezoid(t, Family::Gog, *spec.k));
    case Family::Magog:
      return is_magog(t) && (!spec.k || is_trapezoid(t, Family::Magog, *spec.k));
    case Family::Gogam:
      return is_gogam(t) && (!spec.k || is_trapezoid(t, Family::Gogam, *spec.k));
  }
  return false;
}

inline void check_spec(const FamilySpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("family size must be positive");
  if (spec.k && *spec.k < 1) throw std::invalid_argument("trapezoid width must be positive");
  if (spec.kind == Family::Gt && !spec.bound) throw std::invalid_argument("raw GT enumeration needs an entry bound");
  if (spec.kind == Family::Gt && spec.k) throw std::invalid_argument("raw GT triangles have no trapezoid form");
}

}  // namespace detail

/// Every member of the family, in lexicographic reading order. GOGAm
/// triangles are produced as S-images of Magog triangles and then sorted.
inline std::vector<GtTriangle> generate(const FamilySpec& spec) {
  detail::check_spec(spec);
  std::vector<GtTriangle> out;
  if (spec.kind == Family::Gogam) {
    FamilySpec magog = spec;
    magog.kind = Family::Magog;
    detail::backtrack_triangles(magog, [&](const GtTriangle& t) { out.push_back(schutzenberger(t)); });
    std::sort(out.begin(), out.end());
  } else {
    detail::backtrack_triangles(spec, [&](const GtTriangle& t) { out.push_back(t); });
  }
  for (const auto& t : out) {
    if (!detail::satisfies_family(t, spec)) throw InternalInconsistency("generator emitted a non-member");
  }
  return out;
}

/// Streaming form of generate; members are visited in the same order.
template <class Visit>
void for_each_member(const FamilySpec& spec, Visit&& visit) {
  detail::check_spec(spec);
  if (spec.kind == Family::Gogam) {
    for (const auto& t : generate(spec)) visit(t);
    return;
  }
  detail::backtrack_triangles(spec, [&](const GtTriangle& t) {
    if (!detail::satisfies_family(t, spec)) throw InternalInconsistency("generator emitted a non-member");
    visit(t);
  });
}

inline BigInt count(const FamilySpec& spec) {
  BigInt c = 0;
  for_each_member(spec, [&](const GtTriangle&) { ++c; });
  return c;
}

/// GOGAm count by filtering raw GT triangles with entries <= n through the
/// diagonal-formula predicate. Independent of the S-image route in generate.
inline BigInt count_gogam_by_filter(int n, std::optional<int> k = {}) {
  BigInt c = 0;
  detail::backtrack_triangles({Family::Gt, n, {}, n}, [&](const GtTriangle& t) {
    if (is_gogam(t) && (!k || is_trapezoid(t, Family::Gogam, *k))) ++c;
  });
  return c;
}

/// All n x n alternating sign matrices, built row by row while keeping the
/// column partial sums in {0,1}.
template <class Visit>
void for_each_asm(int n, Visit&& visit) {
  if (n < 1) throw std::invalid_argument("ASM size must be positive");
  Asm a(n);
  std::vector<int> column(n + 1, 0);
  auto rec = [&](auto&& self, int r, int c, int row_sum) -> void {
    if (c > n) {
      if (row_sum != 1) return;
      if (r == n) {
        for (int j = 1; j <= n; ++j)
          if (column[j] != 1) return;
        visit(static_cast<const Asm&>(a));
        return;
      }
      self(self, r + 1, 1, 0);
      return;
    }
    for (int x = -1; x <= 1; ++x) {
      const int col = column[c] + x;
      const int rs = row_sum + x;
      if (col < 0 || col > 1 || rs < 0 || rs > 1) continue;
      a(r, c) = x;
      column[c] = col;
      self(self, r, c + 1, rs);
      column[c] -= x;
    }
    a(r, c) = 0;
  };
  rec(rec, 1, 1, 0);
}

inline std::vector<Asm> generate_asms(int n) {
  std::vector<Asm> out;
  for_each_asm(n, [&](const Asm& a) { out.push_back(a); });
  return out;
}

}  // namespace gogmagog
