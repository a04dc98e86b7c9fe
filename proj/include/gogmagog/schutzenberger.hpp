#pragma once

// Berenstein-Kirillov reflections s_k, the composite involution S, the
// closed form for the rightmost diagonal of S(X), and the GOGAm predicate.

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gogmagog/triangle.hpp"

namespace gogmagog {

/// Reflect every entry of row k inside the interval cut out by its (up to
/// four) neighbours in rows k+1 and k-1. Undefined neighbours drop out.
inline GtTriangle bk_s(int k, const GtTriangle& t) {
  const int n = t.size();
  if (k < 1 || k > n - 1) throw std::invalid_argument("bk_s: row index out of range");
  GtTriangle out = t;
  for (int j = 1; j <= k; ++j) {
    int lo = t(k + 1, j);
    int hi = t(k + 1, j + 1);
    if (t.defined(k - 1, j - 1)) lo = std::max(lo, t(k - 1, j - 1));
    if (t.defined(k - 1, j)) hi = std::min(hi, t(k - 1, j));
    out(k, j) = lo + hi - t(k, j);
  }
  return out;
}

/// omega_j = s_j s_{j-1} ... s_1, i.e. s_1 is applied first.
inline GtTriangle omega(int j, const GtTriangle& t) {
  if (j < 1 || j > t.size() - 1) throw std::invalid_argument("omega: index out of range");
  GtTriangle out = t;
  for (int k = 1; k <= j; ++k) out = bk_s(k, out);
  return out;
}

/// Which end of the product omega_1 omega_2 ... omega_{n-1} acts first.
enum class ProductOrder {
  RightmostFirst,  // omega_{n-1} first, omega_1 last (ordinary composition)
  LeftmostFirst,   // omega_1 first, omega_{n-1} last
};

/// S = omega_1 omega_2 ... omega_{n-1}, read as ordinary composition: the
/// rightmost factor omega_{n-1} acts first. This is the order under which the
/// diagonal of S(X) agrees with rightmost_diagonal_of_S and with the RSK
/// route; the other order is kept selectable for the comparison tests.
inline GtTriangle schutzenberger(const GtTriangle& t, ProductOrder order = ProductOrder::RightmostFirst) {
  const int n = t.size();
  GtTriangle out = t;
  if (order == ProductOrder::RightmostFirst) {
    for (int j = n - 1; j >= 1; --j) out = omega(j, out);
  } else {
    for (int j = 1; j <= n - 1; ++j) out = omega(j, out);
  }
  return out;
}

/// values[k-1] = Y_kk, the (k,k) entry of S(X). chains[k-1] is a maximizing
/// chain n = j_0 > j_1 > ... > j_{n-k}.
struct DiagonalFormulaTable {
  int n = 0;
  std::vector<int> values;
  std::vector<std::vector<int>> chains;
};

/// Y_nn = X_nn and, for k < n, Y_kk is the maximum over chains
/// n = j_0 > j_1 > ... > j_{n-k} >= 1 of
///     X_nn + sum_{i=1}^{n-k} (X(j_i + i, j_i) - X(j_i + i - 1, j_i)).
/// One DP over (step i, last index j) serves every k at once.
inline DiagonalFormulaTable rightmost_diagonal_of_S(const GtTriangle& t) {
  const int n = t.size();
  constexpr int kNone = std::numeric_limits<int>::min();
  DiagonalFormulaTable table;
  table.n = n;
  table.values.assign(n, 0);
  table.chains.assign(n, {});
  table.values[n - 1] = t(n, n);
  table.chains[n - 1] = {n};

  // best[i][j]: best partial sum with j_i = j; from[i][j]: the j_{i-1} used.
  std::vector<std::vector<int>> best(n, std::vector<int>(n + 1, kNone));
  std::vector<std::vector<int>> from(n, std::vector<int>(n + 1, 0));
  best[0][n] = 0;
  for (int i = 1; i <= n - 1; ++i) {
    // running max of best[i-1][j'] over j' > j, scanning j downward
    int run = kNone;
    int run_arg = 0;
    for (int j = n - i; j >= 1; --j) {
      if (best[i - 1][j + 1] != kNone && best[i - 1][j + 1] > run) {
        run = best[i - 1][j + 1];
        run_arg = j + 1;
      }
      if (run == kNone) continue;
      best[i][j] = run + t(j + i, j) - t(j + i - 1, j);
      from[i][j] = run_arg;
    }
    const int k = n - i;
    int arg = 0;
    int value = kNone;
    for (int j = 1; j <= n - i; ++j) {
      if (best[i][j] != kNone && best[i][j] > value) {
        value = best[i][j];
        arg = j;
      }
    }
    table.values[k - 1] = t(n, n) + value;
    std::vector<int> chain(i + 1);
    for (int step = i, j = arg; step >= 0; --step) {
      chain[step] = j;
      j = from[step][j];
    }
    table.chains[k - 1] = std::move(chain);
  }
  return table;
}

/// X is GOGAm iff S(X) is Magog, i.e. Y_kk <= k for every k.
inline bool is_gogam(const GtTriangle& t) {
  const auto table = rightmost_diagonal_of_S(t);
  for (int k = 1; k <= t.size(); ++k) {
    if (table.values[k - 1] > k) return false;
  }
  return true;
}

}  // namespace gogmagog
