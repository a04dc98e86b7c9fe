#pragma once

// Bijection between (n,2) Gog trapezoids and (n,2) GOGAm trapezoids.
//
// The forward map grows a triangle one NW-SE diagonal at a time, right to
// left. After k diagonals the partial triangle has size k and is described
// by two diagonals and a constant:
//
//   u_0 .. u_{k-1}   the cells y(k-i, k-i), top to bottom
//   v_1 .. v_{k-1}   the cells y(k-i+1, k-i), top to bottom
//   c = n - k + 1    every other cell
//
// Each step appends the next diagonal of the source trapezoid (constant
// n-k above v_k = b_k, u_k = a_k) and then repairs the result according to
// which of six rules applies. The inverse peels diagonals off again; the
// rule that was used can be recovered from the repaired state alone.

#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gogmagog/schutzenberger.hpp"
#include "gogmagog/triangle.hpp"

namespace gogmagog {

enum class RuleTag { Base, I, II, IIIa, IIIb, IVa, IVb };

inline const char* rule_name(RuleTag r) {
  switch (r) {
    case RuleTag::Base: return "base";
    case RuleTag::I: return "I";
    case RuleTag::II: return "II";
    case RuleTag::IIIa: return "IIIa";
    case RuleTag::IIIb: return "IIIb";
    case RuleTag::IVa: return "IVa";
    case RuleTag::IVb: return "IVb";
  }
  return "?";
}

inline constexpr RuleTag kAllRules[] = {RuleTag::Base, RuleTag::I,   RuleTag::II, RuleTag::IIIa,
                                        RuleTag::IIIb, RuleTag::IVa, RuleTag::IVb};

/// a[j] = x(n-j, n-j) for j = 0..n-1 and b[j] = x(n-j+1, n-j) for j = 1..n-1.
/// a[0] = n and b[1] = n-1 are the pinned top-row entries; b[0] is unused.
struct TrapezoidDiagonals {
  int n = 0;
  std::vector<int> a;
  std::vector<int> b;
};

inline TrapezoidDiagonals extract_diagonals(const GtTriangle& t) {
  const int n = t.size();
  if (!is_valid_gt(t) || !is_gog(t) || !is_trapezoid(t, Family::Gog, 2))
    throw InvalidInput("not an (n,2) Gog trapezoid");
  TrapezoidDiagonals d;
  d.n = n;
  d.a.assign(n, 0);
  d.b.assign(n, 0);
  for (int j = 0; j < n; ++j) d.a[j] = t(n - j, n - j);
  for (int j = 1; j < n; ++j) d.b[j] = t(n - j + 1, n - j);
  return d;
}

/// Rebuild the trapezoid from its two free diagonals.
inline GtTriangle trapezoid_from_diagonals(const TrapezoidDiagonals& d) {
  const int n = d.n;
  GtTriangle t(n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) t(i, j) = j;
  for (int j = 0; j < n; ++j) t(n - j, n - j) = d.a[j];
  for (int j = 1; j < n; ++j) t(n - j + 1, n - j) = d.b[j];
  return t;
}

/// Partial triangle X^(k) in compressed form. v[0] is unused so that v[i]
/// is v_i.
struct BijectionState {
  int n = 0;
  std::vector<int> u;
  std::vector<int> v;

  int size() const { return static_cast<int>(u.size()); }
  int constant() const { return n - size() + 1; }

  friend bool operator==(const BijectionState&, const BijectionState&) = default;
};

inline BijectionState initial_state(int n) { return {n, {n}, {0}}; }

inline GtTriangle materialize(const BijectionState& s) {
  const int m = s.size();
  GtTriangle t(m, s.constant());
  for (int i = 0; i < m; ++i) t(m - i, m - i) = s.u[i];
  for (int i = 1; i < m; ++i) t(m - i + 1, m - i) = s.v[i];
  return t;
}

/// Compressed form of a full-size triangle whose cells with i - j >= 2 all
/// equal 1.
inline BijectionState state_from_triangle(const GtTriangle& t) {
  const int n = t.size();
  BijectionState s{n, std::vector<int>(n), std::vector<int>(n, 0)};
  for (int i = 0; i < n; ++i) s.u[i] = t(n - i, n - i);
  for (int i = 1; i < n; ++i) s.v[i] = t(n - i + 1, n - i);
  return s;
}

/// Interlacing conditions of the materialized triangle, checked on the
/// compressed form: v_i <= u_i <= u_{i-1}, c <= v_i <= v_{i-1}, positivity.
inline bool is_gelfand_tsetlin(const BijectionState& s) {
  const int m = s.size();
  const int c = s.constant();
  if (c < 1) return false;
  for (int i = 0; i < m; ++i)
    if (s.u[i] < 1) return false;
  for (int i = 1; i < m; ++i) {
    if (s.v[i] > s.u[i] || s.u[i] > s.u[i - 1]) return false;
    if (m >= 3 && s.v[i] < c) return false;
    if (i >= 2 && s.v[i] > s.v[i - 1]) return false;
  }
  return true;
}

/// u_0 <= n;  u_0 - u_i + v_i <= n-1;  u_0 - u_i + v_i - v_j + 1 <= j-1 (i < j).
inline bool satisfies_gogam_inequalities(const BijectionState& s) {
  const int m = s.size();
  const int n = s.n;
  if (s.u[0] > n) return false;
  for (int i = 1; i < m; ++i) {
    const int partial = s.u[0] - s.u[i] + s.v[i];
    if (partial > n - 1) return false;
    for (int j = i + 1; j < m; ++j) {
      if (partial - s.v[j] + 1 > j - 1) return false;
    }
  }
  return true;
}

/// 1 + max{ j >= 0 : v_{k-j} = n-k }, counting the run of n-k values ending
/// at v_k. Only meaningful on a state of size k+1 with v_k = n-k.
inline int trailing_run_length(const BijectionState& s) {
  const int k = s.size() - 1;
  const int nk = s.n - k;
  int j = 0;
  while (k - j >= 1 && s.v[k - j] == nk) ++j;
  return j;
}

inline bool has_equal_pair_below(const BijectionState& s, int bound) {
  for (int i = 1; i < bound && i < s.size(); ++i)
    if (s.u[i] == s.v[i]) return true;
  return false;
}

/// max{ i : v_{k-i} <= b - i for 1..i }, taken over a contiguous run from
/// i = 1 and 0 when the run is empty. Read on the state before the step,
/// with b the incoming v_k.
inline int drop_run_length(const BijectionState& before, int b) {
  const int k = before.size();
  int l = 0;
  while (l + 1 <= k - 1 && before.v[k - l - 1] <= b - (l + 1)) ++l;
  return l;
}

struct StepResult {
  BijectionState state;
  RuleTag rule = RuleTag::Base;
  int l = 0;  // drop_run_length of the pre-step state, set for IIIb and IVb
};

inline std::string describe(const BijectionState& s) {
  std::ostringstream out;
  out << "n=" << s.n << " u=[";
  for (int i = 0; i < s.size(); ++i) out << (i ? "," : "") << s.u[i];
  out << "] v=[";
  for (int i = 1; i < s.size(); ++i) out << (i > 1 ? "," : "") << s.v[i];
  out << "] c=" << s.constant();
  return out.str();
}

/// Append the diagonal (n-k, ..., n-k, b_k, a_k) to X^(k) and repair it.
inline StepResult forward_step(const BijectionState& state, int b, int a) {
  const int k = state.size();
  const int n = state.n;
  const int nk = n - k;
  if (k < 1 || k > n - 1) throw std::invalid_argument("forward_step: state is already full size");

  StepResult r{state, RuleTag::Base, 0};
  auto& u = r.state.u;
  auto& v = r.state.v;
  u.push_back(a);
  v.push_back(b);

  auto decrement_u = [&] {
    for (int i = 0; i <= k - 1; ++i) --u[i];
  };
  auto decrement_v = [&] {
    for (int i = 1; i <= k - 1; ++i) --v[i];
  };

  if (b == nk && a == nk) {
    r.rule = RuleTag::I;
    decrement_u();
    decrement_v();
  } else if (b == nk && nk < a) {
    r.rule = RuleTag::II;
    decrement_v();
  } else if (nk < b && b == a) {
    decrement_u();
    if (is_gelfand_tsetlin(r.state)) {
      r.rule = RuleTag::IIIa;
    } else {
      r.rule = RuleTag::IIIb;
      decrement_v();
      v[k] = nk;
      r.l = drop_run_length(state, b);
    }
  } else if (nk < b && b < a && k >= 2) {
    if (b <= v[k - 1]) {
      r.rule = RuleTag::IVa;
    } else {
      r.rule = RuleTag::IVb;
      const int l = drop_run_length(state, b);
      for (int i = k - l + 1; i <= k; ++i) v[i] = nk;
      v[k - l] = b - l;
      r.l = l;
    }
  } else {
    std::ostringstream msg;
    msg << "forward_step: no rule matches (b=" << b << ", a=" << a << ") at " << describe(state);
    throw InternalInconsistency(msg.str());
  }
  if (k == 1) r.rule = RuleTag::Base;

  if (!is_gelfand_tsetlin(r.state) || !satisfies_gogam_inequalities(r.state) || r.state.u[k] != a) {
    std::ostringstream msg;
    msg << "forward_step: rule " << rule_name(r.rule) << " broke an invariant: " << describe(r.state);
    throw InternalInconsistency(msg.str());
  }
  return r;
}

struct InverseStepResult {
  BijectionState state;
  int b = 0;
  int a = 0;
  RuleTag rule = RuleTag::Base;
  int l = 0;
};

/// Undo one forward step: classify X^(k+1), restore Z^(k), and split off its
/// leftmost diagonal as (b_k, a_k).
inline InverseStepResult inverse_step(const BijectionState& state) {
  const int k = state.size() - 1;
  const int n = state.n;
  const int nk = n - k;
  if (k < 1) throw std::invalid_argument("inverse_step: nothing left to peel");

  InverseStepResult r;
  BijectionState z = state;
  auto& u = z.u;
  auto& v = z.v;
  const int vk = v[k];
  const int uk = u[k];

  if (vk == nk && uk == nk) {
    r.rule = RuleTag::I;
    for (int i = 0; i <= k - 1; ++i) ++u[i];
    for (int i = 1; i <= k - 1; ++i) ++v[i];
  } else if (vk > nk && vk == uk) {
    r.rule = RuleTag::IIIa;
    for (int i = 0; i <= k - 1; ++i) ++u[i];
  } else if (vk > nk && vk < uk) {
    r.rule = RuleTag::IVa;
  } else if (vk == nk && vk < uk) {
    if (!has_equal_pair_below(state, k)) {
      r.rule = RuleTag::II;
      for (int i = 1; i <= k - 1; ++i) ++v[i];
    } else {
      const int l = trailing_run_length(state);
      r.l = l;
      if (k - l < 1) throw InvalidInput("inverse_step: run of n-k reaches the top of the second diagonal");
      if (v[k - l] + l >= uk) {
        r.rule = RuleTag::IIIb;
        for (int i = 0; i <= k - 1; ++i) ++u[i];
        for (int i = 1; i <= k - 1; ++i) ++v[i];
        v[k] = uk;
      } else {
        r.rule = RuleTag::IVb;
        const int restored = v[k - l] + l;
        for (int i = k - l; i <= k - 1; ++i) v[i] = nk + 1;
        v[k] = restored;
      }
    }
  } else {
    std::ostringstream msg;
    msg << "inverse_step: no rule matches at " << describe(state);
    throw InvalidInput(msg.str());
  }
  if (k == 1) r.rule = RuleTag::Base;

  r.b = v[k];
  r.a = u[k];
  u.pop_back();
  v.pop_back();
  r.state = std::move(z);
  if (!is_gelfand_tsetlin(r.state) || !satisfies_gogam_inequalities(r.state)) {
    std::ostringstream msg;
    msg << "inverse_step: rule " << rule_name(r.rule) << " produced an invalid state " << describe(r.state);
    throw InvalidInput(msg.str());
  }
  return r;
}

struct StepRecord {
  int k = 0;
  RuleTag rule = RuleTag::Base;
  int l = 0;
  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

/// Forward traces carry drop_run_length, inverse traces the trailing run of
/// n-k values, so traces from the two directions are compared by rule.
using Trace = std::vector<StepRecord>;

inline std::vector<RuleTag> rule_sequence(const Trace& trace) {
  std::vector<RuleTag> out;
  for (const auto& s : trace) out.push_back(s.rule);
  return out;
}

/// Called after each forward step with (state before, b_k, a_k, result).
using ForwardObserver = std::function<void(const BijectionState&, int, int, const StepResult&)>;

struct BijectionResult {
  GtTriangle triangle;
  Trace trace;
};

inline BijectionResult gog_to_gogam_n2(const GtTriangle& t, const ForwardObserver& observe = {}) {
  const auto d = extract_diagonals(t);
  const int n = d.n;
  BijectionState s = initial_state(n);
  Trace trace;
  for (int k = 1; k <= n - 1; ++k) {
    StepResult r = forward_step(s, d.b[k], d.a[k]);
    if (observe) observe(s, d.b[k], d.a[k], r);
    trace.push_back({k, r.rule, r.l});
    s = std::move(r.state);
  }
  return {materialize(s), std::move(trace)};
}

/// Inverse map. The trace is listed in the order the steps are undone
/// (k = n-1 down to 1), i.e. the reverse of the forward trace.
inline BijectionResult gogam_to_gog_n2(const GtTriangle& t) {
  const int n = t.size();
  if (!is_valid_gt(t) || !is_trapezoid(t, Family::Gogam, 2) || !is_gogam(t))
    throw InvalidInput("not an (n,2) GOGAm trapezoid");
  BijectionState s = state_from_triangle(t);
  TrapezoidDiagonals d{n, std::vector<int>(n, 0), std::vector<int>(n, 0)};
  Trace trace;
  for (int k = n - 1; k >= 1; --k) {
    InverseStepResult r = inverse_step(s);
    d.a[k] = r.a;
    d.b[k] = r.b;
    trace.push_back({k, r.rule, r.l});
    s = std::move(r.state);
  }
  if (s.u[0] != n) throw InvalidInput("inverse map did not return to the apex value n");
  d.a[0] = n;
  GtTriangle gog = trapezoid_from_diagonals(d);
  if (!is_valid_gt(gog) || !is_gog(gog)) throw InvalidInput("inverse map produced a non-Gog triangle");
  return {std::move(gog), std::move(trace)};
}

/// Subtract from every entry the number of inversions covering it.
inline GtTriangle n1_subtraction_map(const GtTriangle& t) {
  if (!is_valid_gt(t) || !is_gog(t) || !is_trapezoid(t, Family::Gog, 1))
    throw InvalidInput("not an (n,1) Gog trapezoid");
  GtTriangle out = t;
  for (int i = 1; i <= t.size(); ++i)
    for (int j = 1; j <= i; ++j) out(i, j) -= covering_count(t, i, j);
  return out;
}

inline int statistic_x11(const GtTriangle& t) { return t(1, 1); }

/// Magog-side counterpart of x(1,1): sum of the top row minus sum of the
/// row below it. For any GT triangle T this equals the (1,1) entry of S(T)
/// (the k = 1 case of the diagonal formula, where the only chain is
/// n > n-1 > ... > 1).
inline int magog_row_statistic(const GtTriangle& t) {
  const int n = t.size();
  int total = 0;
  for (int x : t.row(n)) total += x;
  if (n >= 2)
    for (int x : t.row(n - 1)) total -= x;
  return total;
}

}  // namespace gogmagog
