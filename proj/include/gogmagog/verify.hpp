#pragma once

// Exhaustive verification suites. Each suite walks every object of the
// relevant families up to a size bound and records one check per property
// per object. Work is split into contiguous chunks, one per thread, and the
// per-chunk reports are merged in chunk order, so the report content does
// not depend on the thread count (only the timing does).

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "gogmagog/asm.hpp"
#include "gogmagog/bijection.hpp"
#include "gogmagog/enumeration.hpp"
#include "gogmagog/io.hpp"
#include "gogmagog/schutzenberger.hpp"
#include "gogmagog/tableau.hpp"
#include "gogmagog/triangle.hpp"

namespace gogmagog {

struct Report {
  std::string suite;
  int n = 0;
  long checks = 0;
  std::vector<std::string> failures;
  std::map<std::string, long> histogram;
  std::vector<std::string> notes;
  long long millis = 0;

  bool passed() const { return failures.empty(); }

  void check(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (!ok) failures.push_back(what());
  }

  void merge(const Report& other) {
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    for (const auto& [key, value] : other.histogram) histogram[key] += value;
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

inline nlohmann::json report_to_json(const Report& r) {
  return {{"suite", r.suite},         {"n", r.n},         {"checks", r.checks}, {"failures", r.failures},
          {"histogram", r.histogram}, {"notes", r.notes}, {"millis", r.millis}};
}

inline std::string format_report(const Report& r) {
  std::ostringstream out;
  out << "suite " << r.suite << " (n <= " << r.n << "): " << r.checks << " checks, " << r.failures.size()
      << " failures, " << r.millis << " ms\n";
  for (const auto& [key, value] : r.histogram) out << "  " << key << ": " << value << '\n';
  for (const auto& note : r.notes) out << "  note: " << note << '\n';
  for (const auto& f : r.failures) out << "  FAIL " << f << '\n';
  return out.str();
}

struct VerifyOptions {
  int bound = 5;     // entry bound for raw GT enumeration
  int gt_n_max = 4;  // size cap for raw GT enumeration inside lemma1
  unsigned threads = 1;
};

namespace detail {

/// Run fn over items in contiguous chunks, merging the chunk reports in order.
template <class T, class Fn>
void run_chunks(const std::vector<T>& items, unsigned threads, Report& into, Fn fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(items.size(), 1))));
  std::vector<Report> parts(threads);
  const std::size_t per = (items.size() + threads - 1) / threads;
  auto work = [&](unsigned t) {
    const std::size_t begin = t * per;
    const std::size_t end = std::min(items.size(), begin + per);
    for (std::size_t i = begin; i < end; ++i) fn(items[i], parts[t]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& p : parts) into.merge(p);
}

inline std::string key(const std::string& label, int n) { return label + " n=" + std::to_string(n); }

inline bool is_first_or_second_rule(RuleTag r) { return r == RuleTag::Base || r == RuleTag::I || r == RuleTag::II; }

}  // namespace detail

/// Brute-force maximisation over every strictly decreasing chain
/// n = j_0 > j_1 > ... > j_{n-k} >= 1, with no dynamic programming.
inline std::vector<int> diagonal_by_chains(const GtTriangle& t) {
  const int n = t.size();
  std::vector<int> out(n, 0);
  out[n - 1] = t(n, n);
  for (int k = 1; k < n; ++k) {
    const int len = n - k;  // number of j's after j_0
    int best = std::numeric_limits<int>::min();
    // choose len distinct values from {1..n-1}, listed decreasingly
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      if (std::popcount(mask) != len) continue;
      std::vector<int> chain{n};
      for (int j = n - 1; j >= 1; --j)
        if (mask & (1u << (j - 1))) chain.push_back(j);
      int sum = t(n, n);
      for (int i = 1; i <= len; ++i) sum += t(chain[i] + i, chain[i]) - t(chain[i] + i - 1, chain[i]);
      best = std::max(best, sum);
    }
    out[k - 1] = best;
  }
  return out;
}

struct BraidWitness {
  GtTriangle triangle;
  int k = 0;  // s_k s_{k+1} s_k != s_{k+1} s_k s_{k+1}
};

inline bool breaks_braid_relation(const GtTriangle& t, int k) {
  const GtTriangle lhs = bk_s(k, bk_s(k + 1, bk_s(k, t)));
  const GtTriangle rhs = bk_s(k + 1, bk_s(k, bk_s(k + 1, t)));
  return lhs != rhs;
}

/// First triangle of size n (entries <= bound, reading order) on which
/// s_k s_{k+1} s_k and s_{k+1} s_k s_{k+1} differ, trying k = 1 first.
inline std::optional<BraidWitness> find_braid_witness(int n, int bound) {
  const auto all = generate({Family::Gt, n, {}, bound});
  for (int k = 1; k + 1 <= n - 1; ++k)
    for (const auto& t : all)
      if (breaks_braid_relation(t, k)) return BraidWitness{t, k};
  return std::nullopt;
}

inline Report verify_counts(int n_max, const VerifyOptions& opt = {}) {
  Report r{"counts", n_max};
  for (int n = 1; n <= n_max; ++n) {
    const BigInt expected = a_n(n);
    const BigInt gog = count({Family::Gog, n});
    const BigInt magog = count({Family::Magog, n});
    BigInt asms = 0;
    for_each_asm(n, [&](const Asm&) { ++asms; });
    const BigInt gogam = count({Family::Gogam, n});
    auto show = [](const BigInt& x) { return x.str(); };
    r.histogram[detail::key("A_n", n)] = static_cast<long>(expected);
    r.check(gog == expected, [&] { return "gog count " + show(gog) + " != A_" + std::to_string(n); });
    r.check(magog == expected, [&] { return "magog count " + show(magog) + " != A_" + std::to_string(n); });
    r.check(asms == expected, [&] { return "ASM count " + show(asms) + " != A_" + std::to_string(n); });
    r.check(gogam == expected, [&] { return "gogam count " + show(gogam) + " != A_" + std::to_string(n); });
    if (n <= opt.bound) {
      const BigInt filtered = count_gogam_by_filter(n);
      r.check(filtered == gogam, [&] { return "gogam filter count " + show(filtered) + " != S-image count"; });
    }
    // Trapezoid classes: equal Gog and Magog counts for every width.
    for (int k = 1; k <= n; ++k) {
      const BigInt g = count({Family::Gog, n, k});
      const BigInt m = count({Family::Magog, n, k});
      r.histogram["trapezoid(" + std::to_string(n) + "," + std::to_string(k) + ") gog"] = static_cast<long>(g);
      r.histogram["trapezoid(" + std::to_string(n) + "," + std::to_string(k) + ") magog"] = static_cast<long>(m);
      r.check(g == m, [&] {
        return "(" + std::to_string(n) + "," + std::to_string(k) + ") trapezoids: gog " + show(g) + " vs magog " + show(m);
      });
    }
  }
  return r;
}

inline Report verify_involution(int n_max, const VerifyOptions& opt = {}) {
  Report r{"involution", n_max};
  for (int n = 1; n <= n_max; ++n) {
    const auto all = generate({Family::Gt, n, {}, opt.bound});
    r.histogram[detail::key("gt triangles", n)] = static_cast<long>(all.size());
    detail::run_chunks(all, opt.threads, r, [](const GtTriangle& t, Report& rep) {
      const int n = t.size();
      const GtTriangle s = schutzenberger(t);
      rep.check(is_valid_gt(s), [&] { return "S(X) not GT for X = " + inline_triangle(t); });
      rep.check(schutzenberger(s) == t, [&] { return "S(S(X)) != X for X = " + inline_triangle(t); });
      rep.check(s(n, n) == t(n, n), [&] { return "S moved x(n,n) for X = " + inline_triangle(t); });
      for (int k = 1; k < n; ++k)
        rep.check(bk_s(k, bk_s(k, t)) == t,
                  [&] { return "s_" + std::to_string(k) + " not an involution on " + inline_triangle(t); });
    });
  }
  return r;
}

inline bool splits_into_row_runs(const Ssyt& s, const Word& w) {
  // maximal weakly increasing runs of w, in order
  std::vector<Word> runs;
  for (int x : w) {
    if (runs.empty() || x < runs.back().back()) runs.emplace_back();
    runs.back().push_back(x);
  }
  std::vector<Word> expected(s.rows.rbegin(), s.rows.rend());
  return runs == expected;
}

inline Report verify_oracle(int n_max, const VerifyOptions& opt = {}) {
  Report r{"oracle", n_max};
  {
    const GtTriangle paper = GtTriangle::from_rows_top_down({{1, 2, 2, 3, 6}, {1, 2, 2, 5}, {2, 2, 4}, {2, 4}, {3}});
    const Word w = reading_word(gt_to_ssyt(paper));
    const Word expected_w{5, 4, 5, 3, 3, 2, 2, 5, 1, 1, 1, 2, 4, 5};
    const Word expected_sw{1, 2, 4, 5, 5, 5, 1, 4, 4, 3, 3, 1, 2, 1};
    r.check(w == expected_w, [] { return "reading word of the size-5 example differs"; });
    r.check(word_complement_reverse(w, 5) == expected_sw, [] { return "complemented word of the size-5 example differs"; });
    r.check(schutzenberger(paper) == schutzenberger_word_oracle(paper), [] { return "S differs from RSK route on the size-5 example"; });
  }
  for (int n = 1; n <= n_max; ++n) {
    const auto all = generate({Family::Gt, n, {}, opt.bound});
    detail::run_chunks(all, opt.threads, r, [](const GtTriangle& t, Report& rep) {
      const Ssyt s = gt_to_ssyt(t);
      rep.check(is_valid_ssyt(s), [&] { return "tableau of " + inline_triangle(t) + " is not semistandard"; });
      rep.check(ssyt_to_gt(s, t.size()) == t, [&] { return "tableau round trip failed for " + inline_triangle(t); });
      rep.check(splits_into_row_runs(s, reading_word(s)),
                [&] { return "reading word runs differ from rows for " + inline_triangle(t); });
      rep.check(schutzenberger(t) == schutzenberger_word_oracle(t),
                [&] { return "S differs from RSK route for " + inline_triangle(t); });
    });
  }
  return r;
}

namespace detail {

inline void lemma1_checks(const GtTriangle& t, Report& rep) {
  const int n = t.size();
  const auto dp = rightmost_diagonal_of_S(t).values;
  const auto brute = diagonal_by_chains(t);
  const GtTriangle s = schutzenberger(t);
  std::vector<int> diag(n);
  for (int k = 1; k <= n; ++k) diag[k - 1] = s(k, k);
  rep.check(dp == brute, [&] { return "diagonal DP != chain brute force for " + inline_triangle(t); });
  rep.check(dp == diag, [&] { return "diagonal DP != diagonal of S(X) for " + inline_triangle(t); });
  const bool via_formula = is_gogam(t);
  rep.check(via_formula == is_magog(s), [&] { return "GOGAm predicate disagrees with S for " + inline_triangle(t); });
  rep.check(via_formula == is_magog(schutzenberger_word_oracle(t)),
            [&] { return "GOGAm predicate disagrees with RSK route for " + inline_triangle(t); });
}

}  // namespace detail

inline Report verify_lemma1(int n_max, const VerifyOptions& opt = {}) {
  Report r{"lemma1", n_max};
  for (int n = 1; n <= std::min(n_max, opt.gt_n_max); ++n) {
    const auto all = generate({Family::Gt, n, {}, opt.bound});
    r.histogram[detail::key("gt triangles", n)] = static_cast<long>(all.size());
    detail::run_chunks(all, opt.threads, r, detail::lemma1_checks);
  }
  for (int n = 2; n <= n_max; ++n) {
    std::vector<GtTriangle> outputs;
    for (const auto& g : generate({Family::Gog, n, 2})) outputs.push_back(gog_to_gogam_n2(g).triangle);
    r.histogram[detail::key("(n,2) outputs", n)] = static_cast<long>(outputs.size());
    detail::run_chunks(outputs, opt.threads, r, detail::lemma1_checks);
  }
  return r;
}

inline Report verify_bijection_n2(int n_max, const VerifyOptions& opt = {}) {
  Report r{"bijection-n2", n_max};
  std::optional<int> first_ivb;
  for (int n = 2; n <= n_max; ++n) {
    const auto gogs = generate({Family::Gog, n, 2});
    const auto gogams = generate({Family::Gogam, n, 2});
    const BigInt magogs = count({Family::Magog, n, 2});
    r.histogram[detail::key("gog trapezoids", n)] = static_cast<long>(gogs.size());
    r.histogram[detail::key("gogam trapezoids", n)] = static_cast<long>(gogams.size());
    r.check(gogs.size() == gogams.size() && BigInt(gogs.size()) == magogs,
            [&] { return "cardinalities differ at n=" + std::to_string(n); });

    Report part{"", n};
    std::vector<GtTriangle> images(gogs.size());
    std::vector<std::size_t> idx(gogs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    detail::run_chunks(idx, opt.threads, part, [&](std::size_t i, Report& rep) {
      const GtTriangle& g = gogs[i];
      BijectionResult fwd;
      try {
        fwd = gog_to_gogam_n2(g);
      } catch (const std::exception& e) {
        rep.check(false, [&] { return "forward map failed on " + inline_triangle(g) + ": " + e.what(); });
        return;
      }
      const GtTriangle& out = fwd.triangle;
      images[i] = out;
      for (const auto& step : fwd.trace) ++rep.histogram[detail::key(rule_name(step.rule), n)];
      rep.check(is_valid_gt(out) && is_trapezoid(out, Family::Gogam, 2),
                [&] { return "forward output is not an (n,2) trapezoid: " + inline_triangle(g); });
      rep.check(is_gogam(out) && satisfies_gogam_inequalities(state_from_triangle(out)),
                [&] { return "forward output fails the GOGAm inequalities: " + inline_triangle(g); });
      rep.check(is_magog(schutzenberger(out)), [&] { return "S(forward output) is not Magog: " + inline_triangle(g); });
      rep.check(fwd.trace.size() == static_cast<std::size_t>(n - 1), [&] { return "trace length wrong: " + inline_triangle(g); });
      try {
        const auto back = gogam_to_gog_n2(out);
        rep.check(back.triangle == g, [&] { return "inverse did not recover " + inline_triangle(g); });
        auto undone = rule_sequence(back.trace);
        std::reverse(undone.begin(), undone.end());
        rep.check(undone == rule_sequence(fwd.trace), [&] { return "inverse trace is not the reversed forward trace: " + inline_triangle(g); });
      } catch (const std::exception& e) {
        rep.check(false, [&] { return "inverse failed on image of " + inline_triangle(g) + ": " + e.what(); });
      }
    });
    r.merge(part);
    if (!first_ivb && part.histogram.count(detail::key("IVb", n))) first_ivb = n;

    std::vector<GtTriangle> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    r.check(sorted == gogams, [&] { return "image is not the full (n,2) GOGAm family at n=" + std::to_string(n); });
    // Inverse on the whole GOGAm family, then forward again.
    detail::run_chunks(gogams, opt.threads, r, [](const GtTriangle& t, Report& rep) {
      try {
        const auto back = gogam_to_gog_n2(t);
        rep.check(gog_to_gogam_n2(back.triangle).triangle == t, [&] { return "forward(inverse(Y)) != Y for " + inline_triangle(t); });
      } catch (const std::exception& e) {
        rep.check(false, [&] { return "inverse failed on " + inline_triangle(t) + ": " + e.what(); });
      }
    });
  }
  if (first_ivb)
    r.notes.push_back("rule IVb first fires at n=" + std::to_string(*first_ivb));
  else
    r.notes.push_back("rule IVb never fired for n <= " + std::to_string(n_max));
  return r;
}

inline Report verify_rule_trace_lemmas(int n_max, const VerifyOptions& opt = {}) {
  Report r{"rule-trace-lemmas", n_max};
  for (int n = 2; n <= n_max; ++n) {
    const auto gogs = generate({Family::Gog, n, 2});
    detail::run_chunks(gogs, opt.threads, r, [](const GtTriangle& g, Report& rep) {
      std::optional<RuleTag> previous;
      auto observe = [&](const BijectionState& before, int, int, const StepResult& step) {
        const int k = before.size();
        const int n = before.n;
        const RuleTag rule = step.rule;
        const std::string where = inline_triangle(g) + " at k=" + std::to_string(k);
        if (rule == RuleTag::IIIb)
          rep.check(!previous || !detail::is_first_or_second_rule(*previous),
                    [&] { return "IIIb right after I/II: " + where; });
        if (rule == RuleTag::IVb)
          rep.check(previous && (*previous == RuleTag::IIIb || *previous == RuleTag::IVb),
                    [&] { return "IVb not preceded by IIIb/IVb: " + where; });
        if (rule == RuleTag::IVb) {
          bool flat = true;
          for (int i = k - step.l; i <= k - 1; ++i)
            if (before.v[i] != n - k + 1) flat = false;
          rep.check(flat, [&] { return "IVb without v_{k-1}=...=v_{k-l}=n-k+1: " + where; });
          rep.check(step.l == trailing_run_length(step.state), [&] { return "IVb run length not recoverable: " + where; });
        }
        if (rule == RuleTag::IIIb || rule == RuleTag::IVb)
          rep.check(has_equal_pair_below(step.state, k - step.l),
                    [&] { return "no u_i = v_i with i < k-l after IIIb/IVb: " + where; });
        const auto undo = inverse_step(step.state);
        rep.check(undo.rule == rule && undo.state == before,
                  [&] { return "rule not recoverable from the repaired state: " + where; });
        previous = rule;
      };
      try {
        gog_to_gogam_n2(g, observe);
      } catch (const std::exception& e) {
        rep.check(false, [&] { return "forward map failed on " + inline_triangle(g) + ": " + e.what(); });
      }
    });
  }
  return r;
}

inline Report verify_n1_restriction(int n_max, const VerifyOptions& opt = {}) {
  Report r{"n1-restriction", n_max};
  for (int n = 1; n <= n_max; ++n) {
    const auto trapezoids = generate({Family::Gog, n, 1});
    long filtered = 0;
    for_each_member({Family::Gog, n}, [&](const GtTriangle& t) { filtered += is_trapezoid(t, Family::Gog, 1); });
    r.histogram[detail::key("(n,1) gog trapezoids", n)] = static_cast<long>(trapezoids.size());
    r.check(static_cast<long>(trapezoids.size()) == filtered,
            [&] { return "(n,1) trapezoid count differs from filtered Gog count at n=" + std::to_string(n); });
    std::vector<GtTriangle> images(trapezoids.size());
    std::vector<std::size_t> idx(trapezoids.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    detail::run_chunks(idx, opt.threads, r, [&](std::size_t i, Report& rep) {
      const GtTriangle& t = trapezoids[i];
      const GtTriangle sub = n1_subtraction_map(t);
      images[i] = sub;
      const auto fwd = gog_to_gogam_n2(t);
      rep.check(fwd.triangle == sub, [&] { return "covering subtraction differs from the general map on " + inline_triangle(t); });
      bool only_first_rules = true;
      for (const auto& s : fwd.trace) only_first_rules = only_first_rules && detail::is_first_or_second_rule(s.rule);
      rep.check(only_first_rules, [&] { return "a rule other than I/II fired on (n,1) input " + inline_triangle(t); });
      rep.check(is_valid_gt(sub) && is_trapezoid(sub, Family::Gogam, 1) && is_gogam(sub),
                [&] { return "covering subtraction is not an (n,1) GOGAm trapezoid for " + inline_triangle(t); });
    });
    std::sort(images.begin(), images.end());
    r.check(images == generate({Family::Gogam, n, 1}),
            [&] { return "image is not the (n,1) GOGAm family at n=" + std::to_string(n); });
  }
  return r;
}

/// The (n,2,k) classes. The literal class correspondence is checked as
/// stated; the containment of the image in the Magog trapezoids with
/// x(i,j) = 1 for j <= n-k is checked alongside it.
inline Report verify_n2k_classes(int n_max, const VerifyOptions& = {}) {
  Report r{"n2k-classes", n_max};
  auto ones_up_to = [](const GtTriangle& t, int cols) {
    for (int i = 1; i <= t.size(); ++i)
      for (int j = 1; j <= std::min(i, cols); ++j)
        if (t(i, j) != 1) return false;
    return true;
  };
  for (int n = 2; n <= n_max; ++n) {
    const auto gogs = generate({Family::Gog, n, 2});
    const auto magogs = generate({Family::Magog, n, 2});
    std::vector<GtTriangle> magog_image(gogs.size());
    for (std::size_t i = 0; i < gogs.size(); ++i) magog_image[i] = schutzenberger(gog_to_gogam_n2(gogs[i]).triangle);
    for (int k = 1; k <= n; ++k) {
      std::set<GtTriangle> image;
      for (std::size_t i = 0; i < gogs.size(); ++i)
        if (is_gog_trapezoid_n2k(gogs[i], k)) image.insert(magog_image[i]);
      std::set<GtTriangle> target;
      for (const auto& m : magogs)
        if (ones_up_to(m, k)) target.insert(m);
      const std::string tag = "(" + std::to_string(n) + ",2," + std::to_string(k) + ")";
      r.histogram[tag + " gog class"] = static_cast<long>(image.size());
      r.histogram[tag + " magog class"] = static_cast<long>(target.size());
      r.check(image == target, [&] {
        return tag + ": image of the Gog class (" + std::to_string(image.size()) + ") != Magog class (" +
               std::to_string(target.size()) + ")";
      });
      const bool contained = std::all_of(image.begin(), image.end(), [&](const GtTriangle& m) { return ones_up_to(m, n - k); });
      r.check(contained, [&] { return tag + ": image leaves the Magog trapezoids with ones in columns <= n-k"; });
    }
  }
  return r;
}

inline Report verify_statistics(int n_max, const VerifyOptions& opt = {}) {
  Report r{"statistics", n_max};
  for (int n = 2; n <= n_max; ++n) {
    const auto gogs = generate({Family::Gog, n, 2});
    detail::run_chunks(gogs, opt.threads, r, [](const GtTriangle& g, Report& rep) {
      const GtTriangle out = gog_to_gogam_n2(g).triangle;
      rep.check(statistic_x11(out) == statistic_x11(g), [&] { return "x(1,1) not preserved for " + inline_triangle(g); });
      rep.check(magog_row_statistic(schutzenberger(out)) == statistic_x11(g),
                [&] { return "Magog row statistic differs from x(1,1) for " + inline_triangle(g); });
    });
  }
  for (int n = 1; n <= n_max; ++n) {
    const auto gogs = generate({Family::Gog, n});
    detail::run_chunks(gogs, opt.threads, r, [](const GtTriangle& g, Report& rep) {
      const Asm a = gog_to_asm(g);
      const int n = a.size();
      int column = 0;
      for (int j = 1; j <= n; ++j)
        if (a(n, j) == 1) column = j;
      rep.check(column == statistic_x11(g), [&] { return "x(1,1) is not the bottom-row +1 column for " + inline_triangle(g); });
      ++rep.histogram["x11=" + std::to_string(statistic_x11(g)) + " gog n=" + std::to_string(n)];
    });
  }
  return r;
}

inline Report verify_asm_roundtrip(int n_max, const VerifyOptions& opt = {}) {
  Report r{"asm-roundtrip", n_max};
  for (int n = 1; n <= n_max; ++n) {
    const auto asms = generate_asms(n);
    r.check(BigInt(asms.size()) == a_n(n), [&] { return "ASM count differs from A_" + std::to_string(n); });
    detail::run_chunks(asms, opt.threads, r, [](const Asm& a, Report& rep) {
      const GtTriangle t = asm_to_gog(a);
      rep.check(is_valid_gt(t) && is_gog(t), [&] { return "asm_to_gog produced a non-Gog triangle: " + format_asm(a); });
      rep.check(gog_to_asm(t) == a, [&] { return "ASM round trip failed: " + format_asm(a); });
      rep.check(asm_gog_inversions(a) == static_cast<long>(inversions(t).size()),
                [&] { return "inversion numbers disagree: " + format_asm(a); });
      if (asm_negative_count(a) == 0)
        rep.check(asm_inversion_number(a) == static_cast<long>(inversions(t).size()),
                  [&] { return "permutation inversion number disagrees: " + format_asm(a); });
    });
    const auto gogs = generate({Family::Gog, n});
    detail::run_chunks(gogs, opt.threads, r, [](const GtTriangle& t, Report& rep) {
      const Asm a = gog_to_asm(t);
      rep.check(is_asm(a) && asm_to_gog(a) == t, [&] { return "Gog round trip failed: " + inline_triangle(t); });
    });
  }
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"counts",         "involution",  "oracle",     "lemma1",
                                              "bijection-n2",   "n1-restriction", "n2k-classes", "statistics",
                                              "asm-roundtrip", "rule-trace-lemmas"};
  return names;
}

inline Report verify(const std::string& suite, int n_max, const VerifyOptions& opt = {}) {
  using Fn = Report (*)(int, const VerifyOptions&);
  static const std::map<std::string, Fn> table{
      {"counts", verify_counts},
      {"involution", verify_involution},
      {"oracle", verify_oracle},
      {"lemma1", verify_lemma1},
      {"bijection-n2", verify_bijection_n2},
      {"n1-restriction", verify_n1_restriction},
      {"n2k-classes", verify_n2k_classes},
      {"statistics", verify_statistics},
      {"asm-roundtrip", verify_asm_roundtrip},
      {"rule-trace-lemmas", verify_rule_trace_lemmas},
  };
  const auto it = table.find(suite);
  if (it == table.end()) throw std::invalid_argument("unknown suite: " + suite);
  if (n_max < 1) throw std::invalid_argument("suite size bound must be positive");
  const auto start = std::chrono::steady_clock::now();
  Report r = it->second(n_max, opt);
  std::sort(r.failures.begin(), r.failures.end());
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace gogmagog
