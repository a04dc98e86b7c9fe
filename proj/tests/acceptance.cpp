// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fail.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "gogmagog/bijection.hpp"
#include "gogmagog/enumeration.hpp"
#include "gogmagog/io.hpp"
#include "gogmagog/verify.hpp"

using namespace gogmagog;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

VerifyOptions options() {
  VerifyOptions opt;
  opt.bound = 5;
  opt.gt_n_max = 4;
  opt.threads = std::max(1u, std::thread::hardware_concurrency());
  return opt;
}

struct Outcome {
  bool ok = false;
  std::string detail;
};

Outcome from_report(const Report& r) {
  std::string detail = std::to_string(r.checks) + " checks, " + std::to_string(r.failures.size()) + " failures";
  if (!r.failures.empty()) detail += "; first: " + r.failures.front();
  return {r.passed(), detail};
}

Outcome counts() {
  const std::vector<long> published{1, 2, 7, 42, 429};
  for (int n = 1; n <= 5; ++n) {
    const BigInt expected = published[n - 1];
    BigInt asms = 0;
    for_each_asm(n, [&](const Asm&) { ++asms; });
    if (a_n(n) != expected || count({Family::Gog, n}) != expected || count({Family::Magog, n}) != expected ||
        asms != expected)
      return {false, "mismatch at n=" + std::to_string(n)};
  }
  const auto start = Clock::now();
  const BigInt expected6 = a_n(6);
  BigInt asms = 0;
  for_each_asm(6, [&](const Asm&) { ++asms; });
  const bool ok6 = expected6 == 7436 && count({Family::Gog, 6}) == expected6 && count({Family::Magog, 6}) == expected6 &&
                   asms == expected6;
  const double secs = seconds_since(start);
  return {ok6 && secs < 300, "n<=5 exact; n=6 " + std::string(ok6 ? "7436" : "mismatch") + " in " + std::to_string(secs) + " s"};
}

Outcome worked_example() {
  const auto input = GtTriangle::from_rows_top_down({{1, 2, 3, 4, 5}, {1, 2, 4, 5}, {1, 3, 4}, {1, 3}, {2}});
  const auto expected = GtTriangle::from_rows_top_down({{1, 1, 1, 2, 3}, {1, 1, 2, 3}, {1, 1, 3}, {1, 3}, {2}});
  const auto fwd = gog_to_gogam_n2(input);
  std::vector<RuleTag> rules;
  for (const auto& s : fwd.trace) rules.push_back(s.rule);
  const bool trace_ok = rules == std::vector<RuleTag>{RuleTag::Base, RuleTag::IIIa, RuleTag::IIIb, RuleTag::II};
  const bool image_ok = fwd.triangle == expected;
  const bool checks_ok = gogam_to_gog_n2(fwd.triangle).triangle == input && is_magog(schutzenberger(fwd.triangle));
  std::string trace;
  for (RuleTag r : rules) trace += std::string(trace.empty() ? "" : ",") + rule_name(r);
  return {trace_ok && image_ok && checks_ok, inline_triangle(fwd.triangle) + " trace (" + trace + ")"};
}

Outcome n1_restriction(const VerifyOptions& opt) {
  const Report r = verify("n1-restriction", 6, opt);
  // independent count oracle: Catalan numbers C_n
  bool counts_ok = true;
  for (int n = 1; n <= 6; ++n) {
    BigInt catalan = 1;
    for (int i = 0; i < n; ++i) catalan = catalan * 2 * (2 * i + 1) / (i + 2);
    counts_ok = counts_ok && BigInt(r.histogram.at("(n,1) gog trapezoids n=" + std::to_string(n))) == catalan;
  }
  Outcome o = from_report(r);
  o.ok = o.ok && counts_ok;
  o.detail += counts_ok ? "; counts 1,2,5,14,42,132" : "; counts differ from 1,2,5,14,42,132";
  return o;
}

Outcome braid() {
  std::ifstream in(FIXTURE_DIR "/braid_witness.txt");
  if (!in) return {false, "fixture missing"};
  const GtTriangle stored = read_triangle(in);
  const auto found = find_braid_witness(4, 5);
  if (!found) return {false, "search found no witness"};
  const bool ok = is_valid_gt(stored) && stored.size() == 4 && breaks_braid_relation(stored, 1) &&
                  found->triangle == stored && found->k == 1;
  return {ok, "witness " + inline_triangle(stored) + " for s1 s2 s1 vs s2 s1 s2"};
}

}  // namespace

int main() {
  const VerifyOptions opt = options();
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"counts", counts},
      {"involution", [&] { return from_report(verify("involution", 4, opt)); }},
      {"oracle", [&] { return from_report(verify("oracle", 4, opt)); }},
      {"lemma1", [&] { return from_report(verify("lemma1", 6, opt)); }},
      {"bijection-n2",
       [&] {
         const auto start = Clock::now();
         Outcome o = from_report(verify("bijection-n2", 7, opt));
         const double secs = seconds_since(start);
         o.ok = o.ok && secs < 600;
         o.detail += ", " + std::to_string(secs) + " s";
         return o;
       }},
      {"trace-lemmas", [&] { return from_report(verify("rule-trace-lemmas", 7, opt)); }},
      {"n1-restriction", [&] { return n1_restriction(opt); }},
      {"statistics", [&] { return from_report(verify("statistics", 6, opt)); }},
      {"worked-example", worked_example},
      {"braid-witness", braid},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].name << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
