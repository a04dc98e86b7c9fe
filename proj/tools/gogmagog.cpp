// Command-line front end.
//
// Exit status: 0 success, 1 validation or verification failure, 2 usage or
// parse error. Diagnostics go to stderr.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gogmagog/asm.hpp"
#include "gogmagog/bijection.hpp"
#include "gogmagog/enumeration.hpp"
#include "gogmagog/io.hpp"
#include "gogmagog/schutzenberger.hpp"
#include "gogmagog/tableau.hpp"
#include "gogmagog/triangle.hpp"
#include "gogmagog/verify.hpp"

using namespace gogmagog;

namespace {

enum class Status { Ok = 0, Failed = 1, Usage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an input object is well formed but not a member of the family
// the command needs.
struct NotAMember : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

const std::map<std::string, Family> kTriangleKinds{
    {"gt", Family::Gt}, {"gog", Family::Gog}, {"magog", Family::Magog}, {"gogam", Family::Gogam}};

std::vector<std::string> family_problems(const GtTriangle& t, Family kind, std::optional<int> k) {
  std::vector<std::string> out;
  for (const auto& v : validate_gt(t)) out.push_back(v.message);
  if (!out.empty()) return out;
  switch (kind) {
    case Family::Gt:
      break;
    case Family::Gog:
      if (!is_gog(t)) out.push_back("not a Gog triangle: top row must be 1..n and lower rows strictly increasing");
      break;
    case Family::Magog:
      for (int i = 1; i <= t.size(); ++i)
        if (t(i, i) > i) out.push_back("x(" + std::to_string(i) + "," + std::to_string(i) + ")=" + std::to_string(t(i, i)) + " > " + std::to_string(i));
      break;
    case Family::Gogam: {
      const auto table = rightmost_diagonal_of_S(t);
      for (int i = 1; i <= t.size(); ++i)
        if (table.values[i - 1] > i)
          out.push_back("S(X) has (" + std::to_string(i) + "," + std::to_string(i) + ") entry " + std::to_string(table.values[i - 1]) + " > " + std::to_string(i));
      break;
    }
  }
  if (k) {
    if (kind == Family::Gt) throw UsageError("--trapezoid needs --kind gog, magog or gogam");
    if (!is_trapezoid(t, kind, *k)) out.push_back("pinned cells of the (" + std::to_string(t.size()) + "," + std::to_string(*k) + ") trapezoid do not hold");
  }
  return out;
}

void require(const GtTriangle& t, Family kind, std::optional<int> k = {}) {
  const auto problems = family_problems(t, kind, k);
  if (!problems.empty()) throw NotAMember("input is not a " + std::string(family_name(kind)) + " triangle: " + problems.front());
}

void print_triangle(const GtTriangle& t, bool json) {
  if (json)
    std::cout << triangle_to_json(t).dump() << '\n';
  else
    std::cout << format_triangle(t);
}

void print_asm(const Asm& a, bool json) {
  if (json)
    std::cout << asm_to_json(a).dump() << '\n';
  else
    std::cout << format_asm(a);
}

Status run_validate(const std::string& kind, std::optional<int> k, const std::string& file) {
  const std::string text = slurp(file);
  std::vector<std::string> problems;
  if (kind == "asm") {
    if (k) throw UsageError("--trapezoid does not apply to ASMs");
    for (const auto& v : validate_asm(parse_asm(text))) problems.push_back(v.message);
  } else {
    problems = family_problems(parse_triangle(text), kTriangleKinds.at(kind), k);
  }
  if (problems.empty()) {
    std::cout << "valid\n";
    return Status::Ok;
  }
  for (const auto& p : problems) std::cout << p << '\n';
  return Status::Failed;
}

Status run_convert(const std::string& from, const std::string& to, std::optional<int> k, bool json, const std::string& file) {
  const std::string text = slurp(file);
  const std::string pair = from + "->" + to;
  if (pair == "asm->gog") {
    const Asm a = parse_asm(text);
    const auto v = validate_asm(a);
    if (!v.empty()) throw NotAMember("input is not an ASM: " + v.front().message);
    print_triangle(asm_to_gog(a), json);
    return Status::Ok;
  }
  const GtTriangle t = parse_triangle(text);
  if (pair == "gog->asm") {
    require(t, Family::Gog);
    print_asm(gog_to_asm(t), json);
  } else if (pair == "magog->gogam") {
    require(t, Family::Magog, k);
    print_triangle(schutzenberger(t), json);
  } else if (pair == "gogam->magog") {
    require(t, Family::Gogam, k);
    print_triangle(schutzenberger(t), json);
  } else if (pair == "gog->gogam" || pair == "gogam->gog") {
    if (k != 2) throw UsageError("conversion between gog and gogam needs --trapezoid 2");
    if (pair == "gog->gogam") {
      require(t, Family::Gog, 2);
      print_triangle(gog_to_gogam_n2(t).triangle, json);
    } else {
      require(t, Family::Gogam, 2);
      print_triangle(gogam_to_gog_n2(t).triangle, json);
    }
  } else if (pair == "gt->ssyt") {
    require(t, Family::Gt);
    const Ssyt s = gt_to_ssyt(t);
    if (json)
      std::cout << ssyt_to_json(s).dump() << '\n';
    else
      std::cout << format_ssyt(s);
  } else {
    throw UsageError("unsupported conversion " + from + " -> " + to);
  }
  return Status::Ok;
}

FamilySpec family_spec(const std::string& kind, int n, std::optional<int> k, std::optional<int> bound) {
  if (n < 1) throw UsageError("--n must be positive");
  if (kind == "gt" && !bound) throw UsageError("--kind gt needs --bound");
  if (kind == "gt" && k) throw UsageError("--k does not apply to --kind gt");
  if (kind != "gt" && bound) throw UsageError("--bound only applies to --kind gt");
  if (k && *k < 1) throw UsageError("--k must be positive");
  return {kTriangleKinds.at(kind), n, k, bound};
}

Status run_count(const std::string& kind, int n, std::optional<int> k, std::optional<int> bound, bool json) {
  BigInt c = 0;
  if (kind == "asm") {
    if (k || bound) throw UsageError("--k and --bound do not apply to ASMs");
    if (n < 1) throw UsageError("--n must be positive");
    for_each_asm(n, [&](const Asm&) { ++c; });
  } else {
    c = count(family_spec(kind, n, k, bound));
  }
  if (json)
    std::cout << nlohmann::json{{"kind", kind}, {"n", n}, {"count", c.str()}}.dump() << '\n';
  else
    std::cout << c << '\n';
  return Status::Ok;
}

Status run_enumerate(const std::string& kind, int n, std::optional<int> k, std::optional<int> bound, bool json) {
  bool first = true;
  auto separator = [&] {
    if (!first) std::cout << (json ? "" : "\n");
    first = false;
  };
  if (kind == "asm") {
    if (k || bound) throw UsageError("--k and --bound do not apply to ASMs");
    if (n < 1) throw UsageError("--n must be positive");
    for_each_asm(n, [&](const Asm& a) {
      separator();
      print_asm(a, json);
    });
  } else {
    for_each_member(family_spec(kind, n, k, bound), [&](const GtTriangle& t) {
      separator();
      print_triangle(t, json);
    });
  }
  return Status::Ok;
}

Status run_verify(const std::string& suite, int n, const VerifyOptions& opt, bool json) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite " + suite);
  if (n < 1) throw UsageError("--n must be positive");
  const Report r = verify(suite, n, opt);
  if (json)
    std::cout << report_to_json(r).dump(2) << '\n';
  else
    std::cout << format_report(r);
  return r.passed() ? Status::Ok : Status::Failed;
}

Status run_stats(int n_max, bool json) {
  if (n_max < 2) throw UsageError("--n must be at least 2");
  nlohmann::json out = nlohmann::json::array();
  bool all_preserved = true;
  for (int n = 2; n <= n_max; ++n) {
    std::map<std::string, long> rules;
    std::map<int, long> gog_x11;
    std::map<int, long> gogam_x11;
    long preserved = 0;
    long total = 0;
    for_each_member({Family::Gog, n, 2}, [&](const GtTriangle& g) {
      const auto fwd = gog_to_gogam_n2(g);
      for (const auto& s : fwd.trace) ++rules[rule_name(s.rule)];
      ++gog_x11[statistic_x11(g)];
      ++gogam_x11[statistic_x11(fwd.triangle)];
      preserved += statistic_x11(g) == statistic_x11(fwd.triangle);
      ++total;
    });
    all_preserved = all_preserved && preserved == total;
    if (json) {
      nlohmann::json table = nlohmann::json::array();
      for (const auto& [v, c] : gog_x11) table.push_back({{"x11", v}, {"gog", c}, {"gogam", gogam_x11[v]}});
      out.push_back({{"n", n}, {"trapezoids", total}, {"rules", rules}, {"x11", table}, {"preserved", preserved}});
      continue;
    }
    std::cout << "n=" << n << ": " << total << " (n,2) trapezoids\n  rules:";
    for (RuleTag r : kAllRules) std::cout << ' ' << rule_name(r) << '=' << rules[rule_name(r)];
    std::cout << "\n  x11  gog  gogam\n";
    for (const auto& [v, c] : gog_x11) std::cout << "  " << v << "  " << c << "  " << gogam_x11[v] << '\n';
    std::cout << "  x11 preserved on " << preserved << " of " << total << '\n';
  }
  if (json) std::cout << out.dump(2) << '\n';
  return all_preserved ? Status::Ok : Status::Failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gog, Magog and GOGAm triangles, alternating sign matrices and the (n,2) trapezoid bijection"};
  app.require_subcommand(1);

  std::string kind;
  std::string from;
  std::string to;
  std::string file;
  std::string suite;
  std::optional<int> trapezoid;
  std::optional<int> k;
  std::optional<int> bound;
  int n = 0;
  bool json = false;
  unsigned threads = 1;

  const std::vector<std::string> triangle_kinds{"gt", "gog", "magog", "gogam", "asm"};

  auto* validate = app.add_subcommand("validate", "check that FILE holds a member of a family");
  validate->add_option("--kind", kind)->required()->check(CLI::IsMember(triangle_kinds));
  validate->add_option("--trapezoid", trapezoid, "also require the (n,K) trapezoid form");
  validate->add_option("file", file)->required();

  auto* convert = app.add_subcommand("convert", "convert between object families");
  convert->add_option("--from", from)->required()->check(CLI::IsMember({"gt", "gog", "magog", "gogam", "asm"}));
  convert->add_option("--to", to)->required()->check(CLI::IsMember({"gog", "magog", "gogam", "asm", "ssyt"}));
  convert->add_option("--trapezoid", trapezoid, "trapezoid width; gog <-> gogam needs 2");
  convert->add_flag("--json", json);
  convert->add_option("file", file)->required();

  auto* schutz = app.add_subcommand("schutzenberger", "apply the Schutzenberger involution to a GT triangle");
  schutz->add_flag("--json", json);
  schutz->add_option("file", file)->required();

  auto* count_cmd = app.add_subcommand("count", "count the members of a family");
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list the members of a family, separated by blank lines");
  for (auto* sub : {count_cmd, enumerate_cmd}) {
    sub->add_option("--kind", kind)->required()->check(CLI::IsMember(triangle_kinds));
    sub->add_option("--n", n)->required();
    sub->add_option("--k", k, "trapezoid width");
    sub->add_option("--bound", bound, "entry bound, required for --kind gt");
    sub->add_flag("--json", json);
  }
  enumerate_cmd->add_option("--threads", threads, "accepted for symmetry with verify; generation is sequential");

  auto* verify_cmd = app.add_subcommand("verify", "run an exhaustive property suite");
  verify_cmd->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--n", n)->required();
  verify_cmd->add_option("--bound", bound, "entry bound for raw GT triangles (default 5)");
  verify_cmd->add_option("--threads", threads);
  verify_cmd->add_flag("--json", json);

  auto* stats = app.add_subcommand("stats", "rule histogram and x(1,1) table for the (n,2) bijection");
  stats->add_option("--n", n)->required();
  stats->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(Status::Usage);
  }

  try {
    Status status = Status::Ok;
    if (*validate) {
      status = run_validate(kind, trapezoid, file);
    } else if (*convert) {
      status = run_convert(from, to, trapezoid, json, file);
    } else if (*schutz) {
      const GtTriangle t = parse_triangle(slurp(file));
      require(t, Family::Gt);
      print_triangle(schutzenberger(t), json);
    } else if (*count_cmd) {
      status = run_count(kind, n, k, bound, json);
    } else if (*enumerate_cmd) {
      status = run_enumerate(kind, n, k, bound, json);
    } else if (*verify_cmd) {
      VerifyOptions opt;
      if (bound) opt.bound = *bound;
      opt.threads = std::max(1u, threads);
      status = run_verify(suite, n, opt, json);
    } else if (*stats) {
      status = run_stats(n, json);
    }
    return static_cast<int>(status);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(Status::Usage);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(Status::Usage);
  } catch (const NotAMember& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(Status::Failed);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return static_cast<int>(Status::Failed);
  }
}
