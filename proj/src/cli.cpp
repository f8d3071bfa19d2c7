#include "gcard/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gcard/categorified.hpp"
#include "gcard/cycle_stats.hpp"
#include "gcard/equivariant.hpp"
#include "gcard/groupoid.hpp"
#include "gcard/json_io.hpp"
#include "gcard/limits.hpp"

namespace gcard {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { json, csv, text };

struct Common {
  std::string format = "json";
  std::optional<unsigned> max_n;

  Format fmt() const {
    if (format == "csv") return Format::csv;
    if (format == "text") return Format::text;
    return Format::json;
  }

  Limits limits() const {
    Limits l = Limits::from_environment();
    if (max_n) l.max_enumeration_n = *max_n;
    return l;
  }
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  sub->add_option("--max-n", common.max_n, "Override the enumeration cap (also GROUPOID_CARD_MAX_N)");
}

unsigned parse_entry(const std::string& token, const std::string& whole) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos || token.size() > 9)
    throw UsageError("p-vector '" + whole + "' must be comma-separated natural numbers");
  return static_cast<unsigned>(std::stoul(token));
}

PVector parse_pvector(const std::string& text, std::size_t n) {
  std::vector<unsigned> entries;
  if (!text.empty()) {
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) entries.push_back(parse_entry(token, text));
    if (text.back() == ',') throw UsageError("p-vector '" + text + "' has a trailing comma");
  }
  if (entries.size() != n)
    throw UsageError("p-vector '" + text + "' has " + std::to_string(entries.size()) + " entries but n = " +
                     std::to_string(n));
  return PVector(std::move(entries));
}

/// "k=K" or "K": the p-vector with a single 1 in position K.
PVector parse_p_one(const std::string& text, std::size_t n) {
  std::string value = text;
  if (value.rfind("k=", 0) == 0) value = value.substr(2);
  const unsigned k = parse_entry(value, text);
  if (k < 1 || k > n) throw UsageError("--p-one needs 1 <= k <= n, got '" + text + "'");
  return PVector::unit(n, k, 1);
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ----------------------------------------------------------- verify-lemma

struct LemmaArgs {
  Common common;
  std::size_t n = 0;
  std::optional<std::string> p;
  bool all_p = false;
  unsigned max_entry = 2;
  std::optional<std::size_t> max_weight;
  std::string method = "brute";
};

int cmd_verify_lemma(const LemmaArgs& a, std::ostream& out) {
  const Limits limits = a.common.limits();
  const MomentMethod method = parse_moment_method(a.method);
  if (method == MomentMethod::monte_carlo) throw UsageError("verify-lemma is exact; use the montecarlo subcommand");
  if (a.all_p == a.p.has_value()) throw UsageError("verify-lemma needs exactly one of --p or --all-p");

  std::vector<PVector> suite;
  if (a.p)
    suite.push_back(parse_pvector(*a.p, a.n));
  else
    suite = bounded_pvectors(a.n, a.max_entry, a.max_weight.value_or(a.n));

  std::vector<MomentReport> reports;
  bool all_equal = true;
  for (const PVector& p : suite) {
    reports.push_back(verify_cll(a.n, p, method, limits));
    all_equal = all_equal && reports.back().equal.value_or(false);
  }

  switch (a.common.fmt()) {
    case Format::json:
      if (!a.all_p) {
        print_json(out, reports.front());
      } else {
        json j;
        j["command"] = "verify-lemma";
        j["n"] = a.n;
        j["method"] = to_string(method);
        j["max_entry"] = a.max_entry;
        j["max_weight"] = a.max_weight.value_or(a.n);
        j["count"] = reports.size();
        j["all_equal"] = all_equal;
        j["failures"] = json::array();
        for (const auto& r : reports)
          if (!r.equal.value_or(false)) j["failures"].push_back(r.p);
        j["reports"] = reports;
        print_json(out, j);
      }
      break;
    case Format::csv:
      out << moment_csv_header() << '\n';
      for (const auto& r : reports) out << to_csv_row(r) << '\n';
      break;
    case Format::text:
      for (const auto& r : reports)
        out << "n=" << r.n << " p=" << r.p.str() << " E=" << r.lhs->str() << " formula=" << r.rhs->str()
            << (r.equal.value_or(false) ? " ok" : " MISMATCH") << '\n';
      out << reports.size() << " instance(s), all equal: " << yes_no(all_equal) << '\n';
      break;
  }
  return all_equal ? kExitPass : kExitCheckFailed;
}

// ---------------------------------------------------- verify-categorified

int cmd_verify_categorified(const LemmaArgs& a, std::ostream& out) {
  const Limits limits = a.common.limits();
  if (a.all_p == a.p.has_value()) throw UsageError("verify-categorified needs exactly one of --p or --all-p");
  require_enumerable(static_cast<unsigned>(a.n), limits, "verify-categorified");

  std::vector<PVector> suite;
  if (a.p)
    suite.push_back(parse_pvector(*a.p, a.n));
  else
    suite = bounded_pvectors(a.n, a.max_entry, a.max_weight.value_or(a.n));

  std::vector<CategorifiedReport> reports;
  bool all_passed = true;
  for (const PVector& p : suite) {
    reports.push_back(verify_categorified(a.n, p, limits));
    all_passed = all_passed && reports.back().passed();
  }

  switch (a.common.fmt()) {
    case Format::json:
      if (!a.all_p) {
        print_json(out, reports.front());
      } else {
        json j;
        j["command"] = "verify-categorified";
        j["n"] = a.n;
        j["max_entry"] = a.max_entry;
        j["max_weight"] = a.max_weight.value_or(a.n);
        j["count"] = reports.size();
        j["all_passed"] = all_passed;
        j["failures"] = json::array();
        for (const auto& r : reports)
          if (!r.passed()) j["failures"].push_back(r.p);
        j["reports"] = reports;
        print_json(out, j);
      }
      break;
    case Format::csv:
      out << categorified_csv_header() << '\n';
      for (const auto& r : reports) out << to_csv_row(r) << '\n';
      break;
    case Format::text:
      for (const auto& r : reports)
        out << "n=" << r.n << " p=" << r.p.str() << " |Q|=" << r.q_size << " components=" << r.lhs_skeleton.size()
            << " |C|=" << r.lhs_card << " |rhs|=" << r.rhs_card << " skeletons match: " << yes_no(r.equivalent)
            << " |Q|/n! = E: " << yes_no(r.bridge_check) << '\n';
      out << reports.size() << " instance(s), all passed: " << yes_no(all_passed) << '\n';
      break;
  }
  return all_passed ? kExitPass : kExitCheckFailed;
}

// --------------------------------------------------------------- skeleton

struct SkeletonArgs {
  Common common;
  long long n = 0;
  bool via_action = false;
};

GroupoidSkeleton conjugation_skeleton(std::size_t n, const Limits& limits) {
  require_enumerable(static_cast<unsigned>(n), limits, "skeleton --via-action");
  const FiniteGroup sn = make_symmetric(n);
  const GroupAction action = conjugation_action(sn, limits);
  std::vector<SkeletonComponent> components;
  for (const Orbit& o : orbit_decomposition(action))
    components.push_back({o.stabilizer_order, cycle_type(sn.permutation(sn.element(o.representative))).label()});
  return GroupoidSkeleton(std::move(components));
}

int cmd_skeleton(const SkeletonArgs& a, std::ostream& out) {
  const Limits limits = a.common.limits();
  const GroupoidSkeleton by_partitions = perm_groupoid_skeleton(a.n, limits);
  const GroupoidSkeleton skeleton =
      (a.via_action && a.n >= 0) ? conjugation_skeleton(static_cast<std::size_t>(a.n), limits) : by_partitions;
  const Rational card = cardinality(skeleton);
  const Rational expected = a.n >= 0 ? Rational(1) : Rational(0);
  const bool agrees = skeletons_equivalent(skeleton, by_partitions, EquivalenceMode::strict);
  const bool ok = card == expected && agrees;

  switch (a.common.fmt()) {
    case Format::json: {
      json j;
      j["n"] = a.n;
      j["method"] = a.via_action ? "conjugation_action" : "partitions";
      j["components"] = json(skeleton)["components"];
      j["cardinality"] = card;
      j["expected"] = expected;
      j["equal"] = card == expected;
      if (a.via_action) j["agrees_with_partitions"] = agrees;
      print_json(out, j);
      break;
    }
    case Format::csv:
      out << "label,aut_order\n";
      for (const auto& c : skeleton.components()) out << '"' << c.label.value_or("") << "\"," << c.aut_order << '\n';
      break;
    case Format::text:
      for (const auto& c : skeleton.components()) out << c.label.value_or("?") << ": " << c.aut_order << '\n';
      out << "cardinality " << card << '\n';
      break;
  }
  return ok ? kExitPass : kExitCheckFailed;
}

// ------------------------------------------------------------------ stats

struct StatsArgs {
  Common common;
  std::size_t n = 0;
};

int cmd_stats(const StatsArgs& a, std::ostream& out) {
  if (a.n < 1) throw UsageError("stats needs n >= 1");
  const Limits limits = a.common.limits();
  bool all_equal = true;

  json counts = json::array();
  Rational total;
  for (std::size_t k = 1; k <= a.n; ++k) {
    const Rational value = expected_cycle_count(a.n, k, limits);
    const Rational target = reciprocal(BigInt(k));
    total += value;
    all_equal = all_equal && value == target;
    counts.push_back(json{{"k", k}, {"value", value}, {"target", target}, {"equal", value == target}});
  }
  const Rational harmonic = expected_total_cycles(a.n);
  all_equal = all_equal && total == harmonic;

  json pairs = json::array();
  for (std::size_t j = 1; j <= a.n; ++j)
    for (std::size_t k = 1; j + k <= a.n; ++k) {
      if (j == k) continue;
      const MomentReport r = uncorrelated_check(a.n, j, k, limits);
      all_equal = all_equal && r.equal.value_or(false);
      pairs.push_back(json{{"j", j}, {"k", k}, {"lhs", *r.lhs}, {"rhs", *r.rhs}, {"equal", *r.equal}});
    }

  switch (a.common.fmt()) {
    case Format::json: {
      json j;
      j["n"] = a.n;
      j["method"] = "cycle_type";
      j["expected_cycle_counts"] = counts;
      j["total"] = total;
      j["harmonic"] = harmonic;
      j["harmonic_equal"] = total == harmonic;
      j["uncorrelated"] = pairs;
      j["all_equal"] = all_equal;
      print_json(out, j);
      break;
    }
    case Format::csv:
      out << "k,value,target,equal\n";
      for (const auto& c : counts)
        out << c["k"].get<std::size_t>() << ',' << c["value"].get<std::string>() << ','
            << c["target"].get<std::string>() << ',' << (c["equal"].get<bool>() ? "true" : "false") << '\n';
      break;
    case Format::text:
      for (const auto& c : counts)
        out << "E(c_" << c["k"].get<std::size_t>() << ") = " << c["value"].get<std::string>() << '\n';
      out << "E(total cycles) = " << total << ", H_" << a.n << " = " << harmonic << '\n';
      out << pairs.size() << " uncorrelated pair(s), all equal: " << yes_no(all_equal) << '\n';
      break;
  }
  return all_equal ? kExitPass : kExitCheckFailed;
}

// ------------------------------------------------------------- montecarlo

struct MonteCarloArgs {
  Common common;
  std::size_t n = 0;
  std::optional<std::string> p;
  std::optional<std::string> p_one;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  double threshold = 4.0;
};

int cmd_montecarlo(const MonteCarloArgs& a, std::ostream& out) {
  if (a.p.has_value() == a.p_one.has_value()) throw UsageError("montecarlo needs exactly one of --p or --p-one");
  if (a.samples < 2) throw UsageError("montecarlo needs --samples >= 2");
  const PVector p = a.p ? parse_pvector(*a.p, a.n) : parse_p_one(*a.p_one, a.n);
  const MomentReport r = monte_carlo_moment(a.n, p, a.samples, a.seed);
  const bool within = std::fabs(*r.z_score) <= a.threshold;

  switch (a.common.fmt()) {
    case Format::json: {
      json j = r;
      j["threshold"] = a.threshold;
      j["within_threshold"] = within;
      print_json(out, j);
      break;
    }
    case Format::csv:
      out << moment_csv_header() << '\n' << to_csv_row(r) << '\n';
      break;
    case Format::text:
      out << std::setprecision(10) << "estimate " << *r.estimate << " +- " << *r.standard_error << ", target "
          << r.rhs->str() << ", z = " << *r.z_score << (within ? "" : " (outside threshold)") << '\n';
      break;
  }
  return within ? kExitPass : kExitCheckFailed;
}

// -------------------------------------------------------- theorem-general

struct TheoremArgs {
  Common common;
  std::optional<std::string> builtin;
  std::optional<std::size_t> n;
  std::optional<std::string> p;
  std::optional<std::string> group;
  std::optional<std::string> functor_path;
};

EquivariantFunctor load_functor(const TheoremArgs& a, const Limits& limits, std::string& description) {
  if (a.builtin.has_value() == a.functor_path.has_value())
    throw UsageError("theorem-general needs exactly one of --builtin or --functor");
  if (a.functor_path) {
    std::ifstream in(*a.functor_path);
    if (!in) throw UsageError("cannot open functor file '" + *a.functor_path + "'");
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw FormatError(std::string("functor file is not valid JSON: ") + e.what());
    }
    description = *a.functor_path;
    return functor_from_json(j, limits);
  }
  const std::string& name = *a.builtin;
  description = name;
  if (name == "trivial") {
    std::string group = a.group.value_or("");
    if (group.empty()) {
      if (!a.n) throw UsageError("--builtin trivial needs --group or --n");
      group = "S" + std::to_string(*a.n);
    }
    return make_trivial_functor(group_from_name(group, limits));
  }
  if (!a.n) throw UsageError("--builtin " + name + " needs --n");
  if (name == "fixed-points") return make_fixed_point_functor(*a.n, limits);
  if (name == "cycle-tuples") {
    if (!a.p) throw UsageError("--builtin cycle-tuples needs --p");
    return make_cycle_tuple_functor(*a.n, parse_pvector(*a.p, *a.n), limits);
  }
  throw UsageError("unknown built-in functor '" + name + "' (trivial, fixed-points, cycle-tuples)");
}

int cmd_theorem_general(const TheoremArgs& a, std::ostream& out, std::ostream& err) {
  const Limits limits = a.common.limits();
  std::string description;
  const EquivariantFunctor functor = load_functor(a, limits, description);

  GeneralTheoremReport report;
  try {
    report = verify_general_theorem(functor, limits);
  } catch (const ActionError& e) {
    err << "error: " << e.what() << '\n';
    json j;
    j["functor"] = description;
    j["functor_validation"] = e.report();
    print_json(out, j);
    return kExitUsage;
  }

  switch (a.common.fmt()) {
    case Format::json: {
      json j;
      j["functor"] = description;
      j["group"] = functor.group().name();
      const json body = report;
      for (const auto& [key, value] : body.items()) j[key] = value;
      print_json(out, j);
      break;
    }
    case Format::csv:
      out << "functor,group,expected_size,elements_cardinality,equal,orbits\n"
          << description << ',' << functor.group().name() << ',' << report.expected_size << ','
          << report.elements_cardinality << ',' << (report.equal ? "true" : "false") << ',' << report.orbits.size()
          << '\n';
      break;
    case Format::text:
      out << description << " on " << functor.group().name() << ": E(|F|) = " << report.expected_size
          << ", |int F| = " << report.elements_cardinality << (report.equal ? ", equal" : ", MISMATCH") << '\n';
      break;
  }
  return report.equal ? kExitPass : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact groupoid cardinalities and the cycle length lemma", "groupoid-card"};
  app.require_subcommand(1);

  LemmaArgs lemma;
  auto* verify_lemma = app.add_subcommand("verify-lemma", "Check E(prod falling powers of c_k) against prod 1/k^p_k");
  add_common(verify_lemma, lemma.common);
  verify_lemma->add_option("--n", lemma.n, "Degree")->required();
  verify_lemma->add_option("--p", lemma.p, "Comma-separated p-vector of length n");
  verify_lemma->add_flag("--all-p", lemma.all_p, "Sweep every bounded p-vector");
  verify_lemma->add_option("--max-entry", lemma.max_entry, "Sweep bound on each entry")->capture_default_str();
  verify_lemma->add_option("--max-weight", lemma.max_weight, "Sweep bound on the weight (default n)");
  verify_lemma->add_option("--method", lemma.method, "Exact method")
      ->check(CLI::IsMember({"brute", "cycle_type"}))
      ->capture_default_str();

  LemmaArgs categorified;
  auto* verify_cat = app.add_subcommand("verify-categorified", "Compare the decorated groupoid with its product form");
  add_common(verify_cat, categorified.common);
  verify_cat->add_option("--n", categorified.n, "Degree")->required();
  verify_cat->add_option("--p", categorified.p, "Comma-separated p-vector of length n");
  verify_cat->add_flag("--all-p", categorified.all_p, "Sweep every bounded p-vector");
  verify_cat->add_option("--max-entry", categorified.max_entry, "Sweep bound on each entry")->capture_default_str();
  verify_cat->add_option("--max-weight", categorified.max_weight, "Sweep bound on the weight (default n)");

  SkeletonArgs skel;
  auto* skeleton = app.add_subcommand("skeleton", "Skeleton of the groupoid of n-element sets with a permutation");
  add_common(skeleton, skel.common);
  skeleton->add_option("--n", skel.n, "Degree (negative gives the empty groupoid)")->required();
  skeleton->add_flag("--via-action", skel.via_action, "Compute from the conjugation action instead of partitions");

  StatsArgs st;
  auto* stats = app.add_subcommand("stats", "Exact E(c_k), harmonic total and uncorrelated pairs");
  add_common(stats, st.common);
  stats->add_option("--n", st.n, "Degree")->required();

  MonteCarloArgs mc;
  auto* montecarlo = app.add_subcommand("montecarlo", "Estimate a falling-power moment by sampling");
  add_common(montecarlo, mc.common);
  montecarlo->add_option("--n", mc.n, "Degree")->required();
  montecarlo->add_option("--p", mc.p, "Comma-separated p-vector of length n");
  montecarlo->add_option("--p-one", mc.p_one, "Single cycle length, as k=K");
  montecarlo->add_option("--samples", mc.samples, "Number of samples")->capture_default_str();
  montecarlo->add_option("--seed", mc.seed, "Seed for mt19937_64")->capture_default_str();
  montecarlo->add_option("--threshold", mc.threshold, "Largest accepted |z|")->capture_default_str();

  TheoremArgs th;
  auto* theorem = app.add_subcommand("theorem-general", "Check E(|F|) = |int F| for a conjugation-equivariant F");
  add_common(theorem, th.common);
  theorem->add_option("--builtin", th.builtin, "trivial, fixed-points or cycle-tuples")
      ->check(CLI::IsMember({"trivial", "fixed-points", "cycle-tuples"}));
  theorem->add_option("--functor", th.functor_path, "Functor JSON file");
  theorem->add_option("--n", th.n, "Degree for the S_n built-ins");
  theorem->add_option("--p", th.p, "p-vector for cycle-tuples");
  theorem->add_option("--group", th.group, "Group for the trivial functor: S<n> or Z<k>");

  std::vector<const char*> argv{"groupoid-card"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify_lemma) return cmd_verify_lemma(lemma, out);
    if (*verify_cat) return cmd_verify_categorified(categorified, out);
    if (*skeleton) return cmd_skeleton(skel, out);
    if (*stats) return cmd_stats(st, out);
    if (*montecarlo) return cmd_montecarlo(mc, out);
    if (*theorem) return cmd_theorem_general(th, out, err);
  } catch (const CapExceeded& e) {
    err << "error: cap exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gcard
