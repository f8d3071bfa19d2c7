// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gcard/categorified.hpp"
#include "gcard/cycle_stats.hpp"
#include "gcard/equivariant.hpp"
#include "gcard/groupoid.hpp"

using namespace gcard;

namespace {

constexpr std::uint64_t kMonteCarloSeed = 42;
constexpr std::uint64_t kSkeletonSeed = 0x5eed5eed;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

/// Orbit-stabilizer and out-degree checks on every weak quotient the suite builds.
struct ActionAudit {
  std::size_t actions = 0;
  std::size_t orbits = 0;
  std::size_t sampled = 0;
  std::vector<std::string> failures;

  void audit(const GroupAction& action, const std::string& where) {
    ++actions;
    if (action.validation().sampled) ++sampled;
    const BigInt order(action.group().order());
    for (const Orbit& o : orbit_decomposition(action)) {
      ++orbits;
      if (o.stabilizer_order * o.size != order) failures.push_back(where + ": |Aut| * |orbit| != |G|");
    }
    if (cardinality_via_outdegrees(action) != cardinality(weak_quotient(action)))
      failures.push_back(where + ": out-degree sum differs from weak-quotient cardinality");
  }
};

std::string pstr(const PVector& p) { return "(" + p.str() + ")"; }

std::vector<std::pair<std::size_t, PVector>> lemma_suite() {
  std::vector<std::pair<std::size_t, PVector>> s;
  for (std::size_t n = 0; n <= 7; ++n)
    for (const PVector& p : bounded_pvectors(n, 2, n + 2)) s.emplace_back(n, p);
  return s;
}

std::vector<std::pair<std::size_t, PVector>> categorified_suite() {
  std::vector<std::pair<std::size_t, PVector>> s;
  for (std::size_t n = 0; n <= 6; ++n)
    for (const PVector& p : bounded_pvectors(n, 2, n)) s.emplace_back(n, p);
  return s;
}

std::vector<FiniteGroup> builtin_groups_up_to_24() {
  std::vector<FiniteGroup> groups;
  for (std::size_t k = 1; k <= 24; ++k) groups.push_back(make_cyclic(k));
  for (std::size_t n = 0; n <= 4; ++n) groups.push_back(make_symmetric(n));
  for (std::size_t a = 2; a <= 12; ++a)
    for (std::size_t b = a; a * b <= 24; ++b) groups.push_back(make_product(make_cyclic(a), make_cyclic(b)));
  for (std::size_t k = 2; k <= 4; ++k) groups.push_back(make_product(make_cyclic(k), make_symmetric(3)));
  groups.push_back(make_product(make_product(make_cyclic(2), make_cyclic(2)), make_cyclic(2)));
  return groups;
}

GroupoidSkeleton random_skeleton(std::mt19937_64& rng) {
  std::vector<SkeletonComponent> c(uniform_below(rng, 7));
  for (auto& comp : c) comp.aut_order = BigInt(1 + uniform_below(rng, 720));
  return GroupoidSkeleton(std::move(c));
}

}  // namespace

int main() {
  ActionAudit audit;
  std::map<std::pair<std::size_t, PVector>, Rational> brute_values;
  int failed = 0;

  auto run = [&](int id, const std::string& title, const std::function<void(Outcome&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      body(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.pass) ++failed;
    std::cout << (out.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << id << "  " << title << "  ["
              << out.detail.str() << std::fixed << std::setprecision(1) << secs << "s]" << std::endl;
  };

  run(1, "Cycle Length Lemma, exhaustive brute force, n <= 7, entries <= 2, weight <= n+2", [&](Outcome& o) {
    std::size_t count = 0;
    for (const auto& [n, p] : lemma_suite()) {
      const Rational lhs = expected_product_brute(n, p);
      brute_values.emplace(std::make_pair(n, p), lhs);
      o.require(lhs == cll_rhs(n, p), "n=" + std::to_string(n) + " p=" + pstr(p));
      ++count;
    }
    o.detail << count << " instances exact; ";
  });

  run(2, "cycle-type method equals brute force on the criterion-1 suite", [&](Outcome& o) {
    std::size_t count = 0;
    for (const auto& [n, p] : lemma_suite()) {
      const auto it = brute_values.find({n, p});
      const Rational brute = it != brute_values.end() ? it->second : expected_product_brute(n, p);
      o.require(expected_product_by_type(n, p) == brute, "n=" + std::to_string(n) + " p=" + pstr(p));
      ++count;
    }
    o.detail << count << " instances exact; ";
  });

  run(3, "E(c_k) = 1/k for 1 <= k <= n <= 10 (cycle-type method)", [&](Outcome& o) {
    std::size_t count = 0;
    for (std::size_t n = 1; n <= 10; ++n)
      for (std::size_t k = 1; k <= n; ++k, ++count)
        o.require(expected_cycle_count(n, k) == reciprocal(BigInt(k)),
                  "n=" + std::to_string(n) + " k=" + std::to_string(k));
    o.detail << count << " pairs; ";
  });

  run(4, "sum_k E(c_k) = H_n for 1 <= n <= 10", [&](Outcome& o) {
    for (std::size_t n = 1; n <= 10; ++n) {
      Rational total, harmonic;
      for (std::size_t k = 1; k <= n; ++k) {
        total += expected_cycle_count(n, k);
        harmonic += Rational(BigInt(1), BigInt(k));
      }
      o.require(total == harmonic && expected_total_cycles(n) == harmonic, "n=" + std::to_string(n));
      if (n == 10) o.detail << "H_10 = " << harmonic << "; ";
    }
  });

  run(5, "E(c_j c_k) = E(c_j) E(c_k) for j != k, j + k <= n <= 8", [&](Outcome& o) {
    std::size_t count = 0;
    for (std::size_t n = 2; n <= 8; ++n)
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t k = 1; j + k <= n; ++k) {
          if (j == k) continue;
          const MomentReport r = uncorrelated_check(n, j, k);
          o.require(r.equal.value_or(false), "n=" + std::to_string(n) + " j=" + std::to_string(j) +
                                                 " k=" + std::to_string(k));
          ++count;
        }
    o.detail << count << " triples; ";
  });

  run(6, "|Perm_n| = 1: partitions for n <= 12, conjugation weak quotient for n <= 6", [&](Outcome& o) {
    for (long long n = 0; n <= 12; ++n)
      o.require(cardinality(perm_groupoid_skeleton(n)) == Rational(1), "partition skeleton n=" + std::to_string(n));
    for (std::size_t n = 0; n <= 6; ++n) {
      const GroupAction action = conjugation_action(make_symmetric(n));
      const GroupoidSkeleton quotient = weak_quotient(action);
      o.require(cardinality(quotient) == Rational(1), "weak quotient n=" + std::to_string(n));
      o.require(skeletons_equivalent(quotient, perm_groupoid_skeleton(static_cast<long long>(n))),
                "skeletons disagree at n=" + std::to_string(n));
      audit.audit(action, "S_" + std::to_string(n) + " conjugation");
    }
    o.detail << "13 + 7 instances; ";
  });

  std::vector<CategorifiedReport> cat_reports;
  run(7, "categorified lemma, skeleton level, n <= 6, entries <= 2, weight <= n", [&](Outcome& o) {
    std::size_t sampled = 0;
    for (const auto& [n, p] : categorified_suite()) {
      CategorifiedReport r = verify_categorified(n, p);
      const std::string where = "n=" + std::to_string(n) + " p=" + pstr(p);
      o.require(r.equivalent, "aut-order multisets differ at " + where);
      o.require(r.lhs_card == r.rhs_card, "cardinalities differ at " + where);
      o.require(r.action_validation.valid, "Q action invalid at " + where);
      if (r.action_validation.sampled) ++sampled;
      audit.audit(decorated_action(n, p).action, "Q " + where);
      cat_reports.push_back(std::move(r));
    }
    o.detail << cat_reports.size() << " instances, " << sampled << " with sampled action validation; ";
  });

  run(8, "bridge identity |Q_p|/n! = E(prod falling powers) on the criterion-7 suite", [&](Outcome& o) {
    o.require(!cat_reports.empty(), "criterion 7 produced no reports");
    for (const auto& r : cat_reports) {
      const Rational ratio(BigInt(r.q_size), factorial(static_cast<unsigned>(r.n)));
      o.require(r.bridge_check && ratio == expected_product_brute(r.n, r.p),
                "n=" + std::to_string(r.n) + " p=" + pstr(r.p));
    }
    o.detail << cat_reports.size() << " instances; ";
  });

  run(9, "E(|F|) = |int F| for trivial, fixed-point, cycle-tuple and Cayley-table functors", [&](Outcome& o) {
    auto check = [&](const EquivariantFunctor& f, const std::string& where) {
      const GeneralTheoremReport r = verify_general_theorem(f);
      o.require(r.equal, where);
      audit.audit(category_of_elements(f), where);
    };
    std::size_t trivial = 0;
    for (const FiniteGroup& g : builtin_groups_up_to_24()) {
      check(make_trivial_functor(g), "trivial on " + g.name());
      ++trivial;
    }
    for (std::size_t n = 0; n <= 6; ++n) check(make_fixed_point_functor(n), "fixed points on S" + std::to_string(n));
    std::size_t tuples = 0;
    for (const auto& [n, p] : categorified_suite()) {
      check(make_cycle_tuple_functor(n, p), "cycle tuples n=" + std::to_string(n) + " p=" + pstr(p));
      ++tuples;
    }
    const FiniteGroup d4 = fixtures::d4(), q8 = fixtures::q8(), d3 = fixtures::d3();
    check(fixtures::centralizer_functor(d4), "centralizers on D4");
    o.require(expected_size(fixtures::centralizer_functor(d4)) == Rational(5), "D4 has 5 classes");
    check(fixtures::square_root_functor(q8), "square roots on Q8");
    check(fixtures::centralizer_functor(q8), "centralizers on Q8");
    check(fixtures::factorization_functor(d3), "factorizations on D3");
    o.detail << trivial << " trivial, 7 fixed-point, " << tuples << " cycle-tuple, 4 Cayley-table functors; ";
  });

  run(10, "cardinality additive/multiplicative; orbit-stabilizer and out-degree on all weak quotients",
      [&](Outcome& o) {
        std::mt19937_64 rng(kSkeletonSeed);
        const int pairs = 2000;
        for (int i = 0; i < pairs; ++i) {
          const GroupoidSkeleton a = random_skeleton(rng), b = random_skeleton(rng);
          o.require(cardinality(coproduct(a, b)) == cardinality(a) + cardinality(b), "additivity");
          o.require(cardinality(product(a, b)) == cardinality(a) * cardinality(b), "multiplicativity");
        }
        o.require(audit.actions > 0, "no weak quotients were audited");
        for (const auto& f : audit.failures) o.require(false, f);
        o.detail << pairs << " random pairs; " << audit.actions << " weak quotients (" << audit.orbits
                 << " orbits, " << audit.sampled << " with sampled validation); ";
      });

  run(11, "Monte Carlo n = 100, k in {1,2,3,5}, 1e5 samples, seed 42: |estimate - 1/k| <= 4 SE", [&](Outcome& o) {
    for (std::size_t k : {1, 2, 3, 5}) {
      const MomentReport r = monte_carlo_moment(100, PVector::unit(100, k), 100000, kMonteCarloSeed);
      const double target = 1.0 / static_cast<double>(k);
      const bool ok = std::fabs(*r.estimate - target) <= 4.0 * *r.standard_error;
      o.require(ok, "k=" + std::to_string(k));
      o.detail << "k=" << k << " z=" << std::fixed << std::setprecision(2) << *r.z_score << "; ";
    }
  });

  std::cout << (failed == 0 ? "all 11 criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
