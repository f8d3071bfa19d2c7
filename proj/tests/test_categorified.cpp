#include <doctest.h>

#include <set>

#include "gcard/categorified.hpp"
#include "gcard/cycle_stats.hpp"

using namespace gcard;

namespace {

Rational frac(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }
PVector pv(std::vector<unsigned> v) { return PVector(std::move(v)); }

std::vector<BigInt> bigs(std::initializer_list<long long> values) {
  std::vector<BigInt> out;
  for (long long v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("build_q") {
  const auto q = build_q(3, pv({0, 1, 0}));
  CHECK(q.size() == 3);
  for (const auto& d : q) CHECK(cycle_type(d.sigma) == CycleType({1, 1, 0}));
  CHECK(build_q(3, pv({2, 1, 0})).empty());
  CHECK(build_q(4, pv({0, 2, 0, 0})).size() == 6);
  CHECK(build_q(4, PVector::zero(4)).size() == 24);
  const auto q4 = build_q(4, pv({1, 1, 0, 0}));
  CHECK(std::set<DecoratedPermutation>(q4.begin(), q4.end()).size() == q4.size());
  CHECK_THROWS_AS(build_q(11, PVector::zero(11)), CapExceeded);
}

TEST_CASE("q_action") {
  const auto q = build_q(3, pv({0, 1, 0}));
  for (const auto& d : q) CHECK(q_action(Permutation::identity(3), d) == d);

  const DecoratedPermutation d01{Permutation({1, 0, 2}), list_cycle_tuples(Permutation({1, 0, 2}), pv({0, 1, 0}))[0]};
  const auto moved = q_action(Permutation({0, 2, 1}), d01);
  CHECK(moved.sigma == Permutation({2, 1, 0}));
  CHECK(moved.choice.str() == "{2: [(0 2)]}");

  std::set<DecoratedPermutation> orbit;
  for (const auto& tau : enumerate_permutations(3)) orbit.insert(q_action(tau, q.front()));
  CHECK(orbit.size() == q.size());
  CHECK_THROWS_AS(q_action(Permutation::identity(2), d01), std::invalid_argument);
}

TEST_CASE("c_groupoid_skeleton and categorified_rhs_skeleton examples") {
  CHECK(c_groupoid_skeleton(3, pv({0, 1, 0})).sorted_aut_orders() == bigs({2}));
  CHECK(c_groupoid_skeleton(4, pv({0, 2, 0, 0})).sorted_aut_orders() == bigs({4}));
  CHECK(c_groupoid_skeleton(3, pv({1, 0, 1})).empty());
  CHECK(categorified_rhs_skeleton(3, pv({0, 1, 0})).sorted_aut_orders() == bigs({2}));
  CHECK(categorified_rhs_skeleton(4, pv({0, 2, 0, 0})).sorted_aut_orders() == bigs({4}));
  CHECK(categorified_rhs_skeleton(3, pv({1, 0, 1})).empty());
  const auto full = categorified_rhs_skeleton(6, pv({1, 1, 1, 0, 0, 0}));
  CHECK(full.sorted_aut_orders() == bigs({6}));
  CHECK(cardinality(full) == frac(1, 6));
}

TEST_CASE("n = 4, p = (2,0,0,0) reproduces {2, 2} by orbit computation") {
  const auto action = decorated_action(4, pv({2, 0, 0, 0}));
  // sum over sigma of c_1 (c_1 - 1): 12 from the identity, 2 from each of 6 transpositions
  CHECK(action.elements.size() == 24);
  const auto orbits = orbit_decomposition(action.action);
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0].size == 12);
  CHECK(orbits[1].size == 12);
  CHECK(orbits[0].stabilizer_order == 2);
  CHECK(orbits[1].stabilizer_order == 2);
  CHECK(categorified_rhs_skeleton(4, pv({2, 0, 0, 0})).sorted_aut_orders() == bigs({2, 2}));
  const auto report = verify_categorified(4, pv({2, 0, 0, 0}));
  CHECK(report.equivalent);
  CHECK(report.lhs_card == Rational(1));
  CHECK(report.passed());
}

TEST_CASE("verify_categorified examples") {
  auto r = verify_categorified(3, pv({0, 1, 0}));
  CHECK(r.equivalent);
  CHECK(r.lhs_card == frac(1, 2));
  CHECK(r.rhs_card == frac(1, 2));
  CHECK(r.bridge_check);
  CHECK(r.q_size == 3);

  r = verify_categorified(5, pv({0, 0, 0, 2, 0}));
  CHECK(r.lhs_skeleton.empty());
  CHECK(r.rhs_skeleton.empty());
  CHECK(r.equivalent);
  CHECK(r.lhs_card.is_zero());
  CHECK(r.passed());

  CHECK_THROWS_AS(verify_categorified(12, PVector::zero(12)), CapExceeded);
}

TEST_CASE("categorified lemma holds for n <= 5 with entries <= 2") {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const PVector& p : bounded_pvectors(n, 2, n)) {
      const auto r = verify_categorified(n, p);
      CAPTURE(p.str());
      CHECK(r.equivalent);
      CHECK(r.lhs_card == r.rhs_card);
      CHECK(r.lhs_card == cll_rhs(n, p));
      CHECK(r.bridge_check);
      CHECK(r.action_validation.valid);
      for (const auto& o : r.orbits) CHECK(o.stabilizer_order * o.size == factorial(static_cast<unsigned>(n)));
    }
}

TEST_CASE("overweight p-vectors give empty Q and empty skeletons") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const PVector& p : bounded_pvectors(n, 2, 3 * n)) {
      if (weight(p) <= n) continue;
      CHECK(build_q(n, p).empty());
      CHECK(c_groupoid_skeleton(n, p).empty());
      CHECK(categorified_rhs_skeleton(n, p).empty());
    }
}
