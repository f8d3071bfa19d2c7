#include "gcard/categorified.hpp"

#include <map>
#include <memory>

#include "gcard/cycle_stats.hpp"
#include "gcard/group.hpp"

namespace gcard {

std::vector<DecoratedPermutation> build_q(std::size_t n, const PVector& p, const Limits& limits) {
  if (p.degree() != n) throw std::invalid_argument("build_q: p-vector length differs from n");
  require_enumerable(static_cast<unsigned>(n), limits, "build_q");
  std::vector<DecoratedPermutation> q;
  if (weight(p) > n) return q;
  for_each_permutation(
      n,
      [&](const Permutation& sigma) {
        for_each_cycle_tuple(sigma, p, [&](const CycleTupleChoice& choice) { q.push_back({sigma, choice}); });
      },
      limits);
  return q;
}

DecoratedPermutation q_action(const Permutation& tau, const DecoratedPermutation& d) {
  if (tau.degree() != d.sigma.degree()) throw std::invalid_argument("q_action: degree mismatch");
  return {conjugate_permutation(d.sigma, tau), d.choice.relabeled(tau)};
}

DecoratedAction decorated_action(std::size_t n, const PVector& p, const Limits& limits) {
  auto elements = std::make_shared<const std::vector<DecoratedPermutation>>(build_q(n, p, limits));
  auto index = std::make_shared<std::map<DecoratedPermutation, std::size_t>>();
  for (std::size_t i = 0; i < elements->size(); ++i) index->emplace((*elements)[i], i);

  const FiniteGroup sn = make_symmetric(n);
  auto act = [sn, elements, index = std::shared_ptr<const std::map<DecoratedPermutation, std::size_t>>(index)](
                 GroupElement tau, std::size_t s) {
    const DecoratedPermutation image = q_action(sn.permutation(tau), (*elements)[s]);
    const auto it = index->find(image);
    if (it == index->end()) throw std::logic_error("q_action left the set Q");
    return it->second;
  };
  auto label = [elements](std::size_t s) {
    const auto& d = (*elements)[s];
    return d.sigma.str() + " " + d.choice.str();
  };
  GroupAction action = GroupAction::create(sn, elements->size(), act, limits, label);
  return DecoratedAction{*elements, std::move(action)};
}

GroupoidSkeleton c_groupoid_skeleton(std::size_t n, const PVector& p, const Limits& limits) {
  return weak_quotient(decorated_action(n, p, limits).action);
}

GroupoidSkeleton categorified_rhs_skeleton(std::size_t n, const PVector& p, const Limits& limits) {
  if (p.degree() != n) throw std::invalid_argument("categorified_rhs_skeleton: p-vector length differs from n");
  const long long rest = static_cast<long long>(n) - static_cast<long long>(weight(p));
  GroupoidSkeleton result = perm_groupoid_skeleton(rest, limits);
  for (std::size_t k = 1; k <= n; ++k) {
    if (p[k] == 0) continue;
    result = product(result, power(delooping(make_cyclic(k), "Z/" + std::to_string(k)), p[k]));
  }
  return result;
}

CategorifiedReport verify_categorified(std::size_t n, const PVector& p, const Limits& limits) {
  require_enumerable(static_cast<unsigned>(n), limits, "verify_categorified");
  CategorifiedReport report;
  report.n = n;
  report.p = p;

  const DecoratedAction q = decorated_action(n, p, limits);
  report.q_size = q.elements.size();
  report.action_validation = q.action.validation();
  report.orbits = orbit_decomposition(q.action);
  report.lhs_skeleton = weak_quotient(q.action);
  report.rhs_skeleton = categorified_rhs_skeleton(n, p, limits);

  report.equivalent = skeletons_equivalent(report.lhs_skeleton, report.rhs_skeleton);
  report.lhs_card = cardinality(report.lhs_skeleton);
  report.rhs_card = cardinality(report.rhs_skeleton);

  report.q_over_factorial = Rational(BigInt(report.q_size), factorial(static_cast<unsigned>(n)));
  report.expected_product = expected_product_brute(n, p, limits);
  report.bridge_check = report.q_over_factorial == report.expected_product;
  return report;
}

}  // namespace gcard
