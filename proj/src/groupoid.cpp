#include "gcard/groupoid.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "gcard/permutation.hpp"

namespace gcard {

namespace {

constexpr std::size_t kMaxTabulatedAction = std::size_t{1} << 22;
constexpr std::uint64_t kValidationSeed = 0x6a09e667f3bcc908ULL;

std::string pair_labels(const std::optional<std::string>& a, const std::optional<std::string>& b) {
  if (a && b) return *a + "*" + *b;
  return a ? *a : *b;
}

}  // namespace

// ----------------------------------------------------------- GroupoidSkeleton

GroupoidSkeleton::GroupoidSkeleton(std::vector<SkeletonComponent> components) : components_(std::move(components)) {
  for (const auto& c : components_)
    if (c.aut_order < 1) throw std::invalid_argument("skeleton component with aut_order < 1");
}

std::vector<BigInt> GroupoidSkeleton::sorted_aut_orders() const {
  std::vector<BigInt> orders;
  orders.reserve(components_.size());
  for (const auto& c : components_) orders.push_back(c.aut_order);
  std::sort(orders.begin(), orders.end());
  return orders;
}

Rational cardinality(const GroupoidSkeleton& skeleton) {
  Rational total(0);
  for (const auto& c : skeleton.components()) total += reciprocal(c.aut_order);
  return total;
}

GroupoidSkeleton delooping(const FiniteGroup& group, std::optional<std::string> label) {
  return GroupoidSkeleton({SkeletonComponent{BigInt(group.order()), std::move(label)}});
}

GroupoidSkeleton coproduct(const GroupoidSkeleton& a, const GroupoidSkeleton& b) {
  std::vector<SkeletonComponent> all = a.components();
  all.insert(all.end(), b.components().begin(), b.components().end());
  return GroupoidSkeleton(std::move(all));
}

GroupoidSkeleton product(const GroupoidSkeleton& a, const GroupoidSkeleton& b) {
  std::vector<SkeletonComponent> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.components())
    for (const auto& y : b.components()) {
      SkeletonComponent c{x.aut_order * y.aut_order, std::nullopt};
      if (x.label || y.label) c.label = pair_labels(x.label, y.label);
      out.push_back(std::move(c));
    }
  return GroupoidSkeleton(std::move(out));
}

GroupoidSkeleton power(const GroupoidSkeleton& a, unsigned p) {
  GroupoidSkeleton result({SkeletonComponent{1, std::nullopt}});
  for (unsigned i = 0; i < p; ++i) result = i == 0 ? a : product(result, a);
  return result;
}

bool skeletons_equivalent(const GroupoidSkeleton& a, const GroupoidSkeleton& b, EquivalenceMode mode) {
  if (a.size() != b.size()) return false;
  if (mode == EquivalenceMode::aut_orders) return a.sorted_aut_orders() == b.sorted_aut_orders();
  auto keyed = [](const GroupoidSkeleton& s) {
    std::vector<std::pair<BigInt, std::string>> keys;
    for (const auto& c : s.components()) keys.emplace_back(c.aut_order, c.label.value_or(""));
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  return keyed(a) == keyed(b);
}

// ---------------------------------------------------------------- GroupAction

ValidationReport validate_action(const FiniteGroup& group, std::size_t carrier_size, const GroupAction::ActFn& act,
                                 const Limits& limits) {
  ValidationReport report;
  const GroupElement e = group.identity();
  for (std::size_t s = 0; s < carrier_size; ++s) {
    ++report.checks;
    const std::size_t t = act(e, s);
    if (t != s) {
      report.valid = false;
      report.witness = {s};
      report.failure = "identity law fails at point " + std::to_string(s) + ": e.s = " + std::to_string(t);
      return report;
    }
  }

  const std::size_t m = group.order();
  auto check = [&](std::size_t g, std::size_t h, std::size_t s) {
    ++report.checks;
    const GroupElement ge{g}, he{h};
    const std::size_t left = act(ge, act(he, s));
    const std::size_t right = act(group.multiply(ge, he), s);
    if (left == right) return true;
    report.valid = false;
    report.witness = {g, h, s};
    std::ostringstream os;
    os << "compatibility fails at (g,h,s) = (" << g << "," << h << "," << s << "): g.(h.s) = " << left
       << " but (gh).s = " << right;
    report.failure = os.str();
    return false;
  };

  // |G|^2 |S| may overflow a 64-bit count only far beyond desk scale; treat
  // overflow as "above the cap".
  const long double total = static_cast<long double>(m) * m * carrier_size;
  if (total <= static_cast<long double>(limits.max_validation_checks)) {
    for (std::size_t g = 0; g < m; ++g)
      for (std::size_t h = 0; h < m; ++h)
        for (std::size_t s = 0; s < carrier_size; ++s)
          if (!check(g, h, s)) return report;
    return report;
  }

  report.sampled = true;
  std::mt19937_64 rng(kValidationSeed);
  for (std::size_t i = 0; i < limits.max_validation_checks; ++i) {
    const std::size_t g = rng() % m;
    const std::size_t h = rng() % m;
    const std::size_t s = rng() % carrier_size;
    if (!check(g, h, s)) return report;
  }
  return report;
}

GroupAction GroupAction::create(FiniteGroup group, std::size_t carrier_size, ActFn act, const Limits& limits,
                                LabelFn point_label) {
  GroupAction action(std::move(group), carrier_size);
  action.label_ = std::move(point_label);
  const std::size_t m = action.group_.order();

  auto in_range = [carrier_size](std::size_t g, std::size_t s, std::size_t t) {
    if (t < carrier_size) return;
    ValidationReport report;
    report.valid = false;
    report.witness = {g, s};
    report.failure = "act(" + std::to_string(g) + ", " + std::to_string(s) + ") = " + std::to_string(t) +
                     " lies outside the carrier";
    throw ActionError(report.failure, report);
  };

  if (carrier_size != 0 && m * carrier_size <= kMaxTabulatedAction) {
    action.table_.resize(m * carrier_size);
    for (std::size_t g = 0; g < m; ++g)
      for (std::size_t s = 0; s < carrier_size; ++s) {
        const std::size_t t = act(GroupElement{g}, s);
        in_range(g, s, t);
        action.table_[g * carrier_size + s] = static_cast<std::uint32_t>(t);
      }
  } else {
    action.act_ = [act = std::move(act), in_range](GroupElement g, std::size_t s) {
      const std::size_t t = act(g, s);
      in_range(g.index, s, t);
      return t;
    };
  }

  action.validation_ = validate_action(
      action.group_, carrier_size, [&action](GroupElement g, std::size_t s) { return action.act(g, s); }, limits);
  if (!action.validation_.valid)
    throw ActionError("invalid group action: " + action.validation_.failure, action.validation_);
  return action;
}

std::size_t GroupAction::act(GroupElement g, std::size_t s) const {
  if (!table_.empty()) return table_[g.index * carrier_size_ + s];
  return act_(g, s);
}

std::string GroupAction::point_label(std::size_t s) const { return label_ ? label_(s) : std::to_string(s); }

GroupAction conjugation_action(const FiniteGroup& group, const Limits& limits) {
  return GroupAction::create(
      group, group.order(),
      [group](GroupElement h, std::size_t g) { return conjugate(group, GroupElement{g}, h).index; }, limits,
      [group](std::size_t g) { return group.element_label(GroupElement{g}); });
}

// ------------------------------------------------------------- weak quotients

std::vector<Orbit> orbit_decomposition(const GroupAction& action) {
  const std::size_t n = action.carrier_size();
  const FiniteGroup& group = action.group();
  std::vector<bool> seen(n, false);
  std::vector<Orbit> orbits;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    Orbit orbit;
    orbit.representative = s;
    std::size_t stabilizer = 0;
    for (GroupElement g : group.elements()) {
      const std::size_t t = action.act(g, s);
      if (t == s) ++stabilizer;
      if (!seen[t]) {
        seen[t] = true;
        ++orbit.size;
      }
    }
    orbit.stabilizer_order = stabilizer;
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

GroupoidSkeleton weak_quotient(const GroupAction& action) {
  std::vector<SkeletonComponent> components;
  for (const Orbit& orbit : orbit_decomposition(action))
    components.push_back({orbit.stabilizer_order, action.point_label(orbit.representative)});
  return GroupoidSkeleton(std::move(components));
}

Rational cardinality_via_outdegrees(const GroupAction& action) {
  Rational total(0);
  for (std::size_t s = 0; s < action.carrier_size(); ++s) {
    // one morphism s -> g.s for every group element g
    std::size_t out = 0;
    for (GroupElement g : action.group().elements()) {
      (void)action.act(g, s);
      ++out;
    }
    total += reciprocal(BigInt(out));
  }
  return total;
}

GroupoidSkeleton perm_groupoid_skeleton(long long n, const Limits& limits) {
  if (n < 0) return GroupoidSkeleton();
  std::vector<SkeletonComponent> components;
  for (const CycleType& lambda : partitions(static_cast<std::size_t>(n), limits))
    components.push_back({centralizer_order(lambda), lambda.label()});
  return GroupoidSkeleton(std::move(components));
}

}  // namespace gcard
