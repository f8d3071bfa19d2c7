#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gcard/group.hpp"
#include "gcard/limits.hpp"
#include "gcard/rational.hpp"

namespace gcard {

/// One connected component B(G_i) of a skeletal groupoid, recorded by the
/// order of its automorphism group and an optional tag naming it.
struct SkeletonComponent {
  BigInt aut_order = 1;
  std::optional<std::string> label;
};

/// Finite groupoid up to equivalence: a multiset of components
/// sum_i B(G_i). The empty multiset is the empty groupoid.
class GroupoidSkeleton {
 public:
  GroupoidSkeleton() = default;
  /// Throws std::invalid_argument if some aut_order is < 1.
  explicit GroupoidSkeleton(std::vector<SkeletonComponent> components);

  const std::vector<SkeletonComponent>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  bool empty() const { return components_.empty(); }

  std::vector<BigInt> sorted_aut_orders() const;

 private:
  std::vector<SkeletonComponent> components_;
};

/// sum_i 1/|G_i|; 0 for the empty groupoid.
Rational cardinality(const GroupoidSkeleton& skeleton);

/// B(G): one object whose automorphism group is G.
GroupoidSkeleton delooping(const FiniteGroup& group, std::optional<std::string> label = std::nullopt);

GroupoidSkeleton coproduct(const GroupoidSkeleton& a, const GroupoidSkeleton& b);

/// All pairs of components, with automorphism orders multiplied and labels
/// paired as "a*b".
GroupoidSkeleton product(const GroupoidSkeleton& a, const GroupoidSkeleton& b);

/// p-fold product; power(a, 0) is the terminal groupoid {1}.
GroupoidSkeleton power(const GroupoidSkeleton& a, unsigned p);

enum class EquivalenceMode {
  aut_orders,  ///< compare multisets of automorphism orders
  strict,      ///< additionally compare labels
};

/// Skeleton-level equivalence check. Equal aut-order multisets are
/// necessary for equivalence; they are sufficient only when the component
/// groups are known to agree, which holds for every construction here.
bool skeletons_equivalent(const GroupoidSkeleton& a, const GroupoidSkeleton& b,
                          EquivalenceMode mode = EquivalenceMode::aut_orders);

/// Outcome of checking the laws of an action or functor.
struct ValidationReport {
  bool valid = true;
  /// True when the law checks exceeded the cap and a random subset was checked.
  bool sampled = false;
  std::uint64_t checks = 0;
  /// First failure, human readable; empty when valid.
  std::string failure;
  /// Elements witnessing the first failure, in the order named by `failure`.
  std::vector<std::size_t> witness;
};

class ActionError : public std::invalid_argument {
 public:
  ActionError(const std::string& message, ValidationReport report)
      : std::invalid_argument(message), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// A finite group acting on {0, ..., carrier_size-1}, validated at
/// construction: act(e, s) = s and act(g, act(h, s)) = act(g*h, s).
///
/// Small actions (|G| * |S| <= 2^22) are tabulated, larger ones evaluate the
/// supplied function on demand.
class GroupAction {
 public:
  using ActFn = std::function<std::size_t(GroupElement, std::size_t)>;
  using LabelFn = std::function<std::string(std::size_t)>;

  /// Throws ActionError with the validation report when a law fails.
  static GroupAction create(FiniteGroup group, std::size_t carrier_size, ActFn act, const Limits& limits = {},
                            LabelFn point_label = nullptr);

  const FiniteGroup& group() const { return group_; }
  std::size_t carrier_size() const { return carrier_size_; }
  std::size_t act(GroupElement g, std::size_t s) const;
  std::string point_label(std::size_t s) const;
  const ValidationReport& validation() const { return validation_; }

 private:
  GroupAction(FiniteGroup group, std::size_t carrier_size) : group_(std::move(group)), carrier_size_(carrier_size) {}

  FiniteGroup group_;
  std::size_t carrier_size_;
  ActFn act_;
  LabelFn label_;
  std::vector<std::uint32_t> table_;
  ValidationReport validation_;
};

/// Checks the action laws without constructing a GroupAction: identity on
/// every point, then compatibility on every (g, h, s) triple, or on
/// limits.max_validation_checks seeded random triples above that cap.
ValidationReport validate_action(const FiniteGroup& group, std::size_t carrier_size, const GroupAction::ActFn& act,
                                 const Limits& limits = {});

/// G acting on its own underlying set by h . g = h g h^-1.
GroupAction conjugation_action(const FiniteGroup& group, const Limits& limits = {});

struct Orbit {
  /// Smallest carrier index in the orbit.
  std::size_t representative = 0;
  std::size_t size = 0;
  BigInt stabilizer_order = 0;
};

/// Orbits in order of their representatives, each with the order of the
/// representative's stabilizer (found by direct scan of the group).
std::vector<Orbit> orbit_decomposition(const GroupAction& action);

/// Skeleton of S // G: one component per orbit, aut order = stabilizer
/// order, labelled by the representative's point label.
GroupoidSkeleton weak_quotient(const GroupAction& action);

/// sum over objects s of 1/|out(s)|, counting the morphisms out of s
/// directly. Equals |S|/|G|.
Rational cardinality_via_outdegrees(const GroupAction& action);

/// Skeleton of Perm_n: one component per partition lambda of n with aut
/// order z_lambda, labelled by the partition. Empty for n < 0.
GroupoidSkeleton perm_groupoid_skeleton(long long n, const Limits& limits = {});

}  // namespace gcard
