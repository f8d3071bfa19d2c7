#pragma once

#include <cstddef>
#include <vector>

#include "gcard/groupoid.hpp"
#include "gcard/limits.hpp"
#include "gcard/permutation.hpp"
#include "gcard/rational.hpp"

namespace gcard {

/// A permutation together with ordered tuples of distinct chosen cycles,
/// one tuple per cycle length. Equality is structural on canonical cycles.
struct DecoratedPermutation {
  Permutation sigma;
  CycleTupleChoice choice;

  friend auto operator<=>(const DecoratedPermutation&, const DecoratedPermutation&) = default;
  friend bool operator==(const DecoratedPermutation&, const DecoratedPermutation&) = default;
};

/// Every decorated permutation of degree n with tuple shape p, ordered by
/// the lexicographic rank of sigma and then by list_cycle_tuples order.
/// Empty when weight(p) > n.
std::vector<DecoratedPermutation> build_q(std::size_t n, const PVector& p, const Limits& limits = {});

/// tau acting on a decorated permutation: conjugate sigma, relabel each
/// chosen cycle through tau.
DecoratedPermutation q_action(const Permutation& tau, const DecoratedPermutation& d);

/// The set Q together with the validated S_n action on it.
struct DecoratedAction {
  std::vector<DecoratedPermutation> elements;
  GroupAction action;
};

DecoratedAction decorated_action(std::size_t n, const PVector& p, const Limits& limits = {});

/// Skeleton of C_p computed as the weak quotient Q // S_n.
GroupoidSkeleton c_groupoid_skeleton(std::size_t n, const PVector& p, const Limits& limits = {});

/// Perm_{n - weight(p)} x prod_k B(Z/k)^{p_k}; empty when weight(p) > n.
GroupoidSkeleton categorified_rhs_skeleton(std::size_t n, const PVector& p, const Limits& limits = {});

struct CategorifiedReport {
  std::size_t n = 0;
  PVector p;
  GroupoidSkeleton lhs_skeleton;
  GroupoidSkeleton rhs_skeleton;
  /// Skeleton-level: equal multisets of automorphism orders.
  bool equivalent = false;
  Rational lhs_card;
  Rational rhs_card;
  std::size_t q_size = 0;
  /// |Q| / n!
  Rational q_over_factorial;
  /// E(prod_k c_k^{p_k falling}) by enumeration.
  Rational expected_product;
  /// q_over_factorial == expected_product
  bool bridge_check = false;
  /// One entry per orbit of S_n on Q.
  std::vector<Orbit> orbits;
  ValidationReport action_validation;

  bool passed() const { return equivalent && lhs_card == rhs_card && bridge_check; }
};

CategorifiedReport verify_categorified(std::size_t n, const PVector& p, const Limits& limits = {});

}  // namespace gcard
