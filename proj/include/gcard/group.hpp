#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcard/limits.hpp"
#include "gcard/permutation.hpp"

namespace gcard {

/// Dense index of an element within its owning group, 0 <= index < order.
struct GroupElement {
  std::size_t index = 0;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

namespace detail {
class GroupModel;
}

/// Immutable finite group with elements 0..order-1. Copies share the
/// underlying model.
///
/// Instances: cyclic (addition mod k), symmetric (lexicographically ranked
/// permutations, multiplied structurally), direct products, and validated
/// Cayley tables.
class FiniteGroup {
 public:
  std::size_t order() const;
  const std::string& name() const;

  GroupElement identity() const;
  /// Checked conversion from an index.
  GroupElement element(std::size_t index) const;
  std::vector<GroupElement> elements() const;
  bool contains(GroupElement g) const { return g.index < order(); }

  GroupElement multiply(GroupElement a, GroupElement b) const;
  GroupElement inverse(GroupElement a) const;

  std::string element_label(GroupElement g) const;

  /// Symmetric groups only: degree n of S_n.
  bool is_symmetric() const;
  std::size_t symmetric_degree() const;
  /// Symmetric groups only: the permutation with this lexicographic rank.
  Permutation permutation(GroupElement g) const;
  GroupElement element_of(const Permutation& sigma) const;

  /// table[a][b] = index of a*b.
  std::vector<std::vector<std::size_t>> cayley_table() const;

  /// Wraps an implementation model; use the make_* factories instead.
  explicit FiniteGroup(std::shared_ptr<const detail::GroupModel> model) : model_(std::move(model)) {}

 private:
  std::shared_ptr<const detail::GroupModel> model_;

  void check(GroupElement g) const;
};

/// Z/k under addition. Throws std::invalid_argument for k == 0.
FiniteGroup make_cyclic(std::size_t k);

/// S_n; elements are ranked lexicographically by image array, so the
/// identity has index 0. Multiplication is composition, right factor first.
FiniteGroup make_symmetric(std::size_t n);

/// G x H with (g, h) stored at index g * |H| + h.
FiniteGroup make_product(const FiniteGroup& g, const FiniteGroup& h);

/// Which group axiom a Cayley table violates.
enum class GroupAxiom { shape, closure, associativity, identity, inverse };

const char* to_string(GroupAxiom axiom);

class GroupAxiomError : public std::invalid_argument {
 public:
  GroupAxiomError(GroupAxiom axiom, std::vector<std::size_t> witness, const std::string& message)
      : std::invalid_argument(message), axiom_(axiom), witness_(std::move(witness)) {}

  GroupAxiom axiom() const { return axiom_; }
  /// Elements exhibiting the failure, e.g. the (a, b, c) triple for
  /// associativity.
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  GroupAxiom axiom_;
  std::vector<std::size_t> witness_;
};

/// Validates closure, associativity (all m^3 triples), a two-sided identity
/// and inverses, in that order, throwing GroupAxiomError for the first
/// failure. Orders above limits.max_cayley_order throw CapExceeded.
FiniteGroup from_cayley_table(const std::vector<std::vector<std::size_t>>& table, const Limits& limits = {},
                              std::string name = "cayley");

/// h g h^-1
GroupElement conjugate(const FiniteGroup& group, GroupElement g, GroupElement h);

/// Smallest r >= 1 with g^r = e.
std::size_t element_order(const FiniteGroup& group, GroupElement g);

bool is_abelian(const FiniteGroup& group);

}  // namespace gcard
