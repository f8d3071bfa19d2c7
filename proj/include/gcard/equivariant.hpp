#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gcard/group.hpp"
#include "gcard/groupoid.hpp"
#include "gcard/limits.hpp"
#include "gcard/permutation.hpp"
#include "gcard/rational.hpp"

namespace gcard {

/// An object (g, x) of the category of elements, x indexing F(g).
struct ElementsObject {
  GroupElement g;
  std::size_t x = 0;

  friend bool operator==(const ElementsObject&, const ElementsObject&) = default;
};

class FunctorShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Extensional functor F: G//G -> FinSet. Each fiber F(g) is {0..|F(g)|-1};
/// transport(h, g) is the map F(g) -> F(h g h^-1), stored as an index array.
///
/// Construction only checks shape (array lengths and index ranges); the
/// functor laws are checked by validate_functor.
class EquivariantFunctor {
 public:
  using FiberSizeFn = std::function<std::size_t(GroupElement)>;
  using TransportFn = std::function<std::size_t(GroupElement h, GroupElement g, std::size_t x)>;

  static EquivariantFunctor tabulate(FiniteGroup group, const FiberSizeFn& fiber_size,
                                     const TransportFn& transport);

  /// transports[h][g] is the image array of F(h) restricted to F(g).
  static EquivariantFunctor from_tables(FiniteGroup group, std::vector<std::size_t> fiber_sizes,
                                        const std::vector<std::vector<std::vector<std::size_t>>>& transports);

  const FiniteGroup& group() const { return group_; }
  std::size_t fiber_size(GroupElement g) const { return fiber_sizes_.at(g.index); }
  /// sum_g |F(g)|, the number of objects of the category of elements.
  std::size_t total_size() const { return offsets_.back(); }

  std::size_t transport(GroupElement h, GroupElement g, std::size_t x) const;

  std::size_t object_index(const ElementsObject& object) const { return offsets_[object.g.index] + object.x; }
  ElementsObject object_at(std::size_t index) const;

  /// Optional human-readable names for fiber elements.
  void set_fiber_labels(std::function<std::string(GroupElement, std::size_t)> labels) {
    labels_ = std::move(labels);
  }
  std::string fiber_label(GroupElement g, std::size_t x) const;

 private:
  EquivariantFunctor(FiniteGroup group, std::vector<std::size_t> fiber_sizes);

  FiniteGroup group_;
  std::vector<std::size_t> fiber_sizes_;
  std::vector<std::size_t> offsets_;  // prefix sums of fiber sizes, length |G|+1
  // transport_[h * total + offsets_[g] + x]
  std::vector<std::uint32_t> transport_;
  std::function<std::string(GroupElement, std::size_t)> labels_;
};

/// Checks, in order: fiber sizes are conjugation invariant; each
/// transport(h, g) is a bijection; transport(e, g) is the identity; and
/// transport(h2, h1 g h1^-1) o transport(h1, g) = transport(h2 h1, g) for
/// all (h2, h1, g), lexicographically. Reports the first failure. Above
/// limits.max_validation_checks the composition law is sampled.
ValidationReport validate_functor(const EquivariantFunctor& functor, const Limits& limits = {});

/// (1/|G|) sum_g |F(g)|
Rational expected_size(const EquivariantFunctor& functor);

/// G acting on the objects (g, x) by h.(g, x) = (h g h^-1, F(h)(x)); carrier
/// indices follow EquivariantFunctor::object_index. Throws ActionError if
/// the functor laws fail.
GroupAction category_of_elements(const EquivariantFunctor& functor, const Limits& limits = {});

struct GeneralTheoremReport {
  Rational expected_size;
  /// |Ob(int F) // G| from the orbit skeleton.
  Rational elements_cardinality;
  bool equal = false;
  std::size_t group_order = 0;
  std::size_t object_count = 0;
  GroupoidSkeleton elements_skeleton;
  std::vector<Orbit> orbits;
  ValidationReport functor_validation;
};

/// E(|F|) against |int F|. Throws ActionError if F is not a functor.
GeneralTheoremReport verify_general_theorem(const EquivariantFunctor& functor, const Limits& limits = {});

/// F(g) = one point, all transports identities.
EquivariantFunctor make_trivial_functor(const FiniteGroup& group);

/// On S_n: F(sigma) = fixed points of sigma, transported by tau.
EquivariantFunctor make_fixed_point_functor(std::size_t n, const Limits& limits = {});

/// On S_n: F(sigma) = list_cycle_tuples(sigma, p), transported by relabeling
/// the cycles through tau.
EquivariantFunctor make_cycle_tuple_functor(std::size_t n, const PVector& p, const Limits& limits = {});

}  // namespace gcard
