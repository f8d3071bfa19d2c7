#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gcard/limits.hpp"
#include "gcard/rational.hpp"

namespace gcard {

/// Bijection of {0, ..., n-1}, stored as its image array.
///
/// Composition follows function composition: (a * b)(x) = a(b(x)),
/// i.e. the right factor is applied first.
class Permutation {
 public:
  /// The identity of the empty set.
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);

  std::size_t degree() const { return images_.size(); }
  std::size_t operator()(std::size_t point) const { return images_[point]; }
  std::span<const std::size_t> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// "[1,0,2]"
  std::string str() const;

 private:
  std::vector<std::size_t> images_;
};

/// A cycle in canonical form: distinct entries, minimum first.
class Cycle {
 public:
  /// Rotates `entries` so that the minimum comes first. Throws
  /// std::invalid_argument on an empty list or repeated entries.
  explicit Cycle(std::vector<std::size_t> entries);

  std::size_t length() const { return entries_.size(); }
  std::size_t front() const { return entries_.front(); }
  std::span<const std::size_t> entries() const { return entries_; }

  /// The cycle (f(a1) ... f(ak)), re-canonicalized.
  Cycle relabeled(const Permutation& f) const;

  friend auto operator<=>(const Cycle&, const Cycle&) = default;
  friend bool operator==(const Cycle&, const Cycle&) = default;

  /// "(0 1 2)"
  std::string str() const;

 private:
  std::vector<std::size_t> entries_;
};

/// Integer partition of n stored as multiplicities: multiplicity(k) is the
/// number of parts equal to k, for 1 <= k <= n.
class CycleType {
 public:
  CycleType() = default;
  /// `multiplicities[k-1]` counts k-cycles; requires sum k*m_k == size.
  explicit CycleType(std::vector<std::size_t> multiplicities);

  static CycleType from_parts(std::size_t n, std::span<const std::size_t> parts);

  std::size_t degree() const { return multiplicities_.size(); }
  std::size_t multiplicity(std::size_t k) const { return multiplicities_.at(k - 1); }
  std::span<const std::size_t> multiplicities() const { return multiplicities_; }

  /// Parts in non-increasing order.
  std::vector<std::size_t> parts() const;
  /// "(2,1)"; the empty partition is "()".
  std::string label() const;

  friend auto operator<=>(const CycleType&, const CycleType&) = default;
  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::vector<std::size_t> multiplicities_;
};

/// (p_1, ..., p_n): how many k-cycles are chosen, per length k.
class PVector {
 public:
  PVector() = default;
  explicit PVector(std::vector<unsigned> entries) : entries_(std::move(entries)) {}

  static PVector zero(std::size_t n) { return PVector(std::vector<unsigned>(n, 0)); }
  /// p * e_k in degree n.
  static PVector unit(std::size_t n, std::size_t k, unsigned p = 1);

  std::size_t degree() const { return entries_.size(); }
  unsigned operator[](std::size_t k) const { return entries_.at(k - 1); }
  std::span<const unsigned> entries() const { return entries_; }

  /// "0,1,0"
  std::string str() const;

  friend auto operator<=>(const PVector&, const PVector&) = default;
  friend bool operator==(const PVector&, const PVector&) = default;

 private:
  std::vector<unsigned> entries_;
};

/// p_1 + 2 p_2 + ... + n p_n
std::size_t weight(const PVector& p);

/// Every p-vector of length n with entries <= max_entry and weight <= max_weight,
/// in lexicographic order of entries.
std::vector<PVector> bounded_pvectors(std::size_t n, unsigned max_entry, std::size_t max_weight);

/// x (x-1) ... (x-p+1); 1 when p == 0 and 0 when p > x.
BigInt falling_power(std::uint64_t x, std::uint64_t p);

/// Disjoint cycles covering {0..n-1} (fixed points included), each
/// canonical, sorted by their minimum entry.
std::vector<Cycle> cycle_decomposition(const Permutation& sigma);

/// The product of the given disjoint cycles, as a permutation of degree n.
Permutation permutation_from_cycles(std::size_t n, std::span<const Cycle> cycles);

/// c_k(sigma); throws std::out_of_range unless 1 <= k <= n.
std::size_t cycle_count(const Permutation& sigma, std::size_t k);

CycleType cycle_type(const Permutation& sigma);

/// tau sigma tau^-1. Throws std::invalid_argument on degree mismatch.
Permutation conjugate_permutation(const Permutation& sigma, const Permutation& tau);

/// Position of sigma in the lexicographic order of image arrays.
std::uint64_t permutation_rank(const Permutation& sigma);
Permutation permutation_unrank(std::size_t n, std::uint64_t rank);

/// Calls `visit` on every permutation of degree n, lexicographically by
/// image array. Throws CapExceeded above limits.max_enumeration_n.
void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit,
                          const Limits& limits = {});

/// Visits the lexicographic ranks [first, last) only, so an enumeration can
/// be split into independent rank ranges.
void for_each_permutation_in_range(std::size_t n, std::uint64_t first, std::uint64_t last,
                                   const std::function<void(const Permutation&)>& visit,
                                   const Limits& limits = {});

std::vector<Permutation> enumerate_permutations(std::size_t n, const Limits& limits = {});

/// For each length k, an ordered p_k-tuple of distinct k-cycles.
/// tuples[k-1] holds the k-cycles; its size is p_k.
struct CycleTupleChoice {
  std::vector<std::vector<Cycle>> tuples;

  CycleTupleChoice relabeled(const Permutation& f) const;
  std::string str() const;

  friend auto operator<=>(const CycleTupleChoice&, const CycleTupleChoice&) = default;
  friend bool operator==(const CycleTupleChoice&, const CycleTupleChoice&) = default;
};

/// Visits every choice of ordered tuples of distinct cycles of sigma with
/// the shape given by p. Order: lexicographic in the positions of the chosen
/// cycles within cycle_decomposition(sigma), k ascending.
void for_each_cycle_tuple(const Permutation& sigma, const PVector& p,
                          const std::function<void(const CycleTupleChoice&)>& visit);

std::vector<CycleTupleChoice> list_cycle_tuples(const Permutation& sigma, const PVector& p);

/// prod_k falling_power(c_k(sigma), p_k)
BigInt count_cycle_tuples(const Permutation& sigma, const PVector& p);

/// z_lambda = prod_k k^{m_k} m_k!, the centralizer order of any
/// permutation of that cycle type.
BigInt centralizer_order(const CycleType& lambda);

/// n! / z_lambda
BigInt count_with_cycle_type(const CycleType& lambda);

/// All partitions of n, lexicographic in their non-increasing part lists,
/// e.g. (1,1,1), (2,1), (3). Throws CapExceeded above max_partition_n.
std::vector<CycleType> partitions(std::size_t n, const Limits& limits = {});

}  // namespace gcard
