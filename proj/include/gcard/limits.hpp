#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcard {

/// Thrown when a desk-scale cap (enumeration size, partition degree,
/// Cayley table order) would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Limits {
  /// Largest n for which S_n is enumerated exhaustively (10! = 3,628,800).
  unsigned max_enumeration_n = 10;
  /// Largest degree for which partitions of n are enumerated.
  unsigned max_partition_n = 40;
  /// Largest Cayley table order accepted for O(m^3) associativity checks.
  std::size_t max_cayley_order = 256;
  /// Law checks above this count fall back to sampling this many checks.
  std::size_t max_validation_checks = 10'000'000;

  /// Defaults, with max_enumeration_n overridden by GROUPOID_CARD_MAX_N.
  static Limits from_environment();
};

inline void require_enumerable(unsigned n, const Limits& limits, const char* what) {
  if (n > limits.max_enumeration_n) {
    throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) +
                      " exceeds the enumeration cap " + std::to_string(limits.max_enumeration_n) +
                      " (set GROUPOID_CARD_MAX_N to override)");
  }
}

}  // namespace gcard
