#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "gcard/limits.hpp"
#include "gcard/permutation.hpp"
#include "gcard/rational.hpp"

namespace gcard {

enum class MomentMethod { brute, cycle_type, monte_carlo };

const char* to_string(MomentMethod method);
/// Accepts "brute", "cycle_type" (or "cycle-type") and "monte_carlo".
MomentMethod parse_moment_method(const std::string& text);

/// E(prod_k c_k^{p_k falling}) computed one way, next to its closed form.
///
/// Exact methods fill lhs, rhs and equal. Monte Carlo fills estimate,
/// standard_error, samples, seed and z_score, keeps the closed form in rhs
/// as the target, and leaves lhs and equal empty.
struct MomentReport {
  std::size_t n = 0;
  PVector p;
  MomentMethod method = MomentMethod::brute;
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  std::optional<bool> equal;
  std::optional<double> estimate;
  std::optional<double> standard_error;
  std::optional<double> z_score;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
};

/// (1/n!) sum over all sigma in S_n of prod_k falling_power(c_k(sigma), p_k).
Rational expected_product_brute(std::size_t n, const PVector& p, const Limits& limits = {});

/// sum over partitions lambda of n of (1/z_lambda) prod_k falling_power(m_k, p_k).
Rational expected_product_by_type(std::size_t n, const PVector& p, const Limits& limits = {});

/// prod_k 1/k^{p_k} when weight(p) <= n, else 0.
Rational cll_rhs(std::size_t n, const PVector& p);

/// Compares an exact method against cll_rhs. Throws std::invalid_argument for
/// MomentMethod::monte_carlo, which never claims exact equality.
MomentReport verify_cll(std::size_t n, const PVector& p, MomentMethod method, const Limits& limits = {});

/// E(c_k) on S_n by the cycle-type method.
Rational expected_cycle_count(std::size_t n, std::size_t k, const Limits& limits = {});

/// 1 + 1/2 + ... + 1/n. Throws std::invalid_argument for n == 0.
Rational expected_total_cycles(std::size_t n);

/// mu^p, the p-th factorial moment of a Poisson(mu) variable.
Rational poisson_factorial_moment(const Rational& mu, unsigned p);

/// E(c_j c_k) against E(c_j) E(c_k). Requires j != k and j + k <= n;
/// otherwise throws std::invalid_argument (the identity fails for j + k > n).
MomentReport uncorrelated_check(std::size_t n, std::size_t j, std::size_t k, const Limits& limits = {});

/// Uniform integer in [0, bound) from a 64-bit engine, by rejection so that
/// every value is exactly equally likely.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniformly random permutation of degree n: Fisher-Yates with decreasing
/// swap index, driven by uniform_below.
Permutation random_permutation(std::size_t n, std::mt19937_64& rng);

/// Sample mean and standard error of prod_k falling_power(c_k, p_k) over
/// `samples` random permutations drawn from std::mt19937_64 seeded with
/// `seed`. Deterministic in (n, p, samples, seed). Requires samples >= 2.
MomentReport monte_carlo_moment(std::size_t n, const PVector& p, std::uint64_t samples, std::uint64_t seed);

}  // namespace gcard
