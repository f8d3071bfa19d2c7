#include "gcard/cycle_stats.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gcard {

namespace {

void require_degree(std::size_t n, const PVector& p) {
  if (p.degree() != n)
    throw std::invalid_argument("p-vector has length " + std::to_string(p.degree()) + " but n = " +
                                std::to_string(n));
}

/// prod_k falling_power(m[k-1], p_k), exact.
BigInt falling_product(std::span<const std::size_t> multiplicities, const PVector& p) {
  BigInt product = 1;
  for (std::size_t k = 1; k <= p.degree(); ++k) {
    if (p[k] == 0) continue;
    if (multiplicities[k - 1] < p[k]) return 0;
    product *= falling_power(multiplicities[k - 1], p[k]);
  }
  return product;
}

}  // namespace

const char* to_string(MomentMethod method) {
  switch (method) {
    case MomentMethod::brute: return "brute";
    case MomentMethod::cycle_type: return "cycle_type";
    case MomentMethod::monte_carlo: return "monte_carlo";
  }
  return "unknown";
}

MomentMethod parse_moment_method(const std::string& text) {
  if (text == "brute") return MomentMethod::brute;
  if (text == "cycle_type" || text == "cycle-type") return MomentMethod::cycle_type;
  if (text == "monte_carlo" || text == "monte-carlo") return MomentMethod::monte_carlo;
  throw std::invalid_argument("unknown method '" + text + "'");
}

Rational expected_product_brute(std::size_t n, const PVector& p, const Limits& limits) {
  require_degree(n, p);
  require_enumerable(static_cast<unsigned>(n), limits, "expected_product_brute");
  BigInt total = 0;
  for_each_permutation(
      n,
      [&](const Permutation& sigma) {
        const CycleType type = cycle_type(sigma);
        total += falling_product(type.multiplicities(), p);
      },
      limits);
  return Rational(total, factorial(static_cast<unsigned>(n)));
}

Rational expected_product_by_type(std::size_t n, const PVector& p, const Limits& limits) {
  require_degree(n, p);
  Rational total(0);
  for (const CycleType& lambda : partitions(n, limits)) {
    const BigInt product = falling_product(lambda.multiplicities(), p);
    if (product != 0) total += Rational(product, centralizer_order(lambda));
  }
  return total;
}

Rational cll_rhs(std::size_t n, const PVector& p) {
  require_degree(n, p);
  if (weight(p) > n) return Rational(0);
  BigInt denominator = 1;
  for (std::size_t k = 1; k <= n; ++k) denominator *= boost::multiprecision::pow(BigInt(k), p[k]);
  return reciprocal(denominator);
}

MomentReport verify_cll(std::size_t n, const PVector& p, MomentMethod method, const Limits& limits) {
  MomentReport report;
  report.n = n;
  report.p = p;
  report.method = method;
  switch (method) {
    case MomentMethod::brute: report.lhs = expected_product_brute(n, p, limits); break;
    case MomentMethod::cycle_type: report.lhs = expected_product_by_type(n, p, limits); break;
    case MomentMethod::monte_carlo:
      throw std::invalid_argument("verify_cll needs an exact method; use monte_carlo_moment for sampling");
  }
  report.rhs = cll_rhs(n, p);
  report.equal = *report.lhs == *report.rhs;
  return report;
}

Rational expected_cycle_count(std::size_t n, std::size_t k, const Limits& limits) {
  return expected_product_by_type(n, PVector::unit(n, k), limits);
}

Rational expected_total_cycles(std::size_t n) {
  if (n == 0) throw std::invalid_argument("expected_total_cycles: n must be positive");
  Rational h(0);
  for (std::size_t k = 1; k <= n; ++k) h += reciprocal(BigInt(k));
  return h;
}

Rational poisson_factorial_moment(const Rational& mu, unsigned p) { return pow(mu, p); }

MomentReport uncorrelated_check(std::size_t n, std::size_t j, std::size_t k, const Limits& limits) {
  if (j == 0 || k == 0) throw std::invalid_argument("uncorrelated_check: cycle lengths must be positive");
  if (j == k) throw std::invalid_argument("uncorrelated_check: requires j != k");
  if (j + k > n)
    throw std::invalid_argument("uncorrelated_check: requires j + k <= n (got j + k = " + std::to_string(j + k) +
                                ", n = " + std::to_string(n) + "); beyond that E(c_j c_k) = 0");
  std::vector<unsigned> entries(n, 0);
  entries[j - 1] = 1;
  entries[k - 1] = 1;
  MomentReport report;
  report.n = n;
  report.p = PVector(std::move(entries));
  report.method = MomentMethod::cycle_type;
  report.lhs = expected_product_by_type(n, report.p, limits);
  report.rhs = expected_cycle_count(n, j, limits) * expected_cycle_count(n, k, limits);
  report.equal = *report.lhs == *report.rhs;
  return report;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  // values below `threshold` would make r % bound biased
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(images[i - 1], images[j]);
  }
  return Permutation(std::move(images));
}

MomentReport monte_carlo_moment(std::size_t n, const PVector& p, std::uint64_t samples, std::uint64_t seed) {
  require_degree(n, p);
  if (samples < 2) throw std::invalid_argument("monte_carlo_moment: needs at least 2 samples");
  std::mt19937_64 rng(seed);
  // Welford's running mean / variance
  double mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t i = 1; i <= samples; ++i) {
    const CycleType type = cycle_type(random_permutation(n, rng));
    const double x = falling_product(type.multiplicities(), p).convert_to<double>();
    const double delta = x - mean;
    mean += delta / static_cast<double>(i);
    m2 += delta * (x - mean);
  }
  const double variance = m2 / static_cast<double>(samples - 1);
  const double se = std::sqrt(variance / static_cast<double>(samples));

  MomentReport report;
  report.n = n;
  report.p = p;
  report.method = MomentMethod::monte_carlo;
  report.rhs = cll_rhs(n, p);
  report.estimate = mean;
  report.standard_error = se;
  report.samples = samples;
  report.seed = seed;
  const double diff = mean - report.rhs->to_double();
  if (se > 0.0)
    report.z_score = diff / se;
  else
    report.z_score = diff == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
  return report;
}

}  // namespace gcard
