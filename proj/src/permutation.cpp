#include "gcard/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gcard {

namespace {

std::string join(std::span<const std::size_t> values, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) os << sep;
    os << values[i];
  }
  return os.str();
}

std::uint64_t factorial_u64(std::size_t n) {
  if (n > 20) throw std::overflow_error("factorial does not fit in 64 bits");
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const std::size_t v = images_[i];
    if (v >= images_.size() || seen[v]) {
      throw std::invalid_argument("not a permutation: image " + std::to_string(v) + " at position " +
                                  std::to_string(i));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.images_.resize(n);
  std::iota(p.images_.begin(), p.images_.end(), std::size_t{0});
  return p;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = i;
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("composing permutations of different degree");
  Permutation c;
  c.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) c.images_[i] = a.images_[b.images_[i]];
  return c;
}

std::string Permutation::str() const { return "[" + join(images_, ",") + "]"; }

// ---------------------------------------------------------------------- Cycle

Cycle::Cycle(std::vector<std::size_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("empty cycle");
  std::vector<std::size_t> sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("cycle entries are not distinct");
  std::rotate(entries_.begin(), std::min_element(entries_.begin(), entries_.end()), entries_.end());
}

Cycle Cycle::relabeled(const Permutation& f) const {
  std::vector<std::size_t> mapped;
  mapped.reserve(entries_.size());
  for (std::size_t a : entries_) mapped.push_back(f(a));
  return Cycle(std::move(mapped));
}

std::string Cycle::str() const { return "(" + join(entries_, " ") + ")"; }

// ------------------------------------------------------------------ CycleType

CycleType::CycleType(std::vector<std::size_t> multiplicities) : multiplicities_(std::move(multiplicities)) {
  std::size_t total = 0;
  for (std::size_t k = 1; k <= multiplicities_.size(); ++k) total += k * multiplicities_[k - 1];
  if (total != multiplicities_.size())
    throw std::invalid_argument("cycle type: sum of k*m_k is " + std::to_string(total) + ", expected " +
                                std::to_string(multiplicities_.size()));
}

CycleType CycleType::from_parts(std::size_t n, std::span<const std::size_t> parts) {
  std::vector<std::size_t> m(n, 0);
  for (std::size_t part : parts) {
    if (part == 0 || part > n) throw std::invalid_argument("cycle type: part out of range");
    ++m[part - 1];
  }
  return CycleType(std::move(m));
}

std::vector<std::size_t> CycleType::parts() const {
  std::vector<std::size_t> out;
  for (std::size_t k = multiplicities_.size(); k >= 1; --k)
    out.insert(out.end(), multiplicities_[k - 1], k);
  return out;
}

std::string CycleType::label() const { return "(" + join(parts(), ",") + ")"; }

// -------------------------------------------------------------------- PVector

PVector PVector::unit(std::size_t n, std::size_t k, unsigned p) {
  if (k < 1 || k > n) throw std::out_of_range("unit p-vector: k must lie in [1, n]");
  std::vector<unsigned> e(n, 0);
  e[k - 1] = p;
  return PVector(std::move(e));
}

std::string PVector::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i != 0) os << ',';
    os << entries_[i];
  }
  return os.str();
}

std::size_t weight(const PVector& p) {
  std::size_t w = 0;
  for (std::size_t k = 1; k <= p.degree(); ++k) w += k * p[k];
  return w;
}

std::vector<PVector> bounded_pvectors(std::size_t n, unsigned max_entry, std::size_t max_weight) {
  std::vector<PVector> out;
  std::vector<unsigned> entries(n, 0);
  while (true) {
    PVector p(entries);
    if (weight(p) <= max_weight) out.push_back(std::move(p));
    std::size_t i = n;
    while (i > 0 && entries[i - 1] == max_entry) entries[--i] = 0;
    if (i == 0) break;
    ++entries[i - 1];
  }
  return out;
}

BigInt falling_power(std::uint64_t x, std::uint64_t p) {
  if (p > x) return 0;
  BigInt result = 1;
  for (std::uint64_t i = 0; i < p; ++i) result *= (x - i);
  return result;
}

// ------------------------------------------------------- cycle decomposition

std::vector<Cycle> cycle_decomposition(const Permutation& sigma) {
  const std::size_t n = sigma.degree();
  std::vector<bool> seen(n, false);
  std::vector<Cycle> cycles;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> entries;
    for (std::size_t x = start; !seen[x]; x = sigma(x)) {
      seen[x] = true;
      entries.push_back(x);
    }
    // start is the smallest point in its orbit, so this is already canonical
    cycles.emplace_back(std::move(entries));
  }
  return cycles;
}

Permutation permutation_from_cycles(std::size_t n, std::span<const Cycle> cycles) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<bool> used(n, false);
  for (const Cycle& c : cycles) {
    const auto e = c.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] >= n || used[e[i]]) throw std::invalid_argument("cycles are not disjoint within degree");
      used[e[i]] = true;
      images[e[i]] = e[(i + 1) % e.size()];
    }
  }
  return Permutation(std::move(images));
}

namespace {

std::vector<std::size_t> cycle_counts(const Permutation& sigma) {
  const std::size_t n = sigma.degree();
  std::vector<std::size_t> counts(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !seen[x]; x = sigma(x)) {
      seen[x] = true;
      ++len;
    }
    ++counts[len - 1];
  }
  return counts;
}

}  // namespace

std::size_t cycle_count(const Permutation& sigma, std::size_t k) {
  if (k < 1 || k > sigma.degree())
    throw std::out_of_range("cycle_count: k = " + std::to_string(k) + " outside [1, " +
                            std::to_string(sigma.degree()) + "]");
  return cycle_counts(sigma)[k - 1];
}

CycleType cycle_type(const Permutation& sigma) { return CycleType(cycle_counts(sigma)); }

Permutation conjugate_permutation(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree())
    throw std::invalid_argument("conjugate_permutation: degree mismatch (" + std::to_string(sigma.degree()) +
                                " vs " + std::to_string(tau.degree()) + ")");
  // (tau sigma tau^-1)(tau(x)) = tau(sigma(x))
  std::vector<std::size_t> images(sigma.degree());
  for (std::size_t x = 0; x < sigma.degree(); ++x) images[tau(x)] = tau(sigma(x));
  return Permutation(std::move(images));
}

// ---------------------------------------------------------------- enumeration

std::uint64_t permutation_rank(const Permutation& sigma) {
  const std::size_t n = sigma.degree();
  std::uint64_t rank = 0;
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t v = 0; v < sigma(i); ++v)
      if (!used[v]) ++smaller;
    used[sigma(i)] = true;
    rank += smaller * factorial_u64(n - 1 - i);
  }
  return rank;
}

Permutation permutation_unrank(std::size_t n, std::uint64_t rank) {
  if (rank >= factorial_u64(n)) throw std::out_of_range("permutation_unrank: rank out of range");
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::vector<std::size_t> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t f = factorial_u64(n - 1 - i);
    const auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    images.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(images));
}

void for_each_permutation_in_range(std::size_t n, std::uint64_t first, std::uint64_t last,
                                   const std::function<void(const Permutation&)>& visit, const Limits& limits) {
  require_enumerable(static_cast<unsigned>(n), limits, "enumerate_permutations");
  last = std::min<std::uint64_t>(last, factorial_u64(n));
  if (first >= last) return;
  Permutation current = permutation_unrank(n, first);
  std::vector<std::size_t> images(current.images().begin(), current.images().end());
  for (std::uint64_t r = first; r < last; ++r) {
    visit(current);
    if (r + 1 < last) {
      std::next_permutation(images.begin(), images.end());
      current = Permutation(images);
    }
  }
}

void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit,
                          const Limits& limits) {
  require_enumerable(static_cast<unsigned>(n), limits, "enumerate_permutations");
  for_each_permutation_in_range(n, 0, factorial_u64(n), visit, limits);
}

std::vector<Permutation> enumerate_permutations(std::size_t n, const Limits& limits) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); }, limits);
  return out;
}

// --------------------------------------------------------------- cycle tuples

CycleTupleChoice CycleTupleChoice::relabeled(const Permutation& f) const {
  CycleTupleChoice out;
  out.tuples.reserve(tuples.size());
  for (const auto& tuple : tuples) {
    std::vector<Cycle> mapped;
    mapped.reserve(tuple.size());
    for (const Cycle& c : tuple) mapped.push_back(c.relabeled(f));
    out.tuples.push_back(std::move(mapped));
  }
  return out;
}

std::string CycleTupleChoice::str() const {
  std::string s = "{";
  bool first = true;
  for (std::size_t k = 1; k <= tuples.size(); ++k) {
    if (tuples[k - 1].empty()) continue;
    if (!first) s += ", ";
    first = false;
    s += std::to_string(k) + ": [";
    for (std::size_t i = 0; i < tuples[k - 1].size(); ++i) {
      if (i != 0) s += " ";
      s += tuples[k - 1][i].str();
    }
    s += "]";
  }
  return s + "}";
}

void for_each_cycle_tuple(const Permutation& sigma, const PVector& p,
                          const std::function<void(const CycleTupleChoice&)>& visit) {
  const std::size_t n = sigma.degree();
  if (p.degree() != n)
    throw std::invalid_argument("cycle tuples: p-vector length " + std::to_string(p.degree()) +
                                " differs from degree " + std::to_string(n));
  std::vector<std::vector<Cycle>> by_length(n);
  for (Cycle& c : cycle_decomposition(sigma)) by_length[c.length() - 1].push_back(std::move(c));
  for (std::size_t k = 1; k <= n; ++k)
    if (by_length[k - 1].size() < p[k]) return;

  CycleTupleChoice choice;
  choice.tuples.assign(n, {});
  std::vector<std::vector<bool>> used(n);
  for (std::size_t k = 1; k <= n; ++k) used[k - 1].assign(by_length[k - 1].size(), false);

  // Depth-first over (k, slot) pairs.
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t k, std::size_t slot) {
    while (k <= n && slot == p[k]) {
      ++k;
      slot = 0;
    }
    if (k > n) {
      visit(choice);
      return;
    }
    const auto& pool = by_length[k - 1];
    auto& taken = used[k - 1];
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (taken[i]) continue;
      taken[i] = true;
      choice.tuples[k - 1].push_back(pool[i]);
      fill(k, slot + 1);
      choice.tuples[k - 1].pop_back();
      taken[i] = false;
    }
  };
  fill(1, 0);
}

std::vector<CycleTupleChoice> list_cycle_tuples(const Permutation& sigma, const PVector& p) {
  std::vector<CycleTupleChoice> out;
  for_each_cycle_tuple(sigma, p, [&](const CycleTupleChoice& c) { out.push_back(c); });
  return out;
}

BigInt count_cycle_tuples(const Permutation& sigma, const PVector& p) {
  if (p.degree() != sigma.degree()) throw std::invalid_argument("count_cycle_tuples: degree mismatch");
  const auto counts = cycle_counts(sigma);
  BigInt total = 1;
  for (std::size_t k = 1; k <= counts.size() && total != 0; ++k)
    if (p[k] != 0) total *= falling_power(counts[k - 1], p[k]);
  return total;
}

// ----------------------------------------------------------------- partitions

BigInt centralizer_order(const CycleType& lambda) {
  BigInt z = 1;
  for (std::size_t k = 1; k <= lambda.degree(); ++k) {
    const std::size_t m = lambda.multiplicity(k);
    z *= boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(m));
    z *= factorial(static_cast<unsigned>(m));
  }
  return z;
}

BigInt count_with_cycle_type(const CycleType& lambda) {
  return factorial(static_cast<unsigned>(lambda.degree())) / centralizer_order(lambda);
}

std::vector<CycleType> partitions(std::size_t n, const Limits& limits) {
  if (n > limits.max_partition_n)
    throw CapExceeded("partitions: n = " + std::to_string(n) + " exceeds the partition cap " +
                      std::to_string(limits.max_partition_n));
  std::vector<std::vector<std::size_t>> lists;
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::size_t)> build = [&](std::size_t remaining, std::size_t max_part) {
    if (remaining == 0) {
      lists.push_back(current);
      return;
    }
    for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      build(remaining - part, part);
      current.pop_back();
    }
  };
  build(n, n);
  std::sort(lists.begin(), lists.end());
  std::vector<CycleType> out;
  out.reserve(lists.size());
  for (const auto& parts : lists) out.push_back(CycleType::from_parts(n, parts));
  return out;
}

}  // namespace gcard
