#include "gcard/equivariant.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <sstream>

namespace gcard {

namespace {

// |G| * sum_g |F(g)| transport entries are stored; beyond this the functor
// is not desk scale.
constexpr std::size_t kMaxTransportEntries = std::size_t{1} << 25;
constexpr std::uint64_t kValidationSeed = 0xbb67ae8584caa73bULL;

}  // namespace

EquivariantFunctor::EquivariantFunctor(FiniteGroup group, std::vector<std::size_t> fiber_sizes)
    : group_(std::move(group)), fiber_sizes_(std::move(fiber_sizes)) {
  if (fiber_sizes_.size() != group_.order())
    throw FunctorShapeError("functor needs one fiber per group element: got " + std::to_string(fiber_sizes_.size()) +
                            " fibers for a group of order " + std::to_string(group_.order()));
  offsets_.assign(fiber_sizes_.size() + 1, 0);
  for (std::size_t g = 0; g < fiber_sizes_.size(); ++g) offsets_[g + 1] = offsets_[g] + fiber_sizes_[g];
  const long double entries = static_cast<long double>(group_.order()) * offsets_.back();
  if (entries > static_cast<long double>(kMaxTransportEntries))
    throw CapExceeded("functor transport table would hold " + std::to_string(static_cast<double>(entries)) +
                      " entries; too large to tabulate");
  transport_.assign(group_.order() * offsets_.back(), 0);
}

EquivariantFunctor EquivariantFunctor::tabulate(FiniteGroup group, const FiberSizeFn& fiber_size,
                                                const TransportFn& transport) {
  std::vector<std::size_t> sizes(group.order());
  for (GroupElement g : group.elements()) sizes[g.index] = fiber_size(g);
  EquivariantFunctor f(std::move(group), std::move(sizes));
  const std::size_t total = f.total_size();
  for (GroupElement h : f.group_.elements())
    for (GroupElement g : f.group_.elements()) {
      const GroupElement target = conjugate(f.group_, g, h);
      for (std::size_t x = 0; x < f.fiber_sizes_[g.index]; ++x) {
        const std::size_t y = transport(h, g, x);
        if (y >= f.fiber_sizes_[target.index])
          throw FunctorShapeError("transport(" + std::to_string(h.index) + ", " + std::to_string(g.index) + ") sends " +
                                  std::to_string(x) + " to " + std::to_string(y) + ", outside F(" +
                                  std::to_string(target.index) + ")");
        f.transport_[h.index * total + f.offsets_[g.index] + x] = static_cast<std::uint32_t>(y);
      }
    }
  return f;
}

EquivariantFunctor EquivariantFunctor::from_tables(FiniteGroup group, std::vector<std::size_t> fiber_sizes,
                                                   const std::vector<std::vector<std::vector<std::size_t>>>& transports) {
  const std::size_t m = group.order();
  if (fiber_sizes.size() != m)
    throw FunctorShapeError("functor needs one fiber per group element: got " + std::to_string(fiber_sizes.size()) +
                            " fibers for a group of order " + std::to_string(m));
  if (transports.size() != m)
    throw FunctorShapeError("expected transports for " + std::to_string(m) + " group elements, got " +
                            std::to_string(transports.size()));
  for (std::size_t h = 0; h < m; ++h) {
    if (transports[h].size() != m)
      throw FunctorShapeError("transport for h = " + std::to_string(h) + " covers " +
                              std::to_string(transports[h].size()) + " fibers, expected " + std::to_string(m));
    for (std::size_t g = 0; g < m; ++g)
      if (transports[h][g].size() != fiber_sizes[g])
        throw FunctorShapeError("transport(" + std::to_string(h) + ", " + std::to_string(g) + ") has " +
                                std::to_string(transports[h][g].size()) + " entries but |F(" + std::to_string(g) +
                                ")| = " + std::to_string(fiber_sizes[g]));
  }
  const std::vector<std::size_t> sizes = fiber_sizes;
  return tabulate(
      std::move(group), [&](GroupElement g) { return sizes.at(g.index); },
      [&](GroupElement h, GroupElement g, std::size_t x) { return transports[h.index][g.index][x]; });
}

std::size_t EquivariantFunctor::transport(GroupElement h, GroupElement g, std::size_t x) const {
  return transport_[h.index * total_size() + offsets_[g.index] + x];
}

ElementsObject EquivariantFunctor::object_at(std::size_t index) const {
  if (index >= total_size()) throw std::out_of_range("object index outside the category of elements");
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  const auto g = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  return {GroupElement{g}, index - offsets_[g]};
}

std::string EquivariantFunctor::fiber_label(GroupElement g, std::size_t x) const {
  if (labels_) return labels_(g, x);
  return std::to_string(x);
}

// ----------------------------------------------------------------- validation

ValidationReport validate_functor(const EquivariantFunctor& functor, const Limits& limits) {
  ValidationReport report;
  const FiniteGroup& group = functor.group();
  const std::size_t m = group.order();
  auto fail = [&](std::vector<std::size_t> witness, std::string message) {
    report.valid = false;
    report.witness = std::move(witness);
    report.failure = std::move(message);
    return report;
  };

  for (GroupElement h : group.elements())
    for (GroupElement g : group.elements()) {
      ++report.checks;
      const GroupElement target = conjugate(group, g, h);
      if (functor.fiber_size(g) != functor.fiber_size(target))
        return fail({h.index, g.index}, "fiber size not conjugation invariant at (h,g) = (" + std::to_string(h.index) +
                                            "," + std::to_string(g.index) + "): |F(g)| = " +
                                            std::to_string(functor.fiber_size(g)) + " but |F(hgh^-1)| = " +
                                            std::to_string(functor.fiber_size(target)));
    }

  for (GroupElement h : group.elements())
    for (GroupElement g : group.elements()) {
      std::vector<bool> hit(functor.fiber_size(g), false);
      for (std::size_t x = 0; x < functor.fiber_size(g); ++x) {
        ++report.checks;
        const std::size_t y = functor.transport(h, g, x);
        if (hit[y])
          return fail({h.index, g.index}, "transport(h,g) = (" + std::to_string(h.index) + "," +
                                              std::to_string(g.index) + ") is not a bijection: " + std::to_string(y) +
                                              " is hit twice");
        hit[y] = true;
      }
    }

  const GroupElement e = group.identity();
  for (GroupElement g : group.elements())
    for (std::size_t x = 0; x < functor.fiber_size(g); ++x) {
      ++report.checks;
      if (functor.transport(e, g, x) != x)
        return fail({e.index, g.index, x}, "identity law fails: transport(e, " + std::to_string(g.index) + ") sends " +
                                               std::to_string(x) + " to " +
                                               std::to_string(functor.transport(e, g, x)));
    }

  auto compose_ok = [&](std::size_t h2, std::size_t h1, std::size_t g) {
    const GroupElement a{h2}, b{h1}, ge{g};
    const GroupElement moved = conjugate(group, ge, b);
    const GroupElement ab = group.multiply(a, b);
    for (std::size_t x = 0; x < functor.fiber_size(ge); ++x) {
      ++report.checks;
      const std::size_t left = functor.transport(a, moved, functor.transport(b, ge, x));
      const std::size_t right = functor.transport(ab, ge, x);
      if (left != right) {
        std::ostringstream os;
        os << "functoriality fails at (h2,h1,g) = (" << h2 << "," << h1 << "," << g << "), x = " << x
           << ": F(h2)(F(h1)(x)) = " << left << " but F(h2 h1)(x) = " << right;
        fail({h2, h1, g}, os.str());
        return false;
      }
    }
    return true;
  };

  const long double total = static_cast<long double>(m) * m * functor.total_size();
  if (total <= static_cast<long double>(limits.max_validation_checks)) {
    for (std::size_t h2 = 0; h2 < m; ++h2)
      for (std::size_t h1 = 0; h1 < m; ++h1)
        for (std::size_t g = 0; g < m; ++g)
          if (!compose_ok(h2, h1, g)) return report;
    return report;
  }

  report.sampled = true;
  std::mt19937_64 rng(kValidationSeed);
  const std::uint64_t budget = report.checks + limits.max_validation_checks;
  while (report.checks < budget) {
    const std::size_t h2 = rng() % m;
    const std::size_t h1 = rng() % m;
    const std::size_t g = rng() % m;
    if (!compose_ok(h2, h1, g)) return report;
    ++report.checks;  // counts empty fibers too, so the loop terminates
  }
  return report;
}

Rational expected_size(const EquivariantFunctor& functor) {
  return Rational(BigInt(functor.total_size()), BigInt(functor.group().order()));
}

GroupAction category_of_elements(const EquivariantFunctor& functor, const Limits& limits) {
  auto f = std::make_shared<const EquivariantFunctor>(functor);
  return GroupAction::create(
      functor.group(), functor.total_size(),
      [f](GroupElement h, std::size_t index) {
        const ElementsObject obj = f->object_at(index);
        const GroupElement target = conjugate(f->group(), obj.g, h);
        return f->object_index({target, f->transport(h, obj.g, obj.x)});
      },
      limits,
      [f](std::size_t index) {
        const ElementsObject obj = f->object_at(index);
        return "(" + f->group().element_label(obj.g) + ", " + f->fiber_label(obj.g, obj.x) + ")";
      });
}

GeneralTheoremReport verify_general_theorem(const EquivariantFunctor& functor, const Limits& limits) {
  GeneralTheoremReport report;
  report.functor_validation = validate_functor(functor, limits);
  if (!report.functor_validation.valid)
    throw ActionError("not a functor: " + report.functor_validation.failure, report.functor_validation);
  const GroupAction action = category_of_elements(functor, limits);
  report.group_order = functor.group().order();
  report.object_count = action.carrier_size();
  report.orbits = orbit_decomposition(action);
  report.elements_skeleton = weak_quotient(action);
  report.elements_cardinality = cardinality(report.elements_skeleton);
  report.expected_size = expected_size(functor);
  report.equal = report.elements_cardinality == report.expected_size;
  return report;
}

// ------------------------------------------------------------------ built-ins

EquivariantFunctor make_trivial_functor(const FiniteGroup& group) {
  return EquivariantFunctor::tabulate(
      group, [](GroupElement) { return std::size_t{1}; }, [](GroupElement, GroupElement, std::size_t) { return 0; });
}

namespace {

void require_valid(const EquivariantFunctor& f, const Limits& limits, const char* what) {
  const ValidationReport report = validate_functor(f, limits);
  if (!report.valid) throw std::logic_error(std::string(what) + " failed validation: " + report.failure);
}

}  // namespace

EquivariantFunctor make_fixed_point_functor(std::size_t n, const Limits& limits) {
  require_enumerable(static_cast<unsigned>(n), limits, "make_fixed_point_functor");
  const FiniteGroup sn = make_symmetric(n);
  std::vector<std::vector<std::size_t>> fixed(sn.order());
  for (GroupElement g : sn.elements()) {
    const Permutation sigma = sn.permutation(g);
    for (std::size_t i = 0; i < n; ++i)
      if (sigma(i) == i) fixed[g.index].push_back(i);
  }
  EquivariantFunctor f = EquivariantFunctor::tabulate(
      sn, [&](GroupElement g) { return fixed[g.index].size(); },
      [&](GroupElement h, GroupElement g, std::size_t x) {
        const std::size_t moved = sn.permutation(h)(fixed[g.index][x]);
        const auto& target = fixed[conjugate(sn, g, h).index];
        return static_cast<std::size_t>(std::lower_bound(target.begin(), target.end(), moved) - target.begin());
      });
  auto labels = std::make_shared<const std::vector<std::vector<std::size_t>>>(std::move(fixed));
  f.set_fiber_labels([labels](GroupElement g, std::size_t x) { return std::to_string((*labels)[g.index][x]); });
  require_valid(f, limits, "fixed-point functor");
  return f;
}

EquivariantFunctor make_cycle_tuple_functor(std::size_t n, const PVector& p, const Limits& limits) {
  if (p.degree() != n) throw std::invalid_argument("make_cycle_tuple_functor: p-vector length differs from n");
  require_enumerable(static_cast<unsigned>(n), limits, "make_cycle_tuple_functor");
  const FiniteGroup sn = make_symmetric(n);
  std::vector<std::vector<CycleTupleChoice>> fibers(sn.order());
  std::vector<std::map<CycleTupleChoice, std::size_t>> index(sn.order());
  for (GroupElement g : sn.elements()) {
    fibers[g.index] = list_cycle_tuples(sn.permutation(g), p);
    for (std::size_t x = 0; x < fibers[g.index].size(); ++x) index[g.index].emplace(fibers[g.index][x], x);
  }
  EquivariantFunctor f = EquivariantFunctor::tabulate(
      sn, [&](GroupElement g) { return fibers[g.index].size(); },
      [&](GroupElement h, GroupElement g, std::size_t x) {
        const CycleTupleChoice moved = fibers[g.index][x].relabeled(sn.permutation(h));
        const auto& target = index[conjugate(sn, g, h).index];
        const auto it = target.find(moved);
        if (it == target.end()) throw std::logic_error("relabeled cycle tuple is not a cycle tuple of the conjugate");
        return it->second;
      });
  auto labels = std::make_shared<const std::vector<std::vector<CycleTupleChoice>>>(std::move(fibers));
  f.set_fiber_labels([labels](GroupElement g, std::size_t x) { return (*labels)[g.index][x].str(); });
  require_valid(f, limits, "cycle-tuple functor");
  return f;
}

}  // namespace gcard
