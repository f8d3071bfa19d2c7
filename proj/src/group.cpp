#include "gcard/group.hpp"

#include <limits>
#include <sstream>

namespace gcard {

namespace detail {

class GroupModel {
 public:
  virtual ~GroupModel() = default;
  virtual std::size_t order() const = 0;
  virtual std::size_t identity() const = 0;
  virtual std::size_t multiply(std::size_t a, std::size_t b) const = 0;
  virtual std::size_t inverse(std::size_t a) const = 0;
  virtual std::string label(std::size_t a) const { return std::to_string(a); }
  virtual Permutation permutation(std::size_t) const { throw std::logic_error(name + " is not a symmetric group"); }
  virtual std::size_t symmetric_degree() const { return 0; }
  virtual bool is_symmetric() const { return false; }

  std::string name;
};

}  // namespace detail

namespace {

using detail::GroupModel;

class CyclicModel final : public GroupModel {
 public:
  explicit CyclicModel(std::size_t k) : k_(k) { name = "Z" + std::to_string(k); }
  std::size_t order() const override { return k_; }
  std::size_t identity() const override { return 0; }
  std::size_t multiply(std::size_t a, std::size_t b) const override { return (a + b) % k_; }
  std::size_t inverse(std::size_t a) const override { return (k_ - a) % k_; }

 private:
  std::size_t k_;
};

// Multiplication table is precomputed up to S_6 and element images are
// cached up to S_8; beyond that products are composed and re-ranked.
constexpr std::size_t kSymmetricTableDegree = 6;
constexpr std::size_t kSymmetricCacheDegree = 8;

class SymmetricModel final : public GroupModel {
 public:
  explicit SymmetricModel(std::size_t n) : n_(n) {
    name = "S" + std::to_string(n);
    order_ = 1;
    for (std::size_t i = 2; i <= n; ++i) {
      if (order_ > std::numeric_limits<std::size_t>::max() / i)
        throw std::overflow_error("make_symmetric: n! does not fit in an index");
      order_ *= i;
    }
    if (n > kSymmetricCacheDegree) return;
    Limits unbounded;
    unbounded.max_enumeration_n = static_cast<unsigned>(n);
    elements_ = enumerate_permutations(n, unbounded);
    inverse_.resize(order_);
    for (std::size_t i = 0; i < order_; ++i)
      inverse_[i] = static_cast<std::size_t>(permutation_rank(elements_[i].inverse()));
    if (n <= kSymmetricTableDegree) {
      table_.resize(order_ * order_);
      for (std::size_t a = 0; a < order_; ++a)
        for (std::size_t b = 0; b < order_; ++b)
          table_[a * order_ + b] = static_cast<std::size_t>(permutation_rank(elements_[a] * elements_[b]));
    }
  }

  std::size_t order() const override { return order_; }
  std::size_t identity() const override { return 0; }
  std::size_t multiply(std::size_t a, std::size_t b) const override {
    if (!table_.empty()) return table_[a * order_ + b];
    return static_cast<std::size_t>(permutation_rank(permutation(a) * permutation(b)));
  }
  std::size_t inverse(std::size_t a) const override {
    if (!inverse_.empty()) return inverse_[a];
    return static_cast<std::size_t>(permutation_rank(permutation(a).inverse()));
  }
  std::string label(std::size_t a) const override { return permutation(a).str(); }
  Permutation permutation(std::size_t a) const override {
    if (!elements_.empty()) return elements_[a];
    return permutation_unrank(n_, a);
  }
  std::size_t symmetric_degree() const override { return n_; }
  bool is_symmetric() const override { return true; }

 private:
  std::size_t n_;
  std::size_t order_ = 1;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> table_;
};

class ProductModel final : public GroupModel {
 public:
  ProductModel(FiniteGroup g, FiniteGroup h) : g_(std::move(g)), h_(std::move(h)) {
    name = g_.name() + "x" + h_.name();
  }
  std::size_t order() const override { return g_.order() * h_.order(); }
  std::size_t identity() const override { return pack(g_.identity(), h_.identity()); }
  std::size_t multiply(std::size_t a, std::size_t b) const override {
    return pack(g_.multiply(left(a), left(b)), h_.multiply(right(a), right(b)));
  }
  std::size_t inverse(std::size_t a) const override { return pack(g_.inverse(left(a)), h_.inverse(right(a))); }
  std::string label(std::size_t a) const override {
    return "(" + g_.element_label(left(a)) + "," + h_.element_label(right(a)) + ")";
  }

 private:
  std::size_t pack(GroupElement a, GroupElement b) const { return a.index * h_.order() + b.index; }
  GroupElement left(std::size_t a) const { return {a / h_.order()}; }
  GroupElement right(std::size_t a) const { return {a % h_.order()}; }

  FiniteGroup g_;
  FiniteGroup h_;
};

class CayleyModel final : public GroupModel {
 public:
  CayleyModel(std::size_t m, std::vector<std::size_t> table, std::size_t identity, std::vector<std::size_t> inverse)
      : m_(m), table_(std::move(table)), identity_(identity), inverse_(std::move(inverse)) {}
  std::size_t order() const override { return m_; }
  std::size_t identity() const override { return identity_; }
  std::size_t multiply(std::size_t a, std::size_t b) const override { return table_[a * m_ + b]; }
  std::size_t inverse(std::size_t a) const override { return inverse_[a]; }

 private:
  std::size_t m_;
  std::vector<std::size_t> table_;
  std::size_t identity_;
  std::vector<std::size_t> inverse_;
};

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ")";
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- FiniteGroup

std::size_t FiniteGroup::order() const { return model_->order(); }
const std::string& FiniteGroup::name() const { return model_->name; }
GroupElement FiniteGroup::identity() const { return {model_->identity()}; }

void FiniteGroup::check(GroupElement g) const {
  if (g.index >= order())
    throw std::out_of_range("element " + std::to_string(g.index) + " does not belong to " + name() +
                            " (order " + std::to_string(order()) + ")");
}

GroupElement FiniteGroup::element(std::size_t index) const {
  GroupElement g{index};
  check(g);
  return g;
}

std::vector<GroupElement> FiniteGroup::elements() const {
  std::vector<GroupElement> out(order());
  for (std::size_t i = 0; i < out.size(); ++i) out[i].index = i;
  return out;
}

GroupElement FiniteGroup::multiply(GroupElement a, GroupElement b) const {
  check(a);
  check(b);
  return {model_->multiply(a.index, b.index)};
}

GroupElement FiniteGroup::inverse(GroupElement a) const {
  check(a);
  return {model_->inverse(a.index)};
}

std::string FiniteGroup::element_label(GroupElement g) const {
  check(g);
  return model_->label(g.index);
}

bool FiniteGroup::is_symmetric() const { return model_->is_symmetric(); }

std::size_t FiniteGroup::symmetric_degree() const {
  if (!is_symmetric()) throw std::logic_error(name() + " is not a symmetric group");
  return model_->symmetric_degree();
}

Permutation FiniteGroup::permutation(GroupElement g) const {
  check(g);
  return model_->permutation(g.index);
}

GroupElement FiniteGroup::element_of(const Permutation& sigma) const {
  if (sigma.degree() != symmetric_degree())
    throw std::invalid_argument("permutation degree does not match " + name());
  return {static_cast<std::size_t>(permutation_rank(sigma))};
}

std::vector<std::vector<std::size_t>> FiniteGroup::cayley_table() const {
  const std::size_t m = order();
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a][b] = model_->multiply(a, b);
  return table;
}

// ------------------------------------------------------------------ factories

FiniteGroup make_cyclic(std::size_t k) {
  if (k == 0) throw std::invalid_argument("make_cyclic: k must be positive");
  return FiniteGroup(std::make_shared<CyclicModel>(k));
}

FiniteGroup make_symmetric(std::size_t n) { return FiniteGroup(std::make_shared<SymmetricModel>(n)); }

FiniteGroup make_product(const FiniteGroup& g, const FiniteGroup& h) {
  return FiniteGroup(std::make_shared<ProductModel>(g, h));
}

const char* to_string(GroupAxiom axiom) {
  switch (axiom) {
    case GroupAxiom::shape: return "shape";
    case GroupAxiom::closure: return "closure";
    case GroupAxiom::associativity: return "associativity";
    case GroupAxiom::identity: return "identity";
    case GroupAxiom::inverse: return "inverse";
  }
  return "unknown";
}

FiniteGroup from_cayley_table(const std::vector<std::vector<std::size_t>>& table, const Limits& limits,
                              std::string name) {
  const std::size_t m = table.size();
  if (m == 0) throw GroupAxiomError(GroupAxiom::shape, {}, "Cayley table is empty");
  if (m > limits.max_cayley_order)
    throw CapExceeded("Cayley table order " + std::to_string(m) + " exceeds the cap " +
                      std::to_string(limits.max_cayley_order));
  std::vector<std::size_t> flat(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    if (table[a].size() != m)
      throw GroupAxiomError(GroupAxiom::shape, {a},
                            "Cayley table row " + std::to_string(a) + " has " + std::to_string(table[a].size()) +
                                " entries, expected " + std::to_string(m));
    for (std::size_t b = 0; b < m; ++b) {
      if (table[a][b] >= m)
        throw GroupAxiomError(GroupAxiom::closure, {a, b},
                              "closure fails: " + std::to_string(a) + "*" + std::to_string(b) + " = " +
                                  std::to_string(table[a][b]) + " is not an element");
      flat[a * m + b] = table[a][b];
    }
  }
  auto mul = [&](std::size_t a, std::size_t b) { return flat[a * m + b]; };

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        const std::size_t left = mul(mul(a, b), c);
        const std::size_t right = mul(a, mul(b, c));
        if (left != right)
          throw GroupAxiomError(GroupAxiom::associativity, {a, b, c},
                                "associativity fails at " + triple(a, b, c) + ": (a*b)*c = " + std::to_string(left) +
                                    " but a*(b*c) = " + std::to_string(right));
      }

  std::size_t identity = m;
  for (std::size_t e = 0; e < m && identity == m; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < m && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) identity = e;
  }
  if (identity == m) throw GroupAxiomError(GroupAxiom::identity, {}, "no two-sided identity element");

  std::vector<std::size_t> inverse(m, m);
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < m; ++h)
      if (mul(g, h) == identity && mul(h, g) == identity) {
        inverse[g] = h;
        break;
      }
    if (inverse[g] == m)
      throw GroupAxiomError(GroupAxiom::inverse, {g}, "element " + std::to_string(g) + " has no inverse");
  }

  auto model = std::make_shared<CayleyModel>(m, std::move(flat), identity, std::move(inverse));
  model->name = std::move(name);
  return FiniteGroup(std::move(model));
}

GroupElement conjugate(const FiniteGroup& group, GroupElement g, GroupElement h) {
  return group.multiply(group.multiply(h, g), group.inverse(h));
}

std::size_t element_order(const FiniteGroup& group, GroupElement g) {
  std::size_t r = 1;
  for (GroupElement x = g; x != group.identity(); x = group.multiply(x, g)) ++r;
  return r;
}

bool is_abelian(const FiniteGroup& group) {
  for (GroupElement a : group.elements())
    for (GroupElement b : group.elements())
      if (group.multiply(a, b) != group.multiply(b, a)) return false;
  return true;
}

}  // namespace gcard
