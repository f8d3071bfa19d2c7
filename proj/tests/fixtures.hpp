#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gcard/equivariant.hpp"
#include "gcard/group.hpp"

// Small groups given by explicit Cayley tables, and functors on them whose
// fibers are subsets of G or G x G transported by conjugation.

namespace fixtures {

using Table = std::vector<std::vector<std::size_t>>;

/// Dihedral group of order 2m; index a + m*f stands for r^a s^f.
inline Table dihedral_table(std::size_t m) {
  Table t(2 * m, std::vector<std::size_t>(2 * m));
  for (std::size_t x = 0; x < 2 * m; ++x)
    for (std::size_t y = 0; y < 2 * m; ++y) {
      const std::size_t a1 = x % m, f1 = x / m, a2 = y % m, f2 = y / m;
      // r^a1 s^f1 r^a2 s^f2 = r^(a1 +- a2) s^(f1 xor f2)
      const std::size_t a = f1 == 0 ? (a1 + a2) % m : (a1 + m - a2) % m;
      t[x][y] = a + m * (f1 ^ f2);
    }
  return t;
}

/// Quaternion group; index 4*s + u stands for (-1)^s times one of 1, i, j, k.
inline Table quaternion_table() {
  // unit[u][v] = {sign, w} with u*v = (-1)^sign w, units ordered 1, i, j, k
  const std::array<std::array<std::array<std::size_t, 2>, 4>, 4> unit{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  Table t(8, std::vector<std::size_t>(8));
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      const auto [s, w] = unit[x % 4][y % 4];
      t[x][y] = 4 * ((x / 4 + y / 4 + s) % 2) + w;
    }
  return t;
}

inline gcard::FiniteGroup d4() { return gcard::from_cayley_table(dihedral_table(4), {}, "D4"); }
inline gcard::FiniteGroup d3() { return gcard::from_cayley_table(dihedral_table(3), {}, "D3"); }
inline gcard::FiniteGroup q8() { return gcard::from_cayley_table(quaternion_table(), {}, "Q8"); }

using Key = std::vector<std::size_t>;

/// F(g) = members(g), a set of keys; F(h) applies move(h, key) to each key.
/// Fiber elements are indexed in sorted key order.
inline gcard::EquivariantFunctor keyed_functor(const gcard::FiniteGroup& group,
                                               const std::function<std::vector<Key>(gcard::GroupElement)>& members,
                                               const std::function<Key(gcard::GroupElement, const Key&)>& move) {
  std::vector<std::vector<Key>> fibers;
  std::vector<std::map<Key, std::size_t>> index;
  for (gcard::GroupElement g : group.elements()) {
    auto keys = members(g);
    std::sort(keys.begin(), keys.end());
    std::map<Key, std::size_t> lookup;
    for (std::size_t i = 0; i < keys.size(); ++i) lookup[keys[i]] = i;
    fibers.push_back(std::move(keys));
    index.push_back(std::move(lookup));
  }
  return gcard::EquivariantFunctor::tabulate(
      group, [&](gcard::GroupElement g) { return fibers[g.index].size(); },
      [&](gcard::GroupElement h, gcard::GroupElement g, std::size_t x) {
        const gcard::GroupElement target = gcard::conjugate(group, g, h);
        return index[target.index].at(move(h, fibers[g.index][x]));
      });
}

inline Key conjugate_key(const gcard::FiniteGroup& group, gcard::GroupElement h, const Key& key) {
  Key out;
  for (std::size_t v : key) out.push_back(gcard::conjugate(group, gcard::GroupElement{v}, h).index);
  return out;
}

/// F(g) = centralizer of g. E(|F|) is the number of conjugacy classes.
inline gcard::EquivariantFunctor centralizer_functor(const gcard::FiniteGroup& group) {
  return keyed_functor(
      group,
      [&](gcard::GroupElement g) {
        std::vector<Key> out;
        for (gcard::GroupElement x : group.elements())
          if (group.multiply(x, g) == group.multiply(g, x)) out.push_back({x.index});
        return out;
      },
      [&](gcard::GroupElement h, const Key& k) { return conjugate_key(group, h, k); });
}

/// F(g) = {x : x^2 = g}.
inline gcard::EquivariantFunctor square_root_functor(const gcard::FiniteGroup& group) {
  return keyed_functor(
      group,
      [&](gcard::GroupElement g) {
        std::vector<Key> out;
        for (gcard::GroupElement x : group.elements())
          if (group.multiply(x, x) == g) out.push_back({x.index});
        return out;
      },
      [&](gcard::GroupElement h, const Key& k) { return conjugate_key(group, h, k); });
}

/// F(g) = {(a, b) : a b = g}. Every fiber has |G| elements, so E(|F|) = |G|.
inline gcard::EquivariantFunctor factorization_functor(const gcard::FiniteGroup& group) {
  return keyed_functor(
      group,
      [&](gcard::GroupElement g) {
        std::vector<Key> out;
        for (gcard::GroupElement a : group.elements())
          for (gcard::GroupElement b : group.elements())
            if (group.multiply(a, b) == g) out.push_back({a.index, b.index});
        return out;
      },
      [&](gcard::GroupElement h, const Key& k) { return conjugate_key(group, h, k); });
}

}  // namespace fixtures
