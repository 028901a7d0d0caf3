#pragma once

// Deliberately naive reference computations. They only use the raw
// multiplication table, never the library's closure or lattice code.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "amoebius/group.hpp"

namespace oracle {

using amoebius::ElementIndex;
using amoebius::FiniteGroup;
using Members = std::vector<bool>;

inline Members close(FiniteGroup const &g, Members s) {
  s[g.identity()] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ElementIndex> cur;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i])
        cur.push_back(static_cast<ElementIndex>(i));
    for (ElementIndex a : cur)
      for (ElementIndex b : cur) {
        ElementIndex c = g.mul(a, b);
        if (!s[c]) {
          s[c] = true;
          grew = true;
        }
      }
  }
  return s;
}

inline Members close_elements(FiniteGroup const &g, std::vector<ElementIndex> const &xs) {
  Members s(g.order(), false);
  for (ElementIndex x : xs)
    s[x] = true;
  return close(g, s);
}

inline std::size_t count(Members const &s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), true));
}

/// Subgroups generated by at most two elements, then closed under
/// pairwise joins until nothing new appears.
inline std::set<Members> all_subgroups(FiniteGroup const &g) {
  std::size_t const n = g.order();
  std::set<Members> found;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      found.insert(close_elements(g, {static_cast<ElementIndex>(a), static_cast<ElementIndex>(b)}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Members> cur(found.begin(), found.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        Members u(n, false);
        for (std::size_t k = 0; k < n; ++k)
          u[k] = cur[i][k] || cur[j][k];
        if (found.insert(close(g, u)).second)
          grew = true;
      }
  }
  return found;
}

inline Members commutator_closure(FiniteGroup const &g) {
  std::vector<ElementIndex> comms;
  for (ElementIndex x = 0; x < g.order(); ++x)
    for (ElementIndex y = 0; y < g.order(); ++y)
      comms.push_back(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
  return close_elements(g, comms);
}

inline Members conjugate(FiniteGroup const &g, Members const &h, ElementIndex x) {
  Members out(h.size(), false);
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i])
      out[g.mul(g.mul(g.inv(x), static_cast<ElementIndex>(i)), x)] = true;
  return out;
}

inline Members normalizer_scan(FiniteGroup const &g, Members const &h) {
  Members out(g.order(), false);
  for (ElementIndex x = 0; x < g.order(); ++x)
    out[x] = conjugate(g, h, x) == h;
  return out;
}

inline std::set<Members> conjugates(FiniteGroup const &g, Members const &h) {
  std::set<Members> out;
  for (ElementIndex x = 0; x < g.order(); ++x)
    out.insert(conjugate(g, h, x));
  return out;
}

inline Members center_scan(FiniteGroup const &g) {
  Members out(g.order(), false);
  for (ElementIndex x = 0; x < g.order(); ++x) {
    bool central = true;
    for (ElementIndex y = 0; y < g.order() && central; ++y)
      central = g.mul(x, y) == g.mul(y, x);
    out[x] = central;
  }
  return out;
}

/// Calls f on every t-tuple of elements.
inline void for_each_tuple(std::size_t n, unsigned t,
                           std::function<void(std::vector<ElementIndex> const &)> const &f) {
  std::vector<ElementIndex> tuple(t, 0);
  while (true) {
    f(tuple);
    unsigned i = 0;
    while (i < t && ++tuple[i] == n)
      tuple[i++] = 0;
    if (i == t)
      return;
  }
}

/// Tuples lying entirely inside some member of `family`.
inline std::size_t union_of_powers(FiniteGroup const &g, std::set<Members> const &family,
                                   unsigned t) {
  std::size_t hits = 0;
  for_each_tuple(g.order(), t, [&](std::vector<ElementIndex> const &tuple) {
    for (Members const &h : family)
      if (std::all_of(tuple.begin(), tuple.end(), [&](ElementIndex x) { return h[x]; })) {
        ++hits;
        return;
      }
  });
  return hits;
}

inline std::size_t generating_tuples(FiniteGroup const &g, unsigned t) {
  std::size_t hits = 0;
  for_each_tuple(g.order(), t, [&](std::vector<ElementIndex> const &tuple) {
    if (count(close_elements(g, tuple)) == g.order())
      ++hits;
  });
  return hits;
}

inline std::size_t totient(std::size_t n) {
  std::size_t c = 0;
  for (std::size_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1)
      ++c;
  return c;
}

} // namespace oracle
