#include "amoebius/catalog.hpp"

#include <algorithm>
#include <functional>

namespace amoebius {

namespace {

struct Atom {
  std::string spec;
  std::size_t order;
  bool solvable;
};

bool is_prime_power(std::size_t n) {
  if (n < 2)
    return false;
  std::size_t p = 2;
  while (n % p != 0)
    ++p;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

std::vector<Atom> atoms(std::size_t max_order) {
  std::vector<Atom> out;
  for (std::size_t q = 2; q <= max_order; ++q)
    if (is_prime_power(q))
      out.push_back({"C:" + std::to_string(q), q, true});
  std::size_t fact = 2;
  for (std::size_t n = 3; fact * n <= max_order; ++n) {
    fact *= n;
    out.push_back({"S:" + std::to_string(n), fact, n < 5});
  }
  fact = 6;
  for (std::size_t n = 4; fact * n / 2 <= max_order; ++n) {
    fact *= n;
    out.push_back({"A:" + std::to_string(n), fact / 2, n < 5});
  }
  for (std::size_t n = 4; 2 * n <= max_order; ++n)
    out.push_back({"D:" + std::to_string(n), 2 * n, true});
  if (max_order >= 8)
    out.push_back({"Q:8", 8, true});
  return out;
}

} // namespace

std::vector<CatalogEntry> catalog(std::size_t max_order) {
  std::vector<Atom> const base = atoms(max_order);
  std::vector<CatalogEntry> out;
  std::vector<std::size_t> picked;
  out.push_back({"C:1", 1, true});
  std::function<void(std::size_t, std::size_t, bool)> grow = [&](std::size_t from,
                                                                 std::size_t order,
                                                                 bool solvable) {
    for (std::size_t i = from; i < base.size(); ++i) {
      if (order * base[i].order > max_order)
        continue;
      picked.push_back(i);
      std::string spec;
      for (std::size_t k : picked)
        spec += (spec.empty() ? "" : "x") + base[k].spec;
      bool s = solvable && base[i].solvable;
      out.push_back({spec, order * base[i].order, s});
      grow(i, order * base[i].order, s);
      picked.pop_back();
    }
  };
  grow(0, 1, true);
  std::sort(out.begin(), out.end(), [](CatalogEntry const &a, CatalogEntry const &b) {
    return a.order != b.order ? a.order < b.order : a.spec < b.spec;
  });
  return out;
}

std::vector<CatalogEntry> solvable_catalog(std::size_t max_order) {
  std::vector<CatalogEntry> out = catalog(max_order);
  std::erase_if(out, [](CatalogEntry const &e) { return !e.solvable; });
  return out;
}

} // namespace amoebius
