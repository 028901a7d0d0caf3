#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace amoebius {

struct CatalogEntry {
  std::string spec;
  std::size_t order;
  bool solvable;
};

/// Direct products of atoms with order at most `max_order`, one entry per
/// multiset of factors. Cyclic factors are prime powers, so each abelian
/// group appears once; D:3 and A:3 are left out as copies of S:3 and C:3.
/// Sorted by (order, spec).
std::vector<CatalogEntry> catalog(std::size_t max_order);

std::vector<CatalogEntry> solvable_catalog(std::size_t max_order);

} // namespace amoebius
