#pragma once

#include <memory>
#include <string>

#include "amoebius/lattice.hpp"
#include "oracles.hpp"

namespace support {

inline std::shared_ptr<amoebius::FiniteGroup const> group(std::string const &spec) {
  return std::make_shared<amoebius::FiniteGroup const>(amoebius::build_from_spec(spec));
}

inline std::shared_ptr<amoebius::SubgroupLattice const> lattice(std::string const &spec) {
  return std::make_shared<amoebius::SubgroupLattice const>(
      amoebius::enumerate_subgroups(group(spec)));
}

inline oracle::Members to_members(amoebius::ElementSet const &s, std::size_t n) {
  oracle::Members m(n, false);
  s.for_each([&](amoebius::ElementIndex x) { m[x] = true; });
  return m;
}

/// First subgroup of the given order whose members satisfy `pred`.
template <class Pred>
amoebius::SubgroupId find_subgroup(amoebius::SubgroupLattice const &lat, std::size_t order,
                                   Pred pred) {
  for (amoebius::SubgroupId id : lat.by_order().at(order))
    if (pred(lat.subgroup(id)))
      return id;
  throw std::runtime_error("no such subgroup");
}

inline amoebius::SubgroupId any_of_order(amoebius::SubgroupLattice const &lat,
                                         std::size_t order) {
  return lat.by_order().at(order).front();
}

inline amoebius::SubgroupId normal_of_order(amoebius::SubgroupLattice const &lat,
                                            std::size_t order) {
  return find_subgroup(lat, order, [&](amoebius::Subgroup const &h) {
    return lat.group().is_normal(h);
  });
}

inline amoebius::SubgroupId id_of_perm(amoebius::SubgroupLattice const &lat,
                                       std::string const &cycles) {
  amoebius::FiniteGroup const &g = lat.group();
  auto p = amoebius::Permutation::from_cycles(cycles, g.degree());
  amoebius::ElementIndex x = g.index_of(p);
  return lat.id_of(g.generate(std::span<amoebius::ElementIndex const>(&x, 1)));
}

} // namespace support
