#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "amoebius/group.hpp"
#include "amoebius/poset.hpp"

namespace amoebius {

using SubgroupId = std::uint32_t;

inline constexpr std::size_t kDefaultSubgroupBudget = 200000;

struct LatticeOptions {
  std::size_t subgroup_budget = kDefaultSubgroupBudget;
};

/// Every subgroup of a finite group, ordered by (order, lexicographic
/// member set). Id 0 is the trivial subgroup and the last id is G.
class SubgroupLattice {
public:
  /// Builds the lattice from an already complete, duplicate-free list.
  SubgroupLattice(std::shared_ptr<FiniteGroup const> group, std::vector<Subgroup> subgroups);

  FiniteGroup const &group() const noexcept { return *group_; }
  std::shared_ptr<FiniteGroup const> const &group_ptr() const noexcept { return group_; }

  std::size_t size() const noexcept { return subgroups_.size(); }
  Subgroup const &subgroup(SubgroupId id) const { return subgroups_[id]; }
  std::vector<Subgroup> const &subgroups() const noexcept { return subgroups_; }
  SubgroupId trivial_id() const noexcept { return 0; }
  SubgroupId top_id() const noexcept { return static_cast<SubgroupId>(size() - 1); }

  std::optional<SubgroupId> find(ElementSet const &members) const;
  SubgroupId id_of(Subgroup const &h) const;

  bool leq(SubgroupId h, SubgroupId k) const noexcept { return order_.leq(h, k); }
  ElementSet const &below(SubgroupId k) const { return order_.down(k); }
  ElementSet const &above(SubgroupId h) const { return order_.up(h); }
  Poset const &poset() const noexcept { return order_; }

  std::vector<SubgroupId> const &maximals() const noexcept { return maximals_; }
  std::map<std::size_t, std::vector<SubgroupId>> const &by_order() const noexcept {
    return by_order_;
  }

  /// Hall's mu(H, G) on the subgroup lattice.
  MobiusValue mu(SubgroupId h) const { return order_.moebius_column(top_id())[h]; }
  MobiusValue mu(SubgroupId h, SubgroupId k) const { return order_.moebius(h, k); }

  /// Number of subgroups of H.
  std::size_t sigma(SubgroupId h) const { return below(h).count(); }

private:
  std::shared_ptr<FiniteGroup const> group_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<ElementSet, SubgroupId, ElementSetHash> ids_;
  Poset order_;
  std::vector<SubgroupId> maximals_;
  std::map<std::size_t, std::vector<SubgroupId>> by_order_;
};

/// Complete subgroup lattice by cyclic extension over conjugacy class
/// representatives. Throws BudgetExceeded past the subgroup budget.
SubgroupLattice enumerate_subgroups(std::shared_ptr<FiniteGroup const> group,
                                    LatticeOptions const &options = {});

Subgroup normalizer(FiniteGroup const &g, Subgroup const &h);
Subgroup intersect(FiniteGroup const &g, Subgroup const &a, Subgroup const &b);
Subgroup join(FiniteGroup const &g, Subgroup const &a, Subgroup const &b);

/// Intersection of the maximal subgroups containing H; G when there are none.
SubgroupId closure_intersection_of_maximals(SubgroupLattice const &lattice, SubgroupId h);
/// The closure above for every subgroup id.
std::vector<std::size_t> maximal_intersection_closure(SubgroupLattice const &lattice);

SubgroupId frattini(SubgroupLattice const &lattice);

/// All K with KN = G, K meet N = 1 and H <= K. Throws NotNormal.
std::vector<SubgroupId> complements(SubgroupLattice const &lattice, SubgroupId n,
                                    SubgroupId h);

bool is_nilpotent(SubgroupLattice const &lattice);

} // namespace amoebius
