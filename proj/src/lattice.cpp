#include "amoebius/lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "amoebius/errors.hpp"

namespace amoebius {

namespace {

bool subgroup_less(Subgroup const &a, Subgroup const &b) {
  if (a.order != b.order)
    return a.order < b.order;
  return a.members.lex_less(b.members);
}

bool is_prime_power(std::size_t n) {
  if (n < 2)
    return false;
  std::size_t p = 2;
  while (p * p <= n && n % p != 0)
    ++p;
  if (n % p != 0)
    return true; // n itself is prime
  while (n % p == 0)
    n /= p;
  return n == 1;
}

} // namespace

SubgroupLattice::SubgroupLattice(std::shared_ptr<FiniteGroup const> group,
                                 std::vector<Subgroup> subgroups)
    : group_(std::move(group)), subgroups_(std::move(subgroups)) {
  std::sort(subgroups_.begin(), subgroups_.end(), subgroup_less);
  std::size_t const n = subgroups_.size();
  if (n == 0 || subgroups_.front().order != 1 || subgroups_.back().order != group_->order())
    throw InvalidArgument("subgroup list must contain the trivial group and G");
  for (std::size_t i = 0; i < n; ++i) {
    if (!ids_.emplace(subgroups_[i].members, static_cast<SubgroupId>(i)).second)
      throw InvalidArgument("duplicate subgroup in lattice");
    by_order_[subgroups_[i].order].push_back(static_cast<SubgroupId>(i));
  }

  std::vector<ElementSet> down(n, ElementSet(n));
  for (std::size_t k = 0; k < n; ++k) {
    Subgroup const &K = subgroups_[k];
    down[k].set(k);
    for (auto const &[ord, ids] : by_order_) {
      if (ord >= K.order)
        break;
      if (K.order % ord != 0)
        continue;
      for (SubgroupId h : ids) {
        bool inside = true;
        for (ElementIndex x : subgroups_[h].gens)
          if (!K.contains(x)) {
            inside = false;
            break;
          }
        if (inside)
          down[k].set(h);
      }
    }
  }
  order_ = Poset(std::move(down));

  // maximal: only itself and G above
  for (std::size_t k = 0; k + 1 < n; ++k)
    if (order_.up(k).count() == 2)
      maximals_.push_back(static_cast<SubgroupId>(k));
}

std::optional<SubgroupId> SubgroupLattice::find(ElementSet const &members) const {
  auto it = ids_.find(members);
  if (it == ids_.end())
    return std::nullopt;
  return it->second;
}

SubgroupId SubgroupLattice::id_of(Subgroup const &h) const {
  auto id = find(h.members);
  if (!id)
    throw ImageNotInLattice("subgroup not present in lattice");
  return *id;
}

SubgroupLattice enumerate_subgroups(std::shared_ptr<FiniteGroup const> group,
                                    LatticeOptions const &options) {
  FiniteGroup const &G = *group;

  // Cyclic subgroups of prime-power order; every subgroup is generated by them.
  std::vector<ElementIndex> zuppos;
  {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (std::size_t x = 1; x < G.order(); ++x) {
      if (!is_prime_power(G.element_order(static_cast<ElementIndex>(x))))
        continue;
      ElementIndex g = static_cast<ElementIndex>(x);
      Subgroup c = G.generate(std::span<ElementIndex const>(&g, 1));
      if (seen.insert(c.members).second)
        zuppos.push_back(g);
    }
  }

  std::vector<Subgroup> all;
  std::unordered_set<ElementSet, ElementSetHash> known;
  std::vector<std::size_t> reps;

  auto add_class = [&](Subgroup k) {
    std::size_t first = all.size();
    known.insert(k.members);
    all.push_back(std::move(k));
    reps.push_back(first);
    for (std::size_t i = first; i < all.size(); ++i) {
      for (ElementIndex s : G.generators()) {
        Subgroup c = G.conjugate(all[i], s);
        if (known.insert(c.members).second) {
          all.push_back(std::move(c));
          if (all.size() > options.subgroup_budget)
            throw BudgetExceeded("subgroup count exceeds budget " +
                                 std::to_string(options.subgroup_budget));
        }
      }
    }
  };

  add_class(G.trivial());
  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (ElementIndex z : zuppos) {
      Subgroup const &R = all[reps[r]];
      if (R.contains(z))
        continue;
      Subgroup k = G.extend(R, z);
      if (!known.contains(k.members))
        add_class(std::move(k));
    }
  }
  return SubgroupLattice(std::move(group), std::move(all));
}

Subgroup normalizer(FiniteGroup const &g, Subgroup const &h) {
  ElementSet n(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool fixes = true;
    for (ElementIndex y : h.gens)
      if (!h.contains(g.conj(y, static_cast<ElementIndex>(x)))) {
        fixes = false;
        break;
      }
    if (fixes)
      n.set(x);
  }
  return g.from_members(std::move(n));
}

Subgroup intersect(FiniteGroup const &g, Subgroup const &a, Subgroup const &b) {
  return g.from_members(a.members & b.members);
}

Subgroup join(FiniteGroup const &g, Subgroup const &a, Subgroup const &b) {
  return g.join(a, b);
}

SubgroupId closure_intersection_of_maximals(SubgroupLattice const &lattice, SubgroupId h) {
  ElementSet meet(lattice.group().order());
  bool any = false;
  for (SubgroupId m : lattice.maximals()) {
    if (!lattice.leq(h, m))
      continue;
    if (!any) {
      meet = lattice.subgroup(m).members;
      any = true;
    } else {
      meet &= lattice.subgroup(m).members;
    }
  }
  if (!any)
    return lattice.top_id();
  auto id = lattice.find(meet);
  if (!id)
    throw ImageNotInLattice("intersection of maximals missing from lattice");
  return *id;
}

std::vector<std::size_t> maximal_intersection_closure(SubgroupLattice const &lattice) {
  std::vector<std::size_t> cl(lattice.size());
  for (std::size_t h = 0; h < lattice.size(); ++h)
    cl[h] = closure_intersection_of_maximals(lattice, static_cast<SubgroupId>(h));
  return cl;
}

SubgroupId frattini(SubgroupLattice const &lattice) {
  return closure_intersection_of_maximals(lattice, lattice.trivial_id());
}

std::vector<SubgroupId> complements(SubgroupLattice const &lattice, SubgroupId n,
                                    SubgroupId h) {
  FiniteGroup const &G = lattice.group();
  Subgroup const &N = lattice.subgroup(n);
  if (!G.is_normal(N))
    throw NotNormal("complements: subgroup is not normal");
  if (G.order() % N.order != 0)
    return {};
  std::size_t const want = G.order() / N.order;
  std::vector<SubgroupId> out;
  auto it = lattice.by_order().find(want);
  if (it == lattice.by_order().end())
    return out;
  for (SubgroupId k : it->second) {
    if (!lattice.leq(h, k))
      continue;
    if (lattice.subgroup(k).members.intersection_count(N.members) == 1)
      out.push_back(k);
  }
  return out;
}

bool is_nilpotent(SubgroupLattice const &lattice) {
  FiniteGroup const &G = lattice.group();
  for (SubgroupId m : lattice.maximals())
    if (!G.is_normal(lattice.subgroup(m)))
      return false;
  return true;
}

} // namespace amoebius
