#include "amoebius/eulerian.hpp"

#include <functional>

#include "amoebius/errors.hpp"

namespace amoebius {

namespace {

void require_t(unsigned t) {
  if (t < 1)
    throw InvalidArgument("t must be at least 1");
}

// n^t, or budget + 1 when it does not fit.
std::size_t bounded_power(std::size_t n, unsigned t, std::size_t budget) {
  std::size_t r = 1;
  for (unsigned i = 0; i < t; ++i) {
    if (n != 0 && r > budget / n)
      return budget + 1;
    r *= n;
  }
  return r;
}

bool product_is_whole(FiniteGroup const &g, Subgroup const &h, Subgroup const &n) {
  return h.order * n.order == g.order() * h.members.intersection_count(n.members);
}

} // namespace

std::vector<ExactInt> TupleCounts::invert_below(std::vector<ExactInt> totals) const {
  // totals[K] = sum over L <= K of exact[L]; peel off in increasing order
  std::vector<ExactInt> exact(totals.size());
  for (std::size_t k = 0; k < totals.size(); ++k) {
    ExactInt v = std::move(totals[k]);
    lattice_->below(static_cast<SubgroupId>(k)).for_each([&](ElementIndex l) {
      if (l != k)
        v -= exact[l];
    });
    exact[k] = std::move(v);
  }
  return exact;
}

std::vector<ExactInt> const &TupleCounts::exact_generation(unsigned t) {
  require_t(t);
  std::scoped_lock lock(mutex_);
  if (auto it = exact_.find(t); it != exact_.end())
    return it->second;
  std::vector<ExactInt> totals(lattice_->size());
  for (std::size_t k = 0; k < totals.size(); ++k)
    totals[k] = ipow(lattice_->subgroup(static_cast<SubgroupId>(k)).order, t);
  return exact_.emplace(t, invert_below(std::move(totals))).first->second;
}

std::vector<ExactInt> const &TupleCounts::gamma_tuples(unsigned t) {
  require_t(t);
  std::scoped_lock lock(mutex_);
  if (auto it = gamma_.find(t); it != gamma_.end())
    return it->second;
  std::vector<ExactInt> totals(lattice_->size());
  for (std::size_t k = 0; k < totals.size(); ++k)
    totals[k] = ipow(lattice_->sigma(static_cast<SubgroupId>(k)), t);
  return gamma_.emplace(t, invert_below(std::move(totals))).first->second;
}

ExactInt phi_hall(SubgroupLattice const &lattice, unsigned t) {
  require_t(t);
  std::vector<MobiusValue> const &mu = lattice.poset().moebius_column(lattice.top_id());
  ExactInt sum = 0;
  for (std::size_t h = 0; h < lattice.size(); ++h)
    if (mu[h] != 0)
      sum += ExactInt(mu[h]) * ipow(lattice.subgroup(static_cast<SubgroupId>(h)).order, t);
  return sum;
}

ExactInt phi_bruteforce(FiniteGroup const &g, unsigned t, std::size_t budget) {
  require_t(t);
  if (bounded_power(g.order(), t, budget) > budget)
    throw BudgetExceeded("phi_bruteforce: |G|^t exceeds the tuple budget");
  std::size_t const n = g.order();
  ExactInt count = 0;
  std::function<void(unsigned, Subgroup const &)> scan = [&](unsigned depth,
                                                             Subgroup const &prefix) {
    if (depth == t) {
      if (prefix.order == n)
        ++count;
      return;
    }
    for (std::size_t x = 0; x < n; ++x)
      scan(depth + 1, g.extend(prefix, static_cast<ElementIndex>(x)));
  };
  scan(0, g.trivial());
  return count;
}

ExactInt omega_A(ClassPoset const &poset, ClassId c, unsigned t, TupleCounts &counts) {
  std::vector<ExactInt> const &exact = counts.exact_generation(t);
  ExactInt sum = 0;
  poset.subgroups_below(c).for_each([&](ElementIndex k) { sum += exact[k]; });
  return sum;
}

ExactInt omega_A(ClassPoset const &poset, ClassId c, unsigned t) {
  TupleCounts counts(poset.lattice_ptr());
  return omega_A(poset, c, t, counts);
}

ExactInt omega_A_inclusion_exclusion(ClassPoset const &poset, ClassId c, unsigned t,
                                     std::size_t max_orbit) {
  require_t(t);
  std::vector<SubgroupId> const &orbit = poset.cls(c).members;
  if (orbit.size() > max_orbit || orbit.size() >= 63)
    throw BudgetExceeded("orbit too large for inclusion-exclusion");
  SubgroupLattice const &lat = poset.lattice();
  ExactInt sum = 0;
  std::uint64_t const subsets = std::uint64_t{1} << orbit.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    ElementSet meet(lat.group().order());
    bool first = true;
    int bits = 0;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      if (!((mask >> i) & 1u))
        continue;
      ++bits;
      if (first) {
        meet = lat.subgroup(orbit[i]).members;
        first = false;
      } else {
        meet &= lat.subgroup(orbit[i]).members;
      }
    }
    ExactInt term = ipow(meet.count(), t);
    if (bits % 2)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

ExactInt psi_A(ClassPoset const &poset, ClassId c, unsigned t, TupleCounts &counts) {
  std::vector<ExactInt> const &exact = counts.exact_generation(t);
  ExactInt sum = 0;
  for (SubgroupId m : poset.cls(c).members)
    sum += exact[m];
  return sum;
}

ExactInt phi_via_classes(ClassPoset const &poset, unsigned t, TupleCounts &counts) {
  ExactInt sum = 0;
  std::vector<MobiusValue> const &mu = poset.poset().moebius_column(poset.top());
  for (ClassId c = 0; c < poset.size(); ++c)
    if (mu[c] != 0)
      sum += ExactInt(mu[c]) * omega_A(poset, c, t, counts);
  return sum;
}

ExactInt phi_via_classes(ClassPoset const &poset, unsigned t) {
  TupleCounts counts(poset.lattice_ptr());
  return phi_via_classes(poset, t, counts);
}

namespace {

// phi(G/N, t), summed over the interval [N, G]
ExactInt quotient_phi(SubgroupLattice const &lattice, SubgroupId n, unsigned t) {
  std::vector<MobiusValue> const &mu = lattice.poset().moebius_column(lattice.top_id());
  std::size_t const order = lattice.subgroup(n).order;
  ExactInt sum = 0;
  lattice.above(n).for_each([&](ElementIndex h) {
    if (mu[h] != 0)
      sum += ExactInt(mu[h]) * ipow(lattice.subgroup(h).order / order, t);
  });
  return sum;
}

} // namespace

RelativeCount phi_relative(SubgroupLattice const &lattice, SubgroupId n, unsigned t) {
  require_t(t);
  FiniteGroup const &g = lattice.group();
  Subgroup const &N = lattice.subgroup(n);
  if (!g.is_normal(N))
    throw NotNormal("phi_relative: subgroup is not normal");
  std::vector<MobiusValue> const &mu = lattice.poset().moebius_column(lattice.top_id());
  RelativeCount r;
  if (quotient_phi(lattice, n, t) == 0) {
    r.value = 0;
    r.quotient_generable = false;
    r.warning = "G/N is not generated by " + std::to_string(t) + " elements; returning 0";
    return r;
  }
  for (std::size_t h = 0; h < lattice.size(); ++h) {
    if (mu[h] == 0)
      continue;
    Subgroup const &H = lattice.subgroup(static_cast<SubgroupId>(h));
    if (!product_is_whole(g, H, N))
      continue;
    r.value += ExactInt(mu[h]) * ipow(H.members.intersection_count(N.members), t);
  }
  return r;
}

std::optional<std::vector<ElementIndex>> find_generating_lift(SubgroupLattice const &lattice,
                                                              SubgroupId n, unsigned t) {
  require_t(t);
  FiniteGroup const &g = lattice.group();
  Subgroup const &N = lattice.subgroup(n);
  if (!g.is_normal(N))
    throw NotNormal("find_generating_lift: subgroup is not normal");
  if (quotient_phi(lattice, n, t) == 0)
    return std::nullopt;
  std::vector<ElementIndex> tuple(t);
  std::function<bool(unsigned, Subgroup const &)> search = [&](unsigned depth,
                                                               Subgroup const &span) {
    if (depth == t)
      return span.order == g.order();
    for (std::size_t x = 0; x < g.order(); ++x) {
      tuple[depth] = static_cast<ElementIndex>(x);
      if (search(depth + 1, g.extend(span, static_cast<ElementIndex>(x))))
        return true;
    }
    return false;
  };
  if (search(0, N))
    return tuple;
  return std::nullopt;
}

ExactInt phi_relative_via_classes(ClassPoset const &poset, SubgroupId n,
                                  std::vector<ElementIndex> const &lift, std::size_t budget) {
  SubgroupLattice const &lat = poset.lattice();
  FiniteGroup const &g = lat.group();
  Subgroup const &N = lat.subgroup(n);
  auto const t = static_cast<unsigned>(lift.size());
  require_t(t);
  if (!g.is_normal(N))
    throw NotNormal("phi_relative_via_classes: subgroup is not normal");
  if (!poset.automorphisms().leaves_invariant(N))
    throw NotInvariant("phi_relative_via_classes: subgroup is not A-invariant");
  {
    Subgroup span = N;
    for (ElementIndex x : lift)
      span = g.extend(span, x);
    if (span.order != g.order())
      throw LiftNotGenerating("the lift does not generate G modulo N");
  }
  if (bounded_power(N.order, t, budget) > budget)
    throw BudgetExceeded("phi_relative_via_classes: |N|^t exceeds the tuple budget");

  // hits[K]: tuples n in N^t with <g_i n_i> = K
  std::vector<ExactInt> hits(lat.size());
  std::vector<ElementIndex> const nmembers = N.members.to_indices();
  std::function<void(unsigned, Subgroup const &)> scan = [&](unsigned depth,
                                                             Subgroup const &span) {
    if (depth == t) {
      hits[lat.id_of(span)] += 1;
      return;
    }
    for (ElementIndex x : nmembers)
      scan(depth + 1, g.extend(span, g.mul(lift[depth], x)));
  };
  scan(0, g.trivial());

  ExactInt sum = 0;
  for (ClassId c = 0; c < poset.size(); ++c) {
    if (!product_is_whole(g, poset.representative(c), N))
      continue;
    MobiusValue mu = poset.mu_to_top(c);
    if (mu == 0)
      continue;
    ExactInt omega = 0;
    poset.subgroups_below(c).for_each([&](ElementIndex k) { omega += hits[k]; });
    sum += ExactInt(mu) * omega;
  }
  return sum;
}

std::size_t sigma(SubgroupLattice const &lattice, SubgroupId h) { return lattice.sigma(h); }

ExactInt sigma_A(ClassPoset const &poset, ClassId c, unsigned t, TupleCounts &counts) {
  std::vector<ExactInt> const &gamma = counts.gamma_tuples(t);
  ExactInt sum = 0;
  poset.subgroups_below(c).for_each([&](ElementIndex k) { sum += gamma[k]; });
  return sum;
}

ExactInt phi_star(ClassPoset const &poset, unsigned t, TupleCounts &counts) {
  ExactInt sum = 0;
  std::vector<MobiusValue> const &mu = poset.poset().moebius_column(poset.top());
  for (ClassId c = 0; c < poset.size(); ++c)
    if (mu[c] != 0)
      sum += ExactInt(mu[c]) * sigma_A(poset, c, t, counts);
  return sum;
}

ExactInt phi_star(ClassPoset const &poset, unsigned t) {
  TupleCounts counts(poset.lattice_ptr());
  return phi_star(poset, t, counts);
}

ExactInt phi_star_bruteforce(SubgroupLattice const &lattice, unsigned t, std::size_t budget) {
  require_t(t);
  if (bounded_power(lattice.size(), t, budget) > budget)
    throw BudgetExceeded("phi_star_bruteforce: sigma(G)^t exceeds the tuple budget");
  FiniteGroup const &g = lattice.group();
  ExactInt count = 0;
  std::function<void(unsigned, Subgroup const &)> scan = [&](unsigned depth,
                                                             Subgroup const &prefix) {
    if (depth == t) {
      if (prefix.order == g.order())
        ++count;
      return;
    }
    for (Subgroup const &h : lattice.subgroups())
      scan(depth + 1, g.join(prefix, h));
  };
  scan(0, g.trivial());
  return count;
}

GenerationProbabilities gen_probabilities(SubgroupLattice const &lattice, unsigned t) {
  require_t(t);
  std::vector<MobiusValue> const &mu = lattice.poset().moebius_column(lattice.top_id());
  ExactInt star = 0;
  for (std::size_t h = 0; h < lattice.size(); ++h)
    if (mu[h] != 0)
      star += ExactInt(mu[h]) * ipow(lattice.sigma(static_cast<SubgroupId>(h)), t);
  GenerationProbabilities r;
  r.p = ExactRational(phi_hall(lattice, t), ipow(lattice.group().order(), t));
  r.p_star = ExactRational(star, ipow(lattice.size(), t));
  return r;
}

ExactInt mu_sigma_sum(SubgroupLattice const &lattice) {
  std::vector<MobiusValue> const &mu = lattice.poset().moebius_column(lattice.top_id());
  ExactInt sum = 0;
  for (std::size_t h = 0; h < lattice.size(); ++h)
    sum += ExactInt(mu[h]) * ExactInt(lattice.sigma(static_cast<SubgroupId>(h)));
  return sum;
}

} // namespace amoebius
