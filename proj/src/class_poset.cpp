#include "amoebius/class_poset.hpp"

#include <algorithm>

#include "amoebius/errors.hpp"

namespace amoebius {

ClassPoset::ClassPoset(std::shared_ptr<SubgroupLattice const> lattice, AutomorphismGroup a)
    : lattice_(std::move(lattice)), aut_(std::move(a)) {
  if (aut_.group().order() != lattice_->group().order())
    throw InvalidArgument("automorphism group acts on a different group");
  std::size_t const n = lattice_->size();
  ClassId const unset = static_cast<ClassId>(n);
  class_of_.assign(n, unset);
  for (std::size_t h = 0; h < n; ++h) {
    if (class_of_[h] != unset)
      continue;
    auto c = static_cast<ClassId>(classes_.size());
    std::vector<SubgroupId> orbit =
        subgroup_orbit(aut_, static_cast<SubgroupId>(h), *lattice_);
    for (SubgroupId m : orbit)
      class_of_[m] = c;
    classes_.push_back({orbit.front(), std::move(orbit)});
  }
  if (classes_.back().members.size() != 1)
    throw InvalidArgument("G is not alone in its class");

  std::size_t const k = classes_.size();
  std::vector<ElementSet> down(k, ElementSet(k));
  for (std::size_t c = 0; c < k; ++c)
    lattice_->below(classes_[c].representative).for_each([&](ElementIndex h) {
      down[c].set(class_of_[h]);
    });
  poset_ = Poset(std::move(down));
}

ElementSet ClassPoset::subgroups_below(ClassId c) const {
  ElementSet out(lattice_->size());
  for (SubgroupId m : classes_[c].members)
    out |= lattice_->below(m);
  return out;
}

ClassPoset build_class_poset(std::shared_ptr<SubgroupLattice const> lattice,
                             AutomorphismGroup a) {
  return ClassPoset(std::move(lattice), std::move(a));
}

ClassPoset conjugacy_class_poset(std::shared_ptr<SubgroupLattice const> lattice) {
  auto g = lattice->group_ptr();
  AutomorphismGroup inn = inner_automorphisms(g, g->whole());
  return ClassPoset(std::move(lattice), std::move(inn));
}

std::vector<MobiusValue> lambda_of(std::shared_ptr<SubgroupLattice const> lattice) {
  ClassPoset c = conjugacy_class_poset(lattice);
  std::vector<MobiusValue> out(lattice->size());
  for (std::size_t h = 0; h < out.size(); ++h)
    out[h] = c.mu_to_top(c.class_of(static_cast<SubgroupId>(h)));
  return out;
}

std::size_t kappa(FiniteGroup const &g, Subgroup const &h) {
  return g.order() / normalizer(g, h).order;
}

std::vector<std::size_t> class_closure(ClassPoset const &poset) {
  SubgroupLattice const &lat = poset.lattice();
  std::vector<std::size_t> cl(poset.size());
  for (std::size_t c = 0; c < poset.size(); ++c)
    cl[c] = poset.class_of(closure_intersection_of_maximals(
        lat, poset.cls(static_cast<ClassId>(c)).representative));
  return cl;
}

CrapoReport crapo_check(ClassPoset const &poset) {
  return crapo_check(poset.poset(), class_closure(poset));
}

ClosednessReport nonzero_implies_closed(ClassPoset const &poset) {
  ClosednessReport r;
  SubgroupLattice const &lat = poset.lattice();
  for (ClassId c = 0; c < poset.top(); ++c) {
    if (poset.mu_to_top(c) == 0)
      continue;
    ++r.nonzero_classes;
    SubgroupId rep = poset.cls(c).representative;
    if (closure_intersection_of_maximals(lat, rep) != rep)
      r.counterexamples.push_back(c);
  }
  return r;
}

namespace {

bool product_is_whole(FiniteGroup const &g, Subgroup const &y, Subgroup const &n) {
  std::size_t meet = y.members.intersection_count(n.members);
  return y.order * n.order == g.order() * meet;
}

SubgroupId join_id(SubgroupLattice const &lat, SubgroupId a, SubgroupId b) {
  return lat.id_of(lat.group().join(lat.subgroup(a), lat.subgroup(b)));
}

} // namespace

IdentityCheck conjunctive_identity(ClassPoset const &poset, SubgroupId n, SubgroupId h) {
  SubgroupLattice const &lat = poset.lattice();
  FiniteGroup const &g = lat.group();
  Subgroup const &N = lat.subgroup(n);
  if (!g.is_normal(N))
    throw NotNormal("conjunctive identity: N is not normal");
  if (!poset.automorphisms().leaves_invariant(N))
    throw NotInvariant("conjunctive identity: N is not A-invariant");
  IdentityCheck r;
  SubgroupId hn = join_id(lat, h, n);
  if (hn == h || hn == lat.top_id())
    return r;
  r.applicable = true;
  ClassId ch = poset.class_of(h);
  MobiusValue sum = 0;
  for (ClassId y = ch; y < poset.top(); ++y) {
    if (!poset.leq(ch, y))
      continue;
    if (product_is_whole(g, poset.representative(y), N))
      sum = checked_add(sum, poset.moebius(ch, y));
  }
  r.lhs = poset.mu_to_top(ch);
  r.rhs = -sum;
  return r;
}

std::size_t gamma_complement_classes(ClassPoset const &poset, SubgroupId n, SubgroupId h) {
  std::vector<ClassId> seen;
  for (SubgroupId k : complements(poset.lattice(), n, h))
    seen.push_back(poset.class_of(k));
  std::sort(seen.begin(), seen.end());
  return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

bool is_minimal_normal(SubgroupLattice const &lattice, SubgroupId n) {
  FiniteGroup const &g = lattice.group();
  if (n == lattice.trivial_id() || !g.is_normal(lattice.subgroup(n)))
    return false;
  bool minimal = true;
  lattice.below(n).for_each([&](ElementIndex m) {
    if (minimal && m != n && m != lattice.trivial_id() && g.is_normal(lattice.subgroup(m)))
      minimal = false;
  });
  return minimal;
}

IdentityCheck complement_class_identity(ClassPoset const &poset, SubgroupId n, SubgroupId h) {
  SubgroupLattice const &lat = poset.lattice();
  IdentityCheck r;
  SubgroupId hn = join_id(lat, h, n);
  if (hn == h)
    return r;
  r.applicable = true;
  r.lhs = poset.mu_to_top(poset.class_of(h));
  r.rhs = -checked_mul(poset.mu_to_top(poset.class_of(hn)),
                       static_cast<MobiusValue>(gamma_complement_classes(poset, n, h)));
  return r;
}

std::vector<IdentityCheck> quotient_identity(ClassPoset const &poset, SubgroupId n) {
  SubgroupLattice const &lat = poset.lattice();
  FiniteGroup const &g = lat.group();
  Subgroup const &N = lat.subgroup(n);
  Quotient q = quotient_group(g, N);
  auto qgroup = std::make_shared<FiniteGroup const>(std::move(q.group));
  auto qlat = std::make_shared<SubgroupLattice const>(enumerate_subgroups(qgroup));
  AutomorphismGroup abar =
      induced_quotient_action(poset.automorphisms(), N, qgroup, q.projection);
  ClassPoset qposet(qlat, std::move(abar));

  std::vector<IdentityCheck> out(lat.size());
  for (std::size_t h = 0; h < lat.size(); ++h) {
    SubgroupId hn = join_id(lat, static_cast<SubgroupId>(h), n);
    ElementSet image(qgroup->order());
    lat.subgroup(hn).members.for_each([&](ElementIndex x) { image.set(q.projection[x]); });
    auto qid = qlat->find(image);
    if (!qid)
      throw ImageNotInLattice("quotient image missing from quotient lattice");
    out[h].applicable = true;
    out[h].lhs = poset.mu_to_top(poset.class_of(hn));
    out[h].rhs = qposet.mu_to_top(qposet.class_of(*qid));
  }
  return out;
}

bool lambda_equals_inner_by(std::shared_ptr<SubgroupLattice const> lattice, SubgroupId k) {
  std::vector<MobiusValue> lambda = lambda_of(lattice);
  auto g = lattice->group_ptr();
  ClassPoset byk(lattice, inner_automorphisms(g, lattice->subgroup(k)));
  for (std::size_t h = 0; h < lattice->size(); ++h)
    if (lambda[h] != byk.mu_to_top(byk.class_of(static_cast<SubgroupId>(h))))
      return false;
  return true;
}

std::vector<DivisibilityFailure> divisibility_scan(ClassPoset const &poset) {
  SubgroupLattice const &lat = poset.lattice();
  FiniteGroup const &g = lat.group();
  std::vector<DivisibilityFailure> out;
  for (std::size_t n = 0; n < lat.size(); ++n) {
    Subgroup const &N = lat.subgroup(static_cast<SubgroupId>(n));
    if (!g.is_normal(N) || !poset.automorphisms().leaves_invariant(N))
      continue;
    for (std::size_t h = 0; h < lat.size(); ++h) {
      SubgroupId hn = join_id(lat, static_cast<SubgroupId>(h), static_cast<SubgroupId>(n));
      MobiusValue a = poset.mu_to_top(poset.class_of(hn));
      MobiusValue b = poset.mu_to_top(poset.class_of(static_cast<SubgroupId>(h)));
      bool divides = a == 0 ? b == 0 : b % a == 0;
      if (!divides)
        out.push_back({static_cast<SubgroupId>(n), static_cast<SubgroupId>(h), a, b});
    }
  }
  return out;
}

std::string subgroup_name(FiniteGroup const &g, Subgroup const &h) {
  if (h.order == 1)
    return "1";
  std::vector<ElementIndex> members = h.members.to_indices();
  std::vector<ElementIndex> word;
  for (ElementIndex x : members)
    if (g.element_order(x) == h.order) {
      word = {x};
      break;
    }
  if (word.empty()) {
    // lexicographically first generating pair, within an attempt budget
    std::size_t attempts = 0;
    constexpr std::size_t kBudget = 20000;
    for (std::size_t i = 1; i < members.size() && word.empty() && attempts < kBudget; ++i) {
      ElementIndex x = members[i];
      Subgroup cx = g.generate(std::span<ElementIndex const>(&x, 1));
      for (std::size_t j = i + 1; j < members.size() && attempts < kBudget; ++j) {
        if (cx.contains(members[j]))
          continue;
        ++attempts;
        if (g.extend(cx, members[j]).order == h.order) {
          word = {x, members[j]};
          break;
        }
      }
    }
  }
  if (word.empty())
    word = g.from_members(h.members).gens;
  std::string out = "<";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i)
      out += ',';
    out += g.name(word[i]);
  }
  return out + ">";
}

} // namespace amoebius
