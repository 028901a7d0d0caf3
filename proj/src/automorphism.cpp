#include "amoebius/automorphism.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "amoebius/errors.hpp"

namespace amoebius {

namespace {

struct MapHash {
  std::size_t operator()(Automorphism const &a) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (ElementIndex x : a.map()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<Automorphism> close_under_composition(std::vector<Automorphism> const &gens,
                                                  std::size_t order, std::size_t limit) {
  std::vector<Automorphism> out{Automorphism::identity(order)};
  std::unordered_set<Automorphism, MapHash> seen{out.front()};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto const &s : gens) {
      Automorphism y = out[i].then(s);
      if (seen.insert(y).second) {
        if (out.size() >= limit)
          throw BoundExceeded("automorphism group larger than " + std::to_string(limit));
        out.push_back(std::move(y));
      }
    }
  return out;
}

} // namespace

std::string to_string(AutOrigin o) {
  switch (o) {
  case AutOrigin::Trivial:
    return "trivial";
  case AutOrigin::InnerByK:
    return "inner-by-K";
  case AutOrigin::ExplicitGenerated:
    return "explicit-generated";
  case AutOrigin::FullAut:
    return "full-aut";
  }
  return "unknown";
}

Automorphism Automorphism::identity(std::size_t order) {
  std::vector<ElementIndex> m(order);
  for (std::size_t i = 0; i < order; ++i)
    m[i] = static_cast<ElementIndex>(i);
  return Automorphism(std::move(m));
}

Automorphism Automorphism::conjugation(FiniteGroup const &g, ElementIndex k) {
  std::vector<ElementIndex> m(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    m[i] = g.conj(static_cast<ElementIndex>(i), k);
  return Automorphism(std::move(m));
}

Automorphism Automorphism::then(Automorphism const &o) const {
  std::vector<ElementIndex> m(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i)
    m[i] = o.map_[map_[i]];
  return Automorphism(std::move(m));
}

Automorphism Automorphism::inverse() const {
  std::vector<ElementIndex> m(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i)
    m[map_[i]] = static_cast<ElementIndex>(i);
  return Automorphism(std::move(m));
}

bool Automorphism::is_identity() const noexcept {
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != i)
      return false;
  return true;
}

ElementSet Automorphism::image(ElementSet const &s) const {
  ElementSet r(s.size_bits());
  s.for_each([&](ElementIndex x) { r.set(map_[x]); });
  return r;
}

Subgroup Automorphism::image(Subgroup const &h) const {
  Subgroup r{image(h.members), h.order, {}};
  for (ElementIndex x : h.gens)
    r.gens.push_back(map_[x]);
  return r;
}

bool Automorphism::is_valid(FiniteGroup const &g) const {
  if (map_.size() != g.order())
    return false;
  std::vector<bool> hit(map_.size(), false);
  for (ElementIndex y : map_) {
    if (y >= map_.size() || hit[y])
      return false;
    hit[y] = true;
  }
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (map_[g.mul(static_cast<ElementIndex>(a), static_cast<ElementIndex>(b))] !=
          g.mul(map_[a], map_[b]))
        return false;
  return true;
}

AutomorphismGroup::AutomorphismGroup(std::shared_ptr<FiniteGroup const> group,
                                     std::vector<Automorphism> generators, AutOrigin origin,
                                     std::optional<Subgroup> inner_by)
    : group_(std::move(group)), origin_(origin), inner_by_(std::move(inner_by)) {
  for (auto &g : generators)
    if (!g.is_identity() && std::find(gens_.begin(), gens_.end(), g) == gens_.end())
      gens_.push_back(std::move(g));

  if (origin_ == AutOrigin::InnerByK && inner_by_) {
    // |K : K meet Z(G)|
    std::size_t central = 0;
    inner_by_->members.for_each([&](ElementIndex k) {
      bool c = true;
      for (ElementIndex s : group_->generators())
        if (group_->mul(k, s) != group_->mul(s, k)) {
          c = false;
          break;
        }
      if (c)
        ++central;
    });
    order_ = inner_by_->order / central;
  } else {
    elements_ = std::make_shared<std::vector<Automorphism>>(
        close_under_composition(gens_, group_->order(), kDefaultAutCountBound));
    order_ = elements_->size();
  }
}

std::vector<Automorphism> const &AutomorphismGroup::elements() const {
  if (!elements_) {
    if (origin_ == AutOrigin::InnerByK && inner_by_) {
      auto out = std::make_shared<std::vector<Automorphism>>();
      std::unordered_set<Automorphism, MapHash> seen;
      inner_by_->members.for_each([&](ElementIndex k) {
        Automorphism a = Automorphism::conjugation(*group_, k);
        if (seen.insert(a).second)
          out->push_back(std::move(a));
      });
      elements_ = std::move(out);
    } else {
      elements_ = std::make_shared<std::vector<Automorphism>>(
          close_under_composition(gens_, group_->order(), kDefaultAutCountBound));
    }
  }
  return *elements_;
}

bool AutomorphismGroup::leaves_invariant(Subgroup const &n) const {
  for (auto const &a : gens_)
    for (ElementIndex x : n.gens)
      if (!n.contains(a(x)))
        return false;
  return true;
}

AutomorphismGroup trivial_automorphisms(std::shared_ptr<FiniteGroup const> g) {
  return AutomorphismGroup(std::move(g), {}, AutOrigin::Trivial);
}

AutomorphismGroup inner_automorphisms(std::shared_ptr<FiniteGroup const> g,
                                      Subgroup const &k) {
  std::vector<Automorphism> gens;
  for (ElementIndex x : k.gens)
    gens.push_back(Automorphism::conjugation(*g, x));
  return AutomorphismGroup(std::move(g), std::move(gens), AutOrigin::InnerByK, k);
}

AutomorphismGroup generated_automorphisms(std::shared_ptr<FiniteGroup const> g,
                                          std::vector<Automorphism> gens) {
  for (auto const &a : gens)
    if (a.size() != g->order())
      throw InvalidArgument("automorphism has wrong size");
  return AutomorphismGroup(std::move(g), std::move(gens), AutOrigin::ExplicitGenerated);
}

Automorphism automorphism_from_images(FiniteGroup const &g,
                                      std::span<ElementIndex const> gens,
                                      std::span<ElementIndex const> images) {
  if (gens.size() != images.size())
    throw InvalidArgument("generator and image lists differ in length");
  std::size_t const n = g.order();
  std::size_t const unset = n;
  std::vector<ElementIndex> m(n, static_cast<ElementIndex>(unset));
  m[g.identity()] = g.identity();
  std::vector<ElementIndex> queue{g.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    ElementIndex x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      ElementIndex y = g.mul(x, gens[j]);
      ElementIndex fy = g.mul(m[x], images[j]);
      if (m[y] == unset) {
        m[y] = fy;
        queue.push_back(y);
      } else if (m[y] != fy) {
        throw NotAHomomorphism("images do not define a homomorphism");
      }
    }
  }
  if (queue.size() != n)
    throw InvalidArgument("the given elements do not generate the group");
  std::vector<bool> hit(n, false);
  for (ElementIndex y : m) {
    if (hit[y])
      throw NotBijective("homomorphism is not bijective");
    hit[y] = true;
  }
  return Automorphism(std::move(m));
}

AutomorphismGroup full_automorphism_group(std::shared_ptr<FiniteGroup const> gp,
                                          std::size_t order_bound, std::size_t count_bound) {
  FiniteGroup const &g = *gp;
  std::size_t const n = g.order();
  if (n > order_bound)
    throw BoundExceeded("group order " + std::to_string(n) +
                        " exceeds the automorphism brute-force bound " +
                        std::to_string(order_bound));

  // Short generating list: repeatedly add the element growing the span most.
  std::vector<ElementIndex> gens;
  Subgroup span = g.trivial();
  while (span.order < n) {
    ElementIndex best = 0;
    std::size_t best_order = 0;
    for (std::size_t x = 1; x < n; ++x) {
      if (span.contains(static_cast<ElementIndex>(x)))
        continue;
      std::size_t o = g.extend(span, static_cast<ElementIndex>(x)).order;
      if (o > best_order) {
        best_order = o;
        best = static_cast<ElementIndex>(x);
      }
    }
    gens.push_back(best);
    span = g.extend(span, best);
  }

  std::vector<std::vector<ElementIndex>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t y = 0; y < n; ++y)
      if (g.element_order(static_cast<ElementIndex>(y)) == g.element_order(gens[i]))
        candidates[i].push_back(static_cast<ElementIndex>(y));

  std::vector<ElementIndex> images(gens.size());
  std::vector<Automorphism> found;
  std::size_t const unset = n;

  // Checks that gens[0..k] -> images[0..k] extends to an injective
  // homomorphism of the subgroup they generate.
  auto consistent = [&](std::size_t k, std::vector<ElementIndex> &m) {
    m.assign(n, static_cast<ElementIndex>(unset));
    std::vector<bool> hit(n, false);
    m[0] = 0;
    hit[0] = true;
    std::vector<ElementIndex> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      ElementIndex x = queue[i];
      for (std::size_t j = 0; j <= k; ++j) {
        ElementIndex y = g.mul(x, gens[j]);
        ElementIndex fy = g.mul(m[x], images[j]);
        if (m[y] == unset) {
          if (hit[fy])
            return false;
          hit[fy] = true;
          m[y] = fy;
          queue.push_back(y);
        } else if (m[y] != fy) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<ElementIndex> scratch;
  std::function<void(std::size_t)> search = [&](std::size_t k) {
    for (ElementIndex c : candidates[k]) {
      images[k] = c;
      if (!consistent(k, scratch))
        continue;
      if (k + 1 == gens.size()) {
        if (found.size() >= count_bound)
          throw BoundExceeded("automorphism count exceeds " + std::to_string(count_bound));
        found.emplace_back(scratch);
      } else {
        search(k + 1);
      }
    }
  };
  if (gens.empty())
    found.push_back(Automorphism::identity(n));
  else
    search(0);

  AutomorphismGroup a(gp, {}, AutOrigin::FullAut);
  // Keep a handful of generators: grow until they close up to everything.
  std::vector<Automorphism> chosen;
  std::size_t reached = 1;
  for (auto const &f : found) {
    if (reached == found.size())
      break;
    if (f.is_identity())
      continue;
    std::vector<Automorphism> trial = chosen;
    trial.push_back(f);
    std::size_t size = close_under_composition(trial, n, count_bound + 1).size();
    if (size > reached) {
      chosen = std::move(trial);
      reached = size;
    }
  }
  a.gens_ = std::move(chosen);
  a.order_ = found.size();
  a.elements_ = std::make_shared<std::vector<Automorphism>>(std::move(found));
  return a;
}

std::vector<SubgroupId> subgroup_orbit(AutomorphismGroup const &a, SubgroupId h,
                                       SubgroupLattice const &lattice) {
  std::vector<SubgroupId> orbit{h};
  std::unordered_set<SubgroupId> seen{h};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    ElementSet const &members = lattice.subgroup(orbit[i]).members;
    for (auto const &gen : a.generators()) {
      auto id = lattice.find(gen.image(members));
      if (!id)
        throw ImageNotInLattice("automorphic image of a subgroup is missing from the lattice");
      if (seen.insert(*id).second)
        orbit.push_back(*id);
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

AutomorphismGroup induced_quotient_action(AutomorphismGroup const &a, Subgroup const &n,
                                          std::shared_ptr<FiniteGroup const> quotient,
                                          std::vector<ElementIndex> const &projection) {
  FiniteGroup const &g = a.group();
  if (!g.is_normal(n))
    throw NotNormal("induced action: subgroup is not normal");
  if (!a.leaves_invariant(n))
    throw NotInvariant("induced action: some automorphism moves the subgroup");
  std::size_t const m = quotient->order();
  std::vector<ElementIndex> lift(m, static_cast<ElementIndex>(g.order()));
  for (std::size_t x = 0; x < g.order(); ++x)
    if (lift[projection[x]] == g.order())
      lift[projection[x]] = static_cast<ElementIndex>(x);

  std::vector<Automorphism> gens;
  for (auto const &gen : a.generators()) {
    std::vector<ElementIndex> map(m);
    for (std::size_t q = 0; q < m; ++q)
      map[q] = projection[gen(lift[q])];
    gens.emplace_back(std::move(map));
  }
  return generated_automorphisms(std::move(quotient), std::move(gens));
}

} // namespace amoebius
