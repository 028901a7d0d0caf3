#include "amoebius/group.hpp"

#include <algorithm>

#include "amoebius/errors.hpp"

namespace amoebius {

FiniteGroup generate_group(std::vector<Permutation> const &gens, std::size_t cap,
                           std::size_t degree) {
  if (cap < 1)
    throw InvalidArgument("order cap must be at least 1");
  if (!gens.empty())
    degree = gens.front().degree();
  for (auto const &g : gens)
    if (g.degree() != degree)
      throw InvalidArgument("generators must share one degree");

  FiniteGroup G;
  G.degree_ = std::max<std::size_t>(degree, 1);
  G.elements_.push_back(Permutation::identity(G.degree_));
  G.index_.emplace(G.elements_.back(), 0);

  std::size_t const k = gens.size();
  std::vector<ElementIndex> parent{0};
  std::vector<std::size_t> parent_gen{0};
  // right_mul[s][x] = index(x * gens[s])
  std::vector<std::vector<ElementIndex>> right_mul(k);

  for (std::size_t pos = 0; pos < G.elements_.size(); ++pos) {
    for (std::size_t s = 0; s < k; ++s) {
      Permutation y = G.elements_[pos] * gens[s];
      auto it = G.index_.find(y);
      ElementIndex yi;
      if (it == G.index_.end()) {
        if (G.elements_.size() >= cap)
          throw ClosureExceedsCap("group order exceeds cap " + std::to_string(cap));
        yi = static_cast<ElementIndex>(G.elements_.size());
        G.index_.emplace(y, yi);
        G.elements_.push_back(std::move(y));
        parent.push_back(static_cast<ElementIndex>(pos));
        parent_gen.push_back(s);
      } else {
        yi = it->second;
      }
      right_mul[s].push_back(yi);
    }
  }

  std::size_t const n = G.elements_.size();
  for (auto const &g : gens)
    G.gens_.push_back(G.index_.at(g));

  G.table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    ElementIndex *row = G.table_.data() + a * n;
    row[0] = static_cast<ElementIndex>(a);
    for (std::size_t b = 1; b < n; ++b)
      row[b] = right_mul[parent_gen[b]][row[parent[b]]];
  }

  G.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    G.inverse_[a] = G.index_.at(G.elements_[a].inverse());

  G.elem_order_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t ord = 1;
    ElementIndex y = static_cast<ElementIndex>(a);
    while (y != 0) {
      y = G.mul(y, static_cast<ElementIndex>(a));
      ++ord;
    }
    G.elem_order_[a] = ord;
  }
  return G;
}

ElementIndex FiniteGroup::find(Permutation const &p) const {
  auto it = index_.find(p);
  return it == index_.end() ? static_cast<ElementIndex>(order()) : it->second;
}

ElementIndex FiniteGroup::index_of(Permutation const &p) const {
  ElementIndex i = find(p);
  if (i == order())
    throw InvalidArgument("permutation " + p.to_cycles() + " is not in the group");
  return i;
}

ElementIndex FiniteGroup::pow(ElementIndex x, std::size_t e) const noexcept {
  ElementIndex r = identity();
  e %= elem_order_[x];
  for (std::size_t i = 0; i < e; ++i)
    r = mul(r, x);
  return r;
}

Subgroup FiniteGroup::trivial() const {
  Subgroup h{ElementSet(order()), 1, {}};
  h.members.set(identity());
  return h;
}

Subgroup FiniteGroup::whole() const {
  Subgroup h{ElementSet(order()), order(), gens_};
  for (std::size_t i = 0; i < order(); ++i)
    h.members.set(i);
  // drop redundant witnesses such as the identity
  std::erase(h.gens, identity());
  return h;
}

Subgroup FiniteGroup::extend(Subgroup const &base, ElementIndex g) const {
  if (base.contains(g))
    return base;
  std::vector<ElementIndex> const coset_base = base.members.to_indices();
  Subgroup k{base.members, 0, base.gens};
  k.gens.push_back(g);
  std::vector<ElementIndex> reps{identity()};
  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (ElementIndex s : k.gens) {
      ElementIndex y = mul(reps[r], s);
      if (k.members.test(y))
        continue;
      for (ElementIndex h : coset_base)
        k.members.set(mul(h, y));
      reps.push_back(y);
    }
  }
  k.order = coset_base.size() * reps.size();
  return k;
}

Subgroup FiniteGroup::generate(std::span<ElementIndex const> gens) const {
  Subgroup h = trivial();
  for (ElementIndex g : gens)
    h = extend(h, g);
  return h;
}

Subgroup FiniteGroup::join(Subgroup const &a, Subgroup const &b) const {
  Subgroup const &big = a.order >= b.order ? a : b;
  Subgroup const &small = a.order >= b.order ? b : a;
  Subgroup h = big;
  for (ElementIndex g : small.gens)
    h = extend(h, g);
  return h;
}

Subgroup FiniteGroup::from_members(ElementSet members) const {
  // Pick witnesses greedily in index order.
  Subgroup h = trivial();
  members.for_each([&](ElementIndex x) {
    if (!h.contains(x))
      h = extend(h, x);
  });
  if (!(h.members == members))
    throw InvalidArgument("element set is not a subgroup");
  return h;
}

Subgroup FiniteGroup::conjugate(Subgroup const &h, ElementIndex g) const {
  Subgroup r{ElementSet(order()), h.order, {}};
  h.members.for_each([&](ElementIndex x) { r.members.set(conj(x, g)); });
  r.gens.reserve(h.gens.size());
  for (ElementIndex x : h.gens)
    r.gens.push_back(conj(x, g));
  return r;
}

bool FiniteGroup::is_normal(Subgroup const &n) const {
  for (ElementIndex s : gens_)
    for (ElementIndex x : n.gens)
      if (!n.contains(conj(x, s)))
        return false;
  return true;
}

bool FiniteGroup::is_abelian() const {
  for (ElementIndex a : gens_)
    for (ElementIndex b : gens_)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

namespace {

// Derived subgroup of d: normal closure in d of commutators of its generators.
Subgroup derived_of(FiniteGroup const &g, Subgroup const &d) {
  Subgroup n = g.trivial();
  for (ElementIndex a : d.gens)
    for (ElementIndex b : d.gens)
      n = g.extend(n, g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  for (std::size_t i = 0; i < n.gens.size(); ++i)
    for (ElementIndex s : d.gens) {
      ElementIndex c = g.conj(n.gens[i], s);
      if (!n.contains(c))
        n = g.extend(n, c);
    }
  return n;
}

} // namespace

Subgroup commutator_subgroup(FiniteGroup const &g) { return derived_of(g, g.whole()); }

Subgroup center(FiniteGroup const &g) {
  ElementSet z(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (ElementIndex s : g.generators())
      if (g.mul(static_cast<ElementIndex>(x), s) != g.mul(s, static_cast<ElementIndex>(x))) {
        central = false;
        break;
      }
    if (central)
      z.set(x);
  }
  return g.from_members(std::move(z));
}

bool is_solvable(FiniteGroup const &g) {
  Subgroup d = g.whole();
  while (d.order > 1) {
    Subgroup next = derived_of(g, d);
    if (next.order == d.order)
      return false;
    d = std::move(next);
  }
  return true;
}

Quotient quotient_group(FiniteGroup const &g, Subgroup const &n) {
  if (!g.is_normal(n))
    throw NotNormal("subgroup is not normal");
  std::size_t const size = g.order();
  std::vector<ElementIndex> coset_of(size, static_cast<ElementIndex>(size));
  std::vector<ElementIndex> reps;
  std::vector<ElementIndex> const nmembers = n.members.to_indices();
  for (std::size_t x = 0; x < size; ++x) {
    if (coset_of[x] != size)
      continue;
    auto c = static_cast<ElementIndex>(reps.size());
    reps.push_back(static_cast<ElementIndex>(x));
    for (ElementIndex h : nmembers)
      coset_of[g.mul(h, static_cast<ElementIndex>(x))] = c;
  }
  std::size_t const m = reps.size();

  auto action = [&](ElementIndex x) {
    std::vector<Point> images(m);
    for (std::size_t c = 0; c < m; ++c)
      images[c] = coset_of[g.mul(reps[c], x)];
    return Permutation(std::move(images));
  };

  std::vector<Permutation> qgens;
  for (ElementIndex s : g.generators())
    qgens.push_back(action(s));

  Quotient q{generate_group(qgens, std::max<std::size_t>(m, 1), m), {}};
  q.projection.resize(size);
  for (std::size_t x = 0; x < size; ++x)
    q.projection[x] = q.group.index_of(action(static_cast<ElementIndex>(x)));
  return q;
}

} // namespace amoebius
