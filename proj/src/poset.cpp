#include "amoebius/poset.hpp"

#include "amoebius/errors.hpp"

namespace amoebius {

MobiusValue checked_add(MobiusValue a, MobiusValue b) {
  MobiusValue r;
  if (__builtin_add_overflow(a, b, &r))
    throw BudgetExceeded("Möbius value overflows 64 bits");
  return r;
}

MobiusValue checked_mul(MobiusValue a, MobiusValue b) {
  MobiusValue r;
  if (__builtin_mul_overflow(a, b, &r))
    throw BudgetExceeded("Möbius value overflows 64 bits");
  return r;
}

Poset::Poset(std::vector<ElementSet> down) : down_(std::move(down)) {
  std::size_t const n = down_.size();
  up_.assign(n, ElementSet(n));
  for (std::size_t y = 0; y < n; ++y) {
    if (down_[y].size_bits() != n)
      throw InvalidArgument("poset row has wrong width");
    down_[y].for_each([&](ElementIndex x) {
      if (x > y)
        throw InvalidArgument("poset index order is not a linear extension");
      up_[x].set(y);
    });
  }
}

bool Poset::satisfies_axioms() const {
  std::size_t const n = size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!leq(x, x))
      return false;
    for (std::size_t y = x + 1; y < n; ++y)
      if (leq(x, y) && leq(y, x))
        return false;
  }
  // transitivity: down(y) must contain down(z) for every z in down(y)
  for (std::size_t y = 0; y < n; ++y) {
    bool ok = true;
    down_[y].for_each([&](ElementIndex z) {
      if (ok && !down_[z].is_subset_of(down_[y]))
        ok = false;
    });
    if (!ok)
      return false;
  }
  return true;
}

std::vector<MobiusValue> const &Poset::moebius_column(std::size_t y) const {
  std::scoped_lock lock(memo_mutex_);
  auto it = cols_.find(y);
  if (it != cols_.end())
    return it->second;
  std::vector<MobiusValue> col(size(), 0);
  col[y] = 1;
  std::vector<ElementIndex> const below = down_[y].to_indices();
  // descending: mu(x, y) = -sum_{x < z <= y} mu(z, y)
  for (auto it2 = below.rbegin(); it2 != below.rend(); ++it2) {
    std::size_t x = *it2;
    if (x == y)
      continue;
    MobiusValue s = 0;
    ElementSet between = up_[x] & down_[y];
    between.for_each([&](ElementIndex z) {
      if (z != x)
        s = checked_add(s, col[z]);
    });
    col[x] = -s;
  }
  return cols_.emplace(y, std::move(col)).first->second;
}

std::vector<MobiusValue> const &Poset::moebius_row(std::size_t x) const {
  std::scoped_lock lock(memo_mutex_);
  auto it = rows_.find(x);
  if (it != rows_.end())
    return it->second;
  std::vector<MobiusValue> row(size(), 0);
  row[x] = 1;
  std::vector<ElementIndex> const above = up_[x].to_indices();
  // ascending: mu(x, y) = -sum_{x <= z < y} mu(x, z)
  for (std::size_t y : above) {
    if (y == x)
      continue;
    MobiusValue s = 0;
    ElementSet between = up_[x] & down_[y];
    between.for_each([&](ElementIndex z) {
      if (z != y)
        s = checked_add(s, row[z]);
    });
    row[y] = -s;
  }
  return rows_.emplace(x, std::move(row)).first->second;
}

MobiusValue Poset::moebius(std::size_t x, std::size_t y) const {
  if (!leq(x, y))
    return 0;
  {
    std::scoped_lock lock(memo_mutex_);
    if (auto it = cols_.find(y); it != cols_.end())
      return it->second[x];
    if (auto it = rows_.find(x); it != rows_.end())
      return it->second[y];
  }
  return moebius_row(x)[y];
}

Poset Poset::induced(std::vector<std::size_t> const &elements) const {
  std::size_t const k = elements.size();
  std::vector<ElementSet> down(k, ElementSet(k));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i <= j; ++i)
      if (leq(elements[i], elements[j]))
        down[j].set(i);
  return Poset(std::move(down));
}

void validate_closure(Poset const &p, std::vector<std::size_t> const &cl) {
  std::size_t const n = p.size();
  if (cl.size() != n)
    throw NotAClosureMap("closure map has wrong length");
  for (std::size_t x = 0; x < n; ++x) {
    if (cl[x] >= n)
      throw NotAClosureMap("closure image out of range");
    if (!p.leq(x, cl[x]))
      throw NotAClosureMap("axiom a) fails: x <= cl(x) violated at " + std::to_string(x));
    if (cl[cl[x]] != cl[x])
      throw NotAClosureMap("axiom c) fails: cl is not idempotent at " + std::to_string(x));
  }
  for (std::size_t y = 0; y < n; ++y)
    p.down(y).for_each([&](ElementIndex x) {
      if (!p.leq(cl[x], cl[y]))
        throw NotAClosureMap("axiom b) fails: cl is not monotone at (" +
                             std::to_string(x) + ", " + std::to_string(y) + ")");
    });
}

namespace {

struct ClosedView {
  std::vector<std::size_t> closed;
  std::vector<std::size_t> position; // index in `closed`, or npos
  Poset poset;
};

ClosedView closed_view(Poset const &p, std::vector<std::size_t> const &cl) {
  ClosedView v;
  v.position.assign(p.size(), static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < p.size(); ++x)
    if (cl[x] == x) {
      v.position[x] = v.closed.size();
      v.closed.push_back(x);
    }
  v.poset = p.induced(v.closed);
  return v;
}

bool pair_holds(Poset const &p, std::vector<std::size_t> const &cl, ClosedView const &v,
                std::size_t x, std::size_t y) {
  MobiusValue lhs = 0;
  std::vector<MobiusValue> const &row = p.moebius_row(x);
  p.up(x).for_each([&](ElementIndex z) {
    if (cl[z] == y)
      lhs = checked_add(lhs, row[z]);
  });
  MobiusValue rhs = 0;
  if (cl[x] == x)
    rhs = v.poset.moebius(v.position[x], v.position[y]);
  return lhs == rhs;
}

} // namespace

bool crapo_check_pair(Poset const &p, std::vector<std::size_t> const &cl, std::size_t x,
                      std::size_t y) {
  validate_closure(p, cl);
  if (cl[y] != y)
    throw InvalidArgument("crapo_check_pair: y must be closed");
  ClosedView v = closed_view(p, cl);
  return pair_holds(p, cl, v, x, y);
}

CrapoReport crapo_check(Poset const &p, std::vector<std::size_t> const &cl) {
  validate_closure(p, cl);
  ClosedView v = closed_view(p, cl);
  CrapoReport report;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y : v.closed) {
      ++report.pairs_checked;
      if (!pair_holds(p, cl, v, x, y))
        report.failures.push_back("(" + std::to_string(x) + ", " + std::to_string(y) + ")");
    }
  return report;
}

} // namespace amoebius
