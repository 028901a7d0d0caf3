#include "amoebius/mulambda.hpp"

#include <algorithm>

#include "amoebius/errors.hpp"

namespace amoebius {

MuLambdaAnalysis::MuLambdaAnalysis(std::shared_ptr<SubgroupLattice const> lattice)
    : lattice_(lattice), poset_(conjugacy_class_poset(lattice)),
      derived_(commutator_subgroup(lattice->group())), counts_(lattice) {
  FiniteGroup const &g = lattice_->group();
  data_.reserve(poset_.size());
  for (ClassId c = 0; c < poset_.size(); ++c) {
    Subgroup const &h = poset_.representative(c);
    std::size_t members = poset_.cls(c).members.size();
    ClassData d{};
    d.normalizer_order = g.order() / members;
    Subgroup n = normalizer(g, h);
    if (n.order != d.normalizer_order)
      throw Error("normalizer order disagrees with the conjugacy class size");
    d.normalizer_meet_derived = n.members.intersection_count(derived_.members);
    d.meet_derived = h.members.intersection_count(derived_.members);
    data_.push_back(d);
  }
}

MobiusValue MuLambdaAnalysis::mu(ClassId c) const {
  return lattice_->mu(poset_.cls(c).representative);
}

MobiusValue MuLambdaAnalysis::mu_star(ClassId c) const {
  auto factor = static_cast<MobiusValue>(data_[c].normalizer_meet_derived / data_[c].meet_derived);
  return checked_mul(factor, lambda(c));
}

MuLambdaReport MuLambdaAnalysis::check() const {
  MuLambdaReport r;
  FiniteGroup const &g = lattice_->group();
  for (ClassId c = 0; c < poset_.size(); ++c) {
    MuLambdaRow row{};
    row.cls = c;
    row.representative = poset_.cls(c).representative;
    row.name = subgroup_name(g, poset_.representative(c));
    row.order = poset_.representative(c).order;
    row.normalizer_order = data_[c].normalizer_order;
    row.kappa = poset_.cls(c).members.size();
    row.mu = mu(c);
    row.lambda = lambda(c);
    row.index_factor = data_[c].normalizer_meet_derived / data_[c].meet_derived;
    row.mu_star = mu_star(c);
    if (!row.ok())
      r.violations.push_back(c);
    r.rows.push_back(std::move(row));
  }
  return r;
}

std::vector<ClassId> MuLambdaAnalysis::t_set() const {
  std::vector<ClassId> out;
  for (ClassId c = 0; c < poset_.size(); ++c)
    if (mu(c) != mu_star(c))
      out.push_back(c);
  return out;
}

ExactRational MuLambdaAnalysis::tau(std::size_t n) const {
  ExactRational sum = 0;
  for (ClassId c : t_set())
    if (poset_.representative(c).order == n)
      sum += ExactRational(ExactInt(mu(c) - mu_star(c)), ExactInt(data_[c].normalizer_order));
  return sum;
}

std::map<std::size_t, ExactRational> MuLambdaAnalysis::tau_spectrum() const {
  std::map<std::size_t, ExactRational> out;
  for (ClassId c : t_set())
    out[poset_.representative(c).order] +=
        ExactRational(ExactInt(mu(c) - mu_star(c)), ExactInt(data_[c].normalizer_order));
  return out;
}

ExactRational MuLambdaAnalysis::alpha(ClassId c, unsigned t) const {
  if (t < 1)
    throw InvalidArgument("t must be at least 1");
  FiniteGroup const &g = lattice_->group();
  std::size_t const h = poset_.representative(c).order;
  std::size_t const d = derived_.order;
  // |G'H| = |G'||H| / |G' meet H|, |G'N| = |G'||N| / |G' meet N|
  ExactRational derived_h(ExactInt(d) * h, ExactInt(data_[c].meet_derived));
  ExactRational derived_n(ExactInt(d) * data_[c].normalizer_order,
                          ExactInt(data_[c].normalizer_meet_derived));
  return ExactRational(ipow(h, t - 1) * g.order()) * derived_h / derived_n;
}

ExactInt MuLambdaAnalysis::omega(ClassId c, unsigned t) const {
  return omega_A(poset_, c, t, counts_);
}

ExactInt MuLambdaAnalysis::beta(ClassId c, unsigned t) const {
  ExactRational b = alpha(c, t) - ExactRational(omega(c, t));
  if (boost::multiprecision::denominator(b) != 1)
    throw Error("beta is not an integer");
  return boost::multiprecision::numerator(b);
}

std::vector<ClassId> MuLambdaAnalysis::c_star() const {
  std::vector<ClassId> out;
  for (ClassId c = 0; c < poset_.top(); ++c)
    if (lambda(c) != 0)
      out.push_back(c);
  std::sort(out.begin(), out.end(), [&](ClassId a, ClassId b) {
    Subgroup const &x = poset_.representative(a);
    Subgroup const &y = poset_.representative(b);
    if (x.order != y.order)
      return x.order > y.order;
    return x.members.lex_less(y.members);
  });
  return out;
}

BetaVector MuLambdaAnalysis::beta_vector(unsigned t) const {
  BetaVector v;
  v.t = t;
  v.classes = c_star();
  for (ClassId c : v.classes)
    v.entries.push_back(beta(c, t));
  return v;
}

std::size_t rational_rank(std::vector<std::vector<ExactInt>> const &rows) {
  if (rows.empty())
    return 0;
  std::size_t const cols = rows.front().size();
  std::vector<std::vector<ExactRational>> m;
  for (auto const &r : rows)
    m.emplace_back(r.begin(), r.end());
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0)
      ++pivot;
    if (pivot == m.size())
      continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0)
        continue;
      ExactRational f = m[r][col] / m[rank][col];
      for (std::size_t k = col; k < cols; ++k)
        m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t MuLambdaAnalysis::beta_span_rank(unsigned t_max) const {
  if (t_max < 1)
    throw InvalidArgument("t_max must be at least 1");
  std::vector<std::vector<ExactInt>> rows;
  for (unsigned t = 1; t <= t_max; ++t)
    rows.push_back(beta_vector(t).entries);
  return rational_rank(rows);
}

StranaResult MuLambdaAnalysis::strana_check(unsigned t) const {
  StranaResult r;
  r.t = t;
  for (ClassId c = 0; c < poset_.size(); ++c) {
    MobiusValue l = lambda(c);
    if (l != 0)
      r.lhs += ExactRational(l) * (alpha(c, t) - ExactRational(omega(c, t)));
  }
  for (ClassId c : t_set()) {
    ExactInt diff = ExactInt(mu(c)) - ExactInt(mu_star(c));
    r.restricted += ExactRational(diff * ipow(poset_.representative(c).order, t),
                                  ExactInt(data_[c].normalizer_order));
  }
  r.forms_agree =
      r.lhs == -ExactRational(ExactInt(lattice_->group().order())) * r.restricted;
  return r;
}

FrobeniusVerdict MuLambdaAnalysis::frobenius_beta_classifier(unsigned t_max) const {
  FrobeniusVerdict v;
  v.t_max = t_max;
  BetaVector first = beta_vector(1);
  v.constant = true;
  for (unsigned t = 2; t <= t_max && v.constant; ++t)
    v.constant = beta_vector(t).entries == first.entries;
  v.nilpotent = is_nilpotent(*lattice_);

  FiniteGroup const &g = lattice_->group();
  for (SubgroupId m : lattice_->maximals()) {
    Subgroup const &h = lattice_->subgroup(m);
    if (h.order == 1 || g.is_normal(h))
      continue;
    bool cyclic = false;
    h.members.for_each([&](ElementIndex x) {
      if (g.element_order(x) == h.order)
        cyclic = true;
    });
    if (!cyclic)
      continue;
    bool trivial_meets = true;
    for (SubgroupId other : poset_.cls(poset_.class_of(m)).members)
      if (other != m && lattice_->subgroup(other).members.intersection_count(h.members) != 1)
        trivial_meets = false;
    if (trivial_meets) {
      v.frobenius_cyclic_complement = true;
      break;
    }
  }
  return v;
}

MuLambdaReport check_mu_lambda(std::shared_ptr<SubgroupLattice const> lattice) {
  return MuLambdaAnalysis(std::move(lattice)).check();
}

} // namespace amoebius
