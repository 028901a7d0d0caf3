#include "amoebius/verify.hpp"

#include <json.hpp>

#include "amoebius/class_poset.hpp"
#include "amoebius/errors.hpp"
#include "amoebius/eulerian.hpp"
#include "amoebius/mulambda.hpp"

namespace amoebius {

bool VerifyReport::passed() const noexcept {
  for (auto const &c : checks)
    if (!c.passed)
      return false;
  return true;
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["group"] = group;
  j["t_max"] = t_max;
  j["passed"] = passed();
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (auto const &c : checks)
    list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = std::move(list);
  return j.dump(2) + "\n";
}

namespace {

bool fits(std::size_t base, unsigned t, std::size_t budget) {
  std::size_t v = 1;
  for (unsigned i = 0; i < t; ++i) {
    if (v > budget / std::max<std::size_t>(base, 1))
      return false;
    v *= base;
  }
  return v <= budget;
}

bool is_cyclic(FiniteGroup const &g) {
  for (ElementIndex x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order())
      return true;
  return false;
}

bool abelian_subgroup(FiniteGroup const &g, Subgroup const &n) {
  bool ok = true;
  n.members.for_each([&](ElementIndex x) {
    if (ok)
      for (ElementIndex y : n.gens)
        ok = ok && g.mul(x, y) == g.mul(y, x);
  });
  return ok;
}

class Battery {
public:
  Battery(VerifyReport &r) : report_(r) {}

  void add(std::string name, bool ok, std::string detail = {}) {
    report_.checks.push_back({std::move(name), ok, std::move(detail)});
  }

  template <class F>
  void guarded(std::string const &name, F &&f) {
    try {
      f();
    } catch (std::exception const &e) {
      add(name, false, std::string("error: ") + e.what());
    }
  }

private:
  VerifyReport &report_;
};

} // namespace

VerifyReport verify_group(std::string const &spec,
                          std::shared_ptr<SubgroupLattice const> const &lattice,
                          VerifyOptions const &options) {
  VerifyReport report;
  report.group = spec;
  report.t_max = options.t_max;
  Battery b(report);
  SubgroupLattice const &lat = *lattice;
  FiniteGroup const &g = lat.group();
  auto gp = lat.group_ptr();
  unsigned const t_max = std::max(1u, options.t_max);

  b.add("lattice.poset_axioms", lat.poset().satisfies_axioms());
  {
    bool ok = true;
    for (Subgroup const &h : lat.subgroups())
      ok = ok && g.order() % h.order == 0;
    b.add("lattice.lagrange", ok);
  }
  b.guarded("lattice.closure_axioms", [&] {
    validate_closure(lat.poset(), maximal_intersection_closure(lat));
    b.add("lattice.closure_axioms", true);
  });
  {
    ExactInt s = mu_sigma_sum(lat);
    b.add("mu_sigma_sum", s == 1, "sum = " + to_decimal(s));
  }

  std::vector<std::pair<std::string, AutomorphismGroup>> as;
  as.emplace_back("1", trivial_automorphisms(gp));
  as.emplace_back("inn", inner_automorphisms(gp, g.whole()));
  Subgroup const derived = commutator_subgroup(g);
  if (derived.order < g.order())
    as.emplace_back("inn:derived", inner_automorphisms(gp, derived));
  if (g.order() <= options.aut_bound) {
    try {
      as.emplace_back("aut", full_automorphism_group(gp, options.aut_bound));
    } catch (BoundExceeded const &) {
    }
  }

  std::vector<ExactInt> hall;
  for (unsigned t = 1; t <= t_max; ++t)
    hall.push_back(phi_hall(lat, t));
  for (unsigned t = 1; t <= t_max; ++t) {
    std::string name = "phi.bruteforce[t=" + std::to_string(t) + "]";
    if (fits(g.order(), t, options.tuple_budget)) {
      ExactInt brute = phi_bruteforce(g, t, options.tuple_budget);
      b.add(name, brute == hall[t - 1], "hall = " + to_decimal(hall[t - 1]) + ", brute = " + to_decimal(brute));
    }
  }

  bool const cyclic = is_cyclic(g);
  std::vector<ExactInt> star;
  TupleCounts counts(lattice);
  for (auto const &[aname, a] : as) {
    std::string const tag = "[A=" + aname + "]";
    b.guarded("class_poset" + tag, [&] {
      ClassPoset p(lattice, a);
      b.add("class_poset.axioms" + tag, p.poset().satisfies_axioms());
      CrapoReport cr = crapo_check(p);
      b.add("crapo" + tag, cr.ok(),
            std::to_string(cr.pairs_checked) + " pairs" +
                (cr.ok() ? std::string() : ", first failure: " + cr.failures.front()));
      ClosednessReport closed = nonzero_implies_closed(p);
      b.add("nonzero_implies_closed" + tag, closed.counterexamples.empty(),
            std::to_string(closed.nonzero_classes) + " nonzero classes");
      if (!cyclic) {
        ExactInt s = phi_via_classes(p, 1, counts);
        b.add("zero_sum_t1" + tag, s == 0, "sum = " + to_decimal(s));
      }
      for (unsigned t = 1; t <= t_max; ++t) {
        ExactInt v = phi_via_classes(p, t, counts);
        b.add("phi.classes" + tag + "[t=" + std::to_string(t) + "]", v == hall[t - 1],
              "classes = " + to_decimal(v) + ", hall = " + to_decimal(hall[t - 1]));
        ExactInt s = phi_star(p, t, counts);
        if (star.size() < t)
          star.push_back(s);
        b.add("phi_star.classes" + tag + "[t=" + std::to_string(t) + "]", s == star[t - 1],
              "value = " + to_decimal(s));
      }
    });
  }
  for (unsigned t = 1; t <= t_max && t <= star.size(); ++t) {
    if (t == 1)
      b.add("phi_star.t1_is_one", star[0] == 1, "value = " + to_decimal(star[0]));
    if (fits(lat.size(), t, options.tuple_budget / 16)) {
      ExactInt brute = phi_star_bruteforce(lat, t);
      b.add("phi_star.bruteforce[t=" + std::to_string(t) + "]", brute == star[t - 1],
            "brute = " + to_decimal(brute));
    }
  }

  ClassPoset inn(lattice, inner_automorphisms(gp, g.whole()));
  bool const solvable = is_solvable(g);
  b.guarded("normal_subgroup_identities", [&] {
    bool conj = true, quot = true, comp = true, rel = true;
    std::size_t normals = 0;
    for (SubgroupId n = 0; n < lat.size(); ++n) {
      Subgroup const &N = lat.subgroup(n);
      if (!g.is_normal(N))
        continue;
      ++normals;
      for (SubgroupId h = 0; h < lat.size(); ++h)
        conj = conj && conjunctive_identity(inn, n, h).holds();
      for (IdentityCheck const &q : quotient_identity(inn, n))
        quot = quot && q.holds();
      if (is_minimal_normal(lat, n) && abelian_subgroup(g, N))
        for (SubgroupId h = 0; h < lat.size(); ++h)
          comp = comp && complement_class_identity(inn, n, h).holds();
      for (unsigned t = 1; t <= t_max; ++t) {
        if (!fits(N.order, t, options.tuple_budget / 16))
          continue;
        RelativeCount r = phi_relative(lat, n, t);
        if (!r.quotient_generable)
          continue;
        auto lift = find_generating_lift(lat, n, t);
        rel = rel && lift && phi_relative_via_classes(inn, n, *lift) == r.value;
      }
    }
    std::string d = std::to_string(normals) + " normal subgroups";
    b.add("conjunctive_identity", conj, d);
    b.add("quotient_identity", quot, d);
    b.add("complement_class_identity", comp, d);
    b.add("relative_phi.classes", rel, d);
  });

  if (solvable) {
    bool ok = true;
    std::size_t ks = 0;
    for (SubgroupId k = 0; k < lat.size(); ++k)
      if (derived.is_subgroup_of(lat.subgroup(k))) {
        ++ks;
        ok = ok && lambda_equals_inner_by(lattice, k);
      }
    b.add("lambda_equals_inner_by_K", ok, std::to_string(ks) + " subgroups K above G'");
  }

  b.guarded("mu_lambda", [&] {
    MuLambdaAnalysis an(lattice);
    MuLambdaReport r = an.check();
    b.add("mu_lambda_property", r.passes(),
          std::to_string(r.violations.size()) + " violating classes" +
              (solvable ? "" : " (group not solvable)"));
    for (unsigned t = 1; t <= t_max; ++t) {
      std::string ts = "[t=" + std::to_string(t) + "]";
      StranaResult s = an.strana_check(t);
      b.add("strana.forms_agree" + ts, s.forms_agree, "lhs = " + to_decimal(s.lhs));
      if (r.passes())
        b.add("strana.zero" + ts, s.zero(), "lhs = " + to_decimal(s.lhs));
      BetaVector v = an.beta_vector(t);
      bool nonneg = true, zero_iff = true;
      ExactInt weighted = 0;
      for (std::size_t i = 0; i < v.classes.size(); ++i) {
        nonneg = nonneg && v.entries[i] >= 0;
        bool above = derived.is_subgroup_of(an.classes().representative(v.classes[i]));
        zero_iff = zero_iff && ((v.entries[i] == 0) == above);
        weighted += ExactInt(an.lambda(v.classes[i])) * v.entries[i];
      }
      b.add("beta.nonnegative" + ts, nonneg);
      b.add("beta.zero_iff_above_derived" + ts, zero_iff);
      // the top class contributes alpha - omega = 0, so this is the strana lhs
      b.add("beta.linear_equation" + ts, ExactRational(weighted) == s.lhs,
            "sum lambda beta = " + to_decimal(weighted));
    }
  });

  b.guarded("frattini_quotient", [&] {
    Subgroup const &phi = lat.subgroup(frattini(lat));
    Quotient q = quotient_group(g, phi);
    SubgroupLattice qlat = enumerate_subgroups(std::make_shared<FiniteGroup const>(std::move(q.group)));
    bool ok = true;
    for (unsigned t = 1; t <= t_max; ++t)
      ok = ok && gen_probabilities(lat, t).p == gen_probabilities(qlat, t).p;
    b.add("probability.frattini_quotient", ok, "|Frattini| = " + std::to_string(phi.order));
  });
  return report;
}

} // namespace amoebius
