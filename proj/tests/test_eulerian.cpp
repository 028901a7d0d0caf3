#include "doctest.h"

#include "amoebius/catalog.hpp"
#include "amoebius/errors.hpp"
#include "amoebius/eulerian.hpp"
#include "support.hpp"

using namespace amoebius;

namespace {

ClassPoset inner_poset(std::shared_ptr<SubgroupLattice const> lat) {
  return conjugacy_class_poset(std::move(lat));
}

ClassId class_of_order(ClassPoset const &p, std::size_t order) {
  for (ClassId c = 0; c < p.size(); ++c)
    if (p.representative(c).order == order)
      return c;
  throw std::runtime_error("no class of that order");
}

std::set<oracle::Members> orbit_members(ClassPoset const &p, ClassId c) {
  std::set<oracle::Members> out;
  for (SubgroupId m : p.cls(c).members)
    out.insert(support::to_members(p.lattice().subgroup(m).members, p.group().order()));
  return out;
}

} // namespace

TEST_CASE("phi_hall reference values") {
  CHECK(phi_hall(*support::lattice("A:5"), 2) == 2280);
  CHECK(phi_hall(*support::lattice("C:6"), 1) == 2);
  CHECK(phi_hall(*support::lattice("S:3"), 2) == 18);
  for (std::string spec : {"S:3", "C:2xC:2", "Q:8", "A:5", "D:5"})
    CHECK(phi_hall(*support::lattice(spec), 1) == 0);
}

TEST_CASE("phi_bruteforce") {
  CHECK(phi_bruteforce(*support::group("S:3"), 2) == 18);
  CHECK(phi_bruteforce(*support::group("C:2"), 1) == 1);
  CHECK(phi_bruteforce(*support::group("A:4"), 2) == phi_hall(*support::lattice("A:4"), 2));
  CHECK(phi_bruteforce(*support::group("S:3"), 2) == oracle::generating_tuples(*support::group("S:3"), 2));
  CHECK_THROWS_AS(phi_bruteforce(*support::group("A:5"), 5, 1000), BudgetExceeded);
}

TEST_CASE("omega_A") {
  SUBCASE("Sym(4), S3 copy") {
    ClassPoset p = inner_poset(support::lattice("S:4"));
    CHECK(omega_A(p, class_of_order(p, 6), 1) == 15);
  }
  SUBCASE("Alt(5), D5 copy") {
    ClassPoset p = inner_poset(support::lattice("A:5"));
    CHECK(omega_A(p, class_of_order(p, 10), 2) == 550);
  }
  SUBCASE("trivial A gives |H|^t") {
    auto lat = support::lattice("S:4");
    ClassPoset p(lat, trivial_automorphisms(lat->group_ptr()));
    for (ClassId c = 0; c < p.size(); ++c)
      for (unsigned t = 1; t <= 3; ++t)
        CHECK(omega_A(p, c, t) == ipow(p.representative(c).order, t));
  }
  SUBCASE("tuple scan and inclusion-exclusion agree") {
    for (std::string spec : {"S:4", "D:6", "Q:8", "A:4"}) {
      CAPTURE(spec);
      auto lat = support::lattice(spec);
      std::vector<ClassPoset> posets;
      posets.push_back(inner_poset(lat));
      posets.emplace_back(lat, full_automorphism_group(lat->group_ptr()));
      for (ClassPoset const &p : posets) {
        TupleCounts counts(lat);
        for (ClassId c = 0; c < p.size(); ++c) {
          for (unsigned t = 1; t <= 2; ++t) {
            ExactInt w = omega_A(p, c, t, counts);
            CHECK(w == oracle::union_of_powers(lat->group(), orbit_members(p, c), t));
            if (p.cls(c).members.size() <= 12)
              CHECK(w == omega_A_inclusion_exclusion(p, c, t));
            CHECK(w >= ipow(p.representative(c).order, t));
            if (p.cls(c).members.size() == 1)
              CHECK(w == ipow(p.representative(c).order, t));
            CHECK(psi_A(p, c, t, counts) <= w);
          }
        }
      }
    }
  }
  SUBCASE("large orbits refuse inclusion-exclusion") {
    ClassPoset p = inner_poset(support::lattice("A:5"));
    CHECK_THROWS_AS(omega_A_inclusion_exclusion(p, class_of_order(p, 2), 1), BudgetExceeded);
  }
}

TEST_CASE("phi via classes") {
  SUBCASE("Sym(4) and Alt(5) worked sums") {
    CHECK(phi_via_classes(inner_poset(support::lattice("S:4")), 1) == 0);
    ClassPoset a5 = inner_poset(support::lattice("A:5"));
    CHECK(phi_via_classes(a5, 1) == 0);
    CHECK(phi_via_classes(a5, 2) == 2280);
  }
  SUBCASE("every A gives phi_hall") {
    for (std::string spec : {"S:4", "D:4", "C:2xC:2xC:2", "C:3xS:3", "Q:8"}) {
      CAPTURE(spec);
      auto lat = support::lattice(spec);
      std::vector<AutomorphismGroup> as{trivial_automorphisms(lat->group_ptr()),
                                        inner_automorphisms(lat->group_ptr(), lat->group().whole()),
                                        full_automorphism_group(lat->group_ptr())};
      for (AutomorphismGroup const &a : as) {
        ClassPoset p(lat, a);
        for (unsigned t = 1; t <= 3; ++t)
          CHECK(phi_via_classes(p, t) == phi_hall(*lat, t));
      }
    }
  }
}

TEST_CASE("cyclic group with full automorphisms: two nonzero classes") {
  auto lat = support::lattice("C:3xC:3");
  ClassPoset p(lat, full_automorphism_group(lat->group_ptr()));
  std::size_t nonzero = 0;
  for (ClassId c = 0; c < p.size(); ++c)
    if (p.mu_to_top(c) != 0)
      ++nonzero;
  CHECK(nonzero == 2);
  ClassId h = class_of_order(p, 3);
  CHECK(omega_A(p, h, 1) == 9);
  for (unsigned t = 1; t <= 3; ++t)
    CHECK(ipow(9, t) - omega_A(p, h, t) == phi_hall(*lat, t));
}

TEST_CASE("relative counts") {
  SUBCASE("N trivial and N = G") {
    auto lat = support::lattice("S:4");
    CHECK(phi_relative(*lat, lat->trivial_id(), 2).value == 1);
    CHECK(phi_relative(*lat, lat->top_id(), 2).value == phi_hall(*lat, 2));
  }
  SUBCASE("Sym(3) over its rotations") {
    auto lat = support::lattice("S:3");
    SubgroupId n = support::normal_of_order(*lat, 3);
    // a lift of the nontrivial coset times a rotation is a transposition,
    // which never generates Sym(3); for t = 2 the 18 generating pairs split over 3 coset pairs
    RelativeCount r = phi_relative(*lat, n, 1);
    CHECK(r.value == 0);
    CHECK(r.quotient_generable);
    auto lift = find_generating_lift(*lat, n, 1);
    REQUIRE(lift);
    CHECK(phi_relative_via_classes(inner_poset(lat), n, *lift) == 0);
    CHECK(phi_relative(*lat, n, 2).value == 6);
  }
  SUBCASE("not generable") {
    auto lat = support::lattice("C:2xC:2xC:2");
    RelativeCount r = phi_relative(*lat, lat->trivial_id(), 2);
    CHECK(r.value == 0);
    CHECK_FALSE(r.quotient_generable);
    CHECK_FALSE(r.warning.empty());
    CHECK_FALSE(find_generating_lift(*lat, lat->trivial_id(), 2));
  }
  SUBCASE("lift scan, class formula and independence of the lift") {
    for (std::string spec : {"S:4", "A:4", "D:6", "S:3xC:2", "Q:8"}) {
      CAPTURE(spec);
      auto lat = support::lattice(spec);
      FiniteGroup const &g = lat->group();
      ClassPoset inn = inner_poset(lat);
      ClassPoset one(lat, trivial_automorphisms(lat->group_ptr()));
      for (SubgroupId n = 0; n < lat->size(); ++n) {
        Subgroup const &N = lat->subgroup(n);
        if (!g.is_normal(N))
          continue;
        for (unsigned t = 1; t <= 2; ++t) {
          RelativeCount r = phi_relative(*lat, n, t);
          auto lift = find_generating_lift(*lat, n, t);
          CHECK(r.quotient_generable == lift.has_value());
          if (!lift)
            continue;
          CHECK(phi_relative_via_classes(inn, n, *lift) == r.value);
          CHECK(phi_relative_via_classes(one, n, *lift) == r.value);
          // brute-force count over N^t for this lift and for a shifted lift
          std::vector<ElementIndex> nm = N.members.to_indices();
          auto scan = [&](std::vector<ElementIndex> const &base) {
            std::size_t hits = 0;
            oracle::for_each_tuple(nm.size(), t, [&](std::vector<ElementIndex> const &idx) {
              std::vector<ElementIndex> xs;
              for (unsigned i = 0; i < t; ++i)
                xs.push_back(g.mul(base[i], nm[idx[i]]));
              if (oracle::count(oracle::close_elements(g, xs)) == g.order())
                ++hits;
            });
            return hits;
          };
          CHECK(r.value == scan(*lift));
          std::vector<ElementIndex> other = *lift;
          other[0] = g.mul(nm.back(), other[0]);
          CHECK(r.value == scan(other));
        }
      }
    }
  }
  SUBCASE("errors") {
    auto lat = support::lattice("S:3");
    SubgroupId t = support::any_of_order(*lat, 2);
    CHECK_THROWS_AS(phi_relative(*lat, t, 1), NotNormal);
    SubgroupId n = support::normal_of_order(*lat, 3);
    std::vector<ElementIndex> bad{lat->group().identity()};
    CHECK_THROWS_AS(phi_relative_via_classes(inner_poset(lat), n, bad), LiftNotGenerating);
    auto c22 = support::lattice("C:2xC:2");
    ClassPoset full(c22, full_automorphism_group(c22->group_ptr()));
    SubgroupId m = support::any_of_order(*c22, 2);
    std::vector<ElementIndex> lift{c22->group().generators()[0]};
    CHECK_THROWS_AS(phi_relative_via_classes(full, m, lift), NotInvariant);
  }
}

TEST_CASE("sigma, sigma_A and phi_star") {
  auto a5 = support::lattice("A:5");
  CHECK(sigma(*a5, a5->top_id()) == 59);
  CHECK(sigma(*a5, support::any_of_order(*a5, 12)) == 10);
  CHECK(sigma(*a5, support::any_of_order(*a5, 6)) == 6);
  CHECK(sigma(*a5, support::any_of_order(*a5, 10)) == 8);
  CHECK(sigma(*a5, a5->trivial_id()) == 1);

  ClassPoset one(a5, trivial_automorphisms(a5->group_ptr()));
  TupleCounts counts(a5);
  for (ClassId c = 0; c < one.size(); c += 7)
    for (unsigned t = 1; t <= 2; ++t)
      CHECK(sigma_A(one, c, t, counts) == ipow(a5->sigma(one.cls(c).representative), t));
  CHECK(phi_star(one, 1) == 1);
  CHECK(phi_star(inner_poset(a5), 1) == 1);

  for (std::string spec : {"S:3", "S:4", "Q:8", "C:2xC:2", "D:5"}) {
    CAPTURE(spec);
    auto lat = support::lattice(spec);
    ClassPoset inn = inner_poset(lat);
    ClassPoset o(lat, trivial_automorphisms(lat->group_ptr()));
    ClassPoset full(lat, full_automorphism_group(lat->group_ptr()));
    for (unsigned t = 1; t <= 2; ++t) {
      ExactInt brute = phi_star_bruteforce(*lat, t);
      CHECK(phi_star(inn, t) == brute);
      CHECK(phi_star(o, t) == brute);
      CHECK(phi_star(full, t) == brute);
    }
  }
}

TEST_CASE("mu sigma sum is one") {
  for (CatalogEntry const &e : catalog(30)) {
    CAPTURE(e.spec);
    CHECK(mu_sigma_sum(*support::lattice(e.spec)) == 1);
  }
}

TEST_CASE("generation probabilities") {
  SUBCASE("Cyc(2)") {
    GenerationProbabilities pr = gen_probabilities(*support::lattice("C:2"), 1);
    CHECK(pr.p == ExactRational(1, 2));
    CHECK(pr.p_star == ExactRational(1, 2));
  }
  SUBCASE("prime power cyclic closed forms") {
    for (unsigned p : {2u, 3u})
      for (unsigned a : {2u, 3u})
        for (unsigned t = 1; t <= 3; ++t) {
          std::size_t n = 1;
          for (unsigned i = 0; i < a; ++i)
            n *= p;
          GenerationProbabilities pr = gen_probabilities(*support::lattice("C:" + std::to_string(n)), t);
          CHECK(pr.p == 1 - ExactRational(1, ipow(p, t)));
          CHECK(pr.p_star == 1 - ExactRational(ipow(a, t), ipow(a + 1, t)));
          auto q = support::lattice("C:" + std::to_string(p));
          if (t == 1)
            CHECK(pr.p_star != gen_probabilities(*q, t).p_star);
        }
  }
  SUBCASE("invariant under the Frattini quotient") {
    for (std::string spec : {"C:8", "Q:8", "S:4", "D:4xC:3", "C:4xC:2"}) {
      CAPTURE(spec);
      auto lat = support::lattice(spec);
      Quotient q = quotient_group(lat->group(), lat->subgroup(frattini(*lat)));
      auto qlat = enumerate_subgroups(std::make_shared<FiniteGroup const>(std::move(q.group)));
      for (unsigned t = 1; t <= 3; ++t)
        CHECK(gen_probabilities(*lat, t).p == gen_probabilities(qlat, t).p);
    }
  }
}
