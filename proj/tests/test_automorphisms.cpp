#include "doctest.h"

#include <algorithm>
#include <set>

#include "amoebius/automorphism.hpp"
#include "amoebius/errors.hpp"
#include "support.hpp"

using namespace amoebius;

TEST_CASE("inner automorphisms") {
  SUBCASE("trivial K") {
    auto g = support::group("S:4");
    CHECK(inner_automorphisms(g, g->trivial()).size() == 1);
  }
  SUBCASE("Alt(4) by V4") {
    auto lat = support::lattice("A:4");
    auto a = inner_automorphisms(lat->group_ptr(),
                                 lat->subgroup(support::normal_of_order(*lat, 4)));
    CHECK(a.size() == 4);
    CHECK(a.elements().size() == 4);
    CHECK(a.origin() == AutOrigin::InnerByK);
  }
  SUBCASE("abelian") {
    auto g = support::group("C:12");
    CHECK(inner_automorphisms(g, g->whole()).size() == 1);
    CHECK(inner_automorphisms(g, g->whole()).elements().size() == 1);
  }
  SUBCASE("order is |K : K meet Z(G)|") {
    for (std::string spec : {"S:4", "Q:8", "D:4", "S:3xC:2", "A:5"}) {
      CAPTURE(spec);
      auto lat = support::lattice(spec);
      Subgroup z = center(lat->group());
      for (Subgroup const &k : lat->subgroups()) {
        auto a = inner_automorphisms(lat->group_ptr(), k);
        std::size_t expected = k.order / k.members.intersection_count(z.members);
        REQUIRE(a.size() == expected);
        if (lat->group().order() <= 24)
          REQUIRE(a.elements().size() == expected);
      }
    }
  }
}

TEST_CASE("automorphism_from_images") {
  SUBCASE("identity") {
    auto g = support::group("S:4");
    Automorphism a = automorphism_from_images(*g, g->generators(), g->generators());
    CHECK(a.is_identity());
  }
  SUBCASE("squaring on Cyc(5)") {
    auto g = support::group("C:5");
    ElementIndex x = g->generators()[0];
    std::vector<ElementIndex> img{g->mul(x, x)};
    Automorphism a = automorphism_from_images(*g, g->generators(), img);
    CHECK(a.is_valid(*g));
    auto gen = generated_automorphisms(g, {a});
    CHECK(gen.size() == 4);
  }
  SUBCASE("Sym(3) map is inner") {
    auto g = support::group("S:3");
    ElementIndex t12 = g->index_of(Permutation::from_cycles("(1,2)", 3));
    ElementIndex t13 = g->index_of(Permutation::from_cycles("(1,3)", 3));
    ElementIndex c = g->index_of(Permutation::from_cycles("(1,2,3)", 3));
    std::vector<ElementIndex> gens{t12, c}, imgs{t13, c};
    Automorphism a = automorphism_from_images(*g, gens, imgs);
    bool inner = false;
    for (ElementIndex k = 0; k < g->order(); ++k)
      inner = inner || Automorphism::conjugation(*g, k) == a;
    CHECK(inner);
  }
  SUBCASE("errors") {
    auto g = support::group("C:6");
    ElementIndex x = g->generators()[0];
    std::vector<ElementIndex> gens{x};
    std::vector<ElementIndex> bad{g->mul(x, x)};
    CHECK_THROWS_AS(automorphism_from_images(*g, gens, bad), NotBijective);
    auto s3 = support::group("S:3");
    std::vector<ElementIndex> imgs{s3->generators()[1], s3->generators()[1]};
    CHECK_THROWS_AS(automorphism_from_images(*s3, s3->generators(), imgs), NotAHomomorphism);
  }
}

TEST_CASE("full automorphism group") {
  CHECK(full_automorphism_group(support::group("C:2xC:2xC:2")).size() == 168);
  CHECK(full_automorphism_group(support::group("S:3")).size() == 6);
  CHECK(full_automorphism_group(support::group("Q:8")).size() == 24);
  CHECK(full_automorphism_group(support::group("D:4")).size() == 8);
  CHECK(full_automorphism_group(support::group("C:3xC:3")).size() == 48);
  for (std::size_t n = 1; n <= 24; ++n) {
    CAPTURE(n);
    auto a = full_automorphism_group(support::group("C:" + std::to_string(n)));
    CHECK(a.size() == oracle::totient(n));
    CHECK(a.elements().size() == oracle::totient(n));
  }
  CHECK_THROWS_AS(full_automorphism_group(support::group("S:5")), BoundExceeded);
  auto d4 = support::group("D:4");
  AutomorphismGroup aut = full_automorphism_group(d4);
  for (Automorphism const &a : aut.elements())
    CHECK(a.is_valid(*d4));
}

TEST_CASE("subgroup orbits") {
  SUBCASE("trivial A") {
    auto lat = support::lattice("S:4");
    auto a = trivial_automorphisms(lat->group_ptr());
    for (SubgroupId h = 0; h < lat->size(); ++h)
      CHECK(subgroup_orbit(a, h, *lat) == std::vector<SubgroupId>{h});
  }
  SUBCASE("Alt(4), inner by V4") {
    auto lat = support::lattice("A:4");
    auto a = inner_automorphisms(lat->group_ptr(),
                                 lat->subgroup(support::normal_of_order(*lat, 4)));
    for (SubgroupId h : lat->by_order().at(2))
      CHECK(subgroup_orbit(a, h, *lat).size() == 1);
  }
  SUBCASE("Alt(5), 3-cycles") {
    auto lat = support::lattice("A:5");
    auto inn = inner_automorphisms(lat->group_ptr(), lat->group().whole());
    CHECK(subgroup_orbit(inn, support::id_of_perm(*lat, "(1,2,3)"), *lat).size() == 10);
  }
  SUBCASE("inner orbits are conjugacy classes, sizes divide |A|, lattice is preserved") {
    for (std::string spec : {"S:4", "A:5", "D:6", "Q:8xC:2", "C:2xC:2xC:2"}) {
      CAPTURE(spec);
      auto lat = support::lattice(spec);
      FiniteGroup const &g = lat->group();
      std::vector<AutomorphismGroup> groups{inner_automorphisms(lat->group_ptr(), g.whole())};
      if (g.order() <= 64)
        groups.push_back(full_automorphism_group(lat->group_ptr()));
      for (AutomorphismGroup const &a : groups) {
        std::set<SubgroupId> seen;
        for (SubgroupId h = 0; h < lat->size(); ++h) {
          std::vector<SubgroupId> orbit = subgroup_orbit(a, h, *lat);
          CHECK(a.size() % orbit.size() == 0);
          CHECK(std::find(orbit.begin(), orbit.end(), h) != orbit.end());
          if (seen.count(h) == 0)
            for (SubgroupId m : orbit)
              CHECK(seen.insert(m).second);
          for (Automorphism const &x : a.elements())
            CHECK(lat->find(x.image(lat->subgroup(h).members)).has_value());
        }
        CHECK(seen.size() == lat->size());
        Subgroup d = commutator_subgroup(g);
        CHECK(a.leaves_invariant(d));
      }
      auto const &inn = groups.front();
      for (SubgroupId h = 0; h < lat->size(); ++h) {
        std::set<oracle::Members> expected =
            oracle::conjugates(g, support::to_members(lat->subgroup(h).members, g.order()));
        std::set<oracle::Members> got;
        for (SubgroupId m : subgroup_orbit(inn, h, *lat))
          got.insert(support::to_members(lat->subgroup(m).members, g.order()));
        CHECK(got == expected);
      }
    }
  }
}

TEST_CASE("induced quotient action") {
  SUBCASE("trivial N") {
    auto lat = support::lattice("S:3");
    auto inn = inner_automorphisms(lat->group_ptr(), lat->group().whole());
    Quotient q = quotient_group(lat->group(), lat->group().trivial());
    auto qg = std::make_shared<FiniteGroup const>(std::move(q.group));
    CHECK(induced_quotient_action(inn, lat->group().trivial(), qg, q.projection).size() == 6);
  }
  SUBCASE("Sym(4) mod V4") {
    auto lat = support::lattice("S:4");
    Subgroup v4 = lat->subgroup(support::normal_of_order(*lat, 4));
    auto inn = inner_automorphisms(lat->group_ptr(), lat->group().whole());
    Quotient q = quotient_group(lat->group(), v4);
    auto qg = std::make_shared<FiniteGroup const>(std::move(q.group));
    auto bar = induced_quotient_action(inn, v4, qg, q.projection);
    CHECK(bar.size() == 6);
    CHECK(bar.elements().size() == 6);
    auto triv = trivial_automorphisms(lat->group_ptr());
    CHECK(induced_quotient_action(triv, v4, qg, q.projection).size() == 1);
  }
  SUBCASE("moved N") {
    auto lat = support::lattice("C:2xC:2");
    auto aut = full_automorphism_group(lat->group_ptr());
    Subgroup n = lat->subgroup(support::any_of_order(*lat, 2));
    Quotient q = quotient_group(lat->group(), n);
    auto qg = std::make_shared<FiniteGroup const>(std::move(q.group));
    CHECK_THROWS_AS(induced_quotient_action(aut, n, qg, q.projection), NotInvariant);
  }
}
