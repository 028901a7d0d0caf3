#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "amoebius/cache.hpp"
#include "amoebius/errors.hpp"
#include "amoebius/selectors.hpp"
#include "amoebius/table.hpp"
#include "amoebius/verify.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace amoebius;
namespace fs = std::filesystem;

namespace {

std::string slurp(fs::path const &p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string golden(std::string const &name) {
  return slurp(fs::path(AMOEBIUS_GOLDEN_DIR) / name);
}

Table table_for(std::string const &spec, std::string const &aut,
                ClassTableOptions opts = {}) {
  auto lat = support::lattice(spec);
  return class_table(ClassPoset(lat, parse_aut_spec(lat, aut)), spec, aut, opts);
}

std::string column(Table const &t, std::string const &name, std::size_t row) {
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    if (t.columns[i] == name)
      return t.rows.at(row).at(i);
  throw std::runtime_error("no column " + name);
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int serial = 0;
    path = fs::temp_directory_path() /
           ("amoebius-test-" + std::to_string(std::random_device{}()) + "-" +
            std::to_string(serial++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("class tables match the golden files") {
  CHECK(render(table_for("S:4", "inn"), Format::Markdown) == golden("S4_inn.md"));
  CHECK(render(table_for("D:7", "inn"), Format::Markdown) == golden("D7_inn.md"));
  CHECK(render(table_for("C:6", "1"), Format::Markdown) == golden("C6_1.md"));
  CHECK(render(table_for("S:4", "inn"), Format::Csv) == golden("S4_inn.csv"));
  CHECK(render(table_for("C:6", "1"), Format::Json) == golden("C6_1.json"));
  CHECK(render(table_for("A:5", "inn", {.omega2 = true, .nonzero_only = true}),
               Format::Markdown) == golden("A5_inn_omega2.md"));

  auto a5 = support::lattice("A:5");
  CHECK(render(sigma_table(conjugacy_class_poset(a5), "A:5"), Format::Markdown) ==
        golden("A5_sigma.md"));
}

TEST_CASE("column naming follows A") {
  CHECK(table_for("S:3", "inn").columns[2] == "lambda");
  CHECK(table_for("S:3", "1").columns[2] == "mu");
  CHECK(table_for("S:3", "aut").columns[2] == "mu_A");
  CHECK(table_for("S:3", "inn:derived").columns[2] == "mu_A");
}

TEST_CASE("nonzero_only keeps the top and drops zero rows") {
  Table all = table_for("S:4", "inn");
  Table nz = table_for("S:4", "inn", {.nonzero_only = true});
  CHECK(all.rows.size() == 11);
  CHECK(nz.rows.size() == 8);
  CHECK(column(nz, "order", 0) == "24");
  for (std::size_t r = 0; r < nz.rows.size(); ++r)
    CHECK(column(nz, "lambda", r) != "0");
}

TEST_CASE("JSON tables round-trip") {
  for (auto [spec, aut] : {std::pair{"S:4", "inn"}, {"A:5", "1"}, {"Q:8", "aut"}}) {
    Table t = table_for(spec, aut, {.omega2 = true});
    CHECK(table_from_json(render(t, Format::Json)) == t);
  }
  auto lat = support::lattice("S:4");
  Table m = mu_lambda_table(check_mu_lambda(lat), "S:4");
  CHECK(table_from_json(render(m, Format::Json)) == m);
  CHECK_THROWS_AS(table_from_json("{\"group\": 3}"), Error);
  CHECK_THROWS_AS(table_from_json("not json"), Error);
}

TEST_CASE("rendering is deterministic") {
  CHECK(render(table_for("A:4", "aut"), Format::Json) ==
        render(table_for("A:4", "aut"), Format::Json));
}

TEST_CASE("csv quoting") {
  Table t{"g", "1", {"a", "b"}, {{"x,y", "say \"hi\""}, {"plain", "1"}}};
  CHECK(render(t, Format::Csv) == "a,b\n\"x,y\",\"say \"\"hi\"\"\"\nplain,1\n");
}

TEST_CASE("format names") {
  CHECK(parse_format("markdown") == Format::Markdown);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_format("json") == Format::Json);
  CHECK_THROWS_AS(parse_format("xml"), InvalidArgument);
}

TEST_CASE("subgroup selectors") {
  auto lat = support::lattice("S:4");
  CHECK(lat->subgroup(select_subgroup(*lat, "derived")).order == 12);
  CHECK(lat->subgroup(select_subgroup(*lat, "center")).order == 1);
  CHECK(select_subgroup(*lat, "frattini") == lat->trivial_id());
  CHECK(select_subgroup(*lat, "whole") == lat->top_id());
  CHECK(select_subgroup(*lat, "trivial") == 0);
  CHECK(select_subgroup(*lat, "#5") == 5);
  CHECK(lat->subgroup(select_subgroup(*lat, "perm:[(1,2)(3,4);(1,3)(2,4)]")).order == 4);
  CHECK(select_subgroup(*lat, "perm:[(1,2)]") == support::id_of_perm(*lat, "(1,2)"));
  CHECK_THROWS_AS(select_subgroup(*lat, "#999"), InvalidArgument);
  CHECK_THROWS_AS(select_subgroup(*lat, "#3x"), ParseError);
  CHECK_THROWS_AS(select_subgroup(*lat, "nonsense"), ParseError);
  CHECK_THROWS_AS(select_subgroup(*lat, "perm:[(1,5)]"), Error);

  auto q8 = support::lattice("Q:8");
  CHECK(q8->subgroup(select_subgroup(*q8, "center")).order == 2);
  CHECK(q8->subgroup(select_subgroup(*q8, "frattini")).order == 2);
}

TEST_CASE("automorphism specs") {
  auto lat = support::lattice("S:4");
  CHECK(parse_aut_spec(lat, "1").size() == 1);
  CHECK(parse_aut_spec(lat, "inn").size() == 24);
  CHECK(parse_aut_spec(lat, "A=inn").size() == 24);
  CHECK(parse_aut_spec(lat, "inn:derived").size() == 12);
  CHECK(parse_aut_spec(lat, "aut").size() == 24);
  CHECK_THROWS_AS(parse_aut_spec(lat, "outer"), ParseError);
  CHECK_THROWS_AS(parse_aut_spec(lat, "maps:/nonexistent/file"), InvalidArgument);
}

TEST_CASE("automorphisms from a maps file") {
  auto c2sq = support::lattice("C:2xC:2");
  FiniteGroup const &g = c2sq->group();
  // swap the two factors
  std::string text = "# factor swap\n\n" + g.name(g.generators()[0]) + " -> " +
                     g.name(g.generators()[1]) + "; " + g.name(g.generators()[1]) + " -> " +
                     g.name(g.generators()[0]) + "\n";
  AutomorphismGroup a = automorphisms_from_text(c2sq->group_ptr(), text);
  CHECK(a.size() == 2);
  ClassPoset p(c2sq, a);
  CHECK(p.size() == 4); // 1, the swapped pair, the diagonal, G

  TempDir dir;
  fs::path file = dir.path / "swap.maps";
  std::ofstream(file) << text;
  CHECK(parse_aut_spec(c2sq, "maps:" + file.string()).size() == 2);

  CHECK_THROWS_AS(automorphisms_from_text(c2sq->group_ptr(), "(1,2) (3,4)"), ParseError);
  std::string not_hom = g.name(g.generators()[0]) + " -> " + g.name(g.generators()[0]) + "; " +
                        g.name(g.generators()[1]) + " -> " + g.name(g.generators()[0]);
  CHECK_THROWS_AS(automorphisms_from_text(c2sq->group_ptr(), not_hom), Error);
}

TEST_CASE("lattice JSON round-trip") {
  auto lat = support::lattice("S:4");
  std::string text = lattice_to_json("S:4", *lat);
  SubgroupLattice back = lattice_from_json(text, "S:4", lat->group_ptr());
  REQUIRE(back.size() == lat->size());
  for (SubgroupId i = 0; i < back.size(); ++i)
    CHECK(back.subgroup(i).members == lat->subgroup(i).members);
  CHECK(lattice_to_json("S:4", back) == text);

  std::string wrong_version = text;
  wrong_version.replace(wrong_version.find(kEngineVersion), std::string(kEngineVersion).size(),
                        "amoebius-lattice-0");
  CHECK_THROWS_AS(lattice_from_json(wrong_version, "S:4", lat->group_ptr()), VersionMismatch);
  CHECK_THROWS_AS(lattice_from_json(text, "A:4", lat->group_ptr()), Error);
  CHECK_THROWS_AS(lattice_from_json(text.substr(0, text.size() / 2), "S:4", lat->group_ptr()),
                  Error);
}

TEST_CASE("lattice cache") {
  TempDir dir;
  LatticeCache cache(dir.path);
  auto g = support::group("S:4");
  auto built = cache.build("S:4", g, {});
  fs::path file = cache.file_for("S:4");
  REQUIRE(fs::exists(file));
  std::string first = slurp(file);

  SUBCASE("rebuild is byte-identical") {
    cache.build("S:4", g, {});
    CHECK(slurp(file) == first);
  }

  SUBCASE("hit equals recomputation") {
    std::vector<std::string> warnings;
    auto hit = cache.get("S:4", g, {}, &warnings);
    CHECK(warnings.empty());
    CHECK(lattice_to_json("S:4", *hit) == lattice_to_json("S:4", *support::lattice("S:4")));
  }

  SUBCASE("corrupt file is recomputed with a warning") {
    std::ofstream(file, std::ios::trunc) << "{ \"engine_version\": ";
    std::vector<std::string> warnings;
    auto lat = cache.get("S:4", g, {}, &warnings);
    CHECK(warnings.size() == 1);
    CHECK(lat->size() == 30);
    CHECK(slurp(file) == first);
  }

  SUBCASE("stale version is recomputed with a warning") {
    std::string stale = first;
    stale.replace(stale.find(kEngineVersion), std::string(kEngineVersion).size(), "old");
    std::ofstream(file, std::ios::trunc) << stale;
    std::vector<std::string> warnings;
    cache.get("S:4", g, {}, &warnings);
    CHECK(warnings.size() == 1);
    CHECK(slurp(file) == first);
  }

  SUBCASE("info and clear") {
    cache.build("A:4", support::group("A:4"), {});
    auto entries = cache.info();
    REQUIRE(entries.size() == 2);
    std::set<std::string> specs{entries[0].spec, entries[1].spec};
    CHECK(specs == std::set<std::string>{"S:4", "A:4"});
    for (auto const &e : entries) {
      CHECK(e.version == kEngineVersion);
      CHECK(e.subgroups == (e.spec == "S:4" ? 30u : 10u));
      CHECK(e.order == (e.spec == "S:4" ? 24u : 12u));
    }
    CHECK(cache.clear() == 2);
    CHECK(cache.info().empty());
  }

  CHECK(cache.file_for("S:4") != cache.file_for("S:4xC:1"));
}

TEST_CASE("verify battery") {
  for (std::string spec : {"C:2", "S:3", "A:5", "S:4xC:2", "Q:8", "C:3xS:3"}) {
    CAPTURE(spec);
    VerifyReport r = verify_group(spec, support::lattice(spec), {.t_max = 2});
    CHECK(r.passed());
    CHECK(r.checks.size() > 10);
    for (VerifyCheck const &c : r.checks)
      CHECK_MESSAGE(c.passed, (c.name + ": " + c.detail));
    auto j = nlohmann::json::parse(r.to_json());
    CHECK(j.at("group") == spec);
  }
}
