#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "amoebius/cache.hpp"
#include "amoebius/class_poset.hpp"
#include "amoebius/errors.hpp"
#include "amoebius/eulerian.hpp"
#include "amoebius/mulambda.hpp"
#include "amoebius/selectors.hpp"
#include "amoebius/table.hpp"
#include "amoebius/verify.hpp"

using namespace amoebius;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitError = 2;

struct RunConfig {
  std::string spec;
  std::string aut = "inn";
  unsigned t = 1;
  unsigned t_max = 3;
  std::string format = "markdown";
  std::string output;
  std::string cache_dir;
  std::string profile = "default";
  std::size_t order_cap = kDefaultOrderCap;
  std::size_t subgroup_budget = kDefaultSubgroupBudget;
  std::size_t tuple_budget = kDefaultTupleBudget;
};

void apply_profile(RunConfig &cfg) {
  if (cfg.profile == "stretch") {
    cfg.subgroup_budget = std::max<std::size_t>(cfg.subgroup_budget, 2000000);
    cfg.tuple_budget = std::max<std::size_t>(cfg.tuple_budget, 1000000000);
  } else if (cfg.profile != "default") {
    throw InvalidArgument("unknown profile '" + cfg.profile + "'");
  }
  if (cfg.order_cap == 0 || cfg.subgroup_budget == 0 || cfg.tuple_budget == 0)
    throw InvalidArgument("budgets must be positive");
}

class Session {
public:
  explicit Session(RunConfig const &cfg) : cfg_(cfg) {}

  std::shared_ptr<SubgroupLattice const> lattice() {
    if (lattice_)
      return lattice_;
    auto group = std::make_shared<FiniteGroup const>(build_from_spec(cfg_.spec, cfg_.order_cap));
    LatticeOptions opts{cfg_.subgroup_budget};
    std::optional<std::filesystem::path> dir;
    if (!cfg_.cache_dir.empty())
      dir = cfg_.cache_dir;
    else
      dir = LatticeCache::dir_from_env();
    if (dir) {
      LatticeCache cache(*dir);
      std::vector<std::string> warnings;
      lattice_ = cache.get(cfg_.spec, group, opts, &warnings);
      for (auto const &w : warnings)
        std::cerr << "warning: " << w << '\n';
    } else {
      lattice_ = std::make_shared<SubgroupLattice const>(enumerate_subgroups(group, opts));
    }
    return lattice_;
  }

  ClassPoset poset() { return ClassPoset(lattice(), parse_aut_spec(lattice(), cfg_.aut)); }

  void emit(std::string const &text) const {
    if (cfg_.output.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(cfg_.output, std::ios::binary | std::ios::trunc);
    if (!out)
      throw Error("cannot write " + cfg_.output);
    out << text;
  }

  void emit(Table const &t) const { emit(render(t, parse_format(cfg_.format))); }

  /// Scalar results: a JSON object, or a one-row table in other formats.
  void emit_record(json const &j) const {
    if (parse_format(cfg_.format) == Format::Json) {
      emit(j.dump(2) + "\n");
      return;
    }
    Table t;
    t.group = cfg_.spec;
    t.aut = j.contains("A") ? j["A"].get<std::string>() : "";
    std::vector<std::string> row;
    for (auto const &[k, v] : j.items()) {
      t.columns.push_back(k);
      row.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    t.rows.push_back(std::move(row));
    emit(t);
  }

  RunConfig const &cfg() const { return cfg_; }

private:
  RunConfig cfg_;
  std::shared_ptr<SubgroupLattice const> lattice_;
};

int cmd_table(Session &s, bool omega2, bool nonzero) {
  ClassPoset p = s.poset();
  s.emit(class_table(p, s.cfg().spec, s.cfg().aut, {omega2, nonzero}));
  return kExitPass;
}

int cmd_phi(Session &s, std::string const &via) {
  auto lat = s.lattice();
  unsigned const t = s.cfg().t;
  ExactInt value;
  if (via == "hall")
    value = phi_hall(*lat, t);
  else if (via == "classes")
    value = phi_via_classes(s.poset(), t);
  else if (via == "brute")
    value = phi_bruteforce(lat->group(), t, s.cfg().tuple_budget);
  else
    throw InvalidArgument("--via must be hall, classes or brute");
  s.emit_record({{"group", s.cfg().spec}, {"A", s.cfg().aut}, {"t", std::to_string(t)},
                 {"method", via}, {"value", to_decimal(value)}});
  return kExitPass;
}

int cmd_phi_rel(Session &s, std::string const &normal, std::string const &via) {
  auto lat = s.lattice();
  unsigned const t = s.cfg().t;
  SubgroupId n = select_subgroup(*lat, normal);
  RelativeCount r = phi_relative(*lat, n, t);
  if (!r.warning.empty())
    std::cerr << "warning: " << r.warning << '\n';
  ExactInt value = r.value;
  if (via == "classes" && r.quotient_generable) {
    auto lift = find_generating_lift(*lat, n, t);
    value = phi_relative_via_classes(s.poset(), n, *lift, s.cfg().tuple_budget);
  } else if (via != "classes" && via != "gaschutz") {
    throw InvalidArgument("--via must be gaschutz or classes");
  }
  s.emit_record({{"group", s.cfg().spec},
                 {"A", s.cfg().aut},
                 {"t", std::to_string(t)},
                 {"normal", normal},
                 {"normal_order", std::to_string(lat->subgroup(n).order)},
                 {"method", via},
                 {"quotient_generable", r.quotient_generable ? "yes" : "no"},
                 {"value", to_decimal(value)}});
  return kExitPass;
}

int cmd_phi_star(Session &s, std::string const &via) {
  auto lat = s.lattice();
  unsigned const t = s.cfg().t;
  ExactInt value;
  if (via == "classes")
    value = phi_star(s.poset(), t);
  else if (via == "brute")
    value = phi_star_bruteforce(*lat, t, s.cfg().tuple_budget);
  else
    throw InvalidArgument("--via must be classes or brute");
  s.emit_record({{"group", s.cfg().spec}, {"A", s.cfg().aut}, {"t", std::to_string(t)},
                 {"method", via}, {"value", to_decimal(value)}});
  return kExitPass;
}

int cmd_sigma_table(Session &s, bool nonzero) {
  s.emit(sigma_table(conjugacy_class_poset(s.lattice()), s.cfg().spec, nonzero));
  return kExitPass;
}

int cmd_prob(Session &s) {
  GenerationProbabilities p = gen_probabilities(*s.lattice(), s.cfg().t);
  s.emit_record({{"group", s.cfg().spec}, {"t", std::to_string(s.cfg().t)},
                 {"P", to_decimal(p.p)}, {"P_star", to_decimal(p.p_star)}});
  return kExitPass;
}

int cmd_check_mu_lambda(Session &s) {
  MuLambdaReport r = check_mu_lambda(s.lattice());
  if (parse_format(s.cfg().format) == Format::Json) {
    json j;
    j["group"] = s.cfg().spec;
    j["passes"] = r.passes();
    j["violations"] = r.violations.size();
    json rows = json::array();
    for (auto it = r.rows.rbegin(); it != r.rows.rend(); ++it)
      rows.push_back({{"subgroup", it->name},
                      {"order", std::to_string(it->order)},
                      {"normalizer", std::to_string(it->normalizer_order)},
                      {"kappa", std::to_string(it->kappa)},
                      {"mu", std::to_string(it->mu)},
                      {"lambda", std::to_string(it->lambda)},
                      {"index", std::to_string(it->index_factor)},
                      {"mu_star", std::to_string(it->mu_star)},
                      {"ok", it->ok()}});
    j["rows"] = std::move(rows);
    s.emit(j.dump(2) + "\n");
  } else {
    s.emit(mu_lambda_table(r, s.cfg().spec));
    std::cerr << (r.passes() ? "pass" : "FAIL") << ": " << r.violations.size()
              << " violating classes\n";
  }
  return r.passes() ? kExitPass : kExitPropertyFails;
}

int cmd_beta(Session &s, bool rank) {
  MuLambdaAnalysis an(s.lattice());
  FiniteGroup const &g = an.lattice().group();
  std::vector<ClassId> classes = an.c_star();
  Table t;
  t.group = s.cfg().spec;
  t.aut = "inn";
  t.columns = {"t"};
  for (ClassId c : classes)
    t.columns.push_back(subgroup_name(g, an.classes().representative(c)));
  for (unsigned k = 1; k <= s.cfg().t_max; ++k) {
    BetaVector v = an.beta_vector(k);
    std::vector<std::string> row{std::to_string(k)};
    for (ExactInt const &e : v.entries)
      row.push_back(to_decimal(e));
    t.rows.push_back(std::move(row));
  }
  if (parse_format(s.cfg().format) == Format::Json) {
    json j;
    j["group"] = s.cfg().spec;
    j["classes"] = std::vector<std::string>(t.columns.begin() + 1, t.columns.end());
    json vectors = json::array();
    for (auto const &row : t.rows)
      vectors.push_back(std::vector<std::string>(row.begin() + 1, row.end()));
    j["beta"] = std::move(vectors);
    if (rank)
      j["rank"] = std::to_string(an.beta_span_rank(s.cfg().t_max));
    s.emit(j.dump(2) + "\n");
  } else {
    s.emit(t);
    if (rank)
      s.emit("rank " + std::to_string(an.beta_span_rank(s.cfg().t_max)) + "\n");
  }
  return kExitPass;
}

int cmd_tau(Session &s) {
  MuLambdaAnalysis an(s.lattice());
  Table t;
  t.group = s.cfg().spec;
  t.aut = "inn";
  t.columns = {"order", "tau"};
  for (auto const &[n, v] : an.tau_spectrum())
    t.rows.push_back({std::to_string(n), to_decimal(v)});
  s.emit(t);
  return an.t_set().empty() ? kExitPass : kExitPropertyFails;
}

int cmd_strana(Session &s) {
  MuLambdaAnalysis an(s.lattice());
  StranaResult r = an.strana_check(s.cfg().t);
  s.emit_record({{"group", s.cfg().spec},
                 {"t", std::to_string(r.t)},
                 {"lhs", to_decimal(r.lhs)},
                 {"restricted", to_decimal(r.restricted)},
                 {"zero", r.zero() ? "yes" : "no"},
                 {"forms_agree", r.forms_agree ? "yes" : "no"}});
  if (!r.forms_agree)
    return kExitPropertyFails;
  return r.zero() ? kExitPass : kExitPropertyFails;
}

int cmd_verify(Session &s) {
  VerifyOptions opts;
  opts.t_max = s.cfg().t_max;
  VerifyReport r = verify_group(s.cfg().spec, s.lattice(), opts);
  if (parse_format(s.cfg().format) == Format::Json) {
    s.emit(r.to_json());
  } else {
    Table t;
    t.group = s.cfg().spec;
    t.columns = {"check", "result", "detail"};
    for (auto const &c : r.checks)
      t.rows.push_back({c.name, c.passed ? "pass" : "FAIL", c.detail});
    s.emit(t);
  }
  return r.passed() ? kExitPass : kExitPropertyFails;
}

int cmd_cache(RunConfig const &cfg, std::string const &action) {
  std::optional<std::filesystem::path> dir;
  if (!cfg.cache_dir.empty())
    dir = cfg.cache_dir;
  else
    dir = LatticeCache::dir_from_env();
  if (!dir)
    throw InvalidArgument("no cache directory: pass --cache-dir or set MOEBIUS_CACHE_DIR");
  LatticeCache cache(*dir);
  if (action == "build") {
    if (cfg.spec.empty())
      throw InvalidArgument("cache build needs a group spec");
    auto group = std::make_shared<FiniteGroup const>(build_from_spec(cfg.spec, cfg.order_cap));
    auto lat = cache.build(cfg.spec, group, {cfg.subgroup_budget});
    std::cout << cache.file_for(cfg.spec).string() << ": " << lat->size() << " subgroups\n";
    return kExitPass;
  }
  if (action == "info") {
    Table t;
    t.group = "";
    t.columns = {"spec", "order", "subgroups", "version", "file"};
    for (auto const &e : cache.info())
      t.rows.push_back({e.spec, std::to_string(e.order), std::to_string(e.subgroups), e.version,
                        e.file.filename().string()});
    std::cout << render(t, parse_format(cfg.format));
    return kExitPass;
  }
  if (action == "clear") {
    std::cout << "removed " << cache.clear() << " cache files\n";
    return kExitPass;
  }
  throw InvalidArgument("cache action must be build, info or clear");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact A-Möbius functions, Eulerian functions and the (mu, lambda)-property "
               "of finite permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format,-f", cfg.format, "markdown, csv or json")
      ->check(CLI::IsMember({"markdown", "md", "csv", "json"}));
  app.add_option("--output,-o", cfg.output, "write the result here instead of stdout");
  app.add_option("--cache-dir", cfg.cache_dir, "lattice cache directory (default: MOEBIUS_CACHE_DIR)");
  app.add_option("--profile", cfg.profile, "default or stretch");
  app.add_option("--order-cap", cfg.order_cap, "largest group order to enumerate");
  app.add_option("--subgroup-budget", cfg.subgroup_budget, "largest subgroup count");
  app.add_option("--tuple-budget", cfg.tuple_budget, "largest brute-force tuple scan");

  auto with_spec = [&](CLI::App *sub) {
    sub->add_option("spec", cfg.spec, "group spec, e.g. S:4 or perm:[(1,2);(1,2,3)]")->required();
  };
  auto with_aut = [&](CLI::App *sub) {
    sub->add_option("--aut,-A", cfg.aut, "1 | inn | inn:<selector> | aut | maps:<file>");
  };
  auto with_t = [&](CLI::App *sub) {
    sub->add_option("--t,-t", cfg.t, "tuple length")->check(CLI::PositiveNumber);
  };

  bool omega2 = false, nonzero = false, rank = false;
  std::string via, normal, cache_action;

  auto *table = app.add_subcommand("table", "A-class table: mu_A, omega_A, kappa, sigma");
  with_spec(table);
  with_aut(table);
  table->add_flag("--omega2", omega2, "add the omega_A(H, 2) column");
  table->add_flag("--nonzero", nonzero, "only classes with mu_A(H, G) != 0");

  auto *phi = app.add_subcommand("phi", "Eulerian function phi(G, t)");
  with_spec(phi);
  with_aut(phi);
  with_t(phi);
  phi->add_option("--via", via, "hall, classes or brute")->default_val("hall");

  auto *phi_rel = app.add_subcommand("phi-rel", "relative Eulerian function phi(G, N, t)");
  with_spec(phi_rel);
  with_aut(phi_rel);
  with_t(phi_rel);
  phi_rel->add_option("--normal,-N", normal, "subgroup selector")->required();
  phi_rel->add_option("--via", via, "gaschutz or classes")->default_val("gaschutz");

  auto *phi_star_cmd = app.add_subcommand("phi-star", "subgroup tuples generating G");
  with_spec(phi_star_cmd);
  with_aut(phi_star_cmd);
  with_t(phi_star_cmd);
  phi_star_cmd->add_option("--via", via, "classes or brute")->default_val("classes");

  auto *sigma_cmd = app.add_subcommand("sigma-table", "mu(H, G), kappa and sigma per class");
  with_spec(sigma_cmd);
  sigma_cmd->add_flag("--nonzero", nonzero, "only classes with mu(H, G) != 0");

  auto *prob = app.add_subcommand("prob", "generation probabilities P and P*");
  with_spec(prob);
  with_t(prob);

  auto *cml = app.add_subcommand("check-mu-lambda", "test the (mu, lambda)-property");
  with_spec(cml);

  auto *beta = app.add_subcommand("beta", "beta vectors over C*(G)");
  with_spec(beta);
  beta->add_option("--t-max", cfg.t_max, "largest t")->check(CLI::PositiveNumber);
  beta->add_flag("--rank", rank, "rank of the beta vectors over the rationals");

  auto *tau = app.add_subcommand("tau", "tau(n) over the violating classes");
  with_spec(tau);

  auto *strana = app.add_subcommand("strana", "evaluate the lambda-weighted alpha/omega sum");
  with_spec(strana);
  with_t(strana);

  auto *verify = app.add_subcommand("verify", "run every identity on one group");
  with_spec(verify);
  verify->add_option("--t-max", cfg.t_max, "largest t")->check(CLI::PositiveNumber);

  auto *cache = app.add_subcommand("cache", "build, inspect or clear the lattice cache");
  cache->add_option("action", cache_action, "build | info | clear")->required();
  cache->add_option("spec", cfg.spec, "group spec for build");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    apply_profile(cfg);
    if (cache->parsed())
      return cmd_cache(cfg, cache_action);
    Session s(cfg);
    if (table->parsed())
      return cmd_table(s, omega2, nonzero);
    if (phi->parsed())
      return cmd_phi(s, via);
    if (phi_rel->parsed())
      return cmd_phi_rel(s, normal, via);
    if (phi_star_cmd->parsed())
      return cmd_phi_star(s, via);
    if (sigma_cmd->parsed())
      return cmd_sigma_table(s, nonzero);
    if (prob->parsed())
      return cmd_prob(s);
    if (cml->parsed())
      return cmd_check_mu_lambda(s);
    if (beta->parsed())
      return cmd_beta(s, rank);
    if (tau->parsed())
      return cmd_tau(s);
    if (strana->parsed())
      return cmd_strana(s);
    if (verify->parsed())
      return cmd_verify(s);
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
