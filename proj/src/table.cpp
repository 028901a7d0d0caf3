#include "amoebius/table.hpp"

#include <sstream>

#include <json.hpp>

#include "amoebius/errors.hpp"
#include "amoebius/eulerian.hpp"

namespace amoebius {

Format parse_format(std::string const &name) {
  if (name == "markdown" || name == "md")
    return Format::Markdown;
  if (name == "csv")
    return Format::Csv;
  if (name == "json")
    return Format::Json;
  throw InvalidArgument("unknown output format '" + name + "'");
}

namespace {

std::string csv_cell(std::string const &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(std::string const &s) {
  std::string out;
  for (char c : s) {
    if (c == '|')
      out += '\\';
    out += c;
  }
  return out;
}

std::string mu_column_name(std::string const &aut) {
  if (aut == "inn" || aut == "A=inn")
    return "lambda";
  if (aut == "1" || aut == "A=1")
    return "mu";
  return "mu_A";
}

} // namespace

std::string render(Table const &t, Format f) {
  std::ostringstream out;
  switch (f) {
  case Format::Markdown: {
    out << "<!-- group " << t.group;
    if (!t.aut.empty())
      out << ", A = " << t.aut;
    out << " -->\n|";
    for (auto const &c : t.columns)
      out << ' ' << md_cell(c) << " |";
    out << "\n|";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      out << (i == 0 ? " :-- |" : " --: |");
    out << '\n';
    for (auto const &row : t.rows) {
      out << '|';
      for (auto const &cell : row)
        out << ' ' << md_cell(cell) << " |";
      out << '\n';
    }
    break;
  }
  case Format::Csv: {
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      out << (i ? "," : "") << csv_cell(t.columns[i]);
    out << '\n';
    for (auto const &row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << (i ? "," : "") << csv_cell(row[i]);
      out << '\n';
    }
    break;
  }
  case Format::Json: {
    nlohmann::ordered_json j;
    j["group"] = t.group;
    j["A"] = t.aut;
    j["columns"] = t.columns;
    j["rows"] = t.rows;
    out << j.dump(2) << '\n';
    break;
  }
  }
  return out.str();
}

Table table_from_json(std::string const &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    Table t;
    t.group = j.at("group").get<std::string>();
    t.aut = j.at("A").get<std::string>();
    t.columns = j.at("columns").get<std::vector<std::string>>();
    t.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    return t;
  } catch (nlohmann::json::exception const &e) {
    throw Error(std::string("malformed table JSON: ") + e.what());
  }
}

Table class_table(ClassPoset const &poset, std::string const &group_spec,
                  std::string const &aut_spec, ClassTableOptions const &options) {
  FiniteGroup const &g = poset.group();
  SubgroupLattice const &lat = poset.lattice();
  TupleCounts counts(poset.lattice_ptr());
  Table t;
  t.group = group_spec;
  t.aut = aut_spec;
  t.columns = {"subgroup", "order", mu_column_name(aut_spec), "omega_1"};
  if (options.omega2)
    t.columns.push_back("omega_2");
  t.columns.insert(t.columns.end(), {"kappa", "sigma"});
  for (ClassId c = poset.top() + 1; c-- > 0;) {
    MobiusValue mu = poset.mu_to_top(c);
    if (options.nonzero_only && mu == 0)
      continue;
    Subgroup const &h = poset.representative(c);
    std::vector<std::string> row{subgroup_name(g, h), std::to_string(h.order),
                                 std::to_string(mu), to_decimal(omega_A(poset, c, 1, counts))};
    if (options.omega2)
      row.push_back(to_decimal(omega_A(poset, c, 2, counts)));
    row.push_back(std::to_string(kappa(g, h)));
    row.push_back(std::to_string(lat.sigma(poset.cls(c).representative)));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table sigma_table(ClassPoset const &conjugacy, std::string const &group_spec,
                  bool nonzero_only) {
  SubgroupLattice const &lat = conjugacy.lattice();
  Table t;
  t.group = group_spec;
  t.aut = "inn";
  t.columns = {"subgroup", "order", "mu", "kappa", "sigma"};
  for (ClassId c = conjugacy.top() + 1; c-- > 0;) {
    SubgroupId rep = conjugacy.cls(c).representative;
    MobiusValue mu = lat.mu(rep);
    if (nonzero_only && mu == 0)
      continue;
    t.rows.push_back({subgroup_name(lat.group(), lat.subgroup(rep)),
                      std::to_string(lat.subgroup(rep).order), std::to_string(mu),
                      std::to_string(conjugacy.cls(c).members.size()),
                      std::to_string(lat.sigma(rep))});
  }
  return t;
}

Table mu_lambda_table(MuLambdaReport const &report, std::string const &group_spec) {
  Table t;
  t.group = group_spec;
  t.aut = "inn";
  t.columns = {"subgroup", "order", "normalizer", "mu", "lambda", "index", "mu_star", "ok"};
  for (auto it = report.rows.rbegin(); it != report.rows.rend(); ++it)
    t.rows.push_back({it->name, std::to_string(it->order), std::to_string(it->normalizer_order),
                      std::to_string(it->mu), std::to_string(it->lambda),
                      std::to_string(it->index_factor), std::to_string(it->mu_star),
                      it->ok() ? "yes" : "no"});
  return t;
}

} // namespace amoebius
