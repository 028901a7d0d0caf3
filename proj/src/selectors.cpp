#include "amoebius/selectors.hpp"

#include <fstream>
#include <sstream>

#include "amoebius/errors.hpp"

namespace amoebius {

namespace {

std::string trim(std::string const &s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos)
    return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

ElementIndex element_of(FiniteGroup const &g, std::string const &word) {
  Permutation p = Permutation::from_cycles(trim(word), g.degree());
  ElementIndex x = g.find(p);
  if (x == g.order())
    throw InvalidArgument("permutation " + trim(word) + " is not in the group");
  return x;
}

std::vector<std::string> split(std::string const &s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    out.push_back(cur);
  return out;
}

} // namespace

SubgroupId select_subgroup(SubgroupLattice const &lattice, std::string const &selector) {
  FiniteGroup const &g = lattice.group();
  std::string const s = trim(selector);
  if (s == "derived")
    return lattice.id_of(commutator_subgroup(g));
  if (s == "center")
    return lattice.id_of(center(g));
  if (s == "frattini")
    return frattini(lattice);
  if (s == "whole")
    return lattice.top_id();
  if (s == "trivial")
    return lattice.trivial_id();
  if (s.size() > 1 && s[0] == '#') {
    std::size_t used = 0;
    unsigned long id = 0;
    try {
      id = std::stoul(s.substr(1), &used);
    } catch (std::exception const &) {
      throw ParseError("expected a subgroup id after '#'", 1);
    }
    if (used + 1 != s.size())
      throw ParseError("trailing characters after subgroup id", used + 1);
    if (id >= lattice.size())
      throw InvalidArgument("subgroup id " + std::to_string(id) + " out of range");
    return static_cast<SubgroupId>(id);
  }
  if (s.rfind("perm:[", 0) == 0 && s.back() == ']') {
    std::vector<ElementIndex> gens;
    for (std::string const &w : split(s.substr(6, s.size() - 7), ';'))
      if (!trim(w).empty())
        gens.push_back(element_of(g, w));
    return lattice.id_of(g.generate(gens));
  }
  throw ParseError("unknown subgroup selector '" + s + "'", 0);
}

AutomorphismGroup automorphisms_from_text(std::shared_ptr<FiniteGroup const> const &group,
                                          std::string const &text) {
  FiniteGroup const &g = *group;
  std::vector<Automorphism> gens;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (std::size_t hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    if (trim(line).empty())
      continue;
    std::vector<ElementIndex> src, dst;
    for (std::string const &pair : split(line, ';')) {
      if (trim(pair).empty())
        continue;
      std::size_t arrow = pair.find("->");
      if (arrow == std::string::npos)
        throw ParseError("expected 'src -> dst' in automorphism line", 0);
      src.push_back(element_of(g, pair.substr(0, arrow)));
      dst.push_back(element_of(g, pair.substr(arrow + 2)));
    }
    gens.push_back(automorphism_from_images(g, src, dst));
  }
  return generated_automorphisms(group, std::move(gens));
}

AutomorphismGroup parse_aut_spec(std::shared_ptr<SubgroupLattice const> const &lattice,
                                 std::string const &spec) {
  std::string s = trim(spec);
  if (s.rfind("A=", 0) == 0)
    s = s.substr(2);
  auto const &g = lattice->group_ptr();
  if (s == "1")
    return trivial_automorphisms(g);
  if (s == "inn")
    return inner_automorphisms(g, g->whole());
  if (s.rfind("inn:", 0) == 0)
    return inner_automorphisms(g, lattice->subgroup(select_subgroup(*lattice, s.substr(4))));
  if (s == "aut")
    return full_automorphism_group(g);
  if (s.rfind("maps:", 0) == 0) {
    std::ifstream file(s.substr(5));
    if (!file)
      throw InvalidArgument("cannot read automorphism file " + s.substr(5));
    std::stringstream body;
    body << file.rdbuf();
    return automorphisms_from_text(g, body.str());
  }
  throw ParseError("unknown automorphism spec '" + s + "'", 0);
}

} // namespace amoebius
