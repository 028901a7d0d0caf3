#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "amoebius/errors.hpp"
#include "amoebius/eulerian.hpp"
#include "amoebius/mulambda.hpp"
#include "amoebius/selectors.hpp"
#include "amoebius/table.hpp"
#include "amoebius/verify.hpp"

namespace py = pybind11;
using namespace amoebius;

namespace {

py::int_ to_py(ExactInt const &v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object to_py(ExactRational const &v) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(boost::multiprecision::numerator(v)),
                  to_py(boost::multiprecision::denominator(v)));
}

py::object parse_json(std::string const &text) {
  return py::module_::import("json").attr("loads")(text);
}

/// One group together with its subgroup lattice.
class PyGroup {
public:
  PyGroup(std::string spec, std::size_t order_cap, std::size_t subgroup_budget)
      : spec_(std::move(spec)) {
    auto g = std::make_shared<FiniteGroup const>(build_from_spec(spec_, order_cap));
    lattice_ = std::make_shared<SubgroupLattice const>(
        enumerate_subgroups(g, {.subgroup_budget = subgroup_budget}));
  }

  std::string const &spec() const { return spec_; }
  std::size_t order() const { return lattice_->group().order(); }
  std::size_t subgroup_count() const { return lattice_->size(); }

  std::vector<std::size_t> subgroup_orders() const {
    std::vector<std::size_t> out;
    for (Subgroup const &h : lattice_->subgroups())
      out.push_back(h.order);
    return out;
  }

  std::vector<MobiusValue> mu() const {
    std::vector<MobiusValue> out;
    for (SubgroupId h = 0; h < lattice_->size(); ++h)
      out.push_back(lattice_->mu(h));
    return out;
  }

  py::int_ phi(unsigned t, std::string const &method, std::string const &aut) const {
    if (method == "hall")
      return to_py(phi_hall(*lattice_, t));
    if (method == "brute")
      return to_py(phi_bruteforce(lattice_->group(), t));
    if (method == "classes")
      return to_py(phi_via_classes(poset(aut), t));
    throw InvalidArgument("method must be hall, classes or brute");
  }

  py::int_ phi_star_count(unsigned t, std::string const &aut) const {
    return to_py(phi_star(poset(aut), t));
  }

  py::tuple probabilities(unsigned t) const {
    GenerationProbabilities p = gen_probabilities(*lattice_, t);
    return py::make_tuple(to_py(p.p), to_py(p.p_star));
  }

  py::int_ mu_sigma() const { return to_py(mu_sigma_sum(*lattice_)); }

  std::string table(std::string const &aut, std::string const &format, bool omega2,
                    bool nonzero) const {
    Table t = class_table(poset(aut), spec_, aut, {.omega2 = omega2, .nonzero_only = nonzero});
    return render(t, parse_format(format));
  }

  py::dict check_mu_lambda() const {
    MuLambdaReport r = amoebius::check_mu_lambda(lattice_);
    py::list violations;
    for (ClassId c : r.violations) {
      MuLambdaRow const &row = r.rows[c];
      violations.append(py::dict(py::arg("subgroup") = row.name, py::arg("order") = row.order,
                                 py::arg("normalizer") = row.normalizer_order,
                                 py::arg("mu") = row.mu, py::arg("mu_star") = row.mu_star));
    }
    return py::dict(py::arg("passes") = r.passes(), py::arg("classes") = r.rows.size(),
                    py::arg("violations") = violations);
  }

  py::list beta_vector(unsigned t) const {
    py::list out;
    for (ExactInt const &b : analysis().beta_vector(t).entries)
      out.append(to_py(b));
    return out;
  }

  std::size_t beta_rank(unsigned t_max) const { return analysis().beta_span_rank(t_max); }

  py::dict strana(unsigned t) const {
    StranaResult s = analysis().strana_check(t);
    return py::dict(py::arg("t") = t, py::arg("lhs") = to_py(s.lhs),
                    py::arg("restricted") = to_py(s.restricted), py::arg("zero") = s.zero(),
                    py::arg("forms_agree") = s.forms_agree);
  }

  py::object verify(unsigned t_max) const {
    return parse_json(verify_group(spec_, lattice_, {.t_max = t_max}).to_json());
  }

private:
  ClassPoset poset(std::string const &aut) const {
    return ClassPoset(lattice_, parse_aut_spec(lattice_, aut));
  }
  MuLambdaAnalysis &analysis() const {
    if (!analysis_)
      analysis_ = std::make_unique<MuLambdaAnalysis>(lattice_);
    return *analysis_;
  }

  std::string spec_;
  std::shared_ptr<SubgroupLattice const> lattice_;
  mutable std::unique_ptr<MuLambdaAnalysis> analysis_;
};

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Subgroup lattices and Möbius-function counts of finite permutation groups";

  auto base = py::register_exception<Error>(m, "AmoebiusError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

  py::class_<PyGroup>(m, "Group")
      .def(py::init<std::string, std::size_t, std::size_t>(), py::arg("spec"),
           py::arg("order_cap") = kDefaultOrderCap,
           py::arg("subgroup_budget") = kDefaultSubgroupBudget)
      .def_property_readonly("spec", &PyGroup::spec)
      .def_property_readonly("order", &PyGroup::order)
      .def_property_readonly("subgroup_count", &PyGroup::subgroup_count)
      .def("subgroup_orders", &PyGroup::subgroup_orders)
      .def("mu", &PyGroup::mu, "mu(H, G) for every subgroup, in lattice order")
      .def("phi", &PyGroup::phi, py::arg("t"), py::arg("method") = "hall",
           py::arg("aut") = "inn")
      .def("phi_star", &PyGroup::phi_star_count, py::arg("t"), py::arg("aut") = "inn")
      .def("probabilities", &PyGroup::probabilities, py::arg("t"))
      .def("mu_sigma_sum", &PyGroup::mu_sigma)
      .def("table", &PyGroup::table, py::arg("aut") = "inn", py::arg("format") = "markdown",
           py::arg("omega2") = false, py::arg("nonzero") = false)
      .def("check_mu_lambda", &PyGroup::check_mu_lambda)
      .def("beta_vector", &PyGroup::beta_vector, py::arg("t"))
      .def("beta_rank", &PyGroup::beta_rank, py::arg("t_max"))
      .def("strana", &PyGroup::strana, py::arg("t"))
      .def("verify", &PyGroup::verify, py::arg("t_max") = 2)
      .def("__repr__", [](PyGroup const &g) {
        return "Group('" + g.spec() + "', order=" + std::to_string(g.order()) + ")";
      });
}
