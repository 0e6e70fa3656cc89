#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weylalt/bas.hpp"
#include "weylalt/checks.hpp"
#include "weylalt/enumeration.hpp"
#include "weylalt/io.hpp"
#include "weylalt/typea.hpp"

namespace py = pybind11;
using namespace weylalt;

namespace {

RootSystem make_system(const std::string& family, int rank) {
  RootSystemSpec spec{parse_family(family), rank};
  spec.validate();
  return RootSystem(spec);
}

std::vector<std::string> strs(const std::vector<WeylElement>& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(e.str());
  return out;
}

std::vector<std::string> strs(const ElementSet& s) { return strs(std::vector<WeylElement>(s.begin(), s.end())); }

py::dict report_dict(const Report& r) {
  py::dict d;
  d["name"] = r.name;
  d["ok"] = r.ok();
  d["checked"] = r.checked;
  d["failures"] = r.failures;
  return d;
}

std::string big(const BigInt& n) { return n.str(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weyl alternation sets, basic allowable subwords and type A enumeration";

  py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);

  m.def(
      "alternation_set",
      [](const std::string& family, int rank, const std::string& lambda, const std::string& mu, bool naive) {
        RootSystem rs = make_system(family, rank);
        Weight l = parse_weight(rs, lambda), u = parse_weight(rs, mu);
        return strs((naive ? compute_naive(rs, l, u) : compute(rs, l, u)).elements);
      },
      py::arg("family"), py::arg("rank"), py::arg("lam") = "highest-root", py::arg("mu") = "zero",
      py::arg("naive") = false, "Members of the alternation set as words, sorted by (length, word).");

  m.def(
      "alternation_set_json",
      [](const std::string& family, int rank, const std::string& lambda, const std::string& mu) {
        RootSystem rs = make_system(family, rank);
        return dump(to_json(rs, compute(rs, parse_weight(rs, lambda), parse_weight(rs, mu))));
      },
      py::arg("family"), py::arg("rank"), py::arg("lam") = "highest-root", py::arg("mu") = "zero");

  m.def(
      "bas",
      [](const std::string& family, int rank, const std::string& lambda, const std::string& mu) {
        RootSystem rs = make_system(family, rank);
        return strs(compute_bas(rs, parse_weight(rs, lambda), parse_weight(rs, mu)).members);
      },
      py::arg("family"), py::arg("rank"), py::arg("lam") = "highest-root", py::arg("mu") = "zero");

  m.def(
      "independent_subsets",
      [](const std::string& family, int rank, const std::string& lambda, const std::string& mu) {
        RootSystem rs = make_system(family, rank);
        auto bas = compute_bas(rs, parse_weight(rs, lambda), parse_weight(rs, mu));
        std::vector<std::vector<std::string>> out;
        for (const auto& s : independent_subsets(rs, bas)) out.push_back(strs(s));
        return out;
      },
      py::arg("family"), py::arg("rank"), py::arg("lam") = "highest-root", py::arg("mu") = "zero");

  // Big integers go through their decimal form so Python gets an arbitrary-precision int.
  m.def(
      "multiplicity",
      [](const std::string& family, int rank, const std::string& lambda, const std::string& mu) {
        RootSystem rs = make_system(family, rank);
        return py::int_(py::str(big(multiplicity(rs, parse_weight(rs, lambda), parse_weight(rs, mu)))));
      },
      py::arg("family"), py::arg("rank"), py::arg("lam") = "highest-root", py::arg("mu") = "zero");

  m.def(
      "q_multiplicity",
      [](const std::string& family, int rank, const std::string& lambda, const std::string& mu) {
        RootSystem rs = make_system(family, rank);
        return q_multiplicity(rs, parse_weight(rs, lambda), parse_weight(rs, mu)).str();
      },
      py::arg("family"), py::arg("rank"), py::arg("lam") = "highest-root", py::arg("mu") = "zero");

  m.def(
      "kostant_partition",
      [](const std::string& family, int rank, const std::string& xi) {
        RootSystem rs = make_system(family, rank);
        return py::int_(py::str(big(kostant_partition(rs, parse_weight(rs, xi)))));
      },
      py::arg("family"), py::arg("rank"), py::arg("xi"));

  m.def(
      "catalog_bas",
      [](int r, int i, int j) {
        std::vector<std::tuple<std::string, int, std::vector<int>>> out;
        for (const auto& e : catalog_bas(r, i, j)) out.emplace_back(std::string(1, e.shape), e.k, e.word);
        return out;
      },
      py::arg("r"), py::arg("i"), py::arg("j"), "Rows (shape, k, word).");

  m.def("x_sequences", &x_sequences, py::arg("r"));
  m.def(
      "psi",
      [](int r, const XSequence& x) { return psi(make_system("A", r), x).str(); }, py::arg("r"), py::arg("x"));
  m.def("fibonacci", &fibonacci, py::arg("n"));
  m.def("lucas", &lucas, py::arg("n"));
  m.def("p_value", &p_value, py::arg("r"), py::arg("i"));
  m.def("h_value", &h_value, py::arg("r"), py::arg("i"));

  m.def(
      "count_sweep",
      [](int max_r, int jobs) {
        std::vector<py::dict> rows;
        for (const auto& row : count_sweep(max_r, jobs)) {
          py::dict d;
          d["r"] = row.r;
          d["i"] = row.i;
          d["j"] = row.j;
          d["count"] = row.count;
          d["formula_value"] = row.formula_value;
          d["match"] = row.match;
          rows.push_back(d);
        }
        return rows;
      },
      py::arg("max_r"), py::arg("jobs") = 1);

  m.def(
      "verify",
      [](const std::string& suite, int max_rank) {
        TypeACounts counts;
        if (suite == "catalog") return report_dict(verify_catalogs(max_rank));
        if (suite == "recurrences") return report_dict(verify_recurrences(max_rank, counts));
        if (suite == "genfunc") return report_dict(verify_generating_functions(max_rank, counts));
        if (suite == "conjecture") return report_dict(verify_conjecture(max_rank));
        if (suite == "appendix") return report_dict(verify_appendix(4, max_rank));
        if (suite == "xbij") return report_dict(verify_x_bijections(max_rank));
        if (suite == "ideal") return report_dict(verify_ideal_cases(property_cases()));
        if (suite == "bijection") return report_dict(verify_bijection_cases(property_cases()));
        throw std::invalid_argument("unknown suite: " + suite);
      },
      py::arg("suite"), py::arg("max_rank") = 6);
}
