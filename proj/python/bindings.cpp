#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schurlab/coloring.hpp"
#include "schurlab/counting.hpp"
#include "schurlab/error.hpp"
#include "schurlab/search.hpp"
#include "schurlab/theory.hpp"

namespace py = pybind11;
using namespace schurlab;

namespace {

py::dict counts_dict(const ClassCounts& k) {
  py::dict d;
  d["mono"] = k.mono;
  d["nonmono"] = k.nonmono;
  d["rainbow"] = k.rainbow;
  d["total"] = k.total();
  return d;
}

py::dict report_dict(const ExtremumReport& r) {
  py::dict d;
  d["mode"] = r.mode;
  d["best_value"] = r.best_value;
  py::list w;
  for (const Coloring& c : r.witnesses) w.append(format_runlength(c));
  d["witnesses"] = w;
  d["optimum_count"] = r.optimum_count;
  d["explored"] = r.explored;
  d["heuristic"] = r.heuristic;
  d["symmetry_reduced"] = r.symmetry_reduced;
  d["boundaries"] = r.boundaries;
  d["wall_seconds"] = r.wall_seconds;
  return d;
}

Coloring coloring_arg(const std::string& runs, int r) { return parse_runlength(runs, r); }

SearchOptions options(std::uint64_t budget, int threads) {
  SearchOptions o;
  o.budget = budget;
  o.threads = threads;
  return o;
}

}  // namespace

PYBIND11_MODULE(_schurlab, m) {
  m.doc() = "Exact solution-class counts and extremal-coloring search over [1, n]";

  py::register_exception<Error>(m, "SchurlabError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def("total_count", [](const std::string& eq, int n) { return total_count(Equation::parse(eq), n); },
        py::arg("eq"), py::arg("n"));

  m.def(
      "count",
      [](const std::string& eq, const std::string& coloring, int r) {
        return counts_dict(count_classes(coloring_arg(coloring, r), Equation::parse(eq)));
      },
      py::arg("eq"), py::arg("coloring"), py::arg("r") = 0, "Class counts of a run-length coloring");

  m.def(
      "mono_delta",
      [](const std::string& eq, const std::string& coloring, int position, char color, int r) {
        return mono_delta(coloring_arg(coloring, r), Equation::parse(eq), position, parse_color_letter(color));
      },
      py::arg("eq"), py::arg("coloring"), py::arg("position"), py::arg("color"), py::arg("r") = 0);

  m.def(
      "exhaustive",
      [](const std::string& eq, int n, int r, const std::string& objective, std::optional<std::vector<int>> constraint,
         std::uint64_t budget, int threads) {
        std::optional<ColorCounts> k;
        if (constraint) {
          if (constraint->size() > kMaxColors) throw Error("constraint has more than three counts");
          ColorCounts c{0, 0, 0};
          std::copy(constraint->begin(), constraint->end(), c.begin());
          k = c;
        }
        const Objective o = Objective::parse(Equation::parse(eq), objective);
        py::gil_scoped_release release;
        const ExtremumReport rep = exhaustive(n, r, o, k, options(budget, threads));
        py::gil_scoped_acquire acquire;
        return report_dict(rep);
      },
      py::arg("eq"), py::arg("n"), py::arg("r") = 2, py::arg("objective") = "min-mono",
      py::arg("constraint") = py::none(), py::arg("budget") = std::uint64_t{1} << 30, py::arg("threads") = 1);

  m.def(
      "local_search",
      [](const std::string& eq, int n, int r, const std::string& objective, int restarts, std::uint64_t seed) {
        return report_dict(local_search(n, r, Objective::parse(Equation::parse(eq), objective), restarts, seed));
      },
      py::arg("eq"), py::arg("n"), py::arg("r") = 2, py::arg("objective") = "min-mono", py::arg("restarts") = 8,
      py::arg("seed") = 1);

  m.def(
      "block_sweep",
      [](const std::string& eq, int n, const std::string& pattern, int granularity, const std::string& objective) {
        std::vector<Color> p;
        for (char ch : pattern) p.push_back(parse_color_letter(ch));
        return report_dict(block_sweep(n, Objective::parse(Equation::parse(eq), objective), p, granularity));
      },
      py::arg("eq"), py::arg("n"), py::arg("pattern"), py::arg("granularity") = 1, py::arg("objective") = "min-mono");

  m.def(
      "predicted_min",
      [](const std::string& eq, int n) -> std::optional<double> {
        const Prediction p = predicted_min(Equation::parse(eq), n);
        if (!p.leading_value) return std::nullopt;
        return p.leading_value->to_double();
      },
      py::arg("eq"), py::arg("n"));

  m.def(
      "canonical_coloring",
      [](const std::string& eq, int n, const std::string& objective, std::optional<int> mu_b) {
        return format_runlength(canonical_coloring(Objective::parse(Equation::parse(eq), objective), n, mu_b));
      },
      py::arg("eq"), py::arg("n"), py::arg("objective") = "min-mono", py::arg("mu_b") = py::none());

  m.def(
      "verify",
      [](const std::string& eq, const std::vector<int>& n_list, const std::string& objective) {
        const VerifyReport rep = verify(Objective::parse(Equation::parse(eq), objective), n_list);
        py::dict d;
        d["status"] = to_string(rep.status);
        d["alpha_fit"] = rep.fit.alpha;
        d["beta_fit"] = rep.fit.beta;
        d["target"] = rep.target ? py::cast(rep.target->to_double()) : py::none();
        d["csv"] = to_csv(rep);
        return d;
      },
      py::arg("eq"), py::arg("n_list"), py::arg("objective") = "min-mono");
}
