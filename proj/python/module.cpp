#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ivqrof/core.hpp"
#include "ivqrof/io.hpp"
#include "ivqrof/magdm.hpp"
#include "ivqrof/operators.hpp"
#include "ivqrof/sweep.hpp"
#include "ivqrof/weights.hpp"

namespace py = pybind11;
using namespace ivqrof;

namespace {

using Quad = std::array<double, 4>;

Ivqrofn to_value(const Quad& a) { return {a[0], a[1], a[2], a[3]}; }
Quad to_quad(const Ivqrofn& a) { return a.components(); }

std::vector<Ivqrofn> to_values(const std::vector<Quad>& v) {
  std::vector<Ivqrofn> out;
  for (const auto& a : v) out.push_back(to_value(a));
  return out;
}

Matrix<Ivqrofn> to_matrix(const std::vector<std::vector<Quad>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix<Ivqrofn> m(rows.size(), cols, Ivqrofn::negative_ideal());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = to_value(rows[i][j]);
  }
  return m;
}

int order_to_int(std::weak_ordering o) {
  if (o == std::weak_ordering::greater) return 1;
  if (o == std::weak_ordering::less) return -1;
  return 0;
}

PipelineConfig make_config(std::optional<int> q, const std::string& family,
                           const std::string& weights, std::optional<int> weight_q,
                           const std::optional<std::string>& weight_family) {
  PipelineConfig cfg;
  cfg.q = q;
  cfg.family = parse_family(family);
  cfg.weights = parse_weight_method(weights);
  cfg.weight_q = weight_q;
  if (weight_family) cfg.weight_family = parse_family(*weight_family);
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Interval-valued q-rung orthopair fuzzy numbers, Weber aggregation and group ranking";

  static py::exception<Error> exc(m, "IvqrofError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      exc(e.describe().c_str());
    }
  });

  // Values cross the boundary as (mu_lo, mu_hi, nu_lo, nu_hi) tuples.
  m.def("check", [](const Quad& a) { return to_quad(to_value(a)); },
        "Validate bound ordering and range; returns the value unchanged");
  m.def("validate", [](const Quad& a, double q) { return validate(to_value(a), Rung(q)); });
  m.def("hesitation", [](const Quad& a, double q) {
    const Interval h = hesitation(to_value(a), Rung(q));
    return std::make_pair(h.lo, h.hi);
  });
  m.def("score", [](const Quad& a, double q) { return score(to_value(a), Rung(q)); });
  m.def("normalized_score",
        [](const Quad& a, double q) { return normalized_score(to_value(a), Rung(q)); });
  m.def("accuracy", [](const Quad& a, double q) { return accuracy(to_value(a), Rung(q)); });
  m.def("compare", [](const Quad& a, const Quad& b, double q) {
    return order_to_int(compare(to_value(a), to_value(b), Rung(q)));
  }, "1, 0 or -1 as a is greater, equal or less than b");
  m.def("distance", [](const Quad& a, const Quad& b, double q) {
    return distance(to_value(a), to_value(b), Rung(q));
  });
  m.def("from_linguistic", [](const std::string& code) {
    const auto t = parse_linguistic_term(code);
    if (!t) throw Error(ErrorKind::UnknownLinguisticTerm, "unknown term '" + code + "'");
    return to_quad(from_linguistic(*t));
  });
  m.def("min_valid_q", [](const std::vector<Quad>& values, int q_max) {
    return static_cast<int>(min_valid_q(to_values(values), q_max).value());
  }, py::arg("values"), py::arg("q_max") = 20);

  m.def("weber_add", [](const Quad& a, const Quad& b, double lambda, double q) {
    return to_quad(weber_add(to_value(a), to_value(b), lambda, Rung(q)));
  }, py::arg("a"), py::arg("b"), py::arg("lam") = 2.0, py::arg("q") = 2.0);
  m.def("weber_mul", [](const Quad& a, const Quad& b, double lambda, double q) {
    return to_quad(weber_mul(to_value(a), to_value(b), lambda, Rung(q)));
  }, py::arg("a"), py::arg("b"), py::arg("lam") = 2.0, py::arg("q") = 2.0);
  m.def("weber_scalar", [](double k, const Quad& a, double lambda, double q) {
    return to_quad(weber_scalar(k, to_value(a), lambda, Rung(q)));
  }, py::arg("k"), py::arg("a"), py::arg("lam") = 2.0, py::arg("q") = 2.0);
  m.def("weber_pow", [](const Quad& a, double k, double lambda, double q) {
    return to_quad(weber_pow(to_value(a), k, lambda, Rung(q)));
  }, py::arg("a"), py::arg("k"), py::arg("lam") = 2.0, py::arg("q") = 2.0);
  m.def("owa_aggregate", [](const std::vector<Quad>& values, const std::vector<double>& w,
                            const std::string& family, double q) {
    return to_quad(owa_aggregate(to_values(values), WeightVector(w), parse_family(family), Rung(q)));
  }, py::arg("values"), py::arg("weights"), py::arg("family") = "weber", py::arg("q") = 2.0);

  m.def("swing_weights", [](const std::vector<std::vector<Quad>>& R, double q, double d_bound,
                            double alpha, bool invert) {
    return swing_weights(to_matrix(R), Rung(q), SwingConfig{d_bound, alpha, invert}).values();
  }, py::arg("R"), py::arg("q") = 2.0, py::arg("d_bound") = SwingConfig{}.d_bound,
        py::arg("alpha") = SwingConfig{}.alpha, py::arg("invert_selection") = false);
  m.def("projection_weights", [](const std::vector<std::vector<Quad>>& R, double q) {
    return projection_weights(to_matrix(R), Rung(q)).values();
  }, py::arg("R"), py::arg("q") = 2.0);
  m.def("mabac_weights", [](const std::vector<std::vector<Quad>>& R, double q, bool literal) {
    MabacConfig cfg;
    cfg.literal = literal;
    return mabac_weights(to_matrix(R), Rung(q), cfg).values();
  }, py::arg("R"), py::arg("q") = 2.0, py::arg("literal") = false);
  m.def("hhi", [](const std::vector<double>& s) { return hhi(s); });
  m.def("score_spread", [](const std::vector<double>& s) { return score_spread(s); });

  m.def("evaluate_json", [](const std::string& problem_json, std::optional<int> q,
                            const std::string& family, const std::string& weights,
                            std::optional<int> weight_q, std::optional<std::string> weight_family) {
    const DecisionProblem p = parse_problem(problem_json);
    return report_to_json(evaluate(p, make_config(q, family, weights, weight_q, weight_family)));
  }, py::arg("problem_json"), py::arg("q") = 2, py::arg("family") = "weber",
        py::arg("weights") = "swing", py::arg("weight_q") = py::none(),
        py::arg("weight_family") = py::none(),
        "Run the pipeline on a problem document; returns the report as JSON text");
}
