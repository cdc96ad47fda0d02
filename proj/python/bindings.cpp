#include "quartic_pd/binary.hpp"
#include "quartic_pd/cyclic.hpp"
#include "quartic_pd/inequalities.hpp"
#include "quartic_pd/input.hpp"
#include "quartic_pd/oracle.hpp"
#include "quartic_pd/pipeline.hpp"
#include "quartic_pd/tensor.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

// Rational <-> fractions.Fraction. Accepts Fraction, int and "p/q" or decimal
// strings; floats are refused so that no binary rounding slips in.
namespace pybind11::detail {
template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src || PyFloat_Check(src.ptr()) || PyBool_Check(src.ptr())) return false;
    const py::module_ fractions = py::module_::import("fractions");
    const bool accepted = PyLong_Check(src.ptr()) || PyUnicode_Check(src.ptr()) ||
                          py::isinstance(src, fractions.attr("Fraction"));
    if (!accepted) return false;
    try {
      value = qpd::parse_rational(py::str(src).cast<std::string>());
    } catch (const std::invalid_argument&) {
      return false;
    }
    return true;
  }

  static handle cast(const mpq_class& v, return_value_policy, handle) {
    const py::module_ fractions = py::module_::import("fractions");
    return fractions.attr("Fraction")(qpd::to_string(v)).release();
  }
};
}  // namespace pybind11::detail

namespace {

qpd::Index4 to_index(const std::vector<int>& one_based, int dim) {
  if (one_based.size() != 4) throw py::value_error("index needs four entries");
  qpd::Index4 idx{};
  for (std::size_t p = 0; p < 4; ++p) {
    if (one_based[p] < 1 || one_based[p] > dim) throw py::value_error("index out of range (1-based)");
    idx[p] = static_cast<std::uint8_t>(one_based[p] - 1);
  }
  return idx;
}

std::vector<int> from_index(const qpd::Index4& idx) {
  return {idx[0] + 1, idx[1] + 1, idx[2] + 1, idx[3] + 1};
}

qpd::SymmetricTensor4 make_tensor(int dim, const std::map<std::vector<int>, mpq_class>& entries) {
  std::vector<std::pair<qpd::Index4, qpd::Rational>> values;
  for (const auto& [index, value] : entries) values.emplace_back(to_index(index, dim), value);
  return qpd::SymmetricTensor4(dim, values);
}

py::object json_loads(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

}  // namespace

PYBIND11_MODULE(quartic_pd, m) {
  m.doc() = "Positive definiteness of 4th-order symmetric tensors";

  py::enum_<qpd::Definiteness>(m, "Definiteness")
      .value("PositiveDefinite", qpd::Definiteness::PositiveDefinite)
      .value("PositiveSemidefiniteNotDefinite", qpd::Definiteness::PositiveSemidefiniteNotDefinite)
      .value("PositiveSemidefinite", qpd::Definiteness::PositiveSemidefinite)
      .value("Indefinite", qpd::Definiteness::Indefinite)
      .value("Undetermined", qpd::Definiteness::Undetermined);

  py::class_<qpd::Verdict>(m, "Verdict")
      .def_readonly("kind", &qpd::Verdict::kind)
      .def_readonly("rule", &qpd::Verdict::rule)
      .def_readonly("witness", &qpd::Verdict::witness)
      .def_readonly("margin", &qpd::Verdict::margin)
      .def("is_psd", &qpd::Verdict::is_psd)
      .def("__repr__", [](const qpd::Verdict& v) {
        return "<Verdict " + std::string(qpd::to_string(v.kind)) + " [" + v.rule + "]>";
      });

  py::class_<qpd::SymmetricTensor4>(m, "SymmetricTensor4")
      .def(py::init<int>(), py::arg("dim"))
      .def(py::init(&make_tensor), py::arg("dim"), py::arg("entries"),
           "entries maps 1-based index tuples to values; each canonical slot at most once")
      .def_property_readonly("dim", &qpd::SymmetricTensor4::dim)
      .def("__getitem__", [](const qpd::SymmetricTensor4& t, const std::vector<int>& index) {
        return t.at(to_index(index, t.dim()));
      })
      .def("entries", [](const qpd::SymmetricTensor4& t) {
        std::map<std::vector<int>, qpd::Rational> out;
        for (const auto& [idx, v] : t.entries()) out.emplace(from_index(idx), v);
        return out;
      })
      .def("__eq__", [](const qpd::SymmetricTensor4& a, const qpd::SymmetricTensor4& b) { return a == b; })
      .def("digest", [](const qpd::SymmetricTensor4& t) { return qpd::digest(t); });

  m.def("evaluate_form",
        [](const qpd::SymmetricTensor4& t, const qpd::RationalVector& x) { return qpd::evaluate_form(t, x); },
        py::arg("tensor"), py::arg("x"), "Exact T x^4");
  m.def("evaluate_gradient",
        [](const qpd::SymmetricTensor4& t, const qpd::RationalVector& x) { return qpd::evaluate_gradient(t, x); },
        py::arg("tensor"), py::arg("x"), "Exact T x^3");

  py::class_<qpd::BinaryQuartic>(m, "BinaryQuartic")
      .def(py::init([](mpq_class a0, mpq_class a1, mpq_class a2, mpq_class a3, mpq_class a4) {
             return qpd::BinaryQuartic{a0, a1, a2, a3, a4};
           }),
           py::arg("a0"), py::arg("a1"), py::arg("a2"), py::arg("a3"), py::arg("a4"))
      .def_readonly("a0", &qpd::BinaryQuartic::a0)
      .def_readonly("a1", &qpd::BinaryQuartic::a1)
      .def_readonly("a2", &qpd::BinaryQuartic::a2)
      .def_readonly("a3", &qpd::BinaryQuartic::a3)
      .def_readonly("a4", &qpd::BinaryQuartic::a4)
      .def("to_tensor", &qpd::BinaryQuartic::to_tensor);

  m.def("classify_binary", &qpd::classify_binary);
  m.def("is_positive_definite", [](const qpd::BinaryQuartic& q) {
    const auto r = qpd::is_positive_definite(q);
    return py::make_tuple(r.holds, r.rule);
  });
  m.def("is_positive_semidefinite", [](const qpd::BinaryQuartic& q) {
    const auto r = qpd::is_positive_semidefinite(q);
    return py::make_tuple(r.holds, r.rule);
  });

  py::class_<qpd::CyclicTernary>(m, "CyclicTernary")
      .def(py::init([](mpq_class a, mpq_class b, mpq_class c, mpq_class d, mpq_class e) {
             return qpd::CyclicTernary{a, b, c, d, e};
           }),
           py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("e"))
      .def("rescaled", &qpd::CyclicTernary::rescaled)
      .def("to_tensor", [](const qpd::CyclicTernary& ct) { return qpd::embed(ct); });

  m.def("classify_cyclic", &qpd::classify_cyclic);

  py::class_<qpd::OracleConfig>(m, "OracleConfig")
      .def(py::init<>())
      .def_readwrite("grid_points", &qpd::OracleConfig::grid_points)
      .def_readwrite("refine_max_iters", &qpd::OracleConfig::refine_max_iters)
      .def_readwrite("grad_tol", &qpd::OracleConfig::grad_tol)
      .def_readwrite("classify_margin", &qpd::OracleConfig::classify_margin)
      .def_readwrite("seed", &qpd::OracleConfig::seed)
      .def_readwrite("refine_seeds", &qpd::OracleConfig::refine_seeds)
      .def_readwrite("cluster_radius", &qpd::OracleConfig::cluster_radius);

  m.def(
      "sphere_minimize",
      [](const qpd::SymmetricTensor4& t, const qpd::OracleConfig& cfg) {
        const auto r = qpd::sphere_minimize(t, cfg);
        py::dict out;
        out["min_value"] = r.min_value;
        out["minimizer"] = r.minimizer;
        out["classification"] = std::string(qpd::to_string(r.classification));
        return out;
      },
      py::arg("tensor"), py::arg("config") = qpd::OracleConfig{});
  m.def(
      "zero_set",
      [](const qpd::SymmetricTensor4& t, const qpd::OracleConfig& cfg) {
        const auto z = qpd::zero_set_probe(t, cfg);
        return py::make_tuple(z.points, z.degenerate);
      },
      py::arg("tensor"), py::arg("config") = qpd::OracleConfig{},
      "Returns (points, degenerate)");
  m.def("classify_numeric", &qpd::classify_numeric, py::arg("tensor"),
        py::arg("config") = qpd::OracleConfig{});

  m.def(
      "check",
      [](const std::string& text, bool psd, bool oracle_only, bool analytic_only, bool rescale,
         const qpd::OracleConfig& cfg) {
        qpd::CheckOptions opts;
        opts.question = psd ? qpd::Question::PositiveSemidefinite : qpd::Question::PositiveDefinite;
        opts.oracle_only = oracle_only;
        opts.analytic_only = analytic_only;
        opts.rescale = rescale;
        opts.oracle = cfg;
        return json_loads(qpd::to_json(qpd::run_check(qpd::parse_input(text), opts), false));
      },
      py::arg("text"), py::arg("psd") = false, py::arg("oracle_only") = false,
      py::arg("analytic_only") = false, py::arg("rescale") = false,
      py::arg("config") = qpd::OracleConfig{},
      "Runs the pipeline on a tensor document or shorthand and returns the report as a dict");

  m.def(
      "inequalities",
      [](const std::vector<std::string>& only, bool exchanged, const qpd::OracleConfig& cfg) {
        const auto catalog = qpd::catalog_with_exchanged();
        std::vector<qpd::WeightedInequality> entries;
        if (only.empty()) {
          entries = exchanged ? catalog : qpd::builtin_catalog();
        } else {
          for (const auto& label : only) {
            auto e = qpd::find_inequality(catalog, label);
            if (!e) throw py::key_error(label);
            entries.push_back(*e);
          }
        }
        return json_loads(qpd::to_json(qpd::run_inequalities(entries, cfg)));
      },
      py::arg("only") = std::vector<std::string>{}, py::arg("exchanged") = false,
      py::arg("config") = qpd::OracleConfig{});

  py::register_exception<qpd::InputError>(m, "InputError", PyExc_ValueError);
}
