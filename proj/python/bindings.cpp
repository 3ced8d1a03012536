#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "partzeta/cli.hpp"
#include "partzeta/error.hpp"
#include "partzeta/identities.hpp"
#include "partzeta/numeric.hpp"
#include "partzeta/parser.hpp"
#include "partzeta/rational.hpp"
#include "partzeta/serialize.hpp"

namespace py = pybind11;
using namespace partzeta;

namespace {

py::object to_py(const Integer& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

Integer from_py(const py::int_& v) { return Integer(py::str(v).cast<std::string>()); }

Block to_block(const std::vector<unsigned>& b) { return IndexSet(b); }

BlockTuple to_tuple(const std::vector<std::vector<unsigned>>& blocks) {
  BlockTuple t;
  for (const auto& b : blocks) t.push_back(to_block(b));
  return t;
}

std::vector<std::vector<unsigned>> from_tuple(const BlockTuple& t) {
  std::vector<std::vector<unsigned>> out;
  for (Block b : t) out.push_back(b.members());
  return out;
}

py::object witness_to_py(const std::optional<Witness>& w) {
  if (!w) return py::none();
  return py::make_tuple(from_tuple(w->partition.parts), to_py(w->coefficient));
}

py::list canonical_items(const CanonicalForm& cf) {
  py::list out;
  for (const auto& [p, c] : cf.coeffs()) out.append(py::make_tuple(from_tuple(p.parts), to_py(c)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Check linear relations among products of multiple zeta functions";

  py::register_exception<Error>(m, "PartzetaError", PyExc_ValueError);

  py::class_<Expression>(m, "Expression")
      .def_static("parse", &parse_expression, py::arg("text"))
      .def_property_readonly("universe", [](const Expression& e) { return e.universe().members(); })
      .def("terms",
           [](const Expression& e) {
             py::list out;
             for (const auto& [t, c] : e.terms()) out.append(py::make_tuple(to_py(c), to_text(t)));
             return out;
           })
      .def("to_structured", [](const Expression& e) { return to_structured(e); })
      .def_static("from_structured", [](const std::string& s) { return expression_from_structured(s); })
      .def("__len__", &Expression::size)
      .def("__str__", [](const Expression& e) { return to_text(e); })
      .def("__repr__", [](const Expression& e) { return "Expression('" + to_text(e) + "')"; })
      .def("__eq__", [](const Expression& a, const Expression& b) { return a == b; })
      .def("__add__", [](const Expression& a, const Expression& b) { return a + b; })
      .def("__sub__", [](const Expression& a, const Expression& b) { return a - b; })
      .def("__rmul__", [](const Expression& a, const py::int_& c) { return from_py(c) * a; });

  py::class_<CanonicalForm>(m, "CanonicalForm")
      .def_property_readonly("universe", [](const CanonicalForm& c) { return c.universe().members(); })
      .def("items", &canonical_items)
      .def("is_empty", &CanonicalForm::empty)
      .def("to_structured", [](const CanonicalForm& c) { return to_structured(c); })
      .def("__len__", [](const CanonicalForm& c) { return c.coeffs().size(); })
      .def("__str__", [](const CanonicalForm& c) { return to_text(c); });

  m.def("parse_expression", &parse_expression, py::arg("text"));
  m.def("normalize", &normalize, py::arg("expr"));
  m.def(
      "is_partition_identity",
      [](const Expression& e) {
        const PartitionIdentityVerdict v = is_partition_identity(e);
        return py::make_tuple(v.identity, witness_to_py(v.witness));
      },
      py::arg("expr"), "Returns (identity, witness) with witness = (partition, coefficient) or None.");

  m.def(
      "stuffle_product",
      [](const std::vector<std::vector<unsigned>>& u, const std::vector<std::vector<unsigned>>& v) {
        py::list out;
        for (const auto& [t, mult] : stuffle_product(to_tuple(u), to_tuple(v)).tuples) {
          out.append(py::make_tuple(from_tuple(t), to_py(mult)));
        }
        return out;
      },
      py::arg("u"), py::arg("v"));
  m.def("stuffle_size", [](unsigned a, unsigned b) { return to_py(stuffle_size(a, b)); });
  m.def("stuffle_identity", [](const std::vector<std::vector<unsigned>>& u,
                               const std::vector<std::vector<unsigned>>& v) {
    return stuffle_identity(to_tuple(u), to_tuple(v));
  });
  m.def("hoffman_identity", [](unsigned n, unsigned cap) { return hoffman_identity(n, cap); }, py::arg("n"),
        py::arg("cap") = kDefaultHoffmanCap);

  m.def("fubini_count", [](unsigned n) { return to_py(fubini_count(n)); });
  m.def("ordered_set_partitions", [](const std::vector<unsigned>& ground) {
    std::vector<std::vector<std::vector<unsigned>>> out;
    for (const auto& p : ordered_set_partitions(IndexSet(ground))) out.push_back(from_tuple(p.parts));
    return out;
  });
  m.def("unordered_set_partitions", [](const std::vector<unsigned>& ground) {
    std::vector<std::vector<std::vector<unsigned>>> out;
    for (const auto& p : unordered_set_partitions(IndexSet(ground))) out.push_back(from_tuple(p.parts));
    return out;
  });

  m.def(
      "rational_terms",
      [](const Expression& e) {
        py::list out;
        for (const auto& [c, rep] : rational_combination_of(e).terms) {
          py::list factors;
          for (const auto& [f, mult] : rep.factors) factors.append(py::make_tuple(f.support.members(), mult));
          out.append(py::make_tuple(to_py(c), factors));
        }
        return out;
      },
      py::arg("expr"));
  m.def("is_zero_combination", [](const Expression& e) { return is_zero_combination(rational_combination_of(e)); },
        py::arg("expr"));
  m.def(
      "probabilistic_zero_test",
      [](const Expression& e, unsigned trials, std::uint64_t seed) {
        return probabilistic_zero_test(rational_combination_of(e), trials, seed);
      },
      py::arg("expr"), py::arg("trials") = 5, py::arg("seed") = 0);

  m.def(
      "eval_zeta_truncated",
      [](const std::vector<double>& s, long long n) { return eval_zeta_truncated(s, TruncationLevel(n)); },
      py::arg("exponents"), py::arg("N"));
  m.def(
      "eval_expression",
      [](const Expression& e, const std::map<unsigned, double>& a, long long n) {
        return eval_expression(e, Assignment(a), TruncationLevel(n));
      },
      py::arg("expr"), py::arg("assignment"), py::arg("N") = 50);
  m.def(
      "residual_report",
      [](const Expression& e, const std::map<unsigned, double>& a, long long n) {
        const Residual r = residual_report(e, Assignment(a), TruncationLevel(n));
        return py::make_tuple(r.absolute, r.relative);
      },
      py::arg("expr"), py::arg("assignment"), py::arg("N") = 50);

  m.def(
      "verify",
      [](const Expression& e, const std::vector<std::string>& methods, unsigned n, std::uint64_t seed,
         unsigned samples) {
        std::vector<Method> ms;
        for (const auto& name : methods) ms.push_back(method_from_string(name));
        NumericParams p;
        p.truncation = n;
        p.seed = seed;
        p.samples = samples;
        const IdentityReport r = verify(e, ms, p);
        py::dict d;
        d["verdict"] = r.identity ? "identity" : "not-identity";
        d["witness"] = witness_to_py(r.witness);
        py::list run;
        for (Method mm : r.methods_run) run.append(to_string(mm));
        d["methods_run"] = run;
        d["agreement"] = r.agreement;
        d["numeric_residual"] = r.numeric_residual ? py::object(py::float_(*r.numeric_residual)) : py::none();
        return d;
      },
      py::arg("expr"), py::arg("methods") = std::vector<std::string>{"canonical", "rational", "numeric"},
      py::arg("N") = 50, py::arg("seed") = 0, py::arg("samples") = 20);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");

#ifdef PARTZETA_VERSION
  m.attr("__version__") = PARTZETA_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
