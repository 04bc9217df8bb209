#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gmaderiv/cli.hpp"
#include "gmaderiv/document.hpp"
#include "gmaderiv/gallery.hpp"

namespace py = pybind11;
using namespace gmaderiv;

namespace {

// Maps cross the boundary in the documented column-major form: a list of
// columns, each a list of canonical scalar strings.
using PyMap = std::vector<std::vector<std::string>>;

PyMap to_py(const Matrix& m) {
  PyMap cols(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    cols[j].reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) cols[j].push_back(m.at(i, j).str());
  }
  return cols;
}

Matrix from_py(const Field& f, const PyMap& cols) {
  const std::size_t c = cols.size();
  const std::size_t r = c == 0 ? 0 : cols[0].size();
  Matrix m(f, r, c);
  for (std::size_t j = 0; j < c; ++j) {
    if (cols[j].size() != r) throw DimensionError("columns have differing lengths");
    for (std::size_t i = 0; i < r; ++i) m.set(i, j, Scalar::parse(f, cols[j][i]));
  }
  return m;
}

Matrix square_from_py(const GeneralizedMatrixAlgebra& g, const PyMap& cols) {
  const Matrix m = from_py(g.field(), cols);
  if (m.rows() != g.dim() || m.cols() != g.dim())
    throw DimensionError("map shape does not match the algebra dimension " +
                         std::to_string(g.dim()));
  return m;
}

py::dict dims_dict(const MoritaContext& ctx) {
  py::dict d;
  d["A"] = ctx.dim_a();
  d["M"] = ctx.dim_m();
  d["N"] = ctx.dim_n();
  d["B"] = ctx.dim_b();
  return d;
}

GalleryParams params_from_dict(const py::dict& d) {
  GalleryParams params;
  for (const auto& item : d)
    params[py::cast<std::string>(item.first)] = py::cast<std::string>(py::str(item.second));
  return params;
}

py::dict certify_dict(const CertifyResult& r) {
  py::dict out;
  out["verdict"] = std::string(verdict_name(r.verdict));
  out["reason"] = r.reason;
  py::dict facts;
  for (const auto& [k, v] : r.facts) facts[py::str(k)] = v;
  out["facts"] = facts;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact derivation structure of generalized matrix algebras";

  py::register_exception<FieldMismatchError>(m, "FieldMismatchError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<AlgebraError>(m, "AlgebraError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_RuntimeError);

  py::class_<Field>(m, "Field")
      .def_static("rationals", &Field::rationals)
      .def_static("prime", &Field::prime, py::arg("p"))
      .def_property_readonly("characteristic", &Field::characteristic)
      .def("__repr__", [](const Field& f) { return "Field(" + f.name() + ")"; })
      .def("__eq__", [](const Field& a, const Field& b) { return a == b; });

  py::class_<MoritaContext>(m, "Context")
      .def_property_readonly("field", &MoritaContext::field)
      .def_property_readonly("dims", &dims_dict)
      .def("validate",
           [](const MoritaContext& ctx) {
             std::vector<std::string> issues;
             for (const auto& issue : validate_context(ctx).issues)
               issues.push_back(issue.describe());
             return issues;
           },
           "Every violated context identity, with indices; empty when valid.")
      .def("is_nondegenerate",
           [](const MoritaContext& ctx, const std::string& which) {
             if (which == "phi") return is_nondegenerate(ctx, PairingSide::Phi);
             if (which == "psi") return is_nondegenerate(ctx, PairingSide::Psi);
             throw py::value_error("which must be 'phi' or 'psi'");
           },
           py::arg("which"))
      .def("is_faithful",
           [](const MoritaContext& ctx, const std::string& module, const std::string& side) {
             const WhichModule wm = module == "M"   ? WhichModule::M
                                    : module == "N" ? WhichModule::N
                                                    : throw py::value_error("module must be 'M' or 'N'");
             const ActionSide as = side == "left"    ? ActionSide::Left
                                   : side == "right" ? ActionSide::Right
                                                     : throw py::value_error("side must be 'left' or 'right'");
             return is_faithful(ctx, wm, as);
           },
           py::arg("module"), py::arg("side"))
      .def("serialize",
           [](const MoritaContext& ctx) { return serialize_document(document_from_context(ctx)); })
      .def("__repr__", [](const MoritaContext& ctx) {
        return "Context(A=" + std::to_string(ctx.dim_a()) + ", M=" + std::to_string(ctx.dim_m()) +
               ", N=" + std::to_string(ctx.dim_n()) + ", B=" + std::to_string(ctx.dim_b()) +
               ", field=" + ctx.field().name() + ")";
      });

  py::class_<GeneralizedMatrixAlgebra>(m, "Gma")
      .def_property_readonly("dim", &GeneralizedMatrixAlgebra::dim)
      .def_property_readonly("field", &GeneralizedMatrixAlgebra::field)
      .def_property_readonly("context", &GeneralizedMatrixAlgebra::context)
      .def_property_readonly("corner_dims",
                             [](const GeneralizedMatrixAlgebra& g) { return dims_dict(g.context()); })
      .def("serialize",
           [](const GeneralizedMatrixAlgebra& g) {
             return serialize_document(document_from_algebra(g.algebra(), "G"));
           },
           "Structure constants of the assembled algebra as a document.")
      .def("__repr__", [](const GeneralizedMatrixAlgebra& g) {
        return "Gma(dim=" + std::to_string(g.dim()) + ", field=" + g.field().name() + ")";
      });

  m.def("gallery",
        [](const std::string& name, const py::dict& params) {
          return make_gallery(name, params_from_dict(params));
        },
        py::arg("name"), py::arg("params") = py::dict(),
        "Built-in fixture by name: trivial, s-deformed, triangular, skew-c2.");
  m.def("gallery_presets", []() {
    std::vector<py::dict> out;
    for (const auto& preset : gallery_presets()) {
      py::dict d;
      d["name"] = preset.name;
      py::dict p;
      for (const auto& [k, v] : preset.params) p[py::str(k)] = v;
      d["params"] = p;
      out.push_back(std::move(d));
    }
    return out;
  });
  m.def("from_document", [](const std::string& text) { return build_context(parse_document(text)); },
        py::arg("text"), "Parse a context definition document.");
  m.def("document_maps",
        [](const std::string& text) {
          const ContextDocument doc = parse_document(text);
          py::dict out;
          for (const auto& [name, map] : doc.maps) out[py::str(name)] = to_py(map);
          return out;
        },
        py::arg("text"), "Named coefficient maps of a document, column-major.");

  m.def("build_gma", &build_gma, py::arg("context"),
        "Assemble and validate the generalized matrix algebra of a context.");

  m.def("solve",
        [](const GeneralizedMatrixAlgebra& g, const std::string& kind, bool basis) {
          const MapSubspace space = kind == "der"    ? derivation_space(g.algebra())
                                    : kind == "jder" ? jordan_derivation_space(g.algebra())
                                    : kind == "ader"
                                        ? antiderivation_space(g.algebra())
                                        : throw py::value_error("kind must be der, jder or ader");
          py::dict out;
          out["dim"] = space.dimension();
          if (basis) {
            std::vector<PyMap> maps;
            for (const auto& b : space.basis) maps.push_back(to_py(b));
            out["basis"] = maps;
          }
          return out;
        },
        py::arg("gma"), py::arg("kind"), py::arg("basis") = false);

  m.def("is_derivation",
        [](const GeneralizedMatrixAlgebra& g, const PyMap& f) {
          return is_derivation(g.algebra(), square_from_py(g, f));
        },
        py::arg("gma"), py::arg("map"));
  m.def("is_jordan_derivation",
        [](const GeneralizedMatrixAlgebra& g, const PyMap& f) {
          return is_jordan_derivation(g.algebra(), square_from_py(g, f));
        },
        py::arg("gma"), py::arg("map"));
  m.def("is_antiderivation",
        [](const GeneralizedMatrixAlgebra& g, const PyMap& f) {
          return is_antiderivation(g.algebra(), square_from_py(g, f));
        },
        py::arg("gma"), py::arg("map"));

  m.def("gamma_jord", [](const GeneralizedMatrixAlgebra& g) { return to_py(gamma_jord(g)); });
  m.def("theta1", [](const GeneralizedMatrixAlgebra& g) { return to_py(theta1(g)); });
  m.def("theta2", [](const GeneralizedMatrixAlgebra& g) { return to_py(theta2(g)); });
  m.def("inner_derivation",
        [](const GeneralizedMatrixAlgebra& g, const std::vector<std::string>& element) {
          Vec x;
          for (const auto& s : element) x.push_back(Scalar::parse(g.field(), s));
          return to_py(inner_derivation(g.algebra(), x));
        },
        py::arg("gma"), py::arg("element"));

  m.def("decompose",
        [](const GeneralizedMatrixAlgebra& g, const PyMap& f) {
          const JordanDecomposition parts = decompose_jordan(g, square_from_py(g, f));
          return py::make_tuple(to_py(parts.derivation_part), to_py(parts.antiderivation_part));
        },
        py::arg("gma"), py::arg("map"),
        "Canonical split of a Jordan derivation into derivation + antiderivation.");

  m.def("canonical_report",
        [](const GeneralizedMatrixAlgebra& g, const PyMap& f, const std::string& prop) {
          const auto rule = form_rule_from_id(prop);
          if (!rule) throw py::value_error("statement must be 3.1, 3.2, 3.3 or 3.6");
          const JordanCanonicalForm form = extract_jordan_components(g, square_from_py(g, f));
          const ConditionReport report = verify_conditions(g, form, *rule);
          py::dict out;
          out["statement"] = prop;
          out["all_hold"] = report.ok();
          std::vector<py::dict> checks;
          for (const auto& check : report.checks) {
            py::dict c;
            c["id"] = check.id;
            c["statement"] = check.statement;
            c["holds"] = check.holds;
            c["witness"] = check.witness;
            checks.push_back(std::move(c));
          }
          out["conditions"] = checks;
          py::dict components;
          std::vector<std::string> m0, n0;
          for (const auto& s : form.m0) m0.push_back(s.str());
          for (const auto& s : form.n0) n0.push_back(s.str());
          components["m0"] = m0;
          components["n0"] = n0;
          components["delta1"] = to_py(form.delta1);
          components["delta4"] = to_py(form.delta4);
          components["tau2"] = to_py(form.tau2);
          components["tau3"] = to_py(form.tau3);
          components["nu2"] = to_py(form.nu2);
          components["nu3"] = to_py(form.nu3);
          components["mu1"] = to_py(form.mu1);
          components["mu4"] = to_py(form.mu4);
          out["components"] = components;
          return out;
        },
        py::arg("gma"), py::arg("map"), py::arg("statement"));

  m.def("certify",
        [](const GeneralizedMatrixAlgebra& g, const std::string& prop) {
          if (prop == "3.10") return certify_dict(certify_no_antiderivations(g));
          if (prop == "3.11") return certify_dict(certify_jordan_splitting(g));
          throw py::value_error("statement must be 3.10 or 3.11");
        },
        py::arg("gma"), py::arg("statement"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a CLI command in-process; returns (exit_code, stdout, stderr).");
}
