// Python bindings for the core algebra: exact polynomials, the four bilinear
// products, basis changes, decomposition over y-powers, numeric evaluation
// with tail bounds, and the relation families with their verifier.

#include "mzv/errors.hpp"
#include "mzv/evaluation.hpp"
#include "mzv/expr_io.hpp"
#include "mzv/linmaps.hpp"
#include "mzv/ncpoly.hpp"
#include "mzv/products.hpp"
#include "mzv/regularization.hpp"
#include "mzv/relations.hpp"

#include <json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

mzv::ProductKind kind_from(const std::string& op) {
  if (op == "h") return mzv::ProductKind::harmonic;
  if (op == "sh") return mzv::ProductKind::shuffle;
  if (op == "nh") return mzv::ProductKind::n_harmonic;
  if (op == "nsh") return mzv::ProductKind::n_shuffle;
  throw std::invalid_argument("unknown product '" + op + "', expected h|sh|nh|nsh");
}

mzv::Composition comp_from(const std::vector<int>& parts) { return mzv::Composition(parts); }

py::dict numeric_dict(const mzv::NumericValue& v) {
  py::dict d;
  d["approx"] = v.approx;
  d["tail_bound"] = v.tail_bound;
  d["terms_used"] = v.terms_used;
  return d;
}

mzv::RelationInstance build_instance(const std::string& family, const std::vector<int>& comp,
                                     const std::vector<int>& comp2, const std::string& side) {
  const bool pair_family =
      family == "fds" || family == "nfds" || family == "eds" || family == "neds";
  if (pair_family && comp2.empty())
    throw std::invalid_argument(family + " needs a second composition");
  if (!pair_family && !comp2.empty())
    throw std::invalid_argument(family + " takes a single composition");

  const mzv::Composition a = comp_from(comp);
  if (family == "fds") return mzv::finite_double_shuffle(a, comp_from(comp2), false);
  if (family == "nfds") return mzv::finite_double_shuffle(a, comp_from(comp2), true);
  if (family == "eds" || family == "neds") {
    const mzv::RegSide reg = side == "sh" ? mzv::RegSide::shuffle : mzv::RegSide::harmonic;
    return mzv::extended_double_shuffle(a, comp_from(comp2), family == "neds", reg);
  }
  if (family == "hoffman") return mzv::hoffman(a, false);
  if (family == "nhoffman") return mzv::hoffman(a, true);
  if (family == "lemma32") return mzv::y_nshuffle_identity(a);
  throw std::invalid_argument("unknown family '" + family + "'");
}

py::dict instance_dict(const mzv::RelationInstance& r) {
  py::dict d;
  d["family"] = std::string(to_string(r.family));
  py::list params;
  for (const auto& c : r.parameters) params.append(c.parts());
  d["parameters"] = params;
  d["description"] = r.description;
  py::list elements;
  for (const auto& e : r.elements) elements.append(e);
  d["elements"] = elements;
  if (r.family == mzv::RelationFamily::extended_double_shuffle_mzv ||
      r.family == mzv::RelationFamily::extended_double_shuffle_nmzv)
    d["side"] = r.side == mzv::RegSide::harmonic ? "h" : "sh";
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact word algebra for multiple zeta values (strict and non-strict)";

  py::register_exception<mzv::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<mzv::AlgebraError>(m, "AlgebraError", PyExc_ValueError);

  py::class_<mzv::NcPoly>(m, "Poly")
      .def(py::init([](const std::string& expr) { return mzv::parse_expr(expr); }),
           py::arg("expr"), "parse an expression like '2*z(2,1) - z(3)' or 'w(xyy)'")
      .def("__str__", [](const mzv::NcPoly& p) { return mzv::format_expr(p); })
      .def("__repr__",
           [](const mzv::NcPoly& p) { return "Poly('" + mzv::format_expr(p) + "')"; })
      .def("__eq__", [](const mzv::NcPoly& a, const mzv::NcPoly& b) { return a == b; },
           py::is_operator())
      .def("__add__", [](const mzv::NcPoly& a, const mzv::NcPoly& b) { return a + b; })
      .def("__sub__", [](const mzv::NcPoly& a, const mzv::NcPoly& b) { return a - b; })
      .def("__neg__", [](const mzv::NcPoly& a) { return -a; })
      .def("__mul__", [](const mzv::NcPoly& a, const mzv::NcPoly& b) { return a * b; },
           "concatenation product (not one of the bilinear products)")
      .def("__mul__",
           [](const mzv::NcPoly& a, long c) { return a * mzv::Rational(c); })
      .def("__rmul__",
           [](const mzv::NcPoly& a, long c) { return a * mzv::Rational(c); })
      .def("scaled",
           [](const mzv::NcPoly& a, const std::string& r) {
             return a * mzv::rational_from_string(r);
           },
           py::arg("rational"), "multiply by an exact rational given as 'p/q'")
      .def("is_zero", [](const mzv::NcPoly& p) { return p.is_zero(); })
      .def("in_h1", [](const mzv::NcPoly& p) { return mzv::in_h1(p); })
      .def("in_h0", [](const mzv::NcPoly& p) { return mzv::in_h0(p); })
      .def("weight", [](const mzv::NcPoly& p) { return mzv::max_weight(p); },
           "largest word weight appearing (0 for scalars)")
      .def("terms",
           [](const mzv::NcPoly& p) {
             py::list out;
             for (const auto& [w, c] : p.terms())
               out.append(py::make_tuple(mzv::to_string(c), w.letters()));
             return out;
           },
           "list of (coefficient, word) pairs in canonical order, exact strings")
      .def("to_json", [](const mzv::NcPoly& p) { return mzv::poly_to_json(p).dump(); })
      .def_static("from_json", [](const std::string& s) {
        return mzv::poly_from_json(nlohmann::json::parse(s));
      });

  m.def(
      "z",
      [](py::args ks) {
        std::vector<int> parts;
        for (auto k : ks) parts.push_back(py::cast<int>(k));
        return mzv::NcPoly::from_word(mzv::word_from_composition(mzv::Composition(parts)));
      },
      "z(2, 1) -> the word x y y as a polynomial");

  m.def(
      "word",
      [](const std::string& letters) {
        return mzv::NcPoly::from_word(mzv::Word::from_letters(letters));
      },
      py::arg("letters"), "word('xyy') -> that word as a polynomial");

  m.def(
      "product",
      [](const std::string& op, const mzv::NcPoly& a, const mzv::NcPoly& b) {
        return mzv::product(kind_from(op), a, b);
      },
      py::arg("op"), py::arg("a"), py::arg("b"),
      "one of the four bilinear products: op in {'h','sh','nh','nsh'}");

  m.def(
      "apply_map",
      [](const std::string& name, const mzv::NcPoly& p) {
        if (name == "S1") return mzv::apply_substitution(mzv::subst_y_to_x_plus_y(), p);
        if (name == "S2") return mzv::apply_substitution(mzv::subst_y_to_y_minus_x(), p);
        if (name == "S") return mzv::to_strict_basis(p);
        if (name == "Sinv") return mzv::to_nonstrict_basis(p);
        throw std::invalid_argument("unknown map '" + name + "', expected S1|S2|S|Sinv");
      },
      py::arg("name"), py::arg("p"), "apply S1, S2, S, or Sinv");

  m.def(
      "decompose",
      [](const std::string& op, const mzv::NcPoly& p) {
        return mzv::decompose(p, kind_from(op)).coeffs;
      },
      py::arg("op"), py::arg("p"),
      "coefficients [c0, c1, ...] with p = sum_i ci op y^(op i), each ci convergent");

  m.def(
      "recompose",
      [](const std::string& op, const std::vector<mzv::NcPoly>& coeffs) {
        mzv::Decomposition d;
        d.kind = kind_from(op);
        d.coeffs = coeffs;
        return mzv::recompose(d);
      },
      py::arg("op"), py::arg("coeffs"));

  m.def(
      "eval_strict",
      [](const mzv::NcPoly& p, long limit) { return numeric_dict(mzv::eval_strict(p, limit)); },
      py::arg("p"), py::arg("limit") = mzv::default_eval_limit,
      "truncated strict nested sums with a rigorous tail bound");

  m.def(
      "eval_nonstrict",
      [](const mzv::NcPoly& p, long limit) {
        return numeric_dict(mzv::eval_nonstrict(p, limit));
      },
      py::arg("p"), py::arg("limit") = mzv::default_eval_limit,
      "truncated non-strict nested sums with a rigorous tail bound");

  m.def(
      "eval_mzv",
      [](const std::vector<int>& ks, long limit) {
        return numeric_dict(mzv::eval_mzv(mzv::Composition(ks), limit));
      },
      py::arg("ks"), py::arg("limit") = mzv::default_eval_limit);

  m.def(
      "eval_nmzv",
      [](const std::vector<int>& ks, long limit) {
        return numeric_dict(mzv::eval_nmzv(mzv::Composition(ks), limit));
      },
      py::arg("ks"), py::arg("limit") = mzv::default_eval_limit);

  m.def(
      "eval_regularized",
      [](const mzv::NcPoly& p, const std::string& op, long limit) {
        py::list out;
        const mzv::RegValue rv = mzv::eval_regularized(p, kind_from(op), limit);
        for (std::size_t i = 0; i < rv.coefficients.size(); ++i) {
          py::dict d = numeric_dict(rv.coefficients[i]);
          d["power"] = i;
          out.append(d);
        }
        return out;
      },
      py::arg("p"), py::arg("op"), py::arg("limit") = mzv::default_eval_limit,
      "value as coefficients of powers of T, one dict per power");

  m.def(
      "relation",
      [](const std::string& family, const std::vector<int>& comp, const std::vector<int>& comp2,
         const std::string& side) { return instance_dict(build_instance(family, comp, comp2, side)); },
      py::arg("family"), py::arg("comp"), py::arg("comp2") = std::vector<int>{},
      py::arg("side") = "h",
      "family in {'fds','nfds','eds','neds','hoffman','nhoffman','lemma32'}");

  m.def(
      "verify",
      [](const std::string& family, const std::vector<int>& comp, const std::vector<int>& comp2,
         const std::string& side, long limit, double tol, bool perturb) {
        mzv::RelationInstance inst = build_instance(family, comp, comp2, side);
        if (perturb)
          inst = mzv::perturbed(
              inst, mzv::NcPoly::from_word(mzv::word_from_composition(mzv::Composition{4})));
        const mzv::VerifyReport rep = mzv::verify(inst, limit, tol);
        py::dict d;
        d["pass"] = rep.pass;
        d["exact"] = rep.exact;
        d["limit"] = rep.limit;
        d["tol"] = rep.tol;
        d["description"] = inst.description;
        py::list checks;
        for (const auto& c : rep.checks) {
          py::dict cd;
          cd["power"] = c.t_power;
          cd["approx"] = c.approx;
          cd["tail_bound"] = c.tail_bound;
          cd["pass"] = c.pass;
          checks.append(cd);
        }
        d["checks"] = checks;
        return d;
      },
      py::arg("family"), py::arg("comp"), py::arg("comp2") = std::vector<int>{},
      py::arg("side") = "h", py::arg("limit") = mzv::default_eval_limit, py::arg("tol") = 1e-3,
      py::arg("perturb") = false,
      "numerically (or symbolically, for lemma32) check one relation instance");
}
