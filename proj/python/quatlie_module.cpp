#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "quatlie/serialization.hpp"

namespace py = pybind11;
using namespace quatlie;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

BladeMask mask_from_indices(const std::vector<int>& indices, int n) {
  BladeMask m = 0;
  for (int a : indices) {
    if (a < 1 || a > n) throw std::invalid_argument("generator index out of range");
    m |= BladeMask(1) << (a - 1);
  }
  return m;
}

std::vector<int> indices_from_mask(BladeMask m) {
  std::vector<int> out;
  for (int a = 1; m != 0; ++a, m >>= 1)
    if (m & 1) out.push_back(a);
  return out;
}

Multivector make_blade(int p, int q, const std::vector<int>& indices, const std::string& re,
                       const std::string& im) {
  Signature sig(p, q);
  return Multivector::blade(
      sig, mask_from_indices(indices, sig.n()),
      ExactComplex(Rational::from_string(re), Rational::from_string(im)));
}

std::vector<int> ids_or_all(const std::optional<std::vector<int>>& ids) {
  if (ids) return *ids;
  std::vector<int> all;
  for (int id = 1; id <= 16; ++id) all.push_back(id);
  return all;
}

}  // namespace

PYBIND11_MODULE(_quatlie, m) {
  m.doc() = "Quaternion-type Lie algebras in complexified Clifford algebras";

  py::class_<Signature>(m, "Signature")
      .def(py::init<int, int>(), py::arg("p"), py::arg("q"))
      .def_property_readonly("p", &Signature::p)
      .def_property_readonly("q", &Signature::q)
      .def_property_readonly("n", &Signature::n)
      .def("__repr__", [](const Signature& s) {
        return "Signature(" + std::to_string(s.p()) + ", " + std::to_string(s.q()) + ")";
      });

  py::class_<Multivector>(m, "Multivector")
      .def_static(
          "scalar",
          [](int p, int q, const std::string& re, const std::string& im) {
            return Multivector::scalar(
                Signature(p, q),
                ExactComplex(Rational::from_string(re), Rational::from_string(im)));
          },
          py::arg("p"), py::arg("q"), py::arg("re") = "1", py::arg("im") = "0")
      .def_static("blade", &make_blade, py::arg("p"), py::arg("q"), py::arg("indices"),
                  py::arg("re") = "1", py::arg("im") = "0")
      .def_property_readonly("sig", &Multivector::sig)
      .def("coeff",
           [](const Multivector& u, const std::vector<int>& indices) {
             ExactComplex c = u.coeff(mask_from_indices(indices, u.sig().n()));
             return std::complex<double>(c.re.to_double(), c.im.to_double());
           })
      .def("terms",
           [](const Multivector& u) {
             py::dict out;
             for (const auto& [mask, c] : u.terms()) {
               py::tuple key = py::cast(indices_from_mask(mask));
               out[key] = py::make_tuple(c.re.to_string(), c.im.to_string());
             }
             return out;
           })
      .def("grade_projection", &grade_projection, py::arg("k"))
      .def("quat_projection",
           [](const Multivector& u, int s) { return quat_projection(u, s); }, py::arg("s"))
      .def("grade_involution", [](const Multivector& u) { return grade_involution(u); })
      .def("reversion", [](const Multivector& u) { return reversion(u); })
      .def("complex_conjugation",
           [](const Multivector& u) { return complex_conjugation(u); })
      .def("pseudo_hermitian", [](const Multivector& u) { return pseudo_hermitian(u); })
      .def("hermitian_conjugation",
           [](const Multivector& u) { return hermitian_conjugation(u); })
      .def("to_json", [](const Multivector& u) { return multivector_to_json(u).dump(); })
      .def_static("from_json",
                  [](const std::string& s) { return multivector_from_json(json::parse(s)); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const Multivector& u) { return multivector_to_json(u).dump(); });

  m.def("commutator", &commutator, py::arg("u"), py::arg("v"));
  m.def("even_iso", &even_iso, py::arg("u"));
  m.def("swap_iso", &swap_iso, py::arg("u"));

  m.def("quat_type_dims", [](int n) {
    auto d = quat_type_dims(n);
    return py::make_tuple(d[0], d[1], d[2], d[3]);
  });
  m.def("lie_algebra_dim", &lie_algebra_dim, py::arg("id"), py::arg("n"));
  m.def("algebra_name", [](int id) { return std::string(catalog_row(id).name); });
  m.def("algebra_id", &catalog_id_from_name, py::arg("name"));

  m.def("subspace_basis",
        [](int id, int p, int q) { return subspace_basis(id, Signature(p, q)); });

  m.def("closure_check", [](int id, int p, int q) {
    return json_to_py(closure_report_to_json(closure_check(id, Signature(p, q))));
  });
  m.def("commutation_table_check", [](int p, int q) {
    return json_to_py(commutation_report_to_json(commutation_table_check(Signature(p, q))));
  });
  m.def("spin_checks", [](int p, int q) {
    return json_to_py(spin_report_to_json(spin_lie_checks(Signature(p, q))));
  });

  m.def("build_beta", [](int p, int q) {
    Representation rep = build_beta(Signature(p, q));
    std::vector<std::vector<std::vector<std::complex<double>>>> out;
    for (const auto& g : rep.gens) {
      std::vector<std::vector<std::complex<double>>> rows;
      for (int i = 0; i < g.size(); ++i) {
        std::vector<std::complex<double>> row;
        for (int j = 0; j < g.size(); ++j)
          row.emplace_back(g.at(i, j).re.to_double(), g.at(i, j).im.to_double());
        rows.push_back(std::move(row));
      }
      out.push_back(std::move(rows));
    }
    return out;
  });
  m.def("representation_json", [](int p, int q) {
    Representation rep = build_beta(Signature(p, q));
    return json_to_py(representation_to_json(rep, additional_signature(rep)));
  });
  m.def("additional_signature", [](int p, int q) {
    Representation rep = build_beta(Signature(p, q));
    AdditionalSignature as = additional_signature(rep);
    py::dict out;
    out["k"] = as.k;
    out["l"] = as.l;
    out["kp"] = as.kp;
    out["lp"] = as.lp;
    out["kq"] = as.kq;
    out["lq"] = as.lq;
    out["table_ok"] = as.table_ok;
    return out;
  });

  m.def("classify", [](int id, int p, int q) {
    Signature sig(p, q);
    return json_to_py(classification_to_json(id, sig, classify(id, sig)));
  });
  m.def("derived_iso_chain",
        [](int id, int p, int q) { return derived_iso_chain(id, Signature(p, q)); });

  m.def(
      "verify",
      [](int id, int p, int q, int samples, std::uint64_t seed) {
        VerifyOptions opt;
        opt.samples = samples;
        opt.seed = seed;
        return json_to_py(
            verification_report_to_json(verify_signature(id, Signature(p, q), opt)));
      },
      py::arg("id"), py::arg("p"), py::arg("q"), py::arg("samples") = 20,
      py::arg("seed") = 42);
  m.def(
      "sweep",
      [](int max_n, const std::optional<std::vector<int>>& ids, int samples,
         std::uint64_t seed) {
        VerifyOptions opt;
        opt.samples = samples;
        opt.seed = seed;
        return json_to_py(verification_reports_to_json(sweep(max_n, ids_or_all(ids), opt)));
      },
      py::arg("max_n"), py::arg("ids") = py::none(), py::arg("samples") = 20,
      py::arg("seed") = 42);
}
