#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hhd/conditioning.hpp"
#include "hhd/solver.hpp"
#include "hhd/spectra.hpp"
#include "hhd/verify.hpp"

namespace py = pybind11;
using namespace hhd;

namespace {

py::array_t<double> copy_out(const CoefficientTable& t) {
  auto d = t.data();
  return py::array_t<double>(d.size(), d.data());
}

template <class T>
void copy_in(T& t, py::array_t<double, py::array::c_style | py::array::forcecast> values) {
  if (values.ndim() != 1 || static_cast<std::size_t>(values.size()) != t.size())
    throw std::invalid_argument("expected a flat array of " + std::to_string(t.size()) + " coefficients");
  std::copy(values.data(), values.data() + values.size(), t.data().begin());
}

template <class T>
void bind_table(py::class_<T, CoefficientTable>& cls) {
  cls.def("__getitem__", [](const T& t, std::pair<int, int> lm) {
       if (!t.contains(lm.first, lm.second)) throw py::index_error("no coefficient at that (l, m)");
       return t(lm.first, lm.second);
     })
      .def("__setitem__", [](T& t, std::pair<int, int> lm, double v) {
        if (!t.contains(lm.first, lm.second)) throw py::index_error("no coefficient at that (l, m)");
        t(lm.first, lm.second) = v;
      });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spheroidal/toroidal decomposition of tangent fields on the sphere";

  py::class_<CoefficientTable>(m, "CoefficientTable")
      .def_property_readonly("degree", &CoefficientTable::degree)
      .def_property_readonly("max_order", &CoefficientTable::max_order)
      .def("__len__", &CoefficientTable::size)
      .def("first_degree", &CoefficientTable::first_degree)
      .def("contains", &CoefficientTable::contains)
      .def("to_numpy", &copy_out, "Coefficients in storage order (m ascending, then l).");

  py::class_<ScalarSpectrum, CoefficientTable> scalar(m, "ScalarSpectrum");
  scalar.def(py::init<int>(), py::arg("n_pot"))
      .def_static("from_numpy", [](int n_pot, py::array_t<double, py::array::c_style | py::array::forcecast> v) {
        ScalarSpectrum s(n_pot);
        copy_in(s, v);
        return s;
      });
  bind_table(scalar);

  py::class_<ZSpectrum, CoefficientTable> zspec(m, "ZSpectrum");
  zspec.def(py::init<int>(), py::arg("n"))
      .def_static("from_numpy", [](int n, py::array_t<double, py::array::c_style | py::array::forcecast> v) {
        ZSpectrum z(n);
        copy_in(z, v);
        return z;
      });
  bind_table(zspec);

  py::class_<TangentField>(m, "TangentField")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init<ZSpectrum, ZSpectrum>(), py::arg("theta"), py::arg("phi"))
      .def_readwrite("theta", &TangentField::theta)
      .def_readwrite("phi", &TangentField::phi)
      .def_property_readonly("degree", &TangentField::degree);

  py::class_<HHDResult>(m, "HHDResult")
      .def_readonly("spheroidal", &HHDResult::spheroidal)
      .def_readonly("toroidal", &HHDResult::toroidal)
      .def_readonly("residual_by_order", &HHDResult::residual_by_order)
      .def_readonly("out_of_range_by_order", &HHDResult::out_of_range_by_order);

  m.def("random_spectrum", &random_spectrum, py::arg("n_pot"), py::arg("seed"));
  m.def("relative_l2_error", &relative_l2_error, py::arg("a"), py::arg("b"));
  m.def("differentiate", &differentiate, py::arg("spheroidal"), py::arg("toroidal"));
  m.def(
      "decompose",
      [](const TangentField& f, int threads) {
        py::gil_scoped_release release;
        DecomposeOptions opts;
        opts.threads = threads;
        return decompose(f, opts);
      },
      py::arg("field"), py::arg("threads") = 1);

  m.def("kappa_bound", &conditioning::kappa_bound, py::arg("n"), py::arg("m"));
  m.def(
      "kappa_numeric",
      [](int n, int order) {
        const auto r = conditioning::kappa_numeric(n, order);
        return py::dict(py::arg("kappa_R") = r.kappa_R, py::arg("kappa_M") = r.kappa_M, py::arg("bound") = r.bound,
                        py::arg("sigma_max_R") = r.sigma_max_R, py::arg("sigma_min_R") = r.sigma_min_R);
      },
      py::arg("n"), py::arg("m"));

  m.def(
      "verify",
      [](const std::string& level) {
        if (level != "quick" && level != "full") throw std::invalid_argument("level must be quick or full");
        verify::VerifyOptions opts;
        opts.level = level == "full" ? verify::Level::full : verify::Level::quick;
        py::list out;
        for (const auto& r : verify::run_verification(opts))
          out.append(py::dict(py::arg("name") = r.name, py::arg("passed") = r.passed, py::arg("worst") = r.worst,
                              py::arg("tolerance") = r.tolerance));
        return out;
      },
      py::arg("level") = "quick");
}
