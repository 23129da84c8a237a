#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "orbitx/imaging.hpp"
#include "orbitx/io.hpp"

namespace py = pybind11;
using namespace orbitx;

namespace {

Image image_from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2) throw std::invalid_argument("expected a 2-d grayscale array");
  Image img{static_cast<int>(a.shape(1)), static_cast<int>(a.shape(0)), {}};
  img.pixels.assign(a.data(), a.data() + a.size());
  return img;
}

py::array_t<double> array_from_image(const Image& img) {
  py::array_t<double> a({img.height, img.width});
  std::copy(img.pixels.begin(), img.pixels.end(), a.mutable_data());
  return a;
}

DiscreteFunction function_from_values(AlgebraId algebra, std::int64_t m, GridKind kind,
                                      std::vector<Complex> values) {
  DiscreteFunction f{algebra, m, kind, std::move(values)};
  Plan::get(algebra, m, kind)->check(f);
  return f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Discrete C-/E- Weyl orbit-function transforms and convolutions on the "
            "fundamental domains of A2, C2 and G2";

  py::enum_<AlgebraId>(m, "AlgebraId")
      .value("A2", AlgebraId::A2)
      .value("C2", AlgebraId::C2)
      .value("G2", AlgebraId::G2);

  py::enum_<GridKind>(m, "GridKind")
      .value("C", GridKind::C)
      .value("E", GridKind::E);

  py::class_<AlgebraData>(m, "AlgebraData")
      .def_property_readonly("cartan",
                             [](const AlgebraData& d) {
                               return std::vector<std::vector<std::int64_t>>{
                                   {d.cartan.m00, d.cartan.m01}, {d.cartan.m10, d.cartan.m11}};
                             })
      .def_readonly("cartan_det", &AlgebraData::cartan_det)
      .def_readonly("marks", &AlgebraData::marks)
      .def_readonly("dual_marks", &AlgebraData::dual_marks)
      .def_readonly("weyl_order", &AlgebraData::weyl_order)
      .def_readonly("even_order", &AlgebraData::even_order);

  m.def("algebra_data", &algebra_data, py::return_value_policy::reference,
        "Static root-system descriptor of one algebra");

  m.def("weyl_group_size",
        [](AlgebraId id) { return generate_weyl_group(algebra_data(id)).size(); });

  m.def(
      "enumerate_points",
      [](AlgebraId a, std::int64_t m_) {
        std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> out;
        for (const auto& p : enumerate_points(a, m_)) out.emplace_back(p.s[0], p.s[1], p.s[2]);
        return out;
      },
      py::arg("algebra"), py::arg("m"), "Triples (s0,s1,s2) of F_M in enumeration order");

  m.def(
      "enumerate_labels",
      [](AlgebraId a, std::int64_t m_) {
        std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> out;
        for (const auto& l : enumerate_labels(a, m_)) out.emplace_back(l.t[0], l.t[1], l.t[2]);
        return out;
      },
      py::arg("algebra"), py::arg("m"));

  m.def(
      "epsilon",
      [](AlgebraId a, std::int64_t m_, std::int64_t s0, std::int64_t s1, std::int64_t s2) {
        return epsilon(GridPoint{{s0, s1, s2}, m_, a});
      },
      "Orbit-size weight of one grid point");

  m.def(
      "h_dual",
      [](AlgebraId a, std::int64_t m_, std::int64_t t0, std::int64_t t1, std::int64_t t2) {
        return h_dual(LabelPoint{{t0, t1, t2}, m_, a});
      },
      "Label stabilizer order");

  m.def(
      "grid_size",
      [](AlgebraId a, std::int64_t m_, GridKind k) { return Plan::get(a, m_, k)->size(); },
      py::arg("algebra"), py::arg("m"), py::arg("kind") = GridKind::C);

  m.def(
      "c_function",
      [](double l1, double l2, double x1, double x2, AlgebraId a) {
        return c_function({l1, l2}, {x1, x2}, algebra_data(a));
      },
      "C orbit function at weight (l1,l2), point (x1,x2)");
  m.def("e_function", [](double l1, double l2, double x1, double x2, AlgebraId a) {
    return e_function({l1, l2}, {x1, x2}, algebra_data(a));
  });

  m.def(
      "forward",
      [](AlgebraId a, std::int64_t m_, GridKind k, std::vector<Complex> values) {
        return forward(function_from_values(a, m_, k, std::move(values))).coeffs;
      },
      py::arg("algebra"), py::arg("m"), py::arg("kind"), py::arg("values"),
      "Forward orbit transform; returns the coefficients in label order");

  m.def(
      "inverse",
      [](AlgebraId a, std::int64_t m_, GridKind k, std::vector<Complex> coeffs) {
        Spectrum s{a, m_, k, std::move(coeffs)};
        Plan::get(a, m_, k)->check(s);
        return inverse_on_grid(s).values;
      },
      py::arg("algebra"), py::arg("m"), py::arg("kind"), py::arg("coeffs"));

  m.def(
      "inverse_at",
      [](AlgebraId a, std::int64_t m_, GridKind k, std::vector<Complex> coeffs, double x1,
         double x2) {
        Spectrum s{a, m_, k, std::move(coeffs)};
        return inverse_at(s, {x1, x2});
      },
      "Evaluate the interpolation sum at an arbitrary point");

  m.def(
      "convolve",
      [](AlgebraId a, std::int64_t m_, GridKind k, std::vector<Complex> f,
         std::vector<Complex> g, bool spatial) {
        const DiscreteFunction ff = function_from_values(a, m_, k, std::move(f));
        const DiscreteFunction gg = function_from_values(a, m_, k, std::move(g));
        return (spatial ? convolve_spatial(ff, gg) : convolve_spectral(ff, gg)).values;
      },
      py::arg("algebra"), py::arg("m"), py::arg("kind"), py::arg("f"), py::arg("g"),
      py::arg("spatial") = false);

  m.def(
      "builtin_kernel",
      [](const std::string& name, AlgebraId a, std::int64_t m_, GridKind k) {
        return builtin_kernel(name, a, m_, k).fn.values;
      },
      py::arg("name"), py::arg("algebra"), py::arg("m"), py::arg("kind") = GridKind::C);

  m.def(
      "verify_orthogonality",
      [](AlgebraId a, std::int64_t m_, GridKind k) {
        const auto rep = verify_orthogonality(a, m_, k);
        py::dict d;
        d["max_offdiag"] = rep.max_offdiag;
        d["max_diag_rel_err"] = rep.max_diag_rel_err;
        d["offdiag_bound"] = rep.offdiag_bound;
        d["diag_rel_bound"] = rep.diag_rel_bound;
        d["pass"] = rep.pass();
        return d;
      },
      py::arg("algebra"), py::arg("m"), py::arg("kind") = GridKind::C);

  m.def(
      "filter_image",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>& img,
         const std::string& kernel, AlgebraId a, std::int64_t m_) {
        const Image in = image_from_array(img);
        return array_from_image(filter_image(in, kernel, a, m_ > 0 ? m_ : in.height));
      },
      py::arg("image"), py::arg("kernel"), py::arg("algebra") = AlgebraId::C2,
      py::arg("m") = 0,
      "Orbit-convolution filtering of a square grayscale image (m defaults to its size)");

  m.def("baseline_r2_filter",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& img,
           const std::string& kernel) {
          return array_from_image(baseline_r2_filter(image_from_array(img), kernel));
        });

  m.def("make_hexagon_test_image",
        [](int size) { return array_from_image(make_hexagon_test_image(size)); });

  m.def("load_image", [](const std::string& path) { return array_from_image(load_image(path)); });
  m.def("save_image", [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a,
                         const std::string& path) { save_image(image_from_array(a), path); });

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
