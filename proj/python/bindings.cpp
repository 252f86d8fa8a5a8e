#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "symgrass/codes.hpp"
#include "symgrass/formulas.hpp"
#include "symgrass/grassmann.hpp"

namespace py = pybind11;
namespace fm = symgrass::formulas;
using namespace symgrass;

namespace {

py::int_ to_py(fm::Int v) {
    const std::string s = fm::to_string(v);
    return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::array_t<std::uint8_t> to_numpy(const Matrix& m) {
    py::array_t<std::uint8_t> a({m.rows(), m.cols()});
    auto view = a.mutable_unchecked<2>();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) view(r, c) = m(r, c);
    return a;
}

Matrix from_numpy(int q, const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2) throw std::invalid_argument("expected a 2-d array");
    const auto& f = Field::get(q);
    auto view = a.unchecked<2>();
    Matrix m(f, static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
    for (py::ssize_t r = 0; r < a.shape(0); ++r)
        for (py::ssize_t c = 0; c < a.shape(1); ++c) {
            if (view(r, c) >= q) throw std::invalid_argument("entry outside GF(q)");
            m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = view(r, c);
        }
    return m;
}

py::dict distribution(const WeightEnumerator& we) {
    py::dict d;
    for (auto [w, c] : we.distribution) d[py::int_(w)] = py::int_(c);
    return d;
}

py::dict form_stats(const AlternatingForm& sigma, const AlternatingForm& theta) {
    const int n = static_cast<int>(sigma.n()), q = sigma.field().q();
    const fm::Int n1 = count_N1(sigma, theta);
    const fm::Int eta = count_common_isotropic_lines(sigma, theta);
    const fm::Int a = fm::ipow(q, static_cast<unsigned>(2 * n - 3));
    const fm::Int b = (fm::ipow(q, static_cast<unsigned>(2 * n)) - 1) * (a - 1) / (fm::Int(q - 1) * (q - 1));
    py::list dims;
    for (const auto& e : eigen_analysis(sigma, theta).pairs) dims.append(py::make_tuple(e.eigenvalue, e.space.dim()));
    py::dict d;
    d["N1"] = to_py(n1);
    d["eta"] = to_py(eta);
    d["weight"] = to_py(fm::length(n, 2, q) - eta);
    d["eigenspaces"] = dims;
    d["identity_residual"] = to_py((q + 1) * eta - a * n1 - b);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Symplectic Grassmann codes over small finite fields";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    m.def("length", [](int n, int k, int q) { return to_py(fm::length(n, k, q)); }, py::arg("n"), py::arg("k"),
          py::arg("q"));
    m.def("dimension", [](int n, int k) { return to_py(fm::dimension(n, k)); }, py::arg("n"), py::arg("k"));
    m.def("dmin_line", [](int n, int q) { return to_py(fm::dmin_line(n, q)); }, py::arg("n"), py::arg("q"));
    m.def("eta_max", [](int n, int q) { return to_py(fm::eta_max(n, q)); }, py::arg("n"), py::arg("q"));
    m.def("pz_upper", [](int n, int q) { return to_py(fm::pz_upper(n, q)); }, py::arg("n"), py::arg("q"));
    m.def("gaussian_binomial", [](int mm, int k, int q) { return to_py(fm::gaussian_binomial(mm, k, q)); },
          py::arg("m"), py::arg("k"), py::arg("q"));
    m.def(
        "grassmann_bound_line",
        [](int n, int q) {
            auto b = fm::grassmann_bound_line(n, q);
            py::dict d;
            d["value"] = to_py(b.value);
            d["numerator"] = to_py(b.numerator);
            d["denominator"] = to_py(b.denominator);
            d["integral"] = b.integral;
            return d;
        },
        py::arg("n"), py::arg("q"));
    m.def(
        "code_params",
        [](int n, int k, int q) {
            auto p = fm::code_params(n, k, q);
            py::dict d;
            d["N"] = to_py(p.N);
            d["K"] = to_py(p.K);
            d["d_min"] = p.d_min ? py::object(to_py(*p.d_min)) : py::none();
            return d;
        },
        py::arg("n"), py::arg("k"), py::arg("q"));
    m.def("w22_table", [](int q) { return distribution(fm::w22_table(q)); }, py::arg("q"));
    m.def("w33_table", [](int q) { return distribution(fm::w33_table(q)); }, py::arg("q"));

    m.def(
        "count_isotropic",
        [](std::size_t n, std::size_t k, int q) {
            py::gil_scoped_release nogil;
            return count_isotropic(n, k, Field::get(q));
        },
        py::arg("n"), py::arg("k"), py::arg("q"));
    m.def(
        "plucker_points", [](std::size_t n, std::size_t k, int q) { return to_numpy(plucker_point_matrix(n, k, Field::get(q))); },
        py::arg("n"), py::arg("k"), py::arg("q"), "Normalized Plücker coordinates, one point per row.");

    py::class_<LinearCode>(m, "LinearCode")
        .def_readonly("n", &LinearCode::n)
        .def_readonly("k", &LinearCode::k)
        .def_readonly("N", &LinearCode::N)
        .def_readonly("K", &LinearCode::K)
        .def_property_readonly("q", [](const LinearCode& c) { return c.field().q(); })
        .def_property_readonly("generator", [](const LinearCode& c) { return to_numpy(c.generator); })
        .def("__repr__", [](const LinearCode& c) {
            return "<LinearCode [" + std::to_string(c.N) + "," + std::to_string(c.K) + "] over GF(" +
                   std::to_string(c.field().q()) + ")>";
        });

    m.def("build_code", [](int n, int k, int q, double budget) { return build_code(n, k, Field::get(q), budget); },
          py::arg("n"), py::arg("k"), py::arg("q"), py::arg("budget") = kDefaultBudget);
    m.def(
        "code_from_generator", [](int q, const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& g) {
            return code_from_generator(from_numpy(q, g));
        },
        py::arg("q"), py::arg("generator"));
    m.def(
        "weight_enumerator",
        [](const LinearCode& code, const std::string& method, unsigned threads, double budget) {
            WeightEnumerator we;
            {
                py::gil_scoped_release nogil;
                we = weight_enumerator(code, parse_sweep_method(method), {threads, budget});
            }
            return distribution(we);
        },
        py::arg("code"), py::arg("method") = "codeword", py::arg("threads") = 1, py::arg("budget") = kDefaultBudget);
    m.def(
        "min_distance",
        [](const LinearCode& code, unsigned threads, double budget) {
            py::gil_scoped_release nogil;
            return min_distance(code, std::nullopt, {threads, budget});
        },
        py::arg("code"), py::arg("threads") = 1, py::arg("budget") = kDefaultBudget);
    m.def("sweep_cost", [](const LinearCode& c, const std::string& method) { return sweep_cost(c, parse_sweep_method(method)); },
          py::arg("code"), py::arg("method") = "codeword");

    m.def(
        "worst_case_eta",
        [](std::size_t n, int q) {
            auto sigma = standard_symplectic(n, Field::get(q));
            return form_stats(sigma, worst_case_theta(sigma));
        },
        py::arg("n"), py::arg("q"), "Line counts for the form that attains the minimum distance.");
    m.def(
        "random_eta",
        [](std::size_t n, int q, std::uint64_t seed, int trials) {
            auto sigma = standard_symplectic(n, Field::get(q));
            std::mt19937_64 rng(seed);
            py::list out;
            for (int i = 0; i < trials; ++i) out.append(form_stats(sigma, random_theta(sigma, rng)));
            return out;
        },
        py::arg("n"), py::arg("q"), py::arg("seed") = 1, py::arg("trials") = 10);
}
