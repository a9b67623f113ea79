#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "plunge/errors.hpp"
#include "plunge/experiment.hpp"
#include "plunge/special.hpp"

namespace py = pybind11;
using namespace plunge;

namespace {

using BoolArray = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

BoolArray to_array(const BinaryMask& mask) {
    BoolArray out(mask.rows(), mask.cols());
    for (int r = 0; r < mask.rows(); ++r) {
        for (int c = 0; c < mask.cols(); ++c) out(r, c) = mask(r, c);
    }
    return out;
}

BinaryMask from_array(const BoolArray& cells) {
    BinaryMask mask(static_cast<int>(cells.rows()), static_cast<int>(cells.cols()));
    for (int r = 0; r < mask.rows(); ++r) {
        for (int c = 0; c < mask.cols(); ++c) mask.set(r, c, cells(r, c));
    }
    return mask;
}

ExperimentConfig make_config(const std::string& shape, int a, int M, const std::string& window, int box_width, double delta,
                             std::uint64_t seed, double scale) {
    ExperimentConfig c;
    c.shape = shape_kind_from_string(shape);
    c.a = a;
    c.M = M;
    c.window = window_kind_from_string(window);
    c.box_width = box_width;
    c.delta = delta;
    c.shape_options.seed = seed;
    c.shape_options.scale = scale;
    c.validate();
    return c;
}

py::dict report_dict(const ExperimentReport& r) {
    py::dict d;
    d["label"] = r.label;
    d["a"] = r.lattice.a;
    d["M"] = r.lattice.M;
    d["area"] = r.measure.area;
    d["perimeter"] = r.measure.perimeter;
    d["components"] = r.measure.components;
    d["eigenvalues"] = r.spectrum.eigenvalues;
    d["linf_error"] = r.linf_error;
    d["plunge_count"] = r.plunge.count;
    d["ratio"] = r.ratio;
    d["warnings"] = r.measure.warnings;
    return d;
}

Window window_by_name(const std::string& name, int L, int box_width) {
    switch (window_kind_from_string(name)) {
        case WindowKind::gauss: return periodized_gaussian(L);
        case WindowKind::box: return box_window(L, box_width > 0 ? box_width : default_box_width(L));
        default: throw ValidationError("window must be gauss or box");
    }
}

}  // namespace

PYBIND11_MODULE(_plunge, m) {
    m.doc() = "Plunge-region eigenvalues of Gabor frame multipliers";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    m.def("erfc", &plunge::erfc, py::arg("x"));
    m.def("erfc_inv", &plunge::erfc_inv, py::arg("y"));
    m.def("disk_eigenvalue", &disk_eigenvalue, py::arg("k"), py::arg("radius"));
    m.def("disk_profile", &disk_profile, py::arg("k"), py::arg("radius"));
    m.def("annulus_unordered", [](long k, double R, double r) { return annulus_unordered(k, {R, r}); }, py::arg("k"),
          py::arg("radius"), py::arg("inner_ratio"));
    m.def("disk_profile_error", &disk_profile_error, py::arg("radius"));
    m.def("decreasing_rearrangement", [](const std::vector<double>& v) { return decreasing_rearrangement(v); },
          py::arg("samples"));
    m.def("two_erfc_rearranged", [](double a, double b, double A, double B, double x) {
        return two_erfc_rearranged({a, b, A, B}, x);
    }, py::arg("a"), py::arg("b"), py::arg("A"), py::arg("B"), py::arg("x"));
    m.def("erfc_profile", [](double area, double boundary, double k) { return erfc_profile({area, boundary}, k); },
          py::arg("area"), py::arg("boundary"), py::arg("k"));
    m.def("counting_function", [](double area, double boundary, double lambda) {
        return counting_function({area, boundary}, lambda);
    }, py::arg("area"), py::arg("boundary"), py::arg("lam"));

    m.def("make_shape", [](const std::string& kind, int M, double scale, std::uint64_t seed) {
        return to_array(make_shape(shape_kind_from_string(kind), M, {.scale = scale, .seed = seed}));
    }, py::arg("kind"), py::arg("M"), py::arg("scale") = 1.0, py::arg("seed") = kDefaultSeed);
    m.def("shape_kinds", [] {
        std::vector<std::string> names;
        for (ShapeKind k : all_shape_kinds()) names.push_back(to_string(k));
        return names;
    });
    m.def("load_mask", [](const std::filesystem::path& p) { return to_array(load_mask(p)); }, py::arg("path"));
    m.def("save_mask", [](const BoolArray& cells, const std::filesystem::path& p) { save_mask(from_array(cells), p); },
          py::arg("mask"), py::arg("path"));
    m.def("measure", [](const BoolArray& cells, int a, int M) {
        const SymbolMeasure s = measure(from_array(cells), LatticeParams::make(a, M));
        py::dict d;
        d["area"] = s.area;
        d["perimeter"] = s.perimeter;
        d["components"] = s.components;
        d["raw_pixels"] = s.raw_pixels;
        d["raw_chain"] = s.raw_chain;
        d["raw_perimeter"] = s.raw_perimeter;
        d["warnings"] = s.warnings;
        return d;
    }, py::arg("mask"), py::arg("a"), py::arg("M"));

    m.def("window", [](const std::string& kind, int L, int box_width) { return window_by_name(kind, L, box_width).values; },
          py::arg("kind"), py::arg("L"), py::arg("box_width") = 0);
    m.def("dgt", [](const Eigen::VectorXcd& f, const std::string& window, int a, int M, bool tight) {
        const auto lattice = LatticeParams::make(a, M);
        Window w = window_by_name(window, lattice.length(), 0);
        if (tight) w = tight_window(w, lattice);
        return dgt(f, w, lattice);
    }, py::arg("f"), py::arg("window"), py::arg("a"), py::arg("M"), py::arg("tight") = true);
    m.def("frame_multiplier", [](const BoolArray& cells, int a, int M, const std::string& window, int box_width, bool normalize) {
        const auto lattice = LatticeParams::make(a, M);
        return frame_multiplier(from_array(cells), window_by_name(window, lattice.length(), box_width), lattice, normalize).matrix;
    }, py::arg("mask"), py::arg("a"), py::arg("M"), py::arg("window") = "gauss", py::arg("box_width") = 0,
       py::arg("normalize") = true);
    m.def("hermitian_eigvals", [](const Eigen::MatrixXcd& A) { return hermitian_eig(A).eigenvalues; }, py::arg("A"));

    m.def("run_experiment", [](const std::string& shape, int a, int M, const std::string& window, int box_width, double delta,
                               std::uint64_t seed, double scale) {
        return report_dict(run_experiment(make_config(shape, a, M, window, box_width, delta, seed, scale)));
    }, py::arg("shape") = "disk", py::arg("a") = 10, py::arg("M") = 100, py::arg("window") = "gauss", py::arg("box_width") = 0,
       py::arg("delta") = 0.1, py::arg("seed") = kDefaultSeed, py::arg("scale") = 1.0);
    m.def("run_experiment_mask", [](const BoolArray& cells, int a, int M, const std::string& window, double delta) {
        ExperimentConfig c = make_config("disk", a, M, window, 0, delta, kDefaultSeed, 1.0);
        return report_dict(run_experiment(c, from_array(cells)));
    }, py::arg("mask"), py::arg("a"), py::arg("M"), py::arg("window") = "gauss", py::arg("delta") = 0.1);

    m.def("table1_reference", [] {
        py::list rows;
        for (const auto& e : table1_reference()) {
            py::dict d;
            d["symbol"] = e.symbol;
            d["kind"] = to_string(e.kind);
            d["a"] = e.a;
            d["M"] = e.M;
            d["max_error"] = e.max_error;
            d["ratio_min"] = e.ratio_min;
            d["ratio_max"] = e.ratio_max;
            rows.append(d);
        }
        return rows;
    });
}
