#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptsusy/elliptic.hpp"
#include "ptsusy/errors.hpp"
#include "ptsusy/numerics.hpp"
#include "ptsusy/sl2c.hpp"
#include "ptsusy/spectral.hpp"
#include "ptsusy/susy.hpp"
#include "ptsusy/verify.hpp"

namespace py = pybind11;
using namespace ptsusy;

namespace {

ScalarField make_field(std::function<double(double)> value,
                       std::function<double(double)> derivative) {
    ScalarField f;
    f.value = std::move(value);
    if (derivative) f.derivative = std::move(derivative);
    return f;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Complex SUSY partner potentials, sl(2,C) families and the Weierstrass pair";

    py::class_<Grid>(m, "Grid")
        .def(py::init<double, double, int>(), py::arg("x_min"), py::arg("x_max"),
             py::arg("n_points"))
        .def_static("interior", &Grid::interior, py::arg("a"), py::arg("b"), py::arg("n_points"))
        .def_property_readonly("x_min", &Grid::x_min)
        .def_property_readonly("x_max", &Grid::x_max)
        .def_property_readonly("n_points", &Grid::n_points)
        .def_property_readonly("spacing", &Grid::spacing)
        .def("points", &Grid::points)
        .def("__getitem__", [](const Grid& g, int i) {
            if (i < 0 || i >= g.n_points()) throw py::index_error();
            return g[i];
        })
        .def("__len__", &Grid::n_points);

    py::class_<SampledFunction>(m, "SampledFunction")
        .def_readonly("grid", &SampledFunction::grid)
        .def_readonly("values", &SampledFunction::values)
        .def("__len__", &SampledFunction::size);

    m.def("l2_norm", &l2_norm);
    m.def("max_abs", &max_abs);
    m.def("max_abs_difference", &max_abs_difference);

    py::class_<CubicRoots>(m, "CubicRoots")
        .def_readonly("e1", &CubicRoots::e1)
        .def_readonly("e2", &CubicRoots::e2)
        .def_readonly("e3", &CubicRoots::e3)
        .def_readonly("all_real", &CubicRoots::all_real);
    m.def("solve_depressed_cubic", &solve_depressed_cubic, py::arg("g2"), py::arg("g3"));

    py::class_<ScalarField>(m, "ScalarField")
        .def(py::init(&make_field), py::arg("value"), py::arg("derivative") = nullptr)
        .def("__call__", [](const ScalarField& f, double x) { return f.value(x); });

    py::class_<SuperpotentialSpec>(m, "SuperpotentialSpec")
        .def(py::init([](const ScalarField& f, const ScalarField& g, double e_r, double e_i) {
                 SuperpotentialSpec w;
                 w.f = f;
                 w.g = g;
                 w.E_R = e_r;
                 w.E_I = e_i;
                 return w;
             }),
             py::arg("f"), py::arg("g"), py::arg("E_R") = 0.0, py::arg("E_I") = 0.0)
        .def_readonly("E_R", &SuperpotentialSpec::E_R)
        .def_readonly("E_I", &SuperpotentialSpec::E_I)
        .def("f", [](const SuperpotentialSpec& w, double x) { return w.f.value(x); })
        .def("g", [](const SuperpotentialSpec& w, double x) { return w.g.value(x); })
        .def("W", &SuperpotentialSpec::W);

    py::class_<PartnerPair>(m, "PartnerPair")
        .def_readonly("v_plus_R", &PartnerPair::v_plus_R)
        .def_readonly("v_plus_I", &PartnerPair::v_plus_I)
        .def_readonly("v_minus_R", &PartnerPair::v_minus_R)
        .def_readonly("v_minus_I", &PartnerPair::v_minus_I)
        .def("v_plus", &PartnerPair::v_plus)
        .def("v_minus", &PartnerPair::v_minus);

    m.def("partner_potentials", &partner_potentials, py::arg("w"), py::arg("grid"),
          py::arg("allow_singular_endpoints") = false);
    m.def("apply_A", &apply_A);
    m.def("apply_A_dagger", &apply_A_dagger);
    m.def("intertwining_residual", &intertwining_residual);

    py::enum_<Sector>(m, "Sector")
        .value("plus", Sector::plus)
        .value("minus", Sector::minus)
        .value("neither", Sector::neither);
    py::class_<ZeroMode>(m, "ZeroMode")
        .def_readonly("psi", &ZeroMode::psi)
        .def_readonly("normalizable", &ZeroMode::normalizable);
    m.def("zero_mode", &zero_mode, py::arg("w"), py::arg("grid"), py::arg("sector"));
    m.def("sector_selector", &sector_selector);

    py::class_<PtCheck>(m, "PtCheck")
        .def_readonly("violation", &PtCheck::violation)
        .def_readonly("threshold", &PtCheck::threshold)
        .def_readonly("symmetric", &PtCheck::symmetric);
    m.def("pt_symmetry_check", &pt_symmetry_check, py::arg("v"), py::arg("mirror"));

    py::enum_<Sl2cCase>(m, "Sl2cCase")
        .value("I", Sl2cCase::I)
        .value("II", Sl2cCase::II)
        .value("III", Sl2cCase::III);
    py::class_<Sl2cFamily>(m, "Sl2cFamily")
        .def(py::init([](Sl2cCase case_tag, double m_label, double b_R, double b_I, double c,
                         double gamma, int sign) {
                 Sl2cFamily f{case_tag, m_label, b_R, b_I, c, gamma, sign};
                 validate(f);
                 return f;
             }),
             py::arg("case_tag"), py::arg("m"), py::arg("b_R") = 0.0, py::arg("b_I") = 0.0,
             py::arg("c") = 0.0, py::arg("gamma") = 0.0, py::arg("sign") = 1)
        .def_readonly("case_tag", &Sl2cFamily::case_tag)
        .def_readonly("m", &Sl2cFamily::m)
        .def_readonly("b_R", &Sl2cFamily::b_R)
        .def_readonly("b_I", &Sl2cFamily::b_I)
        .def_readonly("c", &Sl2cFamily::c)
        .def_readonly("gamma", &Sl2cFamily::gamma)
        .def_readonly("sign", &Sl2cFamily::sign)
        .def("with_m", &Sl2cFamily::with_m);

    m.def("eval_F_G", &eval_F_G, py::arg("family"), py::arg("x"));
    m.def("constraint_residual", &constraint_residual, py::arg("family"), py::arg("grid"),
          py::arg("perturb_F") = 0.0);
    m.def("potential_Vm", &potential_Vm);
    m.def("potential_Vm_closed", &potential_Vm_closed);

    py::class_<FamilySpectrum>(m, "FamilySpectrum")
        .def_readonly("m", &FamilySpectrum::m)
        .def_readonly("levels", &FamilySpectrum::levels);
    m.def("family_spectrum", &family_spectrum, py::arg("m"));
    m.def("bridge_superpotential", &bridge_superpotential);
    m.def("shape_invariance_residual", &shape_invariance_residual);

    py::class_<EllipticParams>(m, "EllipticParams")
        .def(py::init([](double e_r, double a, double c) {
                 return EllipticParams{e_r, a, c};
             }),
             py::arg("E_R"), py::arg("a"), py::arg("c") = 0.0)
        .def_readonly("E_R", &EllipticParams::E_R)
        .def_readonly("a", &EllipticParams::a)
        .def_readonly("c", &EllipticParams::c);

    py::enum_<WRegime>(m, "WRegime")
        .value("nondegenerate_positive", WRegime::nondegenerate_positive)
        .value("nondegenerate_negative", WRegime::nondegenerate_negative)
        .value("degenerate", WRegime::degenerate);

    py::class_<WeierstrassData>(m, "WeierstrassData")
        .def_readonly("g2", &WeierstrassData::g2)
        .def_readonly("g3", &WeierstrassData::g3)
        .def_readonly("roots", &WeierstrassData::roots)
        .def_readonly("D", &WeierstrassData::D)
        .def_readonly("regime", &WeierstrassData::regime)
        .def_readonly("omega", &WeierstrassData::omega);

    m.def("invariants_from", &invariants_from);
    m.def("complete_elliptic_K", &complete_elliptic_K);
    m.def("jacobi_elliptic", [](double u, double k) {
        auto r = jacobi_elliptic(u, k);
        return py::make_tuple(r.sn, r.cn, r.dn);
    });
    m.def("wp", &wp, py::arg("z"), py::arg("data"));
    m.def("wp_prime", &wp_prime, py::arg("z"), py::arg("data"));
    m.def("g_of_z", &g_of_z);
    m.def("f_of_z", &f_of_z);
    m.def("elliptic_superpotential", &elliptic_superpotential);
    m.def("elliptic_pair", &elliptic_pair);
    m.def("zero_mode_modulus", &zero_mode_modulus);
    m.def("zero_mode_plateau", &zero_mode_plateau);

    py::enum_<BoundaryKind>(m, "BoundaryKind")
        .value("dirichlet_both", BoundaryKind::dirichlet_both)
        .value("dirichlet_left_decay_right", BoundaryKind::dirichlet_left_decay_right);

    py::class_<SpectralProblem>(m, "SpectralProblem")
        .def(py::init([](const SampledFunction& potential, BoundaryKind boundary, double e_lo,
                         double e_hi, int scan_points, double match_fraction) {
                 return SpectralProblem{potential, boundary, e_lo, e_hi, scan_points,
                                        match_fraction};
             }),
             py::arg("potential"), py::arg("boundary") = BoundaryKind::dirichlet_both,
             py::arg("e_lo") = 0.0, py::arg("e_hi") = 1.0, py::arg("scan_points") = 400,
             py::arg("match_fraction") = 0.5);

    py::class_<EigenvalueHit>(m, "EigenvalueHit")
        .def_readonly("E", &EigenvalueHit::E)
        .def_readonly("mismatch", &EigenvalueHit::mismatch)
        .def_readonly("n_nodes_real_part", &EigenvalueHit::n_nodes_real_part);

    py::class_<SpectrumResult>(m, "SpectrumResult")
        .def_readonly("eigenvalues", &SpectrumResult::eigenvalues)
        .def_readonly("diagnostics", &SpectrumResult::diagnostics);

    m.def("shoot", &shoot, py::arg("problem"), py::arg("E"));
    m.def("find_spectrum", &find_spectrum);
    m.def("operator_residual", &operator_residual, py::arg("potential"), py::arg("psi"),
          py::arg("E"));

    m.def(
        "sample",
        [](const Grid& g, const std::function<complex(double)>& fn) {
            return SampledFunction::sample(g, fn);
        },
        py::arg("grid"), py::arg("fn"));

    m.def("run_verification", [](double perturb) {
        auto results = run_verification(VerifyOptions{perturb});
        py::list out;
        for (const auto& r : results) {
            py::dict d;
            d["name"] = r.name;
            d["passed"] = r.passed;
            d["detail"] = r.detail;
            d["elapsed_s"] = r.elapsed_s;
            out.append(d);
        }
        return out;
    }, py::arg("perturb") = 0.0);

    py::register_exception<integration_overflow>(m, "IntegrationOverflow", PyExc_RuntimeError);
    py::register_exception<bracket_error>(m, "BracketError", PyExc_ValueError);
    py::register_exception<unsupported_regime>(m, "UnsupportedRegime", PyExc_ValueError);
}
