#include "sphcav/sphcav.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <numbers>

namespace py = pybind11;
using namespace sphcav;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

spectrum::CavityConfig make_config(double radius_mm, double wedge_deg, double cone_deg, const std::string& faces)
{
    spectrum::CavityConfig c;
    c.radius_m = radius_mm * 1e-3;
    c.wedge_opening_deg = wedge_deg;
    c.cone_half_angle_deg = cone_deg;
    if (faces == "pec-pmc") {
        c.faces = angular::WedgeFaces::PecPmc;
    } else if (faces != "pec-pec") {
        throw DomainError("faces must be 'pec-pec' or 'pec-pmc'");
    }
    c.validate();
    return c;
}

Polarization parse_pol(const std::string& s)
{
    if (s == "TM" || s == "tm") {
        return Polarization::TM;
    }
    if (s == "TE" || s == "te") {
        return Polarization::TE;
    }
    throw DomainError("polarization must be 'TM' or 'TE'");
}

py::dict record_dict(const spectrum::ModeRecord& r)
{
    py::dict d;
    d["pol"] = std::string(to_string(r.polarization));
    d["nu"] = r.nu;
    d["m"] = r.m;
    d["k"] = r.k ? py::cast(*r.k) : py::none();
    d["branch"] = r.branch ? py::cast(*r.branch) : py::none();
    d["n"] = r.n;
    d["x"] = r.root_x;
    d["f_ghz"] = r.frequency_hz / 1e9;
    d["family"] = std::string(angular::to_string(r.family));
    return d;
}

py::list records(const std::vector<spectrum::ModeRecord>& rs)
{
    py::list out;
    for (const auto& r : rs) {
        out.append(record_dict(r));
    }
    return out;
}

fields::ModeSpec mode_from(const std::string& pol, double nu, double m, int n, double radius_mm, double wedge_deg,
                           double cone_deg, int sign)
{
    const auto cfg = make_config(radius_mm, wedge_deg, cone_deg, "pec-pec");
    return fields::make_mode(parse_pol(pol), nu, m, n, cfg.radius_m, cfg.domain(), {1.0, 0.0}, {}, sign);
}

} // namespace

PYBIND11_MODULE(_core, mod)
{
    mod.doc() = "Spherical cavity resonator modes with wedge and cone boundaries";

    auto base = py::register_exception<Error>(mod, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(mod, "DomainError", PyExc_ValueError);
    py::register_exception<LookupError>(mod, "NotFoundError", PyExc_KeyError);
    py::register_exception<ConvergenceError>(mod, "ConvergenceError", base.ptr());
    py::register_exception<RootError>(mod, "RootError", base.ptr());
    py::register_exception<SearchError>(mod, "SearchError", base.ptr());
    py::register_exception<EvaluationError>(mod, "EvaluationError", base.ptr());
    py::register_exception<ClassificationError>(mod, "ClassificationError", base.ptr());
    py::register_exception<IntegrationError>(mod, "IntegrationError", base.ptr());
    py::register_exception<UndefinedImpedanceError>(mod, "UndefinedImpedanceError", base.ptr());

    // special functions
    mod.def("hyp2f1", [](double a, double b, double c, double z) { return specfun::hyp2f1(a, b, c, z); },
            py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));
    mod.def("spherical_j", &specfun::spherical_j, py::arg("nu"), py::arg("x"));
    mod.def("riccati_deriv", &specfun::riccati_deriv, py::arg("nu"), py::arg("x"));
    mod.def(
        "legendre_theta",
        [](double nu, double m, double theta) {
            const auto v = specfun::legendre_theta_pair(nu, m, theta);
            return py::make_tuple(v.value, v.deriv);
        },
        py::arg("nu"), py::arg("m"), py::arg("theta"), "North-regular polar function and its theta derivative");

    // angular
    mod.def(
        "azimuthal_indices",
        [](double opening_deg, int count, const std::string& faces) {
            return angular::azimuthal_indices(make_config(15.0, opening_deg, 0.0, faces).domain(), count);
        },
        py::arg("opening_deg"), py::arg("count"), py::arg("faces") = "pec-pec");
    mod.def(
        "classify",
        [](double nu, double m, bool cone) { return std::string(angular::to_string(angular::classify(nu, m, cone))); },
        py::arg("nu"), py::arg("m"), py::arg("cone_present") = false);
    mod.def("south_singular_coefficient", &angular::south_singular_coefficient, py::arg("nu"), py::arg("m"));
    mod.def(
        "cone_nu",
        [](double m, double theta_c_deg, const std::string& pol, int branch) {
            return angular::cone_nu(m, theta_c_deg * kDeg, parse_pol(pol), branch);
        },
        py::arg("m"), py::arg("theta_c_deg"), py::arg("pol") = "TM", py::arg("branch") = 1);

    // radial
    mod.def("j_zero", [](double nu, int n) { return radial::j_zero(nu, n).x; }, py::arg("nu"), py::arg("n") = 1);
    mod.def("riccati_deriv_zero", [](double nu, int n) { return radial::riccati_deriv_zero(nu, n).x; },
            py::arg("nu"), py::arg("n") = 1);
    mod.def("frequency_from_root", &radial::frequency_from_root, py::arg("x"), py::arg("radius_m"));
    mod.def(
        "mcmahon_seed",
        [](double nu, int n, const std::string& pol) {
            return radial::mcmahon_seed(nu, n, radial::kind_for(parse_pol(pol)));
        },
        py::arg("nu"), py::arg("n") = 1, py::arg("pol") = "TE");

    // spectrum
    mod.def(
        "modes",
        [](double radius_mm, double wedge_deg, double cone_deg, std::optional<double> fmax_ghz, int count,
           const std::string& faces) {
            const auto cfg = make_config(radius_mm, wedge_deg, cone_deg, faces);
            return records(fmax_ghz ? spectrum::enumerate_modes(cfg, *fmax_ghz * 1e9)
                                    : spectrum::enumerate_lowest(cfg, count));
        },
        py::arg("radius_mm") = 15.0, py::arg("wedge_deg") = 360.0, py::arg("cone_deg") = 0.0,
        py::arg("fmax_ghz") = py::none(), py::arg("count") = 10, py::arg("faces") = "pec-pec");
    mod.def(
        "fundamental_tm",
        [](double radius_mm, double wedge_deg, double cone_deg) {
            return record_dict(spectrum::fundamental_tm(make_config(radius_mm, wedge_deg, cone_deg, "pec-pec")));
        },
        py::arg("radius_mm") = 15.0, py::arg("wedge_deg") = 360.0, py::arg("cone_deg") = 0.0);
    mod.def(
        "dispersion_table",
        [](const std::vector<double>& nus, double radius_mm) {
            py::list out;
            for (const auto& r : spectrum::dispersion_table(nus, radius_mm * 1e-3)) {
                out.append(py::dict(py::arg("nu") = r.nu, py::arg("x_te") = r.x_te, py::arg("f_te_ghz") = r.f_te_hz / 1e9,
                                    py::arg("x_tm") = r.x_tm, py::arg("f_tm_ghz") = r.f_tm_hz / 1e9));
            }
            return out;
        },
        py::arg("nu_list"), py::arg("radius_mm") = 15.0);
    mod.def(
        "cone_sweep",
        [](const std::vector<double>& thetas, double radius_mm, double wedge_deg) {
            py::list out;
            for (const auto& r : spectrum::cone_sweep(make_config(radius_mm, wedge_deg, 0.0, "pec-pec"), thetas)) {
                out.append(py::dict(py::arg("theta_c_deg") = r.theta_c_deg, py::arg("m") = r.m, py::arg("nu") = r.nu,
                                    py::arg("x") = r.root_x, py::arg("f_ghz") = r.frequency_hz / 1e9));
            }
            return out;
        },
        py::arg("thetas_deg"), py::arg("radius_mm") = 15.0, py::arg("wedge_deg") = 360.0);
    mod.def(
        "wedge_sweep",
        [](const std::vector<double>& openings, double radius_mm, double cone_deg) {
            py::list out;
            for (const auto& r :
                 spectrum::wedge_sweep(make_config(radius_mm, 360.0, cone_deg, "pec-pec"), openings)) {
                out.append(py::dict(py::arg("opening_deg") = r.opening_deg, py::arg("m") = r.m, py::arg("nu") = r.nu,
                                    py::arg("x") = r.root_x, py::arg("f_ghz") = r.frequency_hz / 1e9));
            }
            return out;
        },
        py::arg("openings_deg"), py::arg("radius_mm") = 15.0, py::arg("cone_deg") = 0.0);
    mod.def("fixture_names", &spectrum::fixture_names);
    mod.def(
        "validate",
        [](const std::string& name) {
            const auto rep = spectrum::validate(name);
            py::list rows;
            for (const auto& r : rep.rows) {
                py::dict d;
                d["label"] = r.label;
                d["f_theory_ghz"] = r.f_theory_ghz;
                d["f_reference_ghz"] = r.f_reference_ghz;
                d["f_computed_ghz"] = r.f_computed_ghz;
                d["dev_theory_pct"] = r.dev_theory_pct;
                d["dev_reference_pct"] = r.dev_reference_pct;
                rows.append(d);
            }
            py::dict d;
            d["fixture"] = rep.fixture;
            d["passed"] = rep.passed;
            d["max_dev_theory_pct"] = rep.max_dev_theory_pct;
            d["max_dev_reference_pct"] = rep.max_dev_reference_pct;
            d["rows"] = rows;
            return d;
        },
        py::arg("fixture"));

    // fields and energy; lengths in mm, angles in degrees
    mod.def(
        "field",
        [](const std::string& pol, double nu, double m, int n, double r_mm, double theta_deg, double phi_deg,
           double radius_mm, double wedge_deg, double cone_deg, int sign) {
            const auto mode = mode_from(pol, nu, m, n, radius_mm, wedge_deg, cone_deg, sign);
            const auto s = fields::evaluate(mode, r_mm * 1e-3, theta_deg * kDeg, phi_deg * kDeg);
            py::dict d;
            d["E"] = s.E;
            d["H"] = s.H;
            d["S"] = fields::poynting(s);
            return d;
        },
        py::arg("pol"), py::arg("nu"), py::arg("m"), py::arg("n"), py::arg("r_mm"), py::arg("theta_deg"),
        py::arg("phi_deg"), py::arg("radius_mm") = 15.0, py::arg("wedge_deg") = 360.0, py::arg("cone_deg") = 0.0,
        py::arg("sign") = 1);
    mod.def(
        "wave_impedances",
        [](const std::string& pol, double nu, double m, int n, double r_mm, double theta_deg, double radius_mm,
           double wedge_deg) {
            const auto mode = mode_from(pol, nu, m, n, radius_mm, wedge_deg, 0.0, 1);
            const auto z = fields::wave_impedances(mode, r_mm * 1e-3, theta_deg * kDeg);
            return py::make_tuple(z.z_te, z.z_tm);
        },
        py::arg("pol"), py::arg("nu"), py::arg("m"), py::arg("n"), py::arg("r_mm"), py::arg("theta_deg"),
        py::arg("radius_mm") = 15.0, py::arg("wedge_deg") = 360.0);
    mod.def(
        "mode_energy",
        [](const std::string& pol, double nu, double m, int n, double radius_mm, double wedge_deg, double cone_deg) {
            const auto rep = energy::mode_energy(mode_from(pol, nu, m, n, radius_mm, wedge_deg, cone_deg, 1));
            py::dict d;
            d["radial_integrable"] = rep.radial_integrable;
            d["angular_norm"] = rep.angular_norm;
            d["total"] = rep.total_energy;
            d["electric"] = rep.electric_energy;
            d["magnetic"] = rep.magnetic_energy;
            return d;
        },
        py::arg("pol"), py::arg("nu"), py::arg("m"), py::arg("n"), py::arg("radius_mm") = 15.0,
        py::arg("wedge_deg") = 360.0, py::arg("cone_deg") = 0.0);
    mod.def("sectoral_angular_norm", &energy::sectoral_angular_norm, py::arg("m"));
    mod.def("zonal_norm", &energy::zonal_norm, py::arg("ell"));
}
