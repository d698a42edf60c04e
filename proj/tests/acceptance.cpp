// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any fails.

#include "sphcav/sphcav.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace sphcav;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
    bool pass;
    std::string detail;
};

double pct(double got, double ref) { return 100.0 * std::abs(got - ref) / std::abs(ref); }

Outcome table1()
{
    const auto fx = spectrum::load_fixture("table1_dispersion");
    const double a = fx.number("radius_mm") * 1e-3;
    double dx = 0.0, df = 0.0;
    int count = 0;
    for (const auto& row : fx.rows) {
        const double nu = row.number("nu");
        const double xte = radial::j_zero(nu, 1).x;
        const double xtm = radial::riccati_deriv_zero(nu, 1).x;
        dx = std::max({dx, std::abs(xte - row.number("x_te")), std::abs(xtm - row.number("x_tm"))});
        df = std::max({df, std::abs(radial::frequency_from_root(xte, a) / 1e9 - row.number("f_te_ghz")),
                       std::abs(radial::frequency_from_root(xtm, a) / 1e9 - row.number("f_tm_ghz"))});
        count += 2;
    }
    return {count == 14 && dx <= 5e-4 && df <= 0.05,
            fmt::format("{} roots, max |dx| = {:.2e}, max |df| = {:.4f} GHz", count, dx, df)};
}

Outcome table2()
{
    const auto fx = spectrum::load_fixture("table2_wedge90");
    spectrum::CavityConfig cfg;
    cfg.radius_m = fx.number("radius_mm") * 1e-3;
    cfg.wedge_opening_deg = fx.number("opening_deg");
    const auto modes = spectrum::enumerate_lowest(cfg, static_cast<int>(fx.rows.size()));
    double dth = 0.0, dref = 0.0;
    bool order = true;
    for (size_t i = 0; i < fx.rows.size(); ++i) {
        const auto& row = fx.rows[i];
        const auto& md = modes[i];
        order = order && to_string(md.polarization) == row.text("pol") &&
                std::abs(md.nu - row.number("nu")) < 1e-9 && std::abs(md.m - row.number("m")) < 1e-9;
        const double f = md.frequency_hz / 1e9;
        dth = std::max(dth, pct(f, row.number("f_theory_ghz")));
        dref = std::max(dref, pct(f, row.number("f_reference_ghz")));
    }
    const double ref_bound = fx.number("reference_bound_pct") + spectrum::kReferenceSlackPct;
    return {order && dth <= fx.number("theory_bound_pct") && dref <= ref_bound,
            fmt::format("mode order {}, max theory dev {:.3f}% (<= {}), max reference dev {:.3f}% (<= {:.1f})",
                        order ? "matches" : "differs", dth, fx.number("theory_bound_pct"), dref, ref_bound)};
}

Outcome table3()
{
    const auto fx = spectrum::load_fixture("table3_cone");
    spectrum::CavityConfig cfg;
    cfg.radius_m = fx.number("radius_mm") * 1e-3;
    std::vector<double> angles;
    for (const auto& row : fx.rows) {
        angles.push_back(row.number("theta_c_deg"));
    }
    const auto rows = spectrum::cone_sweep(cfg, angles);
    double dnu = 0.0, df = 0.0;
    bool monotone = true;
    std::vector<double> nus;
    for (size_t i = 0; i < rows.size(); ++i) {
        dnu = std::max(dnu, std::abs(rows[i].nu - fx.rows[i].number("nu")));
        df = std::max(df, pct(rows[i].frequency_hz / 1e9, fx.rows[i].number("f_theory_ghz")));
        monotone = monotone && (i == 0 || rows[i].nu > rows[i - 1].nu);
        nus.push_back(rows[i].nu);
    }
    const auto fit = spectrum::linear_fit(angles, nus);
    const bool slope_ok = std::abs(fit.slope - 0.010) <= 0.002;
    const bool icpt_ok = std::abs(fit.intercept - 0.074) <= 0.01;
    return {dnu <= 0.005 && df <= 0.5 && monotone && slope_ok && icpt_ok,
            fmt::format("max |dnu| = {:.4f} (<= 0.005), max df = {:.3f}% (<= 0.5), monotone {}, slope {:.5f}/deg, "
                        "intercept {:.4f}",
                        dnu, df, monotone ? "yes" : "no", fit.slope, fit.intercept)};
}

Outcome table4()
{
    const auto fx = spectrum::load_fixture("table4_combined");
    double df = 0.0;
    bool below = true;
    std::string nus;
    for (const auto& row : fx.rows) {
        spectrum::CavityConfig cfg;
        cfg.radius_m = fx.number("radius_mm") * 1e-3;
        cfg.cone_half_angle_deg = fx.number("cone_deg");
        cfg.wedge_opening_deg = row.number("opening_deg");
        const auto f = spectrum::fundamental_tm(cfg);
        df = std::max(df, pct(f.frequency_hz / 1e9, row.number("f_theory_ghz")));
        below = below && f.nu < f.m;
        nus += fmt::format(" {:.4f}/{:.4f}", f.nu, f.m);
    }
    return {df <= 1.0 && below,
            fmt::format("max df = {:.3f}% (<= 1), nu < m on all rows: {}; nu/m:{}", df, below ? "yes" : "no", nus)};
}

Outcome sectoral()
{
    std::mt19937_64 rng(20240501);
    std::uniform_real_distribution<double> um(0.0, 5.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        double m = um(rng);
        if (m == 0.0) {
            m = 5.0;
        }
        for (int j = 1; j <= 200; ++j) {
            const double th = pi * j / 201.0;
            const auto v = specfun::legendre_theta_pair(m, m, th);
            const double s = std::sin(th), c = std::cos(th);
            const double d2 = m * (m - 1.0) * std::pow(s, m - 2.0) * c * c - m * std::pow(s, m);
            const double res = angular::angular_ode_residual(m, m, th, v.value, v.deriv, d2);
            const double scale = std::abs(d2) + std::abs(c / s * v.deriv) + std::abs(m * (m + 1.0) * v.value) +
                                 std::abs(m * m / (s * s) * v.value);
            worst = std::max(worst, std::abs(res) / scale);
        }
    }
    return {worst < 1e-9, fmt::format("max relative residual {:.2e} (< 1e-9)", worst)};
}

Outcome discreteness()
{
    bool zeros = true;
    double smallest_mid = 1e300;
    for (double m : {0.0, 0.5, 1.0}) {
        for (int k = 0; k <= 5; ++k) {
            zeros = zeros && angular::south_singular_coefficient(m + k, m) == 0.0;
        }
        for (double d : {0.5, 1.5, 2.5}) {
            smallest_mid = std::min(smallest_mid, std::abs(angular::south_singular_coefficient(m + d, m)));
        }
    }
    return {zeros && smallest_mid > 1e-3,
            fmt::format("exact zeros on the lattice: {}; min |c| at midpoints {:.4f} (> 1e-3)", zeros ? "yes" : "no",
                        smallest_mid)};
}

Outcome null_field()
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(1e-6, 1.0 - 1e-6);
    const double a = 0.015;
    int nonzero = 0;
    for (auto pol : {Polarization::TM, Polarization::TE}) {
        const auto mode = fields::make_mode(pol, 0.0, 0.0, 1, a);
        for (int i = 0; i < 100; ++i) {
            const auto s = fields::evaluate(mode, u(rng) * a, u(rng) * pi, u(rng) * 2.0 * pi);
            for (int c = 0; c < 3; ++c) {
                nonzero += s.E[c] != fields::cplx{} || s.H[c] != fields::cplx{};
            }
        }
    }
    return {nonzero == 0, fmt::format("{} nonzero components over 200 samples", nonzero)};
}

Outcome duality()
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.02, 0.98);
    const double a = 0.015;
    const std::vector<fields::ModeSpec> modes = {
        fields::make_mode(Polarization::TM, 1.0, 1.0, 1, a),
        fields::make_mode(Polarization::TE, 3.0, 2.0, 1, a),
        fields::make_mode(Polarization::TM, 7.0 / 3.0, 4.0 / 3.0, 1, a, {1.5 * pi}),
        fields::make_mode(Polarization::TE, 2.0 / 3.0, 2.0 / 3.0, 1, a, {1.5 * pi}),
        fields::make_mode(Polarization::TM, 2.5, 0.5, 1, a),
    };
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const auto& mode = modes[i % modes.size()];
        const auto z = fields::wave_impedances(mode, u(rng) * a, u(rng) * pi, u(rng) * mode.domain.azimuth_opening_rad);
        const double expect = -mode.medium.mu / mode.medium.epsilon;
        worst = std::max(worst, std::abs(z.z_te * z.z_tm - expect) / std::abs(expect));
    }
    return {worst <= 1e-12, fmt::format("max relative deviation {:.2e} (<= 1e-12) at 50 points", worst)};
}

Outcome mcmahon()
{
    double worst = 0.0;
    for (double nu : {5.0, 8.0, 12.0, 16.0, 20.0}) {
        for (auto kind : {radial::RootKind::TE_jzero, radial::RootKind::TM_riccati_deriv_zero}) {
            const double x = radial::root(nu, 1, kind).x;
            worst = std::max(worst, std::abs(radial::mcmahon_seed(nu, 1, kind) - x) / x);
        }
    }
    return {worst < 0.01, fmt::format("max relative seed error {:.4f}% (< 1%)", 100.0 * worst)};
}

Outcome norms()
{
    using boost::math::quadrature::gauss_kronrod;
    double worst = 0.0;
    for (int i = 1; i <= 50; ++i) {
        const double m = 0.1 * i;
        const double q = gauss_kronrod<double, 61>::integrate(
            [m](double t) { return std::pow(std::sin(t), 2.0 * m + 1.0); }, 0.0, pi, 15, 1e-14);
        worst = std::max(worst, std::abs(energy::sectoral_angular_norm(m) - q) / q);
    }
    bool exact = true;
    for (int l = 0; l <= 10; ++l) {
        exact = exact && energy::zonal_norm(l) == 2.0 / (2.0 * l + 1.0);
    }
    return {worst <= 1e-8 && exact,
            fmt::format("max relative gap {:.2e} (<= 1e-8) for m = 0.1..5; zonal exact: {}", worst,
                        exact ? "yes" : "no")};
}

Outcome wedge_inversion()
{
    const auto rows = spectrum::wedge_sweep(spectrum::CavityConfig{}, {180.0, 270.0});
    const double f180 = rows[0].frequency_hz;
    const double f270 = rows[1].frequency_hz;
    const double drop = 100.0 * (f180 - f270) / f180;
    return {drop >= 10.0,
            fmt::format("f(270) = {:.4f} GHz, f(180) = {:.4f} GHz, {:.2f}% lower (>= 10%)", f270 / 1e9, f180 / 1e9,
                        drop)};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"universal roots table", table1},
        {"90 degree wedge table", table2},
        {"polar cone table", table3},
        {"combined wedge and cone table", table4},
        {"sectoral exactness", sectoral},
        {"discreteness mechanism", discreteness},
        {"null field", null_field},
        {"impedance duality", duality},
        {"large-order seed accuracy", mcmahon},
        {"angular norm closed forms", norms},
        {"wedge below hemisphere", wedge_inversion},
    };
    int failed = 0;
    int idx = 0;
    for (const auto& [name, fn] : criteria) {
        ++idx;
        Outcome o{false, ""};
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        failed += !o.pass;
        fmt::print("{} {:>2} {}: {}\n", o.pass ? "PASS" : "FAIL", idx, name, o.detail);
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
