#include "oracles.hpp"

#include "sphcav/errors.hpp"
#include "sphcav/fields.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace sphcav;
using namespace sphcav::fields;
using doctest::Approx;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double a = 0.015;
const cplx I{0.0, 1.0};

double peak(const std::array<cplx, 3>& v)
{
    return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

using Vec = std::array<cplx, 3>;

// Spherical curl of the E or H field of `mode` by central differences.
Vec fd_curl(const ModeSpec& mode, bool of_e, double r, double th, double ph)
{
    auto F = [&](double rr, double tt, double pp) {
        const auto s = evaluate(mode, rr, tt, pp);
        return of_e ? s.E : s.H;
    };
    const double hr = 1e-6 * a;
    const double ht = 1e-6;
    const double hp = 1e-6;
    const double s = std::sin(th);

    const Vec fr_p = F(r + hr, th, ph), fr_m = F(r - hr, th, ph);
    const Vec ft_p = F(r, th + ht, ph), ft_m = F(r, th - ht, ph);
    const Vec fp_p = F(r, th, ph + hp), fp_m = F(r, th, ph - hp);

    const cplx dth_sin_fphi = (std::sin(th + ht) * ft_p[2] - std::sin(th - ht) * ft_m[2]) / (2.0 * ht);
    const cplx dph_ftheta = (fp_p[1] - fp_m[1]) / (2.0 * hp);
    const cplx dph_fr = (fp_p[0] - fp_m[0]) / (2.0 * hp);
    const cplx dr_r_fphi = ((r + hr) * fr_p[2] - (r - hr) * fr_m[2]) / (2.0 * hr);
    const cplx dr_r_ftheta = ((r + hr) * fr_p[1] - (r - hr) * fr_m[1]) / (2.0 * hr);
    const cplx dth_fr = (ft_p[0] - ft_m[0]) / (2.0 * ht);

    return {(dth_sin_fphi - dph_ftheta) / (r * s), (dph_fr / s - dr_r_fphi) / r, (dr_r_ftheta - dth_fr) / r};
}

void check_maxwell(const ModeSpec& mode, double r, double th, double ph)
{
    const auto s = evaluate(mode, r, th, ph);
    const double w = mode.omega();
    const Vec ce = fd_curl(mode, true, r, th, ph);
    const Vec ch = fd_curl(mode, false, r, th, ph);
    const double se = w * mode.medium.mu * peak(s.H);
    const double sh = w * mode.medium.epsilon * peak(s.E);
    for (int i = 0; i < 3; ++i) {
        CAPTURE(i);
        // exp(-i omega t): curl E = i omega mu H, curl H = -i omega eps E
        CHECK(std::abs(ce[i] - I * w * mode.medium.mu * s.H[i]) < 1e-6 * se);
        CHECK(std::abs(ch[i] + I * w * mode.medium.epsilon * s.E[i]) < 1e-6 * sh);
    }
}

} // namespace

TEST_SUITE("fields") {

TEST_CASE("null point gives the zero field")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ur(1e-3, 1.0), ut(1e-3, pi - 1e-3), up(0.0, 2.0 * pi);
    for (auto pol : {Polarization::TM, Polarization::TE}) {
        const auto mode = make_mode(pol, 0.0, 0.0, 1, a);
        CHECK(mode.eigenpair.family == angular::Family::Null);
        for (int i = 0; i < 100; ++i) {
            const auto s = evaluate(mode, ur(rng) * a, ut(rng), up(rng));
            for (int c = 0; c < 3; ++c) {
                CHECK(s.E[c] == cplx{0.0, 0.0});
                CHECK(s.H[c] == cplx{0.0, 0.0});
            }
        }
        CHECK_THROWS_AS(wave_impedances(mode, 0.5 * a, 1.0), UndefinedImpedanceError);
    }
}

TEST_CASE("structural zeros")
{
    for (double nu : {1.0, 2.0, 2.5}) {
        const double m = nu == 2.5 ? 0.5 : 1.0;
        const auto tm = make_mode(Polarization::TM, nu, m, 1, a);
        const auto te = make_mode(Polarization::TE, nu, m, 1, a);
        for (double th : {0.2, 1.1, 2.9}) {
            CHECK(evaluate(tm, 0.4 * a, th, 0.3).H[0] == cplx{0.0, 0.0});
            CHECK(evaluate(te, 0.4 * a, th, 0.3).E[0] == cplx{0.0, 0.0});
        }
    }
}

TEST_CASE("wall conditions")
{
    struct Case {
        double nu, m;
        angular::AngularDomain dom;
    };
    const Case cases[] = {
        {1.0, 1.0, {}},
        {3.0, 1.0, {}},
        {2.0 / 3.0, 2.0 / 3.0, {1.5 * pi}},
        {7.0 / 3.0, 4.0 / 3.0, {1.5 * pi}},
        {0.3735465534, 0.0, {2.0 * pi, 33.69 * pi / 180.0}},
    };
    for (const auto& c : cases) {
        for (auto pol : {Polarization::TM, Polarization::TE}) {
            CAPTURE(c.nu);
            const auto mode = make_mode(pol, c.nu, c.m, 1, a, c.dom);
            const double lo = c.dom.cone_half_angle_rad;
            double interior = 0.0;
            for (int i = 1; i < 20; ++i) {
                for (int j = 1; j < 20; ++j) {
                    const double th = lo + (pi - lo) * j / 20.0;
                    interior = std::max(interior, peak(evaluate(mode, a * i / 20.0, th, 0.37).E));
                }
            }
            REQUIRE(interior > 0.0);
            for (int j = 1; j < 40; ++j) {
                const double th = lo + (pi - lo) * j / 40.0;
                const auto s = evaluate(mode, a, th, 0.37);
                CHECK(std::abs(s.E[1]) < 1e-8 * interior);
                CHECK(std::abs(s.E[2]) < 1e-8 * interior);
            }
        }
    }
}

TEST_CASE("cone wall condition")
{
    const angular::AngularDomain dom{2.0 * pi, 20.0 * pi / 180.0};
    const double nu = angular::cone_nu(0.0, dom.cone_half_angle_rad, Polarization::TM, 1);
    const auto mode = make_mode(Polarization::TM, nu, 0.0, 1, a, dom);
    const double scale = peak(evaluate(mode, 0.5 * a, 1.5, 0.0).E);
    // tangential E on the cone is E_r and E_phi
    const auto s = evaluate(mode, 0.5 * a, dom.cone_half_angle_rad + 1e-12, 0.0);
    CHECK(std::abs(s.E[0]) < 1e-8 * scale);
    CHECK(std::abs(s.E[2]) < 1e-8 * scale);
}

TEST_CASE("finite-difference Maxwell equations")
{
    for (auto pol : {Polarization::TM, Polarization::TE}) {
        check_maxwell(make_mode(pol, 1.0, 1.0, 1, a), 0.47 * a, 0.9, 0.4);
        check_maxwell(make_mode(pol, 3.0, 2.0, 1, a, {}, {1.0, 0.0}, {}, -1), 0.63 * a, 2.1, 1.3);
        check_maxwell(make_mode(pol, 2.0 / 3.0, 2.0 / 3.0, 1, a, {1.5 * pi}), 0.55 * a, 1.2, 2.0);
        check_maxwell(make_mode(pol, 2.6, 0.6, 2, a), 0.71 * a, 2.7, 0.8);
        const angular::AngularDomain cone{2.0 * pi, 0.3};
        const double nu = angular::cone_nu(0.0, 0.3, pol, 1);
        check_maxwell(make_mode(pol, nu, 0.0, 1, a, cone), 0.5 * a, 2.95, 0.0);
    }
}

TEST_CASE("impedance duality")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ur(0.05, 0.95), ut(0.05, pi - 0.05), up(0.0, 1.0);
    const std::array<ModeSpec, 4> modes = {
        make_mode(Polarization::TM, 1.0, 1.0, 1, a),
        make_mode(Polarization::TE, 3.0, 2.0, 1, a),
        make_mode(Polarization::TM, 7.0 / 3.0, 4.0 / 3.0, 1, a, {1.5 * pi}),
        make_mode(Polarization::TE, 2.0 / 3.0, 2.0 / 3.0, 1, a, {1.5 * pi}, {0.3, -1.2},
                  {2.2 * constants::eps0, constants::mu0}),
    };
    for (int i = 0; i < 50; ++i) {
        const auto& mode = modes[i % 4];
        const double phi = up(rng) * (mode.domain.full_azimuth() ? 2.0 * pi : 0.8 * mode.domain.azimuth_opening_rad) +
                           (mode.domain.full_azimuth() ? 0.0 : 0.1);
        const auto z = wave_impedances(mode, ur(rng) * a, ut(rng), phi);
        const cplx expect = -mode.medium.mu / mode.medium.epsilon;
        CHECK(std::abs(z.z_te * z.z_tm - expect) < 1e-12 * std::abs(expect));
        CHECK_FALSE(z.zonal);
    }
    const double eta = Medium{}.eta();
    CHECK(eta == Approx(376.7303).epsilon(1e-6));
    CHECK(-eta * eta == Approx(-1.41926e5).epsilon(1e-5));
}

TEST_CASE("impedance phase")
{
    const auto trav = make_mode(Polarization::TE, 2.0, 1.0, 1, a);
    const auto zt = wave_impedances(trav, 0.4 * a, 1.0);
    CHECK(std::abs(zt.z_te.imag()) < 1e-12 * std::abs(zt.z_te));
    const auto stand = make_mode(Polarization::TE, 2.0 / 3.0, 2.0 / 3.0, 1, a, {1.5 * pi});
    const auto zs = wave_impedances(stand, 0.4 * a, 1.0);
    CHECK(std::abs(zs.z_te.real()) < 1e-12 * std::abs(zs.z_te));
}

TEST_CASE("zonal TM impedance has a finite limit at the centre")
{
    for (double nu : {1.0, 2.0, 0.3735465534}) {
        const angular::AngularDomain dom = nu < 1.0 ? angular::AngularDomain{2.0 * pi, 33.69 * pi / 180.0}
                                                    : angular::AngularDomain{};
        const auto mode = make_mode(Polarization::TM, nu, 0.0, 1, a, dom);
        const double w = mode.omega();
        for (double r : {1e-4 * a, 1e-5 * a}) {
            const auto z = wave_impedances(mode, r, 2.0);
            CHECK(z.zonal);
            const cplx scaled = r * z.z_tm * I * w * mode.medium.epsilon;
            CHECK(scaled.real() == Approx(nu + 1.0).epsilon(1e-6));
            CHECK(std::abs(scaled.imag()) < 1e-9);
        }
    }
}

TEST_CASE("Poynting vector")
{
    FieldSample zero;
    const auto s0 = poynting(zero);
    CHECK(s0 == std::array<double, 3>{0.0, 0.0, 0.0});

    // standing wave: S_phi averages to zero over azimuth
    const auto stand = make_mode(Polarization::TM, 2.0 / 3.0, 2.0 / 3.0, 1, a, {1.5 * pi});
    for (double ph : {0.1, 1.3, 3.9}) {
        CHECK(std::abs(poynting(evaluate(stand, 0.5 * a, 1.2, ph))[2]) < 1e-30);
    }

    // traveling TM: S_phi = s m omega eps r / (2 lambda sin theta) |E_r|^2
    for (int sign : {1, -1}) {
        const auto mode = make_mode(Polarization::TM, 3.0, 2.0, 1, a, {}, {1.0, 0.0}, {}, sign);
        const double lam = 12.0;
        for (double th : {0.4, 1.3, 2.6}) {
            const double r = 0.6 * a;
            const auto s = evaluate(mode, r, th, 0.7);
            const double S = poynting(s)[2];
            const double expect = sign * 2.0 * mode.omega() * mode.medium.epsilon * r / (2.0 * lam * std::sin(th)) *
                                  std::norm(s.E[0]);
            CHECK(S == Approx(expect).epsilon(1e-12));
            CHECK((S > 0) == (sign > 0));
        }
    }
}

TEST_CASE("azimuthal power")
{
    const auto plus = make_mode(Polarization::TM, 1.0, 1.0, 1, a);
    const auto minus = make_mode(Polarization::TM, 1.0, 1.0, 1, a, {}, {1.0, 0.0}, {}, -1);
    const double P = azimuthal_power(plus);
    CHECK(P > 0.0);
    CHECK(P == Approx(1.30276e-05).epsilon(1e-5));
    CHECK(azimuthal_power(minus) == Approx(-P).epsilon(1e-12));
    CHECK(azimuthal_power(make_mode(Polarization::TM, 2.0, 0.0, 1, a)) == 0.0);

    // fixed-grid Simpson oracle over (r, theta); endpoints carry zero weight in the integrand
    auto integrand = [&](double r, double th) {
        if (r <= 0.0 || th <= 0.0 || th >= pi) {
            return 0.0;
        }
        return poynting(evaluate(plus, r, th, 0.0))[2] * r * r * std::sin(th);
    };
    const double oracle_p = oracle::simpson(
        [&](double r) { return oracle::simpson([&](double th) { return integrand(r, th); }, 0.0, pi, 120); }, 0.0,
        a, 120);
    CHECK(P == Approx(oracle_p).epsilon(1e-4));
}

TEST_CASE("sectoral latitude profile")
{
    for (double m : {0.5, 2.0 / 3.0, 1.0, 2.0, 3.5}) {
        const auto mode = make_mode(Polarization::TM, m, m, 1, a);
        const double ref = std::norm(evaluate(mode, 0.5 * a, pi / 2.0, 0.0).E[0]);
        for (double th = 0.1; th < pi; th += 0.3) {
            const double u = std::norm(evaluate(mode, 0.5 * a, th, 0.0).E[0]) / ref;
            CHECK(u == Approx(std::pow(std::sin(th), 2.0 * m)).epsilon(1e-12));
        }
    }
}

TEST_CASE("wedge face selection")
{
    const angular::AngularDomain pp{1.5 * pi};
    const angular::AngularDomain pm{1.5 * pi, 0.0, angular::WedgeFaces::PecPmc};
    for (auto pol : {Polarization::TM, Polarization::TE}) {
        const auto mode = make_mode(pol, 5.0 / 3.0, 2.0 / 3.0, 1, a, pp);
        CHECK(mode.azimuthal != AzimuthalForm::Traveling);
        const double scale = peak(evaluate(mode, 0.5 * a, 1.0, 1.7).E);
        for (double phi : {0.0, 1.5 * pi}) {
            const auto s = evaluate(mode, 0.5 * a, 1.0, phi);
            CHECK(std::abs(s.E[0]) < 1e-12 * scale);
            CHECK(std::abs(s.E[1]) < 1e-12 * scale);
        }
        const auto mixed = make_mode(pol, 4.0 / 3.0, 1.0 / 3.0, 1, a, pm);
        const auto h_scale = peak(evaluate(mixed, 0.5 * a, 1.0, 1.7).H);
        const auto f1 = evaluate(mixed, 0.5 * a, 1.0, 1.5 * pi);
        CHECK(std::abs(f1.H[0]) < 1e-12 * h_scale);
        CHECK(std::abs(f1.H[1]) < 1e-12 * h_scale);
    }
    CHECK(make_mode(Polarization::TM, 2.0 / 3.0, 2.0 / 3.0, 1, a, pp).azimuthal == AzimuthalForm::Sine);
    CHECK(make_mode(Polarization::TE, 2.0 / 3.0, 2.0 / 3.0, 1, a, pp).azimuthal == AzimuthalForm::Cosine);
}

TEST_CASE("domain errors")
{
    const auto mode = make_mode(Polarization::TM, 1.0, 1.0, 1, a);
    CHECK_THROWS_AS(evaluate(mode, 0.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(evaluate(mode, 1.1 * a, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(evaluate(mode, 0.5 * a, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(evaluate(mode, 0.5 * a, pi, 0.0), DomainError);
    const auto wedge = make_mode(Polarization::TM, 2.0 / 3.0, 2.0 / 3.0, 1, a, {1.5 * pi});
    CHECK_THROWS_AS(evaluate(wedge, 0.5 * a, 1.0, 1.6 * pi), DomainError);
    const auto pair = angular::make_eigenpair(1.0, 1.0);
    CHECK_THROWS_AS(make_mode(Polarization::TM, pair, radial::j_zero(1.0, 1), a), DomainError);
    CHECK_THROWS_AS(make_mode(Polarization::TE, pair, radial::j_zero(2.0, 1), a), DomainError);
    CHECK_THROWS_AS(make_mode(Polarization::TE, pair, radial::j_zero(1.0, 1), -a), DomainError);
    CHECK_THROWS_AS(azimuthal_power(wedge), DomainError);
}

} // TEST_SUITE
