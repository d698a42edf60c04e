#include "sphcav/energy.hpp"

#include "sphcav/errors.hpp"
#include "sphcav/specfun.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <fmt/format.h>

#include <cmath>
#include <numbers>

namespace sphcav::energy {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuadTol = 1e-8;
constexpr double kSmallTheta = 1e-7;

template <class F>
double integrate(F f, double lo, double hi, std::string_view what)
{
    boost::math::quadrature::tanh_sinh<double> q;
    double err = 0.0;
    double l1 = 0.0;
    const double v = q.integrate(f, lo, hi, 1e-12, &err, &l1);
    if (!std::isfinite(v) || err > kQuadTol * std::max(l1, 1e-300)) {
        throw IntegrationError(fmt::format("{}: quadrature error {} against L1 norm {}", what, err, l1));
    }
    return v;
}

struct PolarIntegrals {
    double t0 = 0.0; // Theta^2 sin
    double t1 = 0.0; // Theta'^2 sin
    double t2 = 0.0; // Theta^2 / sin
};

// Integrands near the regular pole are replaced by their leading power to
// stay finite when m is small.
PolarIntegrals polar_integrals(double nu, double m, double theta_max, bool need_t2)
{
    const bool symmetric = theta_max >= kPi && specfun::is_nonpositive_integer(m - nu);
    const double hi = symmetric ? 0.5 * kPi : theta_max;
    const double scale = symmetric ? 2.0 : 1.0;

    auto theta_at = [&](double th) { return specfun::legendre_theta_pair(nu, m, std::min(th, kPi * (1 - 1e-16))); };

    PolarIntegrals out;
    out.t0 = scale * integrate(
                         [&](double th) {
                             if (m > 0.0 && th < kSmallTheta) {
                                 return std::exp((2.0 * m + 1.0) * std::log(th));
                             }
                             const auto v = theta_at(th);
                             return v.value * v.value * std::sin(th);
                         },
                         0.0, hi, "polar norm");
    out.t1 = scale * integrate(
                         [&](double th) {
                             if (m > 0.0 && th < kSmallTheta) {
                                 return m * m * std::exp((2.0 * m - 1.0) * std::log(th));
                             }
                             const auto v = theta_at(th);
                             return v.deriv * v.deriv * std::sin(th);
                         },
                         0.0, hi, "polar slope integral");
    if (need_t2) {
        out.t2 = scale * integrate(
                             [&](double th) {
                                 if (th < kSmallTheta) {
                                     return std::exp((2.0 * m - 1.0) * std::log(th));
                                 }
                                 const auto v = theta_at(th);
                                 return v.value * v.value / std::sin(th);
                             },
                             0.0, hi, "polar azimuthal-gradient integral");
    }
    return out;
}

} // namespace

bool radial_integrable(double nu) noexcept
{
    return nu > -0.5;
}

double sectoral_angular_norm(double m)
{
    if (!(m > -1.0)) {
        throw DomainError(fmt::format("sectoral_angular_norm: m = {} must exceed -1", m));
    }
    return std::sqrt(kPi) * std::exp(std::lgamma(m + 1.0) - std::lgamma(m + 1.5));
}

double zonal_norm(int ell)
{
    if (ell < 0) {
        throw DomainError(fmt::format("zonal_norm: ell = {} must be non-negative", ell));
    }
    return 2.0 / (2.0 * ell + 1.0);
}

double angular_norm_quadrature(double nu, double m, double theta_max)
{
    if (!(theta_max > 0.0 && theta_max <= kPi)) {
        throw DomainError(fmt::format("angular_norm_quadrature: upper limit {} outside (0, pi]", theta_max));
    }
    return polar_integrals(nu, m, theta_max, false).t0;
}

double sectoral_cap_integral(double m, double eps)
{
    if (!(m > 0.0)) {
        throw DomainError(fmt::format("sectoral_cap_integral: m = {} must be positive", m));
    }
    if (!(eps > 0.0 && eps < kPi)) {
        throw DomainError(fmt::format("sectoral_cap_integral: eps = {} outside (0, pi)", eps));
    }
    return integrate(
        [m](double th) {
            const double c = std::cos(th);
            return m * m * c * c * std::exp((2.0 * m - 1.0) * std::log(std::sin(th)));
        },
        0.0, eps, "cap integral");
}

EnergyReport mode_energy(const fields::ModeSpec& mode)
{
    const double nu = mode.eigenpair.nu;
    const double m = mode.eigenpair.m;

    EnergyReport rep;
    rep.radial_integrable = radial_integrable(nu);
    if (!rep.radial_integrable) {
        return rep;
    }

    const double theta_max = kPi - mode.domain.cone_half_angle_rad;
    const bool full_polar = !mode.domain.has_cone();
    const double phi = mode.domain.azimuth_opening_rad;
    const bool traveling = mode.azimuthal == fields::AzimuthalForm::Traveling;
    const double g0 = traveling ? phi : 0.5 * phi;
    const double g1 = m * m * g0;

    const PolarIntegrals pol = polar_integrals(nu, m, theta_max, g1 != 0.0);
    double t0 = pol.t0;
    if (full_polar && mode.eigenpair.family == angular::Family::Sectoral) {
        t0 = sectoral_angular_norm(m);
    } else if (full_polar && m == 0.0 && specfun::is_integer(nu)) {
        t0 = zonal_norm(static_cast<int>(std::round(nu)));
    }

    const double k = mode.wavenumber();
    const double X = mode.radial.x;
    const double i0 = integrate([nu](double x) { const double j = specfun::spherical_j(nu, x); return j * j; },
                                0.0, X, "radial integral of j^2");
    const double i2 = integrate(
        [nu](double x) { const double j = specfun::spherical_j(nu, x); return j * j * x * x; }, 0.0, X,
        "radial integral of j^2 x^2");
    const double ir = integrate([nu](double x) { const double R = specfun::riccati_deriv(nu, x); return R * R; },
                                0.0, X, "radial integral of (x j)'^2");
    const double J0 = i0 / k;
    const double J2 = i2 / (k * k * k);
    const double RR = ir / k;

    const double lam = nu * (nu + 1.0);
    const double a2 = std::norm(mode.amplitude);
    const double omega = mode.omega();
    const double eps = mode.medium.epsilon;
    const double mu = mode.medium.mu;

    const double transverse = pol.t1 * g0 + pol.t2 * g1;
    const double curl_curl = a2 * (lam * lam * J0 * t0 * g0 + RR * transverse);
    const double single_curl = a2 * J2 * transverse;

    double int_e = 0.0;
    double int_h = 0.0;
    if (mode.polarization == Polarization::TM) {
        int_e = curl_curl;
        int_h = omega * omega * eps * eps * single_curl;
    } else {
        int_e = omega * omega * mu * mu * single_curl;
        int_h = curl_curl;
    }

    rep.angular_norm = t0;
    rep.electric_energy = 0.25 * eps * int_e;
    rep.magnetic_energy = 0.25 * mu * int_h;
    rep.total_energy = rep.electric_energy + rep.magnetic_energy;
    rep.factorization = {J2, t0, g0};
    return rep;
}

fields::ModeSpec normalized_to_unit_energy(const fields::ModeSpec& mode)
{
    const auto rep = mode_energy(mode);
    if (!rep.total_energy || !(*rep.total_energy > 0.0)) {
        throw EvaluationError("mode carries no energy and cannot be normalized");
    }
    fields::ModeSpec out = mode;
    out.amplitude /= std::sqrt(*rep.total_energy);
    return out;
}

} // namespace sphcav::energy
