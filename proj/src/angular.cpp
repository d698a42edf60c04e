#include "sphcav/angular.hpp"

#include "sphcav/errors.hpp"

#include <boost/math/special_functions/sin_pi.hpp>
#include <boost/math/tools/roots.hpp>

#include <fmt/format.h>

#include <cmath>
#include <cstdint>

namespace sphcav::angular {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleSlack = 1e-12;
constexpr double kNuStart = 1e-4;
constexpr double kNuStep = 0.02;

bool near(double a, double b) noexcept
{
    return std::abs(a - b) <= 1e-12 * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

} // namespace

std::string_view to_string(Family f) noexcept
{
    switch (f) {
    case Family::Sectoral: return "sectoral";
    case Family::Tesseral: return "tesseral";
    case Family::Zonal: return "zonal";
    case Family::Null: return "null";
    }
    return "unknown";
}

void AngularDomain::validate() const
{
    if (!(azimuth_opening_rad > 0.0 && azimuth_opening_rad <= kTwoPi + kAngleSlack)) {
        throw DomainError(fmt::format("azimuth opening {} rad outside (0, 2pi]", azimuth_opening_rad));
    }
    if (!(cone_half_angle_rad >= 0.0 && cone_half_angle_rad < 0.5 * std::numbers::pi)) {
        throw DomainError(fmt::format("cone half-angle {} rad outside [0, pi/2)", cone_half_angle_rad));
    }
}

bool AngularDomain::full_azimuth() const noexcept
{
    return azimuth_opening_rad >= kTwoPi - kAngleSlack;
}

std::vector<double> azimuthal_indices(const AngularDomain& domain, int count)
{
    domain.validate();
    if (count < 1) {
        throw DomainError(fmt::format("azimuthal_indices: count = {} must be >= 1", count));
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    const double phi = domain.azimuth_opening_rad;
    for (int n = 1; n <= count; ++n) {
        if (domain.full_azimuth()) {
            out.push_back(static_cast<double>(n - 1));
        } else if (domain.faces == WedgeFaces::PecPec) {
            out.push_back(n * std::numbers::pi / phi);
        } else {
            out.push_back((2 * n - 1) * std::numbers::pi / (2.0 * phi));
        }
    }
    return out;
}

double nu_regular_both_poles(double m, int k)
{
    if (!(m >= 0.0) || k < 0) {
        throw DomainError(fmt::format("nu_regular_both_poles: need m >= 0, k >= 0 (got {}, {})", m, k));
    }
    return m + k;
}

double south_singular_coefficient(double nu, double m)
{
    if (!(m >= 0.0)) {
        throw DomainError(fmt::format("south_singular_coefficient: m = {} must be non-negative", m));
    }
    const double d = nu - m;
    if (specfun::is_integer(d) && std::round(d) >= 0.0) {
        return 0.0;
    }
    const double s = boost::math::sin_pi(d);
    if (m == 0.0) {
        return s / std::numbers::pi;
    }
    if (!(nu + m + 1.0 > 0.0)) {
        throw DomainError(fmt::format("south_singular_coefficient: nu + m + 1 = {} must be positive", nu + m + 1.0));
    }
    if (specfun::is_integer(d)) {
        throw EvaluationError(fmt::format(
            "south_singular_coefficient: nu - m = {} is a negative integer; sin vanishes against a pole "
            "of 1/Gamma(nu - m + 1) and the product is indeterminate",
            d));
    }
    const double lg_num = std::lgamma(nu + m + 1.0);
    if (d + 1.0 > 0.0) {
        return std::exp(lg_num - std::lgamma(d + 1.0)) * s / std::numbers::pi;
    }
    // 1/Gamma(d+1) = -Gamma(-d) sin(pi d) / pi
    return -std::exp(lg_num + std::lgamma(-d)) * s * s / (std::numbers::pi * std::numbers::pi);
}

Family classify(double nu, double m, bool cone_present)
{
    if (!(nu >= 0.0) || !(m >= 0.0)) {
        throw DomainError(fmt::format("classify: need nu >= 0 and m >= 0 (got {}, {})", nu, m));
    }
    if (nu == 0.0 && m == 0.0) {
        return Family::Null;
    }
    if (!cone_present) {
        const double d = nu - m;
        if (!specfun::is_integer(d) || std::round(d) < 0.0) {
            throw ClassificationError(fmt::format(
                "(nu, m) = ({}, {}) is not reachable without a cone: nu - m must be a non-negative integer",
                nu, m));
        }
    }
    if (m == 0.0) {
        return Family::Zonal;
    }
    if (near(nu, m)) {
        return Family::Sectoral;
    }
    return Family::Tesseral;
}

AngularEigenpair make_eigenpair(double nu, double m, bool cone_present)
{
    AngularEigenpair p;
    p.nu = nu;
    p.m = m;
    p.family = classify(nu, m, cone_present);
    const double d = nu - m;
    if (specfun::is_integer(d) && std::round(d) >= 0.0 && !cone_present) {
        p.k = static_cast<int>(std::round(d));
    }
    return p;
}

double cone_nu(double m, double theta_c, Polarization pol, int branch, const specfun::SeriesControl& ctrl)
{
    if (!(m >= 0.0)) {
        throw DomainError(fmt::format("cone_nu: m = {} must be non-negative", m));
    }
    if (!(theta_c > 0.0 && theta_c < 0.5 * std::numbers::pi)) {
        throw DomainError(fmt::format("cone_nu: theta_c = {} rad outside (0, pi/2)", theta_c));
    }
    if (branch < 1) {
        throw DomainError(fmt::format("cone_nu: branch = {} must be >= 1", branch));
    }
    ctrl.validate();

    const double theta = std::numbers::pi - theta_c;
    auto f = [&](double nu) {
        const auto v = specfun::legendre_theta_pair(nu, m, theta, ctrl);
        return pol == Polarization::TM ? v.value : v.deriv;
    };

    const double nu_max = m + branch + 2.0;
    int found = 0;
    double lo = kNuStart;
    double f_lo = f(lo);
    const int steps = static_cast<int>(std::ceil((nu_max - kNuStart) / kNuStep));
    for (int i = 1; i <= steps; ++i) {
        const double hi = kNuStart + i * kNuStep;
        const double f_hi = f(hi);
        if (f_hi == 0.0) {
            if (++found == branch) {
                return hi;
            }
        } else if (f_lo != 0.0 && std::signbit(f_lo) != std::signbit(f_hi)) {
            if (++found == branch) {
                std::uintmax_t iters = 200;
                const auto tol = boost::math::tools::eps_tolerance<double>(45);
                const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi, tol, iters);
                if (iters >= 200 || std::abs(b - a) > 1e-8) {
                    throw RootError("cone_nu: bracket refinement did not converge", a, b);
                }
                return 0.5 * (a + b);
            }
        }
        lo = hi;
        f_lo = f_hi;
    }
    throw SearchError(fmt::format("cone_nu: found {} of {} requested sign changes for m = {}, theta_c = {}",
                                  found, branch, m, theta_c),
                      kNuStart, nu_max);
}

double sectoral_theta(double m, double theta)
{
    if (!(m > 0.0)) {
        throw DomainError(fmt::format("sectoral_theta: m = {} must be positive", m));
    }
    if (!(theta > 0.0 && theta < std::numbers::pi)) {
        throw DomainError(fmt::format("sectoral_theta: theta = {} outside (0, pi)", theta));
    }
    return std::pow(std::sin(theta), m);
}

double angular_ode_residual(double nu, double m, double theta, double value, double deriv, double second_deriv)
{
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    return second_deriv + c / s * deriv + (nu * (nu + 1.0) - m * m / (s * s)) * value;
}

double angular_second_deriv(double nu, double m, double theta, double value, double deriv)
{
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    return -c / s * deriv - (nu * (nu + 1.0) - m * m / (s * s)) * value;
}

} // namespace sphcav::angular
