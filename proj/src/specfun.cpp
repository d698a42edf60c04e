#include "sphcav/specfun.hpp"

#include "sphcav/errors.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/numeric/odeint.hpp>

#include <fmt/format.h>

#include <array>
#include <cmath>
#include <numbers>

namespace sphcav::specfun {

namespace {

constexpr double kSnap = 1e-12;
constexpr double kSeriesLimit = 0.75;
constexpr double kSmallX = 2.0;

struct SeriesPair {
    double f;
    double df; // d/dz
};

// Sums 2F1 and its z-derivative together. Terminates exactly when a or b is
// a non-positive integer.
SeriesPair hyp_series(double a, double b, double c, double z, const SeriesControl& ctrl)
{
    ctrl.validate();
    if (!(z >= 0.0 && z < 1.0)) {
        throw DomainError(fmt::format("hyp2f1: z = {} outside [0, 1)", z));
    }

    int terms = -1;
    for (double* p : {&a, &b}) {
        if (is_nonpositive_integer(*p)) {
            *p = std::round(*p);
            const int k = static_cast<int>(-*p);
            terms = terms < 0 ? k : std::min(terms, k);
        }
    }
    if (is_nonpositive_integer(c)) {
        const int kc = static_cast<int>(-std::round(c));
        if (terms < 0 || terms > kc) {
            throw DomainError(fmt::format("hyp2f1: c = {} is a non-positive integer", c));
        }
    }

    // extended accumulation limits cancellation in the alternating polynomials
    long double sum = 1.0L;
    long double dsum = 0.0L;
    long double term = 1.0L;
    const long double zl = z;

    if (terms >= 0) {
        for (int n = 1; n <= terms; ++n) {
            const long double ratio = static_cast<long double>(a + n - 1) * (b + n - 1) / (c + n - 1);
            dsum += term * ratio;
            term *= ratio * zl / n;
            sum += term;
        }
        return {static_cast<double>(sum), static_cast<double>(dsum)};
    }

    for (int n = 1; n <= ctrl.max_terms; ++n) {
        const long double ratio = static_cast<long double>(a + n - 1) * (b + n - 1) / (c + n - 1);
        const long double dterm = term * ratio;
        dsum += dterm;
        term = dterm * zl / n;
        sum += term;
        const bool f_done = std::fabs(term) <= ctrl.tolerance * std::fabs(sum);
        const bool d_done = std::fabs(dterm) <= ctrl.tolerance * std::fabs(dsum) || dterm == 0.0L;
        if (f_done && d_done && n > 1) {
            return {static_cast<double>(sum), static_cast<double>(dsum)};
        }
    }
    throw ConvergenceError(
        fmt::format("hyp2f1({}, {}; {}; {}) did not converge in {} terms", a, b, c, z, ctrl.max_terms),
        static_cast<double>(sum), static_cast<double>(std::fabs(term)));
}

double j_series(double nu, double x)
{
    const double q = -0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (k * (nu + k + 0.5));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) {
            break;
        }
    }
    const double pref =
        std::exp(nu * std::log(0.5 * x) - boost::math::lgamma(nu + 1.5)) * 0.5 * std::sqrt(std::numbers::pi);
    return pref * sum;
}

void check_theta_args(double m, double theta)
{
    if (!(m >= 0.0)) {
        throw DomainError(fmt::format("angular order m = {} must be non-negative", m));
    }
    if (!(theta > 0.0 && theta < std::numbers::pi)) {
        throw DomainError(fmt::format("theta = {} must lie strictly inside (0, pi)", theta));
    }
}

ThetaValue theta_by_series(double nu, double m, double theta, const SeriesControl& ctrl)
{
    const double s = std::sin(theta);
    const double half = std::sin(0.5 * theta);
    const double z = half * half;
    const auto [f, df] = hyp_series(m - nu, m + nu + 1.0, m + 1.0, z, ctrl);
    const double sm = std::pow(s, m);
    double deriv = sm * 0.5 * s * df;
    if (m != 0.0) {
        deriv += m * std::pow(s, m - 1.0) * std::cos(theta) * f;
    }
    return {sm * f, deriv};
}

// Integrates the polar equation in u = log(pi - theta) from theta = 2 pi / 3.
ThetaValue theta_by_ode(double nu, double m, double theta, const SeriesControl& ctrl)
{
    namespace odeint = boost::numeric::odeint;
    using State = std::array<double, 2>;

    const double theta0 = 2.0 * std::numbers::pi / 3.0;
    const ThetaValue start = theta_by_series(nu, m, theta0, ctrl);
    const double lambda = nu * (nu + 1.0);
    const double t0 = std::numbers::pi - theta0;
    const double t1 = std::numbers::pi - theta;

    State y{start.value, -t0 * start.deriv};
    auto rhs = [lambda, m](const State& s, State& dsdu, double u) {
        const double t = std::exp(u);
        const double tcot = t < 1e-4 ? 1.0 - t * t / 3.0 : t * std::cos(t) / std::sin(t);
        const double tsin = t < 1e-4 ? 1.0 + t * t / 6.0 : t / std::sin(t);
        dsdu[0] = s[1];
        dsdu[1] = (1.0 - tcot) * s[1] - (lambda * t * t - m * m * tsin * tsin) * s[0];
    };

    auto stepper = odeint::make_controlled<odeint::runge_kutta_fehlberg78<State>>(1e-15, 1e-13);
    const double u0 = std::log(t0);
    const double u1 = std::log(t1);
    odeint::integrate_adaptive(stepper, rhs, y, u0, u1, (u1 - u0) / 50.0);
    return {y[0], -y[1] / t1};
}

} // namespace

void SeriesControl::validate() const
{
    if (max_terms < 1) {
        throw DomainError(fmt::format("SeriesControl: max_terms = {} must be >= 1", max_terms));
    }
    if (!(tolerance > 0.0 && tolerance < 1.0)) {
        throw DomainError(fmt::format("SeriesControl: tolerance = {} must lie in (0, 1)", tolerance));
    }
}

bool is_integer(double x) noexcept
{
    if (!std::isfinite(x)) {
        return false;
    }
    return std::abs(x - std::round(x)) <= kSnap * std::max(1.0, std::abs(x));
}

bool is_nonpositive_integer(double x) noexcept
{
    return is_integer(x) && std::round(x) <= 0.0;
}

double ln_gamma(double x)
{
    if (!(x > 0.0)) {
        throw DomainError(fmt::format("ln_gamma: x = {} must be positive", x));
    }
    return boost::math::lgamma(x);
}

double digamma(double x)
{
    if (!(x > 0.0)) {
        throw DomainError(fmt::format("digamma: x = {} must be positive", x));
    }
    return boost::math::digamma(x);
}

double hyp2f1(double a, double b, double c, double z, const SeriesControl& ctrl)
{
    return hyp_series(a, b, c, z, ctrl).f;
}

double spherical_j(double nu, double x)
{
    if (!(nu > -0.5)) {
        throw DomainError(fmt::format("spherical_j: order {} must exceed -1/2", nu));
    }
    if (!(x >= 0.0)) {
        throw DomainError(fmt::format("spherical_j: argument {} must be non-negative", x));
    }
    if (x == 0.0) {
        return nu == 0.0 ? 1.0 : 0.0;
    }
    if (x <= kSmallX) {
        return j_series(nu, x);
    }
    return std::sqrt(0.5 * std::numbers::pi / x) * boost::math::cyl_bessel_j(nu + 0.5, x);
}

double riccati_deriv(double nu, double x)
{
    if (!(nu > -0.5)) {
        throw DomainError(fmt::format("riccati_deriv: order {} must exceed -1/2", nu));
    }
    if (!(x >= 0.0)) {
        throw DomainError(fmt::format("riccati_deriv: argument {} must be non-negative", x));
    }
    if (x == 0.0) {
        return nu == 0.0 ? 1.0 : 0.0;
    }
    return (nu + 1.0) * spherical_j(nu, x) - x * spherical_j(nu + 1.0, x);
}

ThetaValue legendre_theta_pair(double nu, double m, double theta, const SeriesControl& ctrl)
{
    check_theta_args(m, theta);
    ctrl.validate();

    const double a = m - nu;
    const double half = std::sin(0.5 * theta);
    const double z = half * half;

    if (is_nonpositive_integer(a)) {
        if (z <= 0.5) {
            return theta_by_series(nu, m, theta, ctrl);
        }
        // Terminating solutions have parity (-1)^k about the equator.
        const double parity = static_cast<long long>(std::round(-a)) % 2 == 0 ? 1.0 : -1.0;
        const ThetaValue mirror = theta_by_series(nu, m, std::numbers::pi - theta, ctrl);
        return {parity * mirror.value, -parity * mirror.deriv};
    }
    if (z <= kSeriesLimit) {
        return theta_by_series(nu, m, theta, ctrl);
    }
    return theta_by_ode(nu, m, theta, ctrl);
}

double legendre_theta(double nu, double m, double theta, const SeriesControl& ctrl)
{
    return legendre_theta_pair(nu, m, theta, ctrl).value;
}

double legendre_theta_deriv(double nu, double m, double theta, const SeriesControl& ctrl)
{
    return legendre_theta_pair(nu, m, theta, ctrl).deriv;
}

} // namespace sphcav::specfun
