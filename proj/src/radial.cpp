#include "sphcav/radial.hpp"

#include "sphcav/errors.hpp"
#include "sphcav/specfun.hpp"

#include <boost/math/tools/roots.hpp>

#include <fmt/format.h>

#include <cmath>
#include <cstdint>
#include <numbers>

namespace sphcav::radial {

namespace {

constexpr double kScanStep = 0.05;
constexpr double kResidualBound = 1e-9;

double wall_function(double nu, double x, RootKind kind)
{
    return kind == RootKind::TE_jzero ? specfun::spherical_j(nu, x) : specfun::riccati_deriv(nu, x);
}

std::string_view kind_name(RootKind kind)
{
    return kind == RootKind::TE_jzero ? "j_nu" : "d/dx[x j_nu]";
}

} // namespace

RadialRoot root(double nu, int n, RootKind kind)
{
    if (!(nu > -0.5)) {
        throw DomainError(fmt::format("radial root: order {} must exceed -1/2", nu));
    }
    if (n < 1) {
        throw DomainError(fmt::format("radial root: index n = {} must be >= 1", n));
    }

    auto f = [nu, kind](double x) { return wall_function(nu, x, kind); };

    // Neither function can vanish below nu, and consecutive zeros are more than
    // one unit apart, so a fixed-step scan from there brackets every root.
    const double x_start = std::max(nu, 1e-3);
    const double x_end = nu + 12.0 + 3.5 * n;
    double lo = x_start;
    double f_lo = f(lo);
    int found = 0;
    for (int i = 1;; ++i) {
        const double hi = x_start + i * kScanStep;
        if (hi > x_end) {
            break;
        }
        const double f_hi = f(hi);
        const bool exact = f_hi == 0.0;
        if (exact || (f_lo != 0.0 && std::signbit(f_lo) != std::signbit(f_hi))) {
            if (++found == n) {
                double x = hi;
                if (!exact) {
                    std::uintmax_t iters = 200;
                    const auto tol = boost::math::tools::eps_tolerance<double>(50);
                    const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi, tol, iters);
                    if (iters >= 200 || std::abs(b - a) > 1e-9) {
                        throw RootError(fmt::format("refining zero {} of {} for nu = {} did not converge", n,
                                                    kind_name(kind), nu),
                                        a, b);
                    }
                    x = std::abs(f(a)) <= std::abs(f(b)) ? a : b;
                }
                const double res = f(x);
                if (std::abs(res) > kResidualBound) {
                    throw RootError(fmt::format("zero {} of {} for nu = {} has residual {}", n, kind_name(kind),
                                                nu, res),
                                    lo, hi);
                }
                return RadialRoot{nu, n, kind, x, res};
            }
        }
        lo = hi;
        f_lo = f_hi;
    }
    throw SearchError(fmt::format("found {} of {} zeros of {} for nu = {}", found, n, kind_name(kind), nu),
                      x_start, x_end);
}

RadialRoot j_zero(double nu, int n)
{
    return root(nu, n, RootKind::TE_jzero);
}

RadialRoot riccati_deriv_zero(double nu, int n)
{
    return root(nu, n, RootKind::TM_riccati_deriv_zero);
}

double frequency_from_root(double x, double radius_m)
{
    if (!(radius_m > 0.0)) {
        throw DomainError(fmt::format("radius {} m must be positive", radius_m));
    }
    return constants::c0 * x / (2.0 * std::numbers::pi * radius_m);
}

double mcmahon_seed(double nu, int n, RootKind kind)
{
    if (!(nu >= 0.5)) {
        throw DomainError(fmt::format("mcmahon_seed: order {} below 0.5", nu));
    }
    if (n < 1 || n > static_cast<int>(specfun::AiryRootTable::size)) {
        throw DomainError(fmt::format("mcmahon_seed: index {} outside 1..{}", n, specfun::AiryRootTable::size));
    }
    const double mu = nu + 0.5;
    const double cbrt_mu = std::cbrt(mu);
    const double two_m13 = std::pow(2.0, -1.0 / 3.0);
    if (kind == RootKind::TE_jzero) {
        const double c = two_m13 * specfun::AiryRootTable::ai_zeros[n - 1];
        return mu + c * cbrt_mu + 0.3 * c * c / cbrt_mu;
    }
    const double zp = specfun::AiryRootTable::ai_prime_zeros[n - 1];
    const double c = two_m13 * zp;
    return mu + c * cbrt_mu + two_m13 * two_m13 * 0.3 * (zp * zp + 1.0 / zp) / cbrt_mu;
}

double asymptotic_m_of_omega(double omega_a_over_c, RootKind kind)
{
    if (!(omega_a_over_c >= 1.0)) {
        throw DomainError(fmt::format("asymptotic_m_of_omega: argument {} must be >= 1", omega_a_over_c));
    }
    const double coeff = kind == RootKind::TE_jzero ? 1.856 : 0.809;
    return omega_a_over_c - coeff * std::cbrt(omega_a_over_c);
}

} // namespace sphcav::radial
