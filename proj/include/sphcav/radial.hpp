#pragma once

#include "sphcav/types.hpp"

namespace sphcav::radial {

enum class RootKind {
    /// j_nu(x) = 0, TE wall condition.
    TE_jzero,
    /// d/dx [x j_nu(x)] = 0, TM wall condition.
    TM_riccati_deriv_zero,
};

constexpr RootKind kind_for(Polarization p) noexcept
{
    return p == Polarization::TE ? RootKind::TE_jzero : RootKind::TM_riccati_deriv_zero;
}

struct RadialRoot {
    double nu = 0.0;
    int n = 1;
    RootKind kind = RootKind::TE_jzero;
    double x = 0.0;
    /// Function value at x.
    double residual = 0.0;
};

/// n-th positive zero of j_nu.
RadialRoot j_zero(double nu, int n);

/// n-th positive zero of d/dx [x j_nu(x)].
RadialRoot riccati_deriv_zero(double nu, int n);

RadialRoot root(double nu, int n, RootKind kind);

/// f = c x / (2 pi a), Hz.
double frequency_from_root(double x, double radius_m);

/// Large-order estimate of the n-th root (n <= 10) for nu >= 0.5.
///
/// Expanded in mu = nu + 1/2:
///   TE: mu + c mu^(1/3) + (3/10) c^2 mu^(-1/3),                    c  = 2^(-1/3) z_n
///   TM: mu + c' mu^(1/3) + 2^(-2/3) (3/10)(z'_n^2 + 1/z'_n) mu^(-1/3),  c' = 2^(-1/3) z'_n
/// with z_n, z'_n the Airy zero magnitudes.
double mcmahon_seed(double nu, int n, RootKind kind);

/// Inverted leading-order dispersion m(X), X = omega a / c >= 1.
double asymptotic_m_of_omega(double omega_a_over_c, RootKind kind);

} // namespace sphcav::radial
