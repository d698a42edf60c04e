#pragma once

#include "sphcav/fields.hpp"

#include <optional>

namespace sphcav::energy {

/// Separated factors of the stored energy density integral:
/// radial integral of j_nu(kr)^2 r^2, polar integral of Theta^2 sin(theta),
/// azimuthal integral of |g|^2.
struct Factorization {
    double I_r = 0.0;
    double I_theta = 0.0;
    double I_phi = 0.0;
};

struct EnergyReport {
    bool radial_integrable = false;
    /// Polar integral of Theta^2 sin(theta) over the retained polar range.
    double angular_norm = 0.0;
    /// Time-averaged stored energy for the mode amplitude, J.
    std::optional<double> total_energy;
    double electric_energy = 0.0;
    double magnetic_energy = 0.0;
    Factorization factorization;
};

bool radial_integrable(double nu) noexcept;

/// Integral of sin^(2m+1) over (0, pi): sqrt(pi) Gamma(m+1) / Gamma(m+3/2).
double sectoral_angular_norm(double m);

/// 2 / (2 ell + 1).
double zonal_norm(int ell);

/// Integral of Theta^2 sin(theta) over (0, theta_max) by quadrature, Theta the
/// north-regular solution.
double angular_norm_quadrature(double nu, double m, double theta_max = 3.141592653589793);

/// Integral of (dTheta/dtheta)^2 sin(theta) over (0, eps) for Theta = sin^m:
/// the near-pole share of the tangential magnetic energy of a sectoral TM mode.
double sectoral_cap_integral(double m, double eps);

EnergyReport mode_energy(const fields::ModeSpec& mode);

/// Multiplies the amplitude so that mode_energy(...).total_energy == 1 J.
fields::ModeSpec normalized_to_unit_energy(const fields::ModeSpec& mode);

} // namespace sphcav::energy
