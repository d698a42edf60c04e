#pragma once

#include "sphcav/angular.hpp"
#include "sphcav/radial.hpp"
#include "sphcav/types.hpp"

#include <array>
#include <cmath>
#include <complex>

namespace sphcav::fields {

using cplx = std::complex<double>;

struct Medium {
    double epsilon = constants::eps0;
    double mu = constants::mu0;

    double eta() const { return std::sqrt(mu / epsilon); }
};

/// Azimuthal factor g(phi) of the Debye potential.
enum class AzimuthalForm {
    /// exp(i s m phi), s = +1 or -1.
    Traveling,
    Sine,
    Cosine,
};

/// A single resonant mode. Fields follow exp(-i omega t).
struct ModeSpec {
    Polarization polarization = Polarization::TM;
    angular::AngularEigenpair eigenpair;
    radial::RadialRoot radial;
    double radius_m = 0.0;
    cplx amplitude{1.0, 0.0};
    Medium medium;
    angular::AngularDomain domain;
    AzimuthalForm azimuthal = AzimuthalForm::Traveling;
    int azimuthal_sign = 1;

    double wavenumber() const { return radial.x / radius_m; }
    double omega() const { return wavenumber() / std::sqrt(medium.mu * medium.epsilon); }
};

struct FieldSample {
    double r = 0.0;
    double theta = 0.0;
    double phi = 0.0;
    /// (r, theta, phi) components.
    std::array<cplx, 3> E{};
    std::array<cplx, 3> H{};
};

/// Assembles a mode and fixes its azimuthal factor. Full-azimuth domains get a
/// traveling wave exp(i s m phi); wedges get whichever of sin(m phi), cos(m phi)
/// makes tangential E vanish on PEC faces (tangential H on a PMC face).
ModeSpec make_mode(Polarization pol, const angular::AngularEigenpair& pair, const radial::RadialRoot& root,
                   double radius_m, const angular::AngularDomain& domain = {}, cplx amplitude = {1.0, 0.0},
                   const Medium& medium = {}, int azimuthal_sign = 1);

/// Convenience: classify (nu, m), find the n-th radial root and build the mode.
ModeSpec make_mode(Polarization pol, double nu, double m, int n, double radius_m,
                   const angular::AngularDomain& domain = {}, cplx amplitude = {1.0, 0.0},
                   const Medium& medium = {}, int azimuthal_sign = 1);

FieldSample evaluate(const ModeSpec& mode, double r, double theta, double phi);

struct Impedances {
    /// TE: E_theta / H_r, or E_phi / H_theta when m = 0.
    cplx z_te;
    /// TM: E_r / H_theta, or E_theta / H_phi when m = 0.
    cplx z_tm;
    bool zonal = false;
};

/// Transverse impedances of the TE and TM fields sharing the mode's (nu, m),
/// wavenumber and azimuthal factor, as ratios of evaluated components.
Impedances wave_impedances(const ModeSpec& mode, double r, double theta, double phi);
Impedances wave_impedances(const ModeSpec& mode, double r, double theta);

/// Time-averaged Poynting vector 1/2 Re(E x H*) in (r, theta, phi) components.
std::array<double, 3> poynting(const FieldSample& sample);

/// Integral of S_phi r^2 sin(theta) over 0 < r < a and the polar range at phi = 0.
/// Traveling waves only.
double azimuthal_power(const ModeSpec& mode);

} // namespace sphcav::fields
