#pragma once

#include "sphcav/specfun.hpp"
#include "sphcav/types.hpp"

#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

namespace sphcav::angular {

enum class Family { Sectoral, Tesseral, Zonal, Null };

std::string_view to_string(Family f) noexcept;

/// Boundary kinds on the two wedge faces phi = 0 and phi = Phi.
enum class WedgeFaces {
    PecPec,
    /// Experimental: PEC at phi = 0, PMC at phi = Phi.
    PecPmc,
};

/// Polar/azimuthal extent of the field region. A cone removes the polar cap
/// theta < theta_c around the north pole; the south pole is retained.
struct AngularDomain {
    double azimuth_opening_rad = 2.0 * std::numbers::pi;
    double cone_half_angle_rad = 0.0;
    WedgeFaces faces = WedgeFaces::PecPec;

    void validate() const;
    bool full_azimuth() const noexcept;
    bool has_cone() const noexcept { return cone_half_angle_rad > 0.0; }
};

struct AngularEigenpair {
    double nu = 0.0;
    double m = 0.0;
    Family family = Family::Null;
    /// Offset in nu = m + k; absent for cone modes.
    std::optional<int> k;
};

/// First `count` admissible azimuthal orders of the domain.
std::vector<double> azimuthal_indices(const AngularDomain& domain, int count);

/// Degree of the solution regular at both poles: nu = m + k.
double nu_regular_both_poles(double m, int k);

/// Coefficient of the singular term at the south pole carried by the
/// north-regular solution: sin((nu - m) pi) / pi times Gamma(nu+m+1)/Gamma(nu-m+1)
/// (for m = 0 the gamma ratio is dropped and the result multiplies the logarithm).
///
/// Zero exactly when nu - m is a non-negative integer. For nu - m a negative
/// integer the product is 0 * infinity and EvaluationError is thrown.
double south_singular_coefficient(double nu, double m);

/// Mode family of (nu, m). Without a cone, nu - m must be a non-negative
/// integer or ClassificationError is thrown.
Family classify(double nu, double m, bool cone_present = false);

/// Builds an eigenpair with its family and offset filled in.
AngularEigenpair make_eigenpair(double nu, double m, bool cone_present = false);

/// branch-th smallest nu > 0 for which the north-regular solution evaluated at
/// pi - theta_c vanishes (TM) or has zero slope (TE).
///
/// This is the Legendre condition at a cone of half-angle theta_c around the
/// north pole, with regularity kept at the south pole; the equation is
/// symmetric under theta -> pi - theta.
double cone_nu(double m, double theta_c, Polarization pol, int branch,
               const specfun::SeriesControl& ctrl = {});

/// sin^m(theta).
double sectoral_theta(double m, double theta);

/// (1/sin) d/dtheta (sin Theta') + [nu(nu+1) - m^2/sin^2] Theta.
double angular_ode_residual(double nu, double m, double theta, double value, double deriv,
                            double second_deriv);

/// Second derivative implied by the polar equation.
double angular_second_deriv(double nu, double m, double theta, double value, double deriv);

} // namespace sphcav::angular
