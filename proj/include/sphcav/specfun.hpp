#pragma once

// Real-argument special functions used throughout the cavity solver.
//
// The polar eigenfunction is the Frobenius branch regular at the north pole,
//
//     Theta(theta) = sin^m(theta) * 2F1(m - nu, m + nu + 1; m + 1; sin^2(theta/2)),
//
// normalised so that Theta / sin^m(theta) -> 1 as theta -> 0+. This is not the
// Ferrers normalisation; it stays finite for non-integer m.

#include <array>
#include <cstddef>

namespace sphcav::specfun {

/// Controls summation of hypergeometric series.
struct SeriesControl {
    int max_terms = 4000;
    /// Summation stops once |term| < tolerance * |partial sum|.
    double tolerance = 1e-16;

    /// Throws DomainError unless max_terms >= 1 and 0 < tolerance < 1.
    void validate() const;
};

/// Magnitudes of the first zeros of Ai(-z) and Ai'(-z).
struct AiryRootTable {
    static constexpr std::size_t size = 10;
    static constexpr std::array<double, size> ai_zeros = {
        2.338107410459767, 4.087949444130971, 5.520559828095551, 6.786708090071759,
        7.944133587120853, 9.022650853340980, 10.04017434155809, 11.00852430373326,
        11.93601556323626, 12.82877675286576};
    static constexpr std::array<double, size> ai_prime_zeros = {
        1.018792971647471, 3.248197582179837, 4.820099211178736, 6.163307355639486,
        7.372177255047770, 8.488486734019723, 9.535449052433547, 10.52766039695740,
        11.47505663348025, 12.38478837184851};
};

double ln_gamma(double x);
double digamma(double x);

/// Gauss hypergeometric series for z in [0, 1).
///
/// A numerator parameter within 1e-12 of a non-positive integer -K is treated
/// as exactly -K and the degree-K polynomial is returned, independent of the
/// tolerance. Otherwise terms are summed until they fall below the tolerance;
/// failure to do so within max_terms raises ConvergenceError.
double hyp2f1(double a, double b, double c, double z, const SeriesControl& ctrl = {});

/// Spherical Bessel function of the first kind j_nu(x) for nu > -1/2, x >= 0.
double spherical_j(double nu, double x);

/// d/dx [x j_nu(x)], evaluated as (nu + 1) j_nu(x) - x j_{nu+1}(x).
double riccati_deriv(double nu, double x);

/// Polar eigenfunction value and its theta-derivative at one angle.
struct ThetaValue {
    double value;
    double deriv;
};

/// North-regular solution of the associated Legendre equation and dTheta/dtheta.
///
/// Uses the hypergeometric series while sin^2(theta/2) <= 0.75 or whenever the
/// series terminates. Beyond that the angular ODE is integrated from
/// theta = 2 pi / 3 in the variable log(pi - theta).
ThetaValue legendre_theta_pair(double nu, double m, double theta, const SeriesControl& ctrl = {});

double legendre_theta(double nu, double m, double theta, const SeriesControl& ctrl = {});
double legendre_theta_deriv(double nu, double m, double theta, const SeriesControl& ctrl = {});

/// True when x is within 1e-12 (relative to max(1,|x|)) of a non-positive integer.
bool is_nonpositive_integer(double x) noexcept;

/// True when x is within 1e-12 (relative to max(1,|x|)) of an integer.
bool is_integer(double x) noexcept;

} // namespace sphcav::specfun
