#pragma once

#include <numbers>
#include <string_view>

namespace sphcav {

enum class Polarization { TM, TE };

inline constexpr std::string_view to_string(Polarization p) noexcept
{
    return p == Polarization::TM ? "TM" : "TE";
}

namespace constants {
inline constexpr double pi = std::numbers::pi;
/// Speed of light in vacuum, m/s (exact).
inline constexpr double c0 = 299792458.0;
/// Vacuum permeability and permittivity (CODATA 2018).
inline constexpr double mu0 = 1.25663706212e-6;
inline constexpr double eps0 = 8.8541878128e-12;
} // namespace constants

} // namespace sphcav
