#include "sphcav/fields.hpp"

#include "sphcav/errors.hpp"
#include "sphcav/specfun.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <numbers>

namespace sphcav::fields {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGolden = 0.3819660112501051;
constexpr cplx kI{0.0, 1.0};

struct Azimuthal {
    cplx g;
    cplx dg;
};

Azimuthal azimuthal_factor(AzimuthalForm form, int sign, double m, double phi)
{
    switch (form) {
    case AzimuthalForm::Sine: return {std::sin(m * phi), m * std::cos(m * phi)};
    case AzimuthalForm::Cosine: return {std::cos(m * phi), -m * std::sin(m * phi)};
    case AzimuthalForm::Traveling: break;
    }
    const cplx g = std::exp(kI * (sign * m * phi));
    return {g, kI * (sign * m) * g};
}

// Field of polarization `pol` built from the mode's potential; the mode's own
// polarization is ignored so the dual field can be formed for impedances.
FieldSample field_of(Polarization pol, const ModeSpec& mode, double r, double theta, double phi)
{
    const double nu = mode.eigenpair.nu;
    const double m = mode.eigenpair.m;
    const double k = mode.wavenumber();
    const double omega = mode.omega();
    const double x = k * r;

    const bool reflected = mode.domain.has_cone();
    auto th = specfun::legendre_theta_pair(nu, m, reflected ? kPi - theta : theta);
    if (reflected) {
        th.deriv = -th.deriv;
    }
    const double j = specfun::spherical_j(nu, x);
    const double R = specfun::riccati_deriv(nu, x);
    const auto [g, dg] = azimuthal_factor(mode.azimuthal, mode.azimuthal_sign, m, phi);
    const cplx A = mode.amplitude;
    const double s = std::sin(theta);
    const double lam = nu * (nu + 1.0);

    // Radial component and the curl-curl transverse parts.
    const cplx rad = lam / r * A * j * th.value * g;
    const cplx cc_theta = A / r * R * th.deriv * g;
    const cplx cc_phi = A * R * th.value * dg / (r * s);
    // Single-curl transverse parts, without the i omega factor.
    const cplx c_theta = A * j * th.value * dg / s;
    const cplx c_phi = -A * j * th.deriv * g;

    FieldSample out;
    out.r = r;
    out.theta = theta;
    out.phi = phi;
    if (pol == Polarization::TM) {
        const cplx f = -kI * omega * mode.medium.epsilon;
        out.E = {rad, cc_theta, cc_phi};
        out.H = {cplx{0.0, 0.0}, f * c_theta, f * c_phi};
    } else {
        const cplx f = kI * omega * mode.medium.mu;
        out.E = {cplx{0.0, 0.0}, f * c_theta, f * c_phi};
        out.H = {rad, cc_theta, cc_phi};
    }
    return out;
}

double max_abs(const std::array<cplx, 3>& v)
{
    return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

double probe_theta(const angular::AngularDomain& d)
{
    const double lo = d.cone_half_angle_rad;
    return lo + (kPi - lo) * 0.3569;
}

// Largest tangential E (PEC) or H (PMC) on the wedge faces relative to the
// interior field scale.
double face_violation(ModeSpec mode)
{
    const double r = 0.6137 * mode.radius_m;
    const double theta = probe_theta(mode.domain);
    const double phi_max = mode.domain.azimuth_opening_rad;

    const FieldSample ref = evaluate(mode, r, theta, kGolden * phi_max);
    const double e_scale = max_abs(ref.E);
    const double h_scale = max_abs(ref.H);
    if (e_scale == 0.0 || h_scale == 0.0) {
        return 0.0;
    }

    auto tangential = [](const std::array<cplx, 3>& v) { return std::max(std::abs(v[0]), std::abs(v[1])); };
    const FieldSample f0 = evaluate(mode, r, theta, 0.0);
    const FieldSample f1 = evaluate(mode, r, theta, phi_max);
    double worst = tangential(f0.E) / e_scale;
    if (mode.domain.faces == angular::WedgeFaces::PecPec) {
        worst = std::max(worst, tangential(f1.E) / e_scale);
    } else {
        worst = std::max(worst, tangential(f1.H) / h_scale);
    }
    return worst;
}

} // namespace

ModeSpec make_mode(Polarization pol, const angular::AngularEigenpair& pair, const radial::RadialRoot& root,
                   double radius_m, const angular::AngularDomain& domain, cplx amplitude, const Medium& medium,
                   int azimuthal_sign)
{
    domain.validate();
    if (!(radius_m > 0.0)) {
        throw DomainError(fmt::format("radius {} m must be positive", radius_m));
    }
    if (!(medium.epsilon > 0.0 && medium.mu > 0.0)) {
        throw DomainError("medium parameters must be positive");
    }
    if (std::abs(root.nu - pair.nu) > 1e-12 * std::max(1.0, std::abs(pair.nu))) {
        throw DomainError(fmt::format("radial order {} does not match angular degree {}", root.nu, pair.nu));
    }
    if (root.kind != radial::kind_for(pol)) {
        throw DomainError(fmt::format("radial root kind does not match {} polarization", to_string(pol)));
    }
    if (azimuthal_sign != 1 && azimuthal_sign != -1) {
        throw DomainError("azimuthal sign must be +1 or -1");
    }

    ModeSpec mode;
    mode.polarization = pol;
    mode.eigenpair = pair;
    mode.radial = root;
    mode.radius_m = radius_m;
    mode.amplitude = amplitude;
    mode.medium = medium;
    mode.domain = domain;
    mode.azimuthal_sign = azimuthal_sign;

    if (domain.full_azimuth()) {
        mode.azimuthal = AzimuthalForm::Traveling;
        return mode;
    }

    int matches = 0;
    AzimuthalForm chosen = AzimuthalForm::Sine;
    for (AzimuthalForm form : {AzimuthalForm::Sine, AzimuthalForm::Cosine}) {
        mode.azimuthal = form;
        if (face_violation(mode) < 1e-9) {
            chosen = form;
            ++matches;
        }
    }
    if (matches != 1) {
        throw EvaluationError(fmt::format(
            "no unique standing-wave factor satisfies the wedge face conditions for m = {} ({} candidates)",
            pair.m, matches));
    }
    mode.azimuthal = chosen;
    return mode;
}

ModeSpec make_mode(Polarization pol, double nu, double m, int n, double radius_m,
                   const angular::AngularDomain& domain, cplx amplitude, const Medium& medium, int azimuthal_sign)
{
    const auto pair = angular::make_eigenpair(nu, m, domain.has_cone());
    const auto root = radial::root(nu, n, radial::kind_for(pol));
    return make_mode(pol, pair, root, radius_m, domain, amplitude, medium, azimuthal_sign);
}

FieldSample evaluate(const ModeSpec& mode, double r, double theta, double phi)
{
    if (!(r > 0.0 && r <= mode.radius_m * (1.0 + 1e-12))) {
        throw DomainError(fmt::format("r = {} m outside (0, {}]", r, mode.radius_m));
    }
    if (!(theta > mode.domain.cone_half_angle_rad && theta < kPi)) {
        throw DomainError(fmt::format("theta = {} rad outside ({}, pi)", theta, mode.domain.cone_half_angle_rad));
    }
    if (!mode.domain.full_azimuth()) {
        const double slack = 1e-12 * mode.domain.azimuth_opening_rad;
        if (!(phi >= -slack && phi <= mode.domain.azimuth_opening_rad + slack)) {
            throw DomainError(
                fmt::format("phi = {} rad outside the wedge [0, {}]", phi, mode.domain.azimuth_opening_rad));
        }
    }
    return field_of(mode.polarization, mode, r, theta, phi);
}

Impedances wave_impedances(const ModeSpec& mode, double r, double theta, double phi)
{
    evaluate(mode, r, theta, phi);
    const FieldSample te = field_of(Polarization::TE, mode, r, theta, phi);
    const FieldSample tm = field_of(Polarization::TM, mode, r, theta, phi);

    auto ratio = [](cplx num, cplx den, std::string_view what) {
        if (std::abs(den) == 0.0 || !std::isfinite(std::abs(num / den))) {
            throw UndefinedImpedanceError(fmt::format("{} denominator vanishes at this point", what));
        }
        return num / den;
    };

    Impedances z;
    z.zonal = mode.eigenpair.m == 0.0;
    if (z.zonal) {
        z.z_te = ratio(te.E[2], te.H[1], "zonal TE impedance: H_theta");
        z.z_tm = ratio(tm.E[1], tm.H[2], "zonal TM impedance: H_phi");
    } else {
        z.z_te = ratio(te.E[1], te.H[0], "TE impedance: H_r");
        z.z_tm = ratio(tm.E[0], tm.H[1], "TM impedance: H_theta");
    }
    return z;
}

Impedances wave_impedances(const ModeSpec& mode, double r, double theta)
{
    const double phi = mode.domain.full_azimuth() ? 0.0 : kGolden * mode.domain.azimuth_opening_rad;
    return wave_impedances(mode, r, theta, phi);
}

std::array<double, 3> poynting(const FieldSample& s)
{
    const auto& E = s.E;
    const auto& H = s.H;
    return {0.5 * std::real(E[1] * std::conj(H[2]) - E[2] * std::conj(H[1])),
            0.5 * std::real(E[2] * std::conj(H[0]) - E[0] * std::conj(H[2])),
            0.5 * std::real(E[0] * std::conj(H[1]) - E[1] * std::conj(H[0]))};
}

double azimuthal_power(const ModeSpec& mode)
{
    if (mode.azimuthal != AzimuthalForm::Traveling) {
        throw DomainError("azimuthal power is defined for traveling azimuthal waves only");
    }
    if (mode.eigenpair.m == 0.0) {
        return 0.0;
    }
    using boost::math::quadrature::gauss_kronrod;
    const double th_lo = mode.domain.cone_half_angle_rad;
    const double a = mode.radius_m;
    double worst_err = 0.0;

    auto inner = [&](double r) {
        auto f = [&](double theta) {
            const auto S = poynting(field_of(mode.polarization, mode, r, theta, 0.0));
            return S[2] * r * r * std::sin(theta);
        };
        double err = 0.0;
        double l1 = 0.0;
        const double v = gauss_kronrod<double, 61>::integrate(f, th_lo, kPi, 12, 1e-9, &err, &l1);
        worst_err = std::max(worst_err, err / std::max(l1, 1e-300));
        return v;
    };
    double err = 0.0;
    double l1 = 0.0;
    const double total = gauss_kronrod<double, 61>::integrate(inner, 0.0, a, 12, 1e-9, &err, &l1);
    worst_err = std::max(worst_err, err / std::max(l1, 1e-300));
    if (!(worst_err <= 1e-6) || !std::isfinite(total)) {
        throw IntegrationError(fmt::format("azimuthal power quadrature reached relative error {}", worst_err));
    }
    return total;
}

} // namespace sphcav::fields
