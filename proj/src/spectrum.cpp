#include "sphcav/spectrum.hpp"

#include "sphcav/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

namespace sphcav::spectrum {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCutoffSlack = 1e-6;

double deg2rad(double d)
{
    return d * kPi / 180.0;
}

// Re-raises library errors with the offending indices prefixed.
template <class Fn>
auto with_context(const std::string& ctx, Fn&& fn)
{
    try {
        return fn();
    } catch (const RootError& e) {
        throw RootError(ctx + ": " + e.what(), e.bracket_lo(), e.bracket_hi());
    } catch (const SearchError& e) {
        throw SearchError(ctx + ": " + e.what(), e.window_lo(), e.window_hi());
    } catch (const ConvergenceError& e) {
        throw ConvergenceError(ctx + ": " + e.what(), e.partial_sum(), e.last_term());
    }
}

double azimuthal_order(const angular::AngularDomain& d, int index)
{
    return angular::azimuthal_indices(d, index).back();
}

ModeRecord record(Polarization pol, double nu, double m, std::optional<int> k, std::optional<int> branch,
                  const radial::RadialRoot& root, double radius, bool cone)
{
    ModeRecord r;
    r.polarization = pol;
    r.nu = nu;
    r.m = m;
    r.k = k;
    r.branch = branch;
    r.n = root.n;
    r.root_x = root.x;
    r.frequency_hz = radial::frequency_from_root(root.x, radius);
    r.family = angular::classify(nu, m, cone);
    return r;
}

// Appends every radial overtone of (pol, nu) below the limit; returns false if
// even n = 1 lies above it.
bool add_radial_series(std::vector<ModeRecord>& out, Polarization pol, double nu, double m, std::optional<int> k,
                       std::optional<int> branch, double radius, bool cone, double f_limit)
{
    for (int n = 1;; ++n) {
        const auto ctx = fmt::format("{} mode m = {}, nu = {}, n = {}", to_string(pol), m, nu, n);
        const auto root = with_context(ctx, [&] { return radial::root(nu, n, radial::kind_for(pol)); });
        if (radial::frequency_from_root(root.x, radius) > f_limit) {
            return n > 1;
        }
        out.push_back(record(pol, nu, m, k, branch, root, radius, cone));
    }
}

} // namespace

void CavityConfig::validate() const
{
    if (!(radius_m > 0.0)) {
        throw DomainError(fmt::format("radius {} m must be positive", radius_m));
    }
    if (!(wedge_opening_deg > 0.0 && wedge_opening_deg <= 360.0)) {
        throw DomainError(fmt::format("wedge opening {} deg outside (0, 360]", wedge_opening_deg));
    }
    if (!(cone_half_angle_deg >= 0.0 && cone_half_angle_deg < 90.0)) {
        throw DomainError(fmt::format("cone half-angle {} deg outside [0, 90)", cone_half_angle_deg));
    }
}

angular::AngularDomain CavityConfig::domain() const
{
    validate();
    angular::AngularDomain d;
    d.azimuth_opening_rad = wedge_opening_deg >= 360.0 ? 2.0 * kPi : deg2rad(wedge_opening_deg);
    d.cone_half_angle_rad = deg2rad(cone_half_angle_deg);
    d.faces = faces;
    return d;
}

bool record_less(const ModeRecord& a, const ModeRecord& b)
{
    auto key = [](const ModeRecord& r) {
        return std::make_tuple(r.frequency_hz, r.polarization == Polarization::TM ? 0 : 1, r.m, r.nu,
                               r.k.value_or(-1), r.branch.value_or(-1), r.n);
    };
    return key(a) < key(b);
}

std::vector<ModeRecord> enumerate_modes(const CavityConfig& config, double f_max_hz)
{
    const auto domain = config.domain();
    if (!(f_max_hz > 0.0)) {
        throw DomainError(fmt::format("frequency limit {} Hz must be positive", f_max_hz));
    }
    const double limit = f_max_hz * (1.0 + kCutoffSlack);
    const double a = config.radius_m;
    const bool cone = domain.has_cone();
    std::vector<ModeRecord> out;

    for (int idx = 1;; ++idx) {
        const double m = azimuthal_order(domain, idx);
        bool any = false;
        if (!cone) {
            for (int k = (m == 0.0 ? 1 : 0);; ++k) {
                const double nu = angular::nu_regular_both_poles(m, k);
                const bool tm = add_radial_series(out, Polarization::TM, nu, m, k, std::nullopt, a, false, limit);
                if (!tm) {
                    break;
                }
                add_radial_series(out, Polarization::TE, nu, m, k, std::nullopt, a, false, limit);
                any = true;
            }
        } else {
            for (Polarization pol : {Polarization::TM, Polarization::TE}) {
                for (int b = 1;; ++b) {
                    const auto ctx = fmt::format("{} cone branch {} for m = {}", to_string(pol), b, m);
                    const double nu = with_context(
                        ctx, [&] { return angular::cone_nu(m, domain.cone_half_angle_rad, pol, b); });
                    if (!add_radial_series(out, pol, nu, m, std::nullopt, b, a, true, limit)) {
                        break;
                    }
                    any = true;
                }
            }
        }
        if (!any) {
            break;
        }
    }
    std::sort(out.begin(), out.end(), record_less);
    return out;
}

std::vector<ModeRecord> enumerate_lowest(const CavityConfig& config, int count)
{
    if (count < 1) {
        throw DomainError(fmt::format("mode count {} must be >= 1", count));
    }
    double f = radial::frequency_from_root(4.0, config.radius_m);
    for (int iter = 0; iter < 64; ++iter, f *= 1.5) {
        auto modes = enumerate_modes(config, f);
        if (static_cast<int>(modes.size()) >= count) {
            modes.resize(static_cast<std::size_t>(count));
            return modes;
        }
    }
    throw SearchError(fmt::format("could not collect {} modes", count), 0.0, f);
}

ModeRecord fundamental_tm(const CavityConfig& config)
{
    const auto domain = config.domain();
    const double m = azimuthal_order(domain, 1);
    const bool cone = domain.has_cone();
    double nu = 0.0;
    std::optional<int> k;
    std::optional<int> branch;
    if (cone) {
        nu = with_context(fmt::format("TM cone branch 1 for m = {}", m),
                          [&] { return angular::cone_nu(m, domain.cone_half_angle_rad, Polarization::TM, 1); });
        branch = 1;
    } else {
        k = m == 0.0 ? 1 : 0;
        nu = angular::nu_regular_both_poles(m, *k);
    }
    const auto root = radial::riccati_deriv_zero(nu, 1);
    return record(Polarization::TM, nu, m, k, branch, root, config.radius_m, cone);
}

std::vector<ConeSweepRow> cone_sweep(const CavityConfig& tmpl, const std::vector<double>& theta_c_deg)
{
    std::vector<ConeSweepRow> rows;
    rows.reserve(theta_c_deg.size());
    for (double th : theta_c_deg) {
        CavityConfig cfg = tmpl;
        cfg.cone_half_angle_deg = th;
        if (!(th > 0.0)) {
            throw DomainError(fmt::format("cone sweep angle {} deg must be positive", th));
        }
        const auto rec = fundamental_tm(cfg);
        rows.push_back({th, rec.m, rec.nu, rec.root_x, rec.frequency_hz});
    }
    return rows;
}

std::vector<WedgeSweepRow> wedge_sweep(const CavityConfig& tmpl, const std::vector<double>& openings_deg)
{
    std::vector<WedgeSweepRow> rows;
    rows.reserve(openings_deg.size());
    for (double phi : openings_deg) {
        CavityConfig cfg = tmpl;
        cfg.wedge_opening_deg = phi;
        const auto rec = fundamental_tm(cfg);
        rows.push_back({phi, rec.m, rec.nu, rec.root_x, rec.frequency_hz});
    }
    return rows;
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2) {
        throw DomainError("linear fit needs two or more paired samples");
    }
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double den = n * sxx - sx * sx;
    if (den == 0.0) {
        throw DomainError("linear fit abscissae are all equal");
    }
    const double slope = (n * sxy - sx * sy) / den;
    return {slope, (sy - slope * sx) / n};
}

std::vector<DispersionRow> dispersion_table(const std::vector<double>& nu_list, double radius_m)
{
    std::vector<DispersionRow> rows;
    rows.reserve(nu_list.size());
    for (double nu : nu_list) {
        const auto te = radial::j_zero(nu, 1);
        const auto tm = radial::riccati_deriv_zero(nu, 1);
        rows.push_back({nu, te.x, radial::frequency_from_root(te.x, radius_m), tm.x,
                        radial::frequency_from_root(tm.x, radius_m)});
    }
    return rows;
}

} // namespace sphcav::spectrum
