#pragma once

#include "sphcav/angular.hpp"
#include "sphcav/radial.hpp"
#include "sphcav/types.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sphcav::spectrum {

struct CavityConfig {
    double radius_m = 0.015;
    /// 360 means no wedge.
    double wedge_opening_deg = 360.0;
    /// 0 means no cone.
    double cone_half_angle_deg = 0.0;
    angular::WedgeFaces faces = angular::WedgeFaces::PecPec;

    void validate() const;
    angular::AngularDomain domain() const;
    bool full_sphere() const noexcept { return wedge_opening_deg >= 360.0 && cone_half_angle_deg == 0.0; }
};

struct ModeRecord {
    Polarization polarization = Polarization::TM;
    double nu = 0.0;
    double m = 0.0;
    /// nu = m + k; absent for cone modes.
    std::optional<int> k;
    /// Cone branch; absent without a cone.
    std::optional<int> branch;
    int n = 1;
    double root_x = 0.0;
    double frequency_hz = 0.0;
    angular::Family family = angular::Family::Null;
};

/// Frequency order, then TM before TE, smaller m, nu, k, branch, n.
bool record_less(const ModeRecord& a, const ModeRecord& b);

/// All modes with frequency <= f_max_hz (1e-6 relative slack), sorted.
std::vector<ModeRecord> enumerate_modes(const CavityConfig& config, double f_max_hz);

/// The lowest `count` modes, sorted.
std::vector<ModeRecord> enumerate_lowest(const CavityConfig& config, int count);

/// Lowest-frequency TM mode of the configuration.
ModeRecord fundamental_tm(const CavityConfig& config);

struct ConeSweepRow {
    double theta_c_deg = 0.0;
    double m = 0.0;
    double nu = 0.0;
    double root_x = 0.0;
    double frequency_hz = 0.0;
};

/// Branch-1 TM degree and fundamental TM frequency per cone half-angle. The
/// azimuthal order is the first admissible one of the template.
std::vector<ConeSweepRow> cone_sweep(const CavityConfig& tmpl, const std::vector<double>& theta_c_deg);

struct WedgeSweepRow {
    double opening_deg = 0.0;
    double m = 0.0;
    double nu = 0.0;
    double root_x = 0.0;
    double frequency_hz = 0.0;
};

std::vector<WedgeSweepRow> wedge_sweep(const CavityConfig& tmpl, const std::vector<double>& openings_deg);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
};

/// Least-squares line through (x, y).
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

struct DispersionRow {
    double nu = 0.0;
    double x_te = 0.0;
    double f_te_hz = 0.0;
    double x_tm = 0.0;
    double f_tm_hz = 0.0;
};

std::vector<DispersionRow> dispersion_table(const std::vector<double>& nu_list, double radius_m = 0.015);

// ---------------------------------------------------------------------------
// Reference fixtures

struct FixtureRow {
    std::map<std::string, std::string> fields;

    bool has(const std::string& key) const { return fields.count(key) != 0; }
    const std::string& text(const std::string& key) const;
    double number(const std::string& key) const;
};

struct ReferenceFixture {
    std::string name;
    std::string source;
    std::map<std::string, std::string> header;
    std::vector<FixtureRow> rows;

    double number(const std::string& key) const;
    std::optional<double> maybe_number(const std::string& key) const;
};

/// Parses a decimal, a ratio "p/q", or a multiple of pi ("pi", "pi/2", "2pi").
double parse_real(const std::string& text);

ReferenceFixture parse_fixture(const std::string& text);

/// Names of the bundled fixtures.
std::vector<std::string> fixture_names();

/// Bundled fixture by name; LookupError if absent.
ReferenceFixture load_fixture(const std::string& name);

struct ValidationRow {
    std::string label;
    double f_theory_ghz = 0.0;
    std::optional<double> f_reference_ghz;
    double f_computed_ghz = 0.0;
    double dev_theory_pct = 0.0;
    std::optional<double> dev_reference_pct;
    /// Informational pairs such as printed vs computed nu.
    std::vector<std::pair<std::string, std::string>> notes;
};

struct ValidationReport {
    std::string fixture;
    std::string source;
    std::vector<ValidationRow> rows;
    double theory_bound_pct = 0.0;
    std::optional<double> reference_bound_pct;
    double max_dev_theory_pct = 0.0;
    double mean_dev_theory_pct = 0.0;
    std::optional<double> max_dev_reference_pct;
    std::optional<double> mean_dev_reference_pct;
    bool passed = false;
};

/// Slack added to the fixture's stated reference bound.
inline constexpr double kReferenceSlackPct = 0.3;

ValidationReport validate(const ReferenceFixture& fixture);
ValidationReport validate(const std::string& fixture_name);

} // namespace sphcav::spectrum
