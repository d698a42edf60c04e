#include "sphcav/spectrum.hpp"

#include "sphcav/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string_view>

namespace sphcav::spectrum {

namespace detail {
// Generated at build time from data/fixtures.
struct BundledFixture {
    std::string_view name;
    std::string_view text;
};
extern const BundledFixture kBundledFixtures[];
extern const std::size_t kBundledFixtureCount;
} // namespace detail

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double parse_plain(std::string_view s, const std::string& whole)
{
    double v = 0.0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw DomainError(fmt::format("cannot parse '{}' as a number", whole));
    }
    return v;
}

double parse_factor(std::string_view s, const std::string& whole)
{
    const auto p = s.find("pi");
    if (p == std::string_view::npos) {
        return parse_plain(s, whole);
    }
    if (p + 2 != s.size()) {
        throw DomainError(fmt::format("cannot parse '{}' as a number", whole));
    }
    const auto coef = s.substr(0, p);
    return (coef.empty() ? 1.0 : parse_plain(coef, whole)) * std::numbers::pi;
}

ValidationRow compare(std::string label, double computed_ghz, const FixtureRow& row, const std::string& theory_key,
                      const std::string& reference_key)
{
    ValidationRow out;
    out.label = std::move(label);
    out.f_computed_ghz = computed_ghz;
    out.f_theory_ghz = row.number(theory_key);
    out.dev_theory_pct = 100.0 * (computed_ghz - out.f_theory_ghz) / out.f_theory_ghz;
    if (!reference_key.empty() && row.has(reference_key)) {
        out.f_reference_ghz = row.number(reference_key);
        out.dev_reference_pct = 100.0 * (computed_ghz - *out.f_reference_ghz) / *out.f_reference_ghz;
    }
    return out;
}

} // namespace

const std::string& FixtureRow::text(const std::string& key) const
{
    const auto it = fields.find(key);
    if (it == fields.end()) {
        throw LookupError(fmt::format("fixture row has no field '{}'", key));
    }
    return it->second;
}

double FixtureRow::number(const std::string& key) const
{
    return parse_real(text(key));
}

double ReferenceFixture::number(const std::string& key) const
{
    const auto v = maybe_number(key);
    if (!v) {
        throw LookupError(fmt::format("fixture '{}' has no header field '{}'", name, key));
    }
    return *v;
}

std::optional<double> ReferenceFixture::maybe_number(const std::string& key) const
{
    const auto it = header.find(key);
    if (it == header.end()) {
        return std::nullopt;
    }
    return parse_real(it->second);
}

double parse_real(const std::string& text)
{
    const std::string s = trim(text);
    if (s.empty()) {
        throw DomainError("cannot parse an empty string as a number");
    }
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        return parse_factor(s, s);
    }
    const double num = parse_factor(std::string_view(s).substr(0, slash), s);
    const double den = parse_plain(std::string_view(s).substr(slash + 1), s);
    if (den == 0.0) {
        throw DomainError(fmt::format("zero denominator in '{}'", s));
    }
    return num / den;
}

ReferenceFixture parse_fixture(const std::string& text)
{
    ReferenceFixture fx;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty()) {
            continue;
        }
        if (t[0] == '#') {
            const std::string body = trim(std::string_view(t).substr(1));
            if (fx.source.empty() && body.rfind("source:", 0) == 0) {
                fx.source = trim(std::string_view(body).substr(7));
            }
            continue;
        }
        if (t.rfind("row", 0) == 0 && t.size() > 3 && std::isspace(static_cast<unsigned char>(t[3]))) {
            FixtureRow row;
            std::istringstream fields(t.substr(4));
            std::string kv;
            while (fields >> kv) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos || eq == 0) {
                    throw DomainError(fmt::format("fixture line {}: malformed field '{}'", lineno, kv));
                }
                row.fields[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            fx.rows.push_back(std::move(row));
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw DomainError(fmt::format("fixture line {}: expected 'key = value' or 'row ...'", lineno));
        }
        fx.header[trim(std::string_view(t).substr(0, eq))] = trim(std::string_view(t).substr(eq + 1));
    }
    const auto it = fx.header.find("name");
    if (it == fx.header.end()) {
        throw DomainError("fixture has no name");
    }
    fx.name = it->second;
    return fx;
}

std::vector<std::string> fixture_names()
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < detail::kBundledFixtureCount; ++i) {
        out.emplace_back(detail::kBundledFixtures[i].name);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ReferenceFixture load_fixture(const std::string& name)
{
    for (std::size_t i = 0; i < detail::kBundledFixtureCount; ++i) {
        if (detail::kBundledFixtures[i].name == name) {
            return parse_fixture(std::string(detail::kBundledFixtures[i].text));
        }
    }
    throw LookupError(fmt::format("no bundled fixture named '{}'", name));
}

ValidationReport validate(const ReferenceFixture& fx)
{
    ValidationReport rep;
    rep.fixture = fx.name;
    rep.source = fx.source;
    rep.theory_bound_pct = fx.number("theory_bound_pct");
    rep.reference_bound_pct = fx.maybe_number("reference_bound_pct");

    const double radius = fx.number("radius_mm") * 1e-3;
    const auto kind_it = fx.header.find("kind");
    const std::string kind = kind_it == fx.header.end() ? "" : kind_it->second;
    auto ghz = [radius](double x) { return radial::frequency_from_root(x, radius) * 1e-9; };

    for (const auto& row : fx.rows) {
        if (kind == "dispersion") {
            const double nu = row.number("nu");
            const auto te = radial::j_zero(nu, 1);
            const auto tm = radial::riccati_deriv_zero(nu, 1);
            auto r_te = compare(fmt::format("nu={} TE", row.text("nu")), ghz(te.x), row, "f_te_ghz", "");
            r_te.notes.emplace_back("x printed", row.text("x_te"));
            r_te.notes.emplace_back("x computed", fmt::format("{:.6f}", te.x));
            auto r_tm = compare(fmt::format("nu={} TM", row.text("nu")), ghz(tm.x), row, "f_tm_ghz", "");
            r_tm.notes.emplace_back("x printed", row.text("x_tm"));
            r_tm.notes.emplace_back("x computed", fmt::format("{:.6f}", tm.x));
            rep.rows.push_back(std::move(r_te));
            rep.rows.push_back(std::move(r_tm));
        } else if (kind == "modes") {
            const auto& pol_text = row.text("pol");
            const Polarization pol = pol_text == "TE" ? Polarization::TE : Polarization::TM;
            const double m = row.number("m");
            const int k = static_cast<int>(row.number("k"));
            const double nu = angular::nu_regular_both_poles(m, k);
            const auto root = radial::root(nu, 1, radial::kind_for(pol));
            auto r = compare(fmt::format("mode {} {} nu={} m={}", row.text("mode"), pol_text, row.text("nu"),
                                         row.text("m")),
                             ghz(root.x), row, "f_theory_ghz", "f_reference_ghz");
            r.notes.emplace_back("x computed", fmt::format("{:.6f}", root.x));
            rep.rows.push_back(std::move(r));
        } else if (kind == "cone" || kind == "combined") {
            CavityConfig cfg;
            cfg.radius_m = radius;
            if (kind == "cone") {
                cfg.wedge_opening_deg = fx.maybe_number("opening_deg").value_or(360.0);
                cfg.cone_half_angle_deg = row.number("theta_c_deg");
            } else {
                cfg.wedge_opening_deg = row.number("opening_deg");
                cfg.cone_half_angle_deg = fx.number("cone_deg");
            }
            const auto rec = fundamental_tm(cfg);
            const std::string label = kind == "cone" ? fmt::format("theta_c={} deg", row.text("theta_c_deg"))
                                                     : fmt::format("opening={} deg", row.text("opening_deg"));
            auto r = compare(label, rec.frequency_hz * 1e-9, row, "f_theory_ghz", "f_reference_ghz");
            if (row.has("m")) {
                r.notes.emplace_back("m printed", row.text("m"));
                r.notes.emplace_back("m computed", fmt::format("{:.6f}", rec.m));
            }
            r.notes.emplace_back("nu printed", row.text("nu"));
            r.notes.emplace_back("nu computed", fmt::format("{:.6f}", rec.nu));
            rep.rows.push_back(std::move(r));
        } else {
            throw LookupError(fmt::format("fixture '{}' has unknown kind '{}'", fx.name, kind));
        }
    }

    double sum_t = 0.0;
    double sum_r = 0.0;
    int n_r = 0;
    for (const auto& r : rep.rows) {
        rep.max_dev_theory_pct = std::max(rep.max_dev_theory_pct, std::abs(r.dev_theory_pct));
        sum_t += std::abs(r.dev_theory_pct);
        if (r.dev_reference_pct) {
            rep.max_dev_reference_pct = std::max(rep.max_dev_reference_pct.value_or(0.0), std::abs(*r.dev_reference_pct));
            sum_r += std::abs(*r.dev_reference_pct);
            ++n_r;
        }
    }
    if (!rep.rows.empty()) {
        rep.mean_dev_theory_pct = sum_t / static_cast<double>(rep.rows.size());
    }
    if (n_r > 0) {
        rep.mean_dev_reference_pct = sum_r / n_r;
    }
    rep.passed = !rep.rows.empty() && rep.max_dev_theory_pct <= rep.theory_bound_pct;
    if (rep.reference_bound_pct && rep.max_dev_reference_pct) {
        rep.passed = rep.passed && *rep.max_dev_reference_pct <= *rep.reference_bound_pct + kReferenceSlackPct;
    }
    return rep;
}

ValidationReport validate(const std::string& fixture_name)
{
    return validate(load_fixture(fixture_name));
}

} // namespace sphcav::spectrum
