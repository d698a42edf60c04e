#include "sphcav/report.hpp"

#include "sphcav/errors.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace sphcav::report {

namespace {

using nlohmann::json;

json opt(const std::optional<int>& v)
{
    return v ? json(*v) : json(nullptr);
}

json opt(const std::optional<double>& v)
{
    return v ? json(*v) : json(nullptr);
}

std::string opt_csv(const std::optional<int>& v)
{
    return v ? fmt::format("{}", *v) : std::string();
}

std::string cplx_text(fields::cplx z)
{
    return fmt::format("{:+.9e}{:+.9e}i", z.real(), z.imag());
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

} // namespace

Format parse_format(const std::string& s)
{
    if (s == "csv") {
        return Format::Csv;
    }
    if (s == "json") {
        return Format::Json;
    }
    if (s == "table") {
        return Format::Table;
    }
    throw DomainError(fmt::format("unknown output format '{}' (csv, json, table)", s));
}

std::string modes(const std::vector<spectrum::ModeRecord>& records, Format f)
{
    std::string out;
    switch (f) {
    case Format::Csv:
        out = "pol,nu,m,k,n,x,f_GHz,family\n";
        for (const auto& r : records) {
            out += fmt::format("{},{},{},{},{},{},{},{}\n", to_string(r.polarization), r.nu, r.m, opt_csv(r.k), r.n,
                               r.root_x, r.frequency_hz * 1e-9, angular::to_string(r.family));
        }
        return out;
    case Format::Json: {
        json arr = json::array();
        for (const auto& r : records) {
            arr.push_back({{"pol", std::string(to_string(r.polarization))},
                           {"nu", r.nu},
                           {"m", r.m},
                           {"k", opt(r.k)},
                           {"n", r.n},
                           {"x", r.root_x},
                           {"f_GHz", r.frequency_hz * 1e-9},
                           {"family", std::string(angular::to_string(r.family))}});
        }
        return dump(arr);
    }
    case Format::Table:
        out = fmt::format("{:>4} {:>3} {:>9} {:>9} {:>3} {:>3} {:>9} {:>9}  {}\n", "#", "pol", "nu", "m", "k", "n", "x",
                          "f [GHz]", "family");
        for (std::size_t i = 0; i < records.size(); ++i) {
            const auto& r = records[i];
            out += fmt::format("{:>4} {:>3} {:>9.4f} {:>9.4f} {:>3} {:>3} {:>9.4f} {:>9.2f}  {}\n", i + 1,
                               to_string(r.polarization), r.nu, r.m, r.k ? fmt::format("{}", *r.k) : "-", r.n,
                               r.root_x, r.frequency_hz * 1e-9, angular::to_string(r.family));
        }
        return out;
    }
    return out;
}

std::string dispersion(const std::vector<spectrum::DispersionRow>& rows, Format f)
{
    std::string out;
    switch (f) {
    case Format::Csv:
        out = "nu,x_te,f_te_GHz,x_tm,f_tm_GHz\n";
        for (const auto& r : rows) {
            out += fmt::format("{},{},{},{},{}\n", r.nu, r.x_te, r.f_te_hz * 1e-9, r.x_tm, r.f_tm_hz * 1e-9);
        }
        return out;
    case Format::Json: {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"nu", r.nu},
                           {"x_te", r.x_te},
                           {"f_te_GHz", r.f_te_hz * 1e-9},
                           {"x_tm", r.x_tm},
                           {"f_tm_GHz", r.f_tm_hz * 1e-9}});
        }
        return dump(arr);
    }
    case Format::Table:
        out = fmt::format("{:>8} {:>9} {:>9} {:>9} {:>9}\n", "nu", "x (TE)", "f_TE", "x' (TM)", "f_TM");
        for (const auto& r : rows) {
            out += fmt::format("{:>8.4f} {:>9.4f} {:>9.2f} {:>9.4f} {:>9.2f}\n", r.nu, r.x_te, r.f_te_hz * 1e-9, r.x_tm,
                               r.f_tm_hz * 1e-9);
        }
        return out;
    }
    return out;
}

std::string cone_sweep(const std::vector<spectrum::ConeSweepRow>& rows, Format f)
{
    std::string out;
    switch (f) {
    case Format::Csv:
        out = "theta_c_deg,m,nu,x,f_GHz\n";
        for (const auto& r : rows) {
            out += fmt::format("{},{},{},{},{}\n", r.theta_c_deg, r.m, r.nu, r.root_x, r.frequency_hz * 1e-9);
        }
        return out;
    case Format::Json: {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"theta_c_deg", r.theta_c_deg},
                           {"m", r.m},
                           {"nu", r.nu},
                           {"x", r.root_x},
                           {"f_GHz", r.frequency_hz * 1e-9}});
        }
        return dump(arr);
    }
    case Format::Table:
        out = fmt::format("{:>10} {:>8} {:>9} {:>9} {:>9}\n", "theta_c", "m", "nu", "x'", "f [GHz]");
        for (const auto& r : rows) {
            out += fmt::format("{:>10.2f} {:>8.4f} {:>9.5f} {:>9.4f} {:>9.2f}\n", r.theta_c_deg, r.m, r.nu, r.root_x,
                               r.frequency_hz * 1e-9);
        }
        return out;
    }
    return out;
}

std::string wedge_sweep(const std::vector<spectrum::WedgeSweepRow>& rows, Format f)
{
    std::string out;
    switch (f) {
    case Format::Csv:
        out = "opening_deg,m,nu,x,f_GHz\n";
        for (const auto& r : rows) {
            out += fmt::format("{},{},{},{},{}\n", r.opening_deg, r.m, r.nu, r.root_x, r.frequency_hz * 1e-9);
        }
        return out;
    case Format::Json: {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"opening_deg", r.opening_deg},
                           {"m", r.m},
                           {"nu", r.nu},
                           {"x", r.root_x},
                           {"f_GHz", r.frequency_hz * 1e-9}});
        }
        return dump(arr);
    }
    case Format::Table:
        out = fmt::format("{:>10} {:>8} {:>9} {:>9} {:>9}\n", "opening", "m", "nu", "x'", "f [GHz]");
        for (const auto& r : rows) {
            out += fmt::format("{:>10.2f} {:>8.4f} {:>9.5f} {:>9.4f} {:>9.2f}\n", r.opening_deg, r.m, r.nu, r.root_x,
                               r.frequency_hz * 1e-9);
        }
        return out;
    }
    return out;
}

std::string validation(const spectrum::ValidationReport& rep, Format f)
{
    std::string out;
    switch (f) {
    case Format::Csv:
        out = "row,f_theory_GHz,f_reference_GHz,f_computed_GHz,dev_theory_pct,dev_reference_pct\n";
        for (const auto& r : rep.rows) {
            out += fmt::format("\"{}\",{},{},{},{},{}\n", r.label, r.f_theory_ghz,
                               r.f_reference_ghz ? fmt::format("{}", *r.f_reference_ghz) : "", r.f_computed_ghz,
                               r.dev_theory_pct,
                               r.dev_reference_pct ? fmt::format("{}", *r.dev_reference_pct) : "");
        }
        return out;
    case Format::Json: {
        json rows = json::array();
        for (const auto& r : rep.rows) {
            json notes = json::object();
            for (const auto& [k, v] : r.notes) {
                notes[k] = v;
            }
            rows.push_back({{"row", r.label},
                            {"f_theory_GHz", r.f_theory_ghz},
                            {"f_reference_GHz", opt(r.f_reference_ghz)},
                            {"f_computed_GHz", r.f_computed_ghz},
                            {"dev_theory_pct", r.dev_theory_pct},
                            {"dev_reference_pct", opt(r.dev_reference_pct)},
                            {"notes", notes}});
        }
        json j = {{"fixture", rep.fixture},
                  {"source", rep.source},
                  {"theory_bound_pct", rep.theory_bound_pct},
                  {"reference_bound_pct", opt(rep.reference_bound_pct)},
                  {"reference_slack_pct", spectrum::kReferenceSlackPct},
                  {"max_dev_theory_pct", rep.max_dev_theory_pct},
                  {"mean_dev_theory_pct", rep.mean_dev_theory_pct},
                  {"max_dev_reference_pct", opt(rep.max_dev_reference_pct)},
                  {"mean_dev_reference_pct", opt(rep.mean_dev_reference_pct)},
                  {"passed", rep.passed},
                  {"rows", rows}};
        return dump(j);
    }
    case Format::Table: {
        out = fmt::format("fixture {} ({})\n", rep.fixture, rep.source);
        out += fmt::format("{:<28} {:>8} {:>8} {:>8} {:>9} {:>9}\n", "row", "theory", "ref", "computed", "d_theory%",
                           "d_ref%");
        for (const auto& r : rep.rows) {
            out += fmt::format("{:<28} {:>8.2f} {:>8} {:>8.3f} {:>9.2f} {:>9}", r.label, r.f_theory_ghz,
                               r.f_reference_ghz ? fmt::format("{:.2f}", *r.f_reference_ghz) : "-", r.f_computed_ghz,
                               r.dev_theory_pct,
                               r.dev_reference_pct ? fmt::format("{:.2f}", *r.dev_reference_pct) : "-");
            for (const auto& [k, v] : r.notes) {
                out += fmt::format("  {}={}", k, v);
            }
            out += "\n";
        }
        out += fmt::format("max |d_theory| = {:.3f}% (bound {:.2f}%), mean {:.3f}%\n", rep.max_dev_theory_pct,
                           rep.theory_bound_pct, rep.mean_dev_theory_pct);
        if (rep.max_dev_reference_pct && rep.reference_bound_pct) {
            out += fmt::format("max |d_ref| = {:.3f}% (bound {:.2f}% + {:.1f}%), mean {:.3f}%\n",
                               *rep.max_dev_reference_pct, *rep.reference_bound_pct, spectrum::kReferenceSlackPct,
                               rep.mean_dev_reference_pct.value_or(0.0));
        }
        out += rep.passed ? "PASS\n" : "FAIL\n";
        return out;
    }
    }
    return out;
}

std::string field(const fields::ModeSpec& mode, const fields::FieldSample& s, Format f)
{
    static constexpr const char* names[] = {"E_r", "E_theta", "E_phi", "H_r", "H_theta", "H_phi"};
    const std::array<fields::cplx, 6> v = {s.E[0], s.E[1], s.E[2], s.H[0], s.H[1], s.H[2]};
    const auto S = fields::poynting(s);
    std::string out;
    switch (f) {
    case Format::Csv:
        out = "component,re,im\n";
        for (std::size_t i = 0; i < 6; ++i) {
            out += fmt::format("{},{},{}\n", names[i], v[i].real(), v[i].imag());
        }
        out += fmt::format("S_r,{},0\nS_theta,{},0\nS_phi,{},0\n", S[0], S[1], S[2]);
        return out;
    case Format::Json: {
        json comps = json::object();
        for (std::size_t i = 0; i < 6; ++i) {
            comps[names[i]] = {v[i].real(), v[i].imag()};
        }
        json j = {{"pol", std::string(to_string(mode.polarization))},
                  {"nu", mode.eigenpair.nu},
                  {"m", mode.eigenpair.m},
                  {"n", mode.radial.n},
                  {"f_GHz", mode.omega() / (2.0 * constants::pi) * 1e-9},
                  {"point", {{"r_m", s.r}, {"theta_rad", s.theta}, {"phi_rad", s.phi}}},
                  {"fields", comps},
                  {"poynting", {S[0], S[1], S[2]}}};
        return dump(j);
    }
    case Format::Table:
        out = fmt::format("{} nu={} m={} n={}  f = {:.4f} GHz  at r={} m, theta={} rad, phi={} rad\n",
                          to_string(mode.polarization), mode.eigenpair.nu, mode.eigenpair.m, mode.radial.n,
                          mode.omega() / (2.0 * constants::pi) * 1e-9, s.r, s.theta, s.phi);
        for (std::size_t i = 0; i < 6; ++i) {
            out += fmt::format("  {:<8} {}\n", names[i], cplx_text(v[i]));
        }
        out += fmt::format("  S = ({:+.6e}, {:+.6e}, {:+.6e}) W/m^2\n", S[0], S[1], S[2]);
        return out;
    }
    return out;
}

std::string energy(const fields::ModeSpec& mode, const energy::EnergyReport& rep, Format f)
{
    const double total = rep.total_energy.value_or(0.0);
    switch (f) {
    case Format::Csv:
        return fmt::format(
            "pol,nu,m,n,radial_integrable,angular_norm,I_r,I_theta,I_phi,U_electric_J,U_magnetic_J,U_total_J\n"
            "{},{},{},{},{},{},{},{},{},{},{},{}\n",
            to_string(mode.polarization), mode.eigenpair.nu, mode.eigenpair.m, mode.radial.n,
            rep.radial_integrable ? "true" : "false", rep.angular_norm, rep.factorization.I_r,
            rep.factorization.I_theta, rep.factorization.I_phi, rep.electric_energy, rep.magnetic_energy, total);
    case Format::Json: {
        json j = {{"pol", std::string(to_string(mode.polarization))},
                  {"nu", mode.eigenpair.nu},
                  {"m", mode.eigenpair.m},
                  {"n", mode.radial.n},
                  {"radial_integrable", rep.radial_integrable},
                  {"angular_norm", rep.angular_norm},
                  {"factorization",
                   {{"I_r", rep.factorization.I_r},
                    {"I_theta", rep.factorization.I_theta},
                    {"I_phi", rep.factorization.I_phi}}},
                  {"U_electric_J", rep.electric_energy},
                  {"U_magnetic_J", rep.magnetic_energy},
                  {"U_total_J", rep.total_energy ? json(*rep.total_energy) : json(nullptr)}};
        return dump(j);
    }
    case Format::Table:
        return fmt::format("{} nu={} m={} n={}\n  radial integrable  {}\n  angular norm       {:.10g}\n"
                           "  I_r, I_theta, I_phi  {:.6e}, {:.10g}, {:.10g}\n"
                           "  U electric         {:.6e} J\n  U magnetic         {:.6e} J\n  U total            {:.6e} J\n",
                           to_string(mode.polarization), mode.eigenpair.nu, mode.eigenpair.m, mode.radial.n,
                           rep.radial_integrable ? "yes" : "no", rep.angular_norm, rep.factorization.I_r,
                           rep.factorization.I_theta, rep.factorization.I_phi, rep.electric_energy,
                           rep.magnetic_energy, total);
    }
    return {};
}

} // namespace sphcav::report
