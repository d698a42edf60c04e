#include "sphcav/sphcav.hpp"

#include <CLI11.hpp>

#include <fmt/format.h>

#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace sphcav;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

struct Geometry {
    double radius_mm = 15.0;
    double wedge_deg = 360.0;
    double cone_deg = 0.0;
    std::string faces = "pec-pec";

    spectrum::CavityConfig config() const
    {
        spectrum::CavityConfig c;
        c.radius_m = radius_mm * 1e-3;
        c.wedge_opening_deg = wedge_deg;
        c.cone_half_angle_deg = cone_deg;
        c.faces = faces == "pec-pmc" ? angular::WedgeFaces::PecPmc : angular::WedgeFaces::PecPec;
        c.validate();
        return c;
    }
};

void add_geometry(CLI::App* cmd, Geometry& g, bool with_wedge = true, bool with_cone = true)
{
    cmd->add_option("--radius-mm", g.radius_mm, "Cavity radius in mm")->capture_default_str();
    if (with_wedge) {
        cmd->add_option("--wedge-deg", g.wedge_deg, "Retained azimuthal opening in degrees (360 = none)")
            ->capture_default_str();
        cmd->add_option("--faces", g.faces, "Wedge faces")
            ->check(CLI::IsMember({"pec-pec", "pec-pmc"}))
            ->capture_default_str();
    }
    if (with_cone) {
        cmd->add_option("--cone-deg", g.cone_deg, "Cone half-angle in degrees (0 = none)")->capture_default_str();
    }
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        out.push_back(item);
    }
    return out;
}

std::vector<double> parse_list(const std::vector<std::string>& items)
{
    std::vector<double> out;
    for (const auto& it : items) {
        for (const auto& part : split(it, ',')) {
            if (!part.empty()) {
                out.push_back(spectrum::parse_real(part));
            }
        }
    }
    return out;
}

struct ModeArg {
    Polarization pol = Polarization::TM;
    double nu = 0.0;
    double m = 0.0;
    int n = 1;
};

ModeArg parse_mode(const std::string& text)
{
    const auto parts = split(text, ',');
    if (parts.size() != 4) {
        throw DomainError(fmt::format("--mode expects pol,nu,m,n, got '{}'", text));
    }
    ModeArg a;
    if (parts[0] == "TM" || parts[0] == "tm") {
        a.pol = Polarization::TM;
    } else if (parts[0] == "TE" || parts[0] == "te") {
        a.pol = Polarization::TE;
    } else {
        throw DomainError(fmt::format("unknown polarization '{}'", parts[0]));
    }
    a.nu = spectrum::parse_real(parts[1]);
    a.m = spectrum::parse_real(parts[2]);
    a.n = std::stoi(parts[3]);
    return a;
}

fields::ModeSpec build_mode(const ModeArg& a, const Geometry& g, int sign)
{
    const auto cfg = g.config();
    return fields::make_mode(a.pol, a.nu, a.m, a.n, cfg.radius_m, cfg.domain(), {1.0, 0.0}, {}, sign);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Resonant modes of spherical cavities with wedge and cone boundaries"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "table";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "table"}))
        ->capture_default_str();

    int status = 0;
    std::string out;

    // modes
    auto* modes = app.add_subcommand("modes", "List resonant modes in frequency order");
    Geometry g_modes;
    double fmax_ghz = 0.0;
    int count = 0;
    add_geometry(modes, g_modes);
    auto* opt_fmax = modes->add_option("--fmax-ghz", fmax_ghz, "Upper frequency limit in GHz (inclusive)");
    auto* opt_count = modes->add_option("--count", count, "Number of lowest modes");
    opt_fmax->excludes(opt_count);
    modes->callback([&] {
        const auto cfg = g_modes.config();
        const auto list = opt_fmax->count() ? spectrum::enumerate_modes(cfg, fmax_ghz * 1e9)
                                            : spectrum::enumerate_lowest(cfg, opt_count->count() ? count : 10);
        out = report::modes(list, report::parse_format(format));
    });

    // dispersion
    auto* disp = app.add_subcommand("dispersion", "First TE and TM roots and frequencies per order");
    std::vector<std::string> nu_list{"0", "0.5", "1", "1.5", "2", "2.5", "3"};
    double disp_radius_mm = 15.0;
    disp->add_option("--nu-list", nu_list, "Orders (comma or space separated; fractions and pi allowed)");
    disp->add_option("--radius-mm", disp_radius_mm, "Cavity radius in mm")->capture_default_str();
    disp->callback([&] {
        const auto rows = spectrum::dispersion_table(parse_list(nu_list), disp_radius_mm * 1e-3);
        out = report::dispersion(rows, report::parse_format(format));
    });

    // cone-sweep
    auto* cone = app.add_subcommand("cone-sweep", "Fundamental TM mode against cone half-angle");
    Geometry g_cone;
    std::vector<std::string> thetas{"0.38", "7.59", "14.93", "21.80", "28.07", "33.69"};
    add_geometry(cone, g_cone, true, false);
    cone->add_option("--thetas", thetas, "Cone half-angles in degrees");
    cone->callback([&] {
        const auto rows = spectrum::cone_sweep(g_cone.config(), parse_list(thetas));
        out = report::cone_sweep(rows, report::parse_format(format));
    });

    // wedge-sweep
    auto* wedge = app.add_subcommand("wedge-sweep", "Fundamental TM mode against wedge opening");
    Geometry g_wedge;
    std::vector<std::string> openings{"180", "210", "240", "270", "300", "330", "360"};
    add_geometry(wedge, g_wedge, false, true);
    wedge->add_option("--openings", openings, "Retained openings in degrees");
    wedge->callback([&] {
        const auto rows = spectrum::wedge_sweep(g_wedge.config(), parse_list(openings));
        out = report::wedge_sweep(rows, report::parse_format(format));
    });

    // field
    auto* field = app.add_subcommand("field", "Field components of one mode at a point");
    Geometry g_field;
    std::string field_mode;
    std::string at;
    int field_sign = 1;
    add_geometry(field, g_field);
    field->add_option("--mode", field_mode, "pol,nu,m,n e.g. TM,2/3,2/3,1")->required();
    field->add_option("--at", at, "r_mm,theta_deg,phi_deg")->required();
    field->add_option("--sign", field_sign, "Travel direction of exp(i s m phi)")
        ->check(CLI::IsMember({-1, 1}))
        ->capture_default_str();
    field->callback([&] {
        const auto mode = build_mode(parse_mode(field_mode), g_field, field_sign);
        const auto p = parse_list({at});
        if (p.size() != 3) {
            throw DomainError(fmt::format("--at expects r_mm,theta_deg,phi_deg, got '{}'", at));
        }
        const auto s = fields::evaluate(mode, p[0] * 1e-3, p[1] * kDeg, p[2] * kDeg);
        out = report::field(mode, s, report::parse_format(format));
    });

    // validate
    auto* val = app.add_subcommand("validate", "Recompute a bundled reference table");
    std::string fixture;
    val->add_option("--fixture,fixture", fixture, "Fixture name")->required();
    val->callback([&] {
        const auto rep = spectrum::validate(fixture);
        out = report::validation(rep, report::parse_format(format));
        status = rep.passed ? 0 : 2;
    });

    // energy
    auto* en = app.add_subcommand("energy", "Stored energy of one mode");
    Geometry g_energy;
    std::string energy_mode;
    bool normalize = false;
    add_geometry(en, g_energy);
    en->add_option("--mode", energy_mode, "pol,nu,m,n")->required();
    en->add_flag("--normalize", normalize, "Scale the amplitude to 1 J before reporting");
    en->callback([&] {
        auto mode = build_mode(parse_mode(energy_mode), g_energy, 1);
        if (normalize) {
            mode = energy::normalized_to_unit_energy(mode);
        }
        out = report::energy(mode, energy::mode_energy(mode), report::parse_format(format));
    });

    // fixtures
    auto* fx = app.add_subcommand("fixtures", "List bundled reference tables");
    fx->callback([&] {
        for (const auto& n : spectrum::fixture_names()) {
            out += n + "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    }
    std::fwrite(out.data(), 1, out.size(), stdout);
    return status;
}
