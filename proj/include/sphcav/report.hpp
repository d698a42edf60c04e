#pragma once

// Text renderings of library results. CSV and JSON carry full precision;
// tables round frequencies to 0.01 GHz.

#include "sphcav/energy.hpp"
#include "sphcav/fields.hpp"
#include "sphcav/spectrum.hpp"

#include <string>
#include <vector>

namespace sphcav::report {

enum class Format { Csv, Json, Table };

Format parse_format(const std::string& s);

std::string modes(const std::vector<spectrum::ModeRecord>& records, Format f);
std::string dispersion(const std::vector<spectrum::DispersionRow>& rows, Format f);
std::string cone_sweep(const std::vector<spectrum::ConeSweepRow>& rows, Format f);
std::string wedge_sweep(const std::vector<spectrum::WedgeSweepRow>& rows, Format f);
std::string validation(const spectrum::ValidationReport& rep, Format f);
std::string field(const fields::ModeSpec& mode, const fields::FieldSample& s, Format f);
std::string energy(const fields::ModeSpec& mode, const energy::EnergyReport& rep, Format f);

} // namespace sphcav::report
