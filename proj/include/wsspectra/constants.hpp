#pragma once

#include <optional>
#include <string>

namespace ws {

/// Physical constants entering the solver only through hbar^2/(2 mu).
///
/// Defaults are CODATA-2018. Both values can be overridden from a flat
/// key = value file (keys `hbar_c`, `amu_c2`), either explicitly or via the
/// WS_SPECTRA_CONSTANTS environment variable.
struct PhysicalConstants {
    double hbar_c = 197.3269804;   // MeV fm
    double amu_c2 = 931.49410242;  // MeV per u

    /// hbar^2 / (2 mu) in MeV fm^2 for a reduced mass in u.
    double hbar2_over_2mu(double mu_u) const;

    static PhysicalConstants codata2018() { return {}; }

    /// Parses a constants override file. Unknown keys are rejected.
    static std::optional<PhysicalConstants> from_file(const std::string& path,
                                                      std::string* error = nullptr);

    /// Defaults, replaced by the file named in WS_SPECTRA_CONSTANTS when set.
    static PhysicalConstants from_env_or_default();

    void validate() const;  // throws std::invalid_argument on non-positive values
};

/// Effective constant reproducing the published 56Fe tables
/// (hbar^2/2mu = 21.130108100226 MeV fm^2 at mu = 0.990814 u).
/// Used by the table1/table2 presets; everything else defaults to CODATA.
PhysicalConstants table_effective_constants();

}  // namespace ws
