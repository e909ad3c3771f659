#pragma once

#include <map>
#include <string>
#include <vector>

#include "wsspectra/solver.hpp"

namespace ws {

enum class OutputFormat { Json, Csv, PrettyTable };

struct RunConfig {
    PotentialParams potential{47.78, 4.9162, 0.65, 0.990814};
    PhysicalConstants constants = PhysicalConstants::codata2018();
    std::vector<ChannelSpec> channels;
    OutputFormat format = OutputFormat::PrettyTable;
    bool oracle = false;
    int curve_samples = 500;
    std::string out_path;  // empty = stdout
};

/// Nucleus-mass defaults: V0 = 40.5 + 0.13 A, R0 = 1.285 A^(1/3), a = 0.65,
/// mu = A m_n / (A + m_n) with m_n = 1.00866 u.
PotentialParams mass_defaults(int A);

/// 56Fe presets reproducing the published tables (paper-effective constants;
/// the last channel of each has a monotone effective potential).
RunConfig table1_config();  // D = 3
RunConfig table2_config();  // D = 4

/// Flat `key = value` config file; '#' starts a comment. Returns false and
/// sets `error` on unknown keys or malformed values.
bool apply_config_file(RunConfig& cfg, const std::string& path, std::string& error);
bool apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value,
                     std::string& error);

/// Shortest 12-significant-digit representation used by every emitter.
std::string fmt12(double v);

std::string serialize_csv(const std::vector<ChannelSolution>& rows, const RunConfig& cfg);
std::string serialize_json(const std::vector<ChannelSolution>& rows, const RunConfig& cfg);
std::string serialize_pretty(const std::vector<ChannelSolution>& rows, const RunConfig& cfg);
std::string serialize(const std::vector<ChannelSolution>& rows, const RunConfig& cfg);

/// Fig-style data files: one effective-potential CSV per channel plus one
/// wavefunction CSV per constructible nr = 0 channel, written under out_dir.
/// Returns the list of files written.
std::vector<std::string> write_curves(const RunConfig& cfg, const std::string& out_dir,
                                      std::string& error);

}  // namespace ws
