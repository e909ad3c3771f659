#include "wsspectra/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace ws {

PotentialParams mass_defaults(int A) {
    if (A < 1) throw std::invalid_argument("mass number must be >= 1");
    constexpr double m_n = 1.00866;  // u
    PotentialParams p;
    p.V0 = 40.5 + 0.13 * A;
    p.R0 = 1.285 * std::cbrt(static_cast<double>(A));
    p.a = 0.65;
    p.mu = A * m_n / (A + m_n);
    return p;
}

namespace {

RunConfig fe56_preset(int D, int l_max_plus_monotone) {
    RunConfig cfg;
    cfg.potential = {47.78, 4.9162, 0.65, 0.990814};
    cfg.constants = table_effective_constants();
    cfg.format = OutputFormat::PrettyTable;
    const int l_lo = (D == 3) ? 1 : 0;
    for (int l = l_lo; l <= l_max_plus_monotone; ++l) {
        cfg.channels.push_back({0, l, D});
        if (l <= 4) cfg.channels.push_back({1, l, D});
    }
    return cfg;
}

}  // namespace

RunConfig table1_config() { return fe56_preset(3, 8); }

RunConfig table2_config() { return fe56_preset(4, 7); }

bool apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value,
                     std::string& error) {
    auto parse_double = [&](double& dst) {
        try {
            size_t pos = 0;
            dst = std::stod(value, &pos);
            if (pos != value.size()) throw std::invalid_argument("trailing characters");
            return true;
        } catch (const std::exception&) {
            error = "bad numeric value for '" + key + "': " + value;
            return false;
        }
    };
    auto parse_int = [&](int& dst) {
        try {
            size_t pos = 0;
            dst = std::stoi(value, &pos);
            if (pos != value.size()) throw std::invalid_argument("trailing characters");
            return true;
        } catch (const std::exception&) {
            error = "bad integer value for '" + key + "': " + value;
            return false;
        }
    };

    if (key == "V0") return parse_double(cfg.potential.V0);
    if (key == "R0") return parse_double(cfg.potential.R0);
    if (key == "a") return parse_double(cfg.potential.a);
    if (key == "mu") return parse_double(cfg.potential.mu);
    if (key == "A") {
        int A = 0;
        if (!parse_int(A)) return false;
        try {
            cfg.potential = mass_defaults(A);
        } catch (const std::exception& e) {
            error = e.what();
            return false;
        }
        return true;
    }
    if (key == "D" || key == "l" || key == "nr") {
        int v = 0;
        if (!parse_int(v)) return false;
        if (cfg.channels.empty()) cfg.channels.push_back({0, -1, 3});
        for (auto& c : cfg.channels) {
            if (key == "D") c.D = v;
            if (key == "l") c.l = v;
            if (key == "nr") c.nr = v;
        }
        return true;
    }
    if (key == "scan-l") {
        auto colon = value.find(':');
        if (colon == std::string::npos) {
            error = "scan-l expects LO:HI";
            return false;
        }
        int lo = 0, hi = 0;
        try {
            lo = std::stoi(value.substr(0, colon));
            hi = std::stoi(value.substr(colon + 1));
        } catch (const std::exception&) {
            error = "scan-l expects LO:HI integers";
            return false;
        }
        if (lo < 0 || hi < lo) {
            error = "scan-l range invalid";
            return false;
        }
        const int nr = cfg.channels.empty() ? 0 : cfg.channels.front().nr;
        const int D = cfg.channels.empty() ? 3 : cfg.channels.front().D;
        cfg.channels.clear();
        for (int l = lo; l <= hi; ++l) cfg.channels.push_back({nr, l, D});
        return true;
    }
    if (key == "oracle") {
        cfg.oracle = (value == "1" || value == "true" || value == "yes");
        return true;
    }
    if (key == "format") {
        if (value == "json") cfg.format = OutputFormat::Json;
        else if (value == "csv") cfg.format = OutputFormat::Csv;
        else if (value == "pretty-table") cfg.format = OutputFormat::PrettyTable;
        else {
            error = "unknown format: " + value;
            return false;
        }
        return true;
    }
    if (key == "out") {
        cfg.out_path = value;
        return true;
    }
    if (key == "constants") {
        std::string err;
        auto k = PhysicalConstants::from_file(value, &err);
        if (!k) {
            error = err;
            return false;
        }
        cfg.constants = *k;
        return true;
    }
    if (key == "curve-samples") {
        int v = 0;
        if (!parse_int(v)) return false;
        if (v < 2) {
            error = "curve-samples must be >= 2";
            return false;
        }
        cfg.curve_samples = v;
        return true;
    }
    error = "unknown key: " + key;
    return false;
}

bool apply_config_file(RunConfig& cfg, const std::string& path, std::string& error) {
    std::ifstream in(path);
    if (!in) {
        error = "cannot open config file: " + path;
        return false;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = line.substr(0, line.find('#'));
        auto trim = [](std::string t) {
            auto b = t.find_first_not_of(" \t\r");
            auto e = t.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : t.substr(b, e - b + 1);
        };
        s = trim(s);
        if (s.empty()) continue;
        auto eq = s.find('=');
        if (eq == std::string::npos) {
            error = path + ":" + std::to_string(lineno) + ": expected key = value";
            return false;
        }
        if (!apply_key_value(cfg, trim(s.substr(0, eq)), trim(s.substr(eq + 1)), error)) {
            error = path + ":" + std::to_string(lineno) + ": " + error;
            return false;
        }
    }
    return true;
}

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

const char* kCsvHeader =
    "nr,l,D,r_l_fm,veff_min_mev,energy_mev,status,norm,epsilon,eta,oracle_energy_mev,"
    "pekeris_error_mev";

bool renders_wavefunction(const ChannelSolution& s, const PotentialParams& p) {
    return s.table_norm.has_value() && s.energy.has_value() && *s.energy > -p.V0;
}

std::string csv_cell_double(const std::optional<double>& v) {
    return v ? fmt12(*v) : std::string{};
}

}  // namespace

std::string serialize_csv(const std::vector<ChannelSolution>& rows, const RunConfig& cfg) {
    std::ostringstream os;
    os << kCsvHeader << "\n";
    for (const auto& s : rows) {
        std::optional<double> r_l, vmin;
        if (s.expansion && !s.expansion->bypass) {
            r_l = s.expansion->r_l;
            vmin = s.expansion->veff_min;
        }
        std::optional<double> norm, eps, eta;
        if (renders_wavefunction(s, cfg.potential)) {
            norm = s.table_norm;
            eps = s.triple->epsilon;
            eta = s.triple->eta;
        }
        std::optional<double> oracle_e, pek_err;
        if (s.oracle && s.oracle->converged) {
            oracle_e = s.oracle->energy;
            if (s.oracle_exact_energy) pek_err = s.oracle->energy - *s.oracle_exact_energy;
        }
        os << s.channel.nr << ',' << s.channel.l << ',' << s.channel.D << ','
           << csv_cell_double(r_l) << ',' << csv_cell_double(vmin) << ','
           << csv_cell_double(s.energy) << ',' << to_string(s.status) << ','
           << csv_cell_double(norm) << ',' << csv_cell_double(eps) << ','
           << csv_cell_double(eta) << ',' << csv_cell_double(oracle_e) << ','
           << csv_cell_double(pek_err) << "\n";
    }
    return os.str();
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string json_num(const std::optional<double>& v) {
    if (!v || std::isnan(*v)) return "null";
    return fmt12(*v);
}

}  // namespace

std::string serialize_json(const std::vector<ChannelSolution>& rows, const RunConfig& cfg) {
    std::ostringstream os;
    os << "{\n  \"params\": {\"V0\": " << fmt12(cfg.potential.V0)
       << ", \"R0\": " << fmt12(cfg.potential.R0) << ", \"a\": " << fmt12(cfg.potential.a)
       << ", \"mu\": " << fmt12(cfg.potential.mu) << "},\n";
    os << "  \"constants\": {\"hbar_c\": " << fmt12(cfg.constants.hbar_c)
       << ", \"amu_c2\": " << fmt12(cfg.constants.amu_c2) << "},\n";
    os << "  \"rows\": [\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& s = rows[i];
        std::optional<double> r_l, vmin;
        if (s.expansion && !s.expansion->bypass) {
            r_l = s.expansion->r_l;
            vmin = s.expansion->veff_min;
        }
        std::optional<double> norm, eps, eta;
        if (renders_wavefunction(s, cfg.potential)) {
            norm = s.table_norm;
            eps = s.triple->epsilon;
            eta = s.triple->eta;
        }
        std::optional<double> oracle_e, pek_err;
        if (s.oracle && s.oracle->converged) {
            oracle_e = s.oracle->energy;
            if (s.oracle_exact_energy) pek_err = s.oracle->energy - *s.oracle_exact_energy;
        }
        os << "    {\"nr\": " << s.channel.nr << ", \"l\": " << s.channel.l
           << ", \"D\": " << s.channel.D << ", \"r_l_fm\": " << json_num(r_l)
           << ", \"veff_min_mev\": " << json_num(vmin)
           << ", \"energy_mev\": " << json_num(s.energy) << ", \"status\": \""
           << to_string(s.status) << "\", \"norm\": " << json_num(norm)
           << ", \"epsilon\": " << json_num(eps) << ", \"eta\": " << json_num(eta)
           << ", \"oracle_energy_mev\": " << json_num(oracle_e)
           << ", \"pekeris_error_mev\": " << json_num(pek_err) << ", \"diagnostics\": [";
        for (size_t d = 0; d < s.diagnostics.size(); ++d) {
            if (d) os << ", ";
            os << '"' << json_escape(s.diagnostics[d]) << '"';
        }
        os << "]}" << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

std::string serialize_pretty(const std::vector<ChannelSolution>& rows, const RunConfig& cfg) {
    std::ostringstream os;
    os << std::left << std::setw(4) << "nr" << std::setw(4) << "l" << std::setw(4) << "D"
       << std::setw(17) << "r_l [fm]" << std::setw(17) << "Veff_min [MeV]" << std::setw(17)
       << "E [MeV]" << std::setw(15) << "status"
       << "u(z)\n";
    for (const auto& s : rows) {
        os << std::setw(4) << s.channel.nr << std::setw(4) << s.channel.l << std::setw(4)
           << s.channel.D;
        if (s.expansion && !s.expansion->bypass) {
            os << std::setw(17) << fmt12(s.expansion->r_l) << std::setw(17)
               << fmt12(s.expansion->veff_min);
        } else {
            os << std::setw(17) << "-" << std::setw(17) << "-";
        }
        os << std::setw(17) << (s.energy ? fmt12(*s.energy) : "-") << std::setw(15)
           << to_string(s.status);
        if (renders_wavefunction(s, cfg.potential)) {
            os << fmt12(*s.table_norm) << " z^" << fmt12(s.triple->epsilon) << " (1-z)^"
               << fmt12(s.triple->eta);
        } else if (s.status == Status::UnboundEnergyRange) {
            os << "Unbound";
        } else {
            os << "-";
        }
        os << "\n";
    }
    return os.str();
}

std::string serialize(const std::vector<ChannelSolution>& rows, const RunConfig& cfg) {
    switch (cfg.format) {
        case OutputFormat::Json: return serialize_json(rows, cfg);
        case OutputFormat::Csv: return serialize_csv(rows, cfg);
        case OutputFormat::PrettyTable: return serialize_pretty(rows, cfg);
    }
    return {};
}

std::vector<std::string> write_curves(const RunConfig& cfg, const std::string& out_dir,
                                      std::string& error) {
    namespace fs = std::filesystem;
    std::vector<std::string> written;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        error = "cannot create output directory: " + out_dir;
        return written;
    }
    for (const auto& c : cfg.channels) {
        const auto curve = potential_curve(cfg.potential, c, cfg.constants, 0.5, 15.0,
                                           cfg.curve_samples);
        const std::string vpath =
            (fs::path(out_dir) / ("veff_D" + std::to_string(c.D) + "_l" + std::to_string(c.l) +
                                  ".csv"))
                .string();
        std::ofstream vf(vpath, std::ios::binary);
        if (!vf) {
            error = "cannot write " + vpath;
            return written;
        }
        vf << "r_fm,veff_mev\n";
        for (auto [r, v] : curve) vf << fmt12(r) << ',' << fmt12(v) << "\n";
        written.push_back(vpath);

        if (c.nr != 0) continue;
        const auto sol = solve_channel(cfg.potential, c, cfg.constants);
        if (!sol.wavefunction) continue;
        const auto wf = sample_curve(*sol.wavefunction, cfg.curve_samples,
                                     RadialCurve::Coordinate::Z, cfg.potential);
        const std::string wpath =
            (fs::path(out_dir) / ("wavefunction_D" + std::to_string(c.D) + "_l" +
                                  std::to_string(c.l) + ".csv"))
                .string();
        std::ofstream wfout(wpath, std::ios::binary);
        if (!wfout) {
            error = "cannot write " + wpath;
            return written;
        }
        wfout << "z,u\n";
        for (auto [z, u] : wf.samples) wfout << fmt12(z) << ',' << fmt12(u) << "\n";
        written.push_back(wpath);
    }
    return written;
}

}  // namespace ws
