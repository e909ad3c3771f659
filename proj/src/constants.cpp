#include "wsspectra/constants.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ws {

double PhysicalConstants::hbar2_over_2mu(double mu_u) const {
    if (mu_u <= 0.0) throw std::invalid_argument("reduced mass must be positive");
    return hbar_c * hbar_c / (2.0 * mu_u * amu_c2);
}

void PhysicalConstants::validate() const {
    if (!(hbar_c > 0.0) || !(amu_c2 > 0.0))
        throw std::invalid_argument("physical constants must be positive");
}

namespace {

std::optional<std::pair<std::string, std::string>> split_key_value(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    auto eq = s.find('=');
    if (eq == std::string::npos) {
        // blank or comment-only line
        for (char ch : s)
            if (!std::isspace(static_cast<unsigned char>(ch))) return std::nullopt;
        return std::make_pair(std::string{}, std::string{});
    }
    auto trim = [](std::string t) {
        auto b = t.find_first_not_of(" \t\r");
        auto e = t.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string{} : t.substr(b, e - b + 1);
    };
    return std::make_pair(trim(s.substr(0, eq)), trim(s.substr(eq + 1)));
}

}  // namespace

std::optional<PhysicalConstants> PhysicalConstants::from_file(const std::string& path,
                                                              std::string* error) {
    std::ifstream in(path);
    if (!in) {
        if (error) *error = "cannot open constants file: " + path;
        return std::nullopt;
    }
    PhysicalConstants k;
    std::string line;
    while (std::getline(in, line)) {
        auto kv = split_key_value(line);
        if (!kv) {
            if (error) *error = "malformed line in " + path + ": " + line;
            return std::nullopt;
        }
        if (kv->first.empty()) continue;
        double v = 0.0;
        try {
            size_t pos = 0;
            v = std::stod(kv->second, &pos);
            if (pos != kv->second.size()) throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            if (error) *error = "bad value for " + kv->first + " in " + path;
            return std::nullopt;
        }
        if (kv->first == "hbar_c") {
            k.hbar_c = v;
        } else if (kv->first == "amu_c2") {
            k.amu_c2 = v;
        } else {
            if (error) *error = "unknown constants key: " + kv->first;
            return std::nullopt;
        }
    }
    try {
        k.validate();
    } catch (const std::exception& e) {
        if (error) *error = e.what();
        return std::nullopt;
    }
    return k;
}

PhysicalConstants PhysicalConstants::from_env_or_default() {
    const char* path = std::getenv("WS_SPECTRA_CONSTANTS");
    if (path != nullptr && *path != '\0') {
        std::string err;
        if (auto k = from_file(path, &err)) return *k;
        throw std::runtime_error("WS_SPECTRA_CONSTANTS: " + err);
    }
    return codata2018();
}

PhysicalConstants table_effective_constants() {
    PhysicalConstants k;
    k.hbar_c = 197.4931238343614;
    return k;
}

}  // namespace ws
