#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "testutil.hpp"
#include "wsspectra/io.hpp"

#include <json.hpp>

using namespace ws;

TEST_CASE("mass-number defaults") {
    const auto p = mass_defaults(56);
    CHECK(p.V0 == doctest::Approx(47.78).epsilon(1e-12));
    CHECK(p.R0 == doctest::Approx(4.9162).epsilon(1e-4));
    CHECK(p.a == 0.65);
    CHECK(p.mu == doctest::Approx(0.990814).epsilon(1e-6));

    CHECK(mass_defaults(1).V0 == doctest::Approx(40.63).epsilon(1e-12));
    for (int A : {1, 2, 10, 56, 208}) CHECK(mass_defaults(A).mu < 1.00866);
    CHECK_THROWS_AS(mass_defaults(0), std::invalid_argument);
}

TEST_CASE("12-digit formatting round-trips") {
    testutil::ParamSampler gen(13131);
    for (int trial = 0; trial < 200; ++trial) {
        const double x = gen.uniform(-1.0, 1.0) * std::pow(10.0, gen.uniform(-6.0, 6.0));
        const double back = std::stod(fmt12(x));
        CHECK(std::abs(back - x) <= 5e-12 * std::abs(x));
    }
}

TEST_CASE("key-value configuration") {
    RunConfig cfg;
    std::string err;
    SUBCASE("individual keys") {
        CHECK(apply_key_value(cfg, "V0", "50.0", err));
        CHECK(cfg.potential.V0 == 50.0);
        CHECK(apply_key_value(cfg, "l", "2", err));
        CHECK(apply_key_value(cfg, "D", "4", err));
        CHECK(apply_key_value(cfg, "nr", "1", err));
        REQUIRE(cfg.channels.size() == 1);
        CHECK(cfg.channels[0].l == 2);
        CHECK(cfg.channels[0].D == 4);
        CHECK(cfg.channels[0].nr == 1);
        CHECK(apply_key_value(cfg, "format", "csv", err));
        CHECK(cfg.format == OutputFormat::Csv);
        CHECK(!apply_key_value(cfg, "format", "yaml", err));
        CHECK(!apply_key_value(cfg, "V0", "abc", err));
        CHECK(!apply_key_value(cfg, "nonsense", "1", err));
    }
    SUBCASE("mass-number key sets the whole parameter block") {
        CHECK(apply_key_value(cfg, "A", "56", err));
        CHECK(cfg.potential.V0 == doctest::Approx(47.78));
    }
    SUBCASE("l-scan expands channels") {
        CHECK(apply_key_value(cfg, "D", "3", err));
        CHECK(apply_key_value(cfg, "scan-l", "1:4", err));
        REQUIRE(cfg.channels.size() == 4);
        CHECK(cfg.channels.front().l == 1);
        CHECK(cfg.channels.back().l == 4);
        CHECK(cfg.channels.back().D == 3);
        CHECK(!apply_key_value(cfg, "scan-l", "4", err));
        CHECK(!apply_key_value(cfg, "scan-l", "5:1", err));
    }
    SUBCASE("config file parsing with comments and overrides") {
        const std::string path = "test_io_config.tmp";
        {
            std::ofstream f(path);
            f << "# channel setup\n";
            f << "V0 = 50\n";
            f << "l = 1   # overridden below\n";
            f << "l = 3\n";
            f << "D = 3\n";
        }
        CHECK(apply_config_file(cfg, path, err));
        CHECK(cfg.potential.V0 == 50.0);
        REQUIRE(cfg.channels.size() == 1);
        CHECK(cfg.channels[0].l == 3);
        std::remove(path.c_str());

        CHECK(!apply_config_file(cfg, "no_such_file.conf", err));
    }
}

TEST_CASE("constants override file") {
    const std::string path = "test_io_constants.tmp";
    {
        std::ofstream f(path);
        f << "hbar_c = 197.4931238343614\n";
        f << "amu_c2 = 931.49410242  # MeV per u\n";
    }
    std::string err;
    const auto k = PhysicalConstants::from_file(path, &err);
    REQUIRE(k);
    CHECK(k->hbar_c == 197.4931238343614);
    std::remove(path.c_str());

    {
        std::ofstream f(path);
        f << "speed_of_sound = 343\n";
    }
    CHECK(!PhysicalConstants::from_file(path, &err));
    std::remove(path.c_str());
}

TEST_CASE("serialized tables") {
    RunConfig cfg = table1_config();
    const auto rows = solve_channels(cfg.potential, cfg.channels, cfg.constants, {});

    SUBCASE("csv round-trips at 12 significant digits") {
        cfg.format = OutputFormat::Csv;
        const std::string text = serialize(rows, cfg);
        std::istringstream in(text);
        std::string line;
        REQUIRE(std::getline(in, line));  // header
        CHECK(line.rfind("nr,l,D,", 0) == 0);
        size_t data_rows = 0;
        while (std::getline(in, line)) {
            ++data_rows;
            CHECK(line.find('\r') == std::string::npos);  // LF endings
            // energy column (6th) must parse back to the solver's value
            std::vector<std::string> cells;
            std::istringstream ls(line);
            std::string cell;
            while (std::getline(ls, cell, ',')) cells.push_back(cell);
            REQUIRE(cells.size() >= 10);
            if (!cells[5].empty()) {
                const double parsed = std::stod(cells[5]);
                const double actual = *rows[data_rows - 1].energy;
                CHECK(std::abs(parsed - actual) <= 5e-12 * std::abs(actual));
            }
        }
        CHECK(data_rows == rows.size());
    }

    SUBCASE("json carries the same numeric content as csv") {
        cfg.format = OutputFormat::Json;
        const auto doc = nlohmann::json::parse(serialize(rows, cfg));
        REQUIRE(doc.contains("params"));
        REQUIRE(doc.contains("constants"));
        REQUIRE(doc["rows"].size() == rows.size());
        for (size_t i = 0; i < rows.size(); ++i) {
            const auto& jr = doc["rows"][i];
            CHECK(jr["nr"].get<int>() == rows[i].channel.nr);
            CHECK(jr["l"].get<int>() == rows[i].channel.l);
            CHECK(jr["status"].get<std::string>() == std::string(to_string(rows[i].status)));
            if (rows[i].energy)
                CHECK(jr["energy_mev"].get<double>() ==
                      doctest::Approx(*rows[i].energy).epsilon(1e-11));
            else
                CHECK(jr["energy_mev"].is_null());
        }
    }

    SUBCASE("serialization is deterministic") {
        cfg.format = OutputFormat::Json;
        const auto a = serialize(rows, cfg);
        const auto rows2 = solve_channels(cfg.potential, cfg.channels, cfg.constants, {});
        const auto b = serialize(rows2, cfg);
        CHECK(a == b);
    }

    SUBCASE("pretty table prints Unbound placeholders like the published tables") {
        cfg.format = OutputFormat::PrettyTable;
        const std::string text = serialize(rows, cfg);
        CHECK(text.find("Bound") != std::string::npos);
        CHECK(text.find("Unbound") != std::string::npos);
        CHECK(text.find("NoExtremum") != std::string::npos);
        CHECK(text.find("z^") != std::string::npos);
    }
}

TEST_CASE("rows are ordered by (D, l, nr) regardless of input order") {
    RunConfig cfg = table1_config();
    std::reverse(cfg.channels.begin(), cfg.channels.end());
    const auto rows = solve_channels(cfg.potential, cfg.channels, cfg.constants, {});
    for (size_t i = 1; i < rows.size(); ++i) {
        const auto &a = rows[i - 1].channel, &b = rows[i].channel;
        CHECK((a.D < b.D || (a.D == b.D && (a.l < b.l || (a.l == b.l && a.nr < b.nr)))));
    }
}

TEST_CASE("curve files") {
    RunConfig cfg;
    cfg.potential = {47.78, 4.9162, 0.65, 0.990814};
    cfg.constants = table_effective_constants();
    cfg.curve_samples = 200;
    for (int l = 1; l <= 8; ++l) cfg.channels.push_back({0, l, 3});
    std::string err;
    const auto files = write_curves(cfg, "test_io_curves.tmp.d", err);
    REQUIRE(err.empty());
    // one potential file per channel, wavefunction files where constructible
    int pots = 0, wfs = 0;
    for (const auto& f : files) {
        if (f.find("veff_") != std::string::npos) ++pots;
        if (f.find("wavefunction_") != std::string::npos) ++wfs;
    }
    CHECK(pots == 8);
    CHECK(wfs == 7);  // l = 8 has no solution

    // wavefunction curves vanish at both ends
    for (const auto& f : files) {
        if (f.find("wavefunction_") == std::string::npos) continue;
        std::ifstream in(f);
        std::string header, first, line, last;
        REQUIRE(std::getline(in, header));
        REQUIRE(std::getline(in, first));
        while (std::getline(in, line))
            if (!line.empty()) last = line;
        CHECK(first.substr(first.find(',') + 1) == "0");
        CHECK(last.substr(last.find(',') + 1) == "0");
    }
    std::filesystem::remove_all("test_io_curves.tmp.d");
}
