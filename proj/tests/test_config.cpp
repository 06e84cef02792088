#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "ehl/config.hpp"
#include "ehl/experiment.hpp"
#include "ehl/io.hpp"

using namespace ehl;

namespace {

std::string contains(const std::exception& ex) { return ex.what(); }

}  // namespace

TEST_CASE("minimal half-line config gets defaults") {
    RunConfig cfg = parse_config("[domain]\nkind = half_line\nx0 = 0\n");
    CHECK(cfg.kind == DomainKind::half_line);
    CHECK(cfg.d == 1);
    CHECK(cfg.datum_kind == InitialDatum::Kind::point_approx);
    CHECK(cfg.t0 > 0.0);
    CHECK(cfg.resolved_r_max() > 0.0);
    CHECK(cfg.resolved_dt() > 0.0);
}

TEST_CASE("d = 1 ball complement is rejected with the constraint named") {
    try {
        (void)parse_config("[domain]\nkind = ball_complement\nd = 1\nR = 1\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& ex) {
        CHECK(contains(ex).find("disconnected") != std::string::npos);
    }
}

TEST_CASE("duplicate keys name both lines") {
    try {
        (void)parse_config("[domain]\nkind = half_line\nx0 = 0\nx0 = 1\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& ex) {
        const std::string msg = contains(ex);
        CHECK(msg.find("line 4") != std::string::npos);
        CHECK(msg.find("line 3") != std::string::npos);
    }
}

TEST_CASE("unknown sections, keys, and bad types are rejected") {
    CHECK_THROWS_AS((void)parse_config("[nope]\nx = 1\n"), ConfigError);
    CHECK_THROWS_AS((void)parse_config("[domain]\nbogus = 1\n"), ConfigError);
    CHECK_THROWS_AS((void)parse_config("[domain]\nkind = half_line\n[time]\nt0 = abc\n"),
                    ConfigError);
    CHECK_THROWS_AS((void)parse_config("kind = half_line\n"), ConfigError);  // outside section
    CHECK_THROWS_AS((void)parse_config("[time]\nn = 3.5\n"), ConfigError);
}

TEST_CASE("comments and whitespace are tolerated") {
    RunConfig cfg = parse_config(
        "# a comment\n"
        "[domain]\n"
        "kind = ball_complement   # trailing comment\n"
        "d = 3\n"
        "R = 1.0\n"
        "\n"
        "[lsi]\n"
        "tau_list = 0, 1, 2\n");
    CHECK(cfg.d == 3);
    REQUIRE(cfg.tau_list.size() == 3);
    CHECK(cfg.tau_list[2] == 2.0);
}

TEST_CASE("geometric output times") {
    RunConfig cfg = parse_config("[domain]\nkind = half_line\n[time]\nt0 = 1\nt_final = 8\nratio = 2\n");
    auto times = cfg.solve_times();
    REQUIRE(times.size() == 4);
    CHECK(times[0] == 1.0);
    CHECK(times[3] == 8.0);
}

TEST_CASE("the 'all' report carries the documented sections and artifacts") {
    namespace fs = std::filesystem;
    const fs::path tmp = fs::temp_directory_path() / "ehl_test_all";
    fs::remove_all(tmp);
    RunConfig cfg = parse_config(
        "[domain]\nkind = half_line\nx0 = 0\n"
        "[initial]\nkind = point_approx\nlocation = 2\nepsilon = 2e-4\n"
        "[time]\nt0 = 2\nt_final = 64\nratio = 2\nn = 801\n"
        "[lsi]\ntau_list = 0, 1\n");
    OutputBundle out(tmp.string());
    auto report = run_experiment(cfg, out, "all");
    out.flush();
    for (const char* key : {"config", "domain", "profile", "normalization", "lsi", "entropy",
                            "exponents", "mass", "constants", "pass"})
        CHECK(report.contains(key));
    CHECK(report["pass"].contains("harmonic_mass_drift"));
    for (const char* name :
         {"profile.csv", "normalization.csv", "lsi.csv", "entropy.csv", "mass.csv",
          "series_weighted_l1.csv", "report.json", "manifest.json", "field_0000.csv"})
        CHECK(fs::exists(tmp / name));
    fs::remove_all(tmp);
}

TEST_CASE("a near-dipole datum is a fixed point: every error norm at noise level") {
    namespace fs = std::filesystem;
    const std::string cfg_text =
        "[domain]\nkind = half_line\nx0 = 0\n"
        "[initial]\nkind = point_approx\nlocation = 0.005\nepsilon = 2.5e-4\n"
        "[time]\nt0 = 2\nt_final = 50\nratio = 1.4\nn = 1501\n"
        "[lsi]\ntau_list = 0\n";
    const fs::path tmp = fs::temp_directory_path() / "ehl_test_dipole";
    fs::remove_all(tmp);
    RunConfig cfg = parse_config(cfg_text);
    OutputBundle out(tmp.string());
    auto report = run_experiment(cfg, out, "rates");
    for (const char* mode : {"weighted_l1", "plain_l1", "uniform_rel"})
        CHECK(report["exponents"][mode]["max_value"].get<double>() <= 1e-8);
    fs::remove_all(tmp);
}

TEST_CASE("dispatch produces deterministic CSV bodies and a manifest") {
    namespace fs = std::filesystem;
    const fs::path tmp = fs::temp_directory_path() / "ehl_test_config";
    fs::remove_all(tmp);
    fs::create_directories(tmp);
    const std::string cfg_path = (tmp / "run.cfg").string();
    write_text_file(cfg_path,
                    "[domain]\nkind = half_line\nx0 = 0\n"
                    "[lsi]\ntau_list = 0, 1\n");

    const std::string out1 = (tmp / "out1").string();
    const std::string out2 = (tmp / "out2").string();
    CHECK(dispatch("normalize", cfg_path, out1, true) == 0);
    CHECK(dispatch("normalize", cfg_path, out2, true) == 0);
    CHECK(read_text_file(out1 + "/normalization.csv") ==
          read_text_file(out2 + "/normalization.csv"));
    CHECK(read_text_file(out1 + "/manifest.json").find("fnv1a64") != std::string::npos);

    CHECK(dispatch("bogus", cfg_path, out1, true) == 2);
    CHECK(dispatch("normalize", (tmp / "missing.cfg").string(), out1, true) == 2);

    write_text_file(cfg_path, "[domain]\nkind = ball_complement\nd = 1\n");
    CHECK(dispatch("normalize", cfg_path, out1, true) == 2);
    fs::remove_all(tmp);
}
