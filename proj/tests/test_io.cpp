#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "zetalab/io.hpp"

using namespace zetalab;
namespace fs = std::filesystem;

namespace {

ojson full_config_doc() {
    ojson doc = ojson::parse(R"({
      "seed": 42,
      "threads": 2,
      "l_set_constant": "2pi_over_h",
      "partition": {"a": 2, "b": 1},
      "instance": {"kind": "riemann", "use_partition": true},
      "euler_spec": {"kind": "riemann"},
      "eval": {"s": [0.75, 3.0], "tol": 1e-11},
      "scan": {
        "epsilon": 0.8,
        "N": 50,
        "grid_delta": 0.02,
        "mode": {"type": "discrete"},
        "phi_slot": {
          "region": {"shape": "disk", "center": [0.8, 0.0], "radius": 0.02,
                     "ambient": {"sigma": [0.5, 1.0], "t_bound": 30.0}},
          "target": {"kind": "constant", "value": [1.0, 0.0]}
        },
        "hurwitz_slots": [{
          "alpha": 0.3183098861837907,
          "alpha_note": "1/pi",
          "coeffs": [[1.0, 0.0], [-1.0, 0.0]],
          "region": {"shape": "rectangle", "sigma": [0.7, 0.9], "t": [-0.1, 0.1],
                     "ambient": {"sigma": [0.5, 1.0], "t_bound": 30.0}},
          "target": {"kind": "polynomial", "coeffs": [[1.0, 0.0], [0.5, -0.25]]},
          "epsilon": "inf"
        }]
      },
      "weyl": {"index": {"primes": {"3": 1, "5": -2}, "integer_slots": [{"0": 1}]},
               "alphas": [0.25], "N_list": [10, 100]},
      "dist": {"s0": [0.8, 0.0], "orbit_N": 20, "haar_count": 20, "trunc_n": 50,
               "sigma1": 1.0, "max_points": 64},
      "meanvalue": {"sigma0": 0.8, "span": {"type": "discrete", "N": 30}},
      "kappa": {"x": 100}
    })");
    return doc;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("zetalab_io_test_" + std::to_string(std::rand()) + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("the float dumper survives a parse round trip digit for digit") {
    ojson j;
    j["values"] = ojson::array({3.141592653589793, 0.1, 1e-300, -2.5e17, 1.0});
    j["int"] = 7;
    j["neg"] = -3;
    std::string s = dump_json17(j);
    ojson back = ojson::parse(s);
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(back["values"][i].get<double>() == j["values"][i].get<double>());
    CHECK(back["int"] == 7);
    CHECK(dump_json17(back) == s);

    ojson bad;
    bad["x"] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(dump_json17(bad), io_error);
}

TEST_CASE("fnv1a64 known vectors") {
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a64_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("config parse and emit are mutually canonical") {
    Config cfg = parse_config(full_config_doc());
    CHECK(cfg.seed == 42);
    CHECK(cfg.threads == 2);
    REQUIRE(cfg.partition.has_value());
    REQUIRE(cfg.instance.has_value());
    CHECK(cfg.instance->partition().has_value());
    REQUIRE(cfg.scan.has_value());
    CHECK(cfg.scan->slots.size() == 1);
    CHECK(cfg.scan->slots[0].alpha_note == "1/pi");
    REQUIRE(cfg.scan->slots[0].epsilon.has_value());
    CHECK(std::isinf(*cfg.scan->slots[0].epsilon));
    CHECK(cfg.scan->h == cfg.partition->h);
    REQUIRE(cfg.weyl.has_value());
    CHECK(cfg.weyl->index.prime_indices.at(5) == -2);
    REQUIRE(cfg.dist.has_value());
    REQUIRE(cfg.meanvalue.has_value());
    REQUIRE(cfg.kappa.has_value());

    ojson emitted = emit_config(cfg);
    Config cfg2 = parse_config(emitted);
    ojson emitted2 = emit_config(cfg2);
    CHECK(emitted == emitted2);
    CHECK(dump_json17(emitted) == dump_json17(emitted2));
}

TEST_CASE("parse failures carry the field path") {
    ojson doc = full_config_doc();
    doc["scan"]["phi_slot"].erase("region");
    try {
        parse_config(doc);
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(std::string(e.what()).find("scan.phi_slot") != std::string::npos);
    }

    ojson bad_eps = full_config_doc();
    bad_eps["scan"]["epsilon"] = "huge";
    CHECK_THROWS_AS(parse_config(bad_eps), config_error);

    ojson bad_kind = full_config_doc();
    bad_kind["instance"]["kind"] = "elliptic";
    CHECK_THROWS_AS(parse_config(bad_kind), config_error);

    ojson no_part = full_config_doc();
    no_part.erase("partition");
    CHECK_THROWS_AS(parse_config(no_part), config_error);

    ojson vanishing = full_config_doc();
    vanishing["scan"]["phi_slot"]["target"]["value"] = ojson::array({0.0, 0.0});
    CHECK_THROWS_AS(parse_config(vanishing), config_error);
}

TEST_CASE("manifest hashes the declared run") {
    Config cfg = parse_config(full_config_doc());
    ojson m1 = build_manifest(cfg, "scan");
    ojson m2 = build_manifest(cfg, "scan");
    CHECK(m1 == m2);
    CHECK(m1["tool"] == "zetalab");
    CHECK(m1["declared"]["l_set_constant"] == "2pi_over_h");
    CHECK(m1["declared"]["alpha_notes"][0] == "1/pi");
    CHECK(m1["config"]["seed"] == 42);
    REQUIRE(m1.contains("hash"));

    Config other = cfg;
    other.seed = 43;
    CHECK(build_manifest(other, "scan")["hash"] != m1["hash"]);
    CHECK(build_manifest(cfg, "eval")["hash"] != m1["hash"]);
}

TEST_CASE("command runner writes summary, manifest and plot data") {
    TempDir dir;
    Config cfg = parse_config(full_config_doc());
    ojson summary = run_command("scan", cfg, dir.path.string());
    CHECK(summary["kind"] == "scan");
    CHECK(summary["trials"] == 51);
    CHECK(summary.contains("density_interval_95"));
    CHECK(summary["timing"].contains("wall_seconds"));

    CHECK(fs::exists(dir.path / "scan_summary.json"));
    CHECK(fs::exists(dir.path / "manifest.json"));
    CHECK(fs::exists(dir.path / "scan_detail.csv"));
    CHECK(fs::exists(dir.path / "hit_timeline.csv"));
    CHECK(fs::exists(dir.path / "distance_histogram.csv"));

    ojson manifest = ojson::parse(std::ifstream(dir.path / "manifest.json"));
    CHECK(summary["manifest_hash"] == manifest["hash"]);

    // detail CSV: one row per shift plus comment and header
    std::ifstream detail(dir.path / "scan_detail.csv");
    std::string line;
    std::size_t rows = 0;
    bool header_seen = false;
    while (std::getline(detail, line)) {
        if (line.rfind("#", 0) == 0) continue;
        if (!header_seen) {
            CHECK(line == "k,d_1,d_21,hit");
            header_seen = true;
            continue;
        }
        ++rows;
    }
    CHECK(rows == 51);
}

TEST_CASE("plot emission checks the summary kind") {
    TempDir dir;
    Config cfg = parse_config(full_config_doc());
    ojson summary = run_command("partition", cfg, dir.path.string());
    CHECK_THROWS_AS(
        emit_plot_data(summary, PlotKind::weyl_decay, dir.path.string(),
                       (dir.path / "x.csv").string()),
        io_error);
    CHECK(plot_kind_from_string("hit_timeline") == PlotKind::hit_timeline);
    CHECK_THROWS_AS(plot_kind_from_string("pie"), io_error);
}

TEST_CASE("weyl and kappa commands emit their tables") {
    TempDir dir;
    Config cfg = parse_config(full_config_doc());
    ojson wsum = run_command("weyl", cfg, dir.path.string());
    CHECK(wsum["rows"].size() == 2);
    CHECK(fs::exists(dir.path / "weyl_decay.csv"));
    CHECK(fs::exists(dir.path / "weyl_summary.json"));

    ojson ksum = run_command("kappa", cfg, dir.path.string());
    CHECK(ksum["kappa"] == 1.0);
}

TEST_CASE("dist command records provenance in samples and summary") {
    TempDir dir;
    Config cfg = parse_config(full_config_doc());
    ojson dsum = run_command("dist", cfg, dir.path.string());
    CHECK(dsum["note"].get<std::string>().find("HEURISTIC") != std::string::npos);
    std::ifstream orbit(dir.path / "dist_orbit.csv");
    std::string first;
    std::getline(orbit, first);
    CHECK(first.find("shift_orbit") != std::string::npos);
    CHECK(fs::exists(dir.path / "distribution_scatter.csv"));
}

TEST_CASE("unknown commands and missing sections map to config errors") {
    TempDir dir;
    Config cfg = parse_config(full_config_doc());
    CHECK_THROWS_AS(run_command("frobnicate", cfg, dir.path.string()), config_error);
    Config bare;
    CHECK_THROWS_AS(run_command("eval", bare, dir.path.string()), config_error);
}

TEST_CASE("exceptions map onto the documented exit codes") {
    auto code_for = [](auto&& make) {
        try {
            throw make;
        } catch (...) {
            return exit_code_for_current_exception();
        }
    };
    CHECK(code_for(config_error("x")) == 2);
    CHECK(code_for(domain_error("x")) == 3);
    CHECK(code_for(pole_error("x")) == 4);
    CHECK(code_for(degeneracy_error("x")) == 5);
    CHECK(code_for(convergence_domain_error("x")) == 6);
    CHECK(code_for(singular_factor_error("x")) == 7);
    CHECK(code_for(io_error("x")) == 8);
    CHECK(code_for(target_error("x")) == 9);
    CHECK(code_for(overflow_error("x")) == 10);
    CHECK(code_for(unsupported_instance_error("x")) == 11);
    CHECK(code_for(std::runtime_error("x")) == 1);
}

TEST_CASE("config file loader reports io and parse problems") {
    CHECK_THROWS_AS(parse_config_file("/nonexistent/zetalab.json"), io_error);
    TempDir dir;
    auto p = dir.path / "broken.json";
    std::ofstream(p) << "{ not json";
    CHECK_THROWS_AS(parse_config_file(p.string()), config_error);
    auto good = dir.path / "good.json";
    std::ofstream(good) << dump_json17(full_config_doc());
    Config cfg = parse_config_file(good.string());
    CHECK(cfg.seed == 42);
}
