#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "zetalab/distribution.hpp"
#include "zetalab/euler_product.hpp"
#include "zetalab/scan.hpp"
#include "zetalab/weyl.hpp"

namespace zetalab {

using ojson = nlohmann::ordered_json;

// Fully parsed and cross-validated run configuration. One JSON document
// carries the shared objects (partition, instance, product spec) plus one
// section per command; a command run only requires its own section.
struct Config {
    std::uint64_t seed = 0;
    int threads = 0; // 0: ZETALAB_THREADS or hardware count
    std::string l_set_constant = "2pi_over_h";

    std::optional<PrimePartition> partition;
    std::optional<ZetaInstance> instance;
    std::optional<EulerProductSpec> euler_spec;

    struct EvalSection {
        cplx s;
        double tol = 1e-10;
    };
    std::optional<EvalSection> eval;

    std::optional<ScanConfig> scan;

    struct WeylSection {
        IndexVector index;
        std::vector<double> alphas;
        std::vector<std::uint64_t> n_list;
        bool use_partition = true;
    };
    std::optional<WeylSection> weyl;

    struct DistSection {
        cplx s0;
        std::uint64_t orbit_count = 1000;
        std::uint64_t haar_count = 1000;
        std::uint64_t trunc_n = 1000;
        double sigma1 = 1.0;
        std::uint64_t max_points = 4096;
    };
    std::optional<DistSection> dist;

    struct MeanValueSection {
        double sigma0 = 0.0;
        bool continuous = false;
        std::uint64_t n = 0;  // discrete span
        double T = 0.0;       // continuous span
        double step = 0.0;
    };
    std::optional<MeanValueSection> meanvalue;

    struct KappaSection {
        std::uint64_t x = 0;
    };
    std::optional<KappaSection> kappa;
};

// Parse + cross-validate. Throws config_error with a field path on any
// structural problem; domain errors from the underlying constructors pass
// through unchanged.
Config parse_config(const ojson& doc);
Config parse_config_file(const std::string& path);

// Canonical JSON image of a parsed config; parse(emit(c)) emits the same
// document again.
ojson emit_config(const Config& cfg);

// JSON serializer printing every finite float with 17 significant digits.
std::string dump_json17(const ojson& j, int indent = 2);

std::string fnv1a64_hex(const std::string& data);

// Manifest document for a run: tool identity, command, seed, thread count,
// declared hypotheses, tolerances, the canonical config, and a content hash
// over all of that. Every result file references the hash.
ojson build_manifest(const Config& cfg, const std::string& command);

enum class PlotKind { hit_timeline, distance_histogram, weyl_decay, distribution_scatter };

PlotKind plot_kind_from_string(const std::string& name);

// Derive a plot CSV from a command summary (written by run_command). The
// summary's "kind" must admit the requested plot; mismatches raise io_error.
void emit_plot_data(const ojson& summary, PlotKind kind, const std::string& out_dir,
                    const std::string& csv_path);

// Execute one command, writing <command>_summary.json, its CSV artifacts and
// manifest.json under out_dir. Returns the summary document.
// Commands: partition, eval, scan, weyl, dist, meanvalue, kappa.
ojson run_command(const std::string& command, const Config& cfg, const std::string& out_dir);

// Process exit code for the currently handled exception (used by the CLI):
// 2 config, 3 domain, 4 pole, 5 degeneracy, 6 convergence domain,
// 7 singular factor, 8 io, 9 target, 10 overflow, 11 unsupported instance,
// 1 anything else.
int exit_code_for_current_exception();

} // namespace zetalab
