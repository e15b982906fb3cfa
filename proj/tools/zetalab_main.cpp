#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zetalab/io.hpp"
#include "zetalab/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{std::string(zetalab::TOOL_NAME) + " " + zetalab::TOOL_VERSION +
                 " - partial zeta scan laboratory"};

    std::string config_path;
    std::string out_dir = "out";
    std::string command;
    std::uint64_t seed = 0;
    int threads = 0;

    app.add_option("--config", config_path, "JSON configuration file")->required();
    app.add_option("--command", command,
                   "one of: partition, eval, scan, weyl, dist, meanvalue, kappa")
        ->required();
    app.add_option("--out", out_dir, "output directory (created if missing)");
    auto* seed_opt = app.add_option("--seed", seed, "override the configured seed");
    auto* threads_opt = app.add_option("--threads", threads, "override the configured thread count");

    CLI11_PARSE(app, argc, argv);

    try {
        zetalab::Config cfg = zetalab::parse_config_file(config_path);
        if (seed_opt->count() > 0) cfg.seed = seed;
        if (threads_opt->count() > 0) cfg.threads = threads;

        zetalab::ojson summary = zetalab::run_command(command, cfg, out_dir);
        std::cout << zetalab::dump_json17(summary);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return zetalab::exit_code_for_current_exception();
    } catch (...) {
        std::cerr << "error: unknown failure\n";
        return zetalab::exit_code_for_current_exception();
    }
}
