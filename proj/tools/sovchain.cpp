#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Separation-of-variables solver for the open XXZ chain with non-diagonal boundaries"};
    app.require_subcommand(1);

    std::string config_path, suite, out;
    int sites = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    bool newton_only = false;
    int count = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file");
        sub->add_option("--sites", sites, "number of sites N")->check(CLI::Range(1, 10));
        sub->add_option("--seed", seed, "RNG seed");
        sub->add_option("--tol", tol, "tolerance scale factor")->check(CLI::PositiveNumber);
        sub->add_option("--out", out, "output directory for reports");
    };
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify);
    verify->add_option("--suite", suite, "all|bulk|reflection|gauge|sov|spectrum|scalar|sov_left|sov_right");
    CLI::App* spectrum = app.add_subcommand("spectrum", "solve the spectrum from the quadratic system");
    add_common(spectrum);
    spectrum->add_flag("--newton-only", newton_only, "seed Newton from a random cloud instead of the dense oracle");
    CLI::App* scalar = app.add_subcommand("scalar", "eigenstate pairing table via the determinant formula");
    add_common(scalar);
    CLI::App* sweep = app.add_subcommand("sweep", "verify over consecutive seeds");
    add_common(sweep);
    sweep->add_option("--suite", suite, "suite selection per seed");
    sweep->add_option("--count", count, "number of seeds")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        sovchain::RunConfig cfg;
        if (!config_path.empty()) cfg = sovchain::load_config(config_path);
        CLI::App* sub = app.get_subcommands().front();
        if (sub->count("--sites")) cfg.n_sites = sites;
        if (sub->count("--seed")) cfg.seed = seed;
        if (sub->count("--tol")) cfg.tol_scale = tol;
        if (sub->count("--out")) cfg.out = out;
        if (sub->get_option_no_throw("--suite") && sub->count("--suite")) cfg.suite = suite;
        if (newton_only) cfg.newton_only = true;
        if (sub->get_option_no_throw("--count") && sub->count("--count")) cfg.sweep_count = count;

        if (*verify) return sovchain::cmd_verify(cfg, std::cout);
        if (*spectrum) return sovchain::cmd_spectrum(cfg, std::cout);
        if (*scalar) return sovchain::cmd_scalar(cfg, std::cout);
        return sovchain::cmd_sweep(cfg, std::cout);
    } catch (const sovchain::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
