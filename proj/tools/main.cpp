#include <CLI11.hpp>

#include <iostream>

#include "rado/errors.hpp"
#include "rado/harness.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Experiments on the asymmetric random Rado problem"};
    app.require_subcommand(1, 1);

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_dir;
    unsigned threads = 1;
    app.add_option("--config", config_path, "JSON experiment config")->required();
    app.add_option("--seed", seed, "override seed_base");
    app.add_option("--out", out_dir, "output directory (overrides 'out')");
    app.add_option("--threads", threads, "worker threads (speed only)")->check(CLI::Range(1u, 1024u));
    app.fallthrough();

    for (const char* name : {"params", "sample", "check", "minimal", "audit", "expect", "sweep"})
        app.add_subcommand(name, std::string("run ") + name);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : rado::kExitConfig;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        rado::ExperimentConfig cfg = rado::load_config(config_path);
        if (seed)
            cfg.seed_base = *seed;
        if (!out_dir.empty())
            cfg.out = out_dir;
        rado::RunOptions opt;
        opt.threads = threads;
        const rado::CommandOutput out = rado::run_command(command, cfg, opt);
        rado::write_output(out, cfg.out);
        std::cout << out.summary;
        return out.exit_code;
    } catch (const rado::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return rado::kExitConfig;
    } catch (const rado::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return rado::kExitConfig;
    } catch (const rado::PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return rado::kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
