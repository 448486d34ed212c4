#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

namespace fsc::cli {

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Feature model compilation and supervisory controller synthesis"};
    app.name("fsc");
    app.require_subcommand(1);
    RunConfig cfg;
    std::string engine = "auto";

    auto common = [&](CLI::App* sub) {
        sub->add_option("files", cfg.files, "Input .fsc files, concatenated into one model")->required();
        sub->add_option("--int-range", cfg.int_range, "Range of unbounded int variables, lo..hi (default 0..255)");
        sub->add_flag("--structured", cfg.structured, "Print key=value lines");
    };
    auto engines = [&](CLI::App* sub) {
        sub->add_option("--engine", engine, "explicit, symbolic or auto")
            ->check(CLI::IsMember({"explicit", "symbolic", "auto"}));
        sub->add_option("--budget", cfg.budget, "Explicit state budget")->check(CLI::PositiveNumber);
    };

    auto* check = app.add_subcommand("check", "Parse and resolve the model");
    common(check);
    auto* configs = app.add_subcommand("configs", "Count valid feature configurations");
    common(configs);
    auto* explore = app.add_subcommand("explore", "State space statistics of the uncontrolled system");
    common(explore);
    engines(explore);
    explore->add_option("--dot", cfg.dot, "Write the state space as Graphviz");
    auto* synth = app.add_subcommand("synth", "Synthesize a supervisor");
    common(synth);
    engines(synth);
    synth->add_option("--out", cfg.out, "Write the supervisor (and a predicate dump at <path>.bdd)");
    auto* verify = app.add_subcommand("verify", "Check a supervised model: safety, nonblocking, controllability, maximality");
    common(verify);
    verify->add_option("--budget", cfg.budget, "Explicit state budget")->check(CLI::PositiveNumber);
    verify->add_option("--seed", cfg.seed, "Seed for sampling removed transitions");
    auto* simulate = app.add_subcommand("simulate", "Step through the supervised model");
    common(simulate);
    simulate->add_option("--script", cfg.script, "Read commands from a file instead of standard input");
    simulate->add_option("--seed", cfg.seed, "Seed for nondeterministic choices");
    auto* lower = app.add_subcommand("lower", "Print the model with feature model blocks lowered");
    common(lower);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kDiagnostics;
    }
    cfg.engine = engine == "explicit" ? EngineChoice::Explicit : engine == "symbolic" ? EngineChoice::Symbolic : EngineChoice::Auto;

    if (*check) return cmd_check(cfg, out, err);
    if (*configs) return cmd_configs(cfg, out, err);
    if (*explore) return cmd_explore(cfg, out, err);
    if (*synth) return cmd_synth(cfg, out, err);
    if (*verify) return cmd_verify(cfg, out, err);
    if (*simulate) return cmd_simulate(cfg, in, out, err);
    return cmd_lower(cfg, out, err);
}

}  // namespace fsc::cli
