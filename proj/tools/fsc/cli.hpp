#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fsc {
struct Model;
}

namespace fsc::cli {

enum ExitCode { kOk = 0, kDiagnostics = 1, kSynthesisEmpty = 2, kBudgetExceeded = 3 };

enum class EngineChoice { Explicit, Symbolic, Auto };

struct RunConfig {
    std::vector<std::string> files;
    EngineChoice engine = EngineChoice::Auto;
    std::size_t budget = 5'000'000;
    std::string int_range;  // "lo..hi", empty for the default
    std::string dot;
    std::string out;
    std::string script;
    bool structured = false;
    std::uint64_t seed = 1;
};

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_configs(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_explore(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_synth(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_lower(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// Reads commands from the script file if given, else from `in`.
int cmd_simulate(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);

/// Text session over the controlled system of `m`: plants, requirement
/// automata and supervisors.
int simulate_session(const Model& m, const RunConfig& cfg, std::istream& in, std::ostream& out);

/// Full command line; returns the exit code.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fsc::cli
