#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fsc/efa/explore.hpp"
#include "fsc/model/model.hpp"

namespace fsc::synth {

struct Violation {
    enum class Kind { Safety, Nonblocking, Controllability };
    Kind kind = Kind::Safety;
    std::string message;
    std::vector<std::string> trace;  // events from an initial state
    std::string state;
};

const char* kind_name(Violation::Kind k);

struct PropertyReport {
    std::size_t states = 0;
    std::size_t transitions = 0;
    bool safe = true;
    bool nonblocking = true;
    bool controllable = true;
    bool empty = false;  // no initial state
    std::vector<Violation> violations;  // at most a few per kind

    bool passed() const { return safe && nonblocking && controllable; }
};

struct VerifyOptions {
    std::size_t budget = kDefaultStateBudget;
    std::size_t max_violations = 3;  // per kind
};

/// Explores plants, requirement automata and supervisors of `m` and checks
/// every reachable state: requirement invariants and event conditions hold,
/// a marked state stays reachable, and no plant-enabled uncontrollable event
/// is disabled by a supervisor.
PropertyReport verify_controlled(const Model& m, const VerifyOptions& options = {});

struct ProbeOptions {
    std::size_t budget = kDefaultStateBudget;
    /// Upper bound on removed transitions examined; more are sampled.
    std::size_t samples = 100000;
    std::uint64_t seed = 1;
};

struct ProbeFinding {
    std::string event;
    std::string state;
    std::vector<std::string> trace;
};

struct ProbeReport {
    std::size_t removed = 0;   // controllable (state, event) pairs disabled by the supervisors
    std::size_t examined = 0;
    std::vector<ProbeFinding> readdable;
    bool partial = false;

    bool passed() const { return readdable.empty(); }
};

/// For each controllable transition the supervisor automata of `m` remove,
/// checks whether re-enabling it keeps the system inside the maximal winning
/// region (safe, nonblocking and controllable), which would make the
/// supervisor more restrictive than needed.
ProbeReport maximality_probe(const Model& m, const ProbeOptions& options = {});

}  // namespace fsc::synth
