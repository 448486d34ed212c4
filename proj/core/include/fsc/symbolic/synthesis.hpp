#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fsc/symbolic/encoding.hpp"

namespace fsc::symbolic {

struct EffortMetrics {
    std::uint64_t peak_nodes = 0;
    std::uint64_t operations = 0;
    std::uint64_t iterations = 0;
};

struct SymbolicSynthesis {
    Bdd bad;         // states violating a requirement outright
    Bdd good;        // greatest safe, nonblocking, controllable set
    Bdd initial;     // initial states inside good
    Bdd controlled;  // reachable states of the controlled system
    std::map<int, Bdd> guards;  // exact guard per controllable event
    bool empty = false;
    int iterations = 0;
    EffortMetrics metrics;
    std::vector<EffortMetrics> trace;  // snapshot after each fixpoint iteration
};

/// Fixpoint synthesis over a model built with synth::synthesis_space().
SymbolicSynthesis symbolic_synthesize(SymbolicModel& sm);

/// States of `sm` where some requirement is violated directly: a requirement
/// invariant fails, or a plant-enabled uncontrollable event is blocked by a
/// requirement automaton or its condition.
Bdd bad_states(SymbolicModel& sm);

}  // namespace fsc::symbolic
