#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fsc/efa/explore.hpp"
#include "fsc/model/model.hpp"
#include "fsc/symbolic/encoding.hpp"
#include "fsc/symbolic/synthesis.hpp"

namespace fsc::synth {

using symbolic::BigInt;
using symbolic::EffortMetrics;

enum class Engine { Explicit, Symbolic };

struct SynthesisOptions {
    Engine engine = Engine::Symbolic;
    /// State budget of the explicit engine.
    std::size_t budget = kDefaultStateBudget;
    /// Simplify guards against the controlled reachable states before printing.
    bool simplify = true;
    symbolic::EncodingOptions encoding;
};

struct SupervisorGuard {
    int event = -1;
    ExprPtr guard;
    std::string text;
    std::size_t exact_nodes = 0;       // BDD size of the exact guard
    std::size_t simplified_nodes = 0;  // after don't-care minimization
};

/// Listing-style supervisor: one location, one self-loop per controllable event.
struct Supervisor {
    std::string name = "sup";
    std::vector<int> alphabet;             // controllable events, declaration order
    std::vector<SupervisorGuard> guards;   // sorted by event name

    const SupervisorGuard* guard_of(int event) const;
};

struct SynthesisReport {
    Engine engine = Engine::Symbolic;
    BigInt controlled_states = 0;
    BigInt controlled_transitions = 0;
    BigInt good_states = 0;  // symbolic: whole legal space; explicit: reachable part
    int iterations = 0;
    bool empty = false;
    EffortMetrics metrics;
    double seconds = 0;
};

/// Result of a synthesis run. The symbolic model owns the predicates.
struct SynthesisResult {
    Supervisor supervisor;
    SynthesisReport report;
    std::unique_ptr<symbolic::SymbolicModel> symbolic;
    symbolic::Bdd good;
    symbolic::Bdd controlled;
    std::map<int, symbolic::Bdd> guards;  // exact guards on the controlled states

    /// Node-list dump of the good-state predicate and the guards.
    std::string predicate_dump() const;
};

/// Computes the maximally permissive supervisor of `m`. Throws
/// BudgetExceeded when the explicit engine runs out of states.
SynthesisResult synthesize(const Model& m, const SynthesisOptions& options = {});

/// `supervisor automaton sup: alphabet ...; location: initial; marked; edge e when g; ... end`
std::string supervisor_text(const Model& m, const Supervisor& sup);

/// Copy of `m` with the supervisor added as a synchronizing automaton.
Model with_supervisor(const Model& m, const Supervisor& sup);

const char* engine_name(Engine e);

}  // namespace fsc::synth
