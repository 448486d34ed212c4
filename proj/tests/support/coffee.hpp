#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "fsc/pipeline.hpp"
#include "fsc/symbolic/synthesis.hpp"
#include "fsc/synth/problem.hpp"
#include "paths.hpp"

namespace fsc::testing {

inline std::string read_file(const std::string& path) {
    std::ifstream f(path);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

struct GuardComparison {
    std::string event;
    bool equivalent = false;
};

/// Compares the guards of the printed coffee supervisor with a fresh symbolic
/// synthesis, on the reachable controlled states where the plants and
/// requirement automata allow the event.
inline std::vector<GuardComparison> compare_listed_guards() {
    std::vector<std::string> files = coffee_full();
    files.push_back(model_path("listings/coffee_supervisor.fsc"));
    LoadedModel lm = load(files);
    CompositionOptions space = synth::synthesis_space();
    space.supervisors = false;
    symbolic::SymbolicModel sm(lm.model, space);
    auto r = symbolic::symbolic_synthesize(sm);
    std::vector<GuardComparison> out;
    const Automaton& sup = lm.model.automata[*lm.model.find_automaton("sup")];
    for (const auto& e : sup.edges) {
        symbolic::Bdd listed = sm.predicate(e.guard);
        symbolic::Bdd care = r.controlled & sm.enabled_unconditioned(e.event);
        out.push_back({lm.model.events[e.event].name, ((listed ^ r.guards.at(e.event)) & care).is_false()});
    }
    return out;
}

}  // namespace fsc::testing
