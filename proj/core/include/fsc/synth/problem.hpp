#pragma once

#include <vector>

#include "fsc/efa/composition.hpp"
#include "fsc/model/model.hpp"

namespace fsc::synth {

/// Requirements of a model sorted into the forms the synthesis handles.
struct ControlProblem {
    const Model* model = nullptr;
    std::vector<int> plants;
    std::vector<int> requirements;         // requirement automata
    std::vector<int> supervisors;          // given supervisors, kept as plant-side restrictions
    std::vector<int> state_requirements;   // requirement invariants, indices into Model::invariants
    std::vector<int> plant_invariants;
    std::vector<int> guard_conditions;     // `e needs P` on controllable e, indices into Model::conditions
    std::vector<int> bad_state_conditions; // `e needs P` on uncontrollable e
    std::vector<int> controllable;         // events
    std::vector<int> uncontrollable;
};

/// Classifies the requirements of a model. Throws ResolveError for a
/// nondeterministic requirement automaton.
ControlProblem normalize(const Model& m);

/// Composition searched by the synthesis: plants, requirement automata and
/// given supervisors, with controllable event conditions acting as guards.
CompositionOptions synthesis_space();

/// Controlled system: plants, requirement automata and supervisors, no requirement applied otherwise.
CompositionOptions controlled_space();

}  // namespace fsc::synth
