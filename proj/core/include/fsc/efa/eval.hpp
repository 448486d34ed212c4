#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fsc/model/model.hpp"

namespace fsc {

using Value = std::int32_t;

/// Maps model automata and discrete variables onto positions of a state vector.
/// Automata outside the layout have slot -1.
struct StateLayout {
    std::vector<int> automaton_slot;  // per model automaton
    std::vector<int> disc_slot;       // per model disc variable
    std::vector<int> slot_automaton;  // per slot: automaton index, or -1 for a variable
    std::vector<int> slot_disc;       // per slot: disc index, or -1 for a location
    int width = 0;

    /// Every automaton of the model, each followed by its own variables.
    static StateLayout full(const Model& m);
    /// Only the listed automata (in model order) and their variables.
    static StateLayout of(const Model& m, const std::vector<int>& automata);
};

using StateView = std::span<const Value>;

/// Evaluates an expression on a concrete state. Throws EvalError when the
/// expression refers to an automaton outside the layout.
std::int64_t eval(const Model& m, const StateLayout& layout, const ExprPtr& e, StateView s);
bool holds(const Model& m, const StateLayout& layout, const ExprPtr& e, StateView s);

/// Kleene evaluation on a partial state: `known[slot]` tells which slots are assigned.
/// Returns nullopt when the value depends on unassigned slots.
std::optional<std::int64_t> eval_partial(const Model& m, const StateLayout& layout, const ExprPtr& e, StateView s,
                                         const std::vector<bool>& known);

}  // namespace fsc
