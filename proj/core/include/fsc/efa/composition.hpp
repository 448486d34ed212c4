#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fsc/efa/eval.hpp"
#include "fsc/model/model.hpp"

namespace fsc {

/// Which `e needs P` conditions act as guards on their event.
enum class ConditionMode { None, Controllable, All };

struct CompositionOptions {
    bool requirement_automata = false;
    bool supervisors = true;
    bool requirement_invariants = false;  // filter states like plant invariants do
    ConditionMode conditions = ConditionMode::None;

    /// Plants and supervisors only: the uncontrolled (or supervised) system.
    static CompositionOptions plants() { return {}; }
    /// Plants with every requirement applied as a hard constraint.
    static CompositionOptions constrained() { return {true, true, true, ConditionMode::All}; }
};

/// One edge per participating automaton; -1 for a monitor that stays put.
using Choice = std::vector<int>;

/// Synchronous product of the selected automata of a model, evaluated on demand.
class Composition {
public:
    enum class Scope { All, PlantsOnly };

    struct Participant {
        int automaton = -1;
        bool monitor = false;
        bool plant = true;
        std::vector<std::vector<int>> edges_by_location;
    };

    Composition(const Model& m, const CompositionOptions& options = {});

    const Model& model() const { return *m_; }
    const StateLayout& layout() const { return layout_; }
    const CompositionOptions& options() const { return opt_; }
    const std::vector<int>& members() const { return members_; }
    /// Events with at least one participant, in lexicographic order of their names.
    const std::vector<int>& event_order() const { return event_order_; }
    const std::vector<Participant>& participants(int event) const { return participants_[event]; }
    bool is_member(int automaton) const { return layout_.automaton_slot[automaton] >= 0; }

    bool satisfies_invariants(StateView s, Scope scope = Scope::All) const;
    bool is_marked(StateView s) const;

    /// All joint edge choices for `event` at `s` (guards and, per options, event conditions).
    std::vector<Choice> enabled(StateView s, int event, Scope scope = Scope::All) const;
    bool is_enabled(StateView s, int event, Scope scope = Scope::All) const;

    /// Applies a joint choice; updates read the pre-state. Throws EvalError on a range violation.
    std::vector<Value> step(StateView s, int event, const Choice& choice, Scope scope = Scope::All) const;

    /// Distinct successor states under `event` that satisfy the invariants of the scope.
    std::vector<std::vector<Value>> successors(StateView s, int event, Scope scope = Scope::All) const;

    /// Initial states satisfying the invariants of the composition; throws BudgetExceeded beyond `limit`.
    std::vector<std::vector<Value>> initial_states(std::size_t limit = SIZE_MAX) const;

    std::string describe(StateView s) const;
    std::string slot_name(int slot) const;
    std::string slot_value(int slot, Value v) const;

private:
    bool condition_applies(int event) const;

    const Model* m_;
    CompositionOptions opt_;
    StateLayout layout_;
    std::vector<int> members_;
    std::vector<std::vector<Participant>> participants_;
    std::vector<int> event_order_;
    std::vector<ExprPtr> plant_invariants_;
    std::vector<ExprPtr> invariants_;
    std::vector<ExprPtr> conditions_;  // per event, conjunction of conditions; nullptr if none
};

}  // namespace fsc
