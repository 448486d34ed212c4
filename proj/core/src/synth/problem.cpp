#include "fsc/synth/problem.hpp"

#include <map>

#include "fsc/symbolic/encoding.hpp"

namespace fsc::synth {

CompositionOptions synthesis_space() { return {true, true, false, ConditionMode::Controllable}; }

CompositionOptions controlled_space() { return {true, true, false, ConditionMode::None}; }

namespace {

void check_deterministic(const Model& m, const std::vector<int>& requirements) {
    std::unique_ptr<symbolic::SymbolicModel> sm;
    for (int a : requirements) {
        const Automaton& aut = m.automata[a];
        std::map<std::pair<int, int>, std::vector<int>> groups;
        for (std::size_t i = 0; i < aut.edges.size(); ++i)
            groups[{aut.edges[i].source, aut.edges[i].event}].push_back(static_cast<int>(i));
        for (const auto& [key, edges] : groups) {
            if (edges.size() < 2) continue;
            if (!sm) {
                CompositionOptions all{true, true, false, ConditionMode::None};
                sm = std::make_unique<symbolic::SymbolicModel>(m, all);
            }
            for (std::size_t i = 0; i < edges.size(); ++i) {
                for (std::size_t j = i + 1; j < edges.size(); ++j) {
                    const Edge& e1 = aut.edges[edges[i]];
                    const Edge& e2 = aut.edges[edges[j]];
                    auto both = sm->predicate(e1.guard) & sm->predicate(e2.guard) & sm->domain();
                    if (!both.is_false())
                        throw ResolveError(e2.span, "requirement automaton '" + aut.name + "' is nondeterministic on '" +
                                                        m.events[key.second].name + "'");
                }
            }
        }
    }
}

}  // namespace

ControlProblem normalize(const Model& m) {
    ControlProblem p;
    p.model = &m;
    for (std::size_t a = 0; a < m.automata.size(); ++a) {
        switch (m.automata[a].kind) {
            case AutomatonKind::Plant: p.plants.push_back(static_cast<int>(a)); break;
            case AutomatonKind::Requirement: p.requirements.push_back(static_cast<int>(a)); break;
            case AutomatonKind::Supervisor: p.supervisors.push_back(static_cast<int>(a)); break;
        }
    }
    for (std::size_t i = 0; i < m.invariants.size(); ++i) {
        if (m.invariants[i].kind == AutomatonKind::Plant) p.plant_invariants.push_back(static_cast<int>(i));
        else p.state_requirements.push_back(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < m.conditions.size(); ++i) {
        if (m.events[m.conditions[i].event].controllable) p.guard_conditions.push_back(static_cast<int>(i));
        else p.bad_state_conditions.push_back(static_cast<int>(i));
    }
    for (std::size_t e = 0; e < m.events.size(); ++e)
        (m.events[e].controllable ? p.controllable : p.uncontrollable).push_back(static_cast<int>(e));
    check_deterministic(m, p.requirements);
    return p;
}

}  // namespace fsc::synth
