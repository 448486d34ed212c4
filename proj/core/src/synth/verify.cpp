#include "fsc/synth/verify.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "fsc/synth/problem.hpp"

namespace fsc::synth {

using Scope = Composition::Scope;

const char* kind_name(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::Safety: return "safety";
        case Violation::Kind::Nonblocking: return "nonblocking";
        case Violation::Kind::Controllability: return "controllability";
    }
    return "?";
}

namespace {

constexpr std::uint32_t kNone = 0xffffffffu;

struct Graph {
    std::vector<std::vector<std::size_t>> out, in;
    std::vector<std::uint32_t> parent;  // transition index of a shortest path from an initial state
};

Graph index(const TransitionSystem& ts) {
    const std::size_t n = ts.state_count();
    Graph g;
    g.out.resize(n);
    g.in.resize(n);
    for (std::size_t i = 0; i < ts.transitions.size(); ++i) {
        g.out[ts.transitions[i].source].push_back(i);
        g.in[ts.transitions[i].target].push_back(i);
    }
    g.parent.assign(n, kNone);
    std::vector<char> seen(n, 0);
    std::deque<std::uint32_t> queue;
    for (auto s : ts.initial) seen[s] = 1, queue.push_back(s);
    while (!queue.empty()) {
        auto s = queue.front();
        queue.pop_front();
        for (auto i : g.out[s]) {
            auto t = ts.transitions[i].target;
            if (seen[t]) continue;
            seen[t] = 1;
            g.parent[t] = static_cast<std::uint32_t>(i);
            queue.push_back(t);
        }
    }
    return g;
}

std::vector<std::string> trace_to(const Model& m, const TransitionSystem& ts, const Graph& g, std::uint32_t s) {
    std::vector<std::string> out;
    while (g.parent[s] != kNone) {
        const Transition& t = ts.transitions[g.parent[s]];
        out.push_back(m.events[t.event].name);
        s = t.source;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<std::vector<ExprPtr>> conditions_by_event(const Model& m) {
    std::vector<std::vector<ExprPtr>> out(m.events.size());
    for (const auto& c : m.conditions) out[c.event].push_back(c.condition);
    return out;
}

bool all_hold(const Model& m, const StateLayout& layout, const std::vector<ExprPtr>& preds, StateView s) {
    for (const auto& p : preds)
        if (!holds(m, layout, p, s)) return false;
    return true;
}

/// True if some non-monitoring supervisor participant has no enabled edge for `event` at `s`.
bool supervisor_blocks(const Composition& c, StateView s, int event) {
    const Model& m = c.model();
    const StateLayout& layout = c.layout();
    for (const auto& p : c.participants(event)) {
        const Automaton& a = m.automata[p.automaton];
        if (a.kind != AutomatonKind::Supervisor || p.monitor) continue;
        bool any = false;
        for (int e : p.edges_by_location[s[layout.automaton_slot[p.automaton]]])
            if (holds(m, layout, a.edges[e].guard, s)) any = true;
        if (!any) return true;
    }
    return false;
}

}  // namespace

PropertyReport verify_controlled(const Model& m, const VerifyOptions& options) {
    Composition comp(m, controlled_space());
    TransitionSystem ts = explore(comp, {options.budget});
    Graph g = index(ts);
    const StateLayout& layout = comp.layout();
    const std::size_t n = ts.state_count();

    PropertyReport rep;
    rep.states = n;
    rep.transitions = ts.transitions.size();
    rep.empty = ts.initial.empty();

    std::vector<ExprPtr> state_requirements;
    for (const auto& inv : m.invariants)
        if (inv.kind == AutomatonKind::Requirement) state_requirements.push_back(inv.predicate);
    auto conditions = conditions_by_event(m);
    std::size_t per_kind[3] = {0, 0, 0};
    auto report = [&](Violation::Kind k, std::uint32_t s, std::string message) {
        if (k == Violation::Kind::Safety) rep.safe = false;
        if (k == Violation::Kind::Nonblocking) rep.nonblocking = false;
        if (k == Violation::Kind::Controllability) rep.controllable = false;
        if (per_kind[static_cast<int>(k)]++ >= options.max_violations) return;
        rep.violations.push_back({k, std::move(message), trace_to(m, ts, g, s), comp.describe(ts.states[s])});
    };

    for (std::uint32_t s = 0; s < n; ++s) {
        StateView v = ts.states[s];
        for (std::size_t i = 0; i < state_requirements.size(); ++i)
            if (!holds(m, layout, state_requirements[i], v))
                report(Violation::Kind::Safety, s, "requirement invariant violated: " + to_string(m, state_requirements[i]));
        for (int e : comp.event_order()) {
            const Event& ev = m.events[e];
            if (ev.controllable) {
                bool taken = std::any_of(g.out[s].begin(), g.out[s].end(),
                                         [&](std::size_t i) { return ts.transitions[i].event == e; });
                if (taken && !all_hold(m, layout, conditions[e], v))
                    report(Violation::Kind::Safety, s, "'" + ev.name + "' occurs where its condition fails");
                continue;
            }
            if (!comp.is_enabled(v, e, Scope::PlantsOnly)) continue;
            if (!comp.is_enabled(v, e)) {
                if (supervisor_blocks(comp, v, e))
                    report(Violation::Kind::Controllability, s, "uncontrollable '" + ev.name + "' disabled by a supervisor");
                else
                    report(Violation::Kind::Safety, s, "uncontrollable '" + ev.name + "' disabled by a requirement automaton");
            } else if (!all_hold(m, layout, conditions[e], v)) {
                report(Violation::Kind::Safety, s, "uncontrollable '" + ev.name + "' possible where its condition fails");
            }
        }
    }

    std::vector<char> co(n, 0);
    std::deque<std::uint32_t> queue;
    for (std::uint32_t s = 0; s < n; ++s)
        if (ts.marked[s]) co[s] = 1, queue.push_back(s);
    while (!queue.empty()) {
        auto t = queue.front();
        queue.pop_front();
        for (auto i : g.in[t]) {
            auto s = ts.transitions[i].source;
            if (!co[s]) co[s] = 1, queue.push_back(s);
        }
    }
    for (std::uint32_t s = 0; s < n; ++s)
        if (!co[s]) report(Violation::Kind::Nonblocking, s, "no marked state reachable");
    return rep;
}

ProbeReport maximality_probe(const Model& m, const ProbeOptions& options) {
    CompositionOptions space_opts = synthesis_space();
    space_opts.supervisors = false;
    Composition space(m, space_opts);
    Composition ctrl(m, synthesis_space());
    TransitionSystem sts = explore(space, {options.budget});
    TransitionSystem cts = explore(ctrl, {options.budget});
    const StateLayout& sl = space.layout();
    const StateLayout& cl = ctrl.layout();
    const std::size_t n = sts.state_count();

    // winning region: states from which a strategy that only disables
    // controllable events keeps every requirement and reaches a marked state
    auto conditions = conditions_by_event(m);
    std::vector<ExprPtr> state_requirements;
    for (const auto& inv : m.invariants)
        if (inv.kind == AutomatonKind::Requirement) state_requirements.push_back(inv.predicate);
    std::vector<char> win(n, 1);
    for (std::uint32_t s = 0; s < n; ++s) {
        StateView v = sts.states[s];
        if (!all_hold(m, sl, state_requirements, v)) {
            win[s] = 0;
            continue;
        }
        for (int e : space.event_order()) {
            if (m.events[e].controllable || !space.is_enabled(v, e, Scope::PlantsOnly)) continue;
            if (!space.is_enabled(v, e) || !all_hold(m, sl, conditions[e], v)) {
                win[s] = 0;
                break;
            }
        }
    }
    std::vector<std::vector<std::size_t>> out(n);
    for (std::size_t i = 0; i < sts.transitions.size(); ++i) out[sts.transitions[i].source].push_back(i);
    // usable(s, e): every e-successor of s is winning
    auto usable = [&](std::uint32_t s, int e) {
        for (auto i : out[s])
            if (sts.transitions[i].event == e && !win[sts.transitions[i].target]) return false;
        return true;
    };
    for (bool changed = true; changed;) {
        changed = false;
        // forward-chaining coreachability inside win
        std::vector<char> co(n, 0);
        for (std::uint32_t s = 0; s < n; ++s) co[s] = win[s] && sts.marked[s];
        for (bool grew = true; grew;) {
            grew = false;
            for (std::uint32_t s = 0; s < n; ++s) {
                if (co[s] || !win[s]) continue;
                for (auto i : out[s]) {
                    const Transition& t = sts.transitions[i];
                    if (!co[t.target]) continue;
                    if (m.events[t.event].controllable && !usable(s, t.event)) continue;
                    co[s] = 1;
                    grew = true;
                    break;
                }
            }
        }
        for (std::uint32_t s = 0; s < n; ++s)
            if (win[s] && !co[s]) win[s] = 0, changed = true;
        for (bool shrunk = true; shrunk;) {
            shrunk = false;
            for (std::uint32_t s = 0; s < n; ++s) {
                if (!win[s]) continue;
                for (auto i : out[s]) {
                    const Transition& t = sts.transitions[i];
                    if (!m.events[t.event].controllable && !win[t.target]) {
                        win[s] = 0;
                        shrunk = changed = true;
                        break;
                    }
                }
            }
        }
    }

    struct Removed {
        std::uint32_t controlled_state;
        std::uint32_t space_state;
        int event;
    };
    std::vector<Removed> removed;
    std::vector<Value> proj(sl.width);
    for (std::uint32_t s = 0; s < cts.state_count(); ++s) {
        StateView v = cts.states[s];
        for (int slot = 0; slot < sl.width; ++slot) {
            int a = sl.slot_automaton[slot];
            proj[slot] = v[a >= 0 ? cl.automaton_slot[a] : cl.disc_slot[sl.slot_disc[slot]]];
        }
        auto idx = sts.states.find(proj);
        if (!idx) continue;
        for (int e : space.event_order()) {
            if (!m.events[e].controllable) continue;
            if (space.is_enabled(proj, e) && !ctrl.is_enabled(v, e)) removed.push_back({s, *idx, e});
        }
    }

    ProbeReport rep;
    rep.removed = removed.size();
    if (removed.size() > options.samples) {
        std::mt19937_64 rng(options.seed);
        std::shuffle(removed.begin(), removed.end(), rng);
        removed.resize(options.samples);
        rep.partial = true;
    }
    rep.examined = removed.size();
    Graph g = index(cts);
    for (const auto& r : removed) {
        if (!win[r.space_state] || !usable(r.space_state, r.event)) continue;
        rep.readdable.push_back({m.events[r.event].name, ctrl.describe(cts.states[r.controlled_state]),
                                 trace_to(m, cts, g, r.controlled_state)});
    }
    return rep;
}

}  // namespace fsc::synth
