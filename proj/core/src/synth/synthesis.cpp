#include "fsc/synth/synthesis.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <sstream>

#include "fsc/symbolic/to_expr.hpp"
#include "fsc/synth/problem.hpp"

namespace fsc::synth {

using symbolic::Bdd;
using symbolic::Scope;
using symbolic::SymbolicModel;

const char* engine_name(Engine e) { return e == Engine::Explicit ? "explicit" : "symbolic"; }

const SupervisorGuard* Supervisor::guard_of(int event) const {
    for (const auto& g : guards)
        if (g.event == event) return &g;
    return nullptr;
}

namespace {

struct Fixpoint {
    Bdd good;
    Bdd controlled;
    std::map<int, Bdd> guards;
    BigInt good_states = 0;
    BigInt transitions = 0;
    int iterations = 0;
    bool empty = false;
};

Fixpoint run_symbolic(SymbolicModel& sm, EffortMetrics& metrics) {
    auto r = symbolic::symbolic_synthesize(sm);
    metrics = r.metrics;
    Fixpoint f;
    f.good = r.good;
    f.controlled = r.controlled;
    f.guards = r.guards;
    f.good_states = sm.count(r.good);
    f.transitions = sm.transition_count(r.controlled, r.guards);
    f.iterations = r.iterations;
    f.empty = r.empty;
    return f;
}

/// The same greatest fixpoint on the explicit transition system of the
/// synthesis space; results are encoded into `sm` afterwards.
Fixpoint run_explicit(const Model& m, SymbolicModel& sm, std::size_t budget) {
    const Composition& comp = sm.composition();
    TransitionSystem ts = explore(comp, {budget});
    const std::size_t n = ts.state_count();
    const StateLayout& layout = comp.layout();

    std::vector<ExprPtr> requirement_invariants;
    for (const auto& inv : m.invariants)
        if (inv.kind == AutomatonKind::Requirement) requirement_invariants.push_back(inv.predicate);
    std::vector<std::vector<ExprPtr>> conditions(m.events.size());
    for (const auto& c : m.conditions) conditions[c.event].push_back(c.condition);

    std::vector<std::vector<std::size_t>> out_edges(n), in_edges(n);
    for (std::size_t i = 0; i < ts.transitions.size(); ++i) {
        out_edges[ts.transitions[i].source].push_back(i);
        in_edges[ts.transitions[i].target].push_back(i);
    }

    std::vector<char> good(n, 1);
    for (std::size_t s = 0; s < n; ++s) {
        StateView v = ts.states[s];
        for (const auto& inv : requirement_invariants)
            if (!holds(m, layout, inv, v)) good[s] = 0;
        if (!good[s]) continue;
        for (int e : comp.event_order()) {
            if (m.events[e].controllable || !comp.is_enabled(v, e, Scope::PlantsOnly)) continue;
            bool allowed = comp.is_enabled(v, e);
            for (const auto& c : conditions[e]) allowed = allowed && holds(m, layout, c, v);
            if (!allowed) {
                good[s] = 0;
                break;
            }
        }
    }

    // (state, controllable event) pairs with a successor outside good
    auto blocked_pairs = [&](const std::vector<char>& g) {
        std::vector<std::vector<int>> blocked(n);
        for (const auto& t : ts.transitions)
            if (m.events[t.event].controllable && !g[t.target]) blocked[t.source].push_back(t.event);
        return blocked;
    };
    auto is_blocked = [](const std::vector<std::vector<int>>& blocked, std::size_t s, int e) {
        return std::find(blocked[s].begin(), blocked[s].end(), e) != blocked[s].end();
    };

    Fixpoint f;
    for (;;) {
        ++f.iterations;
        auto blocked = blocked_pairs(good);
        std::vector<char> co(n, 0);
        std::deque<std::size_t> queue;
        for (std::size_t s = 0; s < n; ++s)
            if (good[s] && ts.marked[s]) co[s] = 1, queue.push_back(s);
        while (!queue.empty()) {
            std::size_t t = queue.front();
            queue.pop_front();
            for (std::size_t i : in_edges[t]) {
                const Transition& tr = ts.transitions[i];
                if (!good[tr.source] || co[tr.source]) continue;
                if (m.events[tr.event].controllable && is_blocked(blocked, tr.source, tr.event)) continue;
                co[tr.source] = 1;
                queue.push_back(tr.source);
            }
        }
        std::vector<char> next = co;
        for (std::size_t s = 0; s < n; ++s)
            if (!next[s]) queue.push_back(s);
        while (!queue.empty()) {
            std::size_t t = queue.front();
            queue.pop_front();
            for (std::size_t i : in_edges[t]) {
                const Transition& tr = ts.transitions[i];
                if (m.events[tr.event].controllable || !next[tr.source]) continue;
                next[tr.source] = 0;
                queue.push_back(tr.source);
            }
        }
        if (next == good) break;
        good = std::move(next);
    }

    auto blocked = blocked_pairs(good);
    std::vector<char> reach(n, 0);
    std::deque<std::size_t> queue;
    for (auto s : ts.initial)
        if (good[s]) reach[s] = 1, queue.push_back(s);
    f.empty = queue.empty();
    std::size_t transitions = 0;
    while (!queue.empty()) {
        std::size_t s = queue.front();
        queue.pop_front();
        for (std::size_t i : out_edges[s]) {
            const Transition& tr = ts.transitions[i];
            if (m.events[tr.event].controllable && is_blocked(blocked, s, tr.event)) continue;
            ++transitions;
            if (!reach[tr.target]) reach[tr.target] = 1, queue.push_back(tr.target);
        }
    }

    bdd::Manager& mgr = sm.manager();
    f.good = mgr.constant(false);
    f.controlled = mgr.constant(false);
    for (int e : comp.event_order())
        if (m.events[e].controllable) f.guards[e] = mgr.constant(false);
    std::size_t good_count = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (good[s]) ++good_count;
        if (!reach[s]) continue;
        Bdd state = sm.encode(ts.states[s]);
        f.controlled |= state;
        for (std::size_t i : out_edges[s]) {
            const Transition& tr = ts.transitions[i];
            if (m.events[tr.event].controllable && !is_blocked(blocked, s, tr.event)) f.guards[tr.event] |= state;
        }
    }
    for (std::size_t s = 0; s < n; ++s)
        if (good[s]) f.good |= sm.encode(ts.states[s]);
    f.good_states = good_count;
    f.transitions = transitions;
    return f;
}

std::vector<std::string> bit_names(const SymbolicModel& sm) {
    std::vector<std::string> names(2 * sm.bit_count());
    for (const auto& v : sm.variables()) {
        for (std::size_t i = 0; i < v.bits.size(); ++i) {
            std::string base = v.name + "[" + std::to_string(v.bits.size() - 1 - i) + "]";
            names[SymbolicModel::cur(v.bits[i])] = base;
            names[SymbolicModel::next(v.bits[i])] = base + "'";
        }
    }
    return names;
}

}  // namespace

std::string SynthesisResult::predicate_dump() const {
    if (!symbolic) return {};
    std::vector<Bdd> roots{good};
    std::ostringstream out;
    out << "# good\n";
    for (const auto& g : supervisor.guards) roots.push_back(guards.at(g.event));
    symbolic->manager().dump(out, roots, bit_names(*symbolic));
    out << "# roots: good";
    for (const auto& g : supervisor.guards) out << ' ' << symbolic->model().events[g.event].name;
    out << '\n';
    return out.str();
}

SynthesisResult synthesize(const Model& m, const SynthesisOptions& options) {
    auto start = std::chrono::steady_clock::now();
    normalize(m);
    SynthesisResult res;
    res.symbolic = std::make_unique<SymbolicModel>(m, synthesis_space(), options.encoding);
    SymbolicModel& sm = *res.symbolic;

    EffortMetrics metrics;
    Fixpoint f = options.engine == Engine::Symbolic ? run_symbolic(sm, metrics) : run_explicit(m, sm, options.budget);

    res.good = f.good;
    res.controlled = f.controlled;
    bdd::Manager& mgr = sm.manager();
    for (auto& [e, g] : f.guards) res.guards[e] = g & f.controlled & sm.enabled(e);

    Supervisor& sup = res.supervisor;
    for (std::size_t e = 0; e < m.events.size(); ++e)
        if (m.events[e].controllable && res.guards.count(static_cast<int>(e))) sup.alphabet.push_back(static_cast<int>(e));
    std::vector<int> by_name = sup.alphabet;
    std::sort(by_name.begin(), by_name.end(),
              [&](int a, int b) { return m.events[a].name < m.events[b].name; });
    for (int e : by_name) {
        SupervisorGuard g;
        g.event = e;
        const Bdd& exact = res.guards.at(e);
        Bdd shown = exact;
        if (options.simplify) {
            Bdd care = f.controlled & sm.enabled_unconditioned(e);
            shown = care.is_false() ? mgr.constant(false) : mgr.restrict(exact, care);
            if (mgr.node_count(shown) > mgr.node_count(exact)) shown = exact;
        }
        g.exact_nodes = mgr.node_count(exact);
        g.simplified_nodes = mgr.node_count(shown);
        g.guard = symbolic::to_expr(sm, shown);
        g.text = to_string(m, g.guard);
        sup.guards.push_back(std::move(g));
    }

    SynthesisReport& rep = res.report;
    rep.engine = options.engine;
    rep.controlled_states = sm.count(f.controlled);
    rep.controlled_transitions = f.transitions;
    rep.good_states = f.good_states;
    rep.iterations = f.iterations;
    rep.empty = f.empty;
    if (options.engine == Engine::Explicit) {
        const auto& mm = mgr.metrics();
        metrics.peak_nodes = mm.peak_live_nodes;
        metrics.operations = mm.operations;
        metrics.iterations = static_cast<std::uint64_t>(f.iterations);
    }
    rep.metrics = metrics;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

std::string supervisor_text(const Model& m, const Supervisor& sup) {
    std::ostringstream out;
    out << "supervisor automaton " << sup.name << ":\n";
    if (!sup.alphabet.empty()) {
        out << "  alphabet ";
        for (std::size_t i = 0; i < sup.alphabet.size(); ++i) out << (i ? ", " : "") << m.events[sup.alphabet[i]].name;
        out << ";\n";
    }
    out << "  location:\n    initial;\n    marked;\n";
    for (const auto& g : sup.guards) out << "    edge " << m.events[g.event].name << " when " << g.text << ";\n";
    out << "end\n";
    return out.str();
}

Model with_supervisor(const Model& m, const Supervisor& sup) {
    Model out = m;
    Automaton a;
    a.name = sup.name;
    for (int i = 2; out.find_automaton(a.name); ++i) a.name = sup.name + std::to_string(i);
    a.kind = AutomatonKind::Supervisor;
    Location loc;
    loc.initial = true;
    loc.initial_predicate = Expr::constant(true);
    loc.marked = true;
    loc.marked_predicate = Expr::constant(true);
    a.locations.push_back(loc);
    for (const auto& g : sup.guards) {
        Edge e;
        e.event = g.event;
        e.guard = g.guard;
        a.edges.push_back(e);
    }
    a.alphabet = sup.alphabet;
    std::sort(a.alphabet.begin(), a.alphabet.end());
    out.automata.push_back(std::move(a));
    return out;
}

}  // namespace fsc::synth
