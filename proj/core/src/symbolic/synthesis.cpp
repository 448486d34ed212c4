#include "fsc/symbolic/synthesis.hpp"

namespace fsc::symbolic {

Bdd bad_states(SymbolicModel& sm) {
    const Model& m = sm.model();
    bdd::Manager& mgr = sm.manager();
    Bdd ok = mgr.constant(true);
    for (const auto& inv : m.invariants)
        if (inv.kind == AutomatonKind::Requirement) ok &= sm.predicate(inv.predicate);
    Bdd bad = sm.legal() - ok;
    for (int e : sm.events()) {
        if (m.events[e].controllable) continue;
        Bdd plant_enabled = sm.enabled(e, Scope::PlantsOnly);
        if (plant_enabled.is_false()) continue;
        Bdd allowed = sm.enabled(e) & sm.condition(e);
        bad |= plant_enabled - allowed;
    }
    return bad & sm.legal();
}

namespace {

EffortMetrics snapshot(const bdd::Manager& mgr, int iterations) {
    const auto& metrics = mgr.metrics();
    return {metrics.peak_live_nodes, metrics.operations, static_cast<std::uint64_t>(iterations)};
}

}  // namespace

SymbolicSynthesis symbolic_synthesize(SymbolicModel& sm) {
    const Model& m = sm.model();
    bdd::Manager& mgr = sm.manager();
    mgr.reset_metrics();
    SymbolicSynthesis out;
    std::vector<int> controllable, uncontrollable;
    for (int e : sm.events()) (m.events[e].controllable ? controllable : uncontrollable).push_back(e);

    const Bdd legal = sm.legal();
    const Bdd marked = sm.marked() & legal;
    out.bad = bad_states(sm);
    Bdd good = legal - out.bad;

    for (;;) {
        ++out.iterations;
        // controllable events whose successors may leave the good set are disabled
        std::map<int, Bdd> blocked;
        Bdd outside = legal - good;
        for (int c : controllable) blocked[c] = sm.preimage(outside, c);

        Bdd co = marked & good;
        Bdd frontier = co;
        while (!frontier.is_false()) {
            Bdd fresh = mgr.constant(false);
            for (int u : uncontrollable) fresh |= sm.preimage(frontier, u);
            for (int c : controllable) fresh |= sm.preimage(frontier, c) - blocked[c];
            frontier = (fresh & good) - co;
            co |= frontier;
        }

        Bdd next = co;
        for (;;) {
            Bdd escape = mgr.constant(false);
            Bdd lost = legal - next;
            for (int u : uncontrollable) escape |= sm.preimage(lost, u);
            Bdd shrunk = next - escape;
            if (shrunk == next) break;
            next = shrunk;
        }
        out.trace.push_back(snapshot(mgr, out.iterations));
        if (next == good) break;
        good = next;
        mgr.gc();
    }
    out.good = good;

    Bdd outside = legal - good;
    for (int c : controllable) out.guards[c] = sm.condition(c) - sm.preimage(outside, c);

    out.initial = sm.initial() & good;
    out.empty = out.initial.is_false();
    Bdd reach = out.initial;
    Bdd frontier = reach;
    while (!frontier.is_false()) {
        Bdd fresh = mgr.constant(false);
        for (int u : uncontrollable) fresh |= sm.image(frontier, u);
        for (int c : controllable) fresh |= sm.image(frontier & out.guards[c], c);
        frontier = fresh - reach;
        reach |= frontier;
    }
    out.controlled = reach;

    out.metrics = snapshot(mgr, out.iterations);
    return out;
}

}  // namespace fsc::symbolic
