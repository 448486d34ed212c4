#include "fsc/configs.hpp"

#include <algorithm>
#include <set>

#include "fsc/efa/composition.hpp"
#include "fsc/model/resolve.hpp"
#include "fsc/symbolic/encoding.hpp"

namespace fsc {

namespace {

void collect(const Model& m, const ExprPtr& e, std::set<int>& discs, std::set<int>& automata) {
    switch (e->kind) {
        case Expr::Kind::Disc: discs.insert(e->index); break;
        case Expr::Kind::Loc: automata.insert(e->index); break;
        case Expr::Kind::Alg: collect(m, m.algs[e->index].definition, discs, automata); break;
        default: break;
    }
    for (const auto& a : e->args) collect(m, a, discs, automata);
}

ExprPtr validity_predicate(const Model& m) {
    if (auto a = m.find_automaton("Validity")) {
        std::vector<ExprPtr> parts;
        for (const auto& loc : m.automata[*a].locations)
            if (loc.initial) parts.push_back(loc.initial_predicate);
        if (!parts.empty()) return disjunction(parts);
    }
    if (auto v = m.find_alg("sys_valid")) return Expr::alg(*v, Type::boolean());
    throw Error("no validity predicate found");
}

}  // namespace

ConfigurationCount count_configurations(const Model& m, std::uint64_t enumerate_limit) {
    ExprPtr pred = validity_predicate(m);
    std::set<int> discs, automata;
    collect(m, pred, discs, automata);

    ConfigurationCount out;
    out.predicate = to_string(m, pred);
    symbolic::SymbolicModel sm(m, CompositionOptions::plants());
    std::vector<int> vars;
    for (int a : automata)
        if (sm.composition().is_member(a)) vars.push_back(sm.variable_of_automaton(a));
    for (int d : discs)
        if (sm.composition().is_member(m.discs[d].automaton)) vars.push_back(sm.variable_of_disc(d));
    if (vars.size() != discs.size() + automata.size()) throw Error("validity predicate reads a non-plant variable");
    for (int v : vars) out.variables.push_back(sm.variables()[v].name);

    std::vector<unsigned> bits;
    for (int v : vars)
        for (unsigned b : sm.variables()[v].bits) bits.push_back(symbolic::SymbolicModel::cur(b));
    std::sort(bits.begin(), bits.end());
    bdd::Manager& mgr = sm.manager();
    symbolic::Bdd others = mgr.constant(true);
    for (unsigned b : sm.current_vars())
        if (!std::binary_search(bits.begin(), bits.end(), b)) others &= mgr.var(b);
    symbolic::Bdd f = mgr.exists(sm.predicate(pred) & sm.domain(), others);
    out.count = mgr.sat_count(f, bits);

    bdd::BigInt space = 1;
    for (int v : vars) space *= sm.variables()[v].size;
    if (space <= enumerate_limit) {
        const StateLayout layout = StateLayout::full(m);
        std::vector<Value> state(layout.width, 0);
        for (int slot = 0; slot < layout.width; ++slot)
            if (layout.slot_disc[slot] >= 0) state[slot] = static_cast<Value>(m.discs[layout.slot_disc[slot]].type.lo);
        std::vector<int> slots;
        std::vector<std::int64_t> lo, hi;
        for (int a : automata) {
            slots.push_back(layout.automaton_slot[a]);
            lo.push_back(0);
            hi.push_back(static_cast<std::int64_t>(m.automata[a].locations.size()) - 1);
        }
        for (int d : discs) {
            slots.push_back(layout.disc_slot[d]);
            lo.push_back(m.discs[d].type.lo);
            hi.push_back(m.discs[d].type.hi);
        }
        for (std::size_t i = 0; i < slots.size(); ++i) state[slots[i]] = static_cast<Value>(lo[i]);
        std::uint64_t hits = 0;
        for (;;) {
            if (holds(m, layout, pred, state)) ++hits;
            std::size_t i = 0;
            for (; i < slots.size(); ++i) {
                if (state[slots[i]] < hi[i]) {
                    ++state[slots[i]];
                    break;
                }
                state[slots[i]] = static_cast<Value>(lo[i]);
            }
            if (i == slots.size()) break;
        }
        if (bdd::BigInt(hits) != out.count)
            throw Error("configuration count mismatch: " + out.count.str() + " by BDD, " + std::to_string(hits) +
                        " by enumeration");
        out.cross_checked = true;
    }
    return out;
}

bdd::BigInt count_valid_configurations(const feature::FeatureModel& fm) {
    feature::ReconfigMode mode;
    feature::Strictness strictness;
    Model m = resolve(feature::compile_feature_model(fm, mode, strictness));
    return count_configurations(m, 0).count;
}

}  // namespace fsc
