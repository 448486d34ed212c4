#include "fsc/efa/composition.hpp"

#include <algorithm>
#include <set>

namespace fsc {

Composition::Composition(const Model& m, const CompositionOptions& options) : m_(&m), opt_(options) {
    for (std::size_t a = 0; a < m.automata.size(); ++a) {
        AutomatonKind k = m.automata[a].kind;
        if (k == AutomatonKind::Plant || (k == AutomatonKind::Requirement && opt_.requirement_automata) ||
            (k == AutomatonKind::Supervisor && opt_.supervisors))
            members_.push_back(static_cast<int>(a));
    }
    layout_ = StateLayout::of(m, members_);

    participants_.resize(m.events.size());
    for (int a : members_) {
        const Automaton& aut = m.automata[a];
        for (int ev : aut.alphabet) {
            Participant p;
            p.automaton = a;
            p.monitor = aut.monitors(ev);
            p.plant = aut.kind == AutomatonKind::Plant;
            p.edges_by_location.resize(aut.locations.size());
            for (std::size_t i = 0; i < aut.edges.size(); ++i)
                if (aut.edges[i].event == ev) p.edges_by_location[aut.edges[i].source].push_back(static_cast<int>(i));
            participants_[ev].push_back(std::move(p));
        }
    }
    for (std::size_t ev = 0; ev < m.events.size(); ++ev)
        if (!participants_[ev].empty()) event_order_.push_back(static_cast<int>(ev));
    std::sort(event_order_.begin(), event_order_.end(),
              [&](int a, int b) { return m.events[a].name < m.events[b].name; });

    for (const auto& inv : m.invariants) {
        if (inv.kind == AutomatonKind::Plant) {
            plant_invariants_.push_back(inv.predicate);
            invariants_.push_back(inv.predicate);
        } else if (opt_.requirement_invariants) {
            invariants_.push_back(inv.predicate);
        }
    }
    conditions_.assign(m.events.size(), nullptr);
    for (const auto& c : m.conditions) {
        ExprPtr& slot = conditions_[c.event];
        slot = slot ? Expr::binary(BinaryOp::And, slot, c.condition) : c.condition;
    }
}

bool Composition::condition_applies(int event) const {
    switch (opt_.conditions) {
        case ConditionMode::None: return false;
        case ConditionMode::Controllable: return m_->events[event].controllable;
        case ConditionMode::All: return true;
    }
    return false;
}

bool Composition::satisfies_invariants(StateView s, Scope scope) const {
    const auto& list = scope == Scope::All ? invariants_ : plant_invariants_;
    for (const auto& inv : list)
        if (!holds(*m_, layout_, inv, s)) return false;
    return true;
}

bool Composition::is_marked(StateView s) const {
    for (int a : members_) {
        const Location& loc = m_->automata[a].locations[s[layout_.automaton_slot[a]]];
        if (!loc.marked || !holds(*m_, layout_, loc.marked_predicate, s)) return false;
    }
    return true;
}

std::vector<Choice> Composition::enabled(StateView s, int event, Scope scope) const {
    std::vector<Choice> out;
    const auto& parts = participants_[event];
    if (parts.empty()) return out;
    if (scope == Scope::All && condition_applies(event) && conditions_[event] &&
        !holds(*m_, layout_, conditions_[event], s))
        return out;

    // per participant: the enabled edges (monitors with none enabled contribute {-1})
    std::vector<std::vector<int>> options(parts.size());
    bool any_plant = false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const Participant& p = parts[i];
        if (scope == Scope::PlantsOnly && !p.plant) {
            options[i] = {-1};
            continue;
        }
        any_plant = true;
        const Automaton& aut = m_->automata[p.automaton];
        for (int e : p.edges_by_location[s[layout_.automaton_slot[p.automaton]]])
            if (holds(*m_, layout_, aut.edges[e].guard, s)) options[i].push_back(e);
        if (options[i].empty()) {
            if (!p.monitor) return out;
            options[i] = {-1};
        }
    }
    if (!any_plant) return out;

    Choice c(parts.size());
    std::vector<std::size_t> idx(parts.size(), 0);
    for (;;) {
        for (std::size_t i = 0; i < parts.size(); ++i) c[i] = options[i][idx[i]];
        out.push_back(c);
        std::size_t k = 0;
        while (k < parts.size() && ++idx[k] == options[k].size()) idx[k++] = 0;
        if (k == parts.size()) break;
    }
    return out;
}

bool Composition::is_enabled(StateView s, int event, Scope scope) const {
    return !successors(s, event, scope).empty();
}

std::vector<Value> Composition::step(StateView s, int event, const Choice& choice, Scope scope) const {
    std::vector<Value> next(s.begin(), s.end());
    const auto& parts = participants_[event];
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (choice[i] < 0) continue;
        const Automaton& aut = m_->automata[parts[i].automaton];
        const Edge& e = aut.edges[choice[i]];
        next[layout_.automaton_slot[parts[i].automaton]] = e.target;
        for (const auto& u : e.updates) {
            std::int64_t v = eval(*m_, layout_, u.value, s);
            const DiscVar& var = m_->discs[u.variable];
            if (!var.type.contains(v))
                throw EvalError("update of '" + var.name + "' to " + std::to_string(v) + " leaves " +
                                type_name(*m_, var.type) + " on edge '" + m_->events[event].name + "' of '" +
                                aut.name + "' (" + e.span.to_string() + ")");
            next[layout_.disc_slot[u.variable]] = static_cast<Value>(v);
        }
    }
    return next;
}

std::vector<std::vector<Value>> Composition::successors(StateView s, int event, Scope scope) const {
    std::vector<std::vector<Value>> out;
    for (const auto& c : enabled(s, event, scope)) {
        auto next = step(s, event, c, scope);
        if (!satisfies_invariants(next, scope)) continue;
        if (std::find(out.begin(), out.end(), next) == out.end()) out.push_back(std::move(next));
    }
    return out;
}

std::vector<std::vector<Value>> Composition::initial_states(std::size_t limit) const {
    const int width = layout_.width;
    std::vector<std::vector<Value>> candidates(width);
    for (int slot = 0; slot < width; ++slot) {
        int a = layout_.slot_automaton[slot];
        if (a >= 0) {
            const auto& locs = m_->automata[a].locations;
            for (std::size_t l = 0; l < locs.size(); ++l)
                if (locs[l].initial && !locs[l].initial_predicate->is_false())
                    candidates[slot].push_back(static_cast<Value>(l));
        } else {
            const DiscVar& v = m_->discs[layout_.slot_disc[slot]];
            if (v.any_initial) {
                for (std::int64_t x = v.type.lo; x <= v.type.hi; ++x) candidates[slot].push_back(static_cast<Value>(x));
            } else {
                candidates[slot].push_back(static_cast<Value>(v.initial));
            }
        }
    }

    std::vector<ExprPtr> constraints = invariants_;
    std::vector<Value> cur(width, 0);
    std::vector<bool> known(width, false);
    std::vector<bool> fixed(width, false);
    for (int slot = 0; slot < width; ++slot) {
        if (candidates[slot].size() != 1) continue;
        cur[slot] = candidates[slot][0];
        known[slot] = fixed[slot] = true;
    }
    std::vector<std::vector<Value>> out;

    auto alive = [&]() {
        for (const auto& c : constraints) {
            auto v = eval_partial(*m_, layout_, c, cur, known);
            if (v && !*v) return false;
        }
        for (int a : members_) {
            int slot = layout_.automaton_slot[a];
            if (!known[slot]) continue;
            auto v = eval_partial(*m_, layout_, m_->automata[a].locations[cur[slot]].initial_predicate, cur, known);
            if (v && !*v) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int slot) -> void {
        if (slot == width) {
            if (out.size() >= limit) throw BudgetExceeded(limit);
            out.push_back(cur);
            return;
        }
        if (fixed[slot]) {
            self(self, slot + 1);
            return;
        }
        for (Value v : candidates[slot]) {
            cur[slot] = v;
            known[slot] = true;
            if (alive()) self(self, slot + 1);
        }
        known[slot] = false;
    };
    if (width == 0) return {{}};
    for (int slot = 0; slot < width; ++slot)
        if (candidates[slot].empty()) return {};
    if (!alive()) return {};
    rec(rec, 0);
    return out;
}

std::string Composition::slot_name(int slot) const {
    int a = layout_.slot_automaton[slot];
    if (a >= 0) return m_->automata[a].name;
    return m_->discs[layout_.slot_disc[slot]].name;
}

std::string Composition::slot_value(int slot, Value v) const {
    int a = layout_.slot_automaton[slot];
    if (a >= 0) {
        const std::string& n = m_->automata[a].locations[v].name;
        return n.empty() ? "*" : n;
    }
    return value_name(*m_, m_->discs[layout_.slot_disc[slot]].type, v);
}

std::string Composition::describe(StateView s) const {
    std::string out;
    for (int slot = 0; slot < layout_.width; ++slot) {
        int a = layout_.slot_automaton[slot];
        if (a >= 0 && m_->automata[a].locations.size() == 1) continue;
        if (!out.empty()) out += ", ";
        out += slot_name(slot) + "=" + slot_value(slot, s[slot]);
    }
    return out;
}

}  // namespace fsc
