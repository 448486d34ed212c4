#include "fsc/symbolic/encoding.hpp"

#include <algorithm>
#include <bit>

namespace fsc::symbolic {

namespace {

unsigned bits_for(std::uint64_t size) {
    unsigned n = 0;
    while ((std::uint64_t{1} << n) < size) ++n;
    return n;
}

}  // namespace

SymbolicModel::SymbolicModel(const Model& m, const CompositionOptions& options, const EncodingOptions& encoding)
    : m_(&m), opt_(options), comp_(m, options), mgr_(0, encoding.cache_bits) {
    const StateLayout& layout = comp_.layout();
    automaton_var_.assign(m.automata.size(), -1);
    disc_var_.assign(m.discs.size(), -1);
    for (int slot = 0; slot < layout.width; ++slot) {
        Variable v;
        if (int a = layout.slot_automaton[slot]; a >= 0) {
            v.name = m.automata[a].name;
            v.automaton = a;
            v.size = m.automata[a].locations.size();
        } else {
            int d = layout.slot_disc[slot];
            v.name = m.discs[d].name;
            v.disc = d;
            v.lo = m.discs[d].type.lo;
            v.size = m.discs[d].type.domain_size();
        }
        vars_.push_back(std::move(v));
    }
    if (!encoding.order.empty()) {
        auto rank = [&](const Variable& v) {
            auto it = std::find(encoding.order.begin(), encoding.order.end(), v.name);
            return it == encoding.order.end() ? encoding.order.size() : static_cast<std::size_t>(it - encoding.order.begin());
        };
        std::stable_sort(vars_.begin(), vars_.end(), [&](const Variable& a, const Variable& b) { return rank(a) < rank(b); });
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        Variable& v = vars_[i];
        if (v.automaton >= 0) automaton_var_[v.automaton] = static_cast<int>(i);
        else disc_var_[v.disc] = static_cast<int>(i);
        unsigned n = bits_for(v.size);
        for (unsigned b = 0; b < n; ++b) v.bits.push_back(static_cast<unsigned>(bit_count_++));
    }
    if (bit_count_ > encoding.max_bits)
        throw Error("state encoding needs " + std::to_string(bit_count_) + " bits, more than the budget of " +
                    std::to_string(encoding.max_bits));
    for (std::size_t b = 0; b < 2 * bit_count_; ++b) mgr_.new_variable();
    for (std::size_t b = 0; b < bit_count_; ++b) cur_vars_.push_back(cur(static_cast<unsigned>(b)));
}

Bdd SymbolicModel::value_is(int var, std::int64_t value, bool next_state) {
    const Variable& v = vars_[var];
    std::int64_t code = value - v.lo;
    if (code < 0 || static_cast<std::uint64_t>(code) >= v.size) return mgr_.constant(false);
    Bdd r = mgr_.constant(true);
    const std::size_t n = v.bits.size();
    for (std::size_t i = n; i-- > 0;) {
        unsigned bdd_var = next_state ? next(v.bits[i]) : cur(v.bits[i]);
        bool one = (code >> (n - 1 - i)) & 1;
        r = (one ? mgr_.var(bdd_var) : mgr_.nvar(bdd_var)) & r;
    }
    return r;
}

Bdd SymbolicModel::unchanged(int var) {
    Bdd r = mgr_.constant(true);
    for (unsigned b : vars_[var].bits) r &= !(mgr_.var(cur(b)) ^ mgr_.var(next(b)));
    return r;
}

Bdd SymbolicModel::domain() {
    if (domain_.valid()) return domain_;
    Bdd d = mgr_.constant(true);
    for (const auto& v : vars_) {
        const std::size_t n = v.bits.size();
        if (n == 0 || v.size == (std::uint64_t{1} << n)) continue;
        // code < size, built from the least significant bit up
        Bdd less = mgr_.constant(false);
        for (std::size_t i = n; i-- > 0;) {
            Bdd x = mgr_.var(cur(v.bits[i]));
            bool k = (v.size >> (n - 1 - i)) & 1;
            less = k ? ((!x) | less) : ((!x) & less);
        }
        d &= less;
    }
    domain_ = d;
    return domain_;
}

Bdd SymbolicModel::legal() {
    if (legal_.valid()) return legal_;
    Bdd l = domain();
    for (const auto& inv : m_->invariants)
        if (inv.kind == AutomatonKind::Plant || opt_.requirement_invariants) l &= predicate(inv.predicate);
    legal_ = l;
    return legal_;
}

Bdd SymbolicModel::plant_legal() {
    if (plant_legal_.valid()) return plant_legal_;
    Bdd l = domain();
    for (const auto& inv : m_->invariants)
        if (inv.kind == AutomatonKind::Plant) l &= predicate(inv.predicate);
    plant_legal_ = l;
    return plant_legal_;
}

Bdd SymbolicModel::initial() {
    Bdd r = mgr_.constant(true);
    for (int a : comp_.members()) {
        const Automaton& aut = m_->automata[a];
        Bdd any = mgr_.constant(false);
        for (std::size_t l = 0; l < aut.locations.size(); ++l)
            if (aut.locations[l].initial)
                any |= value_is(automaton_var_[a], static_cast<std::int64_t>(l)) &
                       predicate(aut.locations[l].initial_predicate);
        r &= any;
        for (int d : aut.discs)
            if (!m_->discs[d].any_initial) r &= value_is(disc_var_[d], m_->discs[d].initial);
    }
    return r & legal();
}

Bdd SymbolicModel::marked() {
    Bdd r = mgr_.constant(true);
    for (int a : comp_.members()) {
        const Automaton& aut = m_->automata[a];
        Bdd any = mgr_.constant(false);
        for (std::size_t l = 0; l < aut.locations.size(); ++l)
            if (aut.locations[l].marked)
                any |= value_is(automaton_var_[a], static_cast<std::int64_t>(l)) &
                       predicate(aut.locations[l].marked_predicate);
        r &= any;
    }
    return r & domain();
}

Bdd SymbolicModel::condition(int event) {
    Bdd r = mgr_.constant(true);
    for (const auto& c : m_->conditions)
        if (c.event == event) r &= predicate(c.condition);
    return r;
}

Bdd SymbolicModel::bool_of(const Partition& p) {
    Bdd r = mgr_.constant(false);
    for (const auto& [v, c] : p)
        if (v != 0) r |= c;
    return r;
}

Partition SymbolicModel::combine(const Partition& a, const Partition& b, BinaryOp op) {
    std::map<std::int64_t, Bdd> acc;
    for (const auto& [va, ca] : a) {
        for (const auto& [vb, cb] : b) {
            Bdd c = ca & cb;
            if (c.is_false()) continue;
            std::int64_t v = 0;
            switch (op) {
                case BinaryOp::Add: v = va + vb; break;
                case BinaryOp::Sub: v = va - vb; break;
                case BinaryOp::Mul: v = va * vb; break;
                case BinaryOp::Equal: v = va == vb; break;
                case BinaryOp::NotEqual: v = va != vb; break;
                case BinaryOp::Less: v = va < vb; break;
                case BinaryOp::LessEq: v = va <= vb; break;
                case BinaryOp::Greater: v = va > vb; break;
                case BinaryOp::GreaterEq: v = va >= vb; break;
                default: throw Error("unexpected operator in integer expression");
            }
            auto it = acc.find(v);
            if (it == acc.end()) acc.emplace(v, c);
            else it->second |= c;
        }
    }
    return {acc.begin(), acc.end()};
}

Bdd SymbolicModel::predicate(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::Const: return mgr_.constant(e->value != 0);
        case Expr::Kind::Disc: {
            int v = disc_var_[e->index];
            if (v < 0) throw EvalError("'" + m_->discs[e->index].name + "' is outside the composition");
            return value_is(v, 1);
        }
        case Expr::Kind::Loc: {
            int v = automaton_var_[e->index];
            if (v < 0) throw EvalError("automaton '" + m_->automata[e->index].name + "' is outside the composition");
            return value_is(v, e->location);
        }
        case Expr::Kind::Alg: {
            auto it = alg_preds_.find(e->index);
            if (it != alg_preds_.end()) return it->second;
            Bdd r = predicate(m_->algs[e->index].definition);
            alg_preds_.emplace(e->index, r);
            return r;
        }
        case Expr::Kind::Not: return !predicate(e->args[0]);
        case Expr::Kind::Ite: return mgr_.ite(predicate(e->args[0]), predicate(e->args[1]), predicate(e->args[2]));
        case Expr::Kind::Neg: break;
        case Expr::Kind::Binary:
            switch (e->op) {
                case BinaryOp::And: return predicate(e->args[0]) & predicate(e->args[1]);
                case BinaryOp::Or: return predicate(e->args[0]) | predicate(e->args[1]);
                case BinaryOp::Implies: return (!predicate(e->args[0])) | predicate(e->args[1]);
                case BinaryOp::Iff: return !(predicate(e->args[0]) ^ predicate(e->args[1]));
                case BinaryOp::Equal:
                case BinaryOp::NotEqual:
                    if (e->args[0]->type.is_bool()) {
                        Bdd x = predicate(e->args[0]) ^ predicate(e->args[1]);
                        return e->op == BinaryOp::Equal ? !x : x;
                    }
                    [[fallthrough]];
                default: return bool_of(combine(values(e->args[0]), values(e->args[1]), e->op));
            }
    }
    return bool_of(values(e));
}

Partition SymbolicModel::values(const ExprPtr& e) {
    if (e->type.is_bool()) {
        Bdd p = predicate(e);
        Partition out;
        if (!p.is_true()) out.emplace_back(0, !p);
        if (!p.is_false()) out.emplace_back(1, p);
        return out;
    }
    switch (e->kind) {
        case Expr::Kind::Const: return {{e->value, mgr_.constant(true)}};
        case Expr::Kind::Disc: {
            int v = disc_var_[e->index];
            if (v < 0) throw EvalError("'" + m_->discs[e->index].name + "' is outside the composition");
            Partition out;
            for (std::uint64_t c = 0; c < vars_[v].size; ++c) {
                std::int64_t value = vars_[v].lo + static_cast<std::int64_t>(c);
                out.emplace_back(value, value_is(v, value));
            }
            return out;
        }
        case Expr::Kind::Alg: {
            auto it = alg_values_.find(e->index);
            if (it != alg_values_.end()) return it->second;
            Partition r = values(m_->algs[e->index].definition);
            alg_values_.emplace(e->index, r);
            return r;
        }
        case Expr::Kind::Neg: {
            Partition out = values(e->args[0]);
            for (auto& [v, c] : out) v = -v;
            std::reverse(out.begin(), out.end());
            return out;
        }
        case Expr::Kind::Ite: {
            Bdd c = predicate(e->args[0]);
            std::map<std::int64_t, Bdd> acc;
            for (const auto& [v, cond] : values(e->args[1])) {
                Bdd x = cond & c;
                if (!x.is_false()) acc.emplace(v, x);
            }
            for (const auto& [v, cond] : values(e->args[2])) {
                Bdd x = cond - c;
                if (x.is_false()) continue;
                auto it = acc.find(v);
                if (it == acc.end()) acc.emplace(v, x);
                else it->second |= x;
            }
            return {acc.begin(), acc.end()};
        }
        case Expr::Kind::Binary: return combine(values(e->args[0]), values(e->args[1]), e->op);
        default: break;
    }
    throw Error("cannot encode expression");
}

Bdd SymbolicModel::assign(int var, const Partition& value) {
    Bdd r = mgr_.constant(false);
    for (const auto& [v, c] : value) r |= c & value_is(var, v, true);
    return r;
}

Bdd SymbolicModel::participant_relation(const Composition::Participant& p, int event) {
    (void)event;
    const Automaton& aut = m_->automata[p.automaton];
    const int loc = automaton_var_[p.automaton];
    Bdd rel = mgr_.constant(false);
    Bdd en = mgr_.constant(false);
    for (std::size_t l = 0; l < p.edges_by_location.size(); ++l) {
        for (int ei : p.edges_by_location[l]) {
            const Edge& e = aut.edges[ei];
            Bdd pre = value_is(loc, static_cast<std::int64_t>(l)) & predicate(e.guard);
            if (pre.is_false()) continue;
            en |= pre;
            Bdd post = value_is(loc, e.target, true);
            for (int d : aut.discs) {
                auto u = std::find_if(e.updates.begin(), e.updates.end(), [&](const Update& x) { return x.variable == d; });
                post &= u == e.updates.end() ? unchanged(disc_var_[d]) : assign(disc_var_[d], values(u->value));
            }
            rel |= pre & post;
        }
    }
    if (p.monitor) {
        Bdd stay = unchanged(loc);
        for (int d : aut.discs) stay &= unchanged(disc_var_[d]);
        rel |= (!en) & stay;
    }
    return rel;
}

SymbolicModel::EventData& SymbolicModel::event_data(int event, Scope scope, bool conditions) {
    EventData& d = events_[{event, scope == Scope::All ? 0 : 1, conditions}];
    if (d.built) return d;
    Bdd rel = mgr_.constant(true);
    bool any = false;
    std::vector<unsigned> cur_bits, next_bits;
    d.to_cur.resize(2 * bit_count_);
    d.to_next.resize(2 * bit_count_);
    for (unsigned i = 0; i < 2 * bit_count_; ++i) d.to_cur[i] = d.to_next[i] = i;
    for (const auto& p : comp_.participants(event)) {
        if (scope == Scope::PlantsOnly && !p.plant) continue;
        any = true;
        rel &= participant_relation(p, event);
        d.written.push_back(automaton_var_[p.automaton]);
        for (int disc : m_->automata[p.automaton].discs) d.written.push_back(disc_var_[disc]);
    }
    if (!any) rel = mgr_.constant(false);
    if (scope == Scope::All && conditions) {
        bool applies = opt_.conditions == ConditionMode::All ||
                       (opt_.conditions == ConditionMode::Controllable && m_->events[event].controllable);
        if (applies) rel &= condition(event);
    }
    for (int v : d.written) {
        for (unsigned b : vars_[v].bits) {
            cur_bits.push_back(cur(b));
            next_bits.push_back(next(b));
            d.to_cur[next(b)] = cur(b);
            d.to_next[cur(b)] = next(b);
        }
    }
    d.relation = rel;
    d.quantify_cur = mgr_.cube(cur_bits);
    d.quantify_next = mgr_.cube(next_bits);
    d.built = true;
    return d;
}

Bdd SymbolicModel::relation(int event, Scope scope) { return event_data(event, scope).relation; }

Bdd SymbolicModel::image(const Bdd& s, int event, Scope scope) {
    EventData& d = event_data(event, scope);
    Bdd moved = mgr_.and_exists(s, d.relation, d.quantify_cur);
    return mgr_.rename(moved, d.to_cur) & (scope == Scope::All ? legal() : plant_legal());
}

Bdd SymbolicModel::to_next(const Bdd& s, int event) { return mgr_.rename(s, event_data(event, Scope::All).to_next); }

Bdd SymbolicModel::preimage(const Bdd& s, int event, Scope scope) {
    EventData& d = event_data(event, scope);
    return mgr_.and_exists(d.relation, mgr_.rename(s, d.to_next), d.quantify_next);
}

Bdd SymbolicModel::enabled(int event, Scope scope) {
    return preimage(scope == Scope::All ? legal() : plant_legal(), event, scope);
}

Bdd SymbolicModel::enabled_unconditioned(int event) {
    EventData& d = event_data(event, Scope::All, false);
    return mgr_.and_exists(d.relation, mgr_.rename(legal(), d.to_next), d.quantify_next);
}

Bdd SymbolicModel::reachable(const Bdd& from, const Bdd& within) {
    Bdd reach = from & within;
    Bdd frontier = reach;
    while (!frontier.is_false()) {
        ++iterations_;
        Bdd fresh = mgr_.constant(false);
        for (int e : events()) fresh |= image(frontier, e);
        frontier = (fresh & within) - reach;
        reach |= frontier;
    }
    return reach;
}

Bdd SymbolicModel::reachable() { return reachable(initial(), legal()); }

Bdd SymbolicModel::coreachable(const Bdd& target, const Bdd& within) {
    Bdd co = target & within;
    Bdd frontier = co;
    while (!frontier.is_false()) {
        ++iterations_;
        Bdd fresh = mgr_.constant(false);
        for (int e : events()) fresh |= preimage(frontier, e);
        frontier = (fresh & within) - co;
        co |= frontier;
    }
    return co;
}

BigInt SymbolicModel::count(const Bdd& states) { return mgr_.sat_count(states, cur_vars_); }

BigInt SymbolicModel::transition_count(const Bdd& states, const std::map<int, Bdd>& guards) {
    BigInt total = 0;
    for (int e : events()) {
        EventData& d = event_data(e, Scope::All);
        Bdd src = states;
        if (auto it = guards.find(e); it != guards.end()) src &= it->second;
        Bdd pairs = src & d.relation & mgr_.rename(states, d.to_next);
        if (pairs.is_false()) continue;
        std::vector<unsigned> over = cur_vars_;
        for (int v : d.written)
            for (unsigned b : vars_[v].bits) over.push_back(next(b));
        total += mgr_.sat_count(pairs, over);
    }
    return total;
}

BigInt SymbolicModel::worst_case_product() const {
    BigInt p = 1;
    for (const auto& v : vars_) p *= v.size;
    return p;
}

Bdd SymbolicModel::encode(StateView s) {
    const StateLayout& layout = comp_.layout();
    Bdd r = mgr_.constant(true);
    for (int slot = 0; slot < layout.width; ++slot) {
        int a = layout.slot_automaton[slot];
        int var = a >= 0 ? automaton_var_[a] : disc_var_[layout.slot_disc[slot]];
        r &= value_is(var, s[slot]);
    }
    return r;
}

std::vector<Value> SymbolicModel::pick(const Bdd& s) {
    std::vector<int> bits = mgr_.pick_one(s);
    if (bits.empty()) return {};
    const StateLayout& layout = comp_.layout();
    std::vector<Value> out(layout.width);
    for (int slot = 0; slot < layout.width; ++slot) {
        int a = layout.slot_automaton[slot];
        const Variable& v = vars_[a >= 0 ? automaton_var_[a] : disc_var_[layout.slot_disc[slot]]];
        std::uint64_t code = 0;
        for (unsigned b : v.bits) code = code << 1 | (bits[cur(b)] == 1 ? 1u : 0u);
        out[slot] = static_cast<Value>(v.lo + static_cast<std::int64_t>(code));
    }
    return out;
}

Bdd SymbolicModel::current_cube(const std::vector<int>& vars) {
    std::vector<unsigned> bits;
    for (int v : vars)
        for (unsigned b : vars_[v].bits) bits.push_back(cur(b));
    return mgr_.cube(bits);
}

}  // namespace fsc::symbolic
