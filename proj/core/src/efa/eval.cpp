#include "fsc/efa/eval.hpp"

namespace fsc {

StateLayout StateLayout::full(const Model& m) {
    std::vector<int> all(m.automata.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return of(m, all);
}

StateLayout StateLayout::of(const Model& m, const std::vector<int>& automata) {
    StateLayout l;
    l.automaton_slot.assign(m.automata.size(), -1);
    l.disc_slot.assign(m.discs.size(), -1);
    std::vector<bool> member(m.automata.size(), false);
    for (int a : automata) member[a] = true;
    for (std::size_t a = 0; a < m.automata.size(); ++a) {
        if (!member[a]) continue;
        l.automaton_slot[a] = l.width++;
        l.slot_automaton.push_back(static_cast<int>(a));
        l.slot_disc.push_back(-1);
        for (int d : m.automata[a].discs) {
            l.disc_slot[d] = l.width++;
            l.slot_automaton.push_back(-1);
            l.slot_disc.push_back(d);
        }
    }
    return l;
}

namespace {

[[noreturn]] void outside(const Model& m, int automaton) {
    throw EvalError("expression refers to '" + m.automata[automaton].name +
                    "', which is not part of the composition");
}

std::int64_t arith(BinaryOp op, std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    bool overflow = false;
    switch (op) {
        case BinaryOp::Add: overflow = __builtin_add_overflow(a, b, &r); break;
        case BinaryOp::Sub: overflow = __builtin_sub_overflow(a, b, &r); break;
        default: overflow = __builtin_mul_overflow(a, b, &r); break;
    }
    if (overflow) throw EvalError("integer overflow");
    return r;
}

std::int64_t compare(BinaryOp op, std::int64_t a, std::int64_t b) {
    switch (op) {
        case BinaryOp::Equal: return a == b;
        case BinaryOp::NotEqual: return a != b;
        case BinaryOp::Less: return a < b;
        case BinaryOp::LessEq: return a <= b;
        case BinaryOp::Greater: return a > b;
        case BinaryOp::GreaterEq: return a >= b;
        case BinaryOp::Iff: return (a != 0) == (b != 0);
        default: return arith(op, a, b);
    }
}

}  // namespace

std::int64_t eval(const Model& m, const StateLayout& layout, const ExprPtr& e, StateView s) {
    switch (e->kind) {
        case Expr::Kind::Const: return e->value;
        case Expr::Kind::Disc: {
            int slot = layout.disc_slot[e->index];
            if (slot < 0) outside(m, m.discs[e->index].automaton);
            return s[slot];
        }
        case Expr::Kind::Alg: return eval(m, layout, m.algs[e->index].definition, s);
        case Expr::Kind::Loc: {
            int slot = layout.automaton_slot[e->index];
            if (slot < 0) outside(m, e->index);
            return s[slot] == e->location;
        }
        case Expr::Kind::Not: return eval(m, layout, e->args[0], s) == 0;
        case Expr::Kind::Neg: return -eval(m, layout, e->args[0], s);
        case Expr::Kind::Ite: return eval(m, layout, e->args[eval(m, layout, e->args[0], s) ? 1 : 2], s);
        case Expr::Kind::Binary:
            switch (e->op) {
                case BinaryOp::And: return eval(m, layout, e->args[0], s) && eval(m, layout, e->args[1], s);
                case BinaryOp::Or: return eval(m, layout, e->args[0], s) || eval(m, layout, e->args[1], s);
                case BinaryOp::Implies: return !eval(m, layout, e->args[0], s) || eval(m, layout, e->args[1], s);
                default: return compare(e->op, eval(m, layout, e->args[0], s), eval(m, layout, e->args[1], s));
            }
    }
    return 0;
}

bool holds(const Model& m, const StateLayout& layout, const ExprPtr& e, StateView s) {
    return eval(m, layout, e, s) != 0;
}

std::optional<std::int64_t> eval_partial(const Model& m, const StateLayout& layout, const ExprPtr& e, StateView s,
                                         const std::vector<bool>& known) {
    using R = std::optional<std::int64_t>;
    auto sub = [&](int i) { return eval_partial(m, layout, e->args[i], s, known); };
    switch (e->kind) {
        case Expr::Kind::Const: return e->value;
        case Expr::Kind::Disc: {
            int slot = layout.disc_slot[e->index];
            if (slot < 0) outside(m, m.discs[e->index].automaton);
            return known[slot] ? R(s[slot]) : R();
        }
        case Expr::Kind::Alg: return eval_partial(m, layout, m.algs[e->index].definition, s, known);
        case Expr::Kind::Loc: {
            int slot = layout.automaton_slot[e->index];
            if (slot < 0) outside(m, e->index);
            return known[slot] ? R(s[slot] == e->location) : R();
        }
        case Expr::Kind::Not: {
            R a = sub(0);
            return a ? R(*a == 0) : a;
        }
        case Expr::Kind::Neg: {
            R a = sub(0);
            return a ? R(-*a) : a;
        }
        case Expr::Kind::Ite: {
            R c = sub(0);
            if (c) return sub(*c ? 1 : 2);
            R t = sub(1), f = sub(2);
            if (t && f && *t == *f) return t;
            return R();
        }
        case Expr::Kind::Binary: {
            R a = sub(0);
            switch (e->op) {
                case BinaryOp::And: {
                    if (a && !*a) return 0;
                    R b = sub(1);
                    if (b && !*b) return 0;
                    return a && b ? R(1) : R();
                }
                case BinaryOp::Or: {
                    if (a && *a) return 1;
                    R b = sub(1);
                    if (b && *b) return 1;
                    return a && b ? R(0) : R();
                }
                case BinaryOp::Implies: {
                    if (a && !*a) return 1;
                    R b = sub(1);
                    if (b && *b) return 1;
                    return a && b ? R(0) : R();
                }
                default: {
                    R b = sub(1);
                    if (!a || !b) return R();
                    return compare(e->op, *a, *b);
                }
            }
        }
    }
    return R();
}

}  // namespace fsc
