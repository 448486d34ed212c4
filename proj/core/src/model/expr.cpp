#include "fsc/model/expr.hpp"

#include <algorithm>
#include <array>

namespace fsc {

namespace {

std::int64_t clamp_mul(std::int64_t a, std::int64_t b) {
    __int128 r = static_cast<__int128>(a) * b;
    constexpr __int128 lim = static_cast<__int128>(1) << 62;
    if (r > lim) return static_cast<std::int64_t>(lim);
    if (r < -lim) return -static_cast<std::int64_t>(lim);
    return static_cast<std::int64_t>(r);
}

bool is_logical(BinaryOp op) {
    return op == BinaryOp::And || op == BinaryOp::Or || op == BinaryOp::Implies || op == BinaryOp::Iff;
}

bool is_arith(BinaryOp op) { return op == BinaryOp::Add || op == BinaryOp::Sub || op == BinaryOp::Mul; }

}  // namespace

ExprPtr Expr::constant(bool b) {
    static const ExprPtr t = [] {
        auto e = std::make_shared<Expr>();
        e->type = Type::boolean();
        e->value = 1;
        return e;
    }();
    static const ExprPtr f = [] {
        auto e = std::make_shared<Expr>();
        e->type = Type::boolean();
        e->value = 0;
        return e;
    }();
    return b ? t : f;
}

ExprPtr Expr::constant(std::int64_t v, Type t) {
    auto e = std::make_shared<Expr>();
    e->type = t;
    if (t.is_int()) e->type.lo = e->type.hi = v;
    e->value = v;
    return e;
}

ExprPtr Expr::disc(int index, Type t) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Disc;
    e->type = t;
    e->index = index;
    return e;
}

ExprPtr Expr::alg(int index, Type t) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Alg;
    e->type = t;
    e->index = index;
    return e;
}

ExprPtr Expr::loc(int automaton, int location) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Loc;
    e->type = Type::boolean();
    e->index = automaton;
    e->location = location;
    return e;
}

ExprPtr Expr::negation(ExprPtr a) {
    if (a->kind == Kind::Const) return constant(a->value == 0);
    if (a->kind == Kind::Not) return a->args[0];
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Not;
    e->type = Type::boolean();
    e->args = {std::move(a)};
    return e;
}

ExprPtr Expr::minus(ExprPtr a) {
    if (a->kind == Kind::Const) return constant(-a->value, a->type);
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Neg;
    e->type = Type::integer(-a->type.hi, -a->type.lo);
    e->args = {std::move(a)};
    return e;
}

ExprPtr Expr::binary(BinaryOp op, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Binary;
    e->op = op;
    if (is_arith(op)) {
        const Type& x = a->type;
        const Type& y = b->type;
        switch (op) {
            case BinaryOp::Add: e->type = Type::integer(x.lo + y.lo, x.hi + y.hi); break;
            case BinaryOp::Sub: e->type = Type::integer(x.lo - y.hi, x.hi - y.lo); break;
            default: {
                std::array<std::int64_t, 4> c{clamp_mul(x.lo, y.lo), clamp_mul(x.lo, y.hi), clamp_mul(x.hi, y.lo),
                                              clamp_mul(x.hi, y.hi)};
                e->type = Type::integer(*std::min_element(c.begin(), c.end()), *std::max_element(c.begin(), c.end()));
            }
        }
    } else {
        e->type = Type::boolean();
    }
    if (is_logical(op)) {
        // light constant folding keeps generated guards readable
        bool ca = a->kind == Kind::Const, cb = b->kind == Kind::Const;
        if (op == BinaryOp::And) {
            if (ca) return a->value ? b : a;
            if (cb) return b->value ? a : b;
        } else if (op == BinaryOp::Or) {
            if (ca) return a->value ? a : b;
            if (cb) return b->value ? b : a;
        } else if (op == BinaryOp::Implies) {
            if (ca) return a->value ? b : constant(true);
            if (cb && b->value) return b;
        }
    }
    e->args = {std::move(a), std::move(b)};
    return e;
}

ExprPtr Expr::ite(ExprPtr c, ExprPtr t, ExprPtr f) {
    if (c->kind == Kind::Const) return c->value ? t : f;
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Ite;
    e->type = t->type;
    if (e->type.is_int()) {
        e->type.lo = std::min(t->type.lo, f->type.lo);
        e->type.hi = std::max(t->type.hi, f->type.hi);
    }
    e->args = {std::move(c), std::move(t), std::move(f)};
    return e;
}

ExprPtr conjunction(const std::vector<ExprPtr>& parts) {
    ExprPtr acc = Expr::constant(true);
    for (const auto& p : parts) acc = Expr::binary(BinaryOp::And, acc, p);
    return acc;
}

ExprPtr disjunction(const std::vector<ExprPtr>& parts) {
    ExprPtr acc = Expr::constant(false);
    for (const auto& p : parts) acc = Expr::binary(BinaryOp::Or, acc, p);
    return acc;
}

bool same_expr(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->value != b->value || a->index != b->index || a->location != b->location ||
        a->op != b->op || a->args.size() != b->args.size() || !a->type.compatible(b->type))
        return false;
    for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!same_expr(a->args[i], b->args[i])) return false;
    return true;
}

}  // namespace fsc
