#include "fsc/model/model.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "fsc/lang/printer.hpp"

namespace fsc {

bool Automaton::in_alphabet(int event) const {
    return std::binary_search(alphabet.begin(), alphabet.end(), event);
}

bool Automaton::monitors(int event) const {
    return std::binary_search(monitored.begin(), monitored.end(), event);
}

int Automaton::location_index(const std::string& n) const {
    for (std::size_t i = 0; i < locations.size(); ++i)
        if (locations[i].name == n) return static_cast<int>(i);
    return -1;
}

namespace {

template <typename T>
std::optional<int> find_named(const std::vector<T>& items, const std::string& name) {
    for (std::size_t i = 0; i < items.size(); ++i)
        if (items[i].name == name) return static_cast<int>(i);
    return std::nullopt;
}

lang::AstExprPtr to_ast(const Model& m, const ExprPtr& e) {
    using lang::AstExpr;
    switch (e->kind) {
        case Expr::Kind::Const:
            if (e->type.is_bool()) return AstExpr::boolean(e->value != 0);
            if (e->type.is_enum()) return AstExpr::ref(m.enums[e->type.enumeration].literals[e->value]);
            return AstExpr::integer(e->value);
        case Expr::Kind::Disc: return AstExpr::ref(m.discs[e->index].name);
        case Expr::Kind::Alg: return AstExpr::ref(m.algs[e->index].name);
        case Expr::Kind::Loc: {
            const Automaton& a = m.automata[e->index];
            return AstExpr::ref(a.name + "." + a.locations[e->location].name);
        }
        case Expr::Kind::Not: return AstExpr::unary(lang::UnaryOp::Not, to_ast(m, e->args[0]));
        case Expr::Kind::Neg: return AstExpr::unary(lang::UnaryOp::Negate, to_ast(m, e->args[0]));
        case Expr::Kind::Binary: return AstExpr::binary(e->op, to_ast(m, e->args[0]), to_ast(m, e->args[1]));
        case Expr::Kind::Ite:
            return AstExpr::if_then_else(to_ast(m, e->args[0]), to_ast(m, e->args[1]), to_ast(m, e->args[2]));
    }
    return AstExpr::boolean(false);
}

}  // namespace

std::optional<int> Model::find_event(const std::string& name) const { return find_named(events, name); }
std::optional<int> Model::find_automaton(const std::string& name) const { return find_named(automata, name); }
std::optional<int> Model::find_disc(const std::string& name) const { return find_named(discs, name); }
std::optional<int> Model::find_alg(const std::string& name) const { return find_named(algs, name); }

std::vector<int> Model::automata_of_kind(AutomatonKind kind) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < automata.size(); ++i)
        if (automata[i].kind == kind) out.push_back(static_cast<int>(i));
    return out;
}

bool Model::has_kind(AutomatonKind kind) const { return !automata_of_kind(kind).empty(); }

std::string to_string(const Model& m, const ExprPtr& e) { return lang::to_string(to_ast(m, e)); }

std::string type_name(const Model& m, const Type& t) {
    switch (t.kind) {
        case Type::Kind::Bool: return "bool";
        case Type::Kind::Int: return "int[" + std::to_string(t.lo) + ".." + std::to_string(t.hi) + "]";
        case Type::Kind::Enum: return m.enums[t.enumeration].name;
    }
    return "?";
}

std::string value_name(const Model& m, const Type& t, std::int64_t v) {
    if (t.is_bool()) return v ? "true" : "false";
    if (t.is_enum()) return m.enums[t.enumeration].literals[v];
    return std::to_string(v);
}

std::vector<int> algs_used(const Model& m, const ExprPtr& e) {
    std::vector<int> order;
    std::unordered_set<int> seen;
    std::function<void(const ExprPtr&)> visit = [&](const ExprPtr& x) {
        if (x->kind == Expr::Kind::Alg) {
            if (seen.insert(x->index).second) {
                visit(m.algs[x->index].definition);
                order.push_back(x->index);
            }
            return;
        }
        for (const auto& a : x->args) visit(a);
    };
    visit(e);
    return order;
}

bool is_state_independent(const Model& m, const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::Disc:
        case Expr::Kind::Loc: return false;
        case Expr::Kind::Alg: return is_state_independent(m, m.algs[e->index].definition);
        default:
            for (const auto& a : e->args)
                if (!is_state_independent(m, a)) return false;
            return true;
    }
}

ExprPtr inline_algs(const Model& m, const ExprPtr& e) {
    if (e->kind == Expr::Kind::Alg) return inline_algs(m, m.algs[e->index].definition);
    if (e->args.empty()) return e;
    std::vector<ExprPtr> args;
    bool changed = false;
    for (const auto& a : e->args) {
        args.push_back(inline_algs(m, a));
        changed |= args.back() != a;
    }
    if (!changed) return e;
    auto copy = std::make_shared<Expr>(*e);
    copy->args = std::move(args);
    return copy;
}

}  // namespace fsc
