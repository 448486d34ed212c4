#include "fsc/lang/ast.hpp"

#include <sstream>

namespace fsc::lang {

std::string Name::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += '.';
        out += parts[i];
    }
    return out;
}

std::string_view spelling(BinaryOp op) {
    switch (op) {
        case BinaryOp::Iff: return "<=>";
        case BinaryOp::Implies: return "=>";
        case BinaryOp::Or: return "or";
        case BinaryOp::And: return "and";
        case BinaryOp::Equal: return "=";
        case BinaryOp::NotEqual: return "!=";
        case BinaryOp::Less: return "<";
        case BinaryOp::LessEq: return "<=";
        case BinaryOp::Greater: return ">";
        case BinaryOp::GreaterEq: return ">=";
        case BinaryOp::Add: return "+";
        case BinaryOp::Sub: return "-";
        case BinaryOp::Mul: return "*";
    }
    return "?";
}

std::string_view spelling(AutomatonKind kind) {
    switch (kind) {
        case AutomatonKind::Plant: return "plant";
        case AutomatonKind::Requirement: return "requirement";
        case AutomatonKind::Supervisor: return "supervisor";
    }
    return "?";
}

AstExprPtr AstExpr::boolean(bool value, SourceSpan span) {
    auto e = std::make_shared<AstExpr>();
    e->kind = Kind::BoolLit;
    e->bool_value = value;
    e->span = std::move(span);
    return e;
}

AstExprPtr AstExpr::integer(std::int64_t value, SourceSpan span) {
    auto e = std::make_shared<AstExpr>();
    e->kind = Kind::IntLit;
    e->int_value = value;
    e->span = std::move(span);
    return e;
}

AstExprPtr AstExpr::ref(Name name) {
    auto e = std::make_shared<AstExpr>();
    e->kind = Kind::Ref;
    e->span = name.span;
    e->name = std::move(name);
    return e;
}

AstExprPtr AstExpr::ref(const std::string& dotted) {
    Name name;
    std::string part;
    std::istringstream in(dotted);
    while (std::getline(in, part, '.')) name.parts.push_back(part);
    return ref(std::move(name));
}

AstExprPtr AstExpr::unary(UnaryOp op, AstExprPtr operand, SourceSpan span) {
    auto e = std::make_shared<AstExpr>();
    e->kind = Kind::Unary;
    e->unary_op = op;
    e->operands = {std::move(operand)};
    e->span = std::move(span);
    return e;
}

AstExprPtr AstExpr::binary(BinaryOp op, AstExprPtr lhs, AstExprPtr rhs, SourceSpan span) {
    auto e = std::make_shared<AstExpr>();
    e->kind = Kind::Binary;
    e->binary_op = op;
    e->operands = {std::move(lhs), std::move(rhs)};
    e->span = std::move(span);
    return e;
}

AstExprPtr AstExpr::if_then_else(AstExprPtr cond, AstExprPtr then_value, AstExprPtr else_value,
                                 SourceSpan span) {
    auto e = std::make_shared<AstExpr>();
    e->kind = Kind::If;
    e->operands = {std::move(cond), std::move(then_value), std::move(else_value)};
    e->span = std::move(span);
    return e;
}

AstExprPtr AstExpr::call(Name function, std::vector<AstExprPtr> args, SourceSpan span) {
    auto e = std::make_shared<AstExpr>();
    e->kind = Kind::Call;
    e->name = std::move(function);
    e->operands = std::move(args);
    e->span = std::move(span);
    return e;
}

bool same_structure(const AstExpr& a, const AstExpr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case AstExpr::Kind::BoolLit: return a.bool_value == b.bool_value;
        case AstExpr::Kind::IntLit: return a.int_value == b.int_value;
        case AstExpr::Kind::Ref: return a.name == b.name;
        case AstExpr::Kind::Unary:
            if (a.unary_op != b.unary_op) return false;
            break;
        case AstExpr::Kind::Binary:
            if (a.binary_op != b.binary_op) return false;
            break;
        case AstExpr::Kind::If: break;
        case AstExpr::Kind::Call:
            if (!(a.name == b.name)) return false;
            break;
    }
    if (a.operands.size() != b.operands.size()) return false;
    for (std::size_t i = 0; i < a.operands.size(); ++i)
        if (!same_structure(a.operands[i], b.operands[i])) return false;
    return true;
}

bool same_structure(const AstExprPtr& a, const AstExprPtr& b) {
    if (!a || !b) return !a && !b;
    return same_structure(*a, *b);
}

namespace {

AstExprPtr fold(const std::vector<AstExprPtr>& operands, BinaryOp op, bool empty_value) {
    if (operands.empty()) return AstExpr::boolean(empty_value);
    AstExprPtr acc = operands.front();
    for (std::size_t i = 1; i < operands.size(); ++i) acc = AstExpr::binary(op, acc, operands[i]);
    return acc;
}

bool same_exprs(const std::vector<AstExprPtr>& a, const std::vector<AstExprPtr>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!same_structure(a[i], b[i])) return false;
    return true;
}

bool same(const EventDecl& a, const EventDecl& b) {
    return a.controllable == b.controllable && a.names == b.names;
}

bool same(const DiscDecl& a, const DiscDecl& b) {
    return a.type == b.type && a.name == b.name && a.init == b.init && same_structure(a.value, b.value);
}

bool same(const AlgDecl& a, const AlgDecl& b) {
    return a.type == b.type && a.name == b.name && same_structure(a.value, b.value);
}

bool same(const EdgeDecl& a, const EdgeDecl& b) {
    if (a.events != b.events || a.target != b.target || !same_exprs(a.guards, b.guards)) return false;
    if (a.updates.size() != b.updates.size()) return false;
    for (std::size_t i = 0; i < a.updates.size(); ++i)
        if (!(a.updates[i].target == b.updates[i].target) ||
            !same_structure(a.updates[i].value, b.updates[i].value))
            return false;
    return true;
}

bool same(const LocationDecl& a, const LocationDecl& b) {
    if (a.name != b.name || a.initial != b.initial || a.marked != b.marked) return false;
    if (!same_structure(a.initial_predicate, b.initial_predicate)) return false;
    if (!same_structure(a.marked_predicate, b.marked_predicate)) return false;
    if (a.edges.size() != b.edges.size()) return false;
    for (std::size_t i = 0; i < a.edges.size(); ++i)
        if (!same(a.edges[i], b.edges[i])) return false;
    return true;
}

bool same(const ParamDecl& a, const ParamDecl& b);
bool same(const AttributeDecl& a, const AttributeDecl& b);
bool same(const FeatureDecl& a, const FeatureDecl& b);
bool same(const ConstraintDecl& a, const ConstraintDecl& b);
bool same(const ReconfigurationDecl& a, const ReconfigurationDecl& b);
bool same(const SwapDecl& a, const SwapDecl& b);

template <typename T>
bool same_list(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!same(a[i], b[i])) return false;
    return true;
}

bool same(const AutomatonBody& a, const AutomatonBody& b) {
    return same_list(a.events, b.events) && same_list(a.discs, b.discs) && same_list(a.algs, b.algs) &&
           a.monitor == b.monitor && a.monitored == b.monitored && a.alphabet == b.alphabet &&
           same_list(a.locations, b.locations);
}

bool same(const ParamDecl& a, const ParamDecl& b) { return a.type == b.type && a.name == b.name; }

bool same(const AttributeDecl& a, const AttributeDecl& b) {
    return a.type == b.type && a.name == b.name && same_structure(a.value, b.value) &&
           same_structure(a.absent, b.absent);
}

bool same(const FeatureDecl& a, const FeatureDecl& b) {
    return a.name == b.name && same_list(a.attributes, b.attributes);
}

bool same(const ConstraintDecl& a, const ConstraintDecl& b) {
    return a.kind == b.kind && a.parent == b.parent && a.children == b.children;
}

bool same(const ReconfigurationDecl& a, const ReconfigurationDecl& b) {
    return a.mode == b.mode && a.features == b.features;
}

bool same(const SwapDecl& a, const SwapDecl& b) {
    return a.event == b.event && a.controllable == b.controllable && a.features == b.features;
}

bool same(const EnumDecl& a, const EnumDecl& b) { return a.name == b.name && a.literals == b.literals; }

bool same(const AutomatonDef& a, const AutomatonDef& b) {
    return a.kind == b.kind && a.name == b.name && same_list(a.params, b.params) && same(a.body, b.body);
}

bool same(const AutomatonInstance& a, const AutomatonInstance& b) {
    return a.name == b.name && a.definition == b.definition && same_exprs(a.args, b.args);
}

bool same(const AutomatonDecl& a, const AutomatonDecl& b) {
    return a.kind == b.kind && a.name == b.name && same(a.body, b.body);
}

bool same(const InvariantDecl& a, const InvariantDecl& b) {
    return a.kind == b.kind && same_structure(a.predicate, b.predicate);
}

bool same(const EventConditionDecl& a, const EventConditionDecl& b) {
    return a.event == b.event && same_structure(a.condition, b.condition);
}

bool same(const FeatureModelDecl& a, const FeatureModelDecl& b) {
    return same_list(a.features, b.features) && same_list(a.constraints, b.constraints) &&
           same_exprs(a.attribute_constraints, b.attribute_constraints) &&
           same_list(a.reconfiguration, b.reconfiguration) && same_list(a.swaps, b.swaps) &&
           a.strict == b.strict && same_exprs(a.relaxed_invariants, b.relaxed_invariants);
}

}  // namespace

AstExprPtr conjunction(const std::vector<AstExprPtr>& operands) { return fold(operands, BinaryOp::And, true); }
AstExprPtr disjunction(const std::vector<AstExprPtr>& operands) { return fold(operands, BinaryOp::Or, false); }

SourceSpan span_of(const Declaration& decl) {
    return std::visit([](const auto& d) { return d.span; }, decl);
}

void SourceSpec::append(const SourceSpec& other) {
    declarations.insert(declarations.end(), other.declarations.begin(), other.declarations.end());
}

bool same_structure(const SourceSpec& a, const SourceSpec& b) {
    if (a.declarations.size() != b.declarations.size()) return false;
    for (std::size_t i = 0; i < a.declarations.size(); ++i) {
        const auto& x = a.declarations[i];
        const auto& y = b.declarations[i];
        if (x.index() != y.index()) return false;
        bool eq = std::visit(
            [&](const auto& lhs) {
                using T = std::decay_t<decltype(lhs)>;
                return same(lhs, std::get<T>(y));
            },
            x);
        if (!eq) return false;
    }
    return true;
}

}  // namespace fsc::lang
