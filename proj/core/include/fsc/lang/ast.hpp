#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fsc/error.hpp"

namespace fsc::lang {

/// Possibly dotted reference such as `present`, `FS.cost` or `Coffee.NoChoice`.
struct Name {
    std::vector<std::string> parts;
    SourceSpan span;

    std::string str() const;
    bool operator==(const Name& other) const { return parts == other.parts; }
};

enum class UnaryOp { Not, Negate };

enum class BinaryOp {
    Iff,
    Implies,
    Or,
    And,
    Equal,
    NotEqual,
    Less,
    LessEq,
    Greater,
    GreaterEq,
    Add,
    Sub,
    Mul,
};

std::string_view spelling(BinaryOp op);

struct AstExpr;
using AstExprPtr = std::shared_ptr<const AstExpr>;

struct AstExpr {
    enum class Kind { BoolLit, IntLit, Ref, Unary, Binary, If, Call };

    Kind kind = Kind::BoolLit;
    bool bool_value = false;
    std::int64_t int_value = 0;
    Name name;  // Ref target, or Call function name
    UnaryOp unary_op = UnaryOp::Not;
    BinaryOp binary_op = BinaryOp::And;
    /// Unary: 1 operand. Binary: 2. If: condition, then, else. Call: arguments.
    std::vector<AstExprPtr> operands;
    SourceSpan span;

    static AstExprPtr boolean(bool value, SourceSpan span = {});
    static AstExprPtr integer(std::int64_t value, SourceSpan span = {});
    static AstExprPtr ref(Name name);
    static AstExprPtr ref(const std::string& dotted);
    static AstExprPtr unary(UnaryOp op, AstExprPtr operand, SourceSpan span = {});
    static AstExprPtr binary(BinaryOp op, AstExprPtr lhs, AstExprPtr rhs, SourceSpan span = {});
    static AstExprPtr if_then_else(AstExprPtr cond, AstExprPtr then_value, AstExprPtr else_value,
                                   SourceSpan span = {});
    static AstExprPtr call(Name function, std::vector<AstExprPtr> args, SourceSpan span = {});
};

/// Structural equality, ignoring source spans.
bool same_structure(const AstExpr& a, const AstExpr& b);
bool same_structure(const AstExprPtr& a, const AstExprPtr& b);

/// Left-associated conjunction / disjunction of the operands; `true`/`false` when empty.
AstExprPtr conjunction(const std::vector<AstExprPtr>& operands);
AstExprPtr disjunction(const std::vector<AstExprPtr>& operands);

struct TypeRef {
    enum class Kind { Bool, Int, Named };
    Kind kind = Kind::Bool;
    bool has_range = false;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::string name;
    SourceSpan span;

    bool operator==(const TypeRef& o) const {
        return kind == o.kind && has_range == o.has_range && lo == o.lo && hi == o.hi && name == o.name;
    }
};

enum class AutomatonKind { Plant, Requirement, Supervisor };
std::string_view spelling(AutomatonKind kind);

struct EventDecl {
    bool controllable = true;
    std::vector<std::string> names;
    SourceSpan span;
};

struct DiscDecl {
    enum class Init { Default, Value, Any };
    TypeRef type;
    std::string name;
    Init init = Init::Default;
    AstExprPtr value;
    SourceSpan span;
};

struct AlgDecl {
    TypeRef type;
    std::string name;
    AstExprPtr value;
    SourceSpan span;
};

struct UpdateDecl {
    Name target;
    AstExprPtr value;
};

struct EdgeDecl {
    std::vector<Name> events;
    std::vector<AstExprPtr> guards;  // conjunction; empty means `true`
    std::vector<UpdateDecl> updates;
    std::optional<std::string> target;  // absent means self-loop
    SourceSpan span;
};

struct LocationDecl {
    std::optional<std::string> name;
    bool initial = false;
    AstExprPtr initial_predicate;  // nullptr: unconditional
    bool marked = false;
    AstExprPtr marked_predicate;
    std::vector<EdgeDecl> edges;
    SourceSpan span;
};

struct AutomatonBody {
    std::vector<EventDecl> events;
    std::vector<DiscDecl> discs;
    std::vector<AlgDecl> algs;
    bool monitor = false;
    std::vector<Name> monitored;  // empty with monitor=true: every alphabet event
    std::optional<std::vector<Name>> alphabet;
    std::vector<LocationDecl> locations;
};

struct ParamDecl {
    TypeRef type;
    std::string name;
};

struct AutomatonDef {
    AutomatonKind kind = AutomatonKind::Plant;
    std::string name;
    std::vector<ParamDecl> params;
    AutomatonBody body;
    SourceSpan span;
};

struct AutomatonInstance {
    std::string name;
    std::string definition;
    std::vector<AstExprPtr> args;
    SourceSpan span;
};

struct AutomatonDecl {
    AutomatonKind kind = AutomatonKind::Plant;
    std::string name;
    AutomatonBody body;
    SourceSpan span;
};

/// `plant invariant P;`, `requirement invariant P;` or the short form `requirement P;`.
struct InvariantDecl {
    AutomatonKind kind = AutomatonKind::Requirement;
    AstExprPtr predicate;
    SourceSpan span;
};

/// `requirement e needs P;`
struct EventConditionDecl {
    Name event;
    AstExprPtr condition;
    SourceSpan span;
};

struct EnumDecl {
    std::string name;
    std::vector<std::string> literals;
    SourceSpan span;
};

struct AttributeDecl {
    TypeRef type;
    std::string name;
    AstExprPtr value;
    AstExprPtr absent;  // value when the feature is absent; nullptr: 0 for integers
};

struct FeatureDecl {
    std::string name;
    std::vector<AttributeDecl> attributes;
    SourceSpan span;
};

struct ConstraintDecl {
    enum class Kind { Root, Mandatory, Optional, Alternative, Or, Requires, Excludes };
    Kind kind = Kind::Root;
    std::string parent;  // root: the root feature; requires/excludes: first feature
    std::vector<std::string> children;
    SourceSpan span;
};

struct ReconfigurationDecl {
    enum class Mode { Static, Controllable, Uncontrollable };
    Mode mode = Mode::Static;
    std::vector<std::string> features;  // empty: default for all features
    SourceSpan span;
};

struct SwapDecl {
    std::string event;
    bool controllable = false;
    std::vector<std::string> features;
    SourceSpan span;
};

/// Compact `featuremodel ... end` block, lowered by the feature kernel.
struct FeatureModelDecl {
    std::vector<FeatureDecl> features;
    std::vector<ConstraintDecl> constraints;
    std::vector<AstExprPtr> attribute_constraints;  // may contain `sum(attr)` calls
    std::vector<ReconfigurationDecl> reconfiguration;
    std::vector<SwapDecl> swaps;
    bool strict = true;
    std::vector<AstExprPtr> relaxed_invariants;
    SourceSpan span;
};

using Declaration = std::variant<EnumDecl, EventDecl, AlgDecl, AutomatonDef, AutomatonInstance,
                                 AutomatonDecl, InvariantDecl, EventConditionDecl, FeatureModelDecl>;

SourceSpan span_of(const Declaration& decl);

struct SourceSpec {
    std::vector<Declaration> declarations;

    void append(const SourceSpec& other);
};

/// Structural equality of whole specifications, ignoring spans.
bool same_structure(const SourceSpec& a, const SourceSpec& b);

}  // namespace fsc::lang
