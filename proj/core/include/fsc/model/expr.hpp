#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fsc/lang/ast.hpp"

namespace fsc {

using lang::BinaryOp;

struct Type {
    enum class Kind { Bool, Int, Enum };
    Kind kind = Kind::Bool;
    std::int64_t lo = 0;  // Int: inclusive range. Enum: 0..literals-1
    std::int64_t hi = 1;
    int enumeration = -1;  // index into Model::enums

    static Type boolean() { return {Kind::Bool, 0, 1, -1}; }
    static Type integer(std::int64_t lo, std::int64_t hi) { return {Kind::Int, lo, hi, -1}; }
    static Type enum_type(int index, int literal_count) { return {Kind::Enum, 0, literal_count - 1, index}; }

    bool is_bool() const { return kind == Kind::Bool; }
    bool is_int() const { return kind == Kind::Int; }
    bool is_enum() const { return kind == Kind::Enum; }
    std::uint64_t domain_size() const { return static_cast<std::uint64_t>(hi - lo) + 1; }
    bool contains(std::int64_t v) const { return v >= lo && v <= hi; }
    /// Same kind (and same enumeration); ranges may differ.
    bool compatible(const Type& o) const { return kind == o.kind && enumeration == o.enumeration; }
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Resolved, typed expression. Int-typed nodes carry a conservative value range.
struct Expr {
    enum class Kind { Const, Disc, Alg, Loc, Not, Neg, Binary, Ite };

    Kind kind = Kind::Const;
    Type type;
    std::int64_t value = 0;  // Const
    int index = -1;          // Disc/Alg: variable index. Loc: automaton index
    int location = -1;       // Loc
    BinaryOp op = BinaryOp::And;
    std::vector<ExprPtr> args;

    static ExprPtr constant(bool b);
    static ExprPtr constant(std::int64_t v, Type t);
    static ExprPtr disc(int index, Type t);
    static ExprPtr alg(int index, Type t);
    static ExprPtr loc(int automaton, int location);
    static ExprPtr negation(ExprPtr a);  // logical not, folds constants and double negation
    static ExprPtr minus(ExprPtr a);
    static ExprPtr binary(BinaryOp op, ExprPtr a, ExprPtr b);  // computes result type/range
    static ExprPtr ite(ExprPtr c, ExprPtr t, ExprPtr e);

    bool is_true() const { return kind == Kind::Const && type.is_bool() && value == 1; }
    bool is_false() const { return kind == Kind::Const && type.is_bool() && value == 0; }
};

ExprPtr conjunction(const std::vector<ExprPtr>& parts);
ExprPtr disjunction(const std::vector<ExprPtr>& parts);

/// Structural equality.
bool same_expr(const ExprPtr& a, const ExprPtr& b);

}  // namespace fsc
