#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fsc/error.hpp"

namespace fsc::lang {

enum class Tok : std::uint8_t {
    End,
    Identifier,
    Integer,

    // keywords
    KwPlant,
    KwRequirement,
    KwSupervisor,
    KwAutomaton,
    KwDef,
    KwEnd,
    KwLocation,
    KwEdge,
    KwWhen,
    KwDo,
    KwGoto,
    KwNeeds,
    KwInitial,
    KwMarked,
    KwMonitor,
    KwInvariant,
    KwControllable,
    KwUncontrollable,
    KwDisc,
    KwAlg,
    KwEnum,
    KwBool,
    KwInt,
    KwTrue,
    KwFalse,
    KwNot,
    KwAnd,
    KwOr,
    KwIn,
    KwAny,
    KwIf,
    KwElse,

    // operators and punctuation
    Implies,     // =>
    Iff,         // <=>
    Equal,       // =
    NotEqual,    // !=
    Less,        // <
    LessEq,      // <=
    Greater,     // >
    GreaterEq,   // >=
    Plus,        // +
    Minus,       // -
    Star,        // *
    Assign,      // :=
    Colon,       // :
    Semicolon,   // ;
    Comma,       // ,
    Dot,         // .
    LParen,      // (
    RParen,      // )
    LBracket,    // [
    RBracket,    // ]
    DotDot,      // ..
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::int64_t value = 0;
    SourceSpan span;

    bool is(Tok k) const noexcept { return kind == k; }
    bool is_keyword() const noexcept { return kind >= Tok::KwPlant && kind <= Tok::KwElse; }

    /// Compact rendering used in diagnostics and tests: `kw:alg`, `id:r2`, `lit:0`, `<=>`.
    std::string describe() const;
};

std::string_view spelling(Tok kind);
std::optional<Tok> keyword(std::string_view word);

}  // namespace fsc::lang
