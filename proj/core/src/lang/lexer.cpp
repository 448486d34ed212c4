#include "fsc/lang/lexer.hpp"

#include <array>
#include <cctype>
#include <limits>
#include <utility>

namespace fsc::lang {

namespace {

constexpr std::array<std::pair<std::string_view, Tok>, 32> kKeywords{{
    {"plant", Tok::KwPlant},
    {"requirement", Tok::KwRequirement},
    {"supervisor", Tok::KwSupervisor},
    {"automaton", Tok::KwAutomaton},
    {"def", Tok::KwDef},
    {"end", Tok::KwEnd},
    {"location", Tok::KwLocation},
    {"edge", Tok::KwEdge},
    {"when", Tok::KwWhen},
    {"do", Tok::KwDo},
    {"goto", Tok::KwGoto},
    {"needs", Tok::KwNeeds},
    {"initial", Tok::KwInitial},
    {"marked", Tok::KwMarked},
    {"monitor", Tok::KwMonitor},
    {"invariant", Tok::KwInvariant},
    {"controllable", Tok::KwControllable},
    {"uncontrollable", Tok::KwUncontrollable},
    {"disc", Tok::KwDisc},
    {"alg", Tok::KwAlg},
    {"enum", Tok::KwEnum},
    {"bool", Tok::KwBool},
    {"int", Tok::KwInt},
    {"true", Tok::KwTrue},
    {"false", Tok::KwFalse},
    {"not", Tok::KwNot},
    {"and", Tok::KwAnd},
    {"or", Tok::KwOr},
    {"in", Tok::KwIn},
    {"any", Tok::KwAny},
    {"if", Tok::KwIf},
    {"else", Tok::KwElse},
}};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
public:
    Lexer(std::string_view src, const std::string& file) : src_(src), file_(file) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_blank();
            if (pos_ >= src_.size()) break;
            out.push_back(next());
        }
        Token end;
        end.kind = Tok::End;
        end.span = span_from(here(), here());
        out.push_back(std::move(end));
        return out;
    }

private:
    SourcePos here() const { return {line_, col_}; }
    SourceSpan span_from(SourcePos b, SourcePos e) const { return {file_, b, e}; }

    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '/' && peek(1) == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    Token make(Tok kind, SourcePos begin, std::string text) {
        Token t;
        t.kind = kind;
        t.text = std::move(text);
        t.span = span_from(begin, here());
        return t;
    }

    Token next() {
        SourcePos begin = here();
        char c = peek();
        if (ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && ident_char(src_[pos_])) advance();
            std::string word(src_.substr(start, pos_ - start));
            auto kw = keyword(word);
            return make(kw ? *kw : Tok::Identifier, begin, std::move(word));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            std::int64_t value = 0;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                int digit = src_[pos_] - '0';
                if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10)
                    throw LexError(span_from(begin, here()), "integer literal too large");
                value = value * 10 + digit;
                advance();
            }
            Token t = make(Tok::Integer, begin, std::string(src_.substr(start, pos_ - start)));
            t.value = value;
            return t;
        }

        auto op = [&](Tok kind, int length) {
            std::string text(src_.substr(pos_, length));
            for (int i = 0; i < length; ++i) advance();
            return make(kind, begin, std::move(text));
        };
        switch (c) {
            case '<':
                if (peek(1) == '=' && peek(2) == '>') return op(Tok::Iff, 3);
                if (peek(1) == '=') return op(Tok::LessEq, 2);
                return op(Tok::Less, 1);
            case '>':
                if (peek(1) == '=') return op(Tok::GreaterEq, 2);
                return op(Tok::Greater, 1);
            case '=':
                if (peek(1) == '>') return op(Tok::Implies, 2);
                return op(Tok::Equal, 1);
            case '!':
                if (peek(1) == '=') return op(Tok::NotEqual, 2);
                break;
            case ':':
                if (peek(1) == '=') return op(Tok::Assign, 2);
                return op(Tok::Colon, 1);
            case '.':
                if (peek(1) == '.') return op(Tok::DotDot, 2);
                return op(Tok::Dot, 1);
            case '+': return op(Tok::Plus, 1);
            case '-': return op(Tok::Minus, 1);
            case '*': return op(Tok::Star, 1);
            case ';': return op(Tok::Semicolon, 1);
            case ',': return op(Tok::Comma, 1);
            case '(': return op(Tok::LParen, 1);
            case ')': return op(Tok::RParen, 1);
            case '[': return op(Tok::LBracket, 1);
            case ']': return op(Tok::RBracket, 1);
            default: break;
        }
        std::string shown = std::isprint(static_cast<unsigned char>(c))
                                ? std::string(1, c)
                                : "\\x" + std::to_string(static_cast<unsigned char>(c));
        throw LexError(span_from(begin, begin), "illegal character '" + shown + "'");
    }

    std::string_view src_;
    const std::string& file_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

std::optional<Tok> keyword(std::string_view word) {
    for (const auto& [text, kind] : kKeywords)
        if (text == word) return kind;
    return std::nullopt;
}

std::string_view spelling(Tok kind) {
    for (const auto& [text, k] : kKeywords)
        if (k == kind) return text;
    switch (kind) {
        case Tok::End: return "end of input";
        case Tok::Identifier: return "identifier";
        case Tok::Integer: return "integer";
        case Tok::Implies: return "=>";
        case Tok::Iff: return "<=>";
        case Tok::Equal: return "=";
        case Tok::NotEqual: return "!=";
        case Tok::Less: return "<";
        case Tok::LessEq: return "<=";
        case Tok::Greater: return ">";
        case Tok::GreaterEq: return ">=";
        case Tok::Plus: return "+";
        case Tok::Minus: return "-";
        case Tok::Star: return "*";
        case Tok::Assign: return ":=";
        case Tok::Colon: return ":";
        case Tok::Semicolon: return ";";
        case Tok::Comma: return ",";
        case Tok::Dot: return ".";
        case Tok::LParen: return "(";
        case Tok::RParen: return ")";
        case Tok::LBracket: return "[";
        case Tok::RBracket: return "]";
        case Tok::DotDot: return "..";
        default: return "?";
    }
}

std::string Token::describe() const {
    if (kind == Tok::Identifier) return "id:" + text;
    if (kind == Tok::Integer) return "lit:" + text;
    if (is_keyword()) return "kw:" + text;
    return std::string(spelling(kind));
}

std::vector<Token> tokenize(std::string_view source, const std::string& file) {
    return Lexer(source, file).run();
}

}  // namespace fsc::lang
