#include "fsc/lang/parser.hpp"

#include <algorithm>
#include <array>

#include "fsc/lang/lexer.hpp"

namespace fsc::lang {

namespace {

// CIF constructs outside the supported subset; reported as such instead of a bare syntax error.
constexpr std::array<std::string_view, 22> kUnsupported{
    "cont", "input", "func", "const", "group", "import", "event", "urgent", "der", "equation",
    "svgfile", "svgout", "svgin", "tau", "elif", "switch", "real", "string", "list", "tuple",
    "dict", "print"};

bool is_unsupported(const Token& t) {
    return t.is(Tok::Identifier) &&
           std::find(kUnsupported.begin(), kUnsupported.end(), t.text) != kUnsupported.end();
}

SourceSpan join(const SourceSpan& a, const SourceSpan& b) { return {a.file, a.begin, b.end}; }

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

    SourceSpec spec() {
        SourceSpec out;
        while (!at(Tok::End)) declaration(out);
        return out;
    }

    AstExprPtr standalone_expression() {
        auto e = expression();
        expect(Tok::End);
        return e;
    }

private:
    // --- token helpers -----------------------------------------------------

    const Token& cur() const { return toks_[pos_]; }
    const Token& ahead(std::size_t n) const {
        return toks_[std::min(pos_ + n, toks_.size() - 1)];
    }
    bool at(Tok k) const { return cur().is(k); }
    bool at_word(std::string_view w) const { return at(Tok::Identifier) && cur().text == w; }

    const Token& take() {
        const Token& t = toks_[pos_];
        if (!t.is(Tok::End)) ++pos_;
        return t;
    }

    bool accept(Tok k) {
        if (!at(k)) return false;
        take();
        return true;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& t = cur();
        if (is_unsupported(t)) throw SyntaxError(t.span, "unsupported construct '" + t.text + "'", {});
        std::string found = t.is(Tok::End) ? "end of input" : "'" + t.text + "'";
        throw SyntaxError(t.span, "unexpected " + found, std::move(expected));
    }

    const Token& expect(Tok k) {
        if (!at(k)) fail({std::string(spelling(k))});
        return take();
    }

    std::string identifier() { return expect(Tok::Identifier).text; }

    void expect_word(std::string_view w) {
        if (!at_word(w)) fail({std::string(w)});
        take();
    }

    std::vector<std::string> identifier_list() {
        std::vector<std::string> out{identifier()};
        while (accept(Tok::Comma)) out.push_back(identifier());
        return out;
    }

    Name name() {
        Name n;
        const Token& first = expect(Tok::Identifier);
        n.parts.push_back(first.text);
        SourceSpan last = first.span;
        while (at(Tok::Dot)) {
            take();
            const Token& part = expect(Tok::Identifier);
            n.parts.push_back(part.text);
            last = part.span;
        }
        n.span = join(first.span, last);
        return n;
    }

    std::vector<Name> name_list() {
        std::vector<Name> out{name()};
        while (accept(Tok::Comma)) out.push_back(name());
        return out;
    }

    // --- declarations ------------------------------------------------------

    void declaration(SourceSpec& out) {
        const Token& t = cur();
        switch (t.kind) {
            case Tok::KwEnum: out.declarations.emplace_back(enum_decl()); return;
            case Tok::KwControllable:
            case Tok::KwUncontrollable: out.declarations.emplace_back(event_decl()); return;
            case Tok::KwAlg: out.declarations.emplace_back(alg_decl()); return;
            case Tok::KwPlant:
            case Tok::KwRequirement:
            case Tok::KwSupervisor: kinded_declaration(out); return;
            case Tok::KwDisc:
                throw SyntaxError(t.span, "unsupported construct 'disc' outside an automaton", {});
            case Tok::Identifier:
                if (t.text == "featuremodel") {
                    out.declarations.emplace_back(feature_model());
                    return;
                }
                if (ahead(1).is(Tok::Colon)) {
                    out.declarations.emplace_back(instance());
                    return;
                }
                break;
            default: break;
        }
        fail({"declaration"});
    }

    EnumDecl enum_decl() {
        EnumDecl d;
        SourceSpan begin = take().span;
        d.name = identifier();
        expect(Tok::Equal);
        d.literals = identifier_list();
        d.span = join(begin, expect(Tok::Semicolon).span);
        return d;
    }

    EventDecl event_decl() {
        EventDecl d;
        const Token& kw = take();
        d.controllable = kw.is(Tok::KwControllable);
        d.names = identifier_list();
        d.span = join(kw.span, expect(Tok::Semicolon).span);
        return d;
    }

    TypeRef type() {
        TypeRef t;
        t.span = cur().span;
        if (accept(Tok::KwBool)) {
            t.kind = TypeRef::Kind::Bool;
        } else if (accept(Tok::KwInt)) {
            t.kind = TypeRef::Kind::Int;
            if (accept(Tok::LBracket)) {
                t.has_range = true;
                t.lo = signed_integer();
                expect(Tok::DotDot);
                t.hi = signed_integer();
                expect(Tok::RBracket);
                if (t.lo > t.hi) throw SyntaxError(t.span, "empty integer range", {});
            }
        } else if (at(Tok::Identifier) && !is_unsupported(cur())) {
            t.kind = TypeRef::Kind::Named;
            t.name = take().text;
        } else {
            fail({"bool", "int", "enumeration name"});
        }
        return t;
    }

    std::int64_t signed_integer() {
        bool negative = accept(Tok::Minus);
        std::int64_t v = expect(Tok::Integer).value;
        return negative ? -v : v;
    }

    AlgDecl alg_decl() {
        AlgDecl d;
        SourceSpan begin = take().span;
        d.type = type();
        d.name = identifier();
        expect(Tok::Equal);
        d.value = expression();
        d.span = join(begin, expect(Tok::Semicolon).span);
        return d;
    }

    DiscDecl disc_decl() {
        DiscDecl d;
        SourceSpan begin = take().span;
        d.type = type();
        d.name = identifier();
        if (accept(Tok::Equal)) {
            d.init = DiscDecl::Init::Value;
            d.value = expression();
        } else if (accept(Tok::KwIn)) {
            expect(Tok::KwAny);
            d.init = DiscDecl::Init::Any;
        }
        d.span = join(begin, expect(Tok::Semicolon).span);
        return d;
    }

    void kinded_declaration(SourceSpec& out) {
        const Token& kw = take();
        AutomatonKind kind = kw.is(Tok::KwPlant)         ? AutomatonKind::Plant
                             : kw.is(Tok::KwRequirement) ? AutomatonKind::Requirement
                                                         : AutomatonKind::Supervisor;
        if (at(Tok::KwDef)) {
            out.declarations.emplace_back(automaton_def(kind, kw.span));
            return;
        }
        if (at(Tok::KwInvariant)) {
            if (kind == AutomatonKind::Supervisor)
                throw SyntaxError(cur().span, "unsupported construct 'supervisor invariant'", {});
            take();
            InvariantDecl d;
            d.kind = kind;
            d.predicate = expression();
            d.span = join(kw.span, expect(Tok::Semicolon).span);
            out.declarations.emplace_back(std::move(d));
            return;
        }
        if (accept(Tok::KwAutomaton) || (at(Tok::Identifier) && ahead(1).is(Tok::Colon))) {
            out.declarations.emplace_back(automaton_decl(kind, kw.span));
            return;
        }
        if (kind != AutomatonKind::Requirement) fail({"automaton", "def", "invariant"});

        // requirement <predicate>;  or  requirement <event> needs <predicate>;
        AstExprPtr first = expression();
        if (accept(Tok::KwNeeds)) {
            if (first->kind != AstExpr::Kind::Ref)
                throw SyntaxError(first->span, "event name expected before 'needs'", {});
            EventConditionDecl d;
            d.event = first->name;
            d.condition = expression();
            d.span = join(kw.span, expect(Tok::Semicolon).span);
            out.declarations.emplace_back(std::move(d));
            return;
        }
        InvariantDecl d;
        d.kind = AutomatonKind::Requirement;
        d.predicate = first;
        d.span = join(kw.span, expect(Tok::Semicolon).span);
        out.declarations.emplace_back(std::move(d));
    }

    AutomatonDef automaton_def(AutomatonKind kind, SourceSpan begin) {
        expect(Tok::KwDef);
        AutomatonDef d;
        d.kind = kind;
        d.name = identifier();
        expect(Tok::LParen);
        if (!at(Tok::RParen)) {
            do {
                if (!at(Tok::KwAlg)) fail({"alg"});
                take();
                ParamDecl p;
                p.type = type();
                p.name = identifier();
                d.params.push_back(std::move(p));
            } while (accept(Tok::Comma) || accept(Tok::Semicolon));
        }
        expect(Tok::RParen);
        expect(Tok::Colon);
        d.body = body();
        d.span = join(begin, expect(Tok::KwEnd).span);
        return d;
    }

    AutomatonDecl automaton_decl(AutomatonKind kind, SourceSpan begin) {
        AutomatonDecl d;
        d.kind = kind;
        d.name = identifier();
        expect(Tok::Colon);
        d.body = body();
        d.span = join(begin, expect(Tok::KwEnd).span);
        return d;
    }

    AutomatonInstance instance() {
        AutomatonInstance d;
        const Token& first = cur();
        d.name = identifier();
        expect(Tok::Colon);
        d.definition = identifier();
        expect(Tok::LParen);
        if (!at(Tok::RParen)) {
            d.args.push_back(expression());
            while (accept(Tok::Comma)) d.args.push_back(expression());
        }
        expect(Tok::RParen);
        d.span = join(first.span, expect(Tok::Semicolon).span);
        return d;
    }

    AutomatonBody body() {
        AutomatonBody b;
        for (;;) {
            switch (cur().kind) {
                case Tok::KwControllable:
                case Tok::KwUncontrollable: b.events.push_back(event_decl()); continue;
                case Tok::KwDisc: b.discs.push_back(disc_decl()); continue;
                case Tok::KwAlg: b.algs.push_back(alg_decl()); continue;
                case Tok::KwMonitor:
                    take();
                    b.monitor = true;
                    if (!at(Tok::Semicolon)) {
                        auto names = name_list();
                        b.monitored.insert(b.monitored.end(), names.begin(), names.end());
                    }
                    expect(Tok::Semicolon);
                    continue;
                case Tok::KwLocation: b.locations.push_back(location()); continue;
                case Tok::Identifier:
                    if (cur().text == "alphabet") {
                        take();
                        std::vector<Name> names;
                        if (!at(Tok::Semicolon)) names = name_list();
                        expect(Tok::Semicolon);
                        if (!b.alphabet) b.alphabet.emplace();
                        b.alphabet->insert(b.alphabet->end(), names.begin(), names.end());
                        continue;
                    }
                    break;
                default: break;
            }
            if (at(Tok::KwEnd)) return b;
            fail({"location", "disc", "alg", "controllable", "uncontrollable", "monitor", "alphabet", "end"});
        }
    }

    LocationDecl location() {
        LocationDecl loc;
        SourceSpan begin = take().span;
        if (at(Tok::Identifier)) loc.name = take().text;
        loc.span = join(begin, cur().span);
        if (accept(Tok::Semicolon)) return loc;
        expect(Tok::Colon);
        for (;;) {
            if (at(Tok::KwInitial)) {
                take();
                loc.initial = true;
                if (!at(Tok::Semicolon)) loc.initial_predicate = expression();
                expect(Tok::Semicolon);
            } else if (at(Tok::KwMarked)) {
                take();
                loc.marked = true;
                if (!at(Tok::Semicolon)) loc.marked_predicate = expression();
                expect(Tok::Semicolon);
            } else if (at(Tok::KwEdge)) {
                loc.edges.push_back(edge());
            } else {
                return loc;
            }
        }
    }

    EdgeDecl edge() {
        EdgeDecl e;
        SourceSpan begin = take().span;
        e.events = name_list();
        if (accept(Tok::KwWhen)) {
            e.guards.push_back(expression());
            while (accept(Tok::Comma)) e.guards.push_back(expression());
        }
        if (accept(Tok::KwDo)) {
            do {
                UpdateDecl u;
                u.target = name();
                expect(Tok::Assign);
                u.value = expression();
                e.updates.push_back(std::move(u));
            } while (accept(Tok::Comma));
        }
        if (accept(Tok::KwGoto)) e.target = identifier();
        if (!at(Tok::Semicolon)) {
            std::vector<std::string> expected{";"};
            if (e.guards.empty() && e.updates.empty() && !e.target) expected = {"when", "do", "goto", ";"};
            fail(expected);
        }
        e.span = join(begin, take().span);
        return e;
    }

    // --- feature model block -----------------------------------------------

    FeatureModelDecl feature_model() {
        FeatureModelDecl fm;
        SourceSpan begin = take().span;
        if (at(Tok::Identifier)) take();  // optional model name, informational only
        expect(Tok::Colon);
        while (!at(Tok::KwEnd)) {
            const Token& t = cur();
            SourceSpan item = t.span;
            if (at_word("feature")) {
                take();
                FeatureDecl f;
                f.span = cur().span;
                f.name = identifier();
                if (accept(Tok::LParen)) {
                    do {
                        AttributeDecl a;
                        a.type = type();
                        a.name = identifier();
                        expect(Tok::Equal);
                        a.value = expression();
                        if (accept(Tok::KwElse)) a.absent = expression();
                        f.attributes.push_back(std::move(a));
                    } while (accept(Tok::Comma));
                    expect(Tok::RParen);
                }
                expect(Tok::Semicolon);
                fm.features.push_back(std::move(f));
            } else if (at_word("root")) {
                take();
                ConstraintDecl c;
                c.kind = ConstraintDecl::Kind::Root;
                c.parent = identifier();
                c.span = join(item, expect(Tok::Semicolon).span);
                fm.constraints.push_back(std::move(c));
            } else if (at_word("mandatory") || at_word("optional") || at_word("alternative") ||
                       at(Tok::KwOr) || at_word("requires") || at_word("excludes")) {
                ConstraintDecl c;
                std::string word = take().text;
                c.kind = word == "mandatory"     ? ConstraintDecl::Kind::Mandatory
                         : word == "optional"    ? ConstraintDecl::Kind::Optional
                         : word == "alternative" ? ConstraintDecl::Kind::Alternative
                         : word == "or"          ? ConstraintDecl::Kind::Or
                         : word == "requires"    ? ConstraintDecl::Kind::Requires
                                                 : ConstraintDecl::Kind::Excludes;
                c.parent = identifier();
                expect(Tok::Colon);
                c.children = identifier_list();
                c.span = join(item, expect(Tok::Semicolon).span);
                fm.constraints.push_back(std::move(c));
            } else if (at_word("constraint")) {
                take();
                calls_allowed_ = true;
                fm.attribute_constraints.push_back(expression());
                calls_allowed_ = false;
                expect(Tok::Semicolon);
            } else if (at_word("reconfiguration")) {
                take();
                ReconfigurationDecl r;
                if (at_word("static")) {
                    take();
                    r.mode = ReconfigurationDecl::Mode::Static;
                } else if (accept(Tok::KwControllable)) {
                    r.mode = ReconfigurationDecl::Mode::Controllable;
                } else if (accept(Tok::KwUncontrollable)) {
                    r.mode = ReconfigurationDecl::Mode::Uncontrollable;
                } else {
                    fail({"static", "controllable", "uncontrollable"});
                }
                if (accept(Tok::Colon)) r.features = identifier_list();
                r.span = join(item, expect(Tok::Semicolon).span);
                fm.reconfiguration.push_back(std::move(r));
            } else if (at_word("swap")) {
                take();
                SwapDecl s;
                if (accept(Tok::KwControllable)) s.controllable = true;
                else accept(Tok::KwUncontrollable);
                s.event = identifier();
                expect(Tok::Colon);
                s.features = identifier_list();
                s.span = join(item, expect(Tok::Semicolon).span);
                fm.swaps.push_back(std::move(s));
            } else if (at_word("strict")) {
                take();
                fm.strict = true;
                expect(Tok::Semicolon);
            } else if (at_word("relaxed")) {
                take();
                fm.strict = false;
                if (accept(Tok::Colon)) {
                    fm.relaxed_invariants.push_back(expression());
                    while (accept(Tok::Comma)) fm.relaxed_invariants.push_back(expression());
                }
                expect(Tok::Semicolon);
            } else {
                fail({"feature", "root", "mandatory", "optional", "alternative", "or", "requires", "excludes",
                      "constraint", "reconfiguration", "swap", "strict", "relaxed", "end"});
            }
        }
        fm.span = join(begin, take().span);
        return fm;
    }

    // --- expressions ---------------------------------------------------------
    // Precedence, loosest first: <=>, =>, or, and, comparisons, + -, *, unary not/-.

    AstExprPtr expression() { return iff(); }

    AstExprPtr iff() {
        auto lhs = implies();
        while (at(Tok::Iff)) {
            take();
            auto rhs = implies();
            lhs = AstExpr::binary(BinaryOp::Iff, lhs, rhs, join(lhs->span, rhs->span));
        }
        return lhs;
    }

    AstExprPtr implies() {
        auto lhs = disjunction_expr();
        if (at(Tok::Implies)) {
            take();
            auto rhs = implies();  // right associative
            return AstExpr::binary(BinaryOp::Implies, lhs, rhs, join(lhs->span, rhs->span));
        }
        return lhs;
    }

    AstExprPtr disjunction_expr() {
        auto lhs = conjunction_expr();
        while (at(Tok::KwOr)) {
            take();
            auto rhs = conjunction_expr();
            lhs = AstExpr::binary(BinaryOp::Or, lhs, rhs, join(lhs->span, rhs->span));
        }
        return lhs;
    }

    AstExprPtr conjunction_expr() {
        auto lhs = comparison();
        while (at(Tok::KwAnd)) {
            take();
            auto rhs = comparison();
            lhs = AstExpr::binary(BinaryOp::And, lhs, rhs, join(lhs->span, rhs->span));
        }
        return lhs;
    }

    AstExprPtr comparison() {
        auto lhs = additive();
        BinaryOp op;
        switch (cur().kind) {
            case Tok::Equal: op = BinaryOp::Equal; break;
            case Tok::NotEqual: op = BinaryOp::NotEqual; break;
            case Tok::Less: op = BinaryOp::Less; break;
            case Tok::LessEq: op = BinaryOp::LessEq; break;
            case Tok::Greater: op = BinaryOp::Greater; break;
            case Tok::GreaterEq: op = BinaryOp::GreaterEq; break;
            default: return lhs;
        }
        take();
        auto rhs = additive();
        return AstExpr::binary(op, lhs, rhs, join(lhs->span, rhs->span));
    }

    AstExprPtr additive() {
        auto lhs = multiplicative();
        while (at(Tok::Plus) || at(Tok::Minus)) {
            BinaryOp op = take().is(Tok::Plus) ? BinaryOp::Add : BinaryOp::Sub;
            auto rhs = multiplicative();
            lhs = AstExpr::binary(op, lhs, rhs, join(lhs->span, rhs->span));
        }
        return lhs;
    }

    AstExprPtr multiplicative() {
        auto lhs = unary();
        while (at(Tok::Star)) {
            take();
            auto rhs = unary();
            lhs = AstExpr::binary(BinaryOp::Mul, lhs, rhs, join(lhs->span, rhs->span));
        }
        return lhs;
    }

    AstExprPtr unary() {
        if (at(Tok::KwNot) || at(Tok::Minus)) {
            const Token& op = take();
            auto operand = unary();
            return AstExpr::unary(op.is(Tok::KwNot) ? UnaryOp::Not : UnaryOp::Negate, operand,
                                  join(op.span, operand->span));
        }
        return primary();
    }

    AstExprPtr primary() {
        const Token& t = cur();
        switch (t.kind) {
            case Tok::Integer: take(); return AstExpr::integer(t.value, t.span);
            case Tok::KwTrue: take(); return AstExpr::boolean(true, t.span);
            case Tok::KwFalse: take(); return AstExpr::boolean(false, t.span);
            case Tok::LParen: {
                take();
                auto inner = expression();
                expect(Tok::RParen);
                return inner;
            }
            case Tok::KwIf: {
                take();
                auto cond = expression();
                expect(Tok::Colon);
                auto then_value = expression();
                if (at_word("elif")) fail({});
                expect(Tok::KwElse);
                auto else_value = expression();
                SourceSpan end = expect(Tok::KwEnd).span;
                return AstExpr::if_then_else(cond, then_value, else_value, join(t.span, end));
            }
            case Tok::Identifier: {
                if (is_unsupported(t)) fail({});
                Name n = name();
                if (calls_allowed_ && at(Tok::LParen)) {
                    take();
                    std::vector<AstExprPtr> args;
                    if (!at(Tok::RParen)) {
                        args.push_back(expression());
                        while (accept(Tok::Comma)) args.push_back(expression());
                    }
                    SourceSpan end = expect(Tok::RParen).span;
                    SourceSpan whole = join(n.span, end);
                    return AstExpr::call(std::move(n), std::move(args), whole);
                }
                return AstExpr::ref(std::move(n));
            }
            default: break;
        }
        fail({"expression"});
    }

    const std::vector<Token>& toks_;
    std::size_t pos_ = 0;
    bool calls_allowed_ = false;
};

}  // namespace

SourceSpec parse(const std::vector<Token>& tokens) {
    if (tokens.empty() || !tokens.back().is(Tok::End))
        throw SyntaxError({}, "token sequence must end with an end-of-input token", {});
    return Parser(tokens).spec();
}

SourceSpec parse_source(std::string_view source, const std::string& file) {
    return parse(tokenize(source, file));
}

AstExprPtr parse_expression(std::string_view source) {
    auto tokens = tokenize(source, "<expression>");
    return Parser(tokens).standalone_expression();
}

}  // namespace fsc::lang
