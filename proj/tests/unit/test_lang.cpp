#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fsc/error.hpp"
#include "fsc/lang/lexer.hpp"
#include "fsc/lang/parser.hpp"
#include "fsc/lang/printer.hpp"
#include "fsc/pipeline.hpp"
#include "paths.hpp"
#include "random_model.hpp"

using namespace fsc;
using namespace fsc::lang;

namespace {

std::vector<std::string> described(std::string_view text) {
    std::vector<std::string> out;
    for (const auto& t : tokenize(text))
        if (!t.is(Tok::End)) out.push_back(t.describe());
    return out;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

const char* kExampleAutomaton = R"(plant automaton ExampleAutomaton:
controllable start, process;
uncontrollable finish;
disc int c = 0;
  location Idle: initial; marked;
    edge start goto Busy;
  location Busy:
    edge process when c<5 do c:=c+1;
    edge finish when c>4 do c:=0 goto Idle;
end
)";

}  // namespace

TEST_SUITE("lexer") {
    TEST_CASE("algebraic declaration") {
        auto t = described("alg bool r2 = F1.present <=> F2.present;");
        std::vector<std::string> want{"kw:alg", "kw:bool", "id:r2", "=", "id:F1", ".", "id:present", "<=>", "id:F2", ".", "id:present", ";"};
        CHECK(t == want);
    }

    TEST_CASE("empty input has only the end token") {
        auto t = tokenize("");
        REQUIRE(t.size() == 1);
        CHECK(t[0].is(Tok::End));
        CHECK(described("   // just a comment\n").empty());
    }

    TEST_CASE("discrete declaration") {
        std::vector<std::string> want{"kw:disc", "kw:int", "id:c", "=", "lit:0", ";"};
        CHECK(described("disc int c = 0;") == want);
    }

    TEST_CASE("operators and ranges") {
        std::vector<std::string> want{"=>", "<=>", "!=", "<=", ">=", ":=", "[", "lit:0", "..", "lit:3", "]"};
        CHECK(described("=> <=> != <= >= := [0..3]") == want);
    }

    TEST_CASE("every keyword is recognised") {
        for (const char* kw : {"plant", "requirement", "supervisor", "automaton", "def", "end", "location", "edge", "when", "do",
                               "goto", "needs", "initial", "marked", "monitor", "invariant", "controllable", "uncontrollable",
                               "disc", "alg", "enum", "bool", "int", "true", "false", "not", "and", "or", "in", "any", "if",
                               "else"}) {
            auto t = tokenize(kw);
            CHECK_MESSAGE(t[0].is_keyword(), kw);
        }
        CHECK_FALSE(tokenize("present")[0].is_keyword());
    }

    TEST_CASE("spans and comments") {
        auto t = tokenize("a // b c\n  d");
        REQUIRE(t.size() == 3);
        CHECK(t[1].text == "d");
        CHECK(t[1].span.begin.line == 2);
        CHECK(t[1].span.begin.column == 3);
    }

    TEST_CASE("illegal character reports line and column") {
        try {
            tokenize("edge a;\n  x $ y", "f.fsc");
            FAIL("expected a lexical error");
        } catch (const LexError& e) {
            CHECK(e.diagnostic().span.begin.line == 2);
            CHECK(e.diagnostic().span.begin.column == 5);
            CHECK(e.diagnostic().to_string().find("f.fsc:2:5") != std::string::npos);
        }
    }
}

TEST_SUITE("parser") {
    TEST_CASE("example automaton") {
        auto spec = parse_source(kExampleAutomaton);
        REQUIRE(spec.declarations.size() == 1);
        const auto& a = std::get<AutomatonDecl>(spec.declarations[0]);
        CHECK(a.name == "ExampleAutomaton");
        CHECK(a.kind == AutomatonKind::Plant);
        CHECK(a.body.locations.size() == 2);
        std::size_t events = 0;
        for (const auto& e : a.body.events) events += e.names.size();
        CHECK(events == 3);
        CHECK(a.body.discs.size() == 1);
        CHECK(a.body.locations[1].edges.size() == 2);
        CHECK_FALSE(a.body.locations[1].edges[0].target.has_value());
        CHECK(*a.body.locations[1].edges[1].target == "Idle");
    }

    TEST_CASE("instance without arguments") {
        auto spec = parse_source("F1: FEATURE();");
        const auto& i = std::get<AutomatonInstance>(spec.declarations.at(0));
        CHECK(i.name == "F1");
        CHECK(i.definition == "FEATURE");
        CHECK(i.args.empty());
    }

    TEST_CASE("plant invariant keeps the conjunction") {
        auto spec = parse_source("plant invariant sys_valid and cost_valid;");
        const auto& inv = std::get<InvariantDecl>(spec.declarations.at(0));
        CHECK(inv.kind == AutomatonKind::Plant);
        CHECK(inv.predicate->kind == AstExpr::Kind::Binary);
        CHECK(inv.predicate->binary_op == BinaryOp::And);
        CHECK(to_string(inv.predicate) == "sys_valid and cost_valid");
    }

    TEST_CASE("several events on one edge") {
        auto spec = parse_source("plant automaton A: controllable a, b; location: initial; edge a, b; end");
        const auto& a = std::get<AutomatonDecl>(spec.declarations.at(0));
        CHECK(a.body.locations[0].edges[0].events.size() == 2);
    }

    TEST_CASE("precedence: not over and over or over implies over iff") {
        CHECK(to_string(parse_expression("a or b and not c => d <=> e")) == to_string(parse_expression("((a or (b and not(c))) => d) <=> e")));
    }

    TEST_CASE("syntax errors carry the expected tokens") {
        try {
            parse_source("plant automaton A: location: edge ; end");
            FAIL("expected a syntax error");
        } catch (const SyntaxError& e) {
            CHECK_FALSE(e.expected().empty());
        }
        CHECK_THROWS_AS(parse_source("plant invariant true; )"), SyntaxError);
        CHECK_THROWS_AS(parse_source("plant automaton A: location: initial;"), SyntaxError);
    }

    TEST_CASE("round trip over the model corpus") {
        int files = 0;
        for (const auto& entry : std::filesystem::recursive_directory_iterator(FSC_MODELS_DIR)) {
            if (entry.path().extension() != ".fsc") continue;
            ++files;
            CAPTURE(entry.path().string());
            std::string once = print(parse_source(slurp(entry.path())));
            std::string twice = print(parse_source(once));
            CHECK(once == twice);
        }
        CHECK(files >= 20);
    }

    TEST_CASE("round trip over generated models") {
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            std::string once = print(parse_source(testing::random_model(seed)));
            CHECK(print(parse_source(once)) == once);
        }
    }

    TEST_CASE("lowered feature models print and reparse") {
        for (const char* f : {"coffee/fm_static.fsc", "coffee/fm_dynamic.fsc", "coffee/fm_relaxed.fsc", "bcs/fm_dynamic.fsc"}) {
            CAPTURE(f);
            auto lm = load({testing::model_path(f)});
            std::string once = print(lm.lowered);
            CHECK(print(parse_source(once)) == once);
        }
    }
}
