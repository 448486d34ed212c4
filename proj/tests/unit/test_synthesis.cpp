#include <algorithm>

#include "coffee.hpp"
#include "doctest.h"
#include "fsc/error.hpp"
#include "fsc/synth/synthesis.hpp"
#include "fsc/synth/verify.hpp"

using namespace fsc;
using namespace fsc::synth;

namespace {

SynthesisResult run(const Model& m, Engine engine) {
    SynthesisOptions o;
    o.engine = engine;
    return synthesize(m, o);
}

}  // namespace

TEST_SUITE("synthesis") {
    TEST_CASE("requirement classification") {
        auto lm = load(testing::coffee_full());
        auto p = normalize(lm.model);
        CHECK_FALSE(p.plants.empty());
        CHECK_FALSE(p.requirements.empty());
        CHECK(p.supervisors.empty());
        CHECK_FALSE(p.state_requirements.empty());
        CHECK_FALSE(p.guard_conditions.empty());
        CHECK(p.plant_invariants.size() == 1);
        for (int c : p.guard_conditions) CHECK(lm.model.events[lm.model.conditions[c].event].controllable);
        for (int c : p.bad_state_conditions) CHECK_FALSE(lm.model.events[lm.model.conditions[c].event].controllable);
    }

    TEST_CASE("nondeterministic requirement automaton is rejected") {
        auto lm = load_text(R"(plant automaton P: controllable a; location: initial; marked; edge a; end
requirement automaton R: location X: initial; marked; edge P.a goto Y; edge P.a; location Y: edge P.a goto X; end)");
        CHECK_THROWS_AS(normalize(lm.model), ResolveError);
    }

    TEST_CASE("coffee machine, both engines") {
        auto lm = load(testing::coffee_full());
        auto sym = run(lm.model, Engine::Symbolic);
        auto exp = run(lm.model, Engine::Explicit);
        CHECK(sym.report.controlled_states == 6240);
        CHECK(sym.report.controlled_transitions == 35336);
        CHECK(exp.report.controlled_states == 6240);
        CHECK(exp.report.controlled_transitions == 35336);
        CHECK_FALSE(sym.report.empty);
        CHECK(sym.report.seconds < 10);
        CHECK(supervisor_text(lm.model, sym.supervisor) == supervisor_text(lm.model, exp.supervisor));
        for (const auto& g : sym.supervisor.guards) {
            CAPTURE(lm.model.events[g.event].name);
            CHECK(g.simplified_nodes <= g.exact_nodes);
        }
    }

    TEST_CASE("printed supervisor matches the golden file") {
        auto lm = load(testing::coffee_full());
        auto res = run(lm.model, Engine::Symbolic);
        std::string golden = testing::read_file(testing::model_path("listings/coffee_supervisor_synthesized.fsc"));
        golden.erase(0, golden.find('\n') + 1);  // header comment
        CHECK(supervisor_text(lm.model, res.supervisor) == golden);
    }

    TEST_CASE("guards equivalent to the published supervisor") {
        auto cmp = testing::compare_listed_guards();
        CHECK(cmp.size() == 16);
        for (const auto& c : cmp) {
            if (c.event == "Cancel.cancel") continue;
            CAPTURE(c.event);
            CHECK(c.equivalent);
        }
    }

    TEST_CASE("published supervisor as a given supervisor keeps the same behaviour") {
        std::vector<std::string> files = testing::coffee_full();
        files.push_back(testing::model_path("listings/coffee_supervisor_synthesized.fsc"));
        auto lm = load(files);
        auto v = verify_controlled(lm.model);
        CHECK(v.passed());
        CHECK(v.states == 6240);
        CHECK(v.transitions == 35336);
    }

    TEST_CASE("nothing to restrict") {
        auto lm = load_text(R"(plant automaton P:
  controllable a; uncontrollable u;
  location X: initial; marked; edge a goto Y;
  location Y: marked; edge u goto X;
end)");
        auto res = run(lm.model, Engine::Symbolic);
        CHECK(res.report.controlled_states == 2);
        CHECK(res.report.good_states == 2);
        for (const auto& g : res.supervisor.guards) CHECK(g.text == "true");
    }

    TEST_CASE("contradictory requirement empties the result") {
        auto lm = load_text("plant automaton P: controllable a; location: initial; marked; edge a; end\nrequirement false;");
        CHECK(run(lm.model, Engine::Symbolic).report.empty);
        CHECK(run(lm.model, Engine::Explicit).report.empty);
    }

    TEST_CASE("uncontrollable escape is cut off early") {
        // a leads to a state where u reaches a forbidden location
        auto lm = load_text(R"(plant automaton P:
  controllable a, b; uncontrollable u;
  location S: initial; marked; edge a goto T; edge b goto V;
  location T: edge u goto Bad;
  location V: marked; edge b goto S;
  location Bad: marked;
end
requirement not P.Bad;)");
        for (Engine e : {Engine::Symbolic, Engine::Explicit}) {
            auto res = run(lm.model, e);
            CHECK(res.report.controlled_states == 2);
            auto a = res.supervisor.guard_of(*lm.model.find_event("P.a"));
            REQUIRE(a);
            CHECK(a->text == "false");
        }
    }

    TEST_CASE("supervisor can be added back to the model") {
        auto lm = load(testing::coffee_full());
        auto res = run(lm.model, Engine::Symbolic);
        Model with = with_supervisor(lm.model, res.supervisor);
        CHECK(with.automata.size() == lm.model.automata.size() + 1);
        CHECK(with.has_kind(AutomatonKind::Supervisor));
        Model twice = with_supervisor(with, res.supervisor);
        CHECK(twice.automata.back().name == "sup2");
    }

    TEST_CASE("predicate dump") {
        auto lm = load(testing::coffee_full());
        auto res = run(lm.model, Engine::Symbolic);
        std::string dump = res.predicate_dump();
        CHECK(dump.rfind("# good", 0) == 0);
        CHECK(dump.find("# roots: good Cancel.cancel") != std::string::npos);
    }

    TEST_CASE("effort metrics") {
        auto lm = load(testing::coffee_full());
        auto a = run(lm.model, Engine::Symbolic);
        auto b = run(lm.model, Engine::Symbolic);
        CHECK(a.report.metrics.operations > 0);
        CHECK(a.report.metrics.peak_nodes > 0);
        CHECK(a.report.metrics.operations == b.report.metrics.operations);
        CHECK(a.report.metrics.peak_nodes == b.report.metrics.peak_nodes);
        CHECK(a.report.iterations == b.report.iterations);
    }
}

TEST_SUITE("verify") {
    TEST_CASE("synthesized coffee supervisor passes all checks") {
        auto lm = load(testing::coffee_full());
        auto res = run(lm.model, Engine::Symbolic);
        Model m = with_supervisor(lm.model, res.supervisor);
        auto v = verify_controlled(m);
        CHECK(v.passed());
        CHECK(v.violations.empty());
        auto p = maximality_probe(m);
        CHECK(p.passed());
        CHECK(p.removed > 0);
        CHECK_FALSE(p.partial);
    }

    TEST_CASE("take_cup disabled breaks nonblocking") {
        auto lm = load(testing::coffee_full());
        auto res = run(lm.model, Engine::Symbolic);
        Model m = with_supervisor(lm.model, res.supervisor);
        const int take = *m.find_event("Machine.take_cup");
        for (auto& e : m.automata.back().edges)
            if (e.event == take) e.guard = Expr::constant(false);
        auto v = verify_controlled(m);
        CHECK_FALSE(v.nonblocking);
        auto it = std::find_if(v.violations.begin(), v.violations.end(),
                               [](const Violation& x) { return x.kind == Violation::Kind::Nonblocking; });
        REQUIRE(it != v.violations.end());
        CHECK_FALSE(it->trace.empty());
        CHECK_FALSE(maximality_probe(m).passed());
    }

    TEST_CASE("spurious conjunct is found by the probe") {
        auto lm = load(testing::coffee_full());
        auto res = run(lm.model, Engine::Symbolic);
        Model m = with_supervisor(lm.model, res.supervisor);
        const int insert = *m.find_event("Coin.insert");
        const int fs = *m.find_disc("FS.present");
        for (auto& e : m.automata.back().edges)
            if (e.event == insert) e.guard = Expr::binary(BinaryOp::And, e.guard, Expr::negation(Expr::disc(fs, Type::boolean())));
        auto p = maximality_probe(m);
        CHECK_FALSE(p.passed());
        REQUIRE_FALSE(p.readdable.empty());
        CHECK(p.readdable[0].event == "Coin.insert");
    }

    TEST_CASE("supervisor blocking an uncontrollable event") {
        // the language rejects such a supervisor, so it is attached directly
        auto lm = load_text(R"(plant automaton P:
  controllable a; uncontrollable u;
  location X: initial; marked; edge a goto Y;
  location Y: marked; edge u goto X;
end)");
        Supervisor sup;
        const int u = *lm.model.find_event("P.u");
        sup.alphabet = {u};
        sup.guards.push_back({u, Expr::constant(false), "false", 0, 0});
        auto v = verify_controlled(with_supervisor(lm.model, sup));
        CHECK_FALSE(v.controllable);
        CHECK(v.safe);
    }

    TEST_CASE("violated requirement invariant") {
        auto lm = load_text(R"(plant automaton P:
  controllable a;
  location X: initial; marked; edge a goto Y;
  location Y: marked;
end
requirement not P.Y;)");
        auto v = verify_controlled(lm.model);
        CHECK_FALSE(v.safe);
        REQUIRE_FALSE(v.violations.empty());
        CHECK(v.violations[0].trace == std::vector<std::string>{"P.a"});
    }

    TEST_CASE("no requirements is trivially safe and the probe is vacuous") {
        auto lm = load({testing::model_path("coffee/components.fsc")});
        auto v = verify_controlled(lm.model);
        CHECK(v.safe);
        CHECK(v.controllable);
        auto p = maximality_probe(lm.model);
        CHECK(p.removed == 0);
        CHECK(p.passed());
    }

    TEST_CASE("probe sampling is bounded and seeded") {
        auto lm = load(testing::coffee_full());
        auto res = run(lm.model, Engine::Symbolic);
        Model m = with_supervisor(lm.model, res.supervisor);
        ProbeOptions o;
        o.samples = 10;
        auto p = maximality_probe(m, o);
        CHECK(p.partial);
        CHECK(p.examined == 10);
        CHECK(p.passed());
    }
}
