#include "doctest.h"
#include "fsc/efa/explore.hpp"
#include "fsc/pipeline.hpp"
#include "fsc/symbolic/encoding.hpp"
#include "fsc/symbolic/to_expr.hpp"
#include "fsc/synth/problem.hpp"
#include "paths.hpp"

using namespace fsc;
using namespace fsc::symbolic;

namespace {

const char* kExample = R"(plant automaton ExampleAutomaton:
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

std::size_t bits_of(const SymbolicModel& sm, const std::string& name) {
    for (const auto& v : sm.variables())
        if (v.name == name) return v.bits.size();
    FAIL("no variable " << name);
    return 0;
}

}  // namespace

TEST_SUITE("symbolic") {
    TEST_CASE("bit widths follow the declared domains") {
        auto lm = load_text(kExample);
        SymbolicModel sm(lm.model, CompositionOptions::plants());
        CHECK(bits_of(sm, "ExampleAutomaton") == 1);
        CHECK(bits_of(sm, "ExampleAutomaton.c") == 8);
        CHECK(sm.bit_count() == 9);

        auto e = load_text("enum colors = red, yellow, blue, NA; plant automaton A: disc colors x = red; location: initial; end");
        SymbolicModel se(e.model, CompositionOptions::plants());
        CHECK(bits_of(se, "A.x") == 2);
    }

    TEST_CASE("set algebra") {
        auto lm = load_text(kExample);
        SymbolicModel sm(lm.model, CompositionOptions::plants());
        Bdd x = sm.initial();
        CHECK((x & !x).is_false());
        CHECK((x | sm.manager().constant(false)) == x);
        CHECK(sm.count(sm.manager().constant(false)) == 0);
        CHECK(sm.count(sm.domain()) == 2 * 256);
        CHECK(sm.worst_case_product() == 2 * 256);
    }

    TEST_CASE("reachability agrees with exploration on the example automaton") {
        auto lm = load_text(kExample);
        SymbolicModel sm(lm.model, CompositionOptions::plants());
        CHECK(sm.count(sm.reachable()) == 7);
        CHECK(sm.transition_count(sm.reachable()) == 7);
    }

    TEST_CASE("coffee configurations as a model count") {
        auto lm = load({testing::model_path("coffee/features_static.fsc")});
        SymbolicModel sm(lm.model, CompositionOptions::plants());
        auto valid = *lm.model.find_alg("sys_valid");
        auto cost = *lm.model.find_alg("cost_valid");
        Bdd f = sm.predicate(lm.model.algs[valid].definition) & sm.predicate(lm.model.algs[cost].definition);
        std::vector<unsigned> presence;
        for (const auto& v : sm.variables())
            if (v.name.ends_with(".present"))
                for (unsigned b : v.bits) presence.push_back(SymbolicModel::cur(b));
        CHECK(presence.size() == 11);
        CHECK(sm.manager().sat_count(f, presence) == 16);
        CHECK(sm.count(sm.initial() & sm.legal()) == 16);
    }

    TEST_CASE("relaxed fixpoint has 1364 states") {
        auto lm = load(testing::model_paths({"coffee/features_dynamic.fsc", "coffee/relaxed.fsc"}));
        SymbolicModel sm(lm.model, CompositionOptions::plants());
        Bdd reach = sm.reachable();
        CHECK(sm.count(reach) == 1364);
        CHECK(sm.transition_count(reach) == 13440);
        CHECK(sm.count(sm.initial() & sm.legal()) == 16);
    }

    TEST_CASE("BCS feature model reachable count") {
        auto lm = load({testing::model_path("bcs/fm_dynamic.fsc")});
        SymbolicModel sm(lm.model, CompositionOptions::plants());
        CHECK(sm.count(sm.reachable()) == 134217728);
        CHECK(sm.count(sm.initial() & sm.legal()) == 11616);
    }

    TEST_CASE("initial = marked = everything") {
        auto lm = load_text("plant automaton A: controllable a, b; location X: initial; marked; edge a goto Y; location Y: initial; marked; edge b goto X; end");
        SymbolicModel sm(lm.model, CompositionOptions::plants());
        Bdd legal = sm.legal();
        Bdd reach = sm.reachable();
        CHECK(reach == legal);
        CHECK(sm.coreachable(sm.marked() & legal, legal) == legal);
    }

    TEST_CASE("image and preimage") {
        auto lm = load_text(kExample);
        const Model& m = lm.model;
        SymbolicModel sm(m, CompositionOptions::plants());
        const int start = *m.find_event("ExampleAutomaton.start");
        const int finish = *m.find_event("ExampleAutomaton.finish");
        Bdd busy0 = sm.image(sm.initial(), start);
        CHECK(sm.count(busy0) == 1);
        CHECK(sm.preimage(busy0, start) == (sm.initial() & sm.legal()));
        CHECK(sm.image(busy0, finish).is_false());
    }

    TEST_CASE("engines agree on every shipped plant model") {
        for (const auto& files : std::vector<std::vector<std::string>>{
                 {"coffee/components.fsc"},
                 {"coffee/features_dynamic.fsc", "coffee/strict.fsc"},
                 {"coffee/fm_dynamic.fsc"},
                 {"coffee/features_dynamic.fsc", "coffee/strict.fsc", "coffee/components.fsc", "coffee/event_feature_link.fsc"}}) {
            CAPTURE(files.back());
            auto lm = load(testing::model_paths(files));
            Composition comp(lm.model);
            auto ts = explore(comp);
            SymbolicModel sm(lm.model, CompositionOptions::plants());
            Bdd reach = sm.reachable();
            CHECK(sm.count(reach) == ts.state_count());
            CHECK(sm.transition_count(reach) == ts.transitions.size());
            Bdd encoded = sm.manager().constant(false);
            for (std::size_t i = 0; i < ts.state_count(); ++i) encoded |= sm.encode(ts.states[i]);
            CHECK(encoded == reach);
        }
    }

    TEST_CASE("predicates print back to equivalent expressions") {
        auto lm = load(testing::coffee_full());
        SymbolicModel sm(lm.model, synth::synthesis_space());
        Bdd reach = sm.reachable();
        for (int e : sm.events()) {
            Bdd en = sm.enabled(e) & reach;
            ExprPtr back = to_expr(sm, en);
            CHECK(((sm.predicate(back) ^ en) & sm.domain()).is_false());
        }
    }

    TEST_CASE("variable order option keeps the counts") {
        auto lm = load(testing::model_paths({"coffee/features_dynamic.fsc", "coffee/relaxed.fsc"}));
        SymbolicModel plain(lm.model, CompositionOptions::plants());
        EncodingOptions reversed;
        for (auto it = plain.variables().rbegin(); it != plain.variables().rend(); ++it) reversed.order.push_back(it->name);
        SymbolicModel sm(lm.model, CompositionOptions::plants(), reversed);
        CHECK(sm.variables().front().name == plain.variables().back().name);
        CHECK(sm.count(sm.reachable()) == 1364);
    }
}
