#include <sstream>

#include "doctest.h"
#include "fsc/efa/eval.hpp"
#include "fsc/efa/explore.hpp"
#include "fsc/error.hpp"
#include "fsc/pipeline.hpp"
#include "fsc/synth/problem.hpp"
#include "paths.hpp"

using namespace fsc;

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

int location(const Model& m, const std::string& automaton, const std::string& name) {
    const Automaton& a = m.automata[*m.find_automaton(automaton)];
    for (std::size_t i = 0; i < a.locations.size(); ++i)
        if (a.locations[i].name == name) return static_cast<int>(i);
    FAIL("no location " << automaton << "." << name);
    return -1;
}

Value& loc_slot(const Composition& c, std::vector<Value>& s, const std::string& automaton) {
    return s[c.layout().automaton_slot[*c.model().find_automaton(automaton)]];
}

Value& disc_slot(const Composition& c, std::vector<Value>& s, const std::string& disc) {
    return s[c.layout().disc_slot[*c.model().find_disc(disc)]];
}

int event(const Model& m, const std::string& name) {
    auto e = m.find_event(name);
    REQUIRE_MESSAGE(e.has_value(), name);
    return *e;
}

}  // namespace

TEST_SUITE("efa") {
    TEST_CASE("coffee components compose to 18 states and 207 transitions") {
        auto lm = load({testing::model_path("coffee/components.fsc")});
        Composition comp(lm.model);
        auto ts = explore(comp);
        CHECK(ts.state_count() == 18);
        CHECK(ts.transitions.size() == 207);
        CHECK(ts.initial.size() == 1);
    }

    TEST_CASE("strict dynamic feature model: two components of 7 and 9 states") {
        auto lm = load(testing::model_paths({"coffee/features_dynamic.fsc", "coffee/strict.fsc"}));
        Composition comp(lm.model);
        auto ts = explore(comp);
        CHECK(ts.state_count() == 16);
        CHECK(ts.transitions.size() == 42);
        CHECK(ts.initial.size() == 16);
        CHECK(weak_components(ts) == std::vector<std::size_t>{9, 7});
    }

    TEST_CASE("relaxed dynamic feature model") {
        auto lm = load(testing::model_paths({"coffee/features_dynamic.fsc", "coffee/relaxed.fsc"}));
        Composition comp(lm.model);
        auto ts = explore(comp);
        auto st = statistics(comp, ts);
        CHECK(st.states == 1364);
        CHECK(st.initial == 16);
        CHECK(st.transitions == 13440);
        std::size_t come_go = 0;
        for (const auto& [name, count] : st.per_event)
            if (name.ends_with(".come") || name.ends_with(".go")) come_go += count;
        CHECK(come_go == 13440);
    }

    TEST_CASE("static coffee model has 16 initial states") {
        auto lm = load({testing::model_path("coffee/features_static.fsc")});
        Composition comp(lm.model);
        CHECK(comp.initial_states().size() == 16);
        CHECK(explore(comp).transitions.empty());
    }

    TEST_CASE("example automaton: initial state and updates") {
        auto lm = load_text(kExample);
        const Model& m = lm.model;
        Composition comp(m);
        auto init = comp.initial_states();
        REQUIRE(init.size() == 1);
        CHECK(comp.describe(init[0]) == "ExampleAutomaton=Idle, ExampleAutomaton.c=0");

        std::vector<Value> s = init[0];
        loc_slot(comp, s, "ExampleAutomaton") = location(m, "ExampleAutomaton", "Busy");
        disc_slot(comp, s, "ExampleAutomaton.c") = 4;
        auto next = comp.successors(s, event(m, "ExampleAutomaton.process"));
        REQUIRE(next.size() == 1);
        CHECK(disc_slot(comp, next[0], "ExampleAutomaton.c") == 5);
        CHECK_FALSE(comp.is_enabled(next[0], event(m, "ExampleAutomaton.process")));
        CHECK(comp.is_enabled(next[0], event(m, "ExampleAutomaton.finish")));

        auto ts = explore(comp);
        CHECK(ts.state_count() == 7);  // Idle plus Busy with c = 0..5
        CHECK(ts.marked_count() == 1);
    }

    TEST_CASE("self-loop without update keeps the state") {
        auto lm = load_text("plant automaton A: controllable a; location: initial; edge a; end");
        Composition comp(lm.model);
        auto s = comp.initial_states().at(0);
        auto next = comp.successors(s, 0);
        REQUIRE(next.size() == 1);
        CHECK(next[0] == s);
    }

    TEST_CASE("update outside the declared range") {
        auto lm = load_text("plant automaton A: controllable inc; disc int[0..2] c = 0; location: initial; edge inc do c := c + 1; end");
        Composition comp(lm.model);
        try {
            explore(comp);
            FAIL("expected an evaluation error");
        } catch (const EvalError& e) {
            std::string msg = e.what();
            CHECK(msg.find("A.c") != std::string::npos);
            CHECK(msg.find("inc") != std::string::npos);
        }
    }

    TEST_CASE("state budget") {
        auto lm = load(testing::model_paths({"coffee/features_dynamic.fsc", "coffee/relaxed.fsc"}));
        Composition comp(lm.model);
        CHECK_THROWS_AS(explore(comp, {100}), BudgetExceeded);
        auto bcs = load({testing::model_path("bcs/fm_dynamic.fsc")});
        Composition big(bcs.model);
        CHECK_THROWS_AS(explore(big, {1000}), BudgetExceeded);
    }

    TEST_CASE("event linked to an absent feature is disabled") {
        auto lm = load(testing::coffee_full());
        const Model& m = lm.model;
        Composition comp(m, synth::synthesis_space());
        auto ts = explore(comp);
        const int ring = event(m, "Ringtone.ring");
        const int fr = *m.find_disc("FR.present");
        std::size_t absent = 0;
        for (std::size_t i = 0; i < ts.state_count(); ++i) {
            StateView s = ts.states[i];
            if (s[comp.layout().disc_slot[fr]] != 0) continue;
            ++absent;
            CHECK_FALSE(comp.is_enabled(s, ring));
        }
        CHECK(absent > 0);
    }

    TEST_CASE("monitor stays put on events it has no edge for") {
        auto lm = load(testing::coffee_full());
        const Model& m = lm.model;
        Composition comp(m, synth::synthesis_space());
        auto ts = explore(comp);
        const int insert = event(m, "Coin.insert");
        const int present = location(m, "CoinPresence", "CoinPresent");
        bool seen = false;
        for (std::size_t i = 0; i < ts.state_count() && !seen; ++i) {
            std::vector<Value> s(ts.states[i].begin(), ts.states[i].end());
            if (loc_slot(comp, s, "CoinPresence") != present || !comp.is_enabled(s, insert)) continue;
            seen = true;
            for (auto& t : comp.successors(s, insert)) CHECK(loc_slot(comp, t, "CoinPresence") == present);
        }
        CHECK(seen);
    }

    TEST_CASE("tea resets when its feature leaves") {
        auto lm = load(testing::model_paths({"coffee/features_dynamic.fsc", "coffee/strict.fsc", "coffee/components_tea_reset.fsc",
                                             "coffee/event_feature_link.fsc"}));
        const Model& m = lm.model;
        Composition comp(m);
        auto ts = explore(comp);
        const int go = event(m, "FT.go");
        const int tea = location(m, "Tea", "Tea");
        bool seen = false;
        for (std::size_t i = 0; i < ts.state_count(); ++i) {
            std::vector<Value> s(ts.states[i].begin(), ts.states[i].end());
            if (loc_slot(comp, s, "Tea") != tea || !comp.is_enabled(s, go)) continue;
            seen = true;
            for (auto& t : comp.successors(s, go)) {
                CHECK(loc_slot(comp, t, "Tea") == location(m, "Tea", "NoChoice"));
                CHECK(disc_slot(comp, t, "FT.present") == 0);
            }
        }
        CHECK(seen);
    }

    TEST_CASE("graphviz export") {
        auto lm = load_text(kExample);
        Composition comp(lm.model);
        auto ts = explore(comp);
        std::ostringstream out;
        write_dot(out, comp, ts);
        std::string dot = out.str();
        CHECK(dot.rfind("digraph", 0) == 0);
        CHECK(dot.find("peripheries=2") != std::string::npos);
        CHECK(dot.find("dashed") != std::string::npos);
        CHECK(dot.find("ExampleAutomaton.finish") != std::string::npos);
    }
}
