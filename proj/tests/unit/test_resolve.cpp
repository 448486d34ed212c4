#include <algorithm>

#include "doctest.h"
#include "fsc/error.hpp"
#include "fsc/pipeline.hpp"
#include "paths.hpp"

using namespace fsc;

namespace {

const char* kBalls = R"(enum colordomain =  red, yellow, blue, NA;

plant def BallFeature(alg colordomain clr):
  disc bool present in any;
  alg colordomain color = if present : clr else NA end;
  location: initial; marked;
end

RedBall: BallFeature(red);
YellowBall: BallFeature(yellow);
)";

std::string resolve_error(std::string_view text) {
    try {
        load_text(text);
    } catch (const ResolveError& e) {
        return e.diagnostic().message;
    }
    return {};
}

}  // namespace

TEST_SUITE("resolve") {
    TEST_CASE("coffee feature instances") {
        auto lm = load({testing::model_path("coffee/features_static.fsc")});
        const Model& m = lm.model;
        std::vector<std::string> features;
        for (const auto& a : m.automata)
            if (a.name.size() == 2 && a.name[0] == 'F') features.push_back(a.name);
        CHECK(features.size() == 11);
        CHECK(m.find_automaton("FM"));
        CHECK(m.find_automaton("FT"));
        CHECK(m.find_automaton("Validity"));
        int constraint_booleans = 0;
        for (const auto& v : m.algs)
            if (v.name.size() >= 2 && v.name[0] == 'r' && std::all_of(v.name.begin() + 1, v.name.end(), ::isdigit)) ++constraint_booleans;
        CHECK(constraint_booleans == 12);
        CHECK(m.find_alg("cost_sum"));
        CHECK(m.find_alg("sys_valid"));
    }

    TEST_CASE("unknown name") {
        std::string msg = resolve_error("plant invariant F9.present;");
        CHECK(msg.find("F9.present") != std::string::npos);
    }

    TEST_CASE("instances get their own variables") {
        auto lm = load_text(kBalls);
        const Model& m = lm.model;
        auto red = m.find_alg("RedBall.color");
        auto yellow = m.find_alg("YellowBall.color");
        REQUIRE(red);
        REQUIRE(yellow);
        CHECK(*red != *yellow);
        CHECK(m.find_disc("RedBall.present") != m.find_disc("YellowBall.present"));
        CHECK(to_string(m, m.algs[*red].definition).find("red") != std::string::npos);
        CHECK(to_string(m, m.algs[*yellow].definition).find("yellow") != std::string::npos);
    }

    TEST_CASE("instances get their own events") {
        auto lm = load({testing::model_path("coffee/features_dynamic.fsc")});
        auto a = lm.model.find_event("FM.come");
        auto b = lm.model.find_event("FS.come");
        REQUIRE(a);
        REQUIRE(b);
        CHECK(*a != *b);
        CHECK_FALSE(lm.model.events[*a].controllable);
    }

    TEST_CASE("errors") {
        CHECK_FALSE(resolve_error("plant def D(alg int v): location: initial; end X: D();").empty());  // arity
        CHECK_FALSE(resolve_error("alg bool a = b; alg bool b = a; plant invariant a;").empty());       // cycle
        CHECK_FALSE(resolve_error("plant automaton A: location L: initial; location L: end").empty());  // duplicate location
        CHECK_FALSE(resolve_error("plant automaton A: disc bool b = 1; location: initial; end").empty());  // type
        CHECK_FALSE(resolve_error("requirement nope needs true;").empty());
    }

    TEST_CASE("bare int gets the default range with a warning") {
        auto lm = load_text("plant automaton A: disc int c = 0; location: initial; end");
        CHECK_FALSE(lm.model.warnings.empty());
        auto d = lm.model.find_disc("A.c");
        REQUIRE(d);
        ResolveOptions wide;
        wide.default_int_hi = 1000;
        auto lm2 = load_text("plant automaton A: disc int c = 0; location: initial; end", wide);
        CHECK(lm2.model.discs[*lm2.model.find_disc("A.c")].type.hi == 1000);
    }

    TEST_CASE("every model file resolves") {
        for (const auto& files : std::vector<std::vector<std::string>>{
                 {"coffee/components.fsc"},
                 {"coffee/features_static.fsc"},
                 {"coffee/features_dynamic.fsc", "coffee/relaxed.fsc"},
                 {"coffee/fm_static.fsc"},
                 {"coffee/fm_dynamic.fsc"},
                 {"coffee/fm_relaxed.fsc"},
                 {"bcs/features_dynamic.fsc"},
                 {"bcs/fm_dynamic.fsc", "bcs/alarm.fsc", "bcs/alarm_presence.fsc", "bcs/alarm_context.fsc",
                  "bcs/alarm_requirements.fsc"}}) {
            CAPTURE(files.front());
            CHECK_NOTHROW(load(testing::model_paths(files)));
        }
        std::vector<std::string> full = testing::coffee_full();
        full.push_back(testing::model_path("listings/coffee_supervisor.fsc"));
        CHECK_NOTHROW(load(full));
    }
}
