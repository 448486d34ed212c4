#include "doctest.h"
#include "fsc/configs.hpp"
#include "fsc/efa/explore.hpp"
#include "fsc/error.hpp"
#include "fsc/feature/feature_model.hpp"
#include "fsc/lang/printer.hpp"
#include "fsc/pipeline.hpp"
#include "paths.hpp"
#include "random_model.hpp"

using namespace fsc;
using namespace fsc::feature;
using Kind = ConstraintKind;

namespace {

FeatureModel tree(std::initializer_list<const char*> names, std::vector<Constraint> constraints) {
    FeatureModel fm;
    for (const char* n : names) fm.features.push_back({n, {}, {}});
    fm.constraints = std::move(constraints);
    return fm;
}

FeatureModel coffee() {
    auto lm = load({testing::model_path("coffee/fm_static.fsc")});
    REQUIRE(lm.feature_model);
    return lm.feature_model->model;
}

}  // namespace

TEST_SUITE("feature") {
    TEST_CASE("constraint formulas") {
        CHECK(lang::to_string(constraint_formula({Kind::Excludes, "FD", {"FP"}, {}})) == "not(FD.present and FP.present)");
        CHECK(lang::to_string(constraint_formula({Kind::Alternative, "FO", {"FE", "FD"}, {}})) ==
              "(FE.present <=> (not(FD.present) and FO.present)) and (FD.present <=> (not(FE.present) and FO.present))");
        CHECK(lang::to_string(constraint_formula({Kind::Root, "F0", {}, {}})) == "F0.present <=> true");
        CHECK(lang::to_string(constraint_formula({Kind::Mandatory, "F1", {"F2"}, {}})) == "F1.present <=> F2.present");
        CHECK(lang::to_string(constraint_formula({Kind::Optional, "F1", {"F2"}, {}})) == "F2.present => F1.present");
        CHECK(lang::to_string(constraint_formula({Kind::Requires, "F1", {"F2"}, {}})) == "F1.present => F2.present");
        CHECK(lang::to_string(constraint_formula({Kind::Or, "F", {"F1", "F2"}, {}})) == "F.present <=> (F1.present or F2.present)");
    }

    TEST_CASE("each kind agrees with the oracle on every assignment") {
        // parent + up to three children, all 2^4 assignments
        for (Kind k : {Kind::Root, Kind::Mandatory, Kind::Optional, Kind::Alternative, Kind::Or, Kind::Requires, Kind::Excludes}) {
            const bool group = k == Kind::Alternative || k == Kind::Or;
            for (int n = 1; n <= (group ? 3 : 1); ++n) {
                FeatureModel fm = tree({"P", "A", "B", "C"}, {});
                Constraint c{k, "P", {}, {}};
                if (k != Kind::Root)
                    for (int i = 0; i < n; ++i) c.children.push_back(fm.features[1 + i].name);
                FeatureModel single = fm;
                single.constraints = {c};
                for (std::uint64_t cfg = 0; cfg < 16; ++cfg) {
                    CAPTURE(static_cast<int>(k));
                    CAPTURE(cfg);
                    CHECK(is_valid_configuration(single, cfg) == testing::constraint_holds(fm, c, cfg));
                }
            }
        }
    }

    TEST_CASE("small counts") {
        CHECK(count_valid_configurations(tree({"R"}, {{Kind::Root, "R", {}, {}}})) == 1);
        CHECK(count_valid_configurations(tree({"R", "A"}, {{Kind::Root, "R", {}, {}}, {Kind::Optional, "R", {"A"}, {}}})) == 2);
        CHECK(count_valid_configurations(tree({"R", "A"}, {{Kind::Root, "R", {}, {}}, {Kind::Mandatory, "R", {"A"}, {}}})) == 1);
        CHECK(count_valid_configurations(
                  tree({"R", "A", "B"}, {{Kind::Root, "R", {}, {}}, {Kind::Or, "R", {"A", "B"}, {}}})) == 3);
        CHECK(count_valid_configurations(
                  tree({"R", "A", "B"}, {{Kind::Root, "R", {}, {}}, {Kind::Alternative, "R", {"A", "B"}, {}}})) == 2);
    }

    TEST_CASE("coffee machine configurations") {
        FeatureModel fm = coffee();
        CHECK(fm.features.size() == 11);
        CHECK(enumerate_valid_configurations(fm, false) == 20);
        CHECK(enumerate_valid_configurations(fm, true) == 16);
        CHECK(count_valid_configurations(fm) == 16);
        CHECK(testing::brute_force_configurations(fm) == 20);
    }

    TEST_CASE("validation") {
        CHECK_NOTHROW(validate(coffee()));
        CHECK_THROWS_AS(validate(tree({"R", "S"}, {{Kind::Root, "R", {}, {}}, {Kind::Root, "S", {}, {}}})), ResolveError);
        CHECK_THROWS_AS(validate(tree({"R", "A"}, {{Kind::Root, "R", {}, {}}, {Kind::Optional, "R", {"X"}, {}}})), ResolveError);
        CHECK_THROWS_AS(validate(tree({"R", "A"}, {{Kind::Root, "R", {}, {}}})), ResolveError);  // A has no parent
        CHECK_THROWS_AS(validate(tree({"R", "A", "B"}, {{Kind::Root, "R", {}, {}},
                                                       {Kind::Optional, "R", {"A"}, {}},
                                                       {Kind::Optional, "B", {"A"}, {}}})),
                        ResolveError);  // two parents
        FeatureModel fm = tree({"R", "A", "B"}, {{Kind::Root, "R", {}, {}}, {Kind::Optional, "R", {"A"}, {}}, {Kind::Optional, "R", {"B"}, {}}});
        ReconfigMode mode;
        mode.swaps.push_back({"swap", false, {"A"}, {}});
        CHECK_THROWS_AS(validate(fm, mode), ResolveError);
        mode.swaps[0].features = {"A", "B"};
        CHECK_NOTHROW(validate(fm, mode));
    }

    TEST_CASE("feature automata") {
        Feature plain{"F", {}, {}};
        auto s = compile_feature(plain, Reconfig::Static);
        REQUIRE(s.body.locations.size() == 1);
        CHECK(s.body.locations[0].initial);
        CHECK(s.body.locations[0].marked);
        CHECK(s.body.locations[0].edges.empty());
        REQUIRE(s.body.discs.size() == 1);
        CHECK(s.body.discs[0].name == "present");
        CHECK(s.body.discs[0].init == lang::DiscDecl::Init::Any);

        auto d = compile_feature(plain, Reconfig::Uncontrollable);
        CHECK(d.body.locations[0].edges.size() == 2);
        REQUIRE_FALSE(d.body.events.empty());
        CHECK_FALSE(d.body.events[0].controllable);

        auto lm = load({testing::model_path("coffee/fm_static.fsc")});
        auto cost = lm.model.find_alg("FS.cost");
        REQUIRE(cost);
        CHECK(to_string(lm.model, lm.model.algs[*cost].definition) == "if FS.present : 5 else 0 end");
    }

    TEST_CASE("lowering matches the hand-written listing model") {
        auto listing = load({testing::model_path("coffee/features_static.fsc")});
        auto lowered = load({testing::model_path("coffee/fm_static.fsc")});
        Composition a(listing.model), b(lowered.model);
        CHECK(a.initial_states().size() == 16);
        CHECK(b.initial_states().size() == 16);
        CHECK(count_configurations(listing.model).count == count_configurations(lowered.model).count);

        auto dyn = load(testing::model_paths({"coffee/fm_dynamic.fsc"}));
        auto hand = load(testing::model_paths({"coffee/features_dynamic.fsc", "coffee/strict.fsc"}));
        Composition c(dyn.model), d(hand.model);
        auto tc = explore(c), td = explore(d);
        CHECK(tc.state_count() == td.state_count());
        CHECK(tc.transitions.size() == td.transitions.size());
    }

    TEST_CASE("swap keeps the configuration valid") {
        auto lm = load_text(R"(featuremodel M:
  feature R; feature C; feature E; feature D;
  root R; mandatory R: C; alternative C: E, D;
  reconfiguration static;
  swap uncontrollable exchange: E, D;
end
)");
        Composition comp(lm.model);
        auto ts = explore(comp);
        auto e = lm.model.find_event("exchange");
        REQUIRE(e);
        std::size_t swaps = 0;
        for (const auto& t : ts.transitions) swaps += t.event == *e;
        CHECK(ts.state_count() == 2);
        CHECK(swaps == 2);
    }

    TEST_CASE("BCS feature model initial states") {
        auto lm = load({testing::model_path("bcs/fm_dynamic.fsc")});
        CHECK(count_configurations(lm.model, 0).count == 11616);
        CHECK(lm.feature_model->model.features.size() == 27);
    }
}
