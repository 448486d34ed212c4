#include <benchmark/benchmark.h>

#include <random>

#include "fsc/bdd/bdd.hpp"
#include "fsc/efa/explore.hpp"
#include "fsc/pipeline.hpp"
#include "fsc/symbolic/encoding.hpp"
#include "fsc/synth/problem.hpp"
#include "fsc/synth/synthesis.hpp"

using namespace fsc;

namespace {

std::string model(const std::string& relative) { return std::string(FSC_MODELS_DIR) + "/" + relative; }

std::vector<std::string> coffee() {
    return {model("coffee/features_dynamic.fsc"), model("coffee/strict.fsc"), model("coffee/components.fsc"),
            model("coffee/event_feature_link.fsc"), model("coffee/requirements.fsc")};
}

/// Conjunction of n random 3-literal clauses over v variables.
void BM_BddClauses(benchmark::State& state) {
    const unsigned vars = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        bdd::Manager m(vars);
        std::mt19937_64 rng(42);
        std::uniform_int_distribution<unsigned> pick(0, vars - 1);
        bdd::Bdd f = m.constant(true);
        for (unsigned i = 0; i < 2 * vars; ++i) {
            bdd::Bdd clause = m.constant(false);
            for (int k = 0; k < 3; ++k) clause |= (rng() & 1) ? m.var(pick(rng)) : m.nvar(pick(rng));
            f &= clause;
        }
        benchmark::DoNotOptimize(m.sat_count(f));
        state.counters["peak_nodes"] = static_cast<double>(m.metrics().peak_live_nodes);
    }
}
BENCHMARK(BM_BddClauses)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_CoffeeSynthesis(benchmark::State& state) {
    auto lm = load(coffee());
    synth::SynthesisOptions o;
    o.engine = state.range(0) ? synth::Engine::Explicit : synth::Engine::Symbolic;
    for (auto _ : state) {
        auto res = synth::synthesize(lm.model, o);
        benchmark::DoNotOptimize(res.report.controlled_states);
        state.counters["operations"] = static_cast<double>(res.report.metrics.operations);
    }
    state.SetLabel(o.engine == synth::Engine::Explicit ? "explicit" : "symbolic");
}
BENCHMARK(BM_CoffeeSynthesis)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CoffeeExplore(benchmark::State& state) {
    auto lm = load({model("coffee/features_dynamic.fsc"), model("coffee/relaxed.fsc")});
    for (auto _ : state) {
        Composition comp(lm.model);
        benchmark::DoNotOptimize(explore(comp).state_count());
    }
}
BENCHMARK(BM_CoffeeExplore)->Unit(benchmark::kMillisecond);

/// Reachability of the BCS feature model; range(0) = 1 reverses the variable order.
void BM_BcsReachable(benchmark::State& state) {
    auto lm = load({model("bcs/fm_dynamic.fsc")});
    symbolic::EncodingOptions enc;
    if (state.range(0)) {
        symbolic::SymbolicModel plain(lm.model, CompositionOptions::plants());
        for (auto it = plain.variables().rbegin(); it != plain.variables().rend(); ++it) enc.order.push_back(it->name);
    }
    for (auto _ : state) {
        symbolic::SymbolicModel sm(lm.model, CompositionOptions::plants(), enc);
        auto reach = sm.reachable();
        benchmark::DoNotOptimize(sm.count(reach));
        state.counters["nodes"] = static_cast<double>(sm.manager().node_count(reach));
        state.counters["peak_nodes"] = static_cast<double>(sm.manager().metrics().peak_live_nodes);
    }
    state.SetLabel(state.range(0) ? "reversed order" : "declaration order");
}
BENCHMARK(BM_BcsReachable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BcsAlarmSynthesis(benchmark::State& state) {
    auto lm = load({model("bcs/fm_dynamic.fsc"), model("bcs/alarm.fsc"), model("bcs/alarm_presence.fsc"),
                    model("bcs/alarm_context.fsc"), model("bcs/alarm_requirements.fsc")});
    for (auto _ : state) {
        auto res = synth::synthesize(lm.model, {});
        benchmark::DoNotOptimize(res.report.controlled_states);
        state.counters["peak_nodes"] = static_cast<double>(res.report.metrics.peak_nodes);
        state.counters["operations"] = static_cast<double>(res.report.metrics.operations);
    }
}
BENCHMARK(BM_BcsAlarmSynthesis)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
