// Acceptance report: one PASS/FAIL line per criterion.
//   fsc_acceptance                  every criterion
//   fsc_acceptance --criterion N    one criterion
//   fsc_acceptance --table2 ROW     one state-space row of the full body comfort system
// Exit code 0 when every selected line passes, 77 when the only failures
// are rows whose input model is not available, 1 otherwise.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "coffee.hpp"
#include "fsc/configs.hpp"
#include "fsc/efa/explore.hpp"
#include "fsc/feature/feature_model.hpp"
#include "fsc/synth/synthesis.hpp"
#include "fsc/synth/verify.hpp"
#include "random_model.hpp"

using namespace fsc;
using Clock = std::chrono::steady_clock;

namespace {

enum class Status { Pass, Fail, Unavailable };

struct Tally {
    int pass = 0, fail = 0, unavailable = 0;

    void line(const std::string& id, Status s, const std::string& detail) {
        const char* word = s == Status::Pass ? "PASS" : "FAIL";
        std::cout << word << "  " << std::left << std::setw(36) << id << ' ' << detail << '\n';
        (s == Status::Pass ? pass : s == Status::Fail ? fail : unavailable)++;
    }
    void check(const std::string& id, bool ok, const std::string& detail) { line(id, ok ? Status::Pass : Status::Fail, detail); }

    int exit_code() const { return fail ? 1 : unavailable ? 77 : 0; }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string secs(double s) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(3) << s << " s";
    return o.str();
}

std::string str(const bdd::BigInt& v) { return v.str(); }

/// Mantissa and exponent rounded to two significant digits, e.g. "7.7e20".
std::string two_digits(const bdd::BigInt& v) {
    if (v == 0) return "0";
    std::string d = v.str();
    int exponent = static_cast<int>(d.size()) - 1;
    int lead = std::stoi(d.substr(0, std::min<std::size_t>(3, d.size())));
    if (d.size() < 3) lead *= d.size() == 1 ? 100 : 10;
    int rounded = (lead + 5) / 10;  // two digits
    if (rounded == 100) rounded = 10, ++exponent;
    std::ostringstream o;
    o << rounded / 10 << '.' << rounded % 10 << 'e' << exponent;
    return o.str();
}

// ---- criteria ----

void configurations(Tally& t) {
    struct Case {
        const char* file;
        int expected;
    };
    for (const Case& c : {Case{"coffee/features_static_nocost.fsc", 20}, Case{"coffee/features_static.fsc", 16},
                          Case{"bcs/fm_static.fsc", 11616}}) {
        auto start = Clock::now();
        auto lm = load({testing::model_path(c.file)});
        auto n = count_configurations(lm.model, 0).count;
        double s = seconds_since(start);
        t.check(std::string("1 configs ") + c.file, n == c.expected && s < 1.0,
                str(n) + " (want " + std::to_string(c.expected) + ", " + secs(s) + ", limit 1 s)");
    }
}

void components(Tally& t) {
    auto start = Clock::now();
    auto lm = load({testing::model_path("coffee/components.fsc")});
    Composition comp(lm.model);
    auto ts = explore(comp);
    double s = seconds_since(start);
    t.check("2 coffee components", ts.state_count() == 18 && ts.transitions.size() == 207 && s < 1.0,
            std::to_string(ts.state_count()) + " states / " + std::to_string(ts.transitions.size()) +
                " transitions (want 18 / 207, " + secs(s) + ", limit 1 s)");
}

void strict_dynamic(Tally& t) {
    auto lm = load(testing::model_paths({"coffee/fm_dynamic.fsc"}));
    Composition comp(lm.model);
    auto ts = explore(comp);
    auto parts = weak_components(ts);
    std::string sizes;
    for (auto p : parts) sizes += (sizes.empty() ? "" : ", ") + std::to_string(p);
    t.check("3 strict dynamic FM", ts.state_count() == 16 && parts == std::vector<std::size_t>{9, 7},
            std::to_string(ts.state_count()) + " states, components {" + sizes + "} (want 16, {9, 7})");
}

void relaxed_dynamic(Tally& t) {
    auto lm = load(testing::model_paths({"coffee/features_dynamic.fsc", "coffee/relaxed.fsc"}));
    Composition comp(lm.model);
    auto ts = explore(comp);
    auto st = statistics(comp, ts);
    std::size_t come_go = 0;
    for (const auto& [name, count] : st.per_event)
        if (name.ends_with(".come") || name.ends_with(".go")) come_go += count;
    t.check("4 relaxed dynamic FM", st.states == 1364 && st.initial == 16 && come_go == 13440,
            std::to_string(st.states) + " states / " + std::to_string(st.initial) + " initial / " + std::to_string(come_go) +
                " come-go (want 1364 / 16 / 13440)");
}

void coffee_synthesis(Tally& t) {
    auto start = Clock::now();
    auto lm = load(testing::coffee_full());
    synth::SynthesisOptions o;
    o.engine = synth::Engine::Symbolic;
    auto res = synth::synthesize(lm.model, o);
    double s = seconds_since(start);
    const auto& r = res.report;
    t.check("5 coffee synthesis", r.controlled_states == 6240 && r.controlled_transitions == 35336 && s < 10.0,
            str(r.controlled_states) + " states / " + str(r.controlled_transitions) + " transitions (want 6240 / 35336, " +
                secs(s) + ", limit 10 s)");
    int equal = 0, total = 0;
    std::string differ;
    for (const auto& c : testing::compare_listed_guards()) {
        if (c.event == "Cancel.cancel") continue;
        ++total;
        if (c.equivalent) ++equal;
        else differ += " " + c.event;
    }
    t.check("5 guards vs published", total == 15 && equal == total,
            std::to_string(equal) + "/" + std::to_string(total) + " guards equivalent on the controlled states" +
                (differ.empty() ? "" : ", differ:" + differ));
}

void bcs_reachable(Tally& t) {
    auto start = Clock::now();
    auto lm = load({testing::model_path("bcs/fm_dynamic.fsc")});
    symbolic::SymbolicModel sm(lm.model, CompositionOptions::plants());
    auto n = sm.count(sm.reachable());
    double s = seconds_since(start);
    t.check("6 BCS FM reachable", n == 134217728, str(n) + " (want 134217728, " + secs(s) + ")");

    start = Clock::now();
    auto frag = load(testing::model_paths({"bcs/fm_dynamic.fsc", "bcs/alarm.fsc", "bcs/alarm_presence.fsc",
                                           "bcs/alarm_context.fsc", "bcs/alarm_requirements.fsc"}));
    synth::SynthesisOptions o;
    auto res = synth::synthesize(frag.model, o);
    s = seconds_since(start);
    t.check("6 BCS fragment runtime", !res.report.empty && s <= 60.0,
            "alarm fragment synthesis " + secs(s) + " (limit 60 s), " + str(res.report.controlled_states) + " controlled states");
}

struct Row {
    const char* name;
    const char* expected;
    bool dynamic;
    std::function<bdd::BigInt(const Model&)> compute;
};

bdd::BigInt worst_case(const Model& m) {
    symbolic::SymbolicModel sm(m, synth::synthesis_space());
    return sm.worst_case_product();
}

bdd::BigInt uncontrolled(const Model& m) {
    symbolic::SymbolicModel sm(m, CompositionOptions::plants());
    return sm.count(sm.reachable());
}

bdd::BigInt controlled(const Model& m) {
    auto start = Clock::now();
    auto res = synth::synthesize(m, {});
    if (seconds_since(start) > 60.0) return -1;
    return res.report.controlled_states;
}

const std::vector<Row>& table2() {
    static const std::vector<Row> rows{
        {"worst-case", "7.7e20", true, worst_case},
        {"uncontrolled-static", "3.2e14", false, uncontrolled},
        {"uncontrolled-dynamic", "6.2e20", true, uncontrolled},
        {"controlled-static", "7.6e13", false, controlled},
        {"controlled-dynamic", "1.1e20", true, controlled},
    };
    return rows;
}

void table2_row(Tally& t, const Row& row) {
    const std::string file = testing::model_path(row.dynamic ? "bcs/bcs_full_dynamic.fsc" : "bcs/bcs_full_static.fsc");
    const std::string id = std::string("6 table2 ") + row.name;
    if (!std::filesystem::exists(file)) {
        t.line(id, Status::Unavailable,
               std::string("model unavailable: ") + file + " (want " + row.expected + "; needs the full component and requirement set)");
        return;
    }
    auto start = Clock::now();
    auto lm = load({file});
    auto v = row.compute(lm.model);
    double s = seconds_since(start);
    std::string got = v < 0 ? "timeout" : two_digits(v);
    t.check(id, got == row.expected, got + " (want " + row.expected + ", " + secs(s) + ")");
}

void property_suite(Tally& t) {
    constexpr std::uint64_t models = 200;
    constexpr std::size_t budget = 100000;
    bool counts = true, verified = true, maximal = true, metrics = true, table1 = true;
    std::size_t nonempty = 0, largest = 0;
    for (std::uint64_t seed = 1; seed <= models; ++seed) {
        auto lm = load_text(testing::random_model(seed));
        const Model& m = lm.model;
        Composition comp(m, synth::synthesis_space());
        auto ts = explore(comp, {budget});
        largest = std::max(largest, ts.state_count());
        symbolic::SymbolicModel sm(m, synth::synthesis_space());
        counts = counts && sm.count(sm.reachable()) == ts.state_count();

        synth::SynthesisOptions sym, exp;
        exp.engine = synth::Engine::Explicit;
        auto a = synth::synthesize(m, sym);
        auto b = synth::synthesize(m, exp);
        counts = counts && a.report.empty == b.report.empty && a.report.controlled_states == b.report.controlled_states &&
                 synth::supervisor_text(m, a.supervisor) == synth::supervisor_text(m, b.supervisor);
        if (!a.report.empty) {
            ++nonempty;
            Model with = synth::with_supervisor(m, a.supervisor);
            verified = verified && synth::verify_controlled(with, {budget}).passed();
            maximal = maximal && synth::maximality_probe(with, {budget}).passed();
        }

        symbolic::SymbolicModel first(m, synth::synthesis_space()), second(m, synth::synthesis_space());
        auto r1 = symbolic::symbolic_synthesize(first);
        auto r2 = symbolic::symbolic_synthesize(second);
        bool monotone = !r1.trace.empty() && r1.metrics.operations > 0;
        for (std::size_t i = 1; i < r1.trace.size(); ++i)
            monotone = monotone && r1.trace[i].operations >= r1.trace[i - 1].operations &&
                       r1.trace[i].peak_nodes >= r1.trace[i - 1].peak_nodes;
        metrics = metrics && monotone && r1.metrics.operations == r2.metrics.operations &&
                  r1.metrics.peak_nodes == r2.metrics.peak_nodes && r1.metrics.iterations == r2.metrics.iterations;

        auto fm = testing::random_feature_model(seed, 20);
        auto expected = testing::brute_force_configurations(fm);
        table1 = table1 && feature::enumerate_valid_configurations(fm) == expected && count_valid_configurations(fm) == expected;
    }
    std::string corpus = std::to_string(models) + " models, " + std::to_string(nonempty) + " with a supervisor, largest " +
                         std::to_string(largest) + " states";
    t.check("7a explicit = symbolic", counts, corpus);
    t.check("7b verify_controlled", verified && nonempty >= 100, std::to_string(nonempty) + " supervisors checked");
    t.check("7c maximality_probe", maximal && nonempty >= 100, "no re-addable transitions");
    t.check("7d Table 1 vs brute force", table1, std::to_string(models) + " feature models up to 20 features");
    t.check("7e effort metrics", metrics, "captured, monotone per iteration, equal across two runs");
}

}  // namespace

int main(int argc, char** argv) {
    int criterion = 0;
    std::string row;
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--criterion") criterion = std::atoi(argv[i + 1]);
        else if (flag == "--table2") row = argv[i + 1];
    }
    Tally t;
    try {
        if (!row.empty()) {
            for (const auto& r : table2())
                if (r.name == row) table2_row(t, r);
            if (t.pass + t.fail + t.unavailable == 0) {
                std::cerr << "unknown row '" << row << "'\n";
                return 1;
            }
            return t.exit_code();
        }
        if (criterion == 0 || criterion == 1) configurations(t);
        if (criterion == 0 || criterion == 2) components(t);
        if (criterion == 0 || criterion == 3) strict_dynamic(t);
        if (criterion == 0 || criterion == 4) relaxed_dynamic(t);
        if (criterion == 0 || criterion == 5) coffee_synthesis(t);
        if (criterion == 0 || criterion == 6) bcs_reachable(t);
        if (criterion == 0)
            for (const auto& r : table2()) table2_row(t, r);
        if (criterion == 0 || criterion == 7) property_suite(t);
    } catch (const std::exception& e) {
        std::cout << "FAIL  error: " << e.what() << '\n';
        return 1;
    }
    std::cout << t.pass << " passed, " << t.fail << " failed, " << t.unavailable << " failed for lack of an input model\n";
    return t.exit_code();
}
