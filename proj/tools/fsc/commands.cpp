#include <algorithm>
#include <fstream>
#include <map>
#include <iostream>
#include <regex>
#include <sstream>

#include "cli.hpp"
#include "fsc/configs.hpp"
#include "fsc/efa/explore.hpp"
#include "fsc/lang/printer.hpp"
#include "fsc/pipeline.hpp"
#include "fsc/symbolic/encoding.hpp"
#include "fsc/synth/problem.hpp"
#include "fsc/synth/synthesis.hpp"
#include "fsc/synth/verify.hpp"

namespace fsc::cli {

namespace {

/// `key: value` lines, or `key=value` with --structured.
class Report {
public:
    Report(std::ostream& out, bool structured) : out_(out), structured_(structured) {}

    template <class T>
    void put(const std::string& key, const T& value) {
        if (!structured_) {
            out_ << key << ": " << value << '\n';
            return;
        }
        std::string k = key;
        std::replace(k.begin(), k.end(), ' ', '_');
        out_ << k << '=' << value << '\n';
    }

private:
    std::ostream& out_;
    bool structured_;
};

ResolveOptions resolve_options(const RunConfig& cfg) {
    ResolveOptions o;
    if (cfg.int_range.empty()) return o;
    static const std::regex range(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(cfg.int_range, m, range)) throw Error("--int-range expects lo..hi, got '" + cfg.int_range + "'");
    o.default_int_lo = std::stoll(m[1]);
    o.default_int_hi = std::stoll(m[2]);
    if (o.default_int_lo > o.default_int_hi) throw Error("--int-range is empty: " + cfg.int_range);
    return o;
}

LoadedModel load_model(const RunConfig& cfg, std::ostream& err) {
    if (cfg.files.empty()) throw Error("no input files");
    lang::SourceSpec spec = read_sources(cfg.files);
    if (spec.declarations.empty()) {
        SourceSpan span;
        span.file = cfg.files.front();
        span.begin = {1, 1};
        throw ResolveError(span, "no declarations");
    }
    LoadedModel lm = load_spec(std::move(spec), resolve_options(cfg));
    for (const auto& w : lm.model.warnings) err << w.to_string() << '\n';
    return lm;
}

bool use_explicit(const RunConfig& cfg, const Model& m, const CompositionOptions& space, Report& rep) {
    if (cfg.engine != EngineChoice::Auto) return cfg.engine == EngineChoice::Explicit;
    symbolic::SymbolicModel sm(m, space);
    symbolic::BigInt worst = sm.worst_case_product();
    rep.put("worst-case", worst);
    return worst <= cfg.budget;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const SourceError& e) {
        err << e.diagnostic().to_string() << '\n';
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    }
    return kDiagnostics;
}

}  // namespace

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        LoadedModel lm = load_model(cfg, err);
        synth::normalize(lm.model);
        const Model& m = lm.model;
        Report rep(out, cfg.structured);
        rep.put("automata", m.automata.size());
        rep.put("events", m.events.size());
        rep.put("variables", m.discs.size());
        rep.put("requirements", m.automata_of_kind(AutomatonKind::Requirement).size() + m.conditions.size() +
                                    static_cast<std::size_t>(std::count_if(m.invariants.begin(), m.invariants.end(), [](const Invariant& i) {
                                        return i.kind == AutomatonKind::Requirement;
                                    })));
        rep.put("warnings", m.warnings.size());
        return kOk;
    });
}

int cmd_configs(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        LoadedModel lm = load_model(cfg, err);
        ConfigurationCount c = count_configurations(lm.model);
        Report rep(out, cfg.structured);
        rep.put("configurations", c.count);
        rep.put("features", c.variables.size());
        rep.put("cross-checked", c.cross_checked ? "yes" : "no");
        if (c.count == 0) err << "warning: the feature model has no valid configuration\n";
        return kOk;
    });
}

int cmd_explore(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        LoadedModel lm = load_model(cfg, err);
        const Model& m = lm.model;
        Report rep(out, cfg.structured);
        CompositionOptions space = CompositionOptions::plants();
        if (use_explicit(cfg, m, space, rep)) {
            rep.put("engine", "explicit");
            Composition comp(m, space);
            TransitionSystem ts = explore(comp, {cfg.budget});
            ExploreStats st = statistics(comp, ts);
            rep.put("states", st.states);
            rep.put("transitions", st.transitions);
            rep.put("initial", st.initial);
            rep.put("marked", st.marked);
            std::vector<std::string> sizes;
            for (auto c : st.components) sizes.push_back(std::to_string(c));
            rep.put("components", st.components.size());
            rep.put("component-sizes", join(sizes, " "));
            if (cfg.structured)
                for (const auto& [event, count] : st.per_event) rep.put("event." + event, count);
            if (!cfg.dot.empty()) {
                std::ofstream f(cfg.dot);
                if (!f) throw Error("cannot write '" + cfg.dot + "'");
                write_dot(f, comp, ts);
            }
            return kOk;
        }
        if (!cfg.dot.empty()) throw Error("--dot needs the explicit engine");
        rep.put("engine", "symbolic");
        symbolic::SymbolicModel sm(m, space);
        auto reach = sm.reachable();
        rep.put("states", sm.count(reach));
        rep.put("transitions", sm.transition_count(reach));
        rep.put("initial", sm.count(sm.initial() & sm.legal()));
        rep.put("marked", sm.count(reach & sm.marked()));
        if (cfg.structured) {
            for (int e : sm.events()) {
                std::map<int, symbolic::Bdd> only;
                for (int o : sm.events()) only[o] = sm.manager().constant(o == e);
                rep.put("event." + m.events[e].name, sm.transition_count(reach, only));
            }
        }
        return kOk;
    });
}

int cmd_synth(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        LoadedModel lm = load_model(cfg, err);
        const Model& m = lm.model;
        Report rep(out, cfg.structured);
        synth::SynthesisOptions opts;
        opts.budget = cfg.budget;
        opts.engine = use_explicit(cfg, m, synth::synthesis_space(), rep) ? synth::Engine::Explicit : synth::Engine::Symbolic;
        auto res = synth::synthesize(m, opts);
        const auto& r = res.report;
        rep.put("engine", synth::engine_name(r.engine));
        if (r.empty) {
            err << "error: synthesis result is empty: no initial state satisfies the requirements\n";
            rep.put("controlled states", 0);
            return kSynthesisEmpty;
        }
        rep.put("controlled states", r.controlled_states);
        rep.put("controlled transitions", r.controlled_transitions);
        rep.put("good states", r.good_states);
        rep.put("iterations", r.iterations);
        rep.put("peak nodes", r.metrics.peak_nodes);
        rep.put("operations", r.metrics.operations);
        rep.put("seconds", r.seconds);
        for (const auto& g : res.supervisor.guards)
            rep.put("guard nodes " + m.events[g.event].name,
                    std::to_string(g.exact_nodes) + " -> " + std::to_string(g.simplified_nodes));
        std::string text = synth::supervisor_text(m, res.supervisor);
        if (cfg.out.empty()) {
            out << text;
        } else {
            std::ofstream f(cfg.out);
            if (!f) throw Error("cannot write '" + cfg.out + "'");
            f << text;
            std::ofstream d(cfg.out + ".bdd");
            d << res.predicate_dump();
        }
        return kOk;
    });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        LoadedModel lm = load_model(cfg, err);
        const Model& m = lm.model;
        if (!m.has_kind(AutomatonKind::Supervisor)) err << "warning: no supervisor in the input, checking the plants as given\n";
        Report rep(out, cfg.structured);
        synth::VerifyOptions vo;
        vo.budget = cfg.budget;
        auto v = synth::verify_controlled(m, vo);
        synth::ProbeOptions po;
        po.budget = cfg.budget;
        po.seed = cfg.seed;
        auto p = synth::maximality_probe(m, po);
        rep.put("states", v.states);
        rep.put("transitions", v.transitions);
        rep.put("safety", v.safe ? "pass" : "FAIL");
        rep.put("nonblocking", v.nonblocking ? "pass" : "FAIL");
        rep.put("controllability", v.controllable ? "pass" : "FAIL");
        rep.put("maximality", p.passed() ? "pass" : "FAIL");
        rep.put("removed transitions", p.removed);
        rep.put("examined", std::to_string(p.examined) + (p.partial ? " (sampled)" : ""));
        for (const auto& x : v.violations) {
            err << synth::kind_name(x.kind) << ": " << x.message << "\n  state: " << x.state
                << "\n  trace: " << (x.trace.empty() ? "(initial)" : join(x.trace, " ")) << '\n';
        }
        for (std::size_t i = 0; i < p.readdable.size() && i < 3; ++i) {
            const auto& f = p.readdable[i];
            err << "maximality: '" << f.event << "' is disabled but could stay enabled\n  state: " << f.state
                << "\n  trace: " << (f.trace.empty() ? "(initial)" : join(f.trace, " ")) << '\n';
        }
        return v.passed() && p.passed() ? kOk : kDiagnostics;
    });
}

int cmd_lower(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        LoadedModel lm = load_model(cfg, err);
        out << lang::print(lm.lowered);
        return kOk;
    });
}

int cmd_simulate(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        LoadedModel lm = load_model(cfg, err);
        if (cfg.script.empty()) return simulate_session(lm.model, cfg, in, out);
        std::ifstream script(cfg.script);
        if (!script) throw Error("cannot read '" + cfg.script + "'");
        return simulate_session(lm.model, cfg, script, out);
    });
}

}  // namespace fsc::cli
