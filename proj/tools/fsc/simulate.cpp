#include <istream>
#include <ostream>
#include <random>

#include "cli.hpp"
#include "fsc/efa/composition.hpp"
#include "fsc/synth/problem.hpp"

namespace fsc::cli {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool is_reconfiguration(const Model& m, const Composition& c, int event) {
    for (const auto& p : c.participants(event))
        if (m.find_disc(m.automata[p.automaton].name + ".present")) return true;
    return false;
}

class Session {
public:
    Session(const Model& m, const RunConfig& cfg, std::ostream& out)
        : m_(m), comp_(m, synth::controlled_space()), free_(m, unsupervised()), out_(out), rng_(cfg.seed) {
        for (auto& s : comp_.initial_states())
            if (comp_.satisfies_invariants(s)) initial_.push_back(std::move(s));
    }

    int run(std::istream& in) {
        if (initial_.empty()) {
            out_ << "no initial state\n";
            return kDiagnostics;
        }
        state_ = initial_.front();
        out_ << "initial states: " << initial_.size() << '\n';
        show_state();
        show_enabled();
        std::string line;
        while (std::getline(in, line)) {
            line = trim(line);
            if (line.empty() || line.rfind("//", 0) == 0) continue;
            if (line == "quit" || line == "exit") break;
            if (line == "state") {
                show_state();
            } else if (line == "enabled") {
                show_enabled();
            } else if (line.rfind("initial", 0) == 0) {
                select_initial(trim(line.substr(7)));
            } else {
                fire(line);
            }
        }
        out_ << "final ";
        show_state();
        return kOk;
    }

private:
    static CompositionOptions unsupervised() {
        CompositionOptions o = synth::controlled_space();
        o.supervisors = false;
        return o;
    }

    void show_state() {
        out_ << "state: " << comp_.describe(state_) << (comp_.is_marked(state_) ? " [marked]" : "") << '\n';
    }

    void show_enabled() {
        out_ << "enabled:";
        bool any = false;
        for (int e : comp_.event_order()) {
            if (!comp_.is_enabled(state_, e)) continue;
            any = true;
            out_ << "\n  " << (m_.events[e].controllable ? "[c] " : "[u] ") << m_.events[e].name;
            if (is_reconfiguration(m_, comp_, e)) out_ << "  (reconfiguration)";
        }
        out_ << (any ? "\n" : " none\n");
    }

    void select_initial(const std::string& arg) {
        std::size_t k = 0;
        try {
            k = std::stoul(arg);
        } catch (const std::exception&) {
            out_ << "initial expects an index below " << initial_.size() << '\n';
            return;
        }
        if (k >= initial_.size()) {
            out_ << "initial expects an index below " << initial_.size() << '\n';
            return;
        }
        state_ = initial_[k];
        show_state();
    }

    std::vector<Value> project(const StateView s) const {
        const StateLayout& from = comp_.layout();
        const StateLayout& to = free_.layout();
        std::vector<Value> out(to.width);
        for (int slot = 0; slot < to.width; ++slot) {
            int a = to.slot_automaton[slot];
            out[slot] = s[a >= 0 ? from.automaton_slot[a] : from.disc_slot[to.slot_disc[slot]]];
        }
        return out;
    }

    /// Guards of the supervisors that keep `event` disabled, or empty.
    std::string supervisor_guard(int event) const {
        const StateLayout& layout = comp_.layout();
        std::string text;
        for (const auto& p : comp_.participants(event)) {
            const Automaton& a = m_.automata[p.automaton];
            if (a.kind != AutomatonKind::Supervisor || p.monitor) continue;
            const auto& edges = p.edges_by_location[state_[layout.automaton_slot[p.automaton]]];
            bool enabled = false;
            std::string guards;
            for (int e : edges) {
                if (holds(m_, layout, a.edges[e].guard, state_)) enabled = true;
                guards += (guards.empty() ? "" : " or ") + to_string(m_, a.edges[e].guard);
            }
            if (enabled) continue;
            text += (text.empty() ? "" : "; ") + (guards.empty() ? std::string("false") : guards);
        }
        return text;
    }

    void fire(const std::string& name) {
        auto e = m_.find_event(name);
        if (!e) {
            out_ << "unknown event '" << name << "'\n";
            return;
        }
        auto next = comp_.successors(state_, *e);
        if (next.empty()) {
            if (free_.is_enabled(project(state_), *e)) {
                out_ << "disabled by supervisor guard: " << supervisor_guard(*e) << '\n';
            } else {
                out_ << "event '" << name << "' is not enabled\n";
            }
            return;
        }
        std::size_t pick = next.size() == 1 ? 0 : std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng_);
        state_ = next[pick];
        out_ << "> " << name << '\n';
        show_state();
    }

    const Model& m_;
    Composition comp_;
    Composition free_;
    std::ostream& out_;
    std::mt19937_64 rng_;
    std::vector<std::vector<Value>> initial_;
    std::vector<Value> state_;
};

}  // namespace

int simulate_session(const Model& m, const RunConfig& cfg, std::istream& in, std::ostream& out) {
    Session s(m, cfg, out);
    return s.run(in);
}

}  // namespace fsc::cli
