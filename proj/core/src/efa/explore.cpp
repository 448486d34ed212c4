#include "fsc/efa/explore.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include <boost/pending/disjoint_sets.hpp>

namespace fsc {

std::uint64_t StateStore::hash(StateView s) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (Value v : s) {
        h ^= static_cast<std::uint32_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
    }
    return h ^ (h >> 33);
}

std::optional<std::uint32_t> StateStore::find(StateView s) const {
    if (table_.empty()) return std::nullopt;
    std::size_t mask = table_.size() - 1;
    for (std::size_t i = hash(s) & mask;; i = (i + 1) & mask) {
        std::uint32_t slot = table_[i];
        if (!slot) return std::nullopt;
        if (std::equal(s.begin(), s.end(), (*this)[slot - 1].begin())) return slot - 1;
    }
}

void StateStore::grow() {
    std::size_t cap = table_.empty() ? 1024 : table_.size() * 2;
    table_.assign(cap, 0);
    std::size_t mask = cap - 1;
    for (std::size_t idx = 0; idx < count_; ++idx) {
        std::size_t i = hash((*this)[idx]) & mask;
        while (table_[i]) i = (i + 1) & mask;
        table_[i] = static_cast<std::uint32_t>(idx + 1);
    }
}

std::pair<std::uint32_t, bool> StateStore::insert(StateView s) {
    if ((count_ + 1) * 2 > table_.size()) grow();
    std::size_t mask = table_.size() - 1;
    std::size_t i = hash(s) & mask;
    for (;; i = (i + 1) & mask) {
        std::uint32_t slot = table_[i];
        if (!slot) break;
        if (std::equal(s.begin(), s.end(), (*this)[slot - 1].begin())) return {slot - 1, false};
    }
    data_.insert(data_.end(), s.begin(), s.end());
    table_[i] = static_cast<std::uint32_t>(++count_);
    return {static_cast<std::uint32_t>(count_ - 1), true};
}

std::size_t TransitionSystem::marked_count() const {
    return static_cast<std::size_t>(std::count(marked.begin(), marked.end(), true));
}

TransitionSystem explore(const Composition& c, const ExploreOptions& options) {
    TransitionSystem ts{StateStore(c.layout().width), {}, {}, {}};
    std::deque<std::uint32_t> queue;
    auto add = [&](StateView s) {
        auto [idx, fresh] = ts.states.insert(s);
        if (fresh) {
            if (ts.states.size() > options.budget) throw BudgetExceeded(options.budget);
            ts.marked.push_back(c.is_marked(s));
            queue.push_back(idx);
        }
        return std::pair{idx, fresh};
    };
    for (const auto& s : c.initial_states(options.budget)) {
        if (!c.satisfies_invariants(s)) continue;
        auto [idx, fresh] = add(s);
        if (fresh) ts.initial.push_back(idx);
    }
    std::vector<Value> buf;
    while (!queue.empty()) {
        std::uint32_t src = queue.front();
        queue.pop_front();
        buf.assign(ts.states[src].begin(), ts.states[src].end());
        for (int ev : c.event_order()) {
            for (const auto& next : c.successors(buf, ev)) {
                auto [dst, fresh] = add(next);
                ts.transitions.push_back({src, ev, dst});
            }
        }
    }
    return ts;
}

std::vector<std::size_t> weak_components(const TransitionSystem& ts) {
    std::size_t n = ts.state_count();
    std::vector<std::size_t> rank(n), parent(n);
    boost::disjoint_sets<std::size_t*, std::size_t*> sets(rank.data(), parent.data());
    for (std::size_t i = 0; i < n; ++i) sets.make_set(i);
    for (const auto& t : ts.transitions) sets.union_set(t.source, t.target);
    std::map<std::size_t, std::size_t> sizes;
    for (std::size_t i = 0; i < n; ++i) ++sizes[sets.find_set(i)];
    std::vector<std::size_t> out;
    for (const auto& [root, size] : sizes) out.push_back(size);
    std::sort(out.rbegin(), out.rend());
    return out;
}

ExploreStats statistics(const Composition& c, const TransitionSystem& ts) {
    ExploreStats st;
    st.states = ts.state_count();
    st.transitions = ts.transitions.size();
    st.initial = ts.initial.size();
    st.marked = ts.marked_count();
    for (const auto& t : ts.transitions) ++st.per_event[c.model().events[t.event].name];
    st.components = weak_components(ts);
    return st;
}

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

}  // namespace

void write_dot(std::ostream& out, const Composition& c, const TransitionSystem& ts) {
    const Model& m = c.model();
    out << "digraph states {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (std::size_t i = 0; i < ts.state_count(); ++i) {
        std::string label = escape(c.describe(ts.states[i]));
        for (std::size_t p = label.find(", "); p != std::string::npos; p = label.find(", ", p))
            label.replace(p, 2, "\\n");
        out << "  s" << i << " [label=\"" << label << "\"";
        if (ts.marked[i]) out << ", peripheries=2";
        out << "];\n";
    }
    for (std::size_t k = 0; k < ts.initial.size(); ++k) {
        out << "  init" << k << " [shape=point];\n";
        out << "  init" << k << " -> s" << ts.initial[k] << ";\n";
    }
    for (const auto& t : ts.transitions) {
        const Event& ev = m.events[t.event];
        out << "  s" << t.source << " -> s" << t.target << " [label=\"" << escape(ev.name) << "\"";
        if (!ev.controllable) out << ", style=dashed";
        out << "];\n";
    }
    out << "}\n";
}

}  // namespace fsc
