#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fsc/efa/composition.hpp"

namespace fsc {

constexpr std::size_t kDefaultStateBudget = 5'000'000;

/// Flat hash set of fixed-width state vectors; states are numbered in insertion order.
class StateStore {
public:
    explicit StateStore(int width = 0) : width_(width) {}

    int width() const { return width_; }
    std::size_t size() const { return count_; }
    StateView operator[](std::size_t i) const {
        return {data_.data() + i * static_cast<std::size_t>(width_), static_cast<std::size_t>(width_)};
    }
    std::optional<std::uint32_t> find(StateView s) const;
    /// Index of s, inserting it if new; second is true on insertion.
    std::pair<std::uint32_t, bool> insert(StateView s);

private:
    std::uint64_t hash(StateView s) const;
    void grow();

    int width_;
    std::size_t count_ = 0;
    std::vector<Value> data_;
    std::vector<std::uint32_t> table_;  // 0 = empty, otherwise index + 1
};

struct Transition {
    std::uint32_t source = 0;
    std::int32_t event = 0;
    std::uint32_t target = 0;
};

struct TransitionSystem {
    StateStore states;
    std::vector<Transition> transitions;  // sorted by source, then event order of exploration
    std::vector<std::uint32_t> initial;
    std::vector<bool> marked;

    std::size_t state_count() const { return states.size(); }
    std::size_t marked_count() const;
};

struct ExploreOptions {
    std::size_t budget = kDefaultStateBudget;
};

/// Breadth-first closure of the composition from its initial states. States
/// violating an invariant of the composition are never created. Throws BudgetExceeded.
TransitionSystem explore(const Composition& c, const ExploreOptions& options = {});

struct ExploreStats {
    std::size_t states = 0;
    std::size_t transitions = 0;
    std::size_t initial = 0;
    std::size_t marked = 0;
    std::map<std::string, std::size_t> per_event;
    std::vector<std::size_t> components;  // weakly connected, largest first
};

ExploreStats statistics(const Composition& c, const TransitionSystem& ts);
std::vector<std::size_t> weak_components(const TransitionSystem& ts);

/// Graphviz export: dashed edges for uncontrollable events, double periphery for marked states,
/// initial states get an incoming arrow.
void write_dot(std::ostream& out, const Composition& c, const TransitionSystem& ts);

}  // namespace fsc
