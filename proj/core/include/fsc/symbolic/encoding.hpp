#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "fsc/bdd/bdd.hpp"
#include "fsc/efa/composition.hpp"
#include "fsc/efa/eval.hpp"
#include "fsc/model/model.hpp"

namespace fsc::symbolic {

using bdd::BigInt;
using bdd::Bdd;
using Scope = Composition::Scope;

struct EncodingOptions {
    /// Upper bound on the number of current-state bits.
    std::size_t max_bits = 4096;
    std::size_t cache_bits = 20;
    /// Variable order by state-variable name (automaton names for locations);
    /// unnamed variables follow in declaration order. Empty: declaration order.
    std::vector<std::string> order;
};

/// (value, condition) pairs with pairwise disjoint conditions.
using Partition = std::vector<std::pair<std::int64_t, Bdd>>;

/// Bit-level encoding of a composition: one state variable per member
/// automaton location pointer (ceil(log2 n) bits) and per discrete variable,
/// current and next bits interleaved.
class SymbolicModel {
public:
    struct Variable {
        std::string name;
        int automaton = -1;  // location pointer of this automaton
        int disc = -1;       // or this discrete variable
        std::int64_t lo = 0;
        std::uint64_t size = 1;
        std::vector<unsigned> bits;  // bit positions, most significant first
    };

    SymbolicModel(const Model& m, const CompositionOptions& options, const EncodingOptions& encoding = {});
    SymbolicModel(const SymbolicModel&) = delete;
    SymbolicModel& operator=(const SymbolicModel&) = delete;

    const Model& model() const { return *m_; }
    const CompositionOptions& options() const { return opt_; }
    bdd::Manager& manager() { return mgr_; }
    const Composition& composition() const { return comp_; }
    const std::vector<Variable>& variables() const { return vars_; }
    std::size_t bit_count() const { return bit_count_; }
    const std::vector<unsigned>& current_vars() const { return cur_vars_; }
    static unsigned cur(unsigned bit) { return 2 * bit; }
    static unsigned next(unsigned bit) { return 2 * bit + 1; }
    int variable_of_automaton(int a) const { return automaton_var_[a]; }
    int variable_of_disc(int d) const { return disc_var_[d]; }
    /// Events with a participant in the composition, lexicographic.
    const std::vector<int>& events() const { return comp_.event_order(); }

    Bdd value_is(int var, std::int64_t value, bool next = false);
    Bdd unchanged(int var);
    Bdd domain();
    /// Domain and the invariants of the composition.
    Bdd legal();
    /// Domain and plant invariants.
    Bdd plant_legal();
    Bdd initial();
    Bdd marked();
    Bdd predicate(const ExprPtr& e);
    Partition values(const ExprPtr& e);
    /// Conjunction of the event conditions of `event`, or true.
    Bdd condition(int event);

    /// Per-event relation over the bits of the participants; the remaining
    /// variables keep their values implicitly.
    Bdd relation(int event, Scope scope = Scope::All);
    /// Legal successors of `s` under event.
    Bdd image(const Bdd& s, int event, Scope scope = Scope::All);
    /// States with an event-successor in `s`.
    Bdd preimage(const Bdd& s, int event, Scope scope = Scope::All);
    /// States where the event is enabled (towards a legal state).
    Bdd enabled(int event, Scope scope = Scope::All);
    /// Like enabled(), ignoring event conditions.
    Bdd enabled_unconditioned(int event);
    /// `s` with the written variables of `event` moved to next-state bits.
    Bdd to_next(const Bdd& s, int event);

    /// Least fixpoint of the image from `from`; each step keeps only states in `within`.
    Bdd reachable(const Bdd& from, const Bdd& within);
    Bdd reachable();
    /// States in `within` from which `target` is reachable inside `within`.
    Bdd coreachable(const Bdd& target, const Bdd& within);

    BigInt count(const Bdd& states);
    /// Number of (source, event, target) triples with source and target in
    /// `states`; `guards` optionally restricts sources per event.
    BigInt transition_count(const Bdd& states, const std::map<int, Bdd>& guards = {});
    /// Product of location counts and variable domain sizes.
    BigInt worst_case_product() const;

    Bdd encode(StateView s);
    /// Some state of a nonempty set, in the layout of the composition.
    std::vector<Value> pick(const Bdd& s);
    /// Bits of the given variables (current) as a cube.
    Bdd current_cube(const std::vector<int>& vars);

    int iterations() const { return iterations_; }

private:
    struct EventData {
        bool built = false;
        Bdd relation;
        Bdd quantify_cur;
        Bdd quantify_next;
        std::vector<unsigned> to_cur;
        std::vector<unsigned> to_next;
        std::vector<int> written;
    };

    Bdd bool_of(const Partition& p);
    Partition combine(const Partition& a, const Partition& b, BinaryOp op);
    Bdd participant_relation(const Composition::Participant& p, int event);
    EventData& event_data(int event, Scope scope, bool conditions = true);
    Bdd assign(int var, const Partition& value);

    const Model* m_;
    CompositionOptions opt_;
    Composition comp_;
    bdd::Manager mgr_;
    std::vector<Variable> vars_;
    std::vector<int> automaton_var_;
    std::vector<int> disc_var_;
    std::size_t bit_count_ = 0;
    std::vector<unsigned> cur_vars_;
    std::unordered_map<int, Partition> alg_values_;
    std::unordered_map<int, Bdd> alg_preds_;
    std::map<std::tuple<int, int, bool>, EventData> events_;
    Bdd domain_, legal_, plant_legal_;
    int iterations_ = 0;
};

}  // namespace fsc::symbolic
