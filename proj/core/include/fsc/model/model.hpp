#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fsc/error.hpp"
#include "fsc/lang/ast.hpp"
#include "fsc/model/expr.hpp"

namespace fsc {

using lang::AutomatonKind;

struct Enumeration {
    std::string name;
    std::vector<std::string> literals;
};

struct Event {
    std::string name;  // qualified, e.g. "FM.come" or "swap12"
    bool controllable = true;
};

struct DiscVar {
    std::string name;  // qualified, e.g. "PourSugarTwice.count"
    Type type;
    int automaton = -1;
    bool any_initial = false;
    std::int64_t initial = 0;  // when !any_initial
};

struct AlgVar {
    std::string name;  // global "sys_valid" or qualified "FS.cost"
    Type type;
    ExprPtr definition;
};

struct Update {
    int variable = -1;
    ExprPtr value;
};

struct Edge {
    int source = 0;
    int target = 0;
    int event = -1;
    ExprPtr guard;
    std::vector<Update> updates;
    SourceSpan span;
};

struct Location {
    std::string name;  // empty for the anonymous location
    bool initial = false;
    ExprPtr initial_predicate;  // always set; `true` when unconditional
    bool marked = false;
    ExprPtr marked_predicate;
};

struct Automaton {
    std::string name;
    AutomatonKind kind = AutomatonKind::Plant;
    std::vector<Location> locations;
    std::vector<Edge> edges;
    std::vector<int> alphabet;   // sorted event indices
    std::vector<int> monitored;  // sorted subset of alphabet that never blocks
    std::vector<int> discs;      // variables owned (written) by this automaton
    SourceSpan span;

    bool in_alphabet(int event) const;
    bool monitors(int event) const;
    int location_index(const std::string& name) const;
};

struct Invariant {
    AutomatonKind kind = AutomatonKind::Requirement;  // Plant or Requirement
    ExprPtr predicate;
    std::string text;
    SourceSpan span;
};

struct EventCondition {
    int event = -1;
    ExprPtr condition;
    std::string text;
    SourceSpan span;
};

/// Flat, fully resolved specification: every instantiation expanded,
/// every name bound to an index.
struct Model {
    std::vector<Enumeration> enums;
    std::vector<Event> events;
    std::vector<DiscVar> discs;
    std::vector<AlgVar> algs;
    std::vector<Automaton> automata;
    std::vector<Invariant> invariants;
    std::vector<EventCondition> conditions;
    std::vector<Diagnostic> warnings;

    std::optional<int> find_event(const std::string& name) const;
    std::optional<int> find_automaton(const std::string& name) const;
    std::optional<int> find_disc(const std::string& name) const;
    std::optional<int> find_alg(const std::string& name) const;

    std::vector<int> automata_of_kind(AutomatonKind kind) const;
    bool has_kind(AutomatonKind kind) const;
};

/// Listing-style text of a resolved expression with qualified names.
std::string to_string(const Model& m, const ExprPtr& e);
std::string type_name(const Model& m, const Type& t);
std::string value_name(const Model& m, const Type& t, std::int64_t v);

/// Ordered list of alg indices (transitive) used by e; dependencies first.
std::vector<int> algs_used(const Model& m, const ExprPtr& e);
/// True if e mentions no state (disc/loc) through any alg.
bool is_state_independent(const Model& m, const ExprPtr& e);

/// Substitutes algebraic variables by their definitions, recursively.
ExprPtr inline_algs(const Model& m, const ExprPtr& e);

}  // namespace fsc
