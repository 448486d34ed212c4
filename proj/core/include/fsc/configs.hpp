#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fsc/bdd/bdd.hpp"
#include "fsc/feature/feature_model.hpp"
#include "fsc/model/model.hpp"

namespace fsc {

struct ConfigurationCount {
    bdd::BigInt count = 0;
    std::vector<std::string> variables;  // state variables the predicate ranges over
    std::string predicate;
    bool cross_checked = false;  // also counted by enumeration
};

/// Counts the assignments of the variables read by the validity predicate of
/// `m`: the initial predicate of the automaton `Validity`, otherwise the
/// algebraic variable `sys_valid`. Assignments are enumerated as a cross
/// check when there are at most `enumerate_limit` of them. Throws Error.
ConfigurationCount count_configurations(const Model& m, std::uint64_t enumerate_limit = 1u << 20);

/// Valid configurations of a feature model by BDD model counting, attribute
/// constraints included.
bdd::BigInt count_valid_configurations(const feature::FeatureModel& fm);

}  // namespace fsc
