#pragma once

#include <cstdint>
#include <string>

#include "fsc/feature/feature_model.hpp"

namespace fsc::testing {

/// Small `.fsc` model with plants, bounded integer variables, requirement
/// invariants, event conditions and requirement automata. Deterministic in `seed`.
std::string random_model(std::uint64_t seed);

/// Random feature tree with 2..max_features features (no attributes) and a
/// few cross-tree constraints. Passes feature::validate.
feature::FeatureModel random_feature_model(std::uint64_t seed, int max_features = 12);

/// Valid configurations counted by a hand-written reading of the constraint
/// kinds, independent of constraint_formula.
std::uint64_t brute_force_configurations(const feature::FeatureModel& fm);

/// Oracle for a single constraint on one presence assignment (bit i = features[i]).
bool constraint_holds(const feature::FeatureModel& fm, const feature::Constraint& c, std::uint64_t config);

}  // namespace fsc::testing
