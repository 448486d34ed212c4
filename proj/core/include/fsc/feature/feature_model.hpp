#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fsc/lang/ast.hpp"

namespace fsc::feature {

using lang::AstExprPtr;
using ConstraintKind = lang::ConstraintDecl::Kind;

struct Attribute {
    std::string name;
    lang::TypeRef type;
    AstExprPtr value;
    AstExprPtr absent;  // nullptr: 0 for integers, false for booleans
};

struct Feature {
    std::string name;
    std::vector<Attribute> attributes;
    SourceSpan span;

    const Attribute* attribute(const std::string& name) const;
};

/// One Table 1 constraint. Pairwise kinds (mandatory, optional, requires,
/// excludes) carry exactly one child; alternative and or carry one or more.
struct Constraint {
    ConstraintKind kind = ConstraintKind::Root;
    std::string parent;
    std::vector<std::string> children;
    SourceSpan span;
};

struct FeatureModel {
    std::vector<Feature> features;
    std::vector<Constraint> constraints;
    std::vector<AstExprPtr> attribute_constraints;  // over `sum(attr)` and `F.attr`

    int find(const std::string& name) const;
    std::string root() const;
};

enum class Reconfig { Static, Controllable, Uncontrollable };

struct SwapGroup {
    std::string event;
    bool controllable = false;
    std::vector<std::string> features;
    SourceSpan span;
};

struct ReconfigMode {
    Reconfig default_mode = Reconfig::Static;
    std::map<std::string, Reconfig> per_feature;
    std::vector<SwapGroup> swaps;

    Reconfig mode_of(const std::string& feature) const;
    /// No feature can change at run time.
    bool is_static() const;
};

struct Strictness {
    bool strict = true;
    std::vector<AstExprPtr> relaxed_invariants;
};

/// A `featuremodel` block split into its three parts.
struct FeatureModelSpec {
    FeatureModel model;
    ReconfigMode mode;
    Strictness strictness;
    SourceSpan span;
};

/// Builds the parts of a block; pairwise constraints with several children are split.
FeatureModelSpec from_decl(const lang::FeatureModelDecl& decl);

/// Checks the structural invariants (single root, tree shape, known names,
/// arities, unique attribute names, swap groups). Throws ResolveError.
void validate(const FeatureModel& fm);
void validate(const FeatureModel& fm, const ReconfigMode& mode);

/// `<F>.present`
AstExprPtr presence(const std::string& feature);

/// Boolean formula of a constraint over `<F>.present`.
AstExprPtr constraint_formula(const Constraint& c);

/// Stand-alone automaton for one feature with its attribute values substituted.
lang::AutomatonDecl compile_feature(const Feature& f, Reconfig mode);

/// Adds the shared toggle edge of a swap group to each member automaton.
void compile_swap(const SwapGroup& group, std::vector<lang::AutomatonDecl>& members);

/// Listing-form declarations: feature definitions and instances, one algebraic
/// boolean per constraint, sys_valid, attribute sums and validity booleans,
/// the Validity automaton and the plant invariants implied by the strictness.
lang::SourceSpec compile_feature_model(const FeatureModel& fm, const ReconfigMode& mode, const Strictness& strictness);

/// Replaces the `featuremodel` block of a specification (at most one) by its lowering.
lang::SourceSpec lower(const lang::SourceSpec& spec);
bool has_feature_model(const lang::SourceSpec& spec);
std::optional<FeatureModelSpec> find_feature_model(const lang::SourceSpec& spec);

// ---- configurations ----

/// Presence assignment, bit i for features[i].
using Configuration = std::uint64_t;

/// Direct evaluation of every constraint formula and, if requested, every
/// attribute constraint on one configuration.
bool is_valid_configuration(const FeatureModel& fm, Configuration c, bool with_attributes = true);

/// Brute force over all 2^n assignments; n must be at most 30.
std::uint64_t enumerate_valid_configurations(const FeatureModel& fm, bool with_attributes = true);

}  // namespace fsc::feature
