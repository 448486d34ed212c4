#pragma once

#include <cstdint>

#include "fsc/lang/ast.hpp"
#include "fsc/model/model.hpp"

namespace fsc {

struct ResolveOptions {
    /// Range given to `disc int` variables declared without bounds.
    std::int64_t default_int_lo = 0;
    std::int64_t default_int_hi = 255;
};

/// Expands instantiations, binds names, type-checks and flattens a parsed
/// specification. `featuremodel` blocks must have been lowered already.
/// Throws ResolveError.
Model resolve(const lang::SourceSpec& spec, const ResolveOptions& options = {});

/// Value of a state-independent expression; nullopt if it reads state.
std::optional<std::int64_t> constant_value(const Model& m, const ExprPtr& e);

}  // namespace fsc
