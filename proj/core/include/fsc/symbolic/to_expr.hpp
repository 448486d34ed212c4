#pragma once

#include "fsc/model/expr.hpp"
#include "fsc/symbolic/encoding.hpp"

namespace fsc::symbolic {

/// Expression over the state variables of `sm` equivalent to `f` on the
/// domain: decomposes by state variable, grouping values with equal cofactors.
ExprPtr to_expr(SymbolicModel& sm, const Bdd& f);

}  // namespace fsc::symbolic
