#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ineq/linform.hpp"

namespace ineq::detail {

// Result of  min b.h  s.t.  G h >= 0, Q h = 0.  The feasible set is a cone, so
// the optimum is either 0 (bounded) or -infinity.
struct ConeLpResult {
    bool bounded = false;
    // bounded: b = sum lambda_i G_i + sum mu_j Q_j, lambda >= 0
    std::vector<Rational> lambda;
    std::vector<Rational> mu;
    // unbounded: primitive integer ray with G r >= 0, Q r = 0, b.r < 0
    std::vector<Rational> ray;
    std::size_t pivots = 0;
};

// Exact rational primal simplex with Bland's rule. Q is reduced to its row
// echelon form first and h is reparametrized over the null space of Q.
ConeLpResult solve_cone_lp(const LinForm& b, std::span<const LinForm> cone, std::span<const LinForm> constraints);

} // namespace ineq::detail
