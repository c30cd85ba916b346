#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ineq/linform.hpp"
#include "ineq/models.hpp"

namespace ineq {

struct SearchOptions {
    int alphabet = 2;            // per-variable size unless `alphabets` is given
    std::vector<int> alphabets;
    int budget = 16;             // random restarts per worker
    int iterations = 200;        // coordinate-descent sweeps per restart
    std::uint64_t seed = 1;
    int jobs = 1;
    bool structured = true;      // try functions of uniform sources first
    double violation = 1e-6;     // accept only b.h(p) < -violation (bits)
    double tolerance = 1e-9;     // and |q.h(p)| < tolerance for every constraint
};

struct SearchResult {
    JointPMF pmf;
    double value;
};

// Looks for a pmf with b.h(p) < -violation while every constraint form
// vanishes. Candidates are re-evaluated in long double before acceptance.
std::optional<SearchResult> search_counterexample(const LinForm& b, std::span<const LinForm> constraints,
                                                  const SearchOptions& opts = {});

// The acceptance test applied to any candidate, exposed for re-checking.
bool meets_thresholds(const LinForm& b, std::span<const LinForm> constraints, const JointPMF& p,
                      const SearchOptions& opts, double* value = nullptr);

} // namespace ineq
