#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ineq/linform.hpp"

namespace ineq {

// H(X_i | X_{[n] - i}) >= 0
struct CondEntropyOrigin {
    int i;
    VarSet rest;
};
// I(X_i; X_j | X_K) >= 0
struct CondMutualOrigin {
    int i;
    int j;
    VarSet k;
};
// A named non-Shannon inequality with its role -> variable assignment.
struct NonShannonOrigin {
    std::string name;
    std::vector<int> assignment;
};
// Anything else: user assumptions, enumerated basic inequalities.
struct OtherOrigin {
    std::string label;
};

using RowOrigin = std::variant<CondEntropyOrigin, CondMutualOrigin, NonShannonOrigin, OtherOrigin>;

std::string describe(const RowOrigin& origin);

// form >= 0
struct IneqRow {
    LinForm form;
    RowOrigin origin;

    std::string describe() const { return ineq::describe(origin); }
};

// form = 0
struct ConstraintRow {
    LinForm form;
    std::string tag;
};

// The elemental inequalities of Gamma_n: n + C(n,2) 2^(n-2) rows, first the
// conditional entropies in order of i, then I(i;j|K) for i<j, K ascending.
std::vector<IneqRow> elemental(int n);

// Every instance of the four basic-inequality templates H(a), I(a;b),
// H(a|g), I(a;b|g) over pairwise disjoint subsets. Exponential; meant for
// small n.
std::vector<IneqRow> basic_inequalities(int n);

// H(X_i | X_a) = 0
ConstraintRow constraint_functional(int n, int i, VarSet a);
// I(X_a; X_b | X_c) = 0
ConstraintRow constraint_ci(int n, VarSet a, VarSet b, VarSet c);
// X_{g1} - X_{g2} - ... - X_{gk}: I(g1..g_{k-2}; g_k | g_{k-1}) = 0 for k >= 3.
std::vector<ConstraintRow> constraint_markov(int n, const std::vector<VarSet>& chain);
// H(X_all) - sum_i H(X_i) = 0
ConstraintRow constraint_mutual_independence(int n, const std::vector<int>& vars);

// I(1;2) + I(1;34) + 3 I(3;4|1) + I(3;4|2) - 2 I(3;4) with roles 1..4
// assigned to the given distinct variables.
LinForm zy98_form(int n, int r1, int r2, int r3, int r4);

// ZY98 over every injective role assignment into [n], deduplicated.
std::vector<IneqRow> zy98_rows(int n);

struct Zy97Problem {
    std::vector<ConstraintRow> constraints;
    LinForm objective;
};

// I(1;2) = I(1;2|3) = 0  implies  I(3;4|1) + I(3;4|2) - I(3;4) >= 0.
Zy97Problem zy97_problem();

} // namespace ineq
