#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "ineq/linform.hpp"

namespace ineq {

// Joint pmf of n discrete variables, stored row-major: the last variable
// varies fastest.
class JointPMF {
public:
    // Throws InvalidPmf unless probabilities are >= 0 and sum to 1 within 1e-12.
    JointPMF(std::vector<int> alphabet, std::vector<double> prob);

    int n() const { return static_cast<int>(alphabet_.size()); }
    const std::vector<int>& alphabet() const { return alphabet_; }
    const std::vector<double>& probs() const { return prob_; }
    std::size_t atoms() const { return prob_.size(); }

    // Value of variable `var` (1-based) in atom `atom`.
    int value(std::size_t atom, int var) const;

private:
    std::vector<int> alphabet_;
    std::vector<double> prob_;
};

// Entropies in bits indexed by nonempty subsets in canonical order.
struct EntropyVector {
    int n = 0;
    std::vector<double> values;

    double at(VarSet s) const { return values.at(coord_index(s)); }
};

EntropyVector entropy_vector(const JointPMF& p);
// Same quantity computed in long double.
std::vector<long double> entropy_vector_extended(const JointPMF& p);
// H(X_s) alone.
double subset_entropy(const JointPMF& p, VarSet s);

// Dirichlet(1,...,1) table, reproducible from the seed on every platform.
JointPMF random_pmf(int n, const std::vector<int>& alphabet, std::uint64_t seed);

// "n k1 .. kn" then one probability per line in row-major order.
JointPMF read_pmf(std::istream& in);
void write_pmf(std::ostream& out, const JointPMF& p);

} // namespace ineq
