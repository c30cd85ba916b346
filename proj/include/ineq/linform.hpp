#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ineq/rational.hpp"
#include "ineq/varset.hpp"

namespace ineq {

// Exact linear form  sum_a c_a h_a  over the joint-entropy coordinates of n
// variables. Keys are nonempty subsets of [n]; zero coefficients are never
// stored, so equality is coefficient-wise map equality.
//
// The empty set is not a coordinate: H(X_empty) = 0 identically.
class LinForm {
public:
    explicit LinForm(int n);

    int n() const { return n_; }
    const std::map<VarSet, Rational>& terms() const { return terms_; }
    Rational coeff(VarSet s) const;
    bool is_zero() const { return terms_.empty(); }

    // Adds c to the coefficient of h_s.
    LinForm& add(VarSet s, const Rational& c);
    LinForm& add(const LinForm& other, const Rational& scale = Rational(1));

    LinForm operator+(const LinForm& o) const;
    LinForm operator-(const LinForm& o) const;
    LinForm operator-() const;
    friend LinForm operator*(const Rational& c, const LinForm& f);

    bool operator==(const LinForm& o) const = default;

    // Canonical rendering: "+1 h1 +1 h2 -1 h12", or "0" for the zero form.
    std::string to_string() const;

    // Dense coefficient vector in canonical order, length 2^n - 1.
    std::vector<Rational> dense() const;

private:
    int n_;
    std::map<VarSet, Rational> terms_;
};

// What lf_entropy does with the empty set.
enum class EmptySetPolicy { Reject, ZeroForm };

LinForm lf_entropy(int n, VarSet a, EmptySetPolicy policy = EmptySetPolicy::Reject);
// H(X_a | X_g) = h_{a u g} - h_g
LinForm lf_cond_entropy(int n, VarSet a, VarSet g);
// I(X_a; X_b | X_g) = h_{a u g} + h_{b u g} - h_{a u b u g} - h_g
LinForm lf_mutual(int n, VarSet a, VarSet b, VarSet g = {});

LinForm lf_combine(std::span<const std::pair<Rational, LinForm>> terms);

double evaluate(const LinForm& f, std::span<const double> h);
long double evaluate(const LinForm& f, std::span<const long double> h);
Rational evaluate(const LinForm& f, std::span<const Rational> h);

// True iff for each i the coefficients of subsets containing i sum to zero.
bool is_balanced(const LinForm& f);

} // namespace ineq
