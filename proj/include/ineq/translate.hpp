#pragma once

#include <string>
#include <vector>

#include "ineq/linform.hpp"

namespace ineq {

enum class TranslationKind { Group, Minor, Kolmogorov };

// Coefficient of h_set in the source form; the target symbol is derived from
// the set and the kind.
struct TranslatedTerm {
    VarSet set;
    Rational coeff;
};

// One factor of a cleared product form. An empty set stands for |G| (group)
// and the full set renders as |K| (minor).
struct Factor {
    VarSet set;
    Integer exponent;
};

struct TranslatedInequality {
    TranslationKind kind = TranslationKind::Kolmogorov;
    int n = 0;
    std::vector<TranslatedTerm> terms;
    // Product form: prod(big) >= prod(small), exponents primitive integers.
    std::vector<Factor> big;
    std::vector<Factor> small;
    std::string text;      // product form (group, minor) or K(.) form
    std::string log_text;  // additive form
};

// h_a -> log(|G| / |cap_{i in a} G_i|). Every form maps.
TranslatedInequality to_group_inequality(const LinForm& b);
// h_a -> 1/2 log |K_a|; throws Unbalanced unless is_balanced(b).
TranslatedInequality to_minor_inequality(const LinForm& b);
// h_a -> K(x_a).
TranslatedInequality to_kolmogorov(const LinForm& b);

// Rebuilds the source form from the term list.
LinForm to_linform(const TranslatedInequality& t);

// The symbol of one term, e.g. "G_1&G_3", "K_134", "K(x_1,x_3)".
std::string term_symbol(TranslationKind kind, int n, VarSet s);

// {"kind":..,"text":..,"terms":[{"symbol":..,"coefficient":".."}],
//  "big":[{"symbol":..,"exponent":..}],"small":[..]}
std::string to_json(const TranslatedInequality& t);

} // namespace ineq
