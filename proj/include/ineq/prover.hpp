#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ineq/cone.hpp"
#include "ineq/models.hpp"
#include "ineq/parser.hpp"
#include "ineq/search.hpp"

namespace ineq {

enum class Augment { None, Zy98 };

struct ProverOptions {
    Augment augment = Augment::None;
    // Extra inequality rows assumed on top of the elemental cone.
    std::vector<IneqRow> assumptions;
};

// b = sum lambda_i G_i + sum mu_j Q_j exactly, lambda >= 0. Indexed like the
// cone rows and constraints it was produced against.
struct Certificate {
    std::vector<Rational> lambda;
    std::vector<Rational> mu;
};

enum class VerdictKind { Proved, ProvedAugmented, NotImpliedByCone, Disproved, Unknown };

const char* verdict_name(VerdictKind k);

struct Counterexample {
    JointPMF pmf;
    double value;  // b.h(p) in bits
};

struct Verdict {
    VerdictKind kind = VerdictKind::Unknown;
    LinForm objective{1};
    std::vector<IneqRow> cone;
    std::vector<ConstraintRow> constraints;
    std::optional<Certificate> certificate;
    std::optional<std::vector<Rational>> ray;
    std::optional<Counterexample> witness;
};

// Decides b >= 0 over Gamma_n (plus assumptions and, when asked, the ZY98
// instances) intersected with {Q h = 0}.
Verdict verify(const LinForm& b, std::span<const ConstraintRow> constraints, const ProverOptions& opts = {});

bool check_certificate(const LinForm& b, const Certificate& cert, std::span<const IneqRow> cone,
                       std::span<const ConstraintRow> constraints);
// G r >= 0, Q r = 0, b.r < 0, all exact.
bool check_ray(const LinForm& b, std::span<const Rational> ray, std::span<const IneqRow> cone,
               std::span<const ConstraintRow> constraints);

// Searches for a distribution refuting b >= 0 under the constraints.
Verdict disprove(const LinForm& b, std::span<const ConstraintRow> constraints, const SearchOptions& opts = {});

using parse::CiStatement;

enum class ImplicationKind { Implied, NotImplied, Unknown };

const char* implication_name(ImplicationKind k);

struct ImplicationVerdict {
    ImplicationKind kind = ImplicationKind::Unknown;
    Verdict shannon;                      // the cone-level check
    std::optional<Counterexample> witness;
    double conclusion_information = 0;    // I_K(witness) in bits
};

struct ImplicationOptions {
    ProverOptions prover;
    SearchOptions search;
    // I_K must reach this many bits for a witness to count.
    double min_information = 1e-6;
};

ImplicationVerdict implies(int n, std::span<const CiStatement> premises, const CiStatement& conclusion,
                           const ImplicationOptions& opts = {});

// One line per nonzero multiplier:  "lambda <q> : <form> # <provenance>".
void write_certificate(std::ostream& out, const Verdict& v);

} // namespace ineq
