#include "ineq/prover.hpp"

#include <algorithm>
#include <ostream>

#include "cone_lp.hpp"
#include "ineq/error.hpp"

namespace ineq {

const char* verdict_name(VerdictKind k)
{
    switch (k) {
    case VerdictKind::Proved: return "proved";
    case VerdictKind::ProvedAugmented: return "proved-augmented";
    case VerdictKind::NotImpliedByCone: return "not-implied-by-cone";
    case VerdictKind::Disproved: return "disproved";
    case VerdictKind::Unknown: return "unknown";
    }
    return "unknown";
}

const char* implication_name(ImplicationKind k)
{
    switch (k) {
    case ImplicationKind::Implied: return "implied";
    case ImplicationKind::NotImplied: return "not-implied";
    case ImplicationKind::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

void check_context(const LinForm& b, std::span<const ConstraintRow> constraints, std::span<const IneqRow> extra)
{
    for (const auto& q : constraints)
        if (q.form.n() != b.n())
            throw Error(Errc::DimensionMismatch, "constraint '" + q.tag + "' is over " + std::to_string(q.form.n()) +
                                                     " variables, objective over " + std::to_string(b.n()));
    for (const auto& g : extra)
        if (g.form.n() != b.n())
            throw Error(Errc::DimensionMismatch, "assumption '" + g.describe() + "' over a different variable count");
}

Verdict solve(const LinForm& b, std::vector<IneqRow> cone, std::span<const ConstraintRow> constraints)
{
    std::vector<LinForm> g, q;
    g.reserve(cone.size());
    for (const auto& r : cone)
        g.push_back(r.form);
    for (const auto& r : constraints)
        q.push_back(r.form);
    auto lp = detail::solve_cone_lp(b, g, q);

    Verdict v;
    v.objective = b;
    v.cone = std::move(cone);
    v.constraints.assign(constraints.begin(), constraints.end());
    if (lp.bounded) {
        v.kind = VerdictKind::Proved;
        v.certificate = Certificate{std::move(lp.lambda), std::move(lp.mu)};
        if (!check_certificate(b, *v.certificate, v.cone, v.constraints))
            throw Error(Errc::Internal, "certificate failed its exact check");
    } else {
        v.kind = VerdictKind::NotImpliedByCone;
        v.ray = std::move(lp.ray);
        if (!check_ray(b, *v.ray, v.cone, v.constraints))
            throw Error(Errc::Internal, "ray failed its exact check");
    }
    return v;
}

} // namespace

Verdict verify(const LinForm& b, std::span<const ConstraintRow> constraints, const ProverOptions& opts)
{
    check_context(b, constraints, opts.assumptions);
    std::vector<IneqRow> cone = elemental(b.n());
    cone.insert(cone.end(), opts.assumptions.begin(), opts.assumptions.end());
    Verdict plain = solve(b, cone, constraints);
    if (plain.kind == VerdictKind::Proved || opts.augment == Augment::None || b.n() < 4)
        return plain;

    std::size_t base = cone.size();
    for (auto& r : zy98_rows(b.n()))
        cone.push_back(std::move(r));
    Verdict aug = solve(b, std::move(cone), constraints);
    if (aug.kind == VerdictKind::Proved) {
        for (std::size_t i = base; i < aug.cone.size(); ++i)
            if (sgn(aug.certificate->lambda[i]) > 0)
                aug.kind = VerdictKind::ProvedAugmented;
    }
    return aug;
}

bool check_certificate(const LinForm& b, const Certificate& cert, std::span<const IneqRow> cone,
                       std::span<const ConstraintRow> constraints)
{
    if (cert.lambda.size() != cone.size() || cert.mu.size() != constraints.size())
        return false;
    LinForm sum(b.n());
    try {
        for (std::size_t i = 0; i < cone.size(); ++i) {
            if (sgn(cert.lambda[i]) < 0)
                return false;
            if (sgn(cert.lambda[i]) != 0)
                sum.add(cone[i].form, cert.lambda[i]);
        }
        for (std::size_t j = 0; j < constraints.size(); ++j)
            if (sgn(cert.mu[j]) != 0)
                sum.add(constraints[j].form, cert.mu[j]);
    } catch (const Error&) {
        return false;
    }
    return sum == b;
}

bool check_ray(const LinForm& b, std::span<const Rational> ray, std::span<const IneqRow> cone,
               std::span<const ConstraintRow> constraints)
{
    if (ray.size() != static_cast<std::size_t>(num_coords(b.n())))
        return false;
    for (const auto& g : cone)
        if (g.form.n() != b.n() || sgn(evaluate(g.form, ray)) < 0)
            return false;
    for (const auto& q : constraints)
        if (q.form.n() != b.n() || sgn(evaluate(q.form, ray)) != 0)
            return false;
    return sgn(evaluate(b, ray)) < 0;
}

Verdict disprove(const LinForm& b, std::span<const ConstraintRow> constraints, const SearchOptions& opts)
{
    check_context(b, constraints, {});
    std::vector<LinForm> q;
    for (const auto& r : constraints)
        q.push_back(r.form);
    Verdict v;
    v.objective = b;
    v.constraints.assign(constraints.begin(), constraints.end());
    if (auto found = search_counterexample(b, q, opts)) {
        v.kind = VerdictKind::Disproved;
        v.witness = Counterexample{found->pmf, found->value};
    } else {
        v.kind = VerdictKind::Unknown;
    }
    return v;
}

ImplicationVerdict implies(int n, std::span<const CiStatement> premises, const CiStatement& conclusion,
                           const ImplicationOptions& opts)
{
    std::vector<ConstraintRow> q;
    for (const auto& p : premises)
        q.push_back(constraint_ci(n, p.a, p.b, p.c));
    LinForm target = lf_mutual(n, conclusion.a, conclusion.b, conclusion.c);

    ImplicationVerdict out;
    // I_K >= 0 already holds on Gamma_n, so I_K = 0 follows iff -I_K >= 0 does.
    out.shannon = verify(-target, q, opts.prover);
    if (out.shannon.kind == VerdictKind::Proved || out.shannon.kind == VerdictKind::ProvedAugmented) {
        out.kind = ImplicationKind::Implied;
        return out;
    }
    SearchOptions search = opts.search;
    search.violation = std::max(search.violation, opts.min_information);
    std::vector<LinForm> forms;
    for (const auto& r : q)
        forms.push_back(r.form);
    if (auto found = search_counterexample(-target, forms, search)) {
        out.kind = ImplicationKind::NotImplied;
        out.witness = Counterexample{found->pmf, found->value};
        out.conclusion_information = -found->value;
    } else {
        out.kind = ImplicationKind::Unknown;
    }
    return out;
}

void write_certificate(std::ostream& out, const Verdict& v)
{
    if (!v.certificate)
        return;
    for (std::size_t i = 0; i < v.cone.size(); ++i)
        if (sgn(v.certificate->lambda[i]) != 0)
            out << "lambda " << to_string(v.certificate->lambda[i]) << " : " << v.cone[i].form.to_string() << " # "
                << v.cone[i].describe() << '\n';
    for (std::size_t j = 0; j < v.constraints.size(); ++j)
        if (sgn(v.certificate->mu[j]) != 0)
            out << "mu " << to_string(v.certificate->mu[j]) << " : " << v.constraints[j].form.to_string() << " # "
                << v.constraints[j].tag << '\n';
}

} // namespace ineq
