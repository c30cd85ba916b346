#include "ineq/cone.hpp"

#include <algorithm>

#include "ineq/error.hpp"

namespace ineq {

namespace {

std::string cond_label(VarSet k)
{
    if (k.empty())
        return "";
    std::string out = "|{";
    for (int i : k.indices())
        out += (out.size() > 2 ? "," : "") + std::to_string(i);
    return out + "}";
}

struct Describer {
    std::string operator()(const CondEntropyOrigin& o) const
    {
        return "elemental H(" + std::to_string(o.i) + cond_label(o.rest) + ")";
    }
    std::string operator()(const CondMutualOrigin& o) const
    {
        return "elemental I(" + std::to_string(o.i) + ";" + std::to_string(o.j) + cond_label(o.k) + ")";
    }
    std::string operator()(const NonShannonOrigin& o) const
    {
        std::string out = o.name + " [";
        for (std::size_t k = 0; k < o.assignment.size(); ++k)
            out += (k ? "," : "") + std::to_string(o.assignment[k]);
        return out + "]";
    }
    std::string operator()(const OtherOrigin& o) const { return o.label; }
};

std::string measure_label(char kind, VarSet a, VarSet b, VarSet g)
{
    std::string out(1, kind);
    out += "(" + a.group_label();
    if (kind == 'I')
        out += ";" + b.group_label();
    return out + cond_label(g) + ")";
}

} // namespace

std::string describe(const RowOrigin& origin)
{
    return std::visit(Describer{}, origin);
}

std::vector<IneqRow> elemental(int n)
{
    check_var_count(n);
    std::vector<IneqRow> rows;
    VarSet all = VarSet::full(n);
    for (int i = 1; i <= n; ++i) {
        VarSet si = VarSet::singleton(i);
        rows.push_back({lf_cond_entropy(n, si, all - si), CondEntropyOrigin{i, all - si}});
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            VarSet pair = VarSet::of({i, j});
            VarSet rest = all - pair;
            // all subsets of rest, ascending by mask
            std::uint32_t r = rest.bits();
            std::vector<std::uint32_t> subs;
            for (std::uint32_t k = r;; k = (k - 1) & r) {
                subs.push_back(k);
                if (k == 0)
                    break;
            }
            std::sort(subs.begin(), subs.end());
            for (auto k : subs) {
                VarSet ks = VarSet::from_bits(k);
                rows.push_back({lf_mutual(n, VarSet::singleton(i), VarSet::singleton(j), ks), CondMutualOrigin{i, j, ks}});
            }
        }
    }
    return rows;
}

std::vector<IneqRow> basic_inequalities(int n)
{
    check_var_count(n);
    std::vector<IneqRow> rows;
    // assign each variable to one of: none, alpha, beta, gamma
    std::size_t total = 1;
    for (int i = 0; i < n; ++i)
        total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
        std::uint32_t a = 0, b = 0, g = 0;
        std::size_t c = code;
        for (int i = 0; i < n; ++i, c /= 4) {
            switch (c % 4) {
            case 1: a |= 1u << i; break;
            case 2: b |= 1u << i; break;
            case 3: g |= 1u << i; break;
            default: break;
            }
        }
        VarSet sa = VarSet::from_bits(a), sb = VarSet::from_bits(b), sg = VarSet::from_bits(g);
        if (sa.empty())
            continue;
        if (sb.empty()) {
            // H(a) or H(a|g)
            rows.push_back({lf_cond_entropy(n, sa, sg), OtherOrigin{"basic " + measure_label('H', sa, sb, sg)}});
        } else if (a < b) {
            // I(a;b|g) is symmetric in a, b
            rows.push_back({lf_mutual(n, sa, sb, sg), OtherOrigin{"basic " + measure_label('I', sa, sb, sg)}});
        }
    }
    return rows;
}

ConstraintRow constraint_functional(int n, int i, VarSet a)
{
    VarSet si = VarSet::singleton(i);
    if (a.contains(i))
        throw Error(Errc::DisjointnessViolated, "X" + std::to_string(i) + " cannot be a function of a set containing it");
    return {lf_cond_entropy(n, si, a), "functional " + measure_label('H', si, {}, a) + "=0"};
}

ConstraintRow constraint_ci(int n, VarSet a, VarSet b, VarSet c)
{
    return {lf_mutual(n, a, b, c), "ci " + measure_label('I', a, b, c) + "=0"};
}

std::vector<ConstraintRow> constraint_markov(int n, const std::vector<VarSet>& chain)
{
    if (chain.size() < 3)
        throw Error(Errc::InvalidArgument, "a Markov chain needs at least three groups");
    VarSet seen;
    for (VarSet g : chain) {
        if (g.empty())
            throw Error(Errc::EmptySet, "empty group in Markov chain");
        if (!seen.disjoint(g))
            throw Error(Errc::DisjointnessViolated, "Markov chain groups overlap");
        seen = seen | g;
    }
    std::vector<ConstraintRow> rows;
    VarSet past = chain[0];
    for (std::size_t k = 2; k < chain.size(); ++k) {
        rows.push_back({lf_mutual(n, past, chain[k], chain[k - 1]),
                        "markov " + measure_label('I', past, chain[k], chain[k - 1]) + "=0"});
        past = past | chain[k - 1];
    }
    return rows;
}

ConstraintRow constraint_mutual_independence(int n, const std::vector<int>& vars)
{
    if (vars.size() < 2)
        throw Error(Errc::InvalidArgument, "mutual independence needs at least two variables");
    VarSet all;
    LinForm f(n);
    for (int v : vars) {
        VarSet s = VarSet::singleton(v);
        if (all.contains(v))
            throw Error(Errc::DisjointnessViolated, "variable " + std::to_string(v) + " listed twice");
        all = all | s;
        f.add(lf_entropy(n, s), Rational(-1));
    }
    f.add(lf_entropy(n, all));
    return {f, "independent " + all.group_label()};
}

LinForm zy98_form(int n, int r1, int r2, int r3, int r4)
{
    auto s = [](int i) { return VarSet::singleton(i); };
    if (VarSet::of({r1, r2, r3, r4}).size() != 4)
        throw Error(Errc::DisjointnessViolated, "ZY98 roles need four distinct variables");
    LinForm f(n);
    f.add(lf_mutual(n, s(r1), s(r2)));
    f.add(lf_mutual(n, s(r1), s(r3) | s(r4)));
    f.add(lf_mutual(n, s(r3), s(r4), s(r1)), Rational(3));
    f.add(lf_mutual(n, s(r3), s(r4), s(r2)));
    f.add(lf_mutual(n, s(r3), s(r4)), Rational(-2));
    return f;
}

std::vector<IneqRow> zy98_rows(int n)
{
    if (n < 4)
        throw Error(Errc::OutOfRange, "ZY98 needs at least four variables");
    check_var_count(n);
    std::vector<IneqRow> rows;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int d = 1; d <= n; ++d) {
                    if (VarSet::of({a, b, c, d}).size() != 4)
                        continue;
                    LinForm f = zy98_form(n, a, b, c, d);
                    bool dup = std::any_of(rows.begin(), rows.end(), [&](const IneqRow& r) { return r.form == f; });
                    if (!dup)
                        rows.push_back({std::move(f), NonShannonOrigin{"zy98", {a, b, c, d}}});
                }
    return rows;
}

Zy97Problem zy97_problem()
{
    const int n = 4;
    auto s = [](int i) { return VarSet::singleton(i); };
    Zy97Problem p{{}, LinForm(n)};
    p.constraints.push_back(constraint_ci(n, s(1), s(2), {}));
    p.constraints.push_back(constraint_ci(n, s(1), s(2), s(3)));
    p.objective.add(lf_mutual(n, s(3), s(4), s(1)));
    p.objective.add(lf_mutual(n, s(3), s(4), s(2)));
    p.objective.add(lf_mutual(n, s(3), s(4)), Rational(-1));
    return p;
}

} // namespace ineq
