#include "ineq/linform.hpp"

#include "ineq/error.hpp"

namespace ineq {

namespace {

void check_subset(int n, VarSet s, const char* what)
{
    if (!s.within(n))
        throw Error(Errc::OutOfRange, std::string(what) + " {" + s.coord_label() + "} not within 1.." + std::to_string(n));
}

template <typename T>
void check_dimension(const LinForm& f, std::span<const T> h)
{
    if (h.size() != static_cast<std::size_t>(num_coords(f.n())))
        throw Error(Errc::DimensionMismatch, "vector of length " + std::to_string(h.size()) + " for n = " +
                                                 std::to_string(f.n()) + " (expected " + std::to_string(num_coords(f.n())) + ")");
}

} // namespace

LinForm::LinForm(int n) : n_(n)
{
    check_var_count(n);
}

Rational LinForm::coeff(VarSet s) const
{
    auto it = terms_.find(s);
    return it == terms_.end() ? Rational(0) : it->second;
}

LinForm& LinForm::add(VarSet s, const Rational& c)
{
    if (s.empty())
        throw Error(Errc::EmptySet, "the empty set is not an entropy coordinate");
    check_subset(n_, s, "coordinate");
    if (sgn(c) == 0)
        return *this;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
    return *this;
}

LinForm& LinForm::add(const LinForm& other, const Rational& scale)
{
    if (other.n_ != n_)
        throw Error(Errc::ContextMismatch, "forms over " + std::to_string(n_) + " and " + std::to_string(other.n_) + " variables");
    for (const auto& [s, c] : other.terms_)
        add(s, scale * c);
    return *this;
}

LinForm LinForm::operator+(const LinForm& o) const
{
    LinForm r = *this;
    r.add(o);
    return r;
}

LinForm LinForm::operator-(const LinForm& o) const
{
    LinForm r = *this;
    r.add(o, Rational(-1));
    return r;
}

LinForm LinForm::operator-() const
{
    LinForm r(n_);
    r.add(*this, Rational(-1));
    return r;
}

LinForm operator*(const Rational& c, const LinForm& f)
{
    LinForm r(f.n_);
    r.add(f, c);
    return r;
}

std::string LinForm::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [s, c] : terms_) {
        if (!out.empty())
            out += ' ';
        out += sgn(c) > 0 ? "+" : "";
        out += ineq::to_string(c);
        out += " h";
        out += s.coord_label();
    }
    return out;
}

std::vector<Rational> LinForm::dense() const
{
    std::vector<Rational> v(num_coords(n_));
    for (const auto& [s, c] : terms_)
        v[coord_index(s)] = c;
    return v;
}

LinForm lf_entropy(int n, VarSet a, EmptySetPolicy policy)
{
    LinForm f(n);
    if (a.empty()) {
        if (policy == EmptySetPolicy::ZeroForm)
            return f;
        throw Error(Errc::EmptySet, "H of the empty set is identically 0");
    }
    f.add(a, Rational(1));
    return f;
}

LinForm lf_cond_entropy(int n, VarSet a, VarSet g)
{
    if (a.empty())
        throw Error(Errc::EmptySet, "conditional entropy of an empty set");
    if (!a.disjoint(g))
        throw Error(Errc::DisjointnessViolated, "H(" + a.group_label() + "|" + g.group_label() + ") with overlapping sets");
    LinForm f(n);
    check_subset(n, a | g, "set");
    f.add(a | g, Rational(1));
    if (!g.empty())
        f.add(g, Rational(-1));
    return f;
}

LinForm lf_mutual(int n, VarSet a, VarSet b, VarSet g)
{
    if (a.empty() || b.empty())
        throw Error(Errc::EmptySet, "mutual information with an empty argument");
    if (!a.disjoint(b) || !a.disjoint(g) || !b.disjoint(g))
        throw Error(Errc::DisjointnessViolated,
                    "I(" + a.group_label() + ";" + b.group_label() + "|" + g.group_label() + ") with overlapping sets");
    LinForm f(n);
    check_subset(n, a | b | g, "set");
    f.add(a | g, Rational(1));
    f.add(b | g, Rational(1));
    f.add(a | b | g, Rational(-1));
    if (!g.empty())
        f.add(g, Rational(-1));
    return f;
}

LinForm lf_combine(std::span<const std::pair<Rational, LinForm>> terms)
{
    if (terms.empty())
        throw Error(Errc::InvalidArgument, "lf_combine needs at least one term to fix n");
    LinForm out(terms.front().second.n());
    for (const auto& [c, f] : terms)
        out.add(f, c);
    return out;
}

double evaluate(const LinForm& f, std::span<const double> h)
{
    check_dimension(f, h);
    double sum = 0.0;
    for (const auto& [s, c] : f.terms())
        sum += c.get_d() * h[coord_index(s)];
    return sum;
}

long double evaluate(const LinForm& f, std::span<const long double> h)
{
    check_dimension(f, h);
    long double sum = 0.0L;
    for (const auto& [s, c] : f.terms())
        sum += static_cast<long double>(c.get_num().get_d()) / static_cast<long double>(c.get_den().get_d()) * h[coord_index(s)];
    return sum;
}

Rational evaluate(const LinForm& f, std::span<const Rational> h)
{
    check_dimension(f, h);
    Rational sum(0);
    for (const auto& [s, c] : f.terms())
        sum += c * h[coord_index(s)];
    return sum;
}

bool is_balanced(const LinForm& f)
{
    for (int i = 1; i <= f.n(); ++i) {
        Rational total(0);
        for (const auto& [s, c] : f.terms())
            if (s.contains(i))
                total += c;
        if (sgn(total) != 0)
            return false;
    }
    return true;
}

} // namespace ineq
