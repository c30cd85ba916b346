#include "ineq/rational.hpp"

#include <cmath>

#include "ineq/error.hpp"

namespace ineq {

Rational make_rational(long num, long den)
{
    if (den == 0)
        throw Error(Errc::InvalidArgument, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (!s.empty() && s.front() == '+')
        s.erase(0, 1);
    auto bad = [&] { return Error(Errc::InvalidArgument, "not a rational: '" + std::string(text) + "'"); };
    if (s.empty())
        throw bad();
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (dot != std::string::npos && slash == std::string::npos) {
        // Terminating decimal, read exactly.
        std::string frac = s.substr(dot + 1);
        std::string whole = s.substr(0, dot);
        bool neg = !whole.empty() && whole.front() == '-';
        if (neg)
            whole.erase(0, 1);
        if ((whole.empty() && frac.empty()) || whole.find_first_not_of("0123456789") != std::string::npos ||
            frac.find_first_not_of("0123456789") != std::string::npos)
            throw bad();
        Integer den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            den *= 10;
        Rational q(Integer((whole.empty() ? "0" : whole) + frac, 10), den);
        q.canonicalize();
        return neg ? Rational(-q) : q;
    }
    auto digits_ok = [](const std::string& part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < part.size() && part[i] == '-')
            ++i;
        if (i == part.size())
            return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw bad();
    Integer d(den, 10);
    if (d == 0)
        throw Error(Errc::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    Rational q(Integer(num, 10), d);
    q.canonicalize();
    return q;
}

double to_double(const Rational& q)
{
    return q.get_d();
}

Rational exact_from_double(double x)
{
    if (!std::isfinite(x))
        throw Error(Errc::InvalidArgument, "non-finite value");
    return Rational(x);
}

std::optional<Rational> exact_sqrt(const Rational& q)
{
    if (sgn(q) < 0)
        return std::nullopt;
    Integer num = q.get_num();
    Integer den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

double sqrt_to_double(const Rational& q)
{
    if (auto r = exact_sqrt(q))
        return r->get_d();
    return std::sqrt(q.get_d());
}

bool is_integer(const Rational& q)
{
    return q.get_den() == 1;
}

} // namespace ineq
