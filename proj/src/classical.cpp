#include "ineq/classical.hpp"

#include <cmath>
#include <random>

#include <json.hpp>

#include "ineq/error.hpp"

namespace ineq {

Real Real::of(const Rational& q) { return Real{q, to_double(q)}; }
Real Real::approx(double x) { return Real{std::nullopt, x}; }

namespace {

Real real_sqrt(const Rational& q)
{
    if (auto r = exact_sqrt(q))
        return Real::of(*r);
    return Real::approx(sqrt_to_double(q));
}

nlohmann::ordered_json json_number(const Real& r)
{
    if (r.exact && is_integer(*r.exact) && r.exact->get_num().fits_slong_p())
        return r.exact->get_num().get_si();
    return r.value;
}

nlohmann::ordered_json json_number(const Rational& q) { return json_number(Real::of(q)); }

void check_c(const Rational& c)
{
    if (sgn(c) <= 0)
        throw Error(Errc::InvalidArgument, "Markov threshold c must be positive, got " + to_string(c));
}

} // namespace

bool amgm_member(const AmgmPoint& pt) { return sgn(pt.g) >= 0 && pt.a >= pt.g; }

AmgmWitness amgm_witness(const AmgmPoint& pt)
{
    if (!amgm_member(pt))
        throw Error(Errc::NotInRegion, "(" + to_string(pt.a) + ", " + to_string(pt.g) + ") is not in the AM-GM region");
    Rational disc = pt.a * pt.a - pt.g * pt.g;
    if (auto r = exact_sqrt(disc))
        return {Real::of(pt.a + *r), Real::of(pt.a - *r)};
    double x = to_double(pt.a) + sqrt_to_double(disc);
    // y = g^2 / x avoids cancellation in a - sqrt(a^2 - g^2).
    double y = x == 0 ? to_double(pt.a) : to_double(Rational(pt.g * pt.g)) / x;
    return {Real::approx(x), Real::approx(y)};
}

bool amgm_linear_valid(const Rational& c_a, const Rational& c_g, const Rational& c0)
{
    // Apex (0,0), rays (1,1) and (1,0).
    return sgn(c0) >= 0 && sgn(c_a + c_g) >= 0 && sgn(c_a) >= 0;
}

const char* markov_region_name(MarkovRegion r)
{
    switch (r) {
    case MarkovRegion::Achievable: return "achievable";
    case MarkovRegion::ExcludedBoundary: return "excluded-boundary";
    case MarkovRegion::Outside: return "outside";
    }
    return "outside";
}

MarkovRegion markov_member(const MarkovPoint& pt)
{
    check_c(pt.c);
    if (sgn(pt.p) < 0 || pt.p > 1 || pt.m < pt.c * pt.p)
        return MarkovRegion::Outside;
    if (sgn(pt.p) == 0 && pt.m >= pt.c)
        return MarkovRegion::ExcludedBoundary;
    return MarkovRegion::Achievable;
}

MarkovWitness markov_witness(const MarkovPoint& pt)
{
    MarkovRegion r = markov_member(pt);
    if (r != MarkovRegion::Achievable)
        throw Error(Errc::NotAchievable, "(p, m) = (" + to_string(pt.p) + ", " + to_string(pt.m) + ") is " +
                                             markov_region_name(r) + " for c = " + to_string(pt.c));
    if (sgn(pt.p) == 0)
        return {{{pt.m, Rational(1)}}};
    MarkovWitness w;
    if (pt.p != 1)
        w.atoms.push_back({Rational(0), Rational(1 - pt.p)});
    w.atoms.push_back({Rational(pt.m / pt.p), pt.p});
    return w;
}

MarkovValidity markov_linear_valid(const Rational& c_p, const Rational& c_m, const Rational& c0, const Rational& c)
{
    check_c(c);
    // Vertices (0,0) and (1,c), ray (0,1) from each.
    bool valid = sgn(c0) >= 0 && sgn(c_p + c_m * c + c0) >= 0 && sgn(c_m) >= 0;
    return {valid, false};
}

bool cs_member(const CsPoint& pt)
{
    if (pt.dim < 0)
        return false;
    if (pt.dim == 0)
        return sgn(pt.x) == 0 && sgn(pt.y) == 0 && sgn(pt.z) == 0;
    if (sgn(pt.x) < 0 || sgn(pt.y) < 0)
        return false;
    Rational zz = pt.z * pt.z, xy = pt.x * pt.y;
    return pt.dim == 1 ? zz == xy : zz <= xy;
}

CsWitness cs_witness(const CsPoint& pt)
{
    if (!cs_member(pt))
        throw Error(Errc::NotAchievable, "(" + to_string(pt.x) + ", " + to_string(pt.y) + ", " + to_string(pt.z) +
                                             ") is not achievable in dimension " + std::to_string(pt.dim));
    CsWitness w;
    w.u.assign(pt.dim, Real::of(0));
    w.v.assign(pt.dim, Real::of(0));
    if (pt.dim == 0)
        return w;
    if (sgn(pt.x) == 0) {
        w.v[0] = real_sqrt(pt.y);
        return w;
    }
    Real sx = real_sqrt(pt.x);
    w.u[0] = sx;
    w.v[0] = sx.exact ? Real::of(pt.z / *sx.exact) : Real::approx(to_double(pt.z) / sx.value);
    if (pt.dim >= 2)
        w.v[1] = real_sqrt(pt.y - pt.z * pt.z / pt.x);
    return w;
}

namespace {

double scale_draw(std::mt19937_64& rng)
{
    // Magnitudes spread over several decades, with exact zeros now and then.
    std::uniform_int_distribution<int> pick(0, 9);
    if (pick(rng) == 0)
        return 0;
    std::uniform_real_distribution<double> e(-3, 3);
    return std::pow(10.0, e(rng));
}

} // namespace

std::optional<Falsification> falsify_amgm(const std::function<double(double, double)>& f, std::size_t samples,
                                          std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        double x = scale_draw(rng), y = scale_draw(rng);
        if (i % 7 == 0)
            y = x;
        double a = (x + y) / 2, g = std::sqrt(x * y);
        double v = f(a, g);
        if (v < 0)
            return Falsification{{a, g}, v};
    }
    return std::nullopt;
}

std::optional<Falsification> falsify_markov(double c, const std::function<double(double, double)>& f,
                                            std::size_t samples, std::uint64_t seed)
{
    if (!(c > 0))
        throw Error(Errc::InvalidArgument, "Markov threshold c must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0, 1);
    for (std::size_t i = 0; i < samples; ++i) {
        double p, m;
        if (i % 5 == 0) {
            p = 0;
            m = c * unit(rng);
        } else {
            p = i % 5 == 1 ? 1.0 : unit(rng);
            m = c * p + (i % 3 == 0 ? 0.0 : scale_draw(rng));
        }
        double v = f(p, m);
        if (v < 0)
            return Falsification{{p, m}, v};
    }
    return std::nullopt;
}

std::optional<Falsification> falsify_cs(int dim, const std::function<double(double, double, double)>& f,
                                        std::size_t samples, std::uint64_t seed)
{
    if (dim < 0)
        throw Error(Errc::InvalidArgument, "dimension must be nonnegative");
    // Achievable sets stop growing at dimension 2.
    int d = std::min(dim, 2);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    for (std::size_t i = 0; i < samples; ++i) {
        double x = 0, y = 0, z = 0, s = scale_draw(rng);
        for (int k = 0; k < d; ++k) {
            double u = s * gauss(rng), v = gauss(rng);
            x += u * u;
            y += v * v;
            z += u * v;
        }
        double val = f(x, y, z);
        if (val < 0)
            return Falsification{{x, y, z}, val};
    }
    return std::nullopt;
}

std::string to_json(const AmgmWitness& w)
{
    nlohmann::ordered_json j;
    j["x"] = json_number(w.x);
    j["y"] = json_number(w.y);
    return j.dump();
}

std::string to_json(const MarkovWitness& w)
{
    nlohmann::ordered_json atoms = nlohmann::ordered_json::array();
    for (const auto& a : w.atoms)
        atoms.push_back({json_number(a.value), json_number(a.prob)});
    nlohmann::ordered_json j;
    j["atoms"] = atoms;
    return j.dump();
}

std::string to_json(const CsWitness& w)
{
    auto vec = [](const std::vector<Real>& xs) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (const auto& x : xs)
            a.push_back(json_number(x));
        return a;
    };
    nlohmann::ordered_json j;
    j["u"] = vec(w.u);
    j["v"] = vec(w.v);
    return j.dump();
}

} // namespace ineq
