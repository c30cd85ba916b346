#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ineq/rational.hpp"

namespace ineq {

// A witness coordinate: exact when every intermediate stayed rational.
struct Real {
    std::optional<Rational> exact;
    double value = 0;

    static Real of(const Rational& q);
    static Real approx(double x);
};

// ---- AM-GM over two nonnegative numbers -----------------------------------

struct AmgmPoint {
    Rational a;  // arithmetic mean
    Rational g;  // geometric mean
};

struct AmgmWitness {
    Real x;
    Real y;
};

bool amgm_member(const AmgmPoint& pt);
// x = a + sqrt(a^2 - g^2) >= y; throws NotInRegion.
AmgmWitness amgm_witness(const AmgmPoint& pt);
// c_a AM + c_g GM + c0 >= 0 for every achievable pair.
bool amgm_linear_valid(const Rational& c_a, const Rational& c_g, const Rational& c0);

// ---- Markov: p = Pr{T >= c}, m = E[T], T >= 0 ------------------------------

struct MarkovPoint {
    Rational c;
    Rational p;
    Rational m;
};

enum class MarkovRegion { Achievable, ExcludedBoundary, Outside };

const char* markov_region_name(MarkovRegion r);

struct MarkovAtom {
    Rational value;
    Rational prob;
};

struct MarkovWitness {
    std::vector<MarkovAtom> atoms;
};

// Throws InvalidArgument unless c > 0.
MarkovRegion markov_member(const MarkovPoint& pt);
// Throws NotAchievable for Outside and ExcludedBoundary points.
MarkovWitness markov_witness(const MarkovPoint& pt);

struct MarkovValidity {
    bool valid;                   // nonnegative on every achievable (p, m)
    bool fails_only_on_excluded;  // negative only on {(0, m) : m >= c}
};

// c_p p + c_m m + c0 >= 0. An affine function that is nonnegative on the
// achievable set is nonnegative on its closure, so fails_only_on_excluded is
// never set for this family.
MarkovValidity markov_linear_valid(const Rational& c_p, const Rational& c_m, const Rational& c0, const Rational& c);

// ---- Cauchy-Schwarz: x = <u,u>, y = <v,v>, z = <u,v> in R^dim ---------------

struct CsPoint {
    Rational x;
    Rational y;
    Rational z;
    int dim = 2;
};

struct CsWitness {
    std::vector<Real> u;
    std::vector<Real> v;
};

bool cs_member(const CsPoint& pt);
// Throws NotAchievable.
CsWitness cs_witness(const CsPoint& pt);

// ---- Sampled check for nonlinear f --------------------------------------------

struct Falsification {
    std::vector<double> point;  // the region coordinates
    double value;               // f at the point, < 0
};

// Evaluates f on `samples` achievable points and returns the first violation.
std::optional<Falsification> falsify_amgm(const std::function<double(double, double)>& f,
                                          std::size_t samples = 100000, std::uint64_t seed = 1);
std::optional<Falsification> falsify_markov(double c, const std::function<double(double, double)>& f,
                                            std::size_t samples = 100000, std::uint64_t seed = 1);
std::optional<Falsification> falsify_cs(int dim, const std::function<double(double, double, double)>& f,
                                        std::size_t samples = 100000, std::uint64_t seed = 1);

// {"x":8,"y":2}, {"atoms":[[0,0.5],[2,0.5]]}, {"u":[1,0],"v":[0.5,0.866...]}.
// Integers print as integers, everything else as the nearest double.
std::string to_json(const AmgmWitness& w);
std::string to_json(const MarkovWitness& w);
std::string to_json(const CsWitness& w);

} // namespace ineq
