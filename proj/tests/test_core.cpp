#include <doctest.h>

#include <random>

#include "ineq/error.hpp"
#include "ineq/linform.hpp"
#include "ineq/rational.hpp"
#include "ineq/varset.hpp"

using namespace ineq;

TEST_CASE("rational parsing and printing")
{
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-1/2") == Rational(-1, 2));
    CHECK(parse_rational("+4/6") == Rational(2, 3));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-1.5") == Rational(-3, 2));
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK(parse_rational("010") == 10);
    CHECK(parse_rational("0.010") == Rational(1, 100));
    CHECK(parse_rational("08/09") == Rational(8, 9));
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational("1/-2"), Error);
    CHECK_THROWS_AS(parse_rational("."), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("rational helpers")
{
    CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
    CHECK_FALSE(exact_sqrt(Rational(-4)).has_value());
    CHECK(exact_sqrt(Rational(0)) == Rational(0));
    CHECK(exact_from_double(0.375) == Rational(3, 8));
    CHECK(to_double(exact_from_double(0.1)) == 0.1);
    CHECK(is_integer(make_rational(4, 2)));
    CHECK_FALSE(is_integer(Rational(1, 2)));
    CHECK(sqrt_to_double(Rational(2)) == doctest::Approx(1.41421356237));
}

TEST_CASE("varset basics")
{
    VarSet a = VarSet::of({1, 3});
    CHECK(a.bits() == 0b101u);
    CHECK(a.size() == 2);
    CHECK(a.max_index() == 3);
    CHECK(a.contains(3));
    CHECK_FALSE(a.contains(2));
    CHECK(a.coord_label() == "13");
    CHECK(VarSet::of({1, 10}).coord_label() == "{1,10}");
    CHECK(VarSet::singleton(2).group_label() == "2");
    CHECK(a.group_label() == "{1,3}");
    CHECK(VarSet().group_label() == "{}");
    CHECK((a | VarSet::singleton(2)) == VarSet::full(3));
    CHECK((a - VarSet::singleton(1)) == VarSet::singleton(3));
    CHECK(a.within(3));
    CHECK_FALSE(a.within(2));
    CHECK(VarSet::singleton(1) < VarSet::singleton(2));
    CHECK(VarSet::of({1, 2}) < VarSet::singleton(3));
    CHECK_THROWS_AS(VarSet::singleton(0), Error);
    CHECK_THROWS_AS(VarSet::singleton(kMaxVars + 1), Error);
    CHECK(num_coords(4) == 15);
    CHECK(coord_index(VarSet::of({1, 2})) == 2);
    CHECK_THROWS_AS(check_var_count(kMaxVars + 1), Error);
    CHECK_THROWS_AS(check_var_count(0), Error);
}

TEST_CASE("elementary measures expand to joint entropies")
{
    auto s = [](std::initializer_list<int> v) { return VarSet::of(v); };
    LinForm i12 = lf_mutual(2, s({1}), s({2}));
    CHECK(i12.to_string() == "+1 h1 +1 h2 -1 h12");
    LinForm h1g2 = lf_cond_entropy(2, s({1}), s({2}));
    CHECK(h1g2.to_string() == "-1 h2 +1 h12");
    LinForm i12g3 = lf_mutual(3, s({1}), s({2}), s({3}));
    CHECK(i12g3.to_string() == "-1 h3 +1 h13 +1 h23 -1 h123");
    // H(X1|X2) + I(X1;X2) = H(X1)
    CHECK(h1g2 + i12 == lf_entropy(2, s({1})));
    CHECK(lf_entropy(2, {}, EmptySetPolicy::ZeroForm).is_zero());
    CHECK_THROWS_AS(lf_entropy(2, {}), Error);
    CHECK_THROWS_AS(lf_entropy(2, s({3})), Error);
    CHECK_THROWS_AS(lf_mutual(3, s({1, 2}), s({2})), Error);
    CHECK_THROWS_AS(lf_cond_entropy(2, s({1}), s({1})), Error);
    CHECK_THROWS_AS(lf_mutual(2, {}, s({1})), Error);
}

TEST_CASE("linform arithmetic")
{
    LinForm f(3), g(3);
    f.add(VarSet::of({1}), Rational(1, 2));
    f.add(VarSet::of({1, 2}), 2);
    g.add(VarSet::of({1}), Rational(-1, 2));
    LinForm sum = f + g;
    CHECK(sum.terms().size() == 1);
    CHECK(sum.coeff(VarSet::of({1, 2})) == 2);
    CHECK(sum.coeff(VarSet::of({1})) == 0);
    CHECK((f - f).is_zero());
    CHECK((-f).coeff(VarSet::of({1})) == Rational(-1, 2));
    CHECK((Rational(2) * f).coeff(VarSet::of({1})) == 1);
    CHECK(LinForm(3).to_string() == "0");
    CHECK_THROWS_AS(f + LinForm(2), Error);
    auto d = f.dense();
    REQUIRE(d.size() == 7);
    CHECK(d[0] == Rational(1, 2));
    CHECK(d[2] == 2);

    std::pair<Rational, LinForm> parts[] = {{Rational(2), f}, {Rational(-1), f}};
    CHECK(lf_combine(parts) == f);
}

TEST_CASE("evaluation in all three number types")
{
    LinForm i12 = lf_mutual(2, VarSet::of({1}), VarSet::of({2}));
    std::vector<double> hd{1, 1, 1.5};
    std::vector<long double> hl{1, 1, 1.5};
    std::vector<Rational> hq{Rational(1), Rational(1), Rational(3, 2)};
    CHECK(evaluate(i12, hd) == 0.5);
    CHECK(evaluate(i12, hl) == 0.5L);
    CHECK(evaluate(i12, hq) == Rational(1, 2));
    std::vector<double> short_vec{1, 1};
    CHECK_THROWS_AS(evaluate(i12, short_vec), Error);
}

TEST_CASE("balance")
{
    CHECK(is_balanced(lf_mutual(2, VarSet::of({1}), VarSet::of({2}))));
    CHECK(is_balanced(lf_mutual(4, VarSet::of({1}), VarSet::of({2}), VarSet::of({3, 4}))));
    CHECK_FALSE(is_balanced(lf_cond_entropy(2, VarSet::of({1}), VarSet::of({2}))));
    CHECK(is_balanced(LinForm(3)));
}

TEST_CASE("errors carry their code name")
{
    try {
        throw Error(Errc::Unbalanced, "x");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Unbalanced);
        CHECK(std::string(e.what()) == "Unbalanced: x");
    }
    SyntaxError s(4, "')'");
    CHECK(s.position() == 4);
    CHECK(s.code() == Errc::Syntax);
}

TEST_CASE("linear forms are additive under random combination")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<std::uint32_t> mask(1, 15);
    std::uniform_real_distribution<double> val(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        LinForm a(4), b(4);
        for (int k = 0; k < 5; ++k) {
            a.add(VarSet::from_bits(mask(rng)), coef(rng));
            b.add(VarSet::from_bits(mask(rng)), make_rational(coef(rng), 3));
        }
        std::vector<Rational> h;
        for (int i = 0; i < 15; ++i)
            h.push_back(exact_from_double(val(rng)));
        CHECK(evaluate(a + b, h) == evaluate(a, h) + evaluate(b, h));
        CHECK(evaluate(Rational(7, 2) * a, h) == Rational(7, 2) * evaluate(a, h));
    }
}
