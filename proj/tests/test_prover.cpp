#include <doctest.h>

#include <sstream>

#include "ineq/cone.hpp"
#include "ineq/error.hpp"
#include "ineq/models.hpp"
#include "ineq/prover.hpp"
#include "oracles.hpp"

using namespace ineq;

namespace {

VarSet S(std::initializer_list<int> v) { return VarSet::of(v); }

std::string certificate_text(const Verdict& v)
{
    std::ostringstream out;
    write_certificate(out, v);
    return out.str();
}

} // namespace

TEST_CASE("mutual information is a single elemental row")
{
    LinForm b = lf_mutual(2, S({1}), S({2}));
    Verdict v = verify(b, {});
    REQUIRE(v.kind == VerdictKind::Proved);
    REQUIRE(v.certificate);
    int nonzero = 0;
    for (std::size_t i = 0; i < v.cone.size(); ++i)
        if (sgn(v.certificate->lambda[i]) != 0) {
            ++nonzero;
            CHECK(v.certificate->lambda[i] == 1);
            CHECK(v.cone[i].form == b);
        }
    CHECK(nonzero == 1);
    CHECK(certificate_text(v) == "lambda 1 : +1 h1 +1 h2 -1 h12 # elemental I(1;2)\n");
}

TEST_CASE("certificate checking is exact")
{
    LinForm b = lf_mutual(2, S({1}), S({2}));
    Verdict v = verify(b, {});
    REQUIRE(v.certificate);
    CHECK(check_certificate(b, *v.certificate, v.cone, v.constraints));
    Certificate bad = *v.certificate;
    for (auto& l : bad.lambda)
        if (sgn(l) != 0)
            l += Rational(1, 1000);
    CHECK_FALSE(check_certificate(b, bad, v.cone, v.constraints));
    Certificate negative = *v.certificate;
    negative.lambda[0] = -1;
    CHECK_FALSE(check_certificate(b, negative, v.cone, v.constraints));
    Certificate empty;
    CHECK(check_certificate(LinForm(2), empty, {}, {}));
    CHECK_FALSE(check_certificate(b, empty, v.cone, v.constraints));
}

TEST_CASE("the zero form is proved with no multipliers")
{
    Verdict v = verify(LinForm(3), {});
    REQUIRE(v.kind == VerdictKind::Proved);
    for (const auto& l : v.certificate->lambda)
        CHECK(sgn(l) == 0);
    CHECK(certificate_text(v).empty());
}

TEST_CASE("shannon-type inequalities with constraints")
{
    // Data processing: X1 - X2 - X3 gives I(X1;X3) <= I(X1;X2).
    auto chain = constraint_markov(3, {S({1}), S({2}), S({3})});
    LinForm b = lf_mutual(3, S({1}), S({2})) - lf_mutual(3, S({1}), S({3}));
    Verdict v = verify(b, chain);
    REQUIRE(v.kind == VerdictKind::Proved);
    CHECK(check_certificate(b, *v.certificate, v.cone, v.constraints));
    // Without the chain it fails.
    Verdict u = verify(b, {});
    REQUIRE(u.kind == VerdictKind::NotImpliedByCone);
    CHECK(check_ray(b, *u.ray, u.cone, u.constraints));
}

TEST_CASE("redundant and repeated constraints are handled")
{
    auto q = constraint_markov(3, {S({1}), S({2}), S({3})});
    q.push_back(q[0]);
    q.push_back({Rational(2) * q[0].form, "twice"});
    LinForm b = lf_mutual(3, S({1}), S({2})) - lf_mutual(3, S({1}), S({3}));
    Verdict v = verify(b, q);
    REQUIRE(v.kind == VerdictKind::Proved);
    CHECK(check_certificate(b, *v.certificate, v.cone, v.constraints));
}

TEST_CASE("zy98 is not implied by the elemental cone")
{
    LinForm b = zy98_form(4, 1, 2, 3, 4);
    Verdict v = verify(b, {});
    REQUIRE(v.kind == VerdictKind::NotImpliedByCone);
    REQUIRE(v.ray);
    CHECK(check_ray(b, *v.ray, v.cone, v.constraints));
    for (const auto& row : basic_inequalities(4))
        CHECK(sgn(evaluate(row.form, *v.ray)) >= 0);
    CHECK(sgn(evaluate(b, *v.ray)) < 0);
    // Primitive integer ray.
    Integer g = 0;
    for (const auto& r : *v.ray) {
        CHECK(is_integer(r));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.get_num().get_mpz_t());
    }
    CHECK(g == 1);
}

TEST_CASE("zy98 with augmentation")
{
    LinForm b = zy98_form(4, 1, 2, 3, 4);
    ProverOptions opts;
    opts.augment = Augment::Zy98;
    Verdict v = verify(b, {}, opts);
    REQUIRE(v.kind == VerdictKind::ProvedAugmented);
    CHECK(check_certificate(b, *v.certificate, v.cone, v.constraints));
    CHECK(v.cone.size() == 28 + 12);
}

TEST_CASE("zy97 is not implied by the cone under its constraints")
{
    Zy97Problem p = zy97_problem();
    Verdict v = verify(p.objective, p.constraints);
    REQUIRE(v.kind == VerdictKind::NotImpliedByCone);
    CHECK(check_ray(p.objective, *v.ray, v.cone, v.constraints));
}

TEST_CASE("augmentation never loses a proof")
{
    ProverOptions opts;
    opts.augment = Augment::Zy98;
    for (const auto& row : basic_inequalities(4)) {
        Verdict plain = verify(row.form, {});
        Verdict aug = verify(row.form, {}, opts);
        CHECK(plain.kind == VerdictKind::Proved);
        CHECK(aug.kind == VerdictKind::Proved);
    }
}

TEST_CASE("assumed inequalities extend the cone")
{
    // Assuming H(X1) <= H(X2) proves H(X1,X2) <= 2 H(X2).
    ProverOptions opts;
    opts.assumptions.push_back({lf_entropy(2, S({2})) - lf_entropy(2, S({1})), OtherOrigin{"h1 <= h2"}});
    LinForm b = Rational(2) * lf_entropy(2, S({2})) - lf_entropy(2, S({1, 2}));
    CHECK(verify(b, {}).kind == VerdictKind::NotImpliedByCone);
    Verdict v = verify(b, {}, opts);
    REQUIRE(v.kind == VerdictKind::Proved);
    CHECK(check_certificate(b, *v.certificate, v.cone, v.constraints));
    CHECK(certificate_text(v).find("# h1 <= h2") != std::string::npos);
}

TEST_CASE("dimension mismatch")
{
    std::vector<ConstraintRow> q{constraint_ci(3, S({1}), S({2}), S({3}))};
    try {
        verify(lf_mutual(2, S({1}), S({2})), q);
        FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DimensionMismatch);
    }
}

TEST_CASE("identical problems give identical verdicts")
{
    LinForm b = zy98_form(4, 1, 2, 3, 4);
    Verdict a = verify(b, {}), c = verify(b, {});
    CHECK(*a.ray == *c.ray);
    LinForm d = lf_mutual(3, S({1}), S({2, 3})) - lf_mutual(3, S({1}), S({2}));
    Verdict x = verify(d, {}), y = verify(d, {});
    CHECK(certificate_text(x) == certificate_text(y));
    CHECK(x.certificate->lambda == y.certificate->lambda);
}

TEST_CASE("certified inequalities hold on random entropy vectors")
{
    std::vector<LinForm> proved;
    for (const auto& row : basic_inequalities(4))
        proved.push_back(row.form);
    proved.push_back(lf_mutual(4, S({1}), S({2, 3, 4})) - lf_mutual(4, S({1}), S({2})));
    for (const auto& b : proved)
        REQUIRE(verify(b, {}).kind == VerdictKind::Proved);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        std::vector<int> alphabet(4, 2 + static_cast<int>(seed % 2));
        JointPMF p = random_pmf(4, alphabet, seed);
        EntropyVector h = entropy_vector(p);
        for (const auto& b : proved)
            CHECK(evaluate(b, h.values) >= -1e-9);
    }
}

TEST_CASE("disprove")
{
    LinForm bad = lf_entropy(2, S({1})) - lf_entropy(2, S({1, 2}));
    Verdict v = disprove(bad, {});
    REQUIRE(v.kind == VerdictKind::Disproved);
    REQUIRE(v.witness);
    CHECK(v.witness->value == doctest::Approx(-1.0).epsilon(1e-9));
    auto h = oracle::entropy_vector(v.witness->pmf.alphabet(), v.witness->pmf.probs());
    CHECK(evaluate(bad, h) < -1e-6);

    CHECK(disprove(lf_mutual(2, S({1}), S({2})), {}).kind == VerdictKind::Unknown);
    SearchOptions binary;
    binary.alphabet = 2;
    CHECK(disprove(zy98_form(4, 1, 2, 3, 4), {}, binary).kind == VerdictKind::Unknown);
}

TEST_CASE("conditional independence implication")
{
    std::vector<CiStatement> premises{{S({1}), S({3}), S({2})}, {S({1}), S({2}), {}}};
    ImplicationVerdict v = implies(3, premises, {S({1}), S({3}), {}});
    CHECK(v.kind == ImplicationKind::Implied);
    REQUIRE(v.shannon.certificate);

    std::vector<CiStatement> one{{S({1}), S({2}), {}}};
    ImplicationVerdict w = implies(3, one, {S({1}), S({2}), S({3})});
    REQUIRE(w.kind == ImplicationKind::NotImplied);
    REQUIRE(w.witness);
    auto h = oracle::entropy_vector(w.witness->pmf.alphabet(), w.witness->pmf.probs());
    CHECK(oracle::mutual(h, 1, 2, 4) >= 0.99);
    CHECK(std::abs(oracle::mutual(h, 1, 2, 0)) < 1e-9);
    CHECK(w.conclusion_information == doctest::Approx(oracle::mutual(h, 1, 2, 4)));

    std::vector<CiStatement> self{{S({1}), S({2}), S({3})}};
    CHECK(implies(3, self, self[0]).kind == ImplicationKind::Implied);
}
