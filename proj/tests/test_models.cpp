#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "ineq/cone.hpp"
#include "ineq/error.hpp"
#include "ineq/groups.hpp"
#include "ineq/models.hpp"
#include "ineq/search.hpp"
#include "oracles.hpp"

using namespace ineq;

namespace {

VarSet S(std::initializer_list<int> v) { return VarSet::of(v); }

GroupSpec random_spec(const Group& g, const std::vector<Subgroup>& subs, int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
    std::vector<Subgroup> chosen;
    for (int i = 0; i < n; ++i)
        chosen.push_back(subs[pick(rng)]);
    return GroupSpec(g, chosen);
}

} // namespace

TEST_CASE("pmf validation")
{
    CHECK_NOTHROW(JointPMF({2}, {0.5, 0.5}));
    CHECK_THROWS_AS(JointPMF({2}, {0.6, 0.5}), Error);
    CHECK_THROWS_AS(JointPMF({2}, {1.5, -0.5}), Error);
    CHECK_THROWS_AS(JointPMF({2, 2}, {0.5, 0.5}), Error);
    CHECK_THROWS_AS(JointPMF({2}, {NAN, 1.0}), Error);
    CHECK_THROWS_AS(JointPMF({0}, {}), Error);
    JointPMF p({2, 3}, {0.1, 0.1, 0.1, 0.2, 0.2, 0.3});
    CHECK(p.atoms() == 6);
    CHECK(p.value(4, 1) == 1);
    CHECK(p.value(4, 2) == 1);
    CHECK(p.value(2, 2) == 2);
}

TEST_CASE("entropies of simple distributions")
{
    JointPMF fair({2, 2}, {0.25, 0.25, 0.25, 0.25});
    EntropyVector h = entropy_vector(fair);
    CHECK(h.values == std::vector<double>{1, 1, 2});
    // X2 = X1
    JointPMF copy({2, 2}, {0.5, 0, 0, 0.5});
    EntropyVector c = entropy_vector(copy);
    CHECK(c.at(S({1, 2})) == doctest::Approx(1));
    CHECK(subset_entropy(copy, S({2})) == doctest::Approx(1));
    // XOR of two fair bits
    JointPMF x({2, 2, 2}, {0.25, 0, 0, 0.25, 0, 0.25, 0.25, 0});
    EntropyVector hx = entropy_vector(x);
    for (double v : hx.values)
        CHECK(v == doctest::Approx(v < 1.5 ? 1 : 2));
    CHECK(hx.at(S({1, 2, 3})) == doctest::Approx(2));
}

TEST_CASE("entropy vector matches an independent marginalization")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        std::vector<int> alphabet{2, 3, 2, static_cast<int>(2 + seed % 3)};
        JointPMF p = random_pmf(4, alphabet, seed);
        auto h = entropy_vector(p).values;
        auto ref = oracle::entropy_vector(p.alphabet(), p.probs());
        auto ext = entropy_vector_extended(p);
        for (std::size_t i = 0; i < h.size(); ++i) {
            CHECK(std::abs(h[i] - ref[i]) < 1e-12);
            CHECK(std::abs(static_cast<double>(ext[i]) - ref[i]) < 1e-12);
        }
    }
}

TEST_CASE("random pmfs are reproducible and normalized")
{
    JointPMF a = random_pmf(2, {2, 2}, 7), b = random_pmf(2, {2, 2}, 7), c = random_pmf(2, {2, 2}, 8);
    CHECK(a.probs() == b.probs());
    CHECK(a.probs() != c.probs());
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        JointPMF p = random_pmf(3, {3, 2, 4}, seed);
        double s = 0;
        for (double q : p.probs()) {
            CHECK(q >= 0);
            s += q;
        }
        CHECK(std::abs(s - 1) <= 1e-12);
    }
}

TEST_CASE("entropy vectors satisfy the elemental rows")
{
    for (int n : {3, 4}) {
        auto rows = elemental(n);
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            std::vector<int> alphabet(n, 2 + static_cast<int>(seed % 2));
            EntropyVector h = entropy_vector(random_pmf(n, alphabet, seed * 31 + n));
            for (const auto& r : rows)
                CHECK(evaluate(r.form, h.values) >= -1e-9);
        }
    }
}

TEST_CASE("zy98 holds on random pmfs")
{
    auto rows = zy98_rows(4);
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        std::vector<int> alphabet(4, 2 + static_cast<int>(seed % 2));
        EntropyVector h = entropy_vector(random_pmf(4, alphabet, seed));
        for (const auto& r : rows)
            CHECK(evaluate(r.form, h.values) >= -1e-9);
    }
}

TEST_CASE("pmf file round trip")
{
    JointPMF p({2, 3}, {0.125, 0.125, 0.25, 0.25, 0.125, 0.125});
    std::stringstream ss;
    write_pmf(ss, p);
    CHECK(ss.str().rfind("2 2 3\n", 0) == 0);
    JointPMF q = read_pmf(ss);
    CHECK(q.alphabet() == p.alphabet());
    CHECK(q.probs() == p.probs());
    std::istringstream bad("2 2 2\n0.5 0.5\n");
    CHECK_THROWS_AS(read_pmf(bad), Error);
    std::istringstream junk("x\n");
    CHECK_THROWS_AS(read_pmf(junk), Error);
}

TEST_CASE("group constructors")
{
    CHECK(cyclic_group(12).order() == 12);
    CHECK(dihedral_group(4).order() == 8);
    CHECK(symmetric_group(4).order() == 24);
    CHECK(alternating_group(4).order() == 12);
    CHECK(direct_product(cyclic_group(2), cyclic_group(3)).order() == 6);
    Group s3 = symmetric_group(3);
    for (int a = 0; a < s3.order(); ++a)
        CHECK(s3.mul(a, s3.inverse(a)) == s3.identity());
    CHECK_THROWS_AS(Group(2, {0, 0, 0, 0}), Error);
    CHECK_THROWS_AS(Group(2, {0, 1, 1}), Error);
}

TEST_CASE("subgroup enumeration")
{
    CHECK(enumerate_subgroups(cyclic_group(12)).size() == 6);
    CHECK(enumerate_subgroups(symmetric_group(3)).size() == 6);
    CHECK(enumerate_subgroups(dihedral_group(4)).size() == 10);
    CHECK(enumerate_subgroups(alternating_group(4)).size() == 10);
    CHECK(enumerate_subgroups(symmetric_group(4)).size() == 30);
    Group v = direct_product(cyclic_group(2), cyclic_group(2));
    CHECK(enumerate_subgroups(v).size() == 5);
    CHECK(enumerate_subgroups(direct_product(v, cyclic_group(2))).size() == 16);
    auto subs = enumerate_subgroups(symmetric_group(3));
    CHECK(subs.front().size() == 1);
    CHECK(subs.back().size() == 6);
}

TEST_CASE("group vectors")
{
    // G = Z2 x Z2 with its three order-2 subgroups: pairwise independent
    // fair bits whose XOR-like structure gives h = (1,1,2,1,2,2,2).
    Group v = direct_product(cyclic_group(2), cyclic_group(2));
    auto subs = enumerate_subgroups(v);
    std::vector<Subgroup> order2;
    for (const auto& s : subs)
        if (s.size() == 2)
            order2.push_back(s);
    REQUIRE(order2.size() == 3);
    GroupSpec spec(v, order2);
    EntropyVector h = group_vector(spec);
    std::vector<double> expected{1, 1, 2, 1, 2, 2, 2};
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(h.values[i] == doctest::Approx(expected[i]));
    CHECK(spec.intersection_order({}) == 4);
    CHECK_THROWS_AS(GroupSpec(v, {Subgroup{0, 7}}), Error);
}

TEST_CASE("group vectors satisfy elemental rows and the exact check agrees")
{
    std::mt19937_64 rng(17);
    std::vector<Group> groups{symmetric_group(4), dihedral_group(6), alternating_group(4),
                              direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(2)))};
    auto rows = elemental(4);
    std::vector<LinForm> forms;
    for (const auto& r : rows)
        forms.push_back(r.form);
    for (const auto& r : zy98_rows(4))
        forms.push_back(r.form);
    // A few invalid inequalities so the comparison sees both signs.
    forms.push_back(lf_entropy(4, S({1})) - lf_entropy(4, S({1, 2})));
    forms.push_back(lf_mutual(4, S({1}), S({2}), S({3})) - lf_mutual(4, S({1}), S({2})));
    int falses = 0;
    for (const auto& g : groups) {
        auto subs = enumerate_subgroups(g);
        for (int trial = 0; trial < 100; ++trial) {
            GroupSpec spec = random_spec(g, subs, 4, rng);
            EntropyVector h = group_vector(spec);
            for (std::size_t k = 0; k < forms.size(); ++k) {
                double f = evaluate(forms[k], h.values);
                bool exact = verify_group_multiplicative(forms[k], spec);
                if (k < rows.size() + 12)
                    CHECK(exact);
                if (std::abs(f) > 1e-9)
                    CHECK(exact == (f > 0));
                falses += !exact;
            }
        }
    }
    CHECK(falses > 0);
}

TEST_CASE("group file round trip")
{
    Group s3 = symmetric_group(3);
    auto subs = enumerate_subgroups(s3);
    GroupSpec spec(s3, {subs[1], subs[4]});
    std::stringstream ss;
    write_group_spec(ss, spec);
    GroupSpec back = read_group_spec(ss);
    CHECK(back.group().table() == s3.table());
    CHECK(back.subgroups() == spec.subgroups());
    std::istringstream bad("2\n0 1\n1 1\n");
    CHECK_THROWS_AS(read_group_spec(bad), Error);
}

TEST_CASE("marginals by lumping agree with direct marginals")
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        JointPMF p = random_pmf(3, {2, 3, 2}, seed);
        // Marginal on {1,3} as its own table.
        std::vector<double> m(4, 0.0);
        for (std::size_t a = 0; a < p.atoms(); ++a)
            m[p.value(a, 1) * 2 + p.value(a, 3)] += p.probs()[a];
        double direct = 0;
        for (double q : m)
            if (q > 0)
                direct -= q * std::log2(q);
        CHECK(std::abs(entropy_vector(p).at(S({1, 3})) - direct) < 1e-12);
    }
}

TEST_CASE("counterexample search")
{
    LinForm bad = lf_entropy(2, S({1})) - lf_entropy(2, S({1, 2}));
    auto r = search_counterexample(bad, {});
    REQUIRE(r);
    CHECK(r->value < -1e-6);
    CHECK(meets_thresholds(bad, {}, r->pmf, SearchOptions{}));

    // I(X1;X2|X3) > 0 while I(X1;X2) = 0.
    std::vector<LinForm> q{lf_mutual(3, S({1}), S({2}))};
    auto x = search_counterexample(-lf_mutual(3, S({1}), S({2}), S({3})), q);
    REQUIRE(x);
    auto h = oracle::entropy_vector(x->pmf.alphabet(), x->pmf.probs());
    CHECK(std::abs(oracle::mutual(h, 1, 2, 0)) < 1e-9);
    CHECK(oracle::mutual(h, 1, 2, 4) > 1e-6);

    CHECK_FALSE(search_counterexample(lf_mutual(3, S({1}), S({2})), {}));
}

TEST_CASE("search is reproducible for a fixed seed")
{
    // Without the structured phase the random restarts must find this.
    LinForm bad = lf_mutual(3, S({1}), S({2})) - lf_mutual(3, S({1}), S({2}), S({3}));
    for (int jobs : {1, 3}) {
        SearchOptions o;
        o.structured = false;
        o.seed = 42;
        o.jobs = jobs;
        auto a = search_counterexample(bad, {}, o);
        auto b = search_counterexample(bad, {}, o);
        REQUIRE(a);
        REQUIRE(b);
        CHECK(a->pmf.probs() == b->pmf.probs());
        CHECK(a->value == b->value);
    }
}
