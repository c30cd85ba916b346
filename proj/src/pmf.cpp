#include "ineq/models.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <iomanip>
#include <ostream>
#include <random>
#include <string>

#include "ineq/error.hpp"

namespace ineq {

namespace {

constexpr std::size_t kMaxAtoms = std::size_t(1) << 24;

std::size_t atom_count(const std::vector<int>& alphabet)
{
    std::size_t total = 1;
    for (int k : alphabet) {
        if (k < 1)
            throw Error(Errc::InvalidPmf, "alphabet sizes must be positive");
        total *= static_cast<std::size_t>(k);
        if (total > kMaxAtoms)
            throw Error(Errc::InvalidPmf, "joint alphabet too large");
    }
    return total;
}

// Marginal of p onto s as a dense table over the product of the kept alphabets.
template <typename Real>
std::vector<Real> marginal(const JointPMF& p, VarSet s)
{
    const int n = p.n();
    std::vector<std::size_t> stride(n, 0);
    std::size_t size = 1;
    for (int v = n; v >= 1; --v) {
        if (s.contains(v)) {
            stride[v - 1] = size;
            size *= static_cast<std::size_t>(p.alphabet()[v - 1]);
        }
    }
    std::vector<Real> out(size, Real(0));
    // walk atoms with an odometer over the full alphabet
    std::vector<int> digit(n, 0);
    std::size_t idx = 0;
    for (std::size_t a = 0; a < p.atoms(); ++a) {
        out[idx] += static_cast<Real>(p.probs()[a]);
        for (int v = n - 1; v >= 0; --v) {
            ++digit[v];
            idx += stride[v];
            if (digit[v] < p.alphabet()[v])
                break;
            idx -= stride[v] * static_cast<std::size_t>(digit[v]);
            digit[v] = 0;
        }
    }
    return out;
}

template <typename Real>
Real entropy_bits(const std::vector<Real>& q)
{
    Real h = 0;
    for (Real x : q)
        if (x > 0)
            h -= x * std::log2(x);
    return h;
}

} // namespace

JointPMF::JointPMF(std::vector<int> alphabet, std::vector<double> prob)
    : alphabet_(std::move(alphabet)), prob_(std::move(prob))
{
    if (alphabet_.empty())
        throw Error(Errc::InvalidPmf, "no variables");
    check_var_count(n());
    if (atom_count(alphabet_) != prob_.size())
        throw Error(Errc::InvalidPmf, "table has " + std::to_string(prob_.size()) + " entries, alphabet product is " +
                                          std::to_string(atom_count(alphabet_)));
    long double sum = 0;
    for (double x : prob_) {
        if (!(x >= 0.0) || !std::isfinite(x))
            throw Error(Errc::InvalidPmf, "probabilities must be finite and nonnegative");
        sum += x;
    }
    if (std::fabs(static_cast<double>(sum - 1.0L)) > 1e-12)
        throw Error(Errc::InvalidPmf, "probabilities sum to " + std::to_string(static_cast<double>(sum)));
}

int JointPMF::value(std::size_t atom, int var) const
{
    for (int v = n(); v > var; --v)
        atom /= static_cast<std::size_t>(alphabet_[v - 1]);
    return static_cast<int>(atom % static_cast<std::size_t>(alphabet_[var - 1]));
}

double subset_entropy(const JointPMF& p, VarSet s)
{
    if (s.empty())
        return 0.0;
    if (!s.within(p.n()))
        throw Error(Errc::OutOfRange, "subset outside the pmf's variables");
    return entropy_bits(marginal<double>(p, s));
}

EntropyVector entropy_vector(const JointPMF& p)
{
    EntropyVector h{p.n(), std::vector<double>(num_coords(p.n()))};
    for (std::uint32_t m = 1; m <= static_cast<std::uint32_t>(num_coords(p.n())); ++m)
        h.values[m - 1] = entropy_bits(marginal<double>(p, VarSet::from_bits(m)));
    return h;
}

std::vector<long double> entropy_vector_extended(const JointPMF& p)
{
    std::vector<long double> h(num_coords(p.n()));
    for (std::uint32_t m = 1; m <= static_cast<std::uint32_t>(num_coords(p.n())); ++m)
        h[m - 1] = entropy_bits(marginal<long double>(p, VarSet::from_bits(m)));
    return h;
}

JointPMF random_pmf(int n, const std::vector<int>& alphabet, std::uint64_t seed)
{
    check_var_count(n);
    if (static_cast<int>(alphabet.size()) != n)
        throw Error(Errc::InvalidPmf, "need one alphabet size per variable");
    std::size_t atoms = atom_count(alphabet);
    std::mt19937_64 rng(seed);
    std::vector<double> w(atoms);
    long double sum = 0;
    for (auto& x : w) {
        // Exp(1) from the top 53 bits; mt19937_64 output is fully specified.
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        x = -std::log1p(-u);
        sum += x;
    }
    if (sum <= 0)
        w.assign(atoms, 1.0), sum = static_cast<long double>(atoms);
    long double acc = 0;
    for (auto& x : w) {
        x = static_cast<double>(x / sum);
        acc += x;
    }
    // fold the rounding residue into the largest atom
    auto big = std::max_element(w.begin(), w.end());
    *big += static_cast<double>(1.0L - acc);
    return JointPMF(alphabet, std::move(w));
}

JointPMF read_pmf(std::istream& in)
{
    int n = 0;
    if (!(in >> n))
        throw Error(Errc::InvalidPmf, "missing variable count");
    check_var_count(n);
    std::vector<int> alphabet(n);
    for (auto& k : alphabet)
        if (!(in >> k))
            throw Error(Errc::InvalidPmf, "missing alphabet size");
    std::size_t atoms = atom_count(alphabet);
    std::vector<double> prob(atoms);
    for (auto& x : prob) {
        std::string tok;
        if (!(in >> tok))
            throw Error(Errc::InvalidPmf, "expected " + std::to_string(atoms) + " probabilities");
        std::size_t used = 0;
        try {
            x = std::stod(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size())
            throw Error(Errc::InvalidPmf, "bad probability '" + tok + "'");
    }
    std::string extra;
    if (in >> extra)
        throw Error(Errc::InvalidPmf, "trailing data after probability table");
    return JointPMF(std::move(alphabet), std::move(prob));
}

void write_pmf(std::ostream& out, const JointPMF& p)
{
    out << p.n();
    for (int k : p.alphabet())
        out << ' ' << k;
    out << '\n' << std::setprecision(17);
    for (double x : p.probs())
        out << x << '\n';
}

} // namespace ineq
