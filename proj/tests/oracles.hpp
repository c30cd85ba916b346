#pragma once

// Reference computations used only by the tests. They deliberately share no
// code with the library beyond its data types.

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

// Entropy in bits of the marginal on the variables in `mask` (bit i-1 for
// variable i), by summing atoms into a map keyed by the marginal tuple.
inline double marginal_entropy(const std::vector<int>& alphabet, const std::vector<double>& prob, std::uint32_t mask)
{
    std::map<std::vector<int>, double> marg;
    std::size_t n = alphabet.size();
    std::vector<int> idx(n, 0);
    for (double p : prob) {
        std::vector<int> key;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u)
                key.push_back(idx[i]);
        marg[key] += p;
        for (std::size_t i = n; i-- > 0;) {
            if (++idx[i] < alphabet[i])
                break;
            idx[i] = 0;
        }
    }
    double h = 0;
    for (const auto& [k, q] : marg)
        if (q > 0)
            h -= q * std::log2(q);
    return h;
}

inline std::vector<double> entropy_vector(const std::vector<int>& alphabet, const std::vector<double>& prob)
{
    std::uint32_t count = (1u << alphabet.size()) - 1;
    std::vector<double> h(count);
    for (std::uint32_t m = 1; m <= count; ++m)
        h[m - 1] = marginal_entropy(alphabet, prob, m);
    return h;
}

// I(A;B|C) in bits from a dense entropy vector.
inline double mutual(const std::vector<double>& h, std::uint32_t a, std::uint32_t b, std::uint32_t c)
{
    auto at = [&](std::uint32_t m) { return m == 0 ? 0.0 : h[m - 1]; };
    return at(a | c) + at(b | c) - at(a | b | c) - at(c);
}

// Polymatroid axioms on a dense vector (index m-1 for nonempty mask m, with
// h(empty) = 0): nonnegative, monotone, submodular.
inline bool is_polymatroid(const std::vector<mpq_class>& h, int n)
{
    std::uint32_t full = (1u << n) - 1;
    auto at = [&](std::uint32_t m) { return m == 0 ? mpq_class(0) : h[m - 1]; };
    for (std::uint32_t a = 0; a <= full; ++a) {
        if (at(a) < 0)
            return false;
        for (std::uint32_t b = 0; b <= full; ++b) {
            if ((a & b) == a && at(a) > at(b))
                return false;
            if (at(a) + at(b) < at(a | b) + at(a & b))
                return false;
        }
    }
    return true;
}

// Random positive symmetric matrix A A^T, row-major.
inline std::vector<double> random_psd(int n, std::mt19937_64& rng)
{
    std::normal_distribution<double> g;
    std::vector<double> a(n * n), k(n * n, 0.0);
    for (auto& x : a)
        x = g(rng);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int t = 0; t < n; ++t)
                k[i * n + j] += a[i * n + t] * a[j * n + t];
    return k;
}

// Determinant of the principal submatrix on the variables in `mask`.
inline double principal_minor(const std::vector<double>& k, int n, std::uint32_t mask)
{
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1u)
            idx.push_back(i);
    int m = static_cast<int>(idx.size());
    std::vector<double> s(m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            s[i * m + j] = k[idx[i] * n + idx[j]];
    double det = 1;
    for (int c = 0; c < m; ++c) {
        int piv = c;
        for (int r = c + 1; r < m; ++r)
            if (std::fabs(s[r * m + c]) > std::fabs(s[piv * m + c]))
                piv = r;
        if (s[piv * m + c] == 0)
            return 0;
        if (piv != c) {
            for (int j = 0; j < m; ++j)
                std::swap(s[c * m + j], s[piv * m + j]);
            det = -det;
        }
        det *= s[c * m + c];
        for (int r = c + 1; r < m; ++r) {
            double f = s[r * m + c] / s[c * m + c];
            for (int j = c; j < m; ++j)
                s[r * m + j] -= f * s[c * m + j];
        }
    }
    return det;
}

// Splits a command line on spaces, honouring double quotes.
inline std::vector<std::string> split_command(const std::string& line)
{
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false, any = false;
    for (char ch : line) {
        if (ch == '"') {
            quoted = !quoted;
            any = true;
        } else if (ch == ' ' && !quoted) {
            if (any)
                out.push_back(cur);
            cur.clear();
            any = false;
        } else {
            cur += ch;
            any = true;
        }
    }
    if (any)
        out.push_back(cur);
    return out;
}

} // namespace oracle
