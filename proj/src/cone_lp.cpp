#include "cone_lp.hpp"

#include "ineq/error.hpp"

namespace ineq::detail {

namespace {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// Row echelon form R = T Q with R in reduced form.
struct Echelon {
    Mat reduced;
    Mat transform;
    std::vector<int> pivot_cols;
};

Echelon row_reduce(std::span<const LinForm> rows, int k)
{
    const std::size_t q = rows.size();
    Echelon e;
    e.reduced.assign(q, Vec(k));
    e.transform.assign(q, Vec(q));
    for (std::size_t i = 0; i < q; ++i) {
        e.reduced[i] = rows[i].dense();
        e.transform[i][i] = 1;
    }
    std::size_t row = 0;
    for (int col = 0; col < k && row < q; ++col) {
        std::size_t p = row;
        while (p < q && sgn(e.reduced[p][col]) == 0)
            ++p;
        if (p == q)
            continue;
        std::swap(e.reduced[p], e.reduced[row]);
        std::swap(e.transform[p], e.transform[row]);
        Rational inv = 1 / e.reduced[row][col];
        for (auto& v : e.reduced[row]) v *= inv;
        for (auto& v : e.transform[row]) v *= inv;
        for (std::size_t r = 0; r < q; ++r) {
            if (r == row || sgn(e.reduced[r][col]) == 0)
                continue;
            Rational f = e.reduced[r][col];
            for (int c = 0; c < k; ++c)
                if (sgn(e.reduced[row][c]) != 0)
                    e.reduced[r][c] -= f * e.reduced[row][c];
            for (std::size_t c = 0; c < q; ++c)
                if (sgn(e.transform[row][c]) != 0)
                    e.transform[r][c] -= f * e.transform[row][c];
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    e.reduced.resize(row);
    e.transform.resize(row);
    return e;
}

Vec make_primitive(Vec v)
{
    Integer l = 1, g = 0;
    for (const auto& x : v) {
        if (sgn(x) == 0)
            continue;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    }
    for (auto& x : v) {
        x *= l;
        if (sgn(x) != 0)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
    }
    if (g > 1)
        for (auto& x : v)
            x /= g;
    return v;
}

} // namespace

ConeLpResult solve_cone_lp(const LinForm& b, std::span<const LinForm> cone, std::span<const LinForm> constraints)
{
    const int n = b.n();
    const int k = num_coords(n);
    for (const auto& f : cone)
        if (f.n() != n)
            throw Error(Errc::DimensionMismatch, "cone row over a different variable count");
    for (const auto& f : constraints)
        if (f.n() != n)
            throw Error(Errc::DimensionMismatch, "constraint row over a different variable count");

    Echelon ech = row_reduce(constraints, k);
    const int rank = static_cast<int>(ech.pivot_cols.size());
    const int d = k - rank;

    // Null-space basis: one column per free coordinate. basis[j] is the row
    // of N for coordinate j.
    std::vector<bool> is_pivot(k, false);
    for (int c : ech.pivot_cols)
        is_pivot[c] = true;
    Mat basis(k, Vec(d));
    {
        int t = 0;
        for (int f = 0; f < k; ++f) {
            if (is_pivot[f])
                continue;
            basis[f][t] = 1;
            for (int i = 0; i < rank; ++i)
                if (sgn(ech.reduced[i][f]) != 0)
                    basis[ech.pivot_cols[i]][t] = -ech.reduced[i][f];
            ++t;
        }
    }

    auto project = [&](const LinForm& f) {
        Vec out(d);
        for (const auto& [s, c] : f.terms()) {
            const Vec& row = basis[coord_index(s)];
            for (int t = 0; t < d; ++t)
                if (sgn(row[t]) != 0)
                    out[t] += c * row[t];
        }
        return out;
    };

    const int m = static_cast<int>(cone.size());
    const int cols = 2 * d + m;
    Vec cost = project(b);

    // Rows:  -A y+ + A y- + s = 0, slack s basic.
    Mat tab(m, Vec(cols));
    std::vector<int> in_basis(m);
    for (int i = 0; i < m; ++i) {
        Vec a = project(cone[i]);
        for (int t = 0; t < d; ++t) {
            tab[i][t] = -a[t];
            tab[i][d + t] = a[t];
        }
        tab[i][2 * d + i] = 1;
        in_basis[i] = 2 * d + i;
    }
    Vec reduced(cols);
    for (int t = 0; t < d; ++t) {
        reduced[t] = cost[t];
        reduced[d + t] = -cost[t];
    }

    ConeLpResult result;
    for (;;) {
        int enter = -1;
        for (int j = 0; j < cols; ++j)
            if (sgn(reduced[j]) < 0) {
                enter = j;
                break;
            }
        if (enter < 0)
            break;

        // All right-hand sides are zero, so every eligible row ties in the
        // ratio test; Bland picks the smallest basic index.
        int leave = -1;
        for (int i = 0; i < m; ++i)
            if (sgn(tab[i][enter]) > 0 && (leave < 0 || in_basis[i] < in_basis[leave]))
                leave = i;

        if (leave < 0) {
            Vec x(cols);
            x[enter] = 1;
            for (int i = 0; i < m; ++i)
                x[in_basis[i]] = -tab[i][enter];
            Vec h(k);
            for (int j = 0; j < k; ++j)
                for (int t = 0; t < d; ++t)
                    if (sgn(basis[j][t]) != 0)
                        h[j] += basis[j][t] * (x[t] - x[d + t]);
            result.bounded = false;
            result.ray = make_primitive(std::move(h));
            return result;
        }

        ++result.pivots;
        Vec& prow = tab[leave];
        Rational inv = 1 / prow[enter];
        for (auto& v : prow)
            if (sgn(v) != 0)
                v *= inv;
        std::vector<int> nz;
        for (int j = 0; j < cols; ++j)
            if (sgn(prow[j]) != 0)
                nz.push_back(j);
        for (int i = 0; i < m; ++i) {
            if (i == leave || sgn(tab[i][enter]) == 0)
                continue;
            Rational f = tab[i][enter];
            for (int j : nz)
                tab[i][j] -= f * prow[j];
        }
        if (sgn(reduced[enter]) != 0) {
            Rational f = reduced[enter];
            for (int j : nz)
                reduced[j] -= f * prow[j];
        }
        in_basis[leave] = enter;
    }

    // Optimal: the reduced costs of the slacks are the multipliers.
    result.bounded = true;
    result.lambda.assign(m, Rational(0));
    LinForm residual = b;
    for (int i = 0; i < m; ++i) {
        result.lambda[i] = reduced[2 * d + i];
        if (sgn(result.lambda[i]) != 0)
            residual.add(cone[i], -result.lambda[i]);
    }
    // residual lies in the row space of Q: residual = sum_i nu_i R_i, R = T Q.
    Vec dense_res = residual.dense();
    result.mu.assign(constraints.size(), Rational(0));
    for (int i = 0; i < rank; ++i) {
        const Rational& nu = dense_res[ech.pivot_cols[i]];
        if (sgn(nu) == 0)
            continue;
        for (std::size_t j = 0; j < constraints.size(); ++j)
            if (sgn(ech.transform[i][j]) != 0)
                result.mu[j] += nu * ech.transform[i][j];
    }
    for (std::size_t j = 0; j < constraints.size(); ++j)
        if (sgn(result.mu[j]) != 0)
            residual.add(constraints[j], -result.mu[j]);
    if (!residual.is_zero())
        throw Error(Errc::Internal, "dual reconstruction left residual " + residual.to_string());
    return result;
}

} // namespace ineq::detail
