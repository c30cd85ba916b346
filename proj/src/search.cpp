#include "ineq/search.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <set>

#include "ineq/error.hpp"

namespace ineq {

namespace {

double xlog2x(double x)
{
    return x > 0 ? x * std::log2(x) : 0.0;
}

// Incremental evaluator of  b.h(p) + penalty * sum_j |q_j.h(p)|  over
// unnormalized atom weights. Only the subsets that appear in some form are
// tracked; each tracked marginal keeps sum q log q so a single-atom change
// costs one cell update per subset.
class Evaluator {
public:
    Evaluator(const LinForm& b, std::span<const LinForm> qs, const std::vector<int>& alphabet)
        : atoms_(1)
    {
        for (int k : alphabet)
            atoms_ *= static_cast<std::size_t>(k);
        std::set<VarSet> needed;
        for (const auto& [s, c] : b.terms())
            needed.insert(s);
        for (const auto& q : qs)
            for (const auto& [s, c] : q.terms())
                needed.insert(s);
        subsets_.assign(needed.begin(), needed.end());
        const std::size_t m = subsets_.size();
        obj_.assign(m, 0.0);
        cons_.assign(qs.size(), std::vector<double>(m, 0.0));
        for (std::size_t t = 0; t < m; ++t) {
            obj_[t] = b.coeff(subsets_[t]).get_d();
            for (std::size_t j = 0; j < qs.size(); ++j)
                cons_[j][t] = qs[j].coeff(subsets_[t]).get_d();
        }
        const int n = static_cast<int>(alphabet.size());
        cell_of_.assign(m, std::vector<std::uint32_t>(atoms_));
        cells_.assign(m, {});
        for (std::size_t t = 0; t < m; ++t) {
            std::vector<std::size_t> stride(n, 0);
            std::size_t size = 1;
            for (int v = n; v >= 1; --v)
                if (subsets_[t].contains(v)) {
                    stride[v - 1] = size;
                    size *= static_cast<std::size_t>(alphabet[v - 1]);
                }
            cells_[t].assign(size, 0.0);
            for (std::size_t a = 0; a < atoms_; ++a) {
                std::size_t rem = a, idx = 0;
                for (int v = n - 1; v >= 0; --v) {
                    std::size_t digit = rem % static_cast<std::size_t>(alphabet[v]);
                    rem /= static_cast<std::size_t>(alphabet[v]);
                    idx += digit * stride[v];
                }
                cell_of_[t][a] = static_cast<std::uint32_t>(idx);
            }
        }
        xlogx_.assign(m, 0.0);
    }

    std::size_t atoms() const { return atoms_; }
    const std::vector<double>& weights() const { return w_; }

    void load(std::vector<double> w)
    {
        w_ = std::move(w);
        total_ = 0;
        for (double x : w_)
            total_ += x;
        for (std::size_t t = 0; t < subsets_.size(); ++t) {
            std::fill(cells_[t].begin(), cells_[t].end(), 0.0);
            for (std::size_t a = 0; a < atoms_; ++a)
                cells_[t][cell_of_[t][a]] += w_[a];
            xlogx_[t] = 0;
            for (double c : cells_[t])
                xlogx_[t] += xlog2x(c);
        }
    }

    // Objective with atom `a` set to `value`, without committing.
    double trial(std::size_t a, double value, double penalty) const
    {
        double delta = value - w_[a];
        double total = total_ + delta;
        if (total <= 0)
            return INFINITY;
        thread_local std::vector<double> h;
        h.resize(subsets_.size());
        double lt = std::log2(total);
        for (std::size_t t = 0; t < subsets_.size(); ++t) {
            double c = cells_[t][cell_of_[t][a]];
            double xl = xlogx_[t] - xlog2x(c) + xlog2x(std::max(0.0, c + delta));
            h[t] = lt - xl / total;
        }
        return combine(h, penalty);
    }

    double current(double penalty) const
    {
        std::vector<double> h(subsets_.size());
        double lt = std::log2(total_);
        for (std::size_t t = 0; t < subsets_.size(); ++t)
            h[t] = lt - xlogx_[t] / total_;
        return combine(h, penalty);
    }

    double violation() const
    {
        std::vector<double> h(subsets_.size());
        double lt = std::log2(total_);
        for (std::size_t t = 0; t < subsets_.size(); ++t)
            h[t] = lt - xlogx_[t] / total_;
        double v = 0;
        for (const auto& row : cons_) {
            double s = 0;
            for (std::size_t t = 0; t < h.size(); ++t)
                s += row[t] * h[t];
            v += std::fabs(s);
        }
        return v;
    }

    void commit(std::size_t a, double value)
    {
        double delta = value - w_[a];
        for (std::size_t t = 0; t < subsets_.size(); ++t) {
            double& c = cells_[t][cell_of_[t][a]];
            xlogx_[t] -= xlog2x(c);
            c = std::max(0.0, c + delta);
            xlogx_[t] += xlog2x(c);
        }
        w_[a] = value;
        total_ += delta;
    }

private:
    double combine(const std::vector<double>& h, double penalty) const
    {
        double f = 0;
        for (std::size_t t = 0; t < h.size(); ++t)
            f += obj_[t] * h[t];
        if (penalty > 0)
            for (const auto& row : cons_) {
                double s = 0;
                for (std::size_t t = 0; t < h.size(); ++t)
                    s += row[t] * h[t];
                f += penalty * std::fabs(s);
            }
        return f;
    }

    std::size_t atoms_;
    std::vector<VarSet> subsets_;
    std::vector<double> obj_;
    std::vector<std::vector<double>> cons_;
    std::vector<std::vector<std::uint32_t>> cell_of_;
    std::vector<std::vector<double>> cells_;
    std::vector<double> xlogx_;
    std::vector<double> w_;
    double total_ = 0;
};

std::vector<int> resolve_alphabet(int n, const SearchOptions& opts)
{
    if (!opts.alphabets.empty()) {
        if (static_cast<int>(opts.alphabets.size()) != n)
            throw Error(Errc::InvalidArgument, "need one alphabet size per variable");
        return opts.alphabets;
    }
    if (opts.alphabet < 1)
        throw Error(Errc::InvalidArgument, "alphabet size must be positive");
    return std::vector<int>(n, opts.alphabet);
}

std::optional<JointPMF> to_pmf(const std::vector<int>& alphabet, const std::vector<double>& w)
{
    long double total = 0;
    for (double x : w)
        total += x;
    if (!(total > 0))
        return std::nullopt;
    std::vector<double> p(w.size());
    long double acc = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        p[i] = static_cast<double>(w[i] / total);
        acc += p[i];
    }
    *std::max_element(p.begin(), p.end()) += static_cast<double>(1.0L - acc);
    try {
        return JointPMF(alphabet, std::move(p));
    } catch (const Error&) {
        return std::nullopt;
    }
}

// Every assignment X_i = sum_j a_ij U_j (mod k) over s uniform sources.
std::optional<SearchResult> structured_phase(const LinForm& b, std::span<const LinForm> qs,
                                             const std::vector<int>& alphabet, const SearchOptions& opts)
{
    const int n = static_cast<int>(alphabet.size());
    const int k = *std::min_element(alphabet.begin(), alphabet.end());
    if (k < 2)
        return std::nullopt;
    constexpr std::size_t kCap = 20000;
    Evaluator ev(b, qs, alphabet);
    std::optional<SearchResult> best;
    std::size_t tried = 0;
    for (int sources = 1; sources <= 3; ++sources) {
        std::size_t combos_per_var = 1;
        for (int j = 0; j < sources; ++j)
            combos_per_var *= static_cast<std::size_t>(k);
        std::size_t outcomes = combos_per_var;
        std::vector<std::size_t> choice(n, 0);
        for (;;) {
            if (++tried > kCap)
                return best;
            std::vector<double> w(ev.atoms(), 0.0);
            for (std::size_t u = 0; u < outcomes; ++u) {
                std::size_t atom = 0;
                for (int i = 0; i < n; ++i) {
                    std::size_t coeffs = choice[i], src = u;
                    int x = 0;
                    for (int j = 0; j < sources; ++j) {
                        x += static_cast<int>((coeffs % k) * (src % k));
                        coeffs /= k;
                        src /= k;
                    }
                    atom = atom * static_cast<std::size_t>(alphabet[i]) + static_cast<std::size_t>(x % k);
                }
                w[atom] += 1.0;
            }
            ev.load(w);
            double value = ev.current(0.0);
            if (value < -opts.violation && ev.violation() < opts.tolerance && (!best || value < best->value - 1e-12)) {
                if (auto p = to_pmf(alphabet, w)) {
                    double exact_value = 0;
                    if (meets_thresholds(b, qs, *p, opts, &exact_value))
                        best = SearchResult{*p, exact_value};
                }
            }
            int i = 0;
            for (; i < n; ++i) {
                if (++choice[i] < combos_per_var)
                    break;
                choice[i] = 0;
            }
            if (i == n)
                break;
        }
    }
    return best;
}

std::optional<SearchResult> random_worker(const LinForm& b, std::span<const LinForm> qs, const std::vector<int>& alphabet,
                                          const SearchOptions& opts, int worker)
{
    std::mt19937_64 rng(opts.seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(worker + 1)));
    auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    Evaluator ev(b, qs, alphabet);
    const std::size_t atoms = ev.atoms();
    static constexpr int kSnap[] = {2, 3, 4, 6, 8, 12, 16, 24};

    auto try_accept = [&](const std::vector<double>& w) -> std::optional<SearchResult> {
        auto p = to_pmf(alphabet, w);
        double value = 0;
        if (p && meets_thresholds(b, qs, *p, opts, &value))
            return SearchResult{*p, value};
        return std::nullopt;
    };

    for (int restart = 0; restart < opts.budget; ++restart) {
        std::vector<double> w(atoms);
        bool sparse = uniform() < 0.5;
        for (auto& x : w)
            x = (sparse && uniform() < 0.5) ? 0.0 : -std::log1p(-uniform());
        if (std::all_of(w.begin(), w.end(), [](double x) { return x == 0.0; }))
            w[rng() % atoms] = 1.0;
        ev.load(w);

        double penalty = 8.0;
        for (int round = 0; round < 8; ++round) {
            double step = 0.5;
            double f = ev.current(penalty);
            for (int sweep = 0; sweep < opts.iterations && step > 1e-9; ++sweep) {
                bool improved = false;
                double scale = *std::max_element(ev.weights().begin(), ev.weights().end());
                for (std::size_t a = 0; a < atoms; ++a) {
                    double cur = ev.weights()[a];
                    double cand[3] = {cur > 0 ? cur * (1 + step) : step * scale,
                                      cur / (1 + step), 0.0};
                    for (double v : cand) {
                        if (v == cur)
                            continue;
                        double g = ev.trial(a, v, penalty);
                        if (g < f - 1e-15) {
                            ev.commit(a, v);
                            f = g;
                            improved = true;
                            cur = v;
                        }
                    }
                }
                if (!improved)
                    step *= 0.5;
                if (sweep % 16 == 15)
                    ev.load(ev.weights());  // refresh accumulated sums
            }
            ev.load(ev.weights());
            if (ev.violation() < opts.tolerance)
                break;
            penalty *= 2;
        }

        if (auto r = try_accept(ev.weights()))
            return r;
        double total = 0;
        for (double x : ev.weights())
            total += x;
        for (int d : kSnap) {
            std::vector<double> snapped(atoms);
            for (std::size_t a = 0; a < atoms; ++a)
                snapped[a] = std::round(ev.weights()[a] / total * d);
            if (auto r = try_accept(snapped))
                return r;
        }
    }
    return std::nullopt;
}

} // namespace

bool meets_thresholds(const LinForm& b, std::span<const LinForm> constraints, const JointPMF& p,
                      const SearchOptions& opts, double* value)
{
    if (p.n() != b.n())
        return false;
    auto h = entropy_vector_extended(p);
    long double v = evaluate(b, std::span<const long double>(h));
    if (value)
        *value = static_cast<double>(v);
    if (!(v < -static_cast<long double>(opts.violation)))
        return false;
    for (const auto& q : constraints)
        if (!(std::fabs(evaluate(q, std::span<const long double>(h))) < static_cast<long double>(opts.tolerance)))
            return false;
    return true;
}

std::optional<SearchResult> search_counterexample(const LinForm& b, std::span<const LinForm> constraints,
                                                  const SearchOptions& opts)
{
    const int n = b.n();
    for (const auto& q : constraints)
        if (q.n() != n)
            throw Error(Errc::ContextMismatch, "constraint over a different variable count");
    std::vector<int> alphabet = resolve_alphabet(n, opts);
    if (b.is_zero())
        return std::nullopt;

    if (opts.structured)
        if (auto r = structured_phase(b, constraints, alphabet, opts))
            return r;

    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1)
        return random_worker(b, constraints, alphabet, opts, 0);

    std::vector<std::future<std::optional<SearchResult>>> futures;
    for (int w = 0; w < jobs; ++w)
        futures.push_back(std::async(std::launch::async, [&, w] {
            return random_worker(b, constraints, alphabet, opts, w);
        }));
    // lowest worker index wins, so the outcome does not depend on scheduling
    std::optional<SearchResult> found;
    for (auto& f : futures) {
        auto r = f.get();
        if (!found && r)
            found = std::move(r);
    }
    return found;
}

} // namespace ineq
