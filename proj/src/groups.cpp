#include "ineq/groups.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "ineq/error.hpp"

namespace ineq {

namespace {

Error invalid(const std::string& what)
{
    return Error(Errc::InvalidGroup, what);
}

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q)
{
    // (p*q)(x) = p(q(x))
    std::vector<int> r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
        r[x] = p[q[x]];
    return r;
}

} // namespace

Group::Group(int order, std::vector<int> table) : order_(order), table_(std::move(table))
{
    if (order < 1 || order > kMaxGroupOrder)
        throw invalid("order " + std::to_string(order) + " outside 1.." + std::to_string(kMaxGroupOrder));
    if (table_.size() != static_cast<std::size_t>(order) * order)
        throw invalid("multiplication table must be order x order");
    for (int v : table_)
        if (v < 0 || v >= order)
            throw invalid("table entry " + std::to_string(v) + " is not an element");
    identity_ = -1;
    for (int e = 0; e < order && identity_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < order && ok; ++a)
            ok = mul(e, a) == a && mul(a, e) == a;
        if (ok)
            identity_ = e;
    }
    if (identity_ < 0)
        throw invalid("no identity element");
    inverse_.assign(order, -1);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            if (mul(a, b) == identity_ && mul(b, a) == identity_) {
                inverse_[a] = b;
                break;
            }
    for (int a = 0; a < order; ++a)
        if (inverse_[a] < 0)
            throw invalid("element " + std::to_string(a) + " has no inverse");
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            int ab = mul(a, b);
            for (int c = 0; c < order; ++c)
                if (mul(ab, c) != mul(a, mul(b, c)))
                    throw invalid("multiplication is not associative");
        }
}

Group Group::from_permutations(const std::vector<std::vector<int>>& generators)
{
    if (generators.empty())
        throw invalid("need at least one generator");
    const std::size_t k = generators.front().size();
    std::vector<int> id(k);
    for (std::size_t i = 0; i < k; ++i)
        id[i] = static_cast<int>(i);
    for (const auto& g : generators) {
        auto sorted = g;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != id)
            throw invalid("generator is not a permutation of 0.." + std::to_string(k - 1));
    }
    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : generators) {
            auto next = compose(elems[i], g);
            if (index.try_emplace(next, static_cast<int>(elems.size())).second) {
                elems.push_back(next);
                if (elems.size() > static_cast<std::size_t>(kMaxGroupOrder))
                    throw invalid("generated group exceeds order " + std::to_string(kMaxGroupOrder));
            }
        }
    }
    const int m = static_cast<int>(elems.size());
    std::vector<int> table(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table[static_cast<std::size_t>(a) * m + b] = index.at(compose(elems[a], elems[b]));
    return Group(m, std::move(table));
}

Group cyclic_group(int m)
{
    if (m < 1)
        throw invalid("cyclic group order must be positive");
    std::vector<int> t(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            t[static_cast<std::size_t>(a) * m + b] = (a + b) % m;
    return Group(m, std::move(t));
}

Group dihedral_group(int m)
{
    if (m < 3)
        throw invalid("dihedral group needs m >= 3");
    std::vector<int> rot(m), ref(m);
    for (int i = 0; i < m; ++i) {
        rot[i] = (i + 1) % m;
        ref[i] = (m - i) % m;
    }
    return Group::from_permutations({rot, ref});
}

Group symmetric_group(int k)
{
    if (k < 1)
        throw invalid("symmetric group degree must be positive");
    if (k == 1)
        return Group(1, {0});
    std::vector<int> swap01(k), cycle(k);
    for (int i = 0; i < k; ++i) {
        swap01[i] = i;
        cycle[i] = (i + 1) % k;
    }
    std::swap(swap01[0], swap01[1]);
    return Group::from_permutations({swap01, cycle});
}

Group alternating_group(int k)
{
    if (k < 3)
        return Group(1, {0});
    std::vector<std::vector<int>> gens;
    for (int i = 2; i < k; ++i) {
        std::vector<int> c(k);
        for (int x = 0; x < k; ++x)
            c[x] = x;
        // 3-cycle (0 1 i)
        c[0] = 1;
        c[1] = i;
        c[i] = 0;
        gens.push_back(c);
    }
    return Group::from_permutations(gens);
}

Group direct_product(const Group& a, const Group& b)
{
    const int m = a.order() * b.order();
    if (m > kMaxGroupOrder)
        throw invalid("direct product exceeds order " + std::to_string(kMaxGroupOrder));
    std::vector<int> t(static_cast<std::size_t>(m) * m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            int xa = x / b.order(), xb = x % b.order();
            int ya = y / b.order(), yb = y % b.order();
            t[static_cast<std::size_t>(x) * m + y] = a.mul(xa, ya) * b.order() + b.mul(xb, yb);
        }
    return Group(m, std::move(t));
}

Subgroup generated_subgroup(const Group& g, std::span<const int> generators)
{
    std::vector<bool> in(g.order(), false);
    std::vector<int> elems{g.identity()};
    in[g.identity()] = true;
    for (int x : generators)
        if (x < 0 || x >= g.order())
            throw invalid("generator is not an element");
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (int x : generators) {
            int y = g.mul(elems[i], x);
            if (!in[y]) {
                in[y] = true;
                elems.push_back(y);
            }
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

std::vector<Subgroup> enumerate_subgroups(const Group& g)
{
    // Every subgroup is reached from the trivial one by adjoining elements.
    std::set<Subgroup> found;
    std::vector<Subgroup> order;
    Subgroup trivial{g.identity()};
    found.insert(trivial);
    order.push_back(trivial);
    for (std::size_t i = 0; i < order.size(); ++i) {
        Subgroup h = order[i];
        std::vector<bool> in(g.order(), false);
        for (int x : h)
            in[x] = true;
        for (int x = 0; x < g.order(); ++x) {
            if (in[x])
                continue;
            std::vector<int> gens = h;
            gens.push_back(x);
            Subgroup s = generated_subgroup(g, gens);
            if (found.insert(s).second)
                order.push_back(std::move(s));
        }
    }
    std::sort(order.begin(), order.end(), [](const Subgroup& a, const Subgroup& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return order;
}

GroupSpec::GroupSpec(Group g, std::vector<Subgroup> subgroups) : group_(std::move(g)), subgroups_(std::move(subgroups))
{
    if (subgroups_.empty())
        throw invalid("need at least one subgroup");
    check_var_count(n());
    for (std::size_t i = 0; i < subgroups_.size(); ++i) {
        auto& h = subgroups_[i];
        std::sort(h.begin(), h.end());
        h.erase(std::unique(h.begin(), h.end()), h.end());
        std::string which = "subgroup " + std::to_string(i + 1);
        if (h.empty())
            throw invalid(which + " is empty");
        std::vector<bool> in(group_.order(), false);
        for (int x : h) {
            if (x < 0 || x >= group_.order())
                throw invalid(which + " lists a non-element");
            in[x] = true;
        }
        if (!in[group_.identity()])
            throw invalid(which + " lacks the identity");
        for (int x : h) {
            if (!in[group_.inverse(x)])
                throw invalid(which + " is not closed under inverses");
            for (int y : h)
                if (!in[group_.mul(x, y)])
                    throw invalid(which + " is not closed under multiplication");
        }
        if (group_.order() % static_cast<int>(h.size()) != 0)
            throw invalid(which + " order does not divide |G|");
    }
}

long GroupSpec::intersection_order(VarSet s) const
{
    if (!s.within(n()))
        throw Error(Errc::OutOfRange, "subset outside the designated subgroups");
    std::vector<int> count(group_.order(), 0);
    int need = s.size();
    if (need == 0)
        return group_.order();
    for (int i : s.indices())
        for (int x : subgroups_[i - 1])
            ++count[x];
    return std::count(count.begin(), count.end(), need);
}

EntropyVector group_vector(const GroupSpec& g)
{
    EntropyVector h{g.n(), std::vector<double>(num_coords(g.n()))};
    for (std::uint32_t m = 1; m <= static_cast<std::uint32_t>(num_coords(g.n())); ++m) {
        long inter = g.intersection_order(VarSet::from_bits(m));
        h.values[m - 1] = std::log2(static_cast<double>(g.group().order()) / static_cast<double>(inter));
    }
    return h;
}

bool verify_group_multiplicative(const LinForm& b, const GroupSpec& g)
{
    if (b.n() > g.n())
        throw Error(Errc::ContextMismatch, "form over more variables than designated subgroups");
    // Scale to integer exponents; a positive factor does not change the truth value.
    Integer l = 1;
    for (const auto& [s, c] : b.terms())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    // sum_a e_a (log|G| - log|G_a|) >= 0  <=>  |G|^E prod |G_a|^(-e_a) >= 1
    Integer big = 1, small = 1, total = 0;
    Integer p;
    for (const auto& [s, c] : b.terms()) {
        Integer e = Rational(c * l).get_num();
        total += e;
        Integer base = g.intersection_order(s);
        if (sgn(e) < 0) {
            mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), Integer(-e).get_ui());
            big *= p;
        } else {
            mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), e.get_ui());
            small *= p;
        }
    }
    Integer order = g.group().order();
    if (sgn(total) > 0) {
        mpz_pow_ui(p.get_mpz_t(), order.get_mpz_t(), total.get_ui());
        big *= p;
    } else if (sgn(total) < 0) {
        mpz_pow_ui(p.get_mpz_t(), order.get_mpz_t(), Integer(-total).get_ui());
        small *= p;
    }
    return big >= small;
}

GroupSpec read_group_spec(std::istream& in)
{
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            lines.push_back(line);
    }
    // the table may be laid out freely; collect tokens until m*m are read
    std::size_t li = 0;
    std::vector<long> header;
    auto read_ints = [](const std::string& l) {
        std::istringstream ss(l);
        std::vector<long> v;
        std::string tok;
        while (ss >> tok) {
            std::size_t used = 0;
            long x = 0;
            try {
                x = std::stol(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size())
                throw invalid("bad integer '" + tok + "'");
            v.push_back(x);
        }
        return v;
    };
    if (lines.empty())
        throw invalid("missing group order");
    header = read_ints(lines[li++]);
    if (header.size() != 1)
        throw invalid("first line must hold the group order alone");
    long m = header[0];
    if (m < 1 || m > kMaxGroupOrder)
        throw invalid("order " + std::to_string(m) + " outside 1.." + std::to_string(kMaxGroupOrder));
    std::vector<int> table;
    while (table.size() < static_cast<std::size_t>(m * m)) {
        if (li >= lines.size())
            throw invalid("multiplication table truncated");
        for (long v : read_ints(lines[li++]))
            table.push_back(static_cast<int>(v));
    }
    if (table.size() != static_cast<std::size_t>(m * m))
        throw invalid("multiplication table row overflows");
    Group g(static_cast<int>(m), std::move(table));
    std::vector<Subgroup> subs;
    for (; li < lines.size(); ++li) {
        Subgroup h;
        for (long v : read_ints(lines[li]))
            h.push_back(static_cast<int>(v));
        subs.push_back(std::move(h));
    }
    return GroupSpec(std::move(g), std::move(subs));
}

void write_group_spec(std::ostream& out, const GroupSpec& g)
{
    const int m = g.group().order();
    out << m << '\n';
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b)
            out << (b ? " " : "") << g.group().mul(a, b);
        out << '\n';
    }
    for (const auto& h : g.subgroups()) {
        for (std::size_t i = 0; i < h.size(); ++i)
            out << (i ? " " : "") << h[i];
        out << '\n';
    }
}

} // namespace ineq
