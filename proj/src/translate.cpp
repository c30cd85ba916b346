#include "ineq/translate.hpp"

#include <json.hpp>

#include "ineq/error.hpp"

namespace ineq {

namespace {

std::string index_list(VarSet s, const char* prefix, const char* sep)
{
    std::string out;
    for (int i : s.indices()) {
        if (!out.empty())
            out += sep;
        out += prefix + std::to_string(i);
    }
    return out;
}

std::string minor_symbol(int n, VarSet s)
{
    if (s == VarSet::full(n))
        return "K";
    std::string digits;
    bool single = s.max_index() < 10;
    for (int i : s.indices())
        digits += (single || digits.empty() ? "" : ",") + std::to_string(i);
    return single ? "K_" + digits : "K_{" + digits + "}";
}

std::vector<TranslatedTerm> term_list(const LinForm& b)
{
    std::vector<TranslatedTerm> out;
    for (const auto& [s, c] : b.terms())
        out.push_back({s, c});
    return out;
}

// Integer multiple of the coefficients with gcd 1.
std::vector<Integer> primitive(const LinForm& b)
{
    Integer l = 1, g = 0;
    for (const auto& [s, c] : b.terms())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> out;
    for (const auto& [s, c] : b.terms()) {
        Rational scaled = c * l;
        out.push_back(scaled.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    for (auto& e : out)
        e /= g;
    return out;
}

std::string factor_text(TranslationKind kind, int n, const Factor& f)
{
    std::string sym = "|" + (kind == TranslationKind::Group && f.set.empty() ? std::string("G") : term_symbol(kind, n, f.set)) + "|";
    if (f.exponent != 1)
        sym += "^" + f.exponent.get_str();
    return sym;
}

std::string product_text(TranslationKind kind, int n, const std::vector<Factor>& fs)
{
    if (fs.empty())
        return "1";
    std::string out;
    for (const auto& f : fs) {
        if (!out.empty())
            out += ' ';
        out += factor_text(kind, n, f);
    }
    return out;
}

// "a - 2 b + 1/2 c", or "0".
std::string signed_sum(const std::vector<std::pair<Rational, std::string>>& items)
{
    std::string out;
    for (const auto& [c, sym] : items) {
        Rational mag = abs(c);
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        if (mag != 1)
            out += to_string(mag) + " ";
        out += sym;
    }
    return out.empty() ? "0" : out;
}

// Positive coefficients on the left, negated negatives on the right.
std::string split_sum(const std::vector<std::pair<Rational, std::string>>& items, const char* rel)
{
    std::vector<std::pair<Rational, std::string>> lhs, rhs;
    for (const auto& [c, sym] : items)
        (sgn(c) > 0 ? lhs : rhs).push_back({abs(c), sym});
    return signed_sum(lhs) + " " + rel + " " + signed_sum(rhs);
}

} // namespace

std::string term_symbol(TranslationKind kind, int n, VarSet s)
{
    switch (kind) {
    case TranslationKind::Group: return index_list(s, "G_", "&");
    case TranslationKind::Minor: return minor_symbol(n, s);
    case TranslationKind::Kolmogorov: return "K(" + index_list(s, "x_", ",") + ")";
    }
    return {};
}

TranslatedInequality to_group_inequality(const LinForm& b)
{
    TranslatedInequality t;
    t.kind = TranslationKind::Group;
    t.n = b.n();
    t.terms = term_list(b);
    // sum c_a (log|G| - log|G_a|) >= 0  <=>  |G|^E prod |G_a|^(-c_a) >= 1
    auto e = primitive(b);
    Integer total = 0;
    for (const auto& x : e)
        total += x;
    if (sgn(total) > 0)
        t.big.push_back({VarSet{}, total});
    else if (sgn(total) < 0)
        t.small.push_back({VarSet{}, -total});
    std::size_t k = 0;
    for (const auto& [s, c] : b.terms()) {
        const Integer& x = e[k++];
        if (sgn(x) < 0)
            t.big.push_back({s, -x});
        else
            t.small.push_back({s, x});
    }
    t.text = product_text(t.kind, t.n, t.big) + " >= " + product_text(t.kind, t.n, t.small);
    std::vector<std::pair<Rational, std::string>> items;
    for (const auto& term : t.terms)
        items.push_back({term.coeff, "log(|G|/|" + term_symbol(t.kind, t.n, term.set) + "|)"});
    t.log_text = signed_sum(items) + " >= 0";
    return t;
}

TranslatedInequality to_minor_inequality(const LinForm& b)
{
    if (!is_balanced(b))
        throw Error(Errc::Unbalanced, "form " + b.to_string() + " is not balanced; it has no principal-minor counterpart");
    TranslatedInequality t;
    t.kind = TranslationKind::Minor;
    t.n = b.n();
    t.terms = term_list(b);
    // sum c_a 1/2 log|K_a| >= 0  <=>  prod_{c<0} |K_a|^(-c) <= prod_{c>0} |K_a|^c
    auto e = primitive(b);
    std::size_t k = 0;
    for (const auto& [s, c] : b.terms()) {
        const Integer& x = e[k++];
        if (sgn(x) > 0)
            t.big.push_back({s, x});
        else
            t.small.push_back({s, -x});
    }
    t.text = product_text(t.kind, t.n, t.small) + " <= " + product_text(t.kind, t.n, t.big);
    std::vector<std::pair<Rational, std::string>> items;
    for (const auto& term : t.terms)
        items.push_back({term.coeff, "log|" + term_symbol(t.kind, t.n, term.set) + "|"});
    t.log_text = split_sum(items, ">=");
    return t;
}

TranslatedInequality to_kolmogorov(const LinForm& b)
{
    TranslatedInequality t;
    t.kind = TranslationKind::Kolmogorov;
    t.n = b.n();
    t.terms = term_list(b);
    std::vector<std::pair<Rational, std::string>> items;
    for (const auto& term : t.terms)
        items.push_back({term.coeff, term_symbol(t.kind, t.n, term.set)});
    t.text = split_sum(items, ">=");
    t.log_text = signed_sum(items) + " >= 0";
    return t;
}

LinForm to_linform(const TranslatedInequality& t)
{
    LinForm f(t.n);
    for (const auto& term : t.terms)
        f.add(term.set, term.coeff);
    return f;
}

std::string to_json(const TranslatedInequality& t)
{
    using nlohmann::ordered_json;
    static const char* names[] = {"group", "minor", "kolmogorov"};
    ordered_json j;
    j["kind"] = names[static_cast<int>(t.kind)];
    j["text"] = t.text;
    j["terms"] = ordered_json::array();
    for (const auto& term : t.terms)
        j["terms"].push_back({{"symbol", term_symbol(t.kind, t.n, term.set)}, {"coefficient", to_string(term.coeff)}});
    if (t.kind != TranslationKind::Kolmogorov) {
        auto factors = [&](const std::vector<Factor>& fs) {
            ordered_json arr = ordered_json::array();
            for (const auto& f : fs) {
                std::string sym = t.kind == TranslationKind::Group && f.set.empty() ? "G" : term_symbol(t.kind, t.n, f.set);
                arr.push_back({{"symbol", sym}, {"exponent", f.exponent.get_str()}});
            }
            return arr;
        };
        j["big"] = factors(t.big);
        j["small"] = factors(t.small);
    }
    return j.dump();
}

} // namespace ineq
