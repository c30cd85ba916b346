#include "ineq/parser.hpp"

#include <cctype>

#include "ineq/error.hpp"

namespace ineq::parse {

VarTable::VarTable(std::vector<std::string> names, bool strict) : strict_(strict)
{
    for (auto& n : names)
        declare(n);
}

int VarTable::declare(const std::string& name)
{
    if (find(name))
        throw Error(Errc::InvalidArgument, "variable '" + name + "' declared twice");
    if (static_cast<int>(names_.size()) >= kMaxVars)
        throw Error(Errc::OutOfRange, "more than " + std::to_string(kMaxVars) + " variables");
    names_.push_back(name);
    return static_cast<int>(names_.size());
}

std::optional<int> VarTable::find(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return static_cast<int>(i) + 1;
    return std::nullopt;
}

int VarTable::resolve(std::string_view name)
{
    if (auto i = find(name))
        return *i;
    if (strict_)
        throw Error(Errc::UnknownVariable, "'" + std::string(name) + "' is not a declared variable");
    return declare(std::string(name));
}

namespace {

enum class Tok {
    Ident, Number, Slash, Plus, Minus, Star, LParen, RParen, LBrace, RBrace,
    Comma, Semi, Bar, Ge, Le, Eq, Perp, End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(std::string_view s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    auto starts = [&](std::string_view lit) { return s.substr(i, lit.size()) == lit; };
    while (i < s.size()) {
        unsigned char ch = static_cast<unsigned char>(s[i]);
        if (std::isspace(ch)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        auto push = [&](Tok k, std::size_t len) {
            out.push_back({k, std::string(s.substr(start, len)), start});
            i += len;
        };
        if (starts("_|_")) push(Tok::Perp, 3);
        else if (starts("\xE2\x8A\xA5")) push(Tok::Perp, 3);      // ⊥
        else if (starts("\xE2\x89\xA5")) push(Tok::Ge, 3);        // ≥
        else if (starts("\xE2\x89\xA4")) push(Tok::Le, 3);        // ≤
        else if (starts(">=")) push(Tok::Ge, 2);
        else if (starts("<=")) push(Tok::Le, 2);
        else if (starts("==")) push(Tok::Eq, 2);
        else if (ch == '=') push(Tok::Eq, 1);
        else if (std::isalpha(ch) || ch == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            push(Tok::Ident, j - i);
        } else if (std::isdigit(ch)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            push(Tok::Number, j - i);
        } else {
            switch (ch) {
            case '/': push(Tok::Slash, 1); break;
            case '+': push(Tok::Plus, 1); break;
            case '-': push(Tok::Minus, 1); break;
            case '*': push(Tok::Star, 1); break;
            case '(': push(Tok::LParen, 1); break;
            case ')': push(Tok::RParen, 1); break;
            case '{': push(Tok::LBrace, 1); break;
            case '}': push(Tok::RBrace, 1); break;
            case ',': push(Tok::Comma, 1); break;
            case ';': push(Tok::Semi, 1); break;
            case '|': push(Tok::Bar, 1); break;
            default: throw SyntaxError(start, "a token, found '" + std::string(1, s[start]) + "'");
            }
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

bool is_coord_ident(const std::string& t)
{
    if (t.size() < 2 || t[0] != 'h')
        return false;
    for (std::size_t k = 1; k < t.size(); ++k)
        if (t[k] < '1' || t[k] > '9')
            return false;
    return true;
}

class Parser {
public:
    Parser(std::string_view text, VarTable& vars) : toks_(lex(text)), vars_(vars) {}

    Expr expr()
    {
        Sum sum;
        Rational sign(1);
        if (peek(Tok::Plus))
            next();
        else if (peek(Tok::Minus)) {
            next();
            sign = -1;
        }
        push_term(sum, sign);
        while (peek(Tok::Plus) || peek(Tok::Minus)) {
            sign = next().kind == Tok::Minus ? Rational(-1) : Rational(1);
            push_term(sum, sign);
        }
        if (sum.terms.size() == 1)
            return std::move(sum.terms.front());
        return Expr{std::move(sum)};
    }

    Relation relation()
    {
        const Token& t = cur();
        switch (t.kind) {
        case Tok::Ge: next(); return Relation::Ge;
        case Tok::Le: next(); return Relation::Le;
        case Tok::Eq: next(); return Relation::Eq;
        default: throw SyntaxError(t.pos, "relation '>=', '<=' or '='");
        }
    }

    CiStatement ci()
    {
        if (cur().kind == Tok::Ident && cur().text == "I" && toks_[pos_ + 1].kind == Tok::LParen) {
            next();
            next();
            MutualTerm m = mutual_body();
            if (peek(Tok::Eq)) {
                next();
                const Token& z = expect(Tok::Number, "0");
                if (z.text.find_first_not_of('0') != std::string::npos)
                    throw SyntaxError(z.pos, "0 on the right of a CI equation");
            }
            return {m.left, m.right, m.cond};
        }
        VarSet a = vlist();
        expect(Tok::Perp, "'_|_'");
        VarSet b = vlist();
        VarSet c;
        if (peek(Tok::Bar)) {
            next();
            c = vlist();
        }
        return {a, b, c};
    }

    void finish() { expect(Tok::End, "end of input"); }

private:
    const Token& cur() const { return toks_[pos_]; }
    bool peek(Tok k) const { return cur().kind == k; }
    const Token& next() { return toks_[pos_++]; }
    const Token& expect(Tok k, const std::string& what)
    {
        if (!peek(k))
            throw SyntaxError(cur().pos, what);
        return next();
    }

    void push_term(Sum& sum, const Rational& sign)
    {
        std::size_t at = cur().pos;
        std::optional<Rational> factor;
        if (peek(Tok::Number)) {
            factor = rational();
            if (peek(Tok::Star))
                next();
        }
        if (!starts_measure()) {
            if (factor && sgn(*factor) == 0)
                return;  // literal zero contributes nothing
            throw SyntaxError(factor ? cur().pos : at, "a measure H(...), I(...) or h<indices>");
        }
        Expr m = measure();
        Rational c = sign * factor.value_or(Rational(1));
        if (c == 1)
            sum.terms.push_back(std::move(m));
        else
            sum.terms.push_back(Expr{Scaled{c, std::make_shared<const Expr>(std::move(m))}});
    }

    Rational rational()
    {
        Integer num(next().text, 10);
        Integer den(1);
        if (peek(Tok::Slash)) {
            next();
            const Token& d = expect(Tok::Number, "denominator");
            den = Integer(d.text, 10);
            if (den == 0)
                throw SyntaxError(d.pos, "nonzero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    bool starts_measure() const
    {
        if (!peek(Tok::Ident))
            return false;
        const std::string& t = cur().text;
        Tok after = toks_[pos_ + 1].kind;
        if ((t == "H" || t == "I") && after == Tok::LParen)
            return true;
        if (t == "h" && after == Tok::LBrace)
            return true;
        return is_coord_ident(t);
    }

    Expr measure()
    {
        const Token& name = next();
        if (name.text == "H") {
            next();
            EntropyTerm e;
            e.vars = vlist();
            if (peek(Tok::Bar)) {
                next();
                e.cond = vlist();
            }
            expect(Tok::RParen, "')'");
            return Expr{e};
        }
        if (name.text == "I") {
            next();
            MutualTerm m = mutual_body();
            return Expr{m};
        }
        if (name.text == "h") {
            next();
            VarSet s;
            do {
                const Token& d = expect(Tok::Number, "variable index");
                int idx = std::stoi(d.text.size() > 3 ? std::string("99999") : d.text);
                if (idx < 1 || idx > kMaxVars)
                    throw SyntaxError(d.pos, "index in 1.." + std::to_string(kMaxVars));
                s = s | VarSet::singleton(idx);
            } while (peek(Tok::Comma) && (next(), true));
            expect(Tok::RBrace, "'}'");
            return Expr{CoordTerm{s}};
        }
        VarSet s;
        for (std::size_t k = 1; k < name.text.size(); ++k)
            s = s | VarSet::singleton(name.text[k] - '0');
        return Expr{CoordTerm{s}};
    }

    MutualTerm mutual_body()
    {
        MutualTerm m;
        m.left = vlist();
        expect(Tok::Semi, "';'");
        m.right = vlist();
        if (peek(Tok::Bar)) {
            next();
            m.cond = vlist();
        }
        expect(Tok::RParen, "')'");
        return m;
    }

    VarSet vlist()
    {
        VarSet s = VarSet::singleton(var());
        while (peek(Tok::Comma)) {
            next();
            s = s | VarSet::singleton(var());
        }
        return s;
    }

    int var()
    {
        const Token& t = expect(Tok::Ident, "variable name");
        return vars_.resolve(t.text);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    VarTable& vars_;
};

} // namespace

Expr parse_expr(std::string_view text, VarTable& vars)
{
    Parser p(text, vars);
    Expr e = p.expr();
    p.finish();
    return e;
}

Statement parse_statement(std::string_view text, VarTable& vars)
{
    Parser p(text, vars);
    Expr lhs = p.expr();
    Relation rel = p.relation();
    Expr rhs = p.expr();
    p.finish();
    return {std::move(lhs), rel, std::move(rhs)};
}

CiStatement parse_ci(std::string_view text, VarTable& vars)
{
    Parser p(text, vars);
    CiStatement ci = p.ci();
    p.finish();
    if (!ci.a.disjoint(ci.b) || !ci.a.disjoint(ci.c) || !ci.b.disjoint(ci.c))
        throw Error(Errc::DisjointnessViolated, "CI sets must be pairwise disjoint: '" + std::string(text) + "'");
    return ci;
}

namespace {

struct Lowerer {
    int n;

    LinForm operator()(const EntropyTerm& t) const { return lf_cond_entropy(n, t.vars, t.cond); }
    LinForm operator()(const MutualTerm& t) const { return lf_mutual(n, t.left, t.right, t.cond); }
    LinForm operator()(const CoordTerm& t) const { return lf_entropy(n, t.set); }
    LinForm operator()(const Scaled& t) const { return t.factor * lower(*t.inner, n); }
    LinForm operator()(const Sum& t) const
    {
        LinForm out(n);
        for (const auto& e : t.terms)
            out.add(lower(e, n));
        return out;
    }
};

struct MaxIndex {
    int operator()(const EntropyTerm& t) const { return (t.vars | t.cond).max_index(); }
    int operator()(const MutualTerm& t) const { return (t.left | t.right | t.cond).max_index(); }
    int operator()(const CoordTerm& t) const { return t.set.max_index(); }
    int operator()(const Scaled& t) const { return max_index(*t.inner); }
    int operator()(const Sum& t) const
    {
        int m = 0;
        for (const auto& e : t.terms)
            m = std::max(m, max_index(e));
        return m;
    }
};

std::string braces(VarSet s)
{
    return "{" + (s.empty() ? std::string() : s.group_label()) + "}";
}

struct Printer {
    std::string operator()(const EntropyTerm& t) const
    {
        return "H(" + braces(t.vars) + (t.cond.empty() ? "" : "|" + braces(t.cond)) + ")";
    }
    std::string operator()(const MutualTerm& t) const
    {
        return "I(" + braces(t.left) + ";" + braces(t.right) + (t.cond.empty() ? "" : "|" + braces(t.cond)) + ")";
    }
    std::string operator()(const CoordTerm& t) const { return "h" + t.set.coord_label(); }
    std::string operator()(const Scaled& t) const { return ineq::to_string(t.factor) + " * " + to_string(*t.inner); }
    std::string operator()(const Sum& t) const
    {
        if (t.terms.empty())
            return "0";
        std::string out;
        for (const auto& e : t.terms) {
            if (!out.empty())
                out += " + ";
            out += to_string(e);
        }
        return out;
    }
};

} // namespace

LinForm lower(const Expr& e, int n)
{
    return std::visit(Lowerer{n}, e.node);
}

Normalized lower(const Statement& s, int n)
{
    LinForm l = lower(s.lhs, n);
    LinForm r = lower(s.rhs, n);
    switch (s.relation) {
    case Relation::Ge: return {l - r, false};
    case Relation::Le: return {r - l, false};
    case Relation::Eq: return {l - r, true};
    }
    throw Error(Errc::Internal, "bad relation");
}

int max_index(const Expr& e)
{
    return std::visit(MaxIndex{}, e.node);
}

int max_index(const Statement& s)
{
    return std::max(max_index(s.lhs), max_index(s.rhs));
}

std::string format(const LinForm& f)
{
    return f.to_string();
}

std::string to_string(const Expr& e)
{
    return std::visit(Printer{}, e.node);
}

} // namespace ineq::parse
