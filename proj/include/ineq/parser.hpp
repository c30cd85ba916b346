#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ineq/linform.hpp"

namespace ineq::parse {

// Variable name -> index mapping. Undeclared names are appended in order of
// first appearance unless the table is strict.
class VarTable {
public:
    VarTable() = default;
    explicit VarTable(std::vector<std::string> names, bool strict = false);

    int declare(const std::string& name);
    int resolve(std::string_view name);
    std::optional<int> find(std::string_view name) const;

    bool strict() const { return strict_; }
    void set_strict(bool strict) { strict_ = strict; }
    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
    bool strict_ = false;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// H(vars | cond)
struct EntropyTerm {
    VarSet vars;
    VarSet cond;
};
// I(left; right | cond)
struct MutualTerm {
    VarSet left;
    VarSet right;
    VarSet cond;
};
// Raw coordinate h_set, written h12 or h{1,10}.
struct CoordTerm {
    VarSet set;
};
struct Scaled {
    Rational factor;
    ExprPtr inner;
};
struct Sum {
    std::vector<Expr> terms;
};

struct Expr {
    std::variant<EntropyTerm, MutualTerm, CoordTerm, Scaled, Sum> node;
};

enum class Relation { Ge, Le, Eq };

struct Statement {
    Expr lhs;
    Relation relation;
    Expr rhs;
};

// Lowered statement: form >= 0, or form = 0 when equality is set.
struct Normalized {
    LinForm form;
    bool equality;
};

// Conditional independence X_a _|_ X_b | X_c.
struct CiStatement {
    VarSet a;
    VarSet b;
    VarSet c;
};

Expr parse_expr(std::string_view text, VarTable& vars);
Statement parse_statement(std::string_view text, VarTable& vars);
// Accepts "I(A;B|C)", "I(A;B|C) = 0" or "A _|_ B | C" (also with U+22A5).
CiStatement parse_ci(std::string_view text, VarTable& vars);

LinForm lower(const Expr& e, int n);
Normalized lower(const Statement& s, int n);

// Largest variable index mentioned anywhere in the tree (0 if none).
int max_index(const Expr& e);
int max_index(const Statement& s);

// Canonical text; parse + lower reproduces f exactly.
std::string format(const LinForm& f);

// Human-readable dump of a tree, e.g. "3 * I({3};{4}|{1})".
std::string to_string(const Expr& e);

} // namespace ineq::parse
