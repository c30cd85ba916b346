#include "ineq/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ineq/classical.hpp"
#include "ineq/cone.hpp"
#include "ineq/error.hpp"
#include "ineq/groups.hpp"
#include "ineq/models.hpp"
#include "ineq/parser.hpp"
#include "ineq/prover.hpp"
#include "ineq/search.hpp"
#include "ineq/translate.hpp"

namespace ineq::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x == 0 ? 0.0 : x);
    return buf;
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_names(const std::string& list)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : list) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty())
                out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

// Orders X2 before X10.
bool natural_less(const std::string& a, const std::string& b)
{
    auto key = [](const std::string& s) {
        std::size_t k = s.size();
        while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1])))
            --k;
        std::string digits = s.substr(k);
        digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
        return std::make_tuple(s.substr(0, k), digits.size(), digits, s);
    };
    return key(a) < key(b);
}

// Runs parse_all against the final variable table. Without a declaration the
// names found in a first pass are put in natural order.
parse::VarTable settle_vars(const std::vector<std::string>& declared,
                            const std::function<void(parse::VarTable&)>& parse_all)
{
    if (!declared.empty()) {
        parse::VarTable t(declared, true);
        parse_all(t);
        return t;
    }
    parse::VarTable probe;
    parse_all(probe);
    auto names = probe.names();
    std::sort(names.begin(), names.end(), natural_less);
    parse::VarTable t(names, true);
    parse_all(t);
    return t;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int exit_code(VerdictKind k)
{
    switch (k) {
    case VerdictKind::Proved:
    case VerdictKind::ProvedAugmented: return kTrue;
    case VerdictKind::Disproved: return kFalse;
    case VerdictKind::NotImpliedByCone:
    case VerdictKind::Unknown: return kUnknown;
    }
    return kUnknown;
}

ordered_json certificate_json(const Verdict& v)
{
    ordered_json lambda = ordered_json::array(), mu = ordered_json::array();
    for (std::size_t i = 0; i < v.cone.size(); ++i)
        if (sgn(v.certificate->lambda[i]) != 0)
            lambda.push_back({{"coefficient", to_string(v.certificate->lambda[i])},
                              {"form", v.cone[i].form.to_string()},
                              {"origin", v.cone[i].describe()}});
    for (std::size_t j = 0; j < v.constraints.size(); ++j)
        if (sgn(v.certificate->mu[j]) != 0)
            mu.push_back({{"coefficient", to_string(v.certificate->mu[j])},
                          {"form", v.constraints[j].form.to_string()},
                          {"origin", v.constraints[j].tag}});
    return {{"lambda", lambda}, {"mu", mu}};
}

ordered_json ray_json(const std::vector<Rational>& ray)
{
    ordered_json a = ordered_json::array();
    for (const auto& r : ray)
        a.push_back(to_string(r));
    return a;
}

ordered_json pmf_json(const JointPMF& p)
{
    return {{"alphabet", p.alphabet()}, {"probabilities", p.probs()}};
}

void write_ray(std::ostream& out, const std::vector<Rational>& ray)
{
    out << "ray:";
    for (std::size_t i = 0; i < ray.size(); ++i)
        out << " h" << VarSet::from_bits(static_cast<std::uint32_t>(i + 1)).coord_label() << '=' << to_string(ray[i]);
    out << '\n';
}

void write_witness(std::ostream& out, const JointPMF& p)
{
    out << "pmf:\n";
    write_pmf(out, p);
}

void print_verdict(std::ostream& out, const Verdict& v, bool json)
{
    if (json) {
        ordered_json j;
        j["verdict"] = verdict_name(v.kind);
        if (v.certificate)
            j["certificate"] = certificate_json(v);
        if (v.ray)
            j["ray"] = ray_json(*v.ray);
        if (v.witness) {
            ordered_json w = pmf_json(v.witness->pmf);
            w["value"] = v.witness->value;
            j["witness"] = w;
        }
        out << j.dump() << '\n';
        return;
    }
    out << "verdict: " << verdict_name(v.kind) << '\n';
    if (v.certificate)
        write_certificate(out, v);
    if (v.ray) {
        write_ray(out, *v.ray);
        out << "objective on ray: " << to_string(evaluate(v.objective, *v.ray)) << '\n';
    }
    if (v.witness) {
        out << "value: " << num(v.witness->value) << '\n';
        write_witness(out, v.witness->pmf);
    }
}

int var_count(const parse::VarTable& t, int max_index)
{
    int n = std::max({1, t.size(), max_index});
    check_var_count(n);
    return n;
}

// ---- prove / disprove ---------------------------------------------------------

struct GoalArgs {
    std::string goal;
    std::vector<std::string> assume;
    std::string vars;
    bool json = false;
    // prove
    std::string augment = "none";
    // disprove
    SearchOptions search;
};

struct Lowered {
    LinForm goal{1};
    std::vector<ConstraintRow> constraints;
    std::vector<IneqRow> assumptions;
};

Lowered lower_goal(const GoalArgs& a, const std::vector<std::string>& declared)
{
    std::optional<parse::Statement> goal;
    std::vector<parse::Statement> assumed;
    auto table = settle_vars(declared, [&](parse::VarTable& t) {
        assumed.clear();
        goal = parse::parse_statement(a.goal, t);
        for (const auto& s : a.assume)
            assumed.push_back(parse::parse_statement(s, t));
    });
    int mx = parse::max_index(*goal);
    for (const auto& s : assumed)
        mx = std::max(mx, parse::max_index(s));
    int n = var_count(table, mx);

    Lowered out;
    auto g = parse::lower(*goal, n);
    if (g.equality)
        throw UsageError("the goal must be an inequality; give equalities with --assume");
    out.goal = g.form;
    for (std::size_t i = 0; i < assumed.size(); ++i) {
        auto s = parse::lower(assumed[i], n);
        if (s.equality)
            out.constraints.push_back({s.form, trim(a.assume[i])});
        else
            out.assumptions.push_back({s.form, OtherOrigin{"assumed " + trim(a.assume[i])}});
    }
    return out;
}

int do_prove(const GoalArgs& a, std::ostream& out)
{
    auto l = lower_goal(a, split_names(a.vars));
    ProverOptions opts;
    opts.augment = a.augment == "zy98" ? Augment::Zy98 : Augment::None;
    opts.assumptions = l.assumptions;
    Verdict v = verify(l.goal, l.constraints, opts);
    print_verdict(out, v, a.json);
    return exit_code(v.kind);
}

int do_disprove(const GoalArgs& a, std::ostream& out)
{
    auto l = lower_goal(a, split_names(a.vars));
    if (!l.assumptions.empty())
        throw UsageError("disprove accepts only equality assumptions");
    Verdict v = disprove(l.goal, l.constraints, a.search);
    print_verdict(out, v, a.json);
    return exit_code(v.kind);
}

// ---- implies ------------------------------------------------------------------

struct ImpliesArgs {
    std::vector<std::string> premises;
    std::string conclusion;
    std::string vars;
    bool json = false;
    SearchOptions search;
};

int do_implies(const ImpliesArgs& a, std::ostream& out)
{
    std::vector<CiStatement> premises;
    CiStatement conclusion{};
    auto table = settle_vars(split_names(a.vars), [&](parse::VarTable& t) {
        premises.clear();
        for (const auto& p : a.premises)
            premises.push_back(parse::parse_ci(p, t));
        conclusion = parse::parse_ci(a.conclusion, t);
    });
    int mx = 0;
    for (const auto& ci : premises)
        mx = std::max(mx, (ci.a | ci.b | ci.c).max_index());
    mx = std::max(mx, (conclusion.a | conclusion.b | conclusion.c).max_index());
    int n = var_count(table, mx);

    ImplicationOptions opts;
    opts.search = a.search;
    ImplicationVerdict v = implies(n, premises, conclusion, opts);
    const Verdict& s = v.shannon;
    if (a.json) {
        ordered_json j;
        j["verdict"] = implication_name(v.kind);
        if (s.certificate)
            j["certificate"] = certificate_json(s);
        if (s.ray)
            j["ray"] = ray_json(*s.ray);
        if (v.witness) {
            ordered_json w = pmf_json(v.witness->pmf);
            w["information"] = v.conclusion_information;
            j["witness"] = w;
        }
        out << j.dump() << '\n';
    } else {
        out << "verdict: " << implication_name(v.kind) << '\n';
        if (s.certificate)
            write_certificate(out, s);
        if (v.witness) {
            out << "information: " << num(v.conclusion_information) << '\n';
            write_witness(out, v.witness->pmf);
        } else if (s.ray) {
            write_ray(out, *s.ray);
        }
    }
    switch (v.kind) {
    case ImplicationKind::Implied: return kTrue;
    case ImplicationKind::NotImplied: return kFalse;
    case ImplicationKind::Unknown: return kUnknown;
    }
    return kUnknown;
}

// ---- translate ----------------------------------------------------------------

struct TranslateArgs {
    std::string expr;
    std::string vars;
    bool group = false, minor = false, kolmogorov = false;
    bool log = false, json = false;
};

LinForm lower_inequality(const std::string& text, const std::string& vars)
{
    std::optional<parse::Statement> st;
    auto table = settle_vars(split_names(vars), [&](parse::VarTable& t) { st = parse::parse_statement(text, t); });
    auto l = parse::lower(*st, var_count(table, parse::max_index(*st)));
    if (l.equality)
        throw UsageError("expected an inequality");
    return l.form;
}

int do_translate(const TranslateArgs& a, std::ostream& out)
{
    if (int(a.group) + int(a.minor) + int(a.kolmogorov) != 1)
        throw UsageError("choose exactly one of --group, --minor, --kolmogorov");
    LinForm b = lower_inequality(a.expr, a.vars);
    TranslatedInequality t = a.group ? to_group_inequality(b) : a.minor ? to_minor_inequality(b) : to_kolmogorov(b);
    if (a.json)
        out << to_json(t) << '\n';
    else
        out << (a.log ? t.log_text : t.text) << '\n';
    return kTrue;
}

// ---- witness / region ---------------------------------------------------------

struct ClassicalArgs {
    std::vector<std::string> values;
    bool json = false;
};

Rational arg_rational(const std::string& s) { return parse_rational(trim(s)); }

int arg_dim(const std::string& s)
{
    Rational q = arg_rational(s);
    if (!is_integer(q) || sgn(q) < 0 || !q.get_num().fits_sint_p())
        throw UsageError("dimension must be a nonnegative integer, got '" + s + "'");
    return static_cast<int>(q.get_num().get_si());
}

int do_witness(const std::string& family, const ClassicalArgs& a, std::ostream& out)
{
    const auto& v = a.values;
    if (family == "amgm")
        out << to_json(amgm_witness({arg_rational(v[0]), arg_rational(v[1])})) << '\n';
    else if (family == "markov")
        out << to_json(markov_witness({arg_rational(v[0]), arg_rational(v[1]), arg_rational(v[2])})) << '\n';
    else
        out << to_json(cs_witness({arg_rational(v[0]), arg_rational(v[1]), arg_rational(v[2]), arg_dim(v[3])})) << '\n';
    return kTrue;
}

int do_region(const std::string& family, const ClassicalArgs& a, std::ostream& out)
{
    const auto& v = a.values;
    std::string verdict;
    bool yes;
    if (family == "amgm") {
        yes = amgm_member({arg_rational(v[0]), arg_rational(v[1])});
        verdict = yes ? "true" : "false";
    } else if (family == "markov") {
        MarkovRegion r = markov_member({arg_rational(v[0]), arg_rational(v[1]), arg_rational(v[2])});
        yes = r == MarkovRegion::Achievable;
        verdict = markov_region_name(r);
    } else {
        yes = cs_member({arg_rational(v[0]), arg_rational(v[1]), arg_rational(v[2]), arg_dim(v[3])});
        verdict = yes ? "true" : "false";
    }
    if (a.json)
        out << ordered_json{{"verdict", verdict}}.dump() << '\n';
    else
        out << verdict << '\n';
    return yes ? kTrue : kFalse;
}

// ---- run / entropy / groupcheck -------------------------------------------------

long option_integer(const ProblemFile& pf, const std::string& key, long fallback)
{
    auto it = pf.options.find(key);
    if (it == pf.options.end())
        return fallback;
    Rational q = arg_rational(it->second);
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw Error(Errc::InvalidArgument, key + " must be an integer");
    return q.get_num().get_si();
}

int do_run(const std::string& path, bool json, std::ostream& out)
{
    std::istringstream in(read_file(path));
    ProblemFile pf = parse_problem_file(in);
    GoalArgs a;
    a.goal = pf.goal;
    a.assume = pf.assumptions;
    a.json = json;
    if (auto it = pf.options.find("augment"); it != pf.options.end())
        a.augment = it->second;
    a.search.alphabet = static_cast<int>(option_integer(pf, "alphabet", a.search.alphabet));
    a.search.budget = static_cast<int>(option_integer(pf, "budget", a.search.budget));
    a.search.iterations = static_cast<int>(option_integer(pf, "iterations", a.search.iterations));
    a.search.seed = static_cast<std::uint64_t>(option_integer(pf, "seed", static_cast<long>(a.search.seed)));
    a.search.jobs = static_cast<int>(option_integer(pf, "jobs", a.search.jobs));
    auto l = lower_goal(a, pf.vars);
    if (pf.disprove) {
        if (!l.assumptions.empty())
            throw Error(Errc::InvalidArgument, "disprove accepts only equality assumptions");
        Verdict v = disprove(l.goal, l.constraints, a.search);
        print_verdict(out, v, json);
        return exit_code(v.kind);
    }
    ProverOptions opts;
    opts.augment = a.augment == "zy98" ? Augment::Zy98 : Augment::None;
    opts.assumptions = l.assumptions;
    Verdict v = verify(l.goal, l.constraints, opts);
    print_verdict(out, v, json);
    return exit_code(v.kind);
}

int do_entropy(const std::string& path, bool json, std::ostream& out)
{
    std::istringstream in(read_file(path));
    JointPMF p = read_pmf(in);
    EntropyVector h = entropy_vector(p);
    ordered_json j;
    for (std::size_t i = 0; i < h.values.size(); ++i) {
        std::string label = "h" + VarSet::from_bits(static_cast<std::uint32_t>(i + 1)).coord_label();
        if (json)
            j[label] = h.values[i];
        else
            out << label << " = " << num(h.values[i]) << '\n';
    }
    if (json)
        out << j.dump() << '\n';
    return kTrue;
}

int do_groupcheck(const std::string& path, const std::string& expr, const std::string& vars, std::ostream& out)
{
    std::istringstream in(read_file(path));
    GroupSpec g = read_group_spec(in);
    // Variable i names subgroup i, so the default table is X1..Xn rather than natural order.
    std::string names = vars;
    if (names.empty())
        for (int i = 1; i <= g.n(); ++i)
            names += "X" + std::to_string(i) + (i < g.n() ? "," : "");
    LinForm b = lower_inequality(expr, names);
    if (b.n() != g.n())
        throw Error(Errc::DimensionMismatch, "inequality has " + std::to_string(b.n()) + " variables but the group file has " +
                                                 std::to_string(g.n()) + " subgroups");
    bool holds = verify_group_multiplicative(b, g);
    out << to_group_inequality(b).text << '\n' << (holds ? "true" : "false") << '\n';
    return holds ? kTrue : kFalse;
}

int error_exit(Errc code)
{
    switch (code) {
    case Errc::NotInRegion:
    case Errc::NotAchievable:
    case Errc::Unbalanced: return kFalse;
    case Errc::Internal: return kInternal;
    default: return kUsage;
    }
}

void add_search_options(CLI::App* sub, SearchOptions& s)
{
    sub->add_option("--alphabet", s.alphabet, "Alphabet size per variable")->check(CLI::Range(2, 64));
    sub->add_option("--budget", s.budget, "Random restarts per worker")->check(CLI::NonNegativeNumber);
    sub->add_option("--iterations", s.iterations, "Descent sweeps per restart")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", s.seed, "Search seed");
    sub->add_option("--jobs", s.jobs, "Worker threads")->check(CLI::Range(1, 256));
}

} // namespace

ProblemFile parse_problem_file(std::istream& in)
{
    static const char* known[] = {"augment", "alphabet", "budget", "iterations", "seed", "jobs"};
    ProblemFile pf;
    bool have_goal = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto bad = [&](const std::string& msg) {
            return Error(Errc::InvalidArgument, "line " + std::to_string(lineno) + ": " + msg);
        };
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto colon = line.find(':');
        std::string key, value;
        if (line.rfind("vars", 0) == 0 && (line.size() == 4 || line[4] == ' ' || line[4] == '\t' || line[4] == ':')) {
            key = "vars";
            value = trim(line.substr(line.size() > 4 && line[4] == ':' ? 5 : 4));
        } else if (colon != std::string::npos) {
            key = trim(line.substr(0, colon));
            value = trim(line.substr(colon + 1));
        } else {
            throw bad("expected 'key: value'");
        }
        if (key == "vars") {
            if (!pf.vars.empty())
                throw bad("duplicate vars declaration");
            pf.vars = split_names(value);
        } else if (key == "assume") {
            if (have_goal)
                throw bad("assumptions must precede the goal");
            pf.assumptions.push_back(value);
        } else if (key == "prove" || key == "disprove") {
            if (have_goal)
                throw bad("more than one goal");
            have_goal = true;
            pf.disprove = key == "disprove";
            pf.goal = value;
        } else if (std::find(std::begin(known), std::end(known), key) != std::end(known)) {
            if (key == "augment" && value != "none" && value != "zy98")
                throw bad("augment must be none or zy98");
            pf.options[key] = value;
        } else {
            throw bad("unknown directive '" + key + "'");
        }
    }
    if (!have_goal)
        throw Error(Errc::InvalidArgument, "problem file has no prove: or disprove: goal");
    return pf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Prove, refute and translate information inequalities.", "ineq"};
    app.require_subcommand(1);

    GoalArgs prove_args;
    auto* prove = app.add_subcommand("prove", "Check an inequality against the Shannon cone");
    prove->add_option("expr", prove_args.goal, "Inequality, e.g. \"I(X1;X2) >= 0\"")->required();
    prove->add_option("--assume", prove_args.assume, "Equality constraint or extra inequality");
    prove->add_option("--augment", prove_args.augment, "Extra cone rows")->check(CLI::IsMember({"none", "zy98"}));
    prove->add_option("--vars", prove_args.vars, "Variable order, e.g. X1,X2,X3");
    prove->add_flag("--json", prove_args.json, "Machine-readable output");

    GoalArgs disprove_args;
    auto* disprove_cmd = app.add_subcommand("disprove", "Search for a distribution violating an inequality");
    disprove_cmd->add_option("expr", disprove_args.goal, "Inequality")->required();
    disprove_cmd->add_option("--assume", disprove_args.assume, "Equality constraint");
    disprove_cmd->add_option("--vars", disprove_args.vars, "Variable order");
    disprove_cmd->add_flag("--json", disprove_args.json, "Machine-readable output");
    add_search_options(disprove_cmd, disprove_args.search);

    ImpliesArgs implies_args;
    auto* implies_cmd = app.add_subcommand("implies", "Conditional-independence implication");
    implies_cmd->add_option("--premise", implies_args.premises, "Premise, e.g. \"X1 _|_ X3 | X2\"");
    implies_cmd->add_option("--conclusion", implies_args.conclusion, "Conclusion")->required();
    implies_cmd->add_option("--vars", implies_args.vars, "Variable order");
    implies_cmd->add_flag("--json", implies_args.json, "Machine-readable output");
    add_search_options(implies_cmd, implies_args.search);

    TranslateArgs tr;
    auto* translate = app.add_subcommand("translate", "Render an inequality in another setting");
    translate->add_option("expr", tr.expr, "Inequality")->required();
    auto* g = translate->add_flag("--group", tr.group, "Subgroup orders");
    auto* m = translate->add_flag("--minor", tr.minor, "Principal minors of a covariance matrix");
    auto* k = translate->add_flag("--kolmogorov", tr.kolmogorov, "Kolmogorov complexity");
    g->excludes(m)->excludes(k);
    m->excludes(k);
    translate->add_flag("--log", tr.log, "Additive (logarithmic) form");
    translate->add_option("--vars", tr.vars, "Variable order");
    translate->add_flag("--json", tr.json, "Structured term list");

    struct Family {
        const char* name;
        std::vector<const char*> params;
    };
    const std::vector<Family> families = {
        {"amgm", {"a", "g"}}, {"markov", {"c", "p", "m"}}, {"cs", {"x", "y", "z", "dim"}}};

    auto* witness = app.add_subcommand("witness", "Construct an object achieving a point");
    witness->require_subcommand(1);
    auto* region = app.add_subcommand("region", "Test membership of a point in an achievable region");
    region->require_subcommand(1);
    std::map<CLI::App*, std::pair<std::string, ClassicalArgs>> leaves;
    for (auto* parent : {witness, region}) {
        for (const auto& f : families) {
            auto* leaf = parent->add_subcommand(f.name, std::string(f.name) + " point");
            auto& slot = leaves[leaf];
            slot.first = f.name;
            slot.second.values.resize(f.params.size());
            for (std::size_t i = 0; i < f.params.size(); ++i)
                leaf->add_option(f.params[i], slot.second.values[i])->required();
            leaf->add_flag("--json", slot.second.json, "JSON output");
        }
    }

    std::string run_path;
    bool run_json = false;
    auto* run_cmd = app.add_subcommand("run", "Solve a problem file");
    run_cmd->add_option("file", run_path, "Problem file")->required();
    run_cmd->add_flag("--json", run_json, "Machine-readable output");

    std::string pmf_path;
    bool entropy_json = false;
    auto* entropy = app.add_subcommand("entropy", "Entropy vector of a pmf file");
    entropy->add_option("file", pmf_path, "Pmf file")->required();
    entropy->add_flag("--json", entropy_json, "JSON output");

    std::string group_path, group_expr, group_vars;
    auto* groupcheck = app.add_subcommand("groupcheck", "Check an inequality on a group and subgroups");
    groupcheck->add_option("file", group_path, "Group file")->required();
    groupcheck->add_option("expr", group_expr, "Inequality")->required();
    groupcheck->add_option("--vars", group_vars, "Variable order (default X1,...,Xn)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kTrue : kUsage;
    }

    try {
        if (prove->parsed())
            return do_prove(prove_args, out);
        if (disprove_cmd->parsed())
            return do_disprove(disprove_args, out);
        if (implies_cmd->parsed())
            return do_implies(implies_args, out);
        if (translate->parsed())
            return do_translate(tr, out);
        for (auto& [leaf, slot] : leaves)
            if (leaf->parsed())
                return leaf->get_parent() == witness ? do_witness(slot.first, slot.second, out)
                                                     : do_region(slot.first, slot.second, out);
        if (run_cmd->parsed())
            return do_run(run_path, run_json, out);
        if (entropy->parsed())
            return do_entropy(pmf_path, entropy_json, out);
        if (groupcheck->parsed())
            return do_groupcheck(group_path, group_expr, group_vars, out);
    } catch (const UsageError& e) {
        err << "ineq: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "ineq: " << e.what() << '\n';
        return error_exit(e.code());
    } catch (const std::exception& e) {
        err << "ineq: internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}

} // namespace ineq::cli
