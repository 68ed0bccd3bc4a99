#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bohrlab/errors.hpp"
#include "bohrlab/families.hpp"
#include "bohrlab/harmonic.hpp"
#include "bohrlab/parallel.hpp"
#include "bohrlab/props.hpp"
#include "bohrlab/quasisub.hpp"
#include "bohrlab/radii.hpp"
#include "bohrlab/report.hpp"

namespace bohr::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// Bad flag combinations that CLI11 cannot see.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Settings {
    std::uint64_t seed = 20240601;
    std::size_t order = kDefaultOrder;
    std::size_t grid = 100;
    double backoff = 1e-9;
    double scale = 1.0;
    std::string out = "csv";
    std::string output_path;
};

struct FamilySpec {
    std::string name;
    std::size_t degree = 4;
    std::size_t q = 1;
};

// Shared by verify, sharpness and plotdata.
struct ModelArgs {
    RadiusParams params;
    FamilySpec family;
};

struct Table {
    std::vector<std::string> columns;
    ordered_json rows = ordered_json::array();
};

// Sharpness tolerance, as for the acceptance crossovers.
constexpr double kCrossoverTolerance = 1e-7;

std::string number(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string csv_field(const ordered_json& v)
{
    if (v.is_null()) {
        return "";
    }
    if (v.is_boolean()) {
        return v.get<bool>() ? "true" : "false";
    }
    if (v.is_number_integer()) {
        return std::to_string(v.get<long long>());
    }
    if (v.is_number()) {
        return number(v.get<double>());
    }
    const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        quoted += c;
        if (c == '"') {
            quoted += '"';
        }
    }
    return quoted + "\"";
}

// NaN and infinities have no JSON encoding.
ordered_json real(double x)
{
    return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr);
}

void write_table(const Table& t, const Settings& s, std::ostream& os, const ordered_json* json_override = nullptr)
{
    if (s.out == "json") {
        os << (json_override ? *json_override : t.rows).dump(2) << '\n';
        return;
    }
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        os << (i ? "," : "") << t.columns[i];
    }
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            os << (i ? "," : "") << (row.contains(t.columns[i]) ? csv_field(row[t.columns[i]]) : "");
        }
        os << '\n';
    }
}

ordered_json params_json(const RadiusParams& p)
{
    return {{"p", p.p}, {"k", p.k}, {"m", p.m}, {"a", p.a}};
}

int exit_code(Verdict v)
{
    switch (v) {
    case Verdict::Holds:
        return kExitOk;
    case Verdict::Fails:
        return kExitFails;
    case Verdict::Inconclusive:
        return kExitInconclusive;
    }
    return kExitInconclusive;
}

std::vector<double> grid_points(double from, double to, std::size_t n)
{
    std::vector<double> xs;
    if (n == 0) {
        xs.push_back(from);
        return xs;
    }
    for (std::size_t i = 0; i <= n; ++i) {
        xs.push_back(from + (to - from) * static_cast<double>(i) / static_cast<double>(n));
    }
    return xs;
}

// ---------------------------------------------------------------- config

// key = value lines; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read config file " + path);
    }
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = line.substr(0, line.find('#'));
        const auto eq = line.find('=');
        const auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        if (trim(line).empty()) {
            continue;
        }
        if (eq == std::string::npos) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
        }
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

template <typename T>
T parse_value(const std::string& key, const std::string& text)
{
    T value{};
    std::istringstream is(text);
    if (!(is >> value) || !(is >> std::ws).eof()) {
        throw UsageError("config: bad value for " + key + ": " + text);
    }
    return value;
}

// ---------------------------------------------------------------- families

FamilySpec family_from_flag(const std::string& flag, ModelArgs& model, Settings& settings)
{
    FamilySpec spec = model.family;
    if (flag.empty() || flag.front() != '{') {
        spec.name = flag;
        return spec;
    }
    // {"family": "omega_a", "a": 0.5, ...}; keys override the flags.
    const auto j = nlohmann::json::parse(flag);
    spec.name = j.at("family").get<std::string>();
    if (j.contains("a")) model.params.a = j["a"].get<double>();
    if (j.contains("k")) model.params.k = j["k"].get<double>();
    if (j.contains("p")) model.params.p = j["p"].get<double>();
    if (j.contains("m")) model.params.m = j["m"].get<int>();
    if (j.contains("degree")) spec.degree = j["degree"].get<std::size_t>();
    if (j.contains("q")) spec.q = j["q"].get<std::size_t>();
    if (j.contains("seed")) settings.seed = j["seed"].get<std::uint64_t>();
    return spec;
}

bool is_extremal(const std::string& name)
{
    return name == "extremal" || name == "extremal_harmonic";
}

std::optional<TruncatedSeries> analytic_family(const ModelArgs& m, const Settings& s)
{
    const auto& name = m.family.name;
    const double a = m.params.a;
    if (name == "omega_a" || name == "automorphism") {
        return disk_automorphism(a, s.order);
    }
    if (name == "z_omega") {
        return monomial_times_automorphism(m.family.q, 1.0, a, s.order);
    }
    if (name == "square" || name == "subordinate_square") {
        return subordinate_square(a, s.order);
    }
    if (name == "blaschke") {
        return random_blaschke(m.family.degree, s.seed, s.order);
    }
    return std::nullopt;
}

HarmonicPair harmonic_family(const ModelArgs& m, const Settings& s)
{
    const auto& name = m.family.name;
    if (is_extremal(name)) {
        return extremal_harmonic(m.params.a, m.params.k, s.order);
    }
    if (name == "dilatation") {
        const auto h = random_blaschke(m.family.degree, s.seed, s.order);
        const auto w = random_blaschke(m.family.degree, derive_seed(s.seed, 2, 0), s.order);
        return dilatation_pair(h, w, m.params.k);
    }
    if (auto f = analytic_family(m, s)) {
        return HarmonicPair(*f, TruncatedSeries::zero(f->order()), m.params.k);
    }
    throw UsageError("unknown family: " + name);
}

TruncatedSeries require_analytic(const ModelArgs& m, const Settings& s)
{
    if (auto f = analytic_family(m, s)) {
        return *f;
    }
    throw UsageError("family " + m.family.name + " is not an analytic family");
}

// ---------------------------------------------------------------- radius

struct RadiusArgs {
    std::string formula;
    std::optional<std::size_t> grid;
    std::string sweep = "a";
    double from = 0.0;
    double to = 1.0;
};

double radius_formula(const std::string& formula, const RadiusParams& p)
{
    if (formula == "r_p") return head_radius(p.p, p.a);
    if (formula == "r_1") return classical_radius(p.a);
    if (formula == "C_p") return branch_point(p.p);
    if (formula == "eq7") return harmonic_radius(p);
    if (formula == "eq10") return uniform_harmonic_radius(p);
    if (formula == "eq12") return limit_harmonic_radius(p);
    if (formula == "eq13") return limit_harmonic_radius_infimum(p.p, p.k);
    if (formula == "alpha_plus") return crossover_roots(p.a).plus;
    throw UsageError("unknown formula: " + formula);
}

int cmd_radius(const RadiusArgs& args, const ModelArgs& model, const Settings& s, std::ostream& out)
{
    std::vector<RadiusParams> points;
    if (!args.grid) {
        points.push_back(model.params);
    } else {
        for (double x : grid_points(args.from, args.to, *args.grid)) {
            RadiusParams p = model.params;
            (args.sweep == "p" ? p.p : args.sweep == "k" ? p.k : p.a) = x;
            points.push_back(p);
        }
    }
    const auto radii = parallel_map(points.size(), [&](std::size_t i) { return radius_formula(args.formula, points[i]); });
    Table t{{"formula", "p", "k", "m", "a", "radius"}};
    for (std::size_t i = 0; i < points.size(); ++i) {
        ordered_json row = {{"formula", args.formula}};
        row.update(params_json(points[i]));
        row["radius"] = radii[i];
        t.rows.push_back(std::move(row));
    }
    write_table(t, s, out);
    return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string theorem;
    double r = 0.3;
};

int cmd_verify(const VerifyArgs& args, ModelArgs model, const Settings& s, std::ostream& out)
{
    VerificationReport rep;
    const auto& th = args.theorem;
    if (th == "1") {
        rep = verify_head_radius(require_analytic(model, s), model.params.p, s.backoff);
    } else if (th == "2") {
        if (model.family.name != "triple") {
            throw UsageError("theorem 2 needs --family triple");
        }
        const auto triple = random_quasi_triple(s.seed, s.order);
        rep = verify_quasi_subordination(triple.phi_series(s.order), triple.g, triple.w_series(s.order), s.backoff);
    } else {
        const auto pair = harmonic_family(model, s);
        if (th == "3") {
            rep = verify_harmonic_radius(model.params, pair, s.backoff);
        } else if (th == "c4") {
            rep = verify_harmonic_corollary(HarmonicCorollary::Uniform, model.params, pair, s.backoff);
        } else if (th == "c5") {
            rep = verify_harmonic_corollary(HarmonicCorollary::Limit, model.params, pair, s.backoff);
        } else if (th == "c6") {
            rep = verify_harmonic_corollary(HarmonicCorollary::Infimum, model.params, pair, s.backoff);
        } else {
            rep = check_refined_majorant_bound(pair, args.r);
        }
    }

    Table t{{"check", "family", "p", "k", "m", "a", "predicted_radius", "radius", "lhs_lo", "lhs_hi", "rhs_lo",
             "rhs_hi", "verdict", "side_condition", "crossover_holds", "crossover_fails"}};
    ordered_json row = {{"check", rep.check}, {"family", model.family.name}};
    row.update(params_json(rep.params));
    row["predicted_radius"] = real(rep.predicted_radius);
    row["radius"] = real(rep.radius);
    row["lhs_lo"] = real(rep.lhs.lo);
    row["lhs_hi"] = real(rep.lhs.hi);
    row["rhs_lo"] = real(rep.rhs.lo);
    row["rhs_hi"] = real(rep.rhs.hi);
    row["verdict"] = std::string(to_string(rep.verdict));
    row["side_condition"] = std::string(to_string(rep.side_condition));
    row["crossover_holds"] = rep.crossover ? real(rep.crossover->holds) : ordered_json(nullptr);
    row["crossover_fails"] = rep.crossover ? real(rep.crossover->fails) : ordered_json(nullptr);
    t.rows.push_back(row);

    ordered_json doc = to_json(rep);
    doc["family"] = model.family.name;
    write_table(t, s, out, &doc);
    return exit_code(rep.verdict);
}

// ---------------------------------------------------------------- sharpness

struct SharpnessArgs {
    double r_lo = 0.0;
    double r_hi = 0.95;
};

int cmd_sharpness(const SharpnessArgs& args, const ModelArgs& model, const Settings& s, std::ostream& out)
{
    const auto& name = model.family.name;
    const auto& params = model.params;
    Bracket b;
    // The crossover must land in [lo, hi]; lo == hi for sharp radii.
    double lo = 0.0;
    double hi = args.r_hi;
    if (is_extremal(name)) {
        b = extremal_crossover(params, args.r_lo, args.r_hi, s.order);
        lo = hi = harmonic_radius(params);
    } else if (name == "square" || name == "subordinate_square") {
        const auto f = subordinate_square(params.a, s.order);
        b = majorant_crossover(f, TruncatedSeries::monomial(2, 1.0, s.order), args.r_lo, args.r_hi);
        lo = classical_radius(params.a * params.a);
        hi = params.a >= 1.0 / std::numbers::sqrt2 ? crossover_roots(params.a).plus : args.r_hi;
    } else {
        const auto f = require_analytic(model, s);
        b = head_sum_crossover(f, params.p, args.r_lo, args.r_hi);
        lo = head_radius(params.p, std::min(1.0, std::abs(f[0])));
        // The automorphism is extremal on the outer branch only.
        if ((name == "omega_a" || name == "automorphism") && params.a >= branch_point(params.p)) {
            hi = lo;
        }
    }

    Verdict v = Verdict::Holds;
    if (b.inconclusive && b.width() > kCrossoverTolerance) {
        v = Verdict::Inconclusive;
    } else if (b.mid() < lo - kCrossoverTolerance || b.mid() > hi + kCrossoverTolerance) {
        v = Verdict::Fails;
    }
    Table t{{"family", "p", "k", "m", "a", "r_lo", "r_hi", "holds", "fails", "crossover", "predicted_lo",
             "predicted_hi", "inconclusive", "verdict"}};
    ordered_json row = {{"family", name}};
    row.update(params_json(params));
    row["r_lo"] = args.r_lo;
    row["r_hi"] = args.r_hi;
    row["holds"] = b.holds;
    row["fails"] = b.fails;
    row["crossover"] = b.mid();
    row["predicted_lo"] = lo;
    row["predicted_hi"] = hi;
    row["inconclusive"] = b.inconclusive;
    row["verdict"] = std::string(to_string(v));
    t.rows.push_back(std::move(row));
    write_table(t, s, out);
    return exit_code(v);
}

// ---------------------------------------------------------------- table

int cmd_table(const std::string& name, const ModelArgs& model, const Settings& s, std::ostream& out)
{
    bool ok = true;
    Table t;
    if (name == "r4") {
        t.columns = {"x", "radius", "above_next"};
        const std::vector<double> xs = {0.5, 1.0 / 3.0, 0.0, 1.0};
        std::vector<double> r;
        for (double x : xs) {
            r.push_back(head_radius(4.0, x));
        }
        for (std::size_t i = 0; i < xs.size(); ++i) {
            // The last entry is compared with 1/2.
            const double next = i + 1 < xs.size() ? r[i + 1] : 0.5;
            ok = ok && r[i] > next;
            t.rows.push_back({{"x", xs[i]}, {"radius", r[i]}, {"above_next", r[i] > next}});
        }
    } else if (name == "closed") {
        t.columns = {"quantity", "computed", "expected", "error", "ok"};
        const auto add = [&](std::string q, double computed, double expected) {
            const double err = std::abs(computed - expected);
            ok = ok && err <= 1e-10;
            t.rows.push_back({{"quantity", std::move(q)}, {"computed", computed}, {"expected", expected},
                              {"error", err}, {"ok", err <= 1e-10}});
        };
        for (double p : {0.5, 1.0, 2.0}) {
            add("r_p(0) p=" + number(p), head_radius(p, 0.0), 1.0 / std::numbers::sqrt2);
            add("r_p(1) p=" + number(p), head_radius(p, 1.0), p / (2.0 + p));
        }
        add("r_1(1)", classical_radius(1.0), 1.0 / 3.0);
        add("C(1)", branch_point(1.0), 0.5);
        for (double p : {0.5, 1.0, 1.5, 2.0}) {
            add("eq10 m=1 k=0 p=" + number(p), uniform_harmonic_radius({p, 0.0, 1, 0.0}),
                p / (std::sqrt(4.0 * p + 1.0) + p + 1.0));
        }
    } else if (name == "harmonic") {
        t.columns = {"p", "k", "m", "a", "eq7", "eq10", "eq12", "eq13"};
        std::vector<RadiusParams> points;
        for (int m : {1, 2, 3}) {
            for (double k : {0.0, 0.5, 1.0}) {
                for (double a : {0.0, 0.3, 0.6, 0.9}) {
                    points.push_back({model.params.p, k, m, a});
                }
            }
        }
        const auto rows = parallel_map(points.size(), [&](std::size_t i) {
            const auto& p = points[i];
            ordered_json row = params_json(p);
            row["eq7"] = harmonic_radius(p);
            row["eq10"] = p.p <= 2.0 ? ordered_json(uniform_harmonic_radius(p)) : ordered_json(nullptr);
            row["eq12"] = limit_harmonic_radius(p);
            row["eq13"] = limit_harmonic_radius_infimum(p.p, p.k);
            return row;
        });
        for (const auto& row : rows) {
            t.rows.push_back(row);
        }
    } else if (name == "square") {
        t.columns = {"a", "sign_index", "lower", "crossover", "alpha_plus", "within"};
        const std::vector<double> as = {0.75, 0.8, 0.9, 0.95, 0.99, 0.999};
        const auto rows = parallel_map(as.size(), [&](std::size_t i) {
            const double a = as[i];
            const double upper = crossover_roots(a).plus;
            const double lower = classical_radius(a * a);
            const auto b = majorant_crossover(subordinate_square(a, s.order),
                                              TruncatedSeries::monomial(2, 1.0, s.order), 0.25,
                                              std::min(0.9, upper + 0.05));
            const bool within = b.mid() >= lower - kCrossoverTolerance && b.mid() <= upper + kCrossoverTolerance;
            return ordered_json{{"a", a},
                                {"sign_index", subordinate_square_sign_index(a)},
                                {"lower", lower},
                                {"crossover", b.mid()},
                                {"alpha_plus", upper},
                                {"within", within}};
        });
        for (const auto& row : rows) {
            ok = ok && row["within"].get<bool>();
            t.rows.push_back(row);
        }
    } else {
        throw UsageError("unknown table: " + name);
    }
    write_table(t, s, out);
    return ok ? kExitOk : kExitFails;
}

// ---------------------------------------------------------------- props

int cmd_props(const std::string& suite, const Settings& s, std::ostream& out)
{
    PropertyConfig config;
    config.seed = s.seed;
    config.order = s.order;
    config.scale = s.scale;
    std::vector<std::string> suites;
    if (suite == "all") {
        for (auto n : property_suite_names()) {
            suites.emplace_back(n);
        }
    } else {
        suites.push_back(suite);
    }
    Table t{{"suite", "property", "cases", "violations", "worst", "passed", "detail"}};
    bool ok = true;
    for (const auto& name : suites) {
        for (const auto& r : run_property_suite(name, config)) {
            ok = ok && r.passed();
            t.rows.push_back({{"suite", name},
                              {"property", r.name},
                              {"cases", r.cases},
                              {"violations", r.violations},
                              {"worst", real(r.worst)},
                              {"passed", r.passed()},
                              {"detail", r.detail}});
        }
    }
    write_table(t, s, out);
    return ok ? kExitOk : kExitFails;
}

// ---------------------------------------------------------------- plotdata

int cmd_plotdata(const std::string& what, const ModelArgs& model, const Settings& s, std::ostream& out)
{
    const auto& params = model.params;
    Table t;
    std::vector<double> xs;
    std::function<ordered_json(double)> row_at;
    if (what == "head_radius" || what == "power_ratio") {
        t.columns = {"x", what};
        xs = grid_points(0.0, 1.0, s.grid);
        row_at = [&](double x) {
            return ordered_json{{"x", x}, {what, what == "head_radius" ? head_radius(params.p, x)
                                                                       : power_ratio(params.p, x)}};
        };
    } else if (what == "harmonic_radius") {
        t.columns = {"a", "eq7", "eq12"};
        xs = grid_points(0.0, 0.999, s.grid);
        row_at = [&](double a) {
            RadiusParams p = params;
            p.a = a;
            return ordered_json{{"a", a}, {"eq7", harmonic_radius(p)}, {"eq12", limit_harmonic_radius(p)}};
        };
    } else if (what == "square_majorant") {
        t.columns = {"r", "exact", "limit"};
        xs = grid_points(0.0, 0.99, s.grid);
        const bool has_limit = params.a >= 1.0 / std::numbers::sqrt2;
        row_at = [&, has_limit](double r) {
            return ordered_json{{"r", r},
                                {"exact", square_majorant(params.a, r)},
                                {"limit", has_limit ? real(square_majorant_limit(params.a, r)) : ordered_json(nullptr)}};
        };
    } else if (what == "extremal") {
        t.columns = {"r", "majorant"};
        xs = grid_points(0.0, 0.99, s.grid);
        row_at = [&](double r) { return ordered_json{{"r", r}, {"majorant", schwarz_pick_majorant(params, r)}}; };
    } else {
        throw UsageError("unknown plotdata series: " + what);
    }
    for (auto& row : parallel_map(xs.size(), [&](std::size_t i) { return row_at(xs[i]); })) {
        t.rows.push_back(std::move(row));
    }
    write_table(t, s, out);
    return kExitOk;
}

void add_model_options(CLI::App* cmd, ModelArgs& model, const std::string& default_family = "")
{
    cmd->add_option("--p", model.params.p, "Exponent on |h(0)|")->capture_default_str();
    cmd->add_option("--k", model.params.k, "Dilatation bound")->capture_default_str();
    cmd->add_option("--m", model.params.m, "Power in h(z^m)")->capture_default_str();
    cmd->add_option("--a", model.params.a, "|h(0)| or family parameter")->capture_default_str();
    if (!default_family.empty()) {
        cmd->add_option("--family", model.family.name,
                        "omega_a, z_omega, square, blaschke, extremal, dilatation, triple or a JSON object")
            ->default_str(default_family);
        cmd->add_option("--degree", model.family.degree, "Degree of random Blaschke products")->capture_default_str();
        cmd->add_option("--q", model.family.q, "Power of z in z_omega")->capture_default_str();
    }
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bohr-type radius computations and verification for analytic and harmonic maps", "bohr-lab"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings settings;
    std::string config_path;
    auto* opt_seed = app.add_option("--seed", settings.seed, "Seed for random families and property suites");
    auto* opt_order = app.add_option("--order", settings.order, "Truncation order of series");
    auto* opt_out = app.add_option("--out", settings.out, "Output format")->check(CLI::IsMember({"csv", "json"}));
    auto* opt_backoff = app.add_option("--backoff", settings.backoff, "Distance below a predicted radius to test at");
    app.add_option("--output", settings.output_path, "Write the report to this file instead of stdout");
    app.add_option("--config", config_path, "key = value file (seed, order, grid, backoff, scale, out)");

    ModelArgs model;

    RadiusArgs radius_args;
    auto* radius = app.add_subcommand("radius", "Evaluate a radius formula, optionally over a grid");
    radius->add_option("--formula", radius_args.formula, "Radius formula")
        ->required()
        ->check(CLI::IsMember({"r_p", "r_1", "C_p", "eq7", "eq10", "eq12", "eq13", "alpha_plus"}));
    add_model_options(radius, model);
    radius->add_option("--grid", radius_args.grid, "Sweep with this many intervals");
    radius->add_option("--sweep", radius_args.sweep, "Swept parameter")->check(CLI::IsMember({"a", "p", "k"}));
    radius->add_option("--from", radius_args.from, "Sweep start");
    radius->add_option("--to", radius_args.to, "Sweep end");

    VerifyArgs verify_args;
    std::string verify_family;
    auto* verify = app.add_subcommand("verify", "Check a radius inequality for one function");
    verify->add_option("--theorem", verify_args.theorem, "Inequality to check")
        ->required()
        ->check(CLI::IsMember({"1", "2", "3", "c4", "c5", "c6", "lemma5"}));
    add_model_options(verify, model, "theorem dependent");
    verify->add_option("--r", verify_args.r, "Radius for lemma5")->capture_default_str();

    SharpnessArgs sharp_args;
    auto* sharpness = app.add_subcommand("sharpness", "Locate the radius where an inequality stops holding");
    add_model_options(sharpness, model, "extremal_harmonic");
    sharpness->add_option("--r-lo", sharp_args.r_lo, "Scan start (must hold there)")->capture_default_str();
    sharpness->add_option("--r-hi", sharp_args.r_hi, "Scan end (must fail there)")->capture_default_str();

    std::string table_name = "r4";
    auto* table = app.add_subcommand("table", "Reference tables of radii");
    table->add_option("--name", table_name, "Table")
        ->check(CLI::IsMember({"r4", "closed", "harmonic", "square"}))
        ->capture_default_str();
    add_model_options(table, model);

    std::string suite = "all";
    auto* props = app.add_subcommand("props", "Run seeded property suites");
    std::vector<std::string> suites = {"all"};
    for (auto n : property_suite_names()) {
        suites.emplace_back(n);
    }
    props->add_option("--suite", suite, "Suite")->check(CLI::IsMember(suites))->capture_default_str();
    auto* opt_scale = props->add_option("--scale", settings.scale, "Multiplier on sample counts");

    std::string plot_what;
    auto* plotdata = app.add_subcommand("plotdata", "Emit curves for figures");
    plotdata->add_option("--what", plot_what, "Series")
        ->required()
        ->check(CLI::IsMember({"head_radius", "power_ratio", "harmonic_radius", "square_majorant", "extremal"}));
    add_model_options(plotdata, model);
    auto* opt_grid = plotdata->add_option("--grid", settings.grid, "Number of grid intervals");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitBadFlags;
    }

    try {
        if (!config_path.empty()) {
            for (const auto& [key, value] : read_config(config_path)) {
                // Flags given on the command line win.
                if (key == "seed") {
                    if (!opt_seed->count()) settings.seed = parse_value<std::uint64_t>(key, value);
                } else if (key == "order") {
                    if (!opt_order->count()) settings.order = parse_value<std::size_t>(key, value);
                } else if (key == "grid") {
                    if (!opt_grid->count()) settings.grid = parse_value<std::size_t>(key, value);
                } else if (key == "backoff") {
                    if (!opt_backoff->count()) settings.backoff = parse_value<double>(key, value);
                } else if (key == "scale") {
                    if (!opt_scale->count()) settings.scale = parse_value<double>(key, value);
                } else if (key == "out") {
                    if (!opt_out->count()) settings.out = value;
                } else {
                    throw UsageError("config: unknown key " + key);
                }
            }
            if (settings.out != "csv" && settings.out != "json") {
                throw UsageError("config: out must be csv or json");
            }
        }
        if (settings.order < 8) {
            throw UsageError("--order must be at least 8");
        }

        std::ofstream file;
        if (!settings.output_path.empty()) {
            file.open(settings.output_path);
            if (!file) {
                throw UsageError("cannot write " + settings.output_path);
            }
        }
        std::ostream& sink = settings.output_path.empty() ? out : file;

        if (radius->parsed()) {
            return cmd_radius(radius_args, model, settings, sink);
        }
        if (verify->parsed()) {
            std::string flag = model.family.name;
            if (flag.empty()) {
                flag = verify_args.theorem == "1" ? "omega_a" : verify_args.theorem == "2" ? "triple" : "extremal";
            }
            model.family = family_from_flag(flag, model, settings);
            return cmd_verify(verify_args, model, settings, sink);
        }
        if (sharpness->parsed()) {
            model.family = family_from_flag(model.family.name.empty() ? "extremal_harmonic" : model.family.name,
                                            model, settings);
            return cmd_sharpness(sharp_args, model, settings, sink);
        }
        if (table->parsed()) {
            return cmd_table(table_name, model, settings, sink);
        }
        if (props->parsed()) {
            return cmd_props(suite, settings, sink);
        }
        return cmd_plotdata(plot_what, model, settings, sink);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadFlags;
    } catch (const nlohmann::json::exception& e) {
        err << "error: bad family JSON: " << e.what() << '\n';
        return kExitBadFlags;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitParamOutOfRange;
    }
}

} // namespace bohr::cli
