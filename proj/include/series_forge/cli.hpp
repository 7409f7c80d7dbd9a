#ifndef SERIES_FORGE_CLI_HPP
#define SERIES_FORGE_CLI_HPP

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <series_forge/bell.hpp>
#include <series_forge/expansions.hpp>
#include <series_forge/identities.hpp>
#include <series_forge/logsine.hpp>
#include <series_forge/oracles.hpp>
#include <series_forge/serialize.hpp>

namespace series_forge::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

/// Raised for anything the caller got wrong; maps to exit code 2.
class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Plain };

inline Format parse_format(const std::string &s)
{
    if (s == "json") {
        return Format::Json;
    }
    if (s == "csv") {
        return Format::Csv;
    }
    if (s == "plain") {
        return Format::Plain;
    }
    throw UsageError("unknown format '" + s + "' (json, csv, plain)");
}

struct CliConfig
{
    int default_order = 12;
    Format format = Format::Json;
    double tolerance = 1e-12;
    int terms = 40;
    /// params swept per family by the expansion:<family> verify ids
    int expansion_params = 6;
    SuiteBounds bounds;

    void validate() const
    {
        if (default_order < 4) {
            throw UsageError("default order must be >= 4, got " + std::to_string(default_order));
        }
        if (!(tolerance > 0.0)) {
            throw UsageError("tolerance must be positive");
        }
        if (terms < 0 || expansion_params < 1) {
            throw UsageError("terms must be >= 0 and expansion_params >= 1");
        }
    }
};

using EnvLookup = std::function<std::optional<std::string>(const std::string &)>;

inline std::optional<std::string> process_env(const std::string &name)
{
    if (const char *v = std::getenv(name.c_str())) {
        return std::string(v);
    }
    return std::nullopt;
}

namespace detail
{

inline std::string trim(const std::string &s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline int to_int(const std::string &key, const std::string &v)
{
    try {
        std::size_t used = 0;
        const int out = std::stoi(v, &used);
        if (used == v.size()) {
            return out;
        }
    } catch (const std::exception &) {
    }
    throw UsageError(key + ": expected an integer, got '" + v + "'");
}

inline double to_double(const std::string &key, const std::string &v)
{
    try {
        std::size_t used = 0;
        const double out = std::stod(v, &used);
        if (used == v.size()) {
            return out;
        }
    } catch (const std::exception &) {
    }
    throw UsageError(key + ": expected a number, got '" + v + "'");
}

inline std::map<std::string, int SuiteBounds::*> bound_fields()
{
    return {
        {"q_max", &SuiteBounds::q_max},
        {"diagonal_max", &SuiteBounds::diagonal_max},
        {"quaintance_z", &SuiteBounds::quaintance_z},
        {"quaintance_k", &SuiteBounds::quaintance_k},
        {"sprugnoli_n", &SuiteBounds::sprugnoli_n},
        {"bell_x_n", &SuiteBounds::bell_x_n},
        {"falling_bell_n", &SuiteBounds::falling_bell_n},
        {"bell_arctan_max", &SuiteBounds::bell_arctan_max},
        {"bell_closed_form_max", &SuiteBounds::bell_closed_form_max},
        {"bell_gf_n", &SuiteBounds::bell_gf_n},
        {"bell_gf_k", &SuiteBounds::bell_gf_k},
        {"comtet_n", &SuiteBounds::comtet_n},
        {"comtet_k", &SuiteBounds::comtet_k},
        {"scaling_instances", &SuiteBounds::scaling_instances},
        {"stirling_gf_n", &SuiteBounds::stirling_gf_n},
    };
}

inline void apply_setting(CliConfig &cfg, const std::string &key, const std::string &value)
{
    if (key == "order") {
        cfg.default_order = to_int(key, value);
    } else if (key == "format") {
        cfg.format = parse_format(value);
    } else if (key == "tolerance") {
        cfg.tolerance = to_double(key, value);
    } else if (key == "terms") {
        cfg.terms = to_int(key, value);
    } else if (key == "expansion_params") {
        cfg.expansion_params = to_int(key, value);
    } else if (key == "seed") {
        const int s = to_int(key, value);
        if (s < 0) {
            throw UsageError("seed must be nonnegative");
        }
        cfg.bounds.seed = static_cast<std::uint32_t>(s);
    } else {
        const auto fields = bound_fields();
        const auto it = fields.find(key);
        if (it == fields.end()) {
            throw UsageError("unknown setting '" + key + "'");
        }
        const int v = to_int(key, value);
        if (v < 0) {
            throw UsageError(key + " must be nonnegative");
        }
        cfg.bounds.*(it->second) = v;
    }
}

inline void apply_assignment(CliConfig &cfg, const std::string &line)
{
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
        throw UsageError("expected key=value, got '" + line + "'");
    }
    apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
}

inline std::vector<std::string> split_commas(const std::string &s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

} // namespace detail

/// key=value lines; blank lines and lines starting with # are skipped.
inline void load_config_file(CliConfig &cfg, const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read config file '" + path + "'");
    }
    std::string line;
    while (std::getline(in, line)) {
        line = detail::trim(line);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        detail::apply_assignment(cfg, line);
    }
}

/// Accepts decimals and multiples of pi: "pi", "pi/3", "2*pi/3", "2pi/3", "0.5".
inline double parse_theta(const std::string &text)
{
    static const std::regex pi_form(R"(^\s*(?:([0-9]*\.?[0-9]+)\s*\*?\s*)?pi\s*(?:/\s*([0-9]*\.?[0-9]+))?\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, pi_form)) {
        double v = std::numbers::pi;
        if (m[1].matched) {
            v *= std::stod(m[1].str());
        }
        if (m[2].matched) {
            const double d = std::stod(m[2].str());
            if (d == 0.0) {
                throw UsageError("theta: division by zero");
            }
            v /= d;
        }
        return v;
    }
    return detail::to_double("theta", detail::trim(text));
}

namespace detail
{

struct Context
{
    std::ostream &out;
    std::ostream &err;
    CliConfig cfg;
};

inline void print_json(std::ostream &os, const Json &j) { os << j.dump(2) << "\n"; }

inline int cmd_expand(Context &ctx, const std::string &family_name_arg, std::optional<int> param,
                      std::optional<int> order, std::optional<std::string> format, bool verify)
{
    const auto family = parse_family(family_name_arg);
    if (!family) {
        std::string names;
        for (const auto &f : family_table) {
            names += (names.empty() ? "" : ", ") + std::string(f.name);
        }
        throw UsageError("unknown family '" + family_name_arg + "' (" + names + ")");
    }
    ExpansionSpec spec;
    spec.family = *family;
    spec.param = param.value_or(std::max(1, family_info(*family).min_param));
    spec.order = order.value_or(ctx.cfg.default_order);
    const Format fmt = format ? parse_format(*format) : ctx.cfg.format;
    try {
        spec.validate();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }

    const AnySeries series = theorem_series(spec);
    std::optional<ExpansionCheck> check;
    if (verify) {
        check = compare_expansions(spec, series, oracle_series(spec));
    }

    switch (fmt) {
    case Format::Json:
        if (check) {
            Json j;
            j["series"] = to_json(series);
            j["verification"] = to_json(*check);
            print_json(ctx.out, j);
        } else {
            print_json(ctx.out, to_json(series));
        }
        break;
    case Format::Csv:
        ctx.out << to_csv(series);
        if (check) {
            ctx.err << to_json(*check).dump() << "\n";
        }
        break;
    case Format::Plain:
        ctx.out << to_plain(series);
        if (check) {
            ctx.out << "verification: " << (check->pass ? "pass" : "fail");
            if (check->first_mismatch) {
                ctx.out << " at t^" << *check->first_mismatch << " (theorem " << check->theorem_value << ", oracle "
                        << check->oracle_value << ")";
            }
            ctx.out << "\n";
        }
        break;
    }
    return check && !check->pass ? exit_failure : exit_ok;
}

/// Oracle sweep for one family, reported like an identity sweep.
inline IdentityReport expansion_report(Family family, const CliConfig &cfg)
{
    const auto &info = family_info(family);
    IdentityReport r;
    r.id = "expansion:" + std::string(info.name);
    const int lo = family == Family::ExpArcsinh ? 0 : info.min_param;
    const int hi = family == Family::ExpArcsinh ? 0 : lo + cfg.expansion_params - 1;
    const int order = std::max(cfg.default_order, hi);
    r.swept_range = family == Family::ExpArcsinh
                        ? "order " + std::to_string(order)
                        : "param " + std::to_string(lo) + ".." + std::to_string(hi) + ", order " + std::to_string(order);
    for (int p = lo; p <= hi; ++p) {
        const ExpansionCheck c = verify_expansion(ExpansionSpec{family, p, order});
        ++r.checks;
        if (!c.pass) {
            r.counterexample = Counterexample{"param=" + std::to_string(p) + ", index=" + std::to_string(*c.first_mismatch),
                                              c.theorem_value, c.oracle_value};
            break;
        }
    }
    return r;
}

inline int cmd_verify(Context &ctx, const std::optional<std::string> &ids_arg, const SuiteHooks &hooks)
{
    std::vector<std::string> ids;
    if (ids_arg) {
        ids = split_commas(*ids_arg);
    } else {
        for (const auto &e : identity_registry()) {
            ids.emplace_back(e.id);
        }
        for (const auto &f : family_table) {
            ids.push_back("expansion:" + std::string(f.name));
        }
    }
    // validate every id before running anything
    const std::string prefix = "expansion:";
    for (const auto &id : ids) {
        if (id.rfind(prefix, 0) == 0) {
            if (!parse_family(id.substr(prefix.size()))) {
                throw UsageError("unknown id '" + id + "'");
            }
        } else if (find_identity(id) == nullptr) {
            throw UsageError("unknown id '" + id + "'");
        }
    }

    std::vector<IdentityReport> reports;
    for (const auto &id : ids) {
        if (id.rfind(prefix, 0) == 0) {
            reports.push_back(expansion_report(*parse_family(id.substr(prefix.size())), ctx.cfg));
        } else {
            SuiteConfig sc;
            sc.ids = std::vector<std::string>{id};
            sc.bounds = ctx.cfg.bounds;
            sc.hooks = hooks;
            auto one = run_all(sc);
            reports.push_back(std::move(one.front()));
        }
    }
    Json arr = Json::array();
    for (const auto &r : reports) {
        arr.push_back(to_json(r));
    }
    print_json(ctx.out, arr);
    return all_passed(reports) ? exit_ok : exit_failure;
}

inline int cmd_bell(Context &ctx, int n, int k)
{
    if (n < 1 || k < 1 || k > 2 * n) {
        throw UsageError("bell: need n >= 1 and 1 <= k <= 2n");
    }
    const Rational closed = bell_special_value(n, k);
    const BellArgs args = bell_args(n, k);
    const Rational direct = bell_partial(2 * n, k, args.args);
    Json j;
    j["n"] = n;
    j["k"] = k;
    j["closed_form"] = closed.to_string();
    j["definition"] = direct.to_string();
    j["agree"] = closed == direct;
    print_json(ctx.out, j);
    return closed == direct ? exit_ok : exit_failure;
}

inline int cmd_logsine(Context &ctx, int j, int k, const std::string &theta_text, const std::string &method)
{
    LogsineRequest req;
    req.j = j;
    req.k = k;
    req.theta = parse_theta(theta_text);
    req.series_terms = ctx.cfg.terms;
    req.quad_tolerance = ctx.cfg.tolerance;
    try {
        req.validate();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    if (method == "series" && k < 1) {
        throw UsageError("logsine: the series method needs k >= 1");
    }

    std::vector<LogsineResult> results;
    try {
        if (method == "quad" || method == "all") {
            results.push_back(logsine_quadrature(req));
        }
        if (method == "arcsin" || method == "all") {
            results.push_back(logsine_arcsin_form(req));
        }
        if (method == "series" || (method == "all" && k >= 1)) {
            results.push_back(logsine_series(req));
        }
    } catch (const QuadratureError &e) {
        ctx.err << "error: " << e.what() << "\n";
        return exit_failure;
    }

    Json out;
    out["j"] = j;
    out["k"] = k;
    out["theta"] = req.theta;
    if (results.size() == 1) {
        const Json single = to_json(results.front());
        for (const auto &[key, val] : single.items()) {
            out[key] = val;
        }
    } else {
        Json arr = Json::array();
        for (const auto &r : results) {
            arr.push_back(to_json(r));
        }
        out["values"] = std::move(arr);
    }
    print_json(ctx.out, out);
    return exit_ok;
}

inline int cmd_pi(Context &ctx, int m, int terms)
{
    if (m < 1 || terms < 1) {
        throw UsageError("pi: need m >= 1 and terms >= 1");
    }
    const auto sums = pi_power_partial_sums(m, terms);
    Json out;
    out["m"] = m;
    out["terms"] = terms;
    out["value"] = sums.back();
    out["est_error"] = sums.size() >= 2 ? std::abs(sums.back() - sums[sums.size() - 2]) : 0.0;
    out["reference"] = std::pow(std::numbers::pi / 3.0, m);
    out["partial_sums"] = sums;
    print_json(ctx.out, out);
    return exit_ok;
}

} // namespace detail

/// Runs one command. args excludes the program name. Returns the exit code:
/// 0 success, 1 verification or numeric failure, 2 usage error.
inline int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
                   const EnvLookup &env = process_env)
{
    CLI::App app{"series-forge: exact series expansions, identity sweeps and logsine numerics", "series-forge"};
    app.require_subcommand(1);

    std::optional<std::string> config_path;
    app.add_option("--config", config_path, "key=value settings file");

    // expand
    auto *expand = app.add_subcommand("expand", "coefficients of one expansion family");
    std::string family;
    std::optional<int> param;
    std::optional<int> order;
    std::optional<std::string> format;
    bool verify_flag = false;
    expand->add_option("family", family, "family name")->required();
    expand->add_option("--m,--n,--param", param, "family parameter");
    expand->add_option("--order", order, "truncation order");
    expand->add_option("--format", format, "json, csv or plain");
    expand->add_flag("--verify", verify_flag, "compare against the series-engine oracle");

    // verify
    auto *verify = app.add_subcommand("verify", "run identity and expansion sweeps");
    std::optional<std::string> ids;
    std::vector<std::string> bound_overrides;
    std::optional<int> verify_order;
    std::optional<std::string> rhs_bias;
    verify->add_option("--ids", ids, "comma separated ids; expansion:<family> selects an oracle sweep");
    verify->add_option("--bound", bound_overrides, "name=value sweep bound, repeatable");
    verify->add_option("--order", verify_order, "order for expansion sweeps");
    // negative control: perturbs every right-hand side
    verify->add_option("--rhs-bias", rhs_bias)->group("");

    // bell
    auto *bell = app.add_subcommand("bell", "special Bell value b_{2n,k} by closed form and by definition");
    int bell_n = 1;
    int bell_k = 1;
    bell->add_option("--n", bell_n)->required();
    bell->add_option("--k", bell_k)->required();

    // logsine
    auto *logsine = app.add_subcommand("logsine", "generalized logsine integral");
    int ls_j = 2;
    int ls_k = 0;
    std::string theta = "pi/3";
    std::optional<int> ls_terms;
    std::optional<double> ls_tol;
    std::string method = "all";
    logsine->add_option("--j", ls_j)->required();
    logsine->add_option("--k", ls_k)->required();
    logsine->add_option("--theta", theta, "angle, e.g. pi/3 or 1.2")->required();
    logsine->add_option("--terms", ls_terms, "series terms");
    logsine->add_option("--tol", ls_tol, "quadrature tolerance");
    logsine->add_option("--method", method)->check(CLI::IsMember({"quad", "arcsin", "series", "all"}));

    // pi
    auto *pi = app.add_subcommand("pi", "partial sums of the (pi/3)^m series");
    int pi_m = 1;
    std::optional<int> pi_terms;
    pi->add_option("--m", pi_m)->required();
    pi->add_option("--terms", pi_terms);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        detail::Context ctx{out, err, {}};
        if (config_path) {
            load_config_file(ctx.cfg, *config_path);
        }
        if (const auto v = env("SERIES_FORGE_ORDER")) {
            ctx.cfg.default_order = detail::to_int("SERIES_FORGE_ORDER", detail::trim(*v));
        }
        ctx.cfg.validate();

        if (*expand) {
            return detail::cmd_expand(ctx, family, param, order, format, verify_flag);
        }
        if (*verify) {
            for (const auto &b : bound_overrides) {
                detail::apply_assignment(ctx.cfg, b);
            }
            if (verify_order) {
                ctx.cfg.default_order = *verify_order;
            }
            ctx.cfg.validate();
            SuiteHooks hooks;
            if (rhs_bias) {
                try {
                    hooks.rhs_bias = Rational::parse(*rhs_bias);
                } catch (const std::invalid_argument &e) {
                    throw UsageError(e.what());
                }
            }
            return detail::cmd_verify(ctx, ids, hooks);
        }
        if (*bell) {
            return detail::cmd_bell(ctx, bell_n, bell_k);
        }
        if (*logsine) {
            if (ls_terms) {
                ctx.cfg.terms = *ls_terms;
            }
            if (ls_tol) {
                ctx.cfg.tolerance = *ls_tol;
            }
            ctx.cfg.validate();
            return detail::cmd_logsine(ctx, ls_j, ls_k, theta, method);
        }
        if (*pi) {
            return detail::cmd_pi(ctx, pi_m, pi_terms.value_or(ctx.cfg.terms));
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace series_forge::cli

#endif
