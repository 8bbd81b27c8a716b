#include "rsa/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rsa/constants.hpp"
#include "rsa/errors.hpp"
#include "rsa/presets.hpp"
#include "rsa/sim.hpp"
#include "rsa/solver.hpp"
#include "rsa/threads.hpp"

namespace rsa::cli {

namespace {

nlohmann::json opt_json(const std::optional<double>& v) {
    if (!v || std::isnan(*v)) return nullptr;
    return *v;
}

std::string opt_csv(const std::optional<double>& v) { return v ? format_number(*v) : "NA"; }

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file: " + path);
    f << text;
}

void check_format(const std::string& fmt) {
    if (fmt != "csv" && fmt != "json") throw ConfigError("format must be csv or json");
}

Process parse_process(const std::string& p) {
    if (p == "rsa") return Process::Rsa;
    if (p == "rejection") return Process::Rejection;
    if (p == "ghost") return Process::Ghost;
    throw ConfigError("process must be rsa, rejection or ghost");
}

std::size_t type_index(const LengthDistribution& d, int k) {
    if (!d.is_discrete()) throw ConfigError("--k needs a discrete distribution");
    if (k < 1 || static_cast<std::size_t>(k) > d.lengths().size()) throw ConfigError("--k out of range");
    return static_cast<std::size_t>(k - 1);
}

// Grid value and a bound on its discretization error from a solve at twice the step.
struct GridValue {
    double value;
    double bound;
};

GridValue counts_with_bound(const LengthDistribution& d, std::size_t k, double L, double h) {
    const auto fine = solve_multidisperse_counts(d, k, L, h);
    const auto coarse = solve_multidisperse_counts(d, k, L, 2.0 * h);
    return {fine.at(L), std::abs(fine.at(L) - coarse.at(L))};
}

GridValue empty_space_with_bound(const LengthDistribution& d, double L, double h) {
    const auto fine = solve_empty_space(d, L, h);
    const auto coarse = solve_empty_space(d, L, 2.0 * h);
    return {fine.at(L), std::abs(fine.at(L) - coarse.at(L))};
}

ComparisonRow sim_vs_solver(const std::string& q, const MonteCarloEstimate& mc, const GridValue& g, double scale) {
    ComparisonRow r;
    r.quantity = q;
    r.simulation = mc.mean;
    r.sim_stderr = mc.std_error;
    r.solver = g.value;
    r.solver_bound = g.bound;
    r.difference = std::abs(mc.mean - g.value);
    r.tolerance = scale * (4.0 * mc.std_error + g.bound);
    r.pass = r.difference <= r.tolerance;
    return r;
}

ComparisonRow solver_vs_constant(const std::string& q, double slope, const ConstantResult& c, double tol, double scale) {
    ComparisonRow r;
    r.quantity = q;
    r.solver = slope;
    r.constant = c.value;
    r.constant_tol = c.abs_err;
    r.difference = std::abs(slope - c.value);
    r.tolerance = scale * tol;
    r.pass = r.difference <= r.tolerance;
    return r;
}

ComparisonRow sim_vs_constant(const std::string& q, const MonteCarloEstimate& mc, double exact, double scale) {
    ComparisonRow r;
    r.quantity = q;
    r.simulation = mc.mean;
    r.sim_stderr = mc.std_error;
    r.constant = exact;
    r.constant_tol = 0.0;
    r.difference = std::abs(mc.mean - exact);
    r.tolerance = scale * 4.0 * mc.std_error;
    r.pass = r.difference <= r.tolerance;
    return r;
}

void compare_discrete(const CompareOptions& opt, const LengthDistribution& d, ComparisonReport& rep) {
    const double h = 1e-3;
    McSpec spec{d, Process::Rsa, opt.L, {}, default_attempt_cap};
    std::vector<Observable> obs{{Estimand::EmptySpace, 0}};
    const std::size_t n = d.lengths().size();
    for (std::size_t k = 0; k < n; ++k) obs.push_back({Estimand::CountType, k});
    const auto mc = monte_carlo_many(spec, obs, opt.replicates, opt.seed);
    rep.rows.push_back(sim_vs_solver("E[S_L]", mc[0], empty_space_with_bound(d, opt.L, h), opt.tolerance_scale));
    for (std::size_t k = 0; k < n; ++k) {
        const std::string name = "E[N_" + std::to_string(k + 1) + ",L]";
        rep.rows.push_back(sim_vs_solver(name, mc[k + 1], counts_with_bound(d, k, opt.L, h), opt.tolerance_scale));
    }
    for (std::size_t k = 0; k < n; ++k) {
        const auto g = solve_multidisperse_counts(d, k, opt.fit_L, h);
        const double slope = estimate_linear_density(g).value;
        const auto alpha = multidisperse_alpha(d, k);
        rep.rows.push_back(solver_vs_constant("alpha_" + std::to_string(k + 1), slope, alpha, 2e-3, opt.tolerance_scale));
    }
    if (n == 1) {
        const auto g = solve_renyi_counts(opt.fit_L, h);
        const double slope = estimate_linear_density(g).value;
        rep.rows.push_back(solver_vs_constant("renyi_alpha", slope, renyi_constant(), 2e-3, opt.tolerance_scale));
    }
}

void compare_power(const CompareOptions& opt, const LengthDistribution& d, ComparisonReport& rep) {
    const double h = 1.0 / 64.0;
    McSpec spec{d, Process::Rsa, opt.L, {Estimand::EmptySpace, 0}, default_attempt_cap};
    const auto mc = monte_carlo(spec, opt.replicates, opt.seed);
    rep.rows.push_back(sim_vs_solver("E[S_L]", mc, empty_space_with_bound(d, opt.L, h), opt.tolerance_scale));

    // Upper-bound law E[S_L] <= L^xi on the grid.
    const double xi = xi_exponent(d.beta());
    const auto g = solve_empty_space(d, opt.L, h);
    double worst = 0.0;
    for (std::size_t j = 1; j < g.size(); ++j) worst = std::max(worst, g.values[j] / std::pow(g.L(j), xi));
    ComparisonRow r;
    r.quantity = "max E[S_L]/L^xi";
    r.solver = worst;
    r.constant = xi;
    r.difference = std::max(0.0, worst - 1.0);
    r.tolerance = opt.tolerance_scale * 5e-3;
    r.pass = r.difference <= r.tolerance;
    rep.rows.push_back(r);
}

void compare_ghost(const CompareOptions& opt, const LengthDistribution& d, ComparisonReport& rep) {
    McSpec spec{d, Process::Ghost, opt.L, {}, default_attempt_cap};
    std::vector<Observable> obs;
    const std::size_t n = d.lengths().size();
    for (std::size_t k = 0; k < n; ++k) obs.push_back({Estimand::CountType, k});
    obs.push_back({Estimand::Covered, 0});
    const auto mc = monte_carlo_many(spec, obs, opt.replicates, opt.seed);
    double covered = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double exact = ghost_expected_count(d, k, opt.L);
        covered += d.lengths()[k] * exact;
        rep.rows.push_back(sim_vs_constant("ghost E[N_" + std::to_string(k + 1) + ",L]", mc[k], exact, opt.tolerance_scale));
    }
    rep.rows.push_back(sim_vs_constant("ghost E[J_L]", mc[n], covered, opt.tolerance_scale));
    const double lim = ghost_density_limit(d);
    const auto [lo, hi] = ghost_density_bounds(d);
    ComparisonRow r;
    r.quantity = "ghost density limit in bounds";
    r.constant = lim;
    r.difference = std::max({0.0, lo - lim, lim - hi});
    r.tolerance = opt.tolerance_scale * 1e-12;
    r.pass = r.difference <= r.tolerance;
    rep.rows.push_back(r);
}

std::string simulate_csv(const std::vector<MonteCarloEstimate>& est, const std::string& process, double L) {
    std::ostringstream os;
    os << "estimand,process,L,mean,stderr,replicates,seed,capped\n";
    for (const auto& e : est)
        os << e.estimand << ',' << process << ',' << format_number(L) << ',' << format_number(e.mean) << ','
           << format_number(e.std_error) << ',' << e.replicates << ',' << e.seed << ',' << e.capped << '\n';
    return os.str();
}

std::string simulate_json(const std::vector<MonteCarloEstimate>& est, const std::string& process, double L) {
    auto arr = nlohmann::json::array();
    for (const auto& e : est)
        arr.push_back({{"estimand", e.estimand},
                       {"process", process},
                       {"L", L},
                       {"mean", e.mean},
                       {"stderr", opt_json(e.std_error)},
                       {"replicates", e.replicates},
                       {"seed", e.seed},
                       {"capped", e.capped}});
    return arr.dump(2) + "\n";
}

nlohmann::json report(const std::string& quantity, const ConstantResult& c, nlohmann::json inputs) {
    return {{"quantity", quantity}, {"value", c.value}, {"abs_err", c.abs_err}, {"method", c.method}, {"inputs", inputs}};
}

struct Options {
    std::string dist;
    std::string preset;
    std::string process = "rsa";
    double L = -1.0;
    double L_max = -1.0;
    double h = 0.0;
    std::uint64_t reps = 10000;
    std::uint64_t seed = default_seed;
    std::size_t batch = default_batch_size;
    std::uint64_t attempt_cap = default_attempt_cap;
    int k = 1;
    double beta = 1.0;
    double tol = 1e-8;
    double tolerance_scale = 1.0;
    std::string quantity;
    std::string backend = "parallel";
    std::string out;
    std::string format;
    std::string what;
};

std::string distribution_arg(const Options& o) {
    if (!o.dist.empty()) return o.dist;
    if (!o.preset.empty()) return o.preset;
    throw ConfigError("a distribution is required (--dist or --preset)");
}

int cmd_simulate(const Options& o, std::ostream& out) {
    const LengthDistribution d = load_distribution(distribution_arg(o));
    if (!(o.L >= 0.0)) throw ConfigError("--L is required and must be nonnegative");
    if (o.reps < 1) throw ConfigError("--reps must be at least 1");
    const std::string fmt = o.format.empty() ? "csv" : o.format;
    check_format(fmt);
    McSpec spec{d, parse_process(o.process), o.L, {}, o.attempt_cap};
    if (spec.process == Process::Ghost && !d.is_discrete()) throw ConfigError("ghost process needs a discrete distribution");
    std::vector<Observable> obs{{Estimand::EmptySpace, 0}, {Estimand::Count, 0}};
    if (o.L > 0.0) obs.push_back({Estimand::Density, 0});
    if (d.is_discrete())
        for (std::size_t k = 0; k < d.lengths().size(); ++k) obs.push_back({Estimand::CountType, k});
    const auto est = monte_carlo_many(spec, obs, o.reps, o.seed, o.batch);
    const std::string text = fmt == "csv" ? simulate_csv(est, o.process, o.L) : simulate_json(est, o.process, o.L);
    emit(text, o.out, out);
    return Pass;
}

int cmd_solve(const Options& o, std::ostream& out) {
    const std::string name = distribution_arg(o);
    const auto fig = figure_preset(name);
    const LengthDistribution d = load_distribution(name);
    double L_max = o.L_max >= 0.0 ? o.L_max : (fig ? fig->L_max : -1.0);
    if (!(L_max >= 0.0)) throw ConfigError("--Lmax is required");
    double h = o.h > 0.0 ? o.h : (fig ? fig->h : (d.is_discrete() ? 1e-3 : 1.0 / 64.0));
    SolveQuantity q = fig ? fig->quantity : SolveQuantity::EmptySpace;
    if (!o.quantity.empty()) {
        if (o.quantity == "empty-space") q = SolveQuantity::EmptySpace;
        else if (o.quantity == "counts") q = SolveQuantity::Counts;
        else if (o.quantity == "second-moment") q = SolveQuantity::SecondMoment;
        else throw ConfigError("--quantity must be empty-space, counts or second-moment");
    }
    const Backend backend = o.backend == "reference" ? Backend::Reference : Backend::Parallel;
    if (o.backend != "reference" && o.backend != "parallel") throw ConfigError("--backend must be parallel or reference");
    const std::string fmt = o.format.empty() ? "csv" : o.format;
    check_format(fmt);

    GridSolution g;
    std::vector<double> variance;
    if (q == SolveQuantity::EmptySpace) {
        if (L_max < 1.0) {
            // Below the minimum length nothing parks.
            steps_per_unit(d, h);
            g.h = h;
            g.quantity = "E[S_L]";
            const auto n = static_cast<std::size_t>(std::floor(L_max / h + 1e-9));
            g.values.resize(n + 1);
            for (std::size_t j = 0; j <= n; ++j) g.values[j] = g.L(j);
        } else {
            g = solve_empty_space(d, L_max, h, backend);
        }
    } else if (q == SolveQuantity::Counts) {
        g = solve_multidisperse_counts(d, type_index(d, o.k), L_max, h);
    } else {
        const auto m = solve_second_moment(d, type_index(d, o.k), L_max, h, backend);
        g = m.first;
        for (std::size_t j = 0; j < g.size(); ++j) variance.push_back(m.variance(j));
    }

    std::string text;
    if (fmt == "csv") {
        std::ostringstream os;
        os << (variance.empty() ? "L,value\n" : "L,value,variance\n");
        for (std::size_t j = 0; j < g.size(); ++j) {
            os << format_number(g.L(j)) << ',' << format_number(g.values[j]);
            if (!variance.empty()) os << ',' << format_number(variance[j]);
            os << '\n';
        }
        text = os.str();
    } else {
        nlohmann::json j;
        j["quantity"] = g.quantity;
        j["h"] = h;
        j["distribution"] = d.to_json();
        auto Ls = nlohmann::json::array();
        for (std::size_t i = 0; i < g.size(); ++i) Ls.push_back(g.L(i));
        j["L"] = Ls;
        j["value"] = g.values;
        if (!variance.empty()) j["variance"] = variance;
        text = j.dump() + "\n";
    }
    emit(text, o.out, out);
    return Pass;
}

int cmd_constants(const Options& o, std::ostream& out) {
    nlohmann::json result;
    if (o.what == "renyi") {
        result = report("renyi_alpha", renyi_constant(std::max(o.tol, 1e-12)), {{"tol", o.tol}});
    } else if (o.what == "multi") {
        const LengthDistribution d = load_distribution(distribution_arg(o));
        if (!d.is_discrete()) throw ConfigError("multi needs a discrete distribution");
        result = nlohmann::json::array();
        double coverage = 0.0, coverage_err = 0.0;
        for (std::size_t k = 0; k < d.lengths().size(); ++k) {
            const auto a = multidisperse_alpha(d, k, o.tol);
            coverage += a.value * d.lengths()[k];
            coverage_err += a.abs_err * d.lengths()[k];
            result.push_back(report("alpha_" + std::to_string(k + 1), a, {{"distribution", d.to_json()}, {"k", k + 1}}));
        }
        result.push_back(report("coverage", {coverage, coverage_err, "sum_k alpha_k l_k"}, {{"distribution", d.to_json()}}));
    } else if (o.what == "xi") {
        const double tol = 1e-12;
        result = report("xi", {xi_exponent(o.beta, tol), tol, "bracketed root of ln B(beta+1, theta+1) = -ln(2(beta+1))"},
                        {{"beta", o.beta}});
    } else if (o.what == "xi-int") {
        const double tol = 1e-12;
        const int b = static_cast<int>(std::lround(o.beta));
        if (std::abs(o.beta - b) > 0 || b < 1) throw ConfigError("xi-int needs a positive integer --beta");
        result = report("xi", {xi_exponent_integer(b, tol), tol, "bracketed root of prod (theta+i) = 2 (beta+1)!"},
                        {{"beta", b}});
    } else if (o.what == "ghost") {
        const LengthDistribution d = load_distribution(distribution_arg(o));
        if (!d.is_discrete()) throw ConfigError("ghost needs a discrete distribution");
        const auto [lo, hi] = ghost_density_bounds(d);
        result = report("ghost_density", {ghost_density_limit(d), 0.0, "closed form"},
                        {{"distribution", d.to_json()}, {"lower_bound", lo}, {"upper_bound", hi}});
    } else if (o.what == "alpha-nu") {
        const LengthDistribution d = load_distribution(distribution_arg(o));
        const double L_max = o.L_max > 0.0 ? o.L_max : 2000.0;
        const double h = o.h > 0.0 ? o.h : (d.is_discrete() ? 1e-3 : 1.0 / 32.0);
        const auto e = alpha_nu_estimate(d, L_max, h);
        result = report("alpha_nu_estimate", {e.value, std::abs(e.drift), "numerical estimate: tail slope of E[S_L]"},
                        {{"distribution", d.to_json()}, {"L_max", L_max}, {"h", h}, {"hypothesis", e.hypothesis}});
    } else {
        throw ConfigError("constants: expected renyi, multi, xi, xi-int, ghost or alpha-nu");
    }
    std::string text;
    if (o.format == "csv") {
        std::ostringstream os;
        os << "quantity,value,abs_err\n";
        const auto rows = result.is_array() ? result : nlohmann::json::array({result});
        for (const auto& r : rows)
            os << r["quantity"].get<std::string>() << ',' << format_number(r["value"].get<double>()) << ','
               << format_number(r["abs_err"].get<double>()) << '\n';
        text = os.str();
    } else {
        if (!o.format.empty()) check_format(o.format);
        text = result.dump(2) + "\n";
    }
    emit(text, o.out, out);
    return Pass;
}

int cmd_compare(const Options& o, std::ostream& out) {
    CompareOptions c;
    c.preset = distribution_arg(o);
    if (o.L >= 0.0) c.L = o.L;
    c.replicates = o.reps;
    c.seed = o.seed;
    c.tolerance_scale = o.tolerance_scale;
    if (o.L_max > 0.0) c.fit_L = o.L_max;
    const std::string fmt = o.format.empty() ? "csv" : o.format;
    check_format(fmt);
    const ComparisonReport r = compare(c);
    emit(fmt == "csv" ? to_csv(r) : to_json(r).dump(2) + "\n", o.out, out);
    return r.pass() ? Pass : ComparisonFailed;
}

}  // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return "NA";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

bool ComparisonReport::pass() const {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return !rows.empty();
}

ComparisonReport compare(const CompareOptions& opt) {
    const LengthDistribution d = load_distribution(opt.preset);
    if (opt.replicates < 2) throw ConfigError("compare needs at least 2 replicates");
    if (!(opt.L >= 1.0)) throw ConfigError("compare needs L >= 1");
    ComparisonReport rep;
    rep.preset = opt.preset;
    rep.L = opt.L;
    rep.replicates = opt.replicates;
    rep.seed = opt.seed;
    if (opt.preset == "ghost2" || opt.preset.rfind("ghost", 0) == 0) {
        compare_ghost(opt, d, rep);
    } else if (d.is_discrete()) {
        compare_discrete(opt, d, rep);
    } else if (d.kind() == LdfKind::PowerLaw) {
        compare_power(opt, d, rep);
    } else {
        McSpec spec{d, Process::Rsa, opt.L, {Estimand::EmptySpace, 0}, default_attempt_cap};
        const auto mc = monte_carlo(spec, opt.replicates, opt.seed);
        rep.rows.push_back(sim_vs_solver("E[S_L]", mc, empty_space_with_bound(d, opt.L, 1.0 / 64.0), opt.tolerance_scale));
    }
    return rep;
}

std::string to_csv(const ComparisonReport& r) {
    std::ostringstream os;
    os << "quantity,simulation,sim_stderr,solver,solver_grid_bound,constant,constant_tol,difference,tolerance,pass\n";
    for (const auto& row : r.rows)
        os << row.quantity << ',' << opt_csv(row.simulation) << ',' << opt_csv(row.sim_stderr) << ','
           << opt_csv(row.solver) << ',' << opt_csv(row.solver_bound) << ',' << opt_csv(row.constant) << ','
           << opt_csv(row.constant_tol) << ',' << format_number(row.difference) << ','
           << format_number(row.tolerance) << ',' << (row.pass ? "pass" : "fail") << '\n';
    return os.str();
}

nlohmann::json to_json(const ComparisonReport& r) {
    auto rows = nlohmann::json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"quantity", row.quantity},
                        {"simulation", opt_json(row.simulation)},
                        {"sim_stderr", opt_json(row.sim_stderr)},
                        {"solver", opt_json(row.solver)},
                        {"solver_grid_bound", opt_json(row.solver_bound)},
                        {"constant", opt_json(row.constant)},
                        {"constant_tol", opt_json(row.constant_tol)},
                        {"difference", row.difference},
                        {"tolerance", row.tolerance},
                        {"pass", row.pass}});
    return {{"preset", r.preset}, {"L", r.L}, {"replicates", r.replicates}, {"seed", r.seed},
            {"pass", r.pass()},   {"rows", rows}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Random sequential adsorption: simulators, recurrence solvers and limiting constants", "rsa-kinetics"};
    app.set_help_flag("--help", "Print help");
    app.require_subcommand(1);
    Options o;

    auto add_dist = [&](CLI::App* sc) {
        sc->add_option("--dist", o.dist, "Distribution preset name or JSON file");
        sc->add_option("--preset", o.preset, "Named preset (distribution or figure)");
    };
    auto add_output = [&](CLI::App* sc) {
        sc->add_option("--out", o.out, "Output file (default: stdout)");
        sc->add_option("--format", o.format, "csv or json");
    };

    auto* sim = app.add_subcommand("simulate", "Monte Carlo estimates at saturation");
    add_dist(sim);
    add_output(sim);
    sim->add_option("--process", o.process, "rsa, rejection or ghost");
    sim->add_option("--L", o.L, "Interval length")->required();
    sim->add_option("--reps", o.reps, "Replicates");
    sim->add_option("--seed", o.seed, "Seed");
    sim->add_option("--batch", o.batch, "Aggregation batch size");
    sim->add_option("--attempt-cap", o.attempt_cap, "Attempt cap for the rejection process");

    auto* solve = app.add_subcommand("solve", "March a recurrence on a uniform grid");
    add_dist(solve);
    add_output(solve);
    solve->add_option("--Lmax", o.L_max, "Largest grid length");
    solve->add_option("--h", o.h, "Grid step");
    solve->add_option("--quantity", o.quantity, "empty-space, counts or second-moment");
    solve->add_option("--k", o.k, "Type index (1-based)");
    solve->add_option("--backend", o.backend, "parallel or reference");

    auto* cons = app.add_subcommand("constants", "Limiting constants");
    add_dist(cons);
    add_output(cons);
    cons->add_option("what", o.what, "renyi, multi, xi, xi-int, ghost or alpha-nu")->required();
    cons->add_option("--beta", o.beta, "Power-law exponent");
    cons->add_option("--tol", o.tol, "Absolute tolerance");
    cons->add_option("--Lmax", o.L_max, "Grid length for alpha-nu");
    cons->add_option("--h", o.h, "Grid step for alpha-nu");

    auto* cmp = app.add_subcommand("compare", "Cross-check simulation, solver and constants");
    add_dist(cmp);
    add_output(cmp);
    cmp->add_option("--L", o.L, "Interval length (default 200)");
    cmp->add_option("--Lmax", o.L_max, "Grid length for slope rows (default 2000)");
    cmp->add_option("--reps", o.reps, "Replicates")->default_val(100000);
    cmp->add_option("--seed", o.seed, "Seed");
    cmp->add_option("--tolerance-scale", o.tolerance_scale, "Multiplier on every tolerance");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Pass : ConfigInvalid;
    }

    try {
        apply_thread_cap_from_env();
        if (sim->parsed()) return cmd_simulate(o, out);
        if (solve->parsed()) return cmd_solve(o, out);
        if (cons->parsed()) return cmd_constants(o, out);
        if (cmp->parsed()) return cmd_compare(o, out);
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << '\n';
        return ConfigInvalid;
    } catch (const DomainError& e) {
        err << "invalid input: " << e.what() << '\n';
        return ConfigInvalid;
    } catch (const std::exception& e) {
        err << "numeric error: " << e.what() << '\n';
        return NumericFailure;
    }
    return ConfigInvalid;
}

}  // namespace rsa::cli
