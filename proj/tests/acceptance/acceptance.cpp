// Acceptance gate: one [PASS]/[FAIL] line per criterion, detail lines indented above it.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "rsa/cli.hpp"
#include "rsa/constants.hpp"
#include "rsa/presets.hpp"
#include "rsa/random.hpp"
#include "rsa/sim.hpp"
#include "rsa/solver.hpp"

using namespace rsa;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string summary;
};

void detail(const char* fmt, auto... args) {
    std::printf("    ");
    std::printf(fmt, args...);
    std::printf("\n");
}

LengthDistribution preset(const std::string& name) { return *distribution_preset(name); }

Outcome criterion1() {
    const auto r = renyi_constant();
    const double diff = std::abs(r.value - 0.747598);
    detail("alpha=%.12f abs_err=%.2e |alpha-0.747598|=%.2e tol=1e-5", r.value, r.abs_err, diff);
    return {diff <= 1e-5, "Renyi constant"};
}

Outcome criterion2() {
    const auto d = preset("example3");
    const double expect[3] = {0.4204, 0.1655, 0.0949};
    bool ok = true;
    double coverage = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
        const auto a = multidisperse_alpha(d, k);
        const double diff = std::abs(a.value - expect[k]);
        ok = ok && diff <= 5e-4;
        coverage += a.value * d.lengths()[k];
        detail("alpha_%zu=%.8f expected=%.4f diff=%.2e tol=5e-4", k + 1, a.value, expect[k], diff);
    }
    const double cdiff = std::abs(coverage - 0.7778);
    detail("sum alpha_k l_k=%.8f expected=0.7778 diff=%.2e tol=1e-3", coverage, cdiff);
    return {ok && cdiff <= 1e-3, "multidisperse worked example"};
}

Outcome criterion3() {
    bool ok = true;
    for (const auto& f : figure_presets()) {
        const auto d = load_distribution(f.distribution);
        GridSolution g;
        if (f.quantity == SolveQuantity::Counts)
            g = solve_multidisperse_counts(d, f.type, f.L_max, f.h);
        else
            g = solve_empty_space(d, f.L_max, f.h);
        for (const auto& p : f.points) {
            const double v = g.at(p.L);
            const double diff = std::abs(v - p.value);
            const bool rel = p.rel_tol > 0.0;
            const bool pass = rel ? diff <= p.rel_tol * std::abs(p.value) : diff <= p.abs_tol;
            ok = ok && pass;
            detail("%s L=%g solver=%.6f plotted=%.6f %s=%.3e tol=%g %s", f.name.c_str(), p.L, v, p.value,
                   rel ? "rel" : "abs", rel ? diff / std::abs(p.value) : diff, rel ? p.rel_tol : p.abs_tol,
                   pass ? "ok" : "MISMATCH");
        }
    }
    return {ok, "figure regression"};
}

Outcome criterion4() {
    bool ok = true;
    for (const std::string p : {"renyi", "example3", "uniform-ldf"}) {
        cli::CompareOptions opt;
        opt.preset = p;
        opt.L = 200.0;
        opt.replicates = 100000;
        const auto r = cli::compare(opt);
        for (const auto& row : r.rows)
            detail("%s %s diff=%.3e tol=%.3e %s", p.c_str(), row.quantity.c_str(), row.difference, row.tolerance,
                   row.pass ? "ok" : "MISMATCH");
        ok = ok && r.pass();
    }
    return {ok, "tri-engine agreement"};
}

Outcome criterion5() {
    bool ok = true;
    const std::vector<std::pair<std::string, LengthDistribution>> configs{
        {"ghost2", preset("ghost2")},
        {"example3", preset("example3")},
        {"three-wide", LengthDistribution::discrete({{1, 0.2}, {2.5, 0.5}, {6, 0.3}})}};
    for (const auto& [name, d] : configs) {
        const double L = 1000.0;
        std::vector<Observable> obs;
        for (std::size_t k = 0; k < d.lengths().size(); ++k) obs.push_back({Estimand::CountType, k});
        const auto est = monte_carlo_many(McSpec{d, Process::Ghost, L, {}}, obs, 10000, cli::default_seed);
        for (std::size_t k = 0; k < obs.size(); ++k) {
            const double exact = ghost_expected_count(d, k, L);
            const double diff = std::abs(est[k].mean - exact);
            const bool pass = diff <= 4.0 * est[k].std_error;
            ok = ok && pass;
            detail("%s N_%zu sim=%.4f+-%.4f closed=%.4f diff/stderr=%.2f %s", name.c_str(), k + 1, est[k].mean,
                   est[k].std_error, exact, diff / est[k].std_error, pass ? "ok" : "MISMATCH");
        }
    }
    Rng rng(cli::default_seed);
    int inside = 0;
    for (int c = 0; c < 50; ++c) {
        const int n = 1 + static_cast<int>(rng.uniform() * 6);
        std::vector<Atom> atoms{{1.0, 0.0}};
        for (int i = 1; i < n; ++i) atoms.push_back({atoms.back().length + 0.01 * (1 + static_cast<int>(rng.uniform() * 500)), 0.0});
        double total = 0.0;
        for (auto& a : atoms) total += (a.weight = 0.01 + rng.uniform());
        for (auto& a : atoms) a.weight /= total;
        const auto d = LengthDistribution::discrete(atoms);
        const auto [lo, hi] = ghost_density_bounds(d);
        const double j = ghost_density_limit(d);
        inside += (j >= lo - 1e-12 && j <= hi + 1e-12);
    }
    detail("density limit inside bounds for %d/50 random configs", inside);
    return {ok && inside == 50, "ghost process"};
}

Outcome criterion6() {
    const double exact = (std::sqrt(17.0) - 3.0) / 2.0;
    const double xi1 = xi_exponent(1.0);
    bool ok = std::abs(xi1 - exact) <= 1e-10;
    detail("xi(1)=%.15f exact=%.15f diff=%.2e tol=1e-10", xi1, exact, std::abs(xi1 - exact));
    double worst = 0.0;
    for (int b = 1; b <= 10; ++b) worst = std::max(worst, std::abs(xi_exponent(b) - xi_exponent_integer(b)));
    ok = ok && worst <= 2e-10;
    detail("max |xi - xi_integer| over beta=1..10: %.2e tol=2e-10", worst);
    const auto g = solve_empty_space(LengthDistribution::power_law(1.0), 2000.0, 1.0 / 32);
    const auto fit = estimate_power_exponent(g);
    const bool bracket = fit.value >= 0.50 && fit.value <= 0.562;
    detail("log-log tail exponent=%.7f (drift %.2e) bracket=[0.50, 0.562]", fit.value, fit.drift);
    double ratio = 0.0;
    for (std::size_t j = 1; j < g.size(); ++j) ratio = std::max(ratio, g.values[j] / std::pow(g.L(j), xi1));
    detail("max E[S_L]/L^xi(1)=%.6f limit=1.005", ratio);
    return {ok && bracket && ratio <= 1.005, "power-law exponents"};
}

Outcome criterion7() {
    bool ok = true;
    const std::vector<std::tuple<std::string, LengthDistribution, double>> configs{
        {"nu=1", LengthDistribution::power_law(1.0), 2.6},
        {"nu=1", LengthDistribution::power_law(1.0), 3.7},
        {"renyi", preset("renyi"), 3.7},
        {"example3", preset("example3"), 2.7},
        {"example3", preset("example3"), 3.7}};
    const std::vector<Observable> obs{{Estimand::Count, 0}, {Estimand::EmptySpace, 0}};
    for (const auto& [name, d, L] : configs) {
        const auto a = monte_carlo_many(McSpec{d, Process::Rsa, L, {}}, obs, 1000000, cli::default_seed);
        const auto b = monte_carlo_many(McSpec{d, Process::Rejection, L, {}}, obs, 1000000, cli::default_seed + 1);
        for (std::size_t e = 0; e < obs.size(); ++e) {
            const double se = std::hypot(a[e].std_error, b[e].std_error);
            const double diff = std::abs(a[e].mean - b[e].mean);
            const bool pass = diff <= 4.0 * se && b[e].capped == 0;
            ok = ok && pass;
            detail("%s L=%g %s exact=%.5f rejection=%.5f diff/stderr=%.2f %s", name.c_str(), L, a[e].estimand.c_str(),
                   a[e].mean, b[e].mean, diff / se, pass ? "ok" : "MISMATCH");
        }
    }
    return {ok, "sampler equivalence"};
}

Outcome criterion8() {
    const std::vector<std::vector<std::string>> commands{
        {"simulate", "--preset", "example3", "--L", "50", "--reps", "20000"},
        {"simulate", "--preset", "uniform-ldf", "--process", "rejection", "--L", "20", "--reps", "5000", "--format", "json"},
        {"simulate", "--preset", "ghost2", "--process", "ghost", "--L", "200", "--reps", "5000"},
        {"solve", "--preset", "example3", "--Lmax", "20", "--h", "0.01", "--quantity", "second-moment", "--k", "2"},
        {"solve", "--preset", "uniform-ldf", "--Lmax", "100", "--h", "0.03125"},
        {"constants", "multi", "--preset", "example3"},
        {"compare", "--preset", "ghost2", "--L", "300", "--reps", "5000"}};
    bool ok = true;
    for (const auto& c : commands) {
        std::ostringstream o1, e1, o2, e2;
        const int r1 = cli::run(c, o1, e1);
        const int r2 = cli::run(c, o2, e2);
        const bool same = r1 == r2 && o1.str() == o2.str() && e1.str() == e2.str();
        ok = ok && same && r1 == 0;
        std::string line;
        for (const auto& a : c) line += a + " ";
        detail("%s-> exit %d, %zu bytes, %s", line.c_str(), r1, o1.str().size(), same ? "identical" : "DIFFERENT");
    }
    return {ok, "determinism"};
}

struct Criterion {
    int id;
    double limit_s;  // 0: no runtime limit
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{{1, 1.0, criterion1},   {2, 30.0, criterion2},  {3, 300.0, criterion3},
                                     {4, 600.0, criterion4}, {5, 120.0, criterion5}, {6, 180.0, criterion6},
                                     {7, 300.0, criterion7}, {8, 0.0, criterion8}};
    int only = 0;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    if (only < 0 || only > 8) {
        std::fprintf(stderr, "usage: acceptance [--criterion 1..8]\n");
        return 2;
    }
    int failures = 0;
    for (const auto& c : all) {
        if (only != 0 && c.id != only) continue;
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        const bool in_time = c.limit_s == 0.0 || secs < c.limit_s;
        if (!in_time) detail("runtime %.2fs exceeds %.0fs", secs, c.limit_s);
        const bool pass = o.pass && in_time;
        failures += !pass;
        if (c.limit_s > 0.0)
            std::printf("[%s] criterion %d: %s (%.2fs, limit %.0fs)\n", pass ? "PASS" : "FAIL", c.id, o.summary.c_str(),
                        secs, c.limit_s);
        else
            std::printf("[%s] criterion %d: %s (%.2fs)\n", pass ? "PASS" : "FAIL", c.id, o.summary.c_str(), secs);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
