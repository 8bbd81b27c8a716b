#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rsa/constants.hpp"
#include "rsa/errors.hpp"
#include "rsa/random.hpp"
#include "rsa/solver.hpp"
#include "rsa/specfun.hpp"

using namespace rsa;

namespace {

LengthDistribution example3() { return LengthDistribution::discrete({{1, 0.5}, {1.3, 0.3}, {1.5, 0.2}}); }

constexpr double renyi_reference = 0.7475979202534114;

}  // namespace

TEST_CASE("Renyi constant") {
    auto r = renyi_constant();
    CHECK(std::abs(r.value - renyi_reference) < 1e-8);
    CHECK(r.abs_err < 1e-8);
    CHECK(std::abs(renyi_constant(1e-12).value - renyi_reference) < 1e-12);
    CHECK_THROWS_AS(renyi_constant(1e-15), DomainError);
}

TEST_CASE("multidisperse constant collapses to Renyi for one length") {
    auto a = multidisperse_alpha(LengthDistribution::discrete({{1, 1}}), 0);
    CHECK(std::abs(a.value - renyi_reference) < 1e-8);
}

TEST_CASE("decimal grid step") {
    CHECK(decimal_grid_step(example3()) == doctest::Approx(1e-4));
    CHECK(decimal_grid_step(LengthDistribution::discrete({{1, 0.5}, {4, 0.5}})) == doctest::Approx(1e-4));
    CHECK_THROWS_AS(decimal_grid_step(LengthDistribution::discrete({{1, 0.5}, {M_PI, 0.5}})), DomainError);
}

TEST_CASE("workspace pieces") {
    MultiConstantWorkspace ws(example3(), 0, 1e-3);
    CHECK(ws.rho() == doctest::Approx(0.5 * 0.5 + 0.3 * 0.2));
    CHECK(ws.g_k(0.0) == doctest::Approx(0.5).epsilon(1e-12));
    // P_{i;k} against direct quadrature of the solver grid.
    auto grid = solve_multidisperse_counts(example3(), 0, 1.5, 1e-3);
    for (double s : {0.0, 0.7, 3.0}) {
        for (std::size_t i = 0; i < 3; ++i) {
            const double lo = ws.rho_i(i);
            const std::size_t a = grid.node(lo), b = grid.node(1.5);
            double q = 0.0;
            for (std::size_t j = a; j < b; ++j)
                q += 0.5e-3 * (grid.values[j] * std::exp(-s * grid.L(j)) + grid.values[j + 1] * std::exp(-s * grid.L(j + 1)));
            CHECK(ws.p_ik(i, s) == doctest::Approx(q).epsilon(1e-3));
        }
    }
    CHECK(ws.tail_bound(100.0) < ws.tail_bound(10.0));
}

TEST_CASE("example3 constants") {
    double coverage = 0.0;
    const auto d = example3();
    std::vector<double> alpha;
    for (std::size_t k = 0; k < 3; ++k) {
        auto a = multidisperse_alpha(d, k);
        CHECK(a.value > 0.0);
        CHECK(a.abs_err < 1e-5);
        alpha.push_back(a.value);
        coverage += a.value * d.lengths()[k];
    }
    CHECK(coverage < 1.0);
    CHECK(coverage > renyi_reference * 0.9);
    SUBCASE("constants match the slope of the solver counts") {
        for (std::size_t k = 0; k < 3; ++k) {
            auto g = solve_multidisperse_counts(d, k, 600.0, 1e-2);
            auto f = estimate_linear_density(g);
            CHECK(std::abs(f.value - alpha[k]) < 2e-3);
        }
    }
}

TEST_CASE("ghost formulas") {
    auto d = LengthDistribution::discrete({{1, 2.0 / 3}, {4, 1.0 / 3}});
    CHECK(ghost_expected_count(d, 0, 1000.0) == doctest::Approx((2.0 / 3) * 999.0 / 3.0));
    CHECK(ghost_expected_count(d, 1, 1000.0) == doctest::Approx((1.0 / 3) * 996.0 / 6.0));
    CHECK(ghost_density_limit(d) == doctest::Approx((2.0 / 3) / 3.0 + (4.0 / 3) / 6.0));
    CHECK_THROWS_AS(ghost_expected_count(d, 1, 3.0), DomainError);
    CHECK(ghost_density_limit(LengthDistribution::discrete({{1, 1}})) == doctest::Approx(0.5));
}

TEST_CASE("ghost density stays inside its bounds") {
    Rng rng(2024);
    for (int c = 0; c < 50; ++c) {
        const int n = 1 + static_cast<int>(rng.uniform() * 5);
        std::vector<Atom> atoms{{1.0, 0.0}};
        double len = 1.0;
        for (int i = 1; i < n; ++i) {
            len += 0.1 * (1 + static_cast<int>(rng.uniform() * 40));
            atoms.push_back({len, 0.0});
        }
        double total = 0.0;
        for (auto& a : atoms) total += (a.weight = 0.05 + rng.uniform());
        for (auto& a : atoms) a.weight /= total;
        auto d = LengthDistribution::discrete(atoms);
        auto [lo, hi] = ghost_density_bounds(d);
        const double j = ghost_density_limit(d);
        INFO(d.fingerprint());
        CHECK(j >= lo - 1e-12);
        CHECK(j <= hi + 1e-12);
    }
}

TEST_CASE("xi exponent") {
    CHECK(xi_exponent(1.0) == doctest::Approx((std::sqrt(17.0) - 3.0) / 2.0).epsilon(1e-12));
    for (int b = 1; b <= 10; ++b) CHECK(xi_exponent(b) == doctest::Approx(xi_exponent_integer(b)).epsilon(1e-11));
    for (double b : {0.3, 1.0, 2.5, 7.0}) {
        const double x = xi_exponent(b);
        CHECK(x > 0.0);
        CHECK(x < 1.0);
        CHECK(std::exp(specfun::log_beta(b + 1.0, x + 1.0)) == doctest::Approx(1.0 / (2.0 * (b + 1.0))).epsilon(1e-11));
    }
    CHECK(xi_exponent(2.0) < xi_exponent(1.0));
    CHECK_THROWS_AS(xi_exponent(0.0), DomainError);
    CHECK_THROWS_AS(xi_exponent_integer(0), DomainError);
}

TEST_CASE("alpha_nu estimates") {
    auto renyi = alpha_nu_estimate(LengthDistribution::discrete({{1, 1}}), 400.0, 1e-2);
    CHECK(std::abs(renyi.value - (1.0 - renyi_reference)) < 2e-4);
    CHECK(renyi.hypothesis == "holds");
    auto e = alpha_nu_estimate(LengthDistribution::exponential(-1.0), 200.0, 1.0 / 32);
    CHECK(std::abs(e.drift) < 1e-3);
    CHECK(e.value > 0.0);
    auto t = alpha_nu_estimate(LengthDistribution::tabulated({{1, 1}, {300, 0}}, TailClass::Convergent), 200.0, 1.0 / 16);
    CHECK(t.hypothesis == "assumed");
    CHECK_THROWS_AS(alpha_nu_estimate(LengthDistribution::power_law(1.0), 100.0, 1.0 / 16), DomainError);
}
