#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "rsa/errors.hpp"
#include "rsa/ldf.hpp"
#include "rsa/presets.hpp"

using rsa::LengthDistribution;
using rsa::Rng;

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, int n = 20000) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * h / 3.0;
}

std::vector<LengthDistribution> continuous_family() {
    return {LengthDistribution::power_law(1.0),  LengthDistribution::power_law(2.0),
            LengthDistribution::power_law(0.5),  LengthDistribution::exponential(-1.0),
            LengthDistribution::exponential(1.0), LengthDistribution::pareto(2.0),
            LengthDistribution::pareto(1.1),      LengthDistribution::pareto(1.0),
            LengthDistribution::tabulated({{1, 1}, {2, 3}, {4, 0.5}, {9, 2}}, rsa::TailClass::Convergent)};
}

// P(l <= m) under the first-parked law on a gap of length L.
double first_parked_cdf(const LengthDistribution& d, double L, double m) {
    return ((L - m) * d.normalizing_constant(m) + d.cumulative_Z(m)) / d.cumulative_Z(L);
}

}  // namespace

TEST_CASE("discrete construction and validation") {
    auto d = LengthDistribution::discrete({{1, 0.5}, {1.3, 0.3}, {1.5, 0.2}});
    CHECK(d.mean_length() == doctest::Approx(1.19));
    CHECK(d.type_of(1.3) == 1);
    CHECK(d.type_of(1.2) == -1);
    CHECK(d.normalizing_constant(1.4) == doctest::Approx(0.8));
    CHECK(d.cumulative_Z(2.0) == doctest::Approx(0.5 * 1.0 + 0.3 * 0.7 + 0.2 * 0.5));
    CHECK_THROWS_AS(LengthDistribution::discrete({{1.1, 1.0}}), rsa::DomainError);
    CHECK_THROWS_AS(LengthDistribution::discrete({{1, 0.5}, {2, 0.4}}), rsa::DomainError);
    CHECK_THROWS_AS(LengthDistribution::discrete({{1, 0.5}, {1, 0.5}}), rsa::DomainError);
    CHECK_THROWS_AS(LengthDistribution::discrete({{1, 1.5}, {2, -0.5}}), rsa::DomainError);
    CHECK_THROWS_AS(LengthDistribution::discrete({}), rsa::DomainError);
}

TEST_CASE("continuous constructors reject bad parameters") {
    CHECK_THROWS_AS(LengthDistribution::power_law(0.0), rsa::DomainError);
    CHECK_THROWS_AS(LengthDistribution::exponential(0.0), rsa::DomainError);
    CHECK_THROWS_AS(LengthDistribution::tabulated({{1, 0}, {2, 0}}, std::nullopt), rsa::DomainError);
    CHECK_THROWS_AS(LengthDistribution::tabulated({{0.5, 1}, {2, 1}}, std::nullopt), rsa::DomainError);
}

TEST_CASE("Z and its integral agree with quadrature of the density") {
    for (const auto& d : continuous_family()) {
        INFO(d.fingerprint());
        const bool singular = d.kind() == rsa::LdfKind::PowerLaw && d.beta() < 1.0;
        for (double L : {1.5, 3.0, 8.5}) {
            if (!singular) {
                const double z = simpson([&](double l) { return d.density(l); }, 1.0, L);
                CHECK(d.normalizing_constant(L) == doctest::Approx(z).epsilon(1e-9));
            }
            const double c = simpson([&](double t) { return d.normalizing_constant(t); }, 1.0, L);
            CHECK(d.cumulative_Z(L) == doctest::Approx(c).epsilon(singular ? 1e-6 : 1e-9));
        }
        CHECK(d.normalizing_constant(0.7) == 0.0);
        CHECK(d.cumulative_Z(1.0) == 0.0);
    }
}

TEST_CASE("power-law closed forms") {
    auto d = LengthDistribution::power_law(2.0);
    CHECK(d.normalizing_constant(3.0) == doctest::Approx(2.0));
    CHECK(d.cumulative_Z(3.0) == doctest::Approx(8.0 / 6.0));
}

TEST_CASE("scaling multiplies Z and leaves the sampling laws alone") {
    for (const auto& d : continuous_family()) {
        for (double c : {0.1, 7.0}) {
            auto s = d.scaled(c);
            CHECK(s.normalizing_constant(5.0) == doctest::Approx(c * d.normalizing_constant(5.0)).epsilon(1e-14));
            Rng a(3), b(3);
            for (int i = 0; i < 50; ++i) CHECK(s.sample_length_truncated(5.0, a) == d.sample_length_truncated(5.0, b));
        }
    }
    CHECK_THROWS_AS(LengthDistribution::power_law(1.0).scaled(0.0), rsa::DomainError);
}

TEST_CASE("truncated and first-parked samplers follow their laws") {
    const int n = 200000;
    for (const auto& d : continuous_family()) {
        INFO(d.fingerprint());
        const double L = 6.0;
        Rng rng(11);
        for (double m : {1.5, 3.0, 5.0}) {
            int below_t = 0, below_p = 0;
            bool in_range = true;
            for (int i = 0; i < n; ++i) {
                const double a = d.sample_length_truncated(L, rng);
                const double b = d.sample_first_parked_length(L, rng);
                in_range = in_range && a >= 1.0 && a <= L && b >= 1.0 && b <= L;
                below_t += a <= m;
                below_p += b <= m;
            }
            CHECK(in_range);
            const double pt = d.normalizing_constant(m) / d.normalizing_constant(L);
            const double pp = first_parked_cdf(d, L, m);
            CHECK(std::abs(below_t / double(n) - pt) < 5 * std::sqrt(pt * (1 - pt) / n) + 1e-12);
            CHECK(std::abs(below_p / double(n) - pp) < 5 * std::sqrt(pp * (1 - pp) / n) + 1e-12);
        }
    }
}

TEST_CASE("discrete type samplers") {
    auto d = LengthDistribution::discrete({{1, 0.5}, {1.3, 0.3}, {1.5, 0.2}});
    Rng rng(5);
    const int n = 200000;
    std::vector<int> c(3, 0), t(3, 0);
    for (int i = 0; i < n; ++i) {
        ++c[d.sample_first_parked_type(2.0, rng)];
        ++t[d.sample_truncated_type(1.4, rng)];
    }
    const double tot = 0.5 * 1.0 + 0.3 * 0.7 + 0.2 * 0.5;
    const double p[3] = {0.5 / tot, 0.21 / tot, 0.1 / tot};
    for (int i = 0; i < 3; ++i) CHECK(std::abs(c[i] / double(n) - p[i]) < 5 * std::sqrt(p[i] * (1 - p[i]) / n));
    CHECK(t[2] == 0);
    CHECK(std::abs(t[0] / double(n) - 0.625) < 0.005);
}

TEST_CASE("classification") {
    using rsa::TailClass;
    CHECK(rsa::classify(LengthDistribution::power_law(1.0)) == TailClass::Divergent);
    CHECK(rsa::classify(LengthDistribution::exponential(-1.0)) == TailClass::Convergent);
    CHECK(rsa::classify(LengthDistribution::exponential(1.0)) == TailClass::Divergent);
    CHECK(rsa::classify(LengthDistribution::pareto(2.0)) == TailClass::Convergent);
    CHECK(rsa::classify(LengthDistribution::pareto(1.0)) == TailClass::Divergent);
    CHECK(rsa::classify(LengthDistribution::discrete({{1, 1}})) == TailClass::Convergent);
    CHECK_THROWS_AS(rsa::classify(LengthDistribution::tabulated({{1, 1}, {2, 1}}, std::nullopt)),
                    rsa::ClassificationUnavailable);
}

TEST_CASE("divergence margin for power laws") {
    // Z = t^beta/beta on (L-1): margin -> 2(beta+1)/(beta+2) - 1 for large L.
    auto d = LengthDistribution::power_law(2.0);
    const double L = 1e4;
    const double x = L - 1;
    const double num = std::pow(x, 4) / 8.0 + std::pow(x, 3) / 6.0;
    const double expect = 2.0 * num / (L * std::pow(x, 3) / 6.0) - 1.0;
    CHECK(rsa::divergence_condition_margin(d, L) == doctest::Approx(expect).epsilon(1e-8));
    CHECK(rsa::divergence_condition_margin(d, L) > 0.0);
    CHECK_THROWS_AS(rsa::divergence_condition_margin(LengthDistribution::exponential(-1.0), 5.0), rsa::DomainError);
}

TEST_CASE("tables are defined only on their range") {
    auto d = LengthDistribution::tabulated({{1, 1}, {3, 1}}, rsa::TailClass::Divergent);
    CHECK(d.normalizing_constant(3.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(d.normalizing_constant(3.5), rsa::DomainError);
    CHECK(d.support_end() == 3.0);
}

TEST_CASE("json round trip and fingerprints") {
    for (const auto& name : rsa::distribution_preset_names()) {
        auto d = *rsa::distribution_preset(name);
        auto e = LengthDistribution::from_json(d.to_json());
        CHECK(e.fingerprint() == d.fingerprint());
        CHECK(e.normalizing_constant(4.2) == d.normalizing_constant(4.2));
    }
    CHECK(LengthDistribution::power_law(1.0).fingerprint() != LengthDistribution::power_law(2.0).fingerprint());
    CHECK_THROWS_AS(LengthDistribution::from_json(nlohmann::json{{"kind", "weird"}}), rsa::ConfigError);
    CHECK_THROWS_AS(LengthDistribution::from_json(nlohmann::json{{"kind", "power"}, {"beta", -1}}), rsa::ConfigError);
    auto s = LengthDistribution::from_json(nlohmann::json{{"kind", "power"}, {"beta", 1}, {"scale", 3}});
    CHECK(s.scale() == 3.0);
}
