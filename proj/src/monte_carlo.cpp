#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rsa/errors.hpp"
#include "rsa/sim.hpp"

namespace rsa {

namespace {

double pairwise_sum(std::span<const double> x) {
    if (x.size() <= 8) {
        double s = 0.0;
        for (double v : x) s += v;
        return s;
    }
    const std::size_t h = x.size() / 2;
    return pairwise_sum(x.first(h)) + pairwise_sum(x.subspan(h));
}

struct Moments {
    double n = 0.0;
    double mean = 0.0;
    double m2 = 0.0;
};

Moments batch_moments(const std::vector<double>& v) {
    Moments m;
    m.n = static_cast<double>(v.size());
    m.mean = pairwise_sum(v) / m.n;
    std::vector<double> sq(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) sq[i] = (v[i] - m.mean) * (v[i] - m.mean);
    m.m2 = pairwise_sum(sq);
    return m;
}

Moments combine(const Moments& a, const Moments& b) {
    if (a.n == 0.0) return b;
    Moments r;
    r.n = a.n + b.n;
    const double delta = b.mean - a.mean;
    r.mean = a.mean + delta * (b.n / r.n);
    r.m2 = a.m2 + b.m2 + delta * delta * (a.n * b.n / r.n);
    return r;
}

struct ReplicateError {
    std::uint64_t index;
    std::string message;
    bool numeric;
};

struct Outcome {
    std::vector<long> counts;
    double empty = 0.0;
    bool capped = false;
};

Outcome simulate_once(const McSpec& spec, std::uint64_t seed, std::uint64_t index) {
    Rng rng = Rng::for_stream(seed, index);
    Outcome o;
    if (spec.process == Process::Ghost) {
        const GhostResult g = simulate_ghost(spec.dist, spec.L, rng);
        o.counts = g.counts;
        o.empty = spec.L - g.covered;
    } else {
        const SaturationState s = spec.process == Process::Rsa
                                      ? simulate_exact(spec.dist, spec.L, rng)
                                      : simulate_rejection(spec.dist, spec.L, rng, spec.attempt_cap);
        o.counts = s.counts;
        o.empty = s.empty_space;
        o.capped = s.capped;
    }
    return o;
}

double observe(const Outcome& o, double L, const Observable& obs) {
    long total = 0;
    for (long c : o.counts) total += c;
    switch (obs.estimand) {
        case Estimand::EmptySpace: return o.empty;
        case Estimand::Count: return static_cast<double>(total);
        case Estimand::CountType: return static_cast<double>(o.counts.at(obs.type));
        case Estimand::Density:
            if (!(L > 0.0)) throw DomainError("density estimand needs L > 0");
            return static_cast<double>(total) / L;
        case Estimand::CountTypeSquared: {
            const double c = static_cast<double>(o.counts.at(obs.type));
            return c * c;
        }
        case Estimand::Covered: return L - o.empty;
    }
    return 0.0;
}

template <bool Parallel>
std::vector<MonteCarloEstimate> run(const McSpec& spec, const std::vector<Observable>& obs, std::uint64_t replicates,
                                    std::uint64_t seed, std::size_t batch_size) {
    if (replicates < 1) throw DomainError("monte_carlo: need at least one replicate");
    if (batch_size < 1) throw DomainError("monte_carlo: batch size must be positive");
    if (obs.empty()) throw DomainError("monte_carlo: no estimands requested");
    for (const auto& o : obs) label(spec.dist, o);
    if (spec.process == Process::Ghost && spec.L > 0.0 && !spec.dist.is_discrete())
        throw DomainError("ghost process needs a discrete ldf");
    const std::size_t m = obs.size();
    std::vector<Moments> total(m);
    std::uint64_t capped = 0;
    std::vector<std::vector<double>> values(m);
    std::vector<unsigned char> flags;
    for (std::uint64_t start = 0; start < replicates; start += batch_size) {
        const std::uint64_t n = std::min<std::uint64_t>(batch_size, replicates - start);
        for (auto& v : values) v.assign(n, 0.0);
        flags.assign(n, 0);
        std::optional<ReplicateError> err;
        auto body = [&](std::int64_t i) {
            const std::uint64_t idx = start + static_cast<std::uint64_t>(i);
            try {
                const Outcome o = simulate_once(spec, seed, idx);
                for (std::size_t e = 0; e < m; ++e) values[e][i] = observe(o, spec.L, obs[e]);
                flags[i] = o.capped ? 1 : 0;
            } catch (const std::exception& ex) {
                const bool numeric = dynamic_cast<const DomainError*>(&ex) == nullptr;
#pragma omp critical(rsa_mc_error)
                {
                    if (!err || idx < err->index) err = ReplicateError{idx, ex.what(), numeric};
                }
            }
        };
        const auto count = static_cast<std::int64_t>(n);
        if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
            for (std::int64_t i = 0; i < count; ++i) body(i);
        } else {
            for (std::int64_t i = 0; i < count; ++i) body(i);
        }
        if (err) {
            const std::string msg = "replicate " + std::to_string(err->index) + ": " + err->message;
            if (err->numeric) throw NumericError(msg);
            throw DomainError(msg);
        }
        for (unsigned char f : flags) capped += f;
        for (std::size_t e = 0; e < m; ++e) total[e] = combine(total[e], batch_moments(values[e]));
    }
    std::vector<MonteCarloEstimate> out;
    for (std::size_t e = 0; e < m; ++e) {
        MonteCarloEstimate est;
        est.mean = total[e].mean;
        est.replicates = replicates;
        est.seed = seed;
        est.estimand = label(spec.dist, obs[e]);
        est.capped = capped;
        est.std_error = replicates > 1 ? std::sqrt(total[e].m2 / (total[e].n - 1.0) / total[e].n)
                                       : std::numeric_limits<double>::quiet_NaN();
        out.push_back(est);
    }
    return out;
}

}  // namespace

std::string to_string(Process p) {
    switch (p) {
        case Process::Rsa: return "rsa";
        case Process::Rejection: return "rejection";
        case Process::Ghost: return "ghost";
    }
    return "unknown";
}

std::string label(const LengthDistribution& d, const Observable& obs) {
    auto typed = [&](const char* base) {
        if (!d.is_discrete() || obs.type >= d.lengths().size())
            throw DomainError("estimand needs a valid discrete type index");
        return std::string(base) + "_" + std::to_string(obs.type + 1);
    };
    switch (obs.estimand) {
        case Estimand::EmptySpace: return "S_L";
        case Estimand::Count: return "N_L";
        case Estimand::CountType: return typed("N");
        case Estimand::Density: return "N_L/L";
        case Estimand::CountTypeSquared: return typed("N^2");
        case Estimand::Covered: return "J_L";
    }
    return "unknown";
}

MonteCarloEstimate monte_carlo(const McSpec& spec, std::uint64_t replicates, std::uint64_t seed,
                               std::size_t batch_size) {
    return run<true>(spec, {spec.observable}, replicates, seed, batch_size).front();
}

MonteCarloEstimate monte_carlo_serial(const McSpec& spec, std::uint64_t replicates, std::uint64_t seed,
                                      std::size_t batch_size) {
    return run<false>(spec, {spec.observable}, replicates, seed, batch_size).front();
}

std::vector<MonteCarloEstimate> monte_carlo_many(const McSpec& spec, const std::vector<Observable>& obs,
                                                 std::uint64_t replicates, std::uint64_t seed,
                                                 std::size_t batch_size) {
    return run<true>(spec, obs, replicates, seed, batch_size);
}

}  // namespace rsa
