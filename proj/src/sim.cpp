#include "rsa/sim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "rsa/errors.hpp"
#include "rsa/interval_set.hpp"

namespace rsa {

namespace {

SaturationState empty_state(const LengthDistribution& d, double L) {
    SaturationState s;
    s.L = L;
    s.empty_space = L;
    s.counts.assign(d.is_discrete() ? d.lengths().size() : 1, 0);
    return s;
}

void park(SaturationState& s, const LengthDistribution& d, double left, double length, int type) {
    s.segments.push_back({left, length, type});
    ++s.counts[d.is_discrete() ? static_cast<std::size_t>(type) : 0];
}

void finish(SaturationState& s) {
    std::sort(s.segments.begin(), s.segments.end(),
              [](const Segment& a, const Segment& b) { return a.left < b.left; });
    double covered = 0.0;
    for (const auto& seg : s.segments) covered += seg.length;
    s.empty_space = s.L - covered;
}

void check_support(const LengthDistribution& d, double L) {
    if (!(L >= 0.0) || !std::isfinite(L)) throw DomainError("interval length must be finite and nonnegative");
    if (L > d.support_end()) throw DomainError("interval length exceeds the tabulated ldf range");
}

}  // namespace

long SaturationState::total_count() const {
    long n = 0;
    for (long c : counts) n += c;
    return n;
}

void check_state(const SaturationState& s) {
    auto fail = [](const std::string& what) { throw std::logic_error("saturation state: " + what); };
    double covered = 0.0;
    double prev_right = 0.0;
    std::vector<long> counts(s.counts.size(), 0);
    for (const auto& seg : s.segments) {
        if (seg.left < prev_right - 1e-12) fail("overlapping segments");
        if (seg.left < -1e-12 || seg.left + seg.length > s.L + 1e-9) fail("segment outside [0, L]");
        if (seg.length < 1.0 - 1e-12) fail("segment shorter than 1");
        if (!s.capped && seg.left - prev_right > 1.0) fail("gap longer than 1 left unfilled");
        prev_right = seg.left + seg.length;
        covered += seg.length;
        const std::size_t slot = seg.type < 0 ? 0 : static_cast<std::size_t>(seg.type);
        if (slot >= counts.size()) fail("type index out of range");
        ++counts[slot];
    }
    if (!s.capped && s.L - prev_right > 1.0) fail("trailing gap longer than 1");
    if (std::abs(s.L - covered - s.empty_space) > 1e-9) fail("empty space inconsistent");
    if (counts != s.counts) fail("counts inconsistent with segments");
}

SaturationState simulate_exact(const LengthDistribution& d, double L, Rng& rng) {
    check_support(d, L);
    SaturationState s = empty_state(d, L);
    std::vector<std::pair<double, double>> work;  // (offset, gap length)
    work.emplace_back(0.0, L);
    while (!work.empty()) {
        const auto [off, g] = work.back();
        work.pop_back();
        if (!(g > 1.0)) continue;
        int type = -1;
        double len;
        if (d.is_discrete()) {
            type = static_cast<int>(d.sample_first_parked_type(g, rng));
            len = d.lengths()[static_cast<std::size_t>(type)];
        } else {
            len = d.sample_first_parked_length(g, rng);
        }
        const double left = off + rng.uniform() * (g - len);
        park(s, d, left, len, type);
        work.emplace_back(off, left - off);
        work.emplace_back(left + len, off + g - (left + len));
    }
    finish(s);
    return s;
}

SaturationState simulate_rejection(const LengthDistribution& d, double L, Rng& rng, std::uint64_t attempt_cap) {
    check_support(d, L);
    if (attempt_cap < 1) throw DomainError("attempt cap must be at least 1");
    SaturationState s = empty_state(d, L);
    IntervalSet free(0.0, L, 1.0);
    const double zL = d.normalizing_constant(L);
    constexpr int literal_run = 32;
    int rejections = 0;

    while (!free.empty()) {
        if (s.attempts >= attempt_cap) {
            s.capped = true;
            break;
        }
        if (rejections < literal_run) {
            const double b = rng.uniform() * L;
            int type = -1;
            double len;
            if (d.is_discrete()) {
                type = static_cast<int>(d.sample_truncated_type(L, rng));
                len = d.lengths()[static_cast<std::size_t>(type)];
            } else {
                len = d.sample_length_truncated(L, rng);
            }
            ++s.attempts;
            if (free.containing(b, b + len)) {
                park(s, d, b, len, type);
                free.remove(b, b + len);
                rejections = 0;
            } else {
                ++rejections;
            }
            continue;
        }

        // Skip the run of rejected attempts in one draw: each attempt succeeds
        // independently with probability sum_j cumZ(g_j) / (L Z(L)).
        const auto comps = free.components();
        std::vector<double> w(comps.size());
        double wsum = 0.0;
        for (std::size_t j = 0; j < comps.size(); ++j) wsum += (w[j] = d.cumulative_Z(comps[j].second - comps[j].first));
        const double p = std::min(1.0, wsum / (L * zL));
        double skipped = 0.0;
        if (p < 1.0) skipped = std::floor(std::log(rng.uniform_pos()) / std::log1p(-p));
        const double room = static_cast<double>(attempt_cap - s.attempts);
        if (skipped + 1.0 > room) {
            s.attempts = attempt_cap;
            s.capped = true;
            break;
        }
        s.attempts += static_cast<std::uint64_t>(skipped) + 1;
        double target = rng.uniform() * wsum;
        std::size_t j = 0;
        while (j + 1 < comps.size() && target >= w[j]) target -= w[j++];
        const auto [a, bnd] = comps[j];
        const double g = bnd - a;
        int type = -1;
        double len;
        if (d.is_discrete()) {
            type = static_cast<int>(d.sample_first_parked_type(g, rng));
            len = d.lengths()[static_cast<std::size_t>(type)];
        } else {
            len = d.sample_first_parked_length(g, rng);
        }
        const double b = a + rng.uniform() * (g - len);
        park(s, d, b, len, type);
        free.remove(b, b + len);
        rejections = 0;
    }
    finish(s);
    return s;
}

GhostResult simulate_ghost(const LengthDistribution& d, double L, Rng& rng) {
    if (!d.is_discrete()) throw DomainError("ghost process needs a discrete ldf");
    if (!(L >= 0.0) || !std::isfinite(L)) throw DomainError("interval length must be finite and nonnegative");
    const auto& len = d.lengths();
    const auto& q = d.weights();
    const double ln = len.back();
    GhostResult r;
    r.counts.assign(len.size(), 0);
    IntervalSet free(0.0, L, len.front());
    const double window = L + ln;
    while (!free.empty()) {
        const double c = -0.5 * ln + rng.uniform() * window;
        double u = rng.uniform();
        std::size_t k = 0;
        while (k + 1 < q.size() && u >= q[k]) u -= q[k++];
        const double a = c - 0.5 * len[k];
        const double b = c + 0.5 * len[k];
        if (free.containing(a, b)) {
            ++r.counts[k];
            r.covered += len[k];
        }
        free.remove(a, b);
    }
    return r;
}

}  // namespace rsa
