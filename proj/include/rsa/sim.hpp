#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "rsa/ldf.hpp"
#include "rsa/random.hpp"

namespace rsa {

struct Segment {
    double left;
    double length;
    int type;  // atom index for discrete ldfs, -1 otherwise
};

struct SaturationState {
    std::vector<Segment> segments;  // sorted by left endpoint
    double L = 0.0;
    double empty_space = 0.0;
    std::vector<long> counts;  // per atom for discrete ldfs, a single total otherwise
    std::uint64_t attempts = 0;
    bool capped = false;  // attempt cap hit before saturation

    long total_count() const;
};

// Throws std::logic_error describing the first violated invariant.
void check_state(const SaturationState& s);

SaturationState simulate_exact(const LengthDistribution& d, double L, Rng& rng);

inline constexpr std::uint64_t default_attempt_cap = std::uint64_t{1} << 62;

// Definition-level placement loop. After a run of rejections it switches to an
// exact geometric skip over the rejected attempts.
SaturationState simulate_rejection(const LengthDistribution& d, double L, Rng& rng,
                                   std::uint64_t attempt_cap = default_attempt_cap);

struct GhostResult {
    std::vector<long> counts;
    double covered = 0.0;
};

GhostResult simulate_ghost(const LengthDistribution& d, double L, Rng& rng);

enum class Process { Rsa, Rejection, Ghost };

enum class Estimand { EmptySpace, Count, CountType, Density, CountTypeSquared, Covered };

struct Observable {
    Estimand estimand = Estimand::EmptySpace;
    std::size_t type = 0;  // atom index for the per-type estimands
};

struct McSpec {
    LengthDistribution dist;
    Process process = Process::Rsa;
    double L = 0.0;
    Observable observable;
    std::uint64_t attempt_cap = default_attempt_cap;
};

struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;  // NaN when replicates == 1
    std::uint64_t replicates = 0;
    std::uint64_t seed = 0;
    std::string estimand;
    std::uint64_t capped = 0;
};

inline constexpr std::size_t default_batch_size = 4096;

std::string to_string(Process p);
std::string label(const LengthDistribution& d, const Observable& obs);

// Replicates run in parallel batches; output is bit-identical to monte_carlo_serial.
MonteCarloEstimate monte_carlo(const McSpec& spec, std::uint64_t replicates, std::uint64_t seed,
                               std::size_t batch_size = default_batch_size);
MonteCarloEstimate monte_carlo_serial(const McSpec& spec, std::uint64_t replicates, std::uint64_t seed,
                                      std::size_t batch_size = default_batch_size);

// Several estimands from the same replicates.
std::vector<MonteCarloEstimate> monte_carlo_many(const McSpec& spec, const std::vector<Observable>& obs,
                                                 std::uint64_t replicates, std::uint64_t seed,
                                                 std::size_t batch_size = default_batch_size);

}  // namespace rsa
