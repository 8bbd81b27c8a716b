#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rsa/ldf.hpp"

namespace rsa {

enum class Backend { Parallel, Reference };

struct GridSolution {
    double h = 0.0;
    std::vector<double> values;  // values[j] at L = j h
    std::string quantity;        // "E[S_L]", "E[N_k,L]", "E[N^2_k,L]"
    std::string fingerprint;

    std::size_t size() const { return values.size(); }
    double L(std::size_t j) const;
    double L_max() const { return L(values.size() - 1); }
    std::size_t node(double L) const;  // throws DomainError unless L is a grid node
    double at(double L) const { return values[node(L)]; }
};

struct MomentSolution {
    GridSolution first;
    GridSolution second;
    double variance(std::size_t j) const { return second.values[j] - first.values[j] * first.values[j]; }
};

// Number of grid steps per unit length for step h. Continuous ldfs need
// h = 2^-m (m >= 1); discrete ldfs need every atom length on the grid.
std::size_t steps_per_unit(const LengthDistribution& d, double h);

GridSolution solve_empty_space(const LengthDistribution& d, double L_max, double h,
                               Backend backend = Backend::Parallel);

// `type` is the 0-based atom index.
GridSolution solve_multidisperse_counts(const LengthDistribution& d, std::size_t type, double L_max, double h);
GridSolution solve_renyi_counts(double L_max, double h);
MomentSolution solve_second_moment(const LengthDistribution& d, std::size_t type, double L_max, double h,
                                   Backend backend = Backend::Parallel);

// One-sided values of E[N_k,L] at each node (they differ only at L = 1 for the
// smallest type).
struct CountGrid {
    double h = 0.0;
    std::vector<double> left;
    std::vector<double> right;
};
CountGrid count_grid(const LengthDistribution& d, std::size_t type, double L_max, double h);

struct TailFit {
    double value = 0.0;  // slope (linear) or exponent (log-log)
    double drift = 0.0;  // slope on upper half-window minus slope on lower half-window
    std::size_t nodes = 0;
};

TailFit estimate_linear_density(const GridSolution& g, double window = 0.25);
TailFit estimate_power_exponent(const GridSolution& g, double window = 0.25);

}  // namespace rsa
