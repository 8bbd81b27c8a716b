#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rsa/ldf.hpp"

namespace rsa {

struct ConstantResult {
    double value = 0.0;
    double abs_err = 0.0;
    std::string method;
};

ConstantResult renyi_constant(double tol = 1e-8);

// Small-L data for the multidisperse constant of one type k.
class MultiConstantWorkspace {
public:
    MultiConstantWorkspace(const LengthDistribution& d, std::size_t type, double h);

    std::size_t type() const { return type_; }
    double rho() const { return rho_; }
    double rho_i(std::size_t i) const { return lengths_.back() - lengths_[i]; }
    double boundary_value() const { return e_n_; }  // E[N_k,l_n]
    double grid_step() const { return h_; }
    const std::vector<double>& lengths() const { return lengths_; }
    const std::vector<double>& probs() const { return probs_; }

    // int_{rho_i}^{l_n} E[N_k,L] e^{-s (L - rho_i)} dL for every i.
    std::vector<double> shifted_p(double s) const;
    // P_{i;k}(s) = int_{rho_i}^{l_n} E[N_k,L] e^{-s L} dL
    double p_ik(std::size_t i, double s) const;
    double g_k(double s) const;
    // Upper bound on int_T^inf G_k(t) exp(-2 sum q_i Ein(l_i t)) dt.
    double tail_bound(double T) const;

private:
    std::vector<double> lengths_, probs_;
    std::size_t type_;
    double h_;
    double rho_ = 0.0;
    double e_n_ = 0.0;
    double e_max_ = 0.0;
    std::vector<double> left_, right_;
    std::vector<std::size_t> rho_node_;
};

// Step h <= target such that every atom length is a grid multiple.
double decimal_grid_step(const LengthDistribution& d, double target = 1e-4);

ConstantResult multidisperse_alpha(const LengthDistribution& d, std::size_t type, double tol = 1e-8);

double ghost_expected_count(const LengthDistribution& d, std::size_t type, double L);
double ghost_density_limit(const LengthDistribution& d);
std::pair<double, double> ghost_density_bounds(const LengthDistribution& d);

double xi_exponent(double beta, double tol = 1e-12);
double xi_exponent_integer(int beta, double tol = 1e-12);

struct AlphaNuEstimate {
    double value = 0.0;
    double drift = 0.0;
    std::string hypothesis;  // "holds" or "assumed"
};

AlphaNuEstimate alpha_nu_estimate(const LengthDistribution& d, double L_max, double h, double window = 0.25);

}  // namespace rsa
