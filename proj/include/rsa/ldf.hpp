#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rsa/random.hpp"

namespace rsa {

enum class LdfKind { Discrete, PowerLaw, Exponential, Pareto, Tabulated };
enum class TailClass { Convergent, Divergent };

struct Atom {
    double length;
    double weight;
};

struct TablePoint {
    double length;
    double value;
};

// Length distribution function nu on [1, inf). Immutable once built.
//   Discrete:    atoms (l_i, q_i), l_1 = 1, weights normalized to sum 1
//   PowerLaw:    nu(l) = (l - 1)^(beta - 1)
//   Exponential: nu(l) = exp(rate * l)
//   Pareto:      nu(l) = l^(-exponent)
//   Tabulated:   piecewise linear through the table, defined on [1, last abscissa]
// Every kind carries a positive scale factor c (nu -> c * nu).
class LengthDistribution {
public:
    static LengthDistribution discrete(std::vector<Atom> atoms);
    static LengthDistribution power_law(double beta);
    static LengthDistribution exponential(double rate);
    static LengthDistribution pareto(double exponent);
    static LengthDistribution tabulated(std::vector<TablePoint> points, std::optional<TailClass> tail);

    static LengthDistribution from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
    std::string fingerprint() const;

    LengthDistribution scaled(double c) const;

    LdfKind kind() const { return kind_; }
    bool is_discrete() const { return kind_ == LdfKind::Discrete; }
    double scale() const { return scale_; }
    double beta() const { return param_; }
    double rate() const { return param_; }
    double exponent() const { return param_; }
    const std::vector<double>& lengths() const { return lengths_; }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<TablePoint>& table() const { return table_; }
    std::optional<TailClass> tail() const { return tail_; }

    // Largest L for which the distribution is defined (infinity except for tables).
    double support_end() const;

    // nu(l); for Discrete the atom weight at an atom, else 0.
    double density(double l) const;
    double normalizing_constant(double L) const;
    // int_0^L Z(t) dt
    double cumulative_Z(double L) const;
    double mean_length() const;

    double sample_length_truncated(double L, Rng& rng) const;
    double sample_first_parked_length(double L, Rng& rng) const;
    // Discrete only: atom index with probability proportional to q_i (L - l_i)^+.
    std::size_t sample_first_parked_type(double L, Rng& rng) const;
    std::size_t sample_truncated_type(double L, Rng& rng) const;
    // Index of the atom with the given length (Discrete only); -1 when absent.
    int type_of(double length) const;

private:
    LengthDistribution() = default;
    double table_Z(double L) const;
    double table_cumZ(double L) const;
    double sample_table(double L, Rng& rng) const;

    LdfKind kind_ = LdfKind::Discrete;
    double scale_ = 1.0;
    double param_ = 0.0;
    std::vector<double> lengths_;
    std::vector<double> weights_;
    std::vector<TablePoint> table_;
    std::vector<double> table_cum_;  // Z at each table abscissa (unscaled)
    std::optional<TailClass> tail_;
};

TailClass classify(const LengthDistribution& d);

// 2 (int_0^L t Z dt) / (L int_0^L Z dt) - 1 for divergent ldfs.
double divergence_condition_margin(const LengthDistribution& d, double L);

std::string to_string(LdfKind k);

}  // namespace rsa
