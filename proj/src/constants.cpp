#include "rsa/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rsa/errors.hpp"
#include "rsa/solver.hpp"
#include "rsa/specfun.hpp"

namespace rsa {

namespace {

// Weights for int_0^h f(u) e^{-s u} du = h (f(0) A(x) + f(h) B(x)), x = s h, f linear.
void exp_panel_weights(double x, double& A, double& B) {
    if (x < 1e-2) {
        double term = 1.0, a = 0.0, b = 0.0, fact = 1.0;
        for (int k = 0; k < 10; ++k) {
            if (k > 0) {
                term *= -x;
                fact *= k;
            }
            a += term / (fact * (k + 1) * (k + 2));
            b += term / (fact * (k + 2));
        }
        A = a;
        B = b;
        return;
    }
    const double e = std::exp(-x);
    A = (x + std::expm1(-x)) / (x * x);
    B = (1.0 - (1.0 + x) * e) / (x * x);
}

double log_ein_decay(const std::vector<double>& l, const std::vector<double>& q, double t) {
    double s = 0.0;
    for (std::size_t i = 0; i < l.size(); ++i) s += q[i] * specfun::ein(l[i] * t);
    return -2.0 * s;
}

}  // namespace

ConstantResult renyi_constant(double tol) {
    if (!(tol >= 1e-12)) throw DomainError("renyi_constant: tol must be at least 1e-12");
    const double c = std::exp(-2.0 * specfun::euler_gamma);
    auto f = [](double t) { return std::exp(-2.0 * specfun::ein(t)); };
    auto tail = [c](double T) { return c / T; };
    const auto r = specfun::integrate_semi_infinite(f, tol, tail);
    return {r.value, r.error_estimate, "adaptive Simpson on [0,T] with certified algebraic tail"};
}

double decimal_grid_step(const LengthDistribution& d, double target) {
    if (!d.is_discrete()) throw DomainError("decimal grid step needs a discrete ldf");
    double unit = 0.0;
    for (int p = 0; p <= 9 && unit == 0.0; ++p) {
        const double scale = std::pow(10.0, p);
        bool ok = true;
        for (double l : d.lengths()) {
            const double r = l * scale;
            if (std::abs(r - std::round(r)) > 1e-6) ok = false;
        }
        if (ok) unit = 1.0 / scale;
    }
    if (unit == 0.0) throw DomainError("atom lengths are not representable on a decimal grid");
    return unit / std::ceil(unit / target - 1e-9);
}

MultiConstantWorkspace::MultiConstantWorkspace(const LengthDistribution& d, std::size_t type, double h)
    : lengths_(d.lengths()), probs_(d.weights()), type_(type), h_(h) {
    if (!d.is_discrete()) throw DomainError("multidisperse constant needs a discrete ldf");
    if (type >= lengths_.size()) throw DomainError("type index out of range");
    const double ln = lengths_.back();
    rho_ = ln - d.mean_length();
    if (rho_ < 0.0) rho_ = 0.0;
    const CountGrid cg = count_grid(d, type, ln, h);
    left_ = cg.left;
    right_ = cg.right;
    e_n_ = right_.back();
    e_max_ = *std::max_element(right_.begin(), right_.end());
    const std::size_t n = right_.size() - 1;
    for (std::size_t i = 0; i < lengths_.size(); ++i) {
        const auto node = static_cast<std::size_t>(std::llround(rho_i(i) / h));
        rho_node_.push_back(std::min(node, n));
    }
}

std::vector<double> MultiConstantWorkspace::shifted_p(double s) const {
    const std::size_t n = right_.size() - 1;
    double A, B;
    exp_panel_weights(s * h_, A, B);
    const double decay = std::exp(-s * h_);
    // T[j] = int_{x_j}^{l_n} E e^{-s (L - x_j)} dL, swept downward.
    std::vector<double> T(n + 1, 0.0);
    for (std::size_t j = n; j-- > 0;) T[j] = h_ * (right_[j] * A + left_[j + 1] * B) + decay * T[j + 1];
    std::vector<double> out(lengths_.size());
    for (std::size_t i = 0; i < lengths_.size(); ++i) out[i] = T[rho_node_[i]];
    return out;
}

double MultiConstantWorkspace::p_ik(std::size_t i, double s) const {
    return std::exp(-s * rho_i(i)) * shifted_p(s).at(i);
}

double MultiConstantWorkspace::g_k(double s) const {
    const auto p = shifted_p(s);
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) sum += probs_[i] * p[i];
    return std::exp(-rho_ * s) * (probs_[type_] + s * rho_ * e_n_ + 2.0 * s * sum);
}

double MultiConstantWorkspace::tail_bound(double T) const {
    double logc = -2.0 * specfun::euler_gamma;
    for (std::size_t i = 0; i < lengths_.size(); ++i) logc -= 2.0 * probs_[i] * std::log(lengths_[i]);
    const double c = std::exp(logc);
    const double a = probs_[type_] + 2.0 * e_max_;
    const double b = rho_ * e_n_;
    double bound = c * a / T;
    if (rho_ > 0.0) {
        const double e = std::exp(-rho_ * T);
        bound = std::min(bound, c * a * e / (rho_ * T * T)) + c * b * e / (rho_ * T);
    }
    return bound;
}

ConstantResult multidisperse_alpha(const LengthDistribution& d, std::size_t type, double tol) {
    if (!(tol >= 1e-12)) throw DomainError("multidisperse_alpha: tol too small");
    const double h = decimal_grid_step(d);
    auto alpha_at = [&](double step) {
        const MultiConstantWorkspace ws(d, type, step);
        auto f = [&](double t) { return ws.g_k(t) * std::exp(log_ein_decay(ws.lengths(), ws.probs(), t)); };
        auto tail = [&](double T) { return ws.tail_bound(T); };
        try {
            return specfun::integrate_semi_infinite(f, tol, tail);
        } catch (const NumericError& e) {
            throw NumericError(std::string("multidisperse_alpha (constant integral): ") + e.what());
        }
    };
    const auto fine = alpha_at(h);
    const auto coarse = alpha_at(2.0 * h);
    // Trapezoid small-L data: error of the fine result is about a third of the difference.
    const double grid_err = std::abs(fine.value - coarse.value) / 3.0;
    return {fine.value, fine.error_estimate + grid_err,
            "small-L grid h=" + std::to_string(h) + ", adaptive Simpson with certified tail"};
}

double ghost_expected_count(const LengthDistribution& d, std::size_t type, double L) {
    if (!d.is_discrete()) throw DomainError("ghost formulas need a discrete ldf");
    if (type >= d.lengths().size()) throw DomainError("type index out of range");
    const double lk = d.lengths()[type];
    if (L < lk) throw DomainError("ghost_expected_count: L must be at least the type length");
    return d.weights()[type] * (L - lk) / (d.mean_length() + lk);
}

double ghost_density_limit(const LengthDistribution& d) {
    if (!d.is_discrete()) throw DomainError("ghost formulas need a discrete ldf");
    const double lbar = d.mean_length();
    double s = 0.0;
    for (std::size_t k = 0; k < d.lengths().size(); ++k) {
        const double lk = d.lengths()[k];
        s += d.weights()[k] * lk / (lbar + lk);
    }
    return s;
}

std::pair<double, double> ghost_density_bounds(const LengthDistribution& d) {
    if (!d.is_discrete()) throw DomainError("ghost formulas need a discrete ldf");
    const double a = std::sqrt(d.lengths().front());
    const double b = std::sqrt(d.lengths().back());
    return {2.0 * a * b / ((a + b) * (a + b)), 0.5};
}

double xi_exponent(double beta, double tol) {
    if (!(beta > 0.0)) throw DomainError("xi_exponent: beta must be positive");
    const double target = -std::log(2.0 * (beta + 1.0));
    auto f = [&](double theta) { return specfun::log_beta(beta + 1.0, theta + 1.0) - target; };
    return specfun::find_root(f, 0.0, 1.0, tol);
}

double xi_exponent_integer(int beta, double tol) {
    if (beta < 1) throw DomainError("xi_exponent_integer: beta must be a positive integer");
    auto f = [&](double theta) {
        double s = 0.0;
        for (int i = 1; i <= beta + 1; ++i) s += std::log1p(theta / i);
        return s - std::log(2.0);
    };
    return specfun::find_root(f, 0.0, 1.0, tol);
}

AlphaNuEstimate alpha_nu_estimate(const LengthDistribution& d, double L_max, double h, double window) {
    if (classify(d) != TailClass::Convergent) throw DomainError("alpha_nu_estimate needs a convergent ldf");
    const GridSolution g = solve_empty_space(d, L_max, h);
    const TailFit fit = estimate_linear_density(g, window);
    AlphaNuEstimate e;
    e.value = fit.value;
    e.drift = fit.drift;
    e.hypothesis = d.kind() == LdfKind::Tabulated ? "assumed" : "holds";
    return e;
}

}  // namespace rsa
