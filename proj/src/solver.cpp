#include "rsa/solver.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "rsa/errors.hpp"
#include "rsa/kernels.hpp"

namespace rsa {

namespace {

std::size_t node_count(double L_max, double h) {
    if (!(L_max >= 0.0) || !std::isfinite(L_max)) throw ConfigError("L_max must be finite and nonnegative");
    return static_cast<std::size_t>(std::floor(L_max / h + 1e-9));
}

struct Atoms {
    std::vector<std::size_t> offset;  // l_i / h
    std::vector<double> q;
};

Atoms grid_atoms(const LengthDistribution& d, double h) {
    Atoms a;
    for (std::size_t i = 0; i < d.lengths().size(); ++i) {
        a.offset.push_back(static_cast<std::size_t>(std::llround(d.lengths()[i] / h)));
        a.q.push_back(d.weights()[i]);
    }
    return a;
}

struct OneSided {
    std::vector<double> left, right;
};

// v(L) = (src(j) + 2 sum_i q_i int_0^{L - l_i} v) / sum_i q_i (L - l_i)^+ for L > 1,
// given values up to L = 1 and the one-sided values at L = 1.
OneSided march(const Atoms& at, std::size_t m1, std::size_t n, double h,
               const std::function<double(std::size_t)>& below, double at_one_left, double at_one_right,
               const std::function<double(std::size_t)>& src) {
    OneSided v{std::vector<double>(n + 1, 0.0), std::vector<double>(n + 1, 0.0)};
    std::vector<double> C(n + 1, 0.0);
    for (std::size_t j = 0; j <= n; ++j) {
        if (j < m1) {
            v.left[j] = v.right[j] = below(j);
        } else if (j == m1) {
            v.left[j] = at_one_left;
            v.right[j] = at_one_right;
        } else {
            double num = src(j), den = 0.0;
            for (std::size_t i = 0; i < at.offset.size(); ++i) {
                if (at.offset[i] >= j) break;
                const std::size_t g = j - at.offset[i];
                num += 2.0 * at.q[i] * C[g];
                den += at.q[i] * static_cast<double>(g) * h;
            }
            v.left[j] = v.right[j] = num / den;
        }
        if (j > 0) C[j] = C[j - 1] + 0.5 * h * (v.right[j - 1] + v.left[j]);
    }
    return v;
}

std::vector<double> cumulative(const OneSided& v, double h) {
    std::vector<double> C(v.left.size(), 0.0);
    for (std::size_t j = 1; j < C.size(); ++j) C[j] = C[j - 1] + 0.5 * h * (v.right[j - 1] + v.left[j]);
    return C;
}

void require_discrete_type(const LengthDistribution& d, std::size_t type) {
    if (!d.is_discrete()) throw ConfigError("multidisperse solver needs a discrete ldf");
    if (type >= d.lengths().size()) throw ConfigError("type index out of range");
}

std::string count_label(std::size_t type, bool squared) {
    return std::string(squared ? "E[N^2_" : "E[N_") + std::to_string(type + 1) + ",L]";
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y, std::size_t a, std::size_t b) {
    const double n = static_cast<double>(b - a);
    double mx = 0.0, my = 0.0;
    for (std::size_t i = a; i < b; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = a; i < b; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

TailFit fit_tail(const std::vector<double>& x, const std::vector<double>& y, double window) {
    if (!(window > 0.0 && window < 1.0)) throw DomainError("window must lie in (0, 1)");
    const std::size_t n = x.size();
    const auto start = static_cast<std::size_t>(std::floor((1.0 - window) * static_cast<double>(n)));
    if (n < 8 || n - start < 8) throw DomainError("too few grid nodes in the tail window");
    const std::size_t mid = start + (n - start) / 2;
    TailFit f;
    f.nodes = n - start;
    f.value = least_squares_slope(x, y, start, n);
    f.drift = least_squares_slope(x, y, mid, n) - least_squares_slope(x, y, start, mid);
    return f;
}

}  // namespace

double GridSolution::L(std::size_t j) const {
    const double m = std::round(1.0 / h);
    if (std::abs(m * h - 1.0) < 1e-12) return static_cast<double>(j) / m;
    return static_cast<double>(j) * h;
}

std::size_t GridSolution::node(double L) const {
    const double r = L / h;
    const double j = std::round(r);
    if (std::abs(r - j) > 1e-7 || j < 0.0 || j >= static_cast<double>(values.size())) {
        std::ostringstream os;
        os << "L=" << L << " is not a node of the grid (h=" << h << ", L_max=" << L_max() << ")";
        throw DomainError(os.str());
    }
    return static_cast<std::size_t>(j);
}

std::size_t steps_per_unit(const LengthDistribution& d, double h) {
    if (!(h > 0.0) || !std::isfinite(h) || h > 1.0) throw ConfigError("grid step must lie in (0, 1]");
    const double inv = 1.0 / h;
    const auto m1 = static_cast<std::size_t>(std::llround(inv));
    if (m1 == 0 || std::abs(static_cast<double>(m1) * h - 1.0) > 1e-12) throw ConfigError("grid step must divide 1");
    if (d.is_discrete()) {
        for (double l : d.lengths()) {
            const double r = l / h;
            if (std::abs(r - std::round(r)) > 1e-9 * r)
                throw ConfigError("every atom length must be a multiple of the grid step");
        }
        return m1;
    }
    int e = 0;
    const double frac = std::frexp(h, &e);
    if (frac != 0.5 || m1 < 2) throw ConfigError("continuous ldfs need a dyadic grid step h = 2^-m, m >= 1");
    return m1;
}

GridSolution solve_empty_space(const LengthDistribution& d, double L_max, double h, Backend backend) {
    const std::size_t m1 = steps_per_unit(d, h);
    const std::size_t n = node_count(L_max, h);
    if (L_max > d.support_end()) throw DomainError("L_max exceeds the tabulated ldf range");
    GridSolution g;
    g.h = h;
    g.quantity = "E[S_L]";
    g.fingerprint = d.fingerprint();
    if (d.is_discrete()) {
        const Atoms at = grid_atoms(d, h);
        const auto v = march(
            at, m1, n, h, [m1](std::size_t j) { return static_cast<double>(j) / static_cast<double>(m1); }, 1.0, 0.0,
            [](std::size_t) { return 0.0; });
        g.values = v.left;
        return g;
    }
    std::vector<double> z(n + 1), cz(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        const double L = static_cast<double>(j) * h;
        z[j] = d.normalizing_constant(L);
        cz[j] = d.cumulative_Z(L);
    }
    g.values = backend == Backend::Parallel ? kernels::empty_space_parallel(z, cz, m1)
                                            : kernels::empty_space_reference(z, cz, m1);
    return g;
}

CountGrid count_grid(const LengthDistribution& d, std::size_t type, double L_max, double h) {
    require_discrete_type(d, type);
    const std::size_t m1 = steps_per_unit(d, h);
    const std::size_t n = node_count(L_max, h);
    const Atoms at = grid_atoms(d, h);
    const std::size_t dk = at.offset[type];
    const double qk = at.q[type];
    auto v = march(
        at, m1, n, h, [](std::size_t) { return 0.0; }, 0.0, type == 0 ? 1.0 : 0.0,
        [&](std::size_t j) { return j > dk ? qk * static_cast<double>(j - dk) * h : 0.0; });
    return {h, std::move(v.left), std::move(v.right)};
}

GridSolution solve_multidisperse_counts(const LengthDistribution& d, std::size_t type, double L_max, double h) {
    require_discrete_type(d, type);
    if (L_max < d.lengths().back()) throw ConfigError("L_max must be at least the largest length");
    const CountGrid cg = count_grid(d, type, L_max, h);
    GridSolution g;
    g.h = h;
    g.quantity = count_label(type, false);
    g.fingerprint = d.fingerprint();
    g.values = cg.right;
    return g;
}

GridSolution solve_renyi_counts(double L_max, double h) {
    return solve_multidisperse_counts(LengthDistribution::discrete({{1.0, 1.0}}), 0, L_max, h);
}

MomentSolution solve_second_moment(const LengthDistribution& d, std::size_t type, double L_max, double h,
                                   Backend backend) {
    require_discrete_type(d, type);
    if (L_max < d.lengths().back()) throw ConfigError("L_max must be at least the largest length");
    const std::size_t m1 = steps_per_unit(d, h);
    const std::size_t n = node_count(L_max, h);
    const Atoms at = grid_atoms(d, h);
    const CountGrid cg = count_grid(d, type, L_max, h);
    const OneSided first{cg.left, cg.right};
    const std::vector<double> C = cumulative(first, h);
    const std::vector<double> K = backend == Backend::Parallel ? kernels::self_convolution_parallel(cg.left, cg.right, h)
                                                               : kernels::self_convolution_reference(cg.left, cg.right, h);
    const std::size_t dk = at.offset[type];
    const double qk = at.q[type];
    auto src = [&](std::size_t j) {
        double s = 0.0;
        if (j > dk) s += qk * static_cast<double>(j - dk) * h + 4.0 * qk * C[j - dk];
        for (std::size_t i = 0; i < at.offset.size() && at.offset[i] < j; ++i) s += 2.0 * at.q[i] * K[j - at.offset[i]];
        return s;
    };
    const auto v = march(
        at, m1, n, h, [](std::size_t) { return 0.0; }, 0.0, type == 0 ? 1.0 : 0.0, src);
    MomentSolution m;
    m.first.h = m.second.h = h;
    m.first.fingerprint = m.second.fingerprint = d.fingerprint();
    m.first.quantity = count_label(type, false);
    m.second.quantity = count_label(type, true);
    m.first.values = cg.right;
    m.second.values = v.right;
    return m;
}

TailFit estimate_linear_density(const GridSolution& g, double window) {
    std::vector<double> x(g.size());
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = g.L(j);
    return fit_tail(x, g.values, window);
}

TailFit estimate_power_exponent(const GridSolution& g, double window) {
    if (!(window > 0.0 && window < 1.0)) throw DomainError("window must lie in (0, 1)");
    const std::size_t n = g.size();
    const auto start = static_cast<std::size_t>(std::floor((1.0 - window) * static_cast<double>(n)));
    std::vector<double> x, y;
    for (std::size_t j = std::max<std::size_t>(start, 1); j < n; ++j) {
        if (!(g.values[j] > 0.0)) throw DomainError("nonpositive value in the fit window");
        x.push_back(std::log(g.L(j)));
        y.push_back(std::log(g.values[j]));
    }
    if (x.size() < 8) throw DomainError("too few grid nodes in the tail window");
    const std::size_t mid = x.size() / 2;
    TailFit f;
    f.nodes = x.size();
    f.value = least_squares_slope(x, y, 0, x.size());
    f.drift = least_squares_slope(x, y, mid, x.size()) - least_squares_slope(x, y, 0, mid);
    return f;
}

}  // namespace rsa
