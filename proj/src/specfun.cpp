#include "rsa/specfun.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <vector>

#include "rsa/errors.hpp"

namespace rsa::specfun {

namespace {

double ein_series(double z) {
    double term = z;  // z^k / k!
    double sum = 0.0;
    for (int k = 1; k < 200; ++k) {
        const double contrib = term / k;
        sum += (k % 2 == 1) ? contrib : -contrib;
        if (contrib < 1e-18 * std::abs(sum)) break;
        term *= z / (k + 1);
    }
    return sum;
}

// Modified Lentz evaluation of the E1 continued fraction.
double e1_continued_fraction(double z) {
    const double tiny = 1e-300;
    double b = z + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return h * std::exp(-z);
}

void check_finite(double x, double fx) {
    if (!std::isfinite(fx)) {
        std::ostringstream os;
        os << "integrand not finite at t=" << x;
        throw NumericError(os.str());
    }
}

struct Panel {
    double a, b, fa, fm, fb, whole, tol;
    int depth;
};

}  // namespace

double ein(double z) {
    if (!(z >= 0.0)) throw DomainError("ein: argument must be nonnegative");
    if (z == 0.0) return 0.0;
    if (z <= 4.0) return ein_series(z);
    return euler_gamma + std::log(z) + e1_continued_fraction(z);
}

double expint_e1(double z) {
    if (!(z > 0.0)) throw DomainError("expint_e1: argument must be positive");
    if (z <= 4.0) return ein_series(z) - euler_gamma - std::log(z);
    return e1_continued_fraction(z);
}

double log_beta(double z1, double z2) {
    if (!(z1 > 0.0) || !(z2 > 0.0)) throw DomainError("log_beta: arguments must be positive");
    return std::lgamma(z1) + std::lgamma(z2) - std::lgamma(z1 + z2);
}

QuadratureResult integrate(const RealFn& f, double a, double b, double tol, int max_depth) {
    if (!(a <= b)) throw DomainError("integrate: require a <= b");
    QuadratureResult res;
    if (a == b) {
        res.evaluations = 1;
        return res;
    }
    auto eval = [&](double x) {
        const double fx = f(x);
        ++res.evaluations;
        check_finite(x, fx);
        return fx;
    };
    const double fa = eval(a), fb = eval(b), fm = eval(0.5 * (a + b));
    std::vector<Panel> stack;
    stack.push_back({a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), tol, 0});
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        const double m = 0.5 * (p.a + p.b);
        const double lm = 0.5 * (p.a + m), rm = 0.5 * (m + p.b);
        const double flm = eval(lm), frm = eval(rm);
        const double left = (m - p.a) / 6.0 * (p.fa + 4.0 * flm + p.fm);
        const double right = (p.b - m) / 6.0 * (p.fm + 4.0 * frm + p.fb);
        const double delta = left + right - p.whole;
        const double err = std::abs(delta) / 15.0;
        if (err <= p.tol || p.depth >= max_depth || m <= p.a || p.b <= m) {
            if (err > p.tol) res.max_depth_reached = true;
            res.value += left + right + delta / 15.0;
            res.error_estimate += err;
            continue;
        }
        stack.push_back({m, p.b, p.fm, frm, p.fb, right, 0.5 * p.tol, p.depth + 1});
        stack.push_back({p.a, m, p.fa, flm, p.fm, left, 0.5 * p.tol, p.depth + 1});
    }
    return res;
}

QuadratureResult integrate_semi_infinite(const RealFn& f, double tol, const RealFn& tail_bound,
                                         double T0, int max_doublings) {
    if (!(tol > 0.0)) throw DomainError("integrate_semi_infinite: tol must be positive");
    std::vector<double> cuts{0.0, T0};
    double tail = tail_bound(T0);
    int n = 0;
    while (!(tail <= 0.5 * tol)) {
        if (++n > max_doublings) throw NumericError("integrate_semi_infinite: tail bound never below tol/2");
        cuts.push_back(2.0 * cuts.back());
        tail = tail_bound(cuts.back());
    }
    QuadratureResult total;
    const double panel_tol = 0.5 * tol / static_cast<double>(cuts.size() - 1);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const auto r = integrate(f, cuts[i], cuts[i + 1], panel_tol);
        total.value += r.value;
        total.error_estimate += r.error_estimate;
        total.evaluations += r.evaluations;
        total.max_depth_reached = total.max_depth_reached || r.max_depth_reached;
    }
    total.error_estimate += tail;
    return total;
}

double find_root(const RealFn& f, double lo, double hi, double tol) {
    if (!(lo < hi)) throw DomainError("find_root: require lo < hi");
    const double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0)) throw DomainError("find_root: no sign change on bracket");
    std::uintmax_t max_iter = 500;
    auto done = [tol](double a, double b) { return std::abs(b - a) <= tol; };
    const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, done, max_iter);
    if (!done(a, b)) throw NumericError("find_root: bracket did not shrink to tolerance");
    return 0.5 * (a + b);
}

}  // namespace rsa::specfun
