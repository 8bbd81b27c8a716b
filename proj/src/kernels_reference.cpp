#include <cstddef>
#include <functional>
#include <vector>

#include "rsa/kernels.hpp"

namespace rsa::kernels {

namespace {

// Composite Simpson over nodes i0..i1; an odd panel count ends with one trapezoid panel.
double simpson_nodes(const std::function<double(std::size_t)>& f, std::size_t i0, std::size_t i1, double h) {
    const std::size_t p = i1 - i0;
    if (p == 0) return 0.0;
    const std::size_t even_end = (p % 2 == 0) ? i1 : i1 - 1;
    double s = 0.0;
    if (even_end > i0) {
        s += f(i0) + f(even_end);
        for (std::size_t i = i0 + 1; i < even_end; ++i) s += ((i - i0) % 2 == 1 ? 4.0 : 2.0) * f(i);
        s *= h / 3.0;
    }
    if (even_end != i1) s += 0.5 * h * (f(i1 - 1) + f(i1));
    return s;
}

}  // namespace

std::vector<double> empty_space_reference(const std::vector<double>& z, const std::vector<double>& cz,
                                          std::size_t m1) {
    const std::size_t n = z.size() - 1;
    const double h = 1.0 / static_cast<double>(m1);
    std::vector<double> S(n + 1, 0.0);
    for (std::size_t j = 0; j <= n && j <= m1; ++j) S[j] = static_cast<double>(j) * h;
    for (std::size_t j = m1 + 1; j <= n; ++j) {
        const std::size_t b = j - m1;
        // [0, 1]: S(t) = t, including its left limit 1 at t = 1.
        auto fa = [&](std::size_t i) { return static_cast<double>(i) * h * z[j - i]; };
        double integral = simpson_nodes(fa, 0, b < m1 ? b : m1, h);
        if (b > m1) {
            // [1, L - 1]: S starts from its right limit 0 at t = 1.
            auto fb = [&](std::size_t i) { return i == m1 ? 0.0 : S[i] * z[j - i]; };
            integral += simpson_nodes(fb, m1, b, h);
        }
        S[j] = 2.0 * integral / cz[j];
    }
    return S;
}

std::vector<double> self_convolution_reference(const std::vector<double>& el, const std::vector<double>& er,
                                               double h) {
    const std::size_t n = el.size() - 1;
    std::vector<double> K(n + 1, 0.0);
    for (std::size_t m = 1; m <= n; ++m) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += er[i] * el[m - i] + el[i + 1] * er[m - i - 1];
        K[m] = 0.5 * h * s;
    }
    return K;
}

}  // namespace rsa::kernels
