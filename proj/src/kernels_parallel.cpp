#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "rsa/kernels.hpp"

namespace rsa::kernels {

namespace {

inline double simpson_weight(std::size_t i) { return (i % 2 == 1) ? 4.0 : 2.0; }

}  // namespace

// Folded-weight form of the reference quadrature: ws[i] carries S[i] times its
// Simpson weight, so node j is one dot product against the reversed Z table.
// Nodes within one block of m1 only read nodes from earlier blocks.
std::vector<double> empty_space_parallel(const std::vector<double>& z, const std::vector<double>& cz,
                                         std::size_t m1) {
    const std::size_t n = z.size() - 1;
    const double h = 1.0 / static_cast<double>(m1);
    std::vector<double> S(n + 1, 0.0);
    std::vector<double> ws(n + 1, 0.0);
    std::vector<double> zr(n + 1);
    for (std::size_t t = 0; t <= n; ++t) zr[t] = z[n - t];
    for (std::size_t j = 0; j <= n && j <= m1; ++j) {
        S[j] = static_cast<double>(j) * h;
        ws[j] = (j == m1) ? 1.0 : S[j] * simpson_weight(j);
    }
    for (std::size_t J = m1 + 1; J <= n; J += m1) {
        const std::size_t Jend = std::min(n, J + m1 - 1);
        const auto lo = static_cast<std::int64_t>(J);
        const auto hi = static_cast<std::int64_t>(Jend);
#pragma omp parallel for schedule(static)
        for (std::int64_t jj = lo; jj <= hi; ++jj) {
            const auto j = static_cast<std::size_t>(jj);
            const std::size_t b = j - m1;
            const double* zp = zr.data() + (n - j);  // zp[i] == z[j - i]
            const double* w = ws.data();
            double acc = 0.0;
#pragma omp simd reduction(+ : acc)
            for (std::size_t i = 1; i < b; ++i) acc += w[i] * zp[i];
            double integral = acc * (h / 3.0);
            const std::size_t panels = (b <= m1) ? b : b - m1;
            if (panels % 2 == 1 && b - 1 != m1) integral += (h / 6.0) * S[b - 1] * z[j - b + 1];
            S[j] = 2.0 * integral / cz[j];
        }
        for (std::size_t j = J; j <= Jend; ++j) ws[j] = S[j] * simpson_weight(j);
    }
    return S;
}

std::vector<double> self_convolution_parallel(const std::vector<double>& el, const std::vector<double>& er,
                                              double h) {
    const std::size_t n = el.size() - 1;
    std::vector<double> K(n + 1, 0.0);
    std::vector<double> elr(n + 1);
    for (std::size_t t = 0; t <= n; ++t) elr[t] = el[n - t];
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t mm = 1; mm <= count; ++mm) {
        const auto m = static_cast<std::size_t>(mm);
        const double* a = er.data();
        const double* b = elr.data() + (n - m);  // b[i] == el[m - i]
        double acc = 0.0;
#pragma omp simd reduction(+ : acc)
        for (std::size_t i = 0; i < m; ++i) acc += a[i] * b[i];
        K[m] = h * acc;
    }
    return K;
}

}  // namespace rsa::kernels
