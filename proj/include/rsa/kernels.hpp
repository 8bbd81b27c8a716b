#pragma once

#include <cstddef>
#include <vector>

// Grid kernels for the convolution recurrences. Each kernel has a serial
// reference version (plain per-node quadrature) and an OpenMP version.
// The OpenMP versions give the same bits for any thread count.
namespace rsa::kernels {

// Empty-space march for a continuous ldf on the grid L_j = j / m1 (m1 even).
//   z[k]  = Z(k h),          k = 0..n
//   cz[j] = int_0^{jh} Z,    j = 0..n
// Returns S[0..n] with S[m1] = 1 (left limit at L = 1).
std::vector<double> empty_space_reference(const std::vector<double>& z, const std::vector<double>& cz,
                                          std::size_t m1);
std::vector<double> empty_space_parallel(const std::vector<double>& z, const std::vector<double>& cz,
                                         std::size_t m1);

// K[n] = int_0^{n h} E(t) E(nh - t) dt by trapezoid, with one-sided limits
// el/er where E jumps. Needs n <= el.size() - 1.
std::vector<double> self_convolution_reference(const std::vector<double>& el, const std::vector<double>& er,
                                               double h);
std::vector<double> self_convolution_parallel(const std::vector<double>& el, const std::vector<double>& er,
                                              double h);

}  // namespace rsa::kernels
