#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace rsl {

// In-place iterative radix-2 FFT; size must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

// Integer autoconvolution counts via FFT with a residual check: every output
// entry must be within 0.25 of an integer or we fall back to direct counting.
// counts[v] = #occurrences of value v in `values`; returns r[s] = #{(i,j) :
// values[i] + values[j] == s} for s in [0, 2*max).
std::vector<std::int64_t> autoconvolve_counts(const std::vector<std::int64_t>& values,
                                              std::int64_t max_sum);

// Triple autoconvolution: r3[s] = #{(i,j,k) : v_i + v_j + v_k == s}.
std::vector<std::int64_t> autoconvolve3_counts(const std::vector<std::int64_t>& values,
                                               std::int64_t max_sum);

}  // namespace rsl
