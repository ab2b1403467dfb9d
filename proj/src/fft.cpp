#include "rsl/fft.hpp"

#include <cmath>
#include <numbers>

#include "rsl/common.hpp"

namespace rsl {

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw precondition_error("fft_inplace: size must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    double ang = 2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::complex<double> u = a[i + j];
        std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse) {
    for (auto& x : a) x /= static_cast<double>(n);
  }
}

namespace {

std::vector<std::int64_t> histogram(const std::vector<std::int64_t>& values) {
  std::int64_t max_v = 0;
  for (std::int64_t v : values) {
    if (v < 0) throw precondition_error("autoconvolve: values must be nonnegative");
    max_v = std::max(max_v, v);
  }
  std::vector<std::int64_t> h(static_cast<std::size_t>(max_v) + 1, 0);
  for (std::int64_t v : values) ++h[static_cast<std::size_t>(v)];
  return h;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Rounds the FFT product back to exact integers; false if any residual >= 0.25.
bool round_exact(const std::vector<std::complex<double>>& a, std::vector<std::int64_t>& out,
                 std::size_t count) {
  out.assign(count, 0);
  for (std::size_t i = 0; i < count && i < a.size(); ++i) {
    double re = a[i].real();
    auto r = static_cast<std::int64_t>(std::llround(re));
    if (std::fabs(re - static_cast<double>(r)) >= 0.25) return false;
    out[i] = r;
  }
  return true;
}

std::vector<std::int64_t> direct_power_convolve(const std::vector<std::int64_t>& h, int power,
                                                std::size_t count) {
  std::vector<std::int64_t> cur = h;
  for (int p = 1; p < power; ++p) {
    std::vector<std::int64_t> next(std::min(count, cur.size() + h.size() - 1), 0);
    if (cur.size() * h.size() > 400'000'000ULL)
      throw budget_error("autoconvolve: direct fallback too large");
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur[i] == 0) continue;
      for (std::size_t j = 0; j < h.size() && i + j < next.size(); ++j)
        next[i + j] += cur[i] * h[j];
    }
    cur = std::move(next);
  }
  cur.resize(count, 0);
  return cur;
}

std::vector<std::int64_t> power_convolve(const std::vector<std::int64_t>& values, int power,
                                         std::int64_t max_sum) {
  std::vector<std::int64_t> h = histogram(values);
  auto count = static_cast<std::size_t>(max_sum) + 1;
  std::size_t need = (h.size() - 1) * static_cast<std::size_t>(power) + 1;
  std::size_t L = next_pow2(std::max(need, count));
  std::vector<std::complex<double>> a(L, {0.0, 0.0});
  for (std::size_t i = 0; i < h.size(); ++i) a[i] = {static_cast<double>(h[i]), 0.0};
  fft_inplace(a, false);
  for (auto& x : a) {
    std::complex<double> p = x;
    for (int e = 1; e < power; ++e) p *= x;
    x = p;
  }
  fft_inplace(a, true);
  std::vector<std::int64_t> out;
  if (!round_exact(a, out, count)) return direct_power_convolve(h, power, count);
  return out;
}

}  // namespace

std::vector<std::int64_t> autoconvolve_counts(const std::vector<std::int64_t>& values,
                                              std::int64_t max_sum) {
  if (values.empty()) throw precondition_error("autoconvolve_counts: empty input");
  return power_convolve(values, 2, max_sum);
}

std::vector<std::int64_t> autoconvolve3_counts(const std::vector<std::int64_t>& values,
                                               std::int64_t max_sum) {
  if (values.empty()) throw precondition_error("autoconvolve3_counts: empty input");
  return power_convolve(values, 3, max_sum);
}

}  // namespace rsl
