#include "rsl/smoothcut.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rsl/fft.hpp"
#include "rsl/quadrature.hpp"

namespace rsl {

namespace {

double raw_bump(double x) {
  if (std::fabs(x) >= 1.0) return 0.0;
  return std::exp(1.0 / (x * x - 1.0));
}

struct BumpTables {
  double constant;            // 1 / integral of raw_bump
  std::vector<double> cdf;    // cdf[i] = integral of normalized bump over [-1, x_i]
  static constexpr int kCells = 4096;

  BumpTables() {
    double raw = integrate(raw_bump, -1.0, 1.0, 1e-14, 1e-14);
    constant = 1.0 / raw;
    cdf.resize(kCells + 1);
    cdf[0] = 0.0;
    double acc = 0.0;
    for (int i = 0; i < kCells; ++i) {
      double a = -1.0 + 2.0 * i / kCells;
      double b = -1.0 + 2.0 * (i + 1) / kCells;
      acc += integrate(raw_bump, a, b, 1e-16, 1e-14);
      cdf[static_cast<std::size_t>(i) + 1] = acc * constant;
    }
    cdf[kCells] = 1.0;  // exact by normalization
  }

  double cell_left(int i) const { return -1.0 + 2.0 * i / kCells; }
};

const BumpTables& tables() {
  static const BumpTables t;
  return t;
}

}  // namespace

double base_bump(double x) {
  return tables().constant * raw_bump(x);
}

double base_bump_constant() { return tables().constant; }

double base_bump_cdf(double x) {
  if (x <= -1.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const BumpTables& t = tables();
  int i = static_cast<int>((x + 1.0) * 0.5 * BumpTables::kCells);
  i = std::clamp(i, 0, BumpTables::kCells - 1);
  double left = t.cell_left(i);
  // One non-adaptive K15 panel across a <= 2/4096 wide slice: error ~ 1e-20.
  double tail = x > left ? integrate(raw_bump, left, x, 1.0, 1.0, 0) : 0.0;
  return t.cdf[static_cast<std::size_t>(i)] + tail * t.constant;
}

SampledCutoff interval_majorant(std::int64_t N, bool smooth_variant) {
  if (N < 16) throw precondition_error("interval_majorant: N must be >= 16");
  SampledCutoff psi;
  psi.domain = CutoffDomain::integers_at_scale;
  psi.scale = N;
  double dN = static_cast<double>(N);
  if (smooth_variant) {
    psi.support_lo = -dN;
    psi.support_hi = 4 * dN;
    psi.eval = [dN](const std::vector<double>& p) {
      double t = p[0] / dN;
      return base_bump_cdf(t) - base_bump_cdf(t - 3.0);
    };
  } else {
    psi.support_lo = 0;
    psi.support_hi = 3 * dN;
    psi.eval = [dN](const std::vector<double>& p) {
      double t = p[0] / dN;
      if (t <= 0.0 || t >= 3.0) return 0.0;
      if (t < 1.0) return t;
      if (t <= 2.0) return 1.0;
      return 3.0 - t;
    };
  }
  return psi;
}

SampledCutoff interval_sharp(std::int64_t N) {
  if (N < 1) throw precondition_error("interval_sharp: N must be >= 1");
  SampledCutoff psi;
  psi.domain = CutoffDomain::integers_at_scale;
  psi.scale = N;
  psi.support_lo = static_cast<double>(N);
  psi.support_hi = 2.0 * static_cast<double>(N) - 1.0;
  double dN = static_cast<double>(N);
  psi.eval = [dN](const std::vector<double>& p) {
    return (p[0] >= dN && p[0] < 2 * dN) ? 1.0 : 0.0;
  };
  return psi;
}

double l1_fourier_norm(const SampledCutoff& psi, std::int64_t grid) {
  if (psi.domain != CutoffDomain::integers_at_scale)
    throw precondition_error("l1_fourier_norm: integer-domain cutoff required");
  if (grid < (1 << 14)) throw precondition_error("l1_fourier_norm: grid must be >= 2^14");
  auto lo = static_cast<std::int64_t>(std::ceil(psi.support_lo));
  auto hi = static_cast<std::int64_t>(std::floor(psi.support_hi));
  std::size_t G = 1;
  while (G < static_cast<std::size_t>(grid) || G < static_cast<std::size_t>(hi - lo + 1)) G <<= 1;
  std::vector<std::complex<double>> a(G, {0.0, 0.0});
  for (std::int64_t n = lo; n <= hi; ++n) {
    double v = psi.eval({static_cast<double>(n)});
    if (v != 0.0) {
      std::size_t idx = static_cast<std::size_t>(((n % static_cast<std::int64_t>(G)) +
                                                  static_cast<std::int64_t>(G)) %
                                                 static_cast<std::int64_t>(G));
      a[idx] += v;
    }
  }
  fft_inplace(a, false);
  double acc = 0.0;
  for (const auto& z : a) acc += std::abs(z);
  return acc / static_cast<double>(G);
}

namespace {

// Signed distance to 0 on the torus, in [-1/2, 1/2).
double torus_rep(double x) {
  double r = x - std::floor(x);
  if (r >= 0.5) r -= 1.0;
  return r;
}

// 1_{[-w, w]} convolved with the width-`eps` bump mollifier, at torus point y.
double mollified_box(double y, double w, double eps) {
  return base_bump_cdf((y + w) / eps) - base_bump_cdf((y - w) / eps);
}

SampledCutoff make_torus_cutoff(double eps, int d, bool majorant) {
  if (!(eps > 0.0 && eps < 0.25)) throw precondition_error("torus cutoff: need 0 < eps < 1/4");
  if (d < 1 || d > 3) throw precondition_error("torus cutoff: need 1 <= d <= 3");
  double epsp = eps / (10.0 * d);
  double w = majorant ? eps + epsp : eps - epsp;
  SampledCutoff psi;
  psi.domain = CutoffDomain::torus;
  psi.dim = d;
  psi.mollifier_width = epsp;
  psi.support_radius = w + epsp;
  psi.factor1d = [w, epsp](double y) { return mollified_box(torus_rep(y), w, epsp); };
  auto f = psi.factor1d;
  psi.eval = [f, d](const std::vector<double>& p) {
    double v = 1.0;
    for (int i = 0; i < d; ++i) v *= f(p[static_cast<std::size_t>(i)]);
    return v;
  };
  return psi;
}

}  // namespace

SampledCutoff torus_majorant(double eps, int d) { return make_torus_cutoff(eps, d, true); }

SampledCutoff torus_minorant(double eps, int d) { return make_torus_cutoff(eps, d, false); }

double torus_integral(const SampledCutoff& psi) {
  if (psi.domain != CutoffDomain::torus || !psi.factor1d)
    throw precondition_error("torus_integral: tensor torus cutoff required");
  double one_dim = integrate([&](double y) { return psi.factor1d(y); }, -0.5, 0.5, 1e-12, 1e-12);
  double v = 1.0;
  for (int i = 0; i < psi.dim; ++i) v *= one_dim;
  return v;
}

std::complex<double> FourierTable::coeff(const std::vector<std::int64_t>& r) const {
  std::complex<double> v(1.0, 0.0);
  for (std::int64_t j : r) {
    if (std::llabs(j) > radius) return {0.0, 0.0};
    v *= axis[static_cast<std::size_t>(j + radius)];
  }
  return v;
}

namespace {

// DFT of the 1-d factor on a grid of G points: c(j) for |j| <= radius.
std::vector<std::complex<double>> axis_coeffs(const std::function<double(double)>& f,
                                              std::size_t G, std::int64_t radius) {
  std::vector<std::complex<double>> a(G);
  for (std::size_t g = 0; g < G; ++g)
    a[g] = {f(static_cast<double>(g) / static_cast<double>(G)), 0.0};
  fft_inplace(a, false);
  std::vector<std::complex<double>> out(static_cast<std::size_t>(2 * radius + 1));
  for (std::int64_t j = -radius; j <= radius; ++j) {
    std::size_t idx = static_cast<std::size_t>(((j % static_cast<std::int64_t>(G)) +
                                                static_cast<std::int64_t>(G)) %
                                               static_cast<std::int64_t>(G));
    out[static_cast<std::size_t>(j + radius)] = a[idx] / static_cast<double>(G);
  }
  return out;
}

}  // namespace

DecayReport torus_fourier_decay(const SampledCutoff& psi, std::int64_t radius) {
  if (psi.domain != CutoffDomain::torus || !psi.factor1d)
    throw precondition_error("torus_fourier_decay: tensor torus cutoff required");
  if (radius < 4) throw precondition_error("torus_fourier_decay: radius must be >= 4");
  std::size_t G = 1 << 10;
  while (G < static_cast<std::size_t>(psi.grid) || G < 8 * static_cast<std::size_t>(radius))
    G <<= 1;
  auto axis = axis_coeffs(psi.factor1d, G, radius);
  auto axis2 = axis_coeffs(psi.factor1d, 2 * G, radius);
  double quad_error = 0.0;
  double max_mag = 0.0;
  for (std::size_t i = 0; i < axis.size(); ++i) {
    quad_error = std::max(quad_error, std::abs(axis[i] - axis2[i]));
    max_mag = std::max(max_mag, std::abs(axis2[i]));
  }
  // "Smallest reported coefficient" with a floor: near-zeros of the transform
  // (magnitude < 1e-13 of the peak) are noise-level and excluded.
  double floor_mag = 1e-13 * max_mag;
  double min_mag = max_mag;
  for (const auto& c : axis2) {
    double m = std::abs(c);
    if (m > floor_mag) min_mag = std::min(min_mag, m);
  }
  if (quad_error > 0.01 * min_mag)
    throw budget_error("torus_fourier_decay: quadrature error exceeds 1% of smallest coefficient");

  DecayReport rep;
  rep.table.dim = psi.dim;
  rep.table.radius = radius;
  rep.table.axis = std::move(axis2);
  rep.table.quad_error = quad_error;

  double P = 0.0, T = 0.0;  // sum |c(j)| and sum |c(j)| |j| over |j| <= radius
  for (std::int64_t j = -radius; j <= radius; ++j) {
    double m = std::abs(rep.table.axis[static_cast<std::size_t>(j + radius)]);
    P += m;
    T += m * static_cast<double>(std::llabs(j));
  }
  switch (psi.dim) {
    case 1: rep.partial_sum = T; break;
    case 2: rep.partial_sum = 2.0 * T * P; break;
    default: rep.partial_sum = 3.0 * T * P * P; break;
  }

  // Power-law fit of |c(j)| vs j over [2/eps', 4/eps'] when the mollifier
  // width is known, else the upper half of the table.
  std::int64_t lo = radius / 4, hi = radius / 2;
  if (psi.mollifier_width > 0) {
    lo = static_cast<std::int64_t>(std::ceil(2.0 / psi.mollifier_width));
    hi = static_cast<std::int64_t>(std::floor(4.0 / psi.mollifier_width));
  }
  lo = std::max<std::int64_t>(lo, 2);
  hi = std::min(hi, radius);
  if (hi - lo < 4) {
    lo = std::max<std::int64_t>(2, radius / 4);
    hi = radius;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::int64_t m_count = 0;
  for (std::int64_t j = lo; j <= hi; ++j) {
    double mag = std::abs(rep.table.axis[static_cast<std::size_t>(j + radius)]);
    if (mag <= floor_mag) continue;
    double X = std::log(static_cast<double>(j)), Y = std::log(mag);
    sx += X;
    sy += Y;
    sxx += X * X;
    sxy += X * Y;
    ++m_count;
  }
  if (m_count >= 2) {
    double denom = static_cast<double>(m_count) * sxx - sx * sx;
    rep.fitted_exponent = -(static_cast<double>(m_count) * sxy - sx * sy) / denom;
  }
  rep.fit_lo = lo;
  rep.fit_hi = hi;
  return rep;
}

bool chi_in_X(const ChiParams& p, std::int64_t n) {
  if (n % p.q != ((p.u % p.q) + p.q) % p.q) return false;
  double t = static_cast<double>(n) / static_cast<double>(p.N);
  if (std::fabs(t - p.x) > p.eps) return false;
  for (std::size_t i = 0; i < p.theta.dim(); ++i) {
    double y = p.theta.coords[i] * static_cast<double>(n) - p.z.coords[i];
    if (torus_norm(y) > p.eps) return false;
  }
  return true;
}

bool chi_in_X_minus(const ChiParams& p, std::int64_t n) {
  if (n % p.q != ((p.u % p.q) + p.q) % p.q) return false;
  double cap = p.eps - p.eps_prime;
  double t = static_cast<double>(n) / static_cast<double>(p.N);
  if (std::fabs(t - p.x) > cap) return false;
  for (std::size_t i = 0; i < p.theta.dim(); ++i) {
    double y = p.theta.coords[i] * static_cast<double>(n) - p.z.coords[i];
    if (torus_norm(y) > cap) return false;
  }
  return true;
}

SampledCutoff chi_cutoff(const ChiParams& p) {
  auto d = static_cast<int>(p.theta.dim());
  if (d < 1 || p.z.dim() != p.theta.dim())
    throw precondition_error("chi_cutoff: theta and z must share dimension d >= 1");
  if (p.N < 1 || p.q < 1) throw precondition_error("chi_cutoff: positive N and q required");
  if (!(p.eps > 0.0 && p.eps < 0.25)) throw precondition_error("chi_cutoff: need 0 < eps < 1/4");
  if (!(p.eps_prime > 0.0 && p.eps_prime < p.eps / (10.0 * d)))
    throw precondition_error("chi_cutoff: need 0 < eps' < eps/(10 d)");

  const double half = p.eps_prime / 2.0;
  const double w = p.eps - half;
  const ChiParams params = p;
  SampledCutoff chi;
  chi.domain = CutoffDomain::integers_at_scale;
  chi.scale = p.N;
  chi.mollifier_width = p.eps_prime;
  chi.support_lo = (p.x - p.eps) * static_cast<double>(p.N);
  chi.support_hi = (p.x + p.eps) * static_cast<double>(p.N);
  chi.eval = [params, half, w](const std::vector<double>& pt) {
    double nn = pt[0];
    auto n = static_cast<std::int64_t>(std::llround(nn));
    std::int64_t res = ((params.u % params.q) + params.q) % params.q;
    if (((n % params.q) + params.q) % params.q != res) return 0.0;
    double t = nn / static_cast<double>(params.N);
    double g = base_bump_cdf((t - (params.x - w)) / half) -
               base_bump_cdf((t - (params.x + w)) / half);
    if (g == 0.0) return 0.0;
    double v = g;
    for (std::size_t i = 0; i < params.theta.dim(); ++i) {
      double y = torus_rep(params.theta.coords[i] * nn - params.z.coords[i]);
      v *= mollified_box(y, w, half);
      if (v == 0.0) return 0.0;
    }
    return v;
  };

  // Pointwise sandwich check over the support window (strided past 2e6 points).
  auto lo = static_cast<std::int64_t>(std::floor(chi.support_lo)) - 1;
  auto hi = static_cast<std::int64_t>(std::ceil(chi.support_hi)) + 1;
  std::int64_t count = hi - lo + 1;
  std::int64_t stride = std::max<std::int64_t>(1, count / 2'000'000);
  for (std::int64_t n = std::max<std::int64_t>(lo, 1); n <= hi; n += stride) {
    double v = chi.eval({static_cast<double>(n)});
    if (v < -1e-12 || v > 1.0 + 1e-12)
      throw std::logic_error("chi_cutoff: value outside [0, 1]");
    if (chi_in_X_minus(p, n) && v < 1.0 - 1e-9)
      throw std::logic_error("chi_cutoff: minorant sandwich violated");
    if (v > 1e-9 && !chi_in_X(p, n))
      throw std::logic_error("chi_cutoff: majorant sandwich violated");
  }
  return chi;
}

double integer_mass(const SampledCutoff& psi) {
  if (psi.domain != CutoffDomain::integers_at_scale)
    throw precondition_error("integer_mass: integer-domain cutoff required");
  auto lo = static_cast<std::int64_t>(std::floor(psi.support_lo));
  auto hi = static_cast<std::int64_t>(std::ceil(psi.support_hi));
  if (hi - lo > 100'000'000) throw budget_error("integer_mass: support too large");
  double acc = 0.0;
  for (std::int64_t n = lo; n <= hi; ++n) acc += psi.eval({static_cast<double>(n)});
  return acc;
}

}  // namespace rsl
