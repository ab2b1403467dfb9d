#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "rsl/numtheory.hpp"

namespace rsl {

// C exp(1/(x^2-1)) for |x| < 1, else 0, with C chosen so the integral is 1.
double base_bump(double x);
// Integral of base_bump over (-1, x], exact 0/1 clamping outside (-1, 1).
double base_bump_cdf(double x);
// The normalizing constant C (1 / integral of exp(1/(x^2-1))).
double base_bump_constant();

enum class CutoffDomain { real_line, integers_at_scale, torus };

struct SampledCutoff {
  CutoffDomain domain = CutoffDomain::real_line;
  int dim = 1;  // torus dimension; 1 otherwise
  std::function<double(const std::vector<double>&)> eval;
  // Tensor factor for torus cutoffs built coordinatewise (empty otherwise).
  std::function<double(double)> factor1d;
  double support_lo = 0, support_hi = 0;  // line / integer domains
  double support_radius = 0;              // torus: sup-norm radius
  double mollifier_width = 0;             // eps' of the convolution, 0 if n/a
  std::int64_t scale = 0;                 // N for integers_at_scale
  int grid = 1 << 14;                     // default quadrature resolution

  double operator()(double x) const { return eval(std::vector<double>{x}); }
  double at(const std::vector<double>& x) const { return eval(x); }
};

// Cutoff equal to 1 on [N, 2N), supported in [0, 3N] (trapezoid) or [-N, 4N]
// (smooth: 1_{[0,3]} convolved with the bump, rescaled).  Requires N >= 16.
SampledCutoff interval_majorant(std::int64_t N, bool smooth_variant = false);

// Sharp cutoff 1_{[N,2N)} as a contrast case for the norm growth check.
SampledCutoff interval_sharp(std::int64_t N);

// Trapezoid-rule integral of |sum_n psi(n) e(-tn)| over the torus, grid points
// >= 2^14.  Bounded uniformly in N for the trapezoid kernel, ~log N sharp.
double l1_fourier_norm(const SampledCutoff& psi, std::int64_t grid);

// Majorant / minorant of the sup-norm ball B_eps(0) on T^d: indicator of
// B_{eps +- eps'} convolved with the product mollifier of width eps',
// eps' = eps/(10 d).  Both take values in [0,1]; psi_plus = 1 on B_eps;
// psi_minus = 0 outside B_eps and 1 on B_{eps - 2 eps'}.
// Requires 0 < eps < 1/4 and 1 <= d <= 3.
SampledCutoff torus_majorant(double eps, int d);
SampledCutoff torus_minorant(double eps, int d);

// Integral over T^d (tensor product of the 1-d factor integrals).
double torus_integral(const SampledCutoff& psi);

struct FourierTable {
  int dim = 1;
  std::int64_t radius = 0;
  // 1-d factor coefficients, index j + radius for j in [-radius, radius];
  // the d-dim coefficient at r is the product of axis values.
  std::vector<std::complex<double>> axis;
  double quad_error = 0;  // max |change| when the grid is doubled

  std::complex<double> coeff(const std::vector<std::int64_t>& r) const;
};

struct DecayReport {
  FourierTable table;
  double partial_sum = 0;       // sum over 0 < ||r||inf <= radius of |psi^(r)| ||r||_1
  double fitted_exponent = 0;   // slope of log|axis(j)| vs log j over the fit window
  std::int64_t fit_lo = 0, fit_hi = 0;
};

// Fourier table + l1-weighted partial sum + power-law decay fit for a torus
// cutoff with a tensor factor.  Throws if the grid-doubling error estimate
// exceeds 1% of the smallest tabulated coefficient magnitude.
DecayReport torus_fourier_decay(const SampledCutoff& psi, std::int64_t radius);

struct ChiParams {
  std::int64_t N = 0;
  std::int64_t q = 1;
  std::int64_t u = 0;        // residue class mod q
  double x = 1.0;            // centre of the scaled window, in [0, 4]
  double eps = 0.1;
  double eps_prime = 0.0;    // must satisfy eps_prime < eps / (10 d)
  TorusVector theta;         // d >= 1, supplied irrationality-certified
  TorusVector z;
};

// chi(n) = g(n/N) h(theta n) 1_{n = u mod q} with g the mollified window
// indicator and h the mollified ball indicator at z; satisfies
// 1_{X_minus} <= chi <= 1_X pointwise (verified on the support window at
// construction; violation throws logic_error).
SampledCutoff chi_cutoff(const ChiParams& p);

// Membership in X (window eps) and X_minus (window eps - eps_prime).
bool chi_in_X(const ChiParams& p, std::int64_t n);
bool chi_in_X_minus(const ChiParams& p, std::int64_t n);

// Sum of an integer-domain cutoff over its support window.
double integer_mass(const SampledCutoff& psi);

}  // namespace rsl
