#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "rsl/numtheory.hpp"

namespace rsl {

// Phase polynomial g(n) = c_k n^k + ... + c_0, degree <= 8, evaluated mod 1.
// Each double coefficient is split exactly into mantissa * 2^exponent so the
// fractional part of c_j n^j is computed by 128-bit wraparound arithmetic with
// no precision loss at large n.  Coefficients may alternatively be supplied as
// exact rationals, reduced with modular arithmetic.
struct PolynomialPhase {
  std::vector<double> coeffs;            // coeffs[j] multiplies n^j
  std::vector<RationalAngle> rationals;  // same indexing; dens == 0 where unused

  PolynomialPhase() = default;
  explicit PolynomialPhase(std::vector<double> c);
  static PolynomialPhase from_rationals(const std::vector<RationalAngle>& r);

  int degree() const { return coeffs.empty() ? 0 : static_cast<int>(coeffs.size()) - 1; }
  // g(n) mod 1, in [0, 1).
  double phase_mod1(std::int64_t n) const;
};

// Sum of e(g(n)) for n in [lo, hi], compensated (Kahan) summation.
// Requires hi - lo + 1 <= 1e8.
std::complex<double> weyl_sum(const PolynomialPhase& g, std::int64_t lo, std::int64_t hi);

struct WeylReport {
  double delta = 0;     // |sum| / |I|
  std::int64_t q = 0;   // best rational denominator for the leading coefficient
  double distance = 0;  // || q * leading ||
  double leading = 0;   // r . theta, reduced mod 1
};

// Evaluates |E_{n in I} e((r.theta) n^k + lower(n))| and the quality of the
// best rational approximation to the leading coefficient with q <= max(4,|I|).
// Requires r != 0 and k in [1, 8].
WeylReport weyl_check(const TorusVector& theta, const std::vector<std::int64_t>& r, int k,
                      std::int64_t lo, std::int64_t hi, const PolynomialPhase& lower_terms);

struct RepProfile {
  std::vector<std::int64_t> counts;  // counts[x] = #{(a,b,c) in S^3 : a+b+c = x}
  std::int64_t set_size = 0;
};

// Triple representation counts of S + S + S, exact (FFT with integer rounding
// verification, direct-count fallback).  Requires max(S) <= 1e7, S nonempty,
// elements nonnegative.
RepProfile rep_counts_3(const std::vector<std::int64_t>& S);

// sum_x r_{3,S}(x)^2, exact.
std::int64_t sixth_moment(const std::vector<std::int64_t>& S);

struct MomentReport {
  int q = 0;
  double moment = 0;  // grid quadrature of |hat 1_S|^q over [0,1)
  double bound_scale = 0;  // N^{q/2 - 1}
  double ratio = 0;   // moment / bound_scale
};

// Empirical L^q moment of the exponential sum over a power-of-two grid,
// q in {5, 6}.
MomentReport lq_moment_report(const std::vector<std::int64_t>& S, int q);

}  // namespace rsl
