#include "rsl/twosquares.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace rsl {

TwoSquareResult approx_simple(std::int64_t n) {
  if (n < 2) throw precondition_error("approx_simple: n must be >= 2");
  TwoSquareResult r;
  r.n1 = isqrt64(n);
  std::int64_t rem = n - r.n1 * r.n1;
  r.n2 = isqrt64(rem);
  r.error = r.n1 * r.n1 + r.n2 * r.n2 - n;
  r.k = 0;
  r.degenerate = (r.n2 == 0);
  r.c_measured = static_cast<double>(std::llabs(r.error)) / std::sqrt(static_cast<double>(n));
  return r;
}

TwoSquareResult approx_balanced(std::int64_t n) {
  if (n < 2) throw precondition_error("approx_balanced: n must be >= 2");
  std::int64_t base = isqrt64(n / 2);
  auto value = [&](std::int64_t k) {
    std::int64_t n1 = base + k;
    std::int64_t n2 = std::max<std::int64_t>(base - k, 0);
    return n1 * n1 + n2 * n2;
  };
  // value(k) = 2 base^2 + 2k^2 while n2 > 0: strictly increasing, starts <= n.
  std::int64_t k = 0;
  while (value(k) < n) ++k;
  std::int64_t k_best = k;
  if (k > 0 && std::llabs(value(k - 1) - n) <= std::llabs(value(k) - n)) k_best = k - 1;
  TwoSquareResult r;
  r.k = k_best;
  r.n1 = base + k_best;
  r.n2 = std::max<std::int64_t>(base - k_best, 0);
  r.error = r.n1 * r.n1 + r.n2 * r.n2 - n;
  r.degenerate = (r.n2 == 0);
  r.c_measured = static_cast<double>(std::llabs(r.error)) / std::sqrt(static_cast<double>(n));
  return r;
}

std::optional<SlopeChoice> select_slope(double gamma, const Box& bounds, std::int64_t height) {
  const double a1 = bounds.a1, b1 = bounds.b1, a2 = bounds.a2, b2 = bounds.b2;
  if (!(0 <= a1 && a1 < b1 && 0 <= a2 && a2 < b2))
    throw precondition_error("select_slope: malformed box");
  if (!(a1 * a1 + a2 * a2 < gamma && gamma < b1 * b1 + b2 * b2))
    throw precondition_error("select_slope: gamma outside the box norm range");
  if (height < 1) throw precondition_error("select_slope: height must be >= 1");

  // t1 ranges over [t_lo, t_hi]; lambda = t1 / sqrt(gamma - t1^2) is increasing.
  double t_lo = std::max(a1, std::sqrt(std::max(0.0, gamma - b2 * b2)));
  double t_hi = std::min(b1, std::sqrt(gamma - a2 * a2));
  if (!(t_lo < t_hi)) throw precondition_error("select_slope: empty slope interval");
  double den_lo = gamma - t_lo * t_lo;  // t2^2 at the left endpoint
  double den_hi = gamma - t_hi * t_hi;
  double lam_lo = t_lo / std::sqrt(den_lo);
  double lam_hi = den_hi > 0 ? t_hi / std::sqrt(den_hi)
                             : std::numeric_limits<double>::infinity();
  if (!(lam_lo < lam_hi)) throw precondition_error("select_slope: empty slope interval");

  double len = lam_hi - lam_lo;
  double mid_lo, mid_hi;
  if (std::isinf(lam_hi)) {  // degenerate upper end (t2 can reach 0)
    mid_lo = 2 * lam_lo;
    mid_hi = std::numeric_limits<double>::infinity();
  } else {
    double c = 0.5 * (lam_lo + lam_hi);
    mid_lo = c - 0.25 * len;
    mid_hi = c + 0.25 * len;
  }

  for (std::int64_t b = 1; b <= height; ++b) {
    auto a_from = static_cast<std::int64_t>(std::ceil(mid_lo * static_cast<double>(b)));
    a_from = std::max<std::int64_t>(a_from, 1);
    std::int64_t a_to = std::isinf(mid_hi)
                            ? height
                            : static_cast<std::int64_t>(std::floor(mid_hi * static_cast<double>(b)));
    a_to = std::min(a_to, height);
    for (std::int64_t a = a_from; a <= a_to; ++a) {
      if (std::gcd(a, b) != 1) continue;
      SlopeChoice s;
      s.a = a;
      s.b = b;
      s.lambda_lo = lam_lo;
      s.lambda_hi = lam_hi;
      double hyp = std::sqrt(static_cast<double>(a) * static_cast<double>(a) +
                             static_cast<double>(b) * static_cast<double>(b));
      s.t1 = std::sqrt(gamma) * static_cast<double>(a) / hyp;
      s.t2 = std::sqrt(gamma) * static_cast<double>(b) / hyp;
      s.margin = std::min(std::min(s.t1 - a1, b1 - s.t1), std::min(s.t2 - a2, b2 - s.t2));
      return s;
    }
  }
  return std::nullopt;
}

TwoSquareResult approx_constrained(std::int64_t n, const Progression& P1, const Progression& P2,
                                   std::pair<double, double> gammas) {
  if (P1.q != P2.q || P1.scale != P2.scale)
    throw precondition_error("approx_constrained: progressions must share modulus and scale");
  const std::int64_t q = P1.q;
  const std::int64_t N = P1.scale;
  if (n < 1 || N < 1) throw precondition_error("approx_constrained: positive n and scale required");
  const double g1 = gammas.first, g2 = gammas.second;
  const double norm_lo = P1.lo * P1.lo + P2.lo * P2.lo;
  const double norm_hi = P1.hi * P1.hi + P2.hi * P2.hi;
  if (!(norm_lo < g1 && g1 <= g2 && g2 < norm_hi))
    throw precondition_error("approx_constrained: gamma window outside box norm range");
  const double gamma = static_cast<double>(n) / (static_cast<double>(N) * static_cast<double>(N));
  if (!(g1 <= gamma && gamma <= g2))
    throw precondition_error("approx_constrained: n/N^2 outside the gamma window");

  Box box{P1.lo, P1.hi, P2.lo, P2.hi};
  for (std::int64_t height = 1;; height *= 2) {
    std::optional<SlopeChoice> slope = select_slope(gamma, box, height);
    if (!slope) {
      if (height > (1 << 20)) throw walk_error("approx_constrained: no rational slope found");
      continue;
    }
    const std::int64_t A0 =
        q * static_cast<std::int64_t>(std::floor(slope->t1 * static_cast<double>(N) /
                                                 static_cast<double>(q)));
    const std::int64_t B0 =
        q * static_cast<std::int64_t>(std::floor(slope->t2 * static_cast<double>(N) /
                                                 static_cast<double>(q)));
    auto inside = [&](std::int64_t k) {
      return P1.contains(A0 + q * k * slope->b) && P2.contains(B0 - q * k * slope->a);
    };
    auto value = [&](std::int64_t k) {
      std::int64_t n1 = A0 + q * k * slope->b;
      std::int64_t n2 = B0 - q * k * slope->a;
      return n1 * n1 + n2 * n2;
    };
    if (!inside(0)) {
      if (height > (1 << 20)) throw walk_error("approx_constrained: start outside boxes");
      continue;  // a taller slope lands deeper inside the box
    }
    std::int64_t k = 0;
    bool exited = false;
    while (value(k) < n) {
      ++k;
      if (!inside(k)) {
        exited = true;
        break;
      }
    }
    if (exited) {
      if (height > (1 << 20))
        throw walk_error("approx_constrained: walk left the boxes before bracketing n");
      continue;
    }
    std::int64_t k_best = k;
    if (k > 0 && std::llabs(value(k - 1) - n) <= std::llabs(value(k) - n)) k_best = k - 1;
    TwoSquareResult r;
    r.k = k_best;
    r.n1 = A0 + q * k_best * slope->b;
    r.n2 = B0 - q * k_best * slope->a;
    r.error = r.n1 * r.n1 + r.n2 * r.n2 - n;
    r.degenerate = (r.n2 == 0);
    r.c_measured = static_cast<double>(std::llabs(r.error)) / std::sqrt(static_cast<double>(N));
    return r;
  }
}

}  // namespace rsl
