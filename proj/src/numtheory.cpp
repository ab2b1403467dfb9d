#include "rsl/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace rsl {

std::vector<std::int64_t> progression_elements(const Progression& p, std::int64_t budget) {
  if (p.q < 1 || p.scale < 1) throw precondition_error("progression: q and scale must be positive");
  if (p.lo > p.hi) return {};
  double lov = p.lo * static_cast<double>(p.scale);
  double hiv = p.hi * static_cast<double>(p.scale);
  auto k_lo = static_cast<std::int64_t>(std::floor(lov / static_cast<double>(p.q))) - 1;
  auto k_hi = static_cast<std::int64_t>(std::ceil(hiv / static_cast<double>(p.q))) + 1;
  if (k_hi - k_lo > budget + 2)
    throw budget_error("progression_elements: window exceeds element budget");
  std::vector<std::int64_t> out;
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    std::int64_t n = k * p.q;
    if (p.contains(n)) out.push_back(n);
  }
  return out;
}

TorusVector::TorusVector(std::vector<double> c) : coords(std::move(c)) {
  for (double& x : coords) {
    x -= std::floor(x);
    if (x >= 1.0) x = 0.0;  // guard against floor rounding at the seam
  }
}

double torus_norm(double x) {
  double r = x - std::floor(x);
  return std::min(r, 1.0 - r);
}

double torus_norm(const TorusVector& x) {
  double m = 0.0;
  for (double c : x.coords) m = std::max(m, torus_norm(c));
  return m;
}

std::int64_t sqrt_count(std::int64_t b, std::int64_t q) {
  if (q < 1) throw precondition_error("sqrt_count: modulus must be positive");
  std::int64_t bb = ((b % q) + q) % q;
  std::int64_t count = 0;
  for (std::int64_t x = 0; x < q; ++x)
    if ((x * x) % q == bb) ++count;
  return count;
}

std::vector<std::int64_t> qr_set(std::int64_t q) {
  if (q < 1) throw precondition_error("qr_set: modulus must be positive");
  std::vector<bool> seen(static_cast<std::size_t>(q), false);
  for (std::int64_t x = 0; x < q; ++x) seen[static_cast<std::size_t>((x * x) % q)] = true;
  std::vector<std::int64_t> out;
  for (std::int64_t v = 0; v < q; ++v)
    if (seen[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

std::vector<std::int64_t> sqrt_residues(std::int64_t b, std::int64_t q) {
  if (q < 1) throw precondition_error("sqrt_residues: modulus must be positive");
  std::int64_t bb = ((b % q) + q) % q;
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x < q; ++x)
    if ((x * x) % q == bb) out.push_back(x);
  return out;
}

namespace {

// Enumerates nonzero integer vectors r with |r|_1 <= a, first nonzero
// coordinate positive (sign symmetry), invoking fn(r).  Returns false early
// if fn returns false.
bool for_each_l1_vector(std::vector<std::int64_t>& r, std::size_t i, std::int64_t a,
                        bool nonzero_seen, std::int64_t& visited, std::int64_t budget,
                        const std::function<bool(const std::vector<std::int64_t>&)>& fn) {
  if (i == r.size()) {
    if (!nonzero_seen) return true;
    if (++visited > budget) throw budget_error("is_irrational: lattice ball exceeds budget");
    return fn(r);
  }
  std::int64_t lo = nonzero_seen ? -a : 0;  // first nonzero coordinate positive
  for (std::int64_t v = lo; v <= a; ++v) {
    r[i] = v;
    std::int64_t rest = a - std::llabs(v);
    if (!for_each_l1_vector(r, i + 1, rest, nonzero_seen || v != 0, visited, budget, fn))
      return false;
  }
  r[i] = 0;
  return true;
}

}  // namespace

bool is_irrational(const TorusVector& theta, double A, std::int64_t N, std::int64_t budget) {
  if (A < 1 || N < 1) throw precondition_error("is_irrational: need A >= 1 and N >= 1");
  if (theta.dim() == 0) return true;  // no vectors to test
  auto a = static_cast<std::int64_t>(std::floor(A));
  double bound = A / static_cast<double>(N);
  std::vector<std::int64_t> r(theta.dim(), 0);
  std::int64_t visited = 0;
  return for_each_l1_vector(r, 0, a, false, visited, budget,
                            [&](const std::vector<std::int64_t>& v) {
                              double dot = 0.0;
                              for (std::size_t i = 0; i < v.size(); ++i)
                                dot += static_cast<double>(v[i]) * theta.coords[i];
                              return torus_norm(dot) >= bound;
                            });
}

bool is_irrational(const std::vector<RationalAngle>& theta, double A, std::int64_t N,
                   std::int64_t budget) {
  if (A < 1 || N < 1) throw precondition_error("is_irrational: need A >= 1 and N >= 1");
  if (theta.empty()) return true;
  std::int64_t den = 1;
  for (const auto& t : theta) {
    if (t.den <= 0) throw precondition_error("is_irrational: denominators must be positive");
    std::int64_t g = std::gcd(den, t.den);
    if (t.den / g > std::numeric_limits<std::int64_t>::max() / den)
      throw precondition_error("is_irrational: common denominator overflow");
    den = den / g * t.den;
  }
  auto a = static_cast<std::int64_t>(std::floor(A));
  std::vector<std::int64_t> r(theta.size(), 0);
  std::int64_t visited = 0;
  return for_each_l1_vector(
      r, 0, a, false, visited, budget, [&](const std::vector<std::int64_t>& v) {
        __int128 num = 0;  // r . theta = num / den, exact
        for (std::size_t i = 0; i < v.size(); ++i)
          num += static_cast<__int128>(v[i]) * (den / theta[i].den) * theta[i].num;
        __int128 m = num % den;
        if (m < 0) m += den;
        __int128 dist_num = std::min(m, static_cast<__int128>(den) - m);
        // ||r.theta|| >= A/N  <=>  dist_num * N >= A * den
        return static_cast<double>(dist_num) * static_cast<double>(N) >=
               A * static_cast<double>(den);
      });
}

RationalApprox best_rational_approx(double alpha, std::int64_t q_max) {
  if (q_max < 1) throw precondition_error("best_rational_approx: q_max must be >= 1");
  double frac = alpha - std::floor(alpha);
  RationalApprox best{1, 0, torus_norm(alpha)};
  best.p = std::llround(alpha);
  if (frac == 0.0) return best;

  // Exact dyadic representation frac = num / 2^s.
  int e = 0;
  double mant = std::frexp(frac, &e);  // frac = mant * 2^e, mant in [1/2, 1)
  int s = 53 - e;
  if (s > 126) {
    // Coefficient below 2^-73: q * frac stays far below 1/2 for any feasible
    // q, so q = 1 already minimizes the distance.
    return best;
  }
  auto num = static_cast<unsigned __int128>(std::ldexp(mant, 53));  // < 2^53
  unsigned __int128 den = static_cast<unsigned __int128>(1) << s;

  auto dist_of = [&](std::int64_t q) {
    unsigned __int128 r = (static_cast<unsigned __int128>(q) * num) % den;
    unsigned __int128 d = std::min(r, den - r);
    return std::ldexp(static_cast<double>(d), -s);
  };

  // Continued-fraction convergent denominators of num/den; the largest
  // convergent denominator <= q_max minimizes ||q alpha||.  frac < 1, so the
  // integer part is 0 and Euclid runs on den/num.
  unsigned __int128 a = den, b = num;
  std::int64_t q_prev = 0, q_cur = 1;
  std::int64_t best_q = 1;
  while (b != 0) {
    unsigned __int128 coef = a / b;
    unsigned __int128 rem = a % b;
    // next denominator q = coef * q_cur + q_prev, watching q_max
    if (coef > static_cast<unsigned __int128>((q_max - q_prev) / (q_cur ? q_cur : 1))) {
      break;  // even the smallest step past q_cur exceeds q_max
    }
    std::int64_t q_next = static_cast<std::int64_t>(coef) * q_cur + q_prev;
    if (q_next > q_max) break;
    q_prev = q_cur;
    q_cur = q_next;
    best_q = q_cur;
    a = b;
    b = rem;
  }
  best.q = best_q;
  best.distance = dist_of(best_q);
  // q = 1 beats or ties any convergent when q_1 > q_max.
  double d1 = dist_of(1);
  if (d1 < best.distance || (d1 == best.distance && 1 < best.q)) {
    best.q = 1;
    best.distance = d1;
  }
  best.p = std::llround(static_cast<double>(best.q) * alpha);
  return best;
}

}  // namespace rsl
