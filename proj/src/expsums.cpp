#include "rsl/expsums.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rsl/fft.hpp"

namespace rsl {

namespace {

// Fixed-width little-endian bignum, value mod 2^(64*Limbs).  Only the low
// bits matter: products are truncated, which is exactly reduction mod 2^s.
template <int Limbs>
struct TruncU {
  std::uint64_t w[Limbs] = {0};

  static TruncU from_u64(std::uint64_t v) {
    TruncU r;
    r.w[0] = v;
    return r;
  }

  TruncU mul(const TruncU& o) const {
    TruncU r;
    for (int i = 0; i < Limbs; ++i) {
      if (w[i] == 0) continue;
      std::uint64_t carry = 0;
      for (int j = 0; i + j < Limbs; ++j) {
        unsigned __int128 cur = static_cast<unsigned __int128>(w[i]) * o.w[j] + r.w[i + j] + carry;
        r.w[i + j] = static_cast<std::uint64_t>(cur);
        carry = static_cast<std::uint64_t>(cur >> 64);
      }
    }
    return r;
  }

  // Top 64 bits of (value mod 2^s) / 2^s, i.e. the fractional part to 64 bits.
  double frac_given_mod(int s) const {
    // value mod 2^s: mask the high limb; then take bits [s-64, s).
    std::uint64_t top = 0;
    for (int bit = 0; bit < 64; ++bit) {
      int pos = s - 1 - bit;
      if (pos < 0) break;
      std::uint64_t b = (w[pos / 64] >> (pos % 64)) & 1u;
      top |= b << (63 - bit);
    }
    return static_cast<double>(top) * 0x1p-64;
  }
};

// Fractional part of c * n^j for a double coefficient c, exact reduction.
double frac_coeff_power(double c, std::int64_t n, int j) {
  if (c == 0.0) return 0.0;
  double cc = c - std::floor(c);  // integer parts of c contribute 0 mod 1
  if (cc == 0.0) return 0.0;
  if (j == 0) return cc;
  int e = 0;
  double mant = std::frexp(cc, &e);  // cc = mant * 2^e
  int s = 53 - e;                    // cc = m / 2^s with m < 2^53
  if (s <= 0) return 0.0;            // cc integral (cannot happen here)
  auto m = static_cast<std::uint64_t>(std::ldexp(mant, 53));
  std::uint64_t un = static_cast<std::uint64_t>(n < 0 ? -n : n);

  double f;
  if (s <= 127) {
    // m * n^j mod 2^s via wrapping 128-bit products.
    unsigned __int128 mask =
        s == 127 ? (~static_cast<unsigned __int128>(0)) >> 1
                 : ((static_cast<unsigned __int128>(1) << s) - 1);
    unsigned __int128 p = 1;
    for (int t = 0; t < j; ++t) p = (p * un) & mask;
    p = (p * m) & mask;
    f = std::ldexp(static_cast<double>(p), -s);
  } else {
    // Rare: |c| < 2^-74.  Full truncated bignum, up to 2^1216 wide.
    constexpr int L = 19;  // 19*64 = 1216 >= s_max (1127) + headroom
    if (s > 64 * L - 64) return 0.0;  // coefficient subnormal-small: below 2^-1010
    TruncU<L> p = TruncU<L>::from_u64(1);
    TruncU<L> base = TruncU<L>::from_u64(un);
    for (int t = 0; t < j; ++t) p = p.mul(base);
    p = p.mul(TruncU<L>::from_u64(m));
    f = p.frac_given_mod(s);
  }
  if (n < 0 && (j % 2) == 1 && f != 0.0) f = 1.0 - f;  // (-n)^j = -(n^j)
  return f;
}

double frac_rational_power(const RationalAngle& r, std::int64_t n, int j) {
  std::int64_t q = r.den;
  std::int64_t p = ((r.num % q) + q) % q;
  std::int64_t nn = ((n % q) + q) % q;
  auto mulmod = [&](std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % q);
  };
  std::int64_t pw = 1 % q;  // nn = n mod q carries the sign already
  for (int t = 0; t < j; ++t) pw = mulmod(pw, nn);
  std::int64_t num = mulmod(p, pw);
  return static_cast<double>(num) / static_cast<double>(q);
}

}  // namespace

PolynomialPhase::PolynomialPhase(std::vector<double> c) : coeffs(std::move(c)) {
  if (coeffs.size() > 9) throw precondition_error("PolynomialPhase: degree must be <= 8");
}

PolynomialPhase PolynomialPhase::from_rationals(const std::vector<RationalAngle>& r) {
  if (r.size() > 9) throw precondition_error("PolynomialPhase: degree must be <= 8");
  PolynomialPhase g;
  g.rationals = r;
  g.coeffs.resize(r.size(), 0.0);
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j].den < 1) throw precondition_error("PolynomialPhase: denominators must be positive");
    g.coeffs[j] = static_cast<double>(r[j].num) / static_cast<double>(r[j].den);
  }
  return g;
}

double PolynomialPhase::phase_mod1(std::int64_t n) const {
  double acc = 0.0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    double term;
    if (j < rationals.size() && rationals[j].den != 0)
      term = frac_rational_power(rationals[j], n, static_cast<int>(j));
    else
      term = frac_coeff_power(coeffs[j], n, static_cast<int>(j));
    acc += term;
    if (acc >= 1.0) acc -= 1.0;
  }
  return acc;
}

std::complex<double> weyl_sum(const PolynomialPhase& g, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) return {0.0, 0.0};
  if (hi - lo + 1 > 100'000'000) throw precondition_error("weyl_sum: interval too large");
  double sr = 0.0, cr = 0.0;  // Kahan compensated sums
  double si = 0.0, ci = 0.0;
  for (std::int64_t n = lo; n <= hi; ++n) {
    double ph = 2.0 * std::numbers::pi * g.phase_mod1(n);
    double x = std::cos(ph), y = std::sin(ph);
    double tr = sr + x;
    cr += std::fabs(sr) >= std::fabs(x) ? (sr - tr) + x : (x - tr) + sr;
    sr = tr;
    double ti = si + y;
    ci += std::fabs(si) >= std::fabs(y) ? (si - ti) + y : (y - ti) + si;
    si = ti;
  }
  return {sr + cr, si + ci};
}

WeylReport weyl_check(const TorusVector& theta, const std::vector<std::int64_t>& r, int k,
                      std::int64_t lo, std::int64_t hi, const PolynomialPhase& lower_terms) {
  if (r.size() != theta.dim()) throw precondition_error("weyl_check: r and theta dim mismatch");
  if (k < 1 || k > 8) throw precondition_error("weyl_check: degree must be in [1, 8]");
  bool nonzero = false;
  for (std::int64_t v : r) nonzero = nonzero || v != 0;
  if (!nonzero) throw precondition_error("weyl_check: r must be nonzero");
  if (static_cast<int>(lower_terms.coeffs.size()) > k)
    throw precondition_error("weyl_check: lower terms must have degree < k");

  double leading = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i)
    leading += static_cast<double>(r[i]) * theta.coords[i];
  leading -= std::floor(leading);

  PolynomialPhase g = lower_terms;
  g.coeffs.resize(static_cast<std::size_t>(k) + 1, 0.0);
  g.coeffs[static_cast<std::size_t>(k)] += leading;

  WeylReport rep;
  std::int64_t len = hi - lo + 1;
  rep.delta = std::abs(weyl_sum(g, lo, hi)) / static_cast<double>(len);
  rep.leading = leading;
  RationalApprox ra = best_rational_approx(leading, std::max<std::int64_t>(4, len));
  rep.q = ra.q;
  rep.distance = ra.distance;
  return rep;
}

RepProfile rep_counts_3(const std::vector<std::int64_t>& S) {
  if (S.empty()) throw precondition_error("rep_counts_3: empty set");
  std::vector<std::int64_t> v = S;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.front() < 0) throw precondition_error("rep_counts_3: elements must be nonnegative");
  if (v.back() > 10'000'000) throw precondition_error("rep_counts_3: max element exceeds 1e7");
  RepProfile p;
  p.set_size = static_cast<std::int64_t>(v.size());
  p.counts = autoconvolve3_counts(v, 3 * v.back());
  return p;
}

std::int64_t sixth_moment(const std::vector<std::int64_t>& S) {
  RepProfile p = rep_counts_3(S);
  std::int64_t acc = 0;
  for (std::int64_t c : p.counts) acc += c * c;
  return acc;
}

MomentReport lq_moment_report(const std::vector<std::int64_t>& S, int q) {
  if (q != 5 && q != 6) throw precondition_error("lq_moment_report: q must be 5 or 6");
  if (S.empty()) throw precondition_error("lq_moment_report: empty set");
  std::vector<std::int64_t> v = S;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.front() < 0 || v.back() > 2'000'000)
    throw precondition_error("lq_moment_report: elements out of range");
  std::size_t G = 1 << 16;
  while (G < 4 * static_cast<std::size_t>(v.back()) + 4) G <<= 1;
  std::vector<std::complex<double>> a(G, {0.0, 0.0});
  for (std::int64_t x : v) a[static_cast<std::size_t>(x)] = {1.0, 0.0};
  fft_inplace(a, false);
  double acc = 0.0;
  for (const auto& z : a) acc += std::pow(std::abs(z), q);
  MomentReport rep;
  rep.q = q;
  rep.moment = acc / static_cast<double>(G);
  rep.bound_scale = std::pow(static_cast<double>(v.back()), q / 2.0 - 1.0);
  rep.ratio = rep.moment / rep.bound_scale;
  return rep;
}

}  // namespace rsl
