#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here is deliberately naive: correctness over speed, and no code
// shared with src/.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "rsl/colouring.hpp"
#include "rsl/numtheory.hpp"

namespace oracle {

using std::int64_t;

// All monochromatic x + y = z^2 with x <= y, every member in [lo, hi],
// by direct triple enumeration.
inline std::vector<std::tuple<int64_t, int64_t, int64_t>> mono_solutions(
    const rsl::Colouring& c, bool include_trivial) {
  std::vector<std::tuple<int64_t, int64_t, int64_t>> out;
  for (int64_t z = c.lo; z <= c.hi; ++z) {
    if (z * z > 2 * c.hi) break;
    for (int64_t x = c.lo; 2 * x <= z * z; ++x) {
      int64_t y = z * z - x;
      if (y < c.lo || y > c.hi) continue;
      int cc = c.colour_of(x);
      if (cc != c.colour_of(y) || cc != c.colour_of(z)) continue;
      if (!include_trivial && x == 2 && y == 2 && z == 2) continue;
      out.emplace_back(x, y, z);
    }
  }
  return out;
}

// Does [1, n] admit a 2-colouring with no nontrivial monochromatic solution?
// Plain DFS over assignments in increasing order; a triple is checked as soon
// as its largest member is coloured.
inline bool two_colourable(int64_t n) {
  std::vector<std::array<int64_t, 3>> triples;  // x <= y, x + y = z^2
  for (int64_t z = 2; z * z <= 2 * n; ++z) {
    if (z > n) break;
    for (int64_t x = 1; 2 * x <= z * z; ++x) {
      int64_t y = z * z - x;
      if (y > n) continue;
      if (x == 2 && y == 2 && z == 2) continue;
      triples.push_back({x, y, z});
    }
  }
  std::vector<std::vector<std::size_t>> by_max(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < triples.size(); ++i) {
    int64_t m = std::max({triples[i][0], triples[i][1], triples[i][2]});
    by_max[static_cast<std::size_t>(m)].push_back(i);
  }
  std::vector<int> col(static_cast<std::size_t>(n) + 1, -1);
  std::function<bool(int64_t)> go = [&](int64_t v) -> bool {
    if (v > n) return true;
    int lim = (v == 1) ? 1 : 2;  // colour(1) = 0 w.l.o.g.
    for (int c = 0; c < lim; ++c) {
      col[static_cast<std::size_t>(v)] = c;
      bool ok = true;
      for (std::size_t ti : by_max[static_cast<std::size_t>(v)]) {
        const auto& t = triples[ti];
        if (col[static_cast<std::size_t>(t[0])] == col[static_cast<std::size_t>(t[1])] &&
            col[static_cast<std::size_t>(t[1])] == col[static_cast<std::size_t>(t[2])]) {
          ok = false;
          break;
        }
      }
      if (ok && go(v + 1)) return true;
    }
    col[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  return go(1);
}

// Smallest n for which no valid 2-colouring of [1, n] exists.
inline int64_t two_colour_threshold(int64_t cap = 100) {
  for (int64_t n = 1; n <= cap; ++n)
    if (!two_colourable(n)) return n;
  return -1;
}

// Exhaustive ||q alpha|| minimizer over 1 <= q <= q_max, exact: alpha is
// decomposed as m / 2^s and distances are compared as integers over the
// common denominator 2^s.
struct BestRational {
  int64_t q = 1;
  double distance = 0;
};

inline BestRational best_rational_scan(double alpha, int64_t q_max) {
  // alpha = m / 2^s with s >= 0 (exact for every finite double).
  long double a = alpha;
  int64_t m = 0;
  int s = 0;
  {
    double frac = alpha - std::floor(alpha);
    int e = 0;
    double mant = std::frexp(frac, &e);  // frac = mant * 2^e, mant in [0.5, 1)
    // mant * 2^53 is integral for doubles.
    m = static_cast<int64_t>(std::ldexp(mant, 53));
    s = 53 - e;
    while (s > 0 && m % 2 == 0) {
      m /= 2;
      --s;
    }
  }
  if (s > 120) {  // outside the exact-comparison range; callers avoid this
    BestRational b;
    b.q = 1;
    b.distance = 1.0;
    for (int64_t q = 1; q <= q_max; ++q) {
      long double v = std::fabs(std::remainder(q * a, 1.0L));
      if (static_cast<double>(v) < b.distance - 1e-18) {
        b.distance = static_cast<double>(v);
        b.q = q;
      }
    }
    return b;
  }
  const __int128 den = static_cast<__int128>(1) << s;
  __int128 best_num = den;  // distance numerator, start above any possible value
  int64_t best_q = 1;
  for (int64_t q = 1; q <= q_max; ++q) {
    __int128 num = (static_cast<__int128>(q) * m) % den;
    __int128 dist = num <= den - num ? num : den - num;
    if (dist < best_num) {
      best_num = dist;
      best_q = q;
      if (dist == 0) break;  // smallest q attaining 0 wins every tie
    }
  }
  BestRational b;
  b.q = best_q;
  b.distance = static_cast<double>(static_cast<long double>(best_num) /
                                   static_cast<long double>(den));
  return b;
}

// Brute-force (A, N)-irrationality: every nonzero |r|_1 <= A must have
// ||r . theta|| >= A / N.  Recursion over coordinates.
inline bool irrational_brute(const std::vector<double>& theta, double A, int64_t N) {
  int64_t bound = static_cast<int64_t>(std::floor(A));
  bool ok = true;
  std::vector<int64_t> r(theta.size(), 0);
  std::function<void(std::size_t, int64_t)> rec = [&](std::size_t i, int64_t used) {
    if (!ok) return;
    if (i == theta.size()) {
      bool zero = true;
      for (int64_t v : r) zero = zero && v == 0;
      if (zero) return;
      double dot = 0;
      for (std::size_t j = 0; j < r.size(); ++j) dot += static_cast<double>(r[j]) * theta[j];
      double dist = std::fabs(dot - std::round(dot));
      if (dist < A / static_cast<double>(N)) ok = false;
      return;
    }
    for (int64_t v = -(bound - used); v <= bound - used; ++v) {
      r[i] = v;
      rec(i + 1, used + std::llabs(v));
    }
    r[i] = 0;
  };
  rec(0, 0);
  return ok;
}

// r_{3,S} by direct triple loop: counts[x] = #{(a,b,c) in S^3 : a+b+c = x}.
inline std::vector<int64_t> r3_naive(const std::vector<int64_t>& S) {
  int64_t mx = 0;
  for (int64_t v : S) mx = std::max(mx, v);
  std::vector<int64_t> counts(static_cast<std::size_t>(3 * mx) + 1, 0);
  for (int64_t a : S)
    for (int64_t b : S)
      for (int64_t c : S) ++counts[static_cast<std::size_t>(a + b + c)];
  return counts;
}

// Largest subset S of Z/q with (S+S) disjoint from the squares mod q, by full
// enumeration over subsets of the self-compatible residues (q <= 24 or so).
inline int64_t qr_free_max_brute(int64_t q) {
  std::vector<char> is_qr(static_cast<std::size_t>(q), 0);
  for (int64_t x = 0; x < q; ++x) is_qr[static_cast<std::size_t>((x * x) % q)] = 1;
  std::vector<int> cand;
  for (int64_t x = 0; x < q; ++x)
    if (!is_qr[static_cast<std::size_t>((2 * x) % q)]) cand.push_back(static_cast<int>(x));
  const int c = static_cast<int>(cand.size());
  std::vector<std::uint64_t> conflict(static_cast<std::size_t>(c), 0);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j)
      if (is_qr[static_cast<std::size_t>((cand[static_cast<std::size_t>(i)] +
                                          cand[static_cast<std::size_t>(j)]) %
                                         q)])
        conflict[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
  int64_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    bool ok = true;
    for (int i = 0; i < c && ok; ++i)
      if ((mask >> i) & 1)
        if (mask & conflict[static_cast<std::size_t>(i)]) ok = false;
    if (ok) best = std::max<int64_t>(best, __builtin_popcountll(mask));
  }
  return best;
}

// Every pairwise sum of S (doubles included) avoids the squares mod q.
inline bool qr_free_valid(const std::vector<int64_t>& S, int64_t q) {
  std::set<int64_t> qr;
  for (int64_t x = 0; x < q; ++x) qr.insert((x * x) % q);
  for (int64_t a : S)
    for (int64_t b : S)
      if (qr.count(((a + b) % q + q) % q)) return false;
  return true;
}

// Monochromatic triples x + y = z^2 over (Z/pZ)^3, direct loop.
inline int64_t mono_mod_p_naive(const rsl::Colouring& c) {
  int64_t p = c.hi + 1;
  int64_t total = 0;
  for (int64_t x = 0; x < p; ++x)
    for (int64_t y = 0; y < p; ++y)
      for (int64_t z = 0; z < p; ++z)
        if ((x + y) % p == (z * z) % p && c.colour_of(x) == c.colour_of(y) &&
            c.colour_of(y) == c.colour_of(z))
          ++total;
  return total;
}

// min |n1^2 + n2^2 - n| over n1 in P1, n2 in P2, by full enumeration.
inline int64_t constrained_optimum(int64_t n, const rsl::Progression& P1,
                                   const rsl::Progression& P2) {
  std::vector<int64_t> e1 = rsl::progression_elements(P1);
  std::vector<int64_t> e2 = rsl::progression_elements(P2);
  int64_t best = INT64_MAX;
  for (int64_t a : e1)
    for (int64_t b : e2) best = std::min<int64_t>(best, std::llabs(a * a + b * b - n));
  return best;
}

// Range of t1/t2 over {t in box : t1^2 + t2^2 = gamma}, sampled on a grid.
inline std::pair<double, double> slope_range_grid(double gamma, double a1, double b1, double a2,
                                                  double b2, int grid = 200000) {
  double lo = 1e300, hi = -1e300;
  for (int i = 0; i <= grid; ++i) {
    double t1 = a1 + (b1 - a1) * i / grid;
    double t2sq = gamma - t1 * t1;
    if (t2sq < a2 * a2 || t2sq > b2 * b2) continue;
    double lam = t1 / std::sqrt(t2sq);
    lo = std::min(lo, lam);
    hi = std::max(hi, lam);
  }
  return {lo, hi};
}

// Ordered pairs (p, m) with p in A, m in B, p + m = s, by double loop.
inline int64_t pair_count_naive(const std::vector<int64_t>& A, const std::vector<int64_t>& B,
                                int64_t s) {
  int64_t total = 0;
  for (int64_t a : A)
    for (int64_t b : B)
      if (a + b == s) ++total;
  return total;
}

// Is v a member of S + S (ordered pairs from the sorted vector S)?
inline bool in_sumset(const std::vector<int64_t>& S, int64_t v) {
  for (int64_t a : S) {
    if (a + S.front() > v) break;
    if (std::binary_search(S.begin(), S.end(), v - a)) return true;
  }
  return false;
}

}  // namespace oracle
