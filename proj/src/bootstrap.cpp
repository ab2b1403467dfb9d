#include "rsl/bootstrap.hpp"

#include <algorithm>
#include <cmath>

#include "rsl/fft.hpp"
#include "rsl/twosquares.hpp"

namespace rsl {

std::optional<Progression> sumset_subprogression(const Progression& Q,
                                                 const std::vector<std::int64_t>& S) {
  std::vector<std::int64_t> E = progression_elements(Q);
  auto m = static_cast<std::int64_t>(E.size());
  if (m < 100) throw precondition_error("sumset_subprogression: need at least 100 elements");
  std::vector<std::int64_t> s_sorted = S;
  std::sort(s_sorted.begin(), s_sorted.end());
  s_sorted.erase(std::unique(s_sorted.begin(), s_sorted.end()), s_sorted.end());
  std::vector<char> in_S(static_cast<std::size_t>(m), 0);
  for (std::int64_t v : s_sorted) {
    auto it = std::lower_bound(E.begin(), E.end(), v);
    if (it == E.end() || *it != v)
      throw precondition_error("sumset_subprogression: S must be a subset of Q");
    in_S[static_cast<std::size_t>(it - E.begin())] = 1;
  }
  if (10 * static_cast<std::int64_t>(s_sorted.size()) < 9 * m)
    throw precondition_error("sumset_subprogression: need |S| >= (9/10)|Q|");

  // Index-sum window where pigeonhole guarantees a pair: 5s > m+10, 5s < 9m-10.
  std::int64_t w_lo = (m + 10) / 5 + 1;
  std::int64_t w_hi = (9 * m - 10 + 4) / 5 - 1;
  for (std::int64_t s = w_lo; s <= w_hi; ++s) {
    std::int64_t i_lo = std::max<std::int64_t>(0, s - m + 1);
    std::int64_t i_hi = std::min(s, m - 1);
    bool found = false;
    for (std::int64_t i = i_lo; i <= i_hi && !found; ++i)
      found = in_S[static_cast<std::size_t>(i)] && in_S[static_cast<std::size_t>(s - i)];
    if (!found) return std::nullopt;
  }

  // E[i] = E[0] + i q, so index-sum s maps to the value 2 E[0] + s q.
  Progression out;
  out.q = Q.q;
  out.scale = 1;
  out.lo = static_cast<double>(2 * E.front() + w_lo * Q.q);
  out.hi = static_cast<double>(2 * E.front() + w_hi * Q.q);
  return out;
}

Lemma64Report lemma64_verify(const Progression& P1, const Progression& P2,
                             std::pair<double, double> gammas, std::int64_t budget) {
  if (P1.scale != P2.scale || P1.q != P2.q)
    throw precondition_error("lemma64_verify: progressions must share scale and modulus");
  std::int64_t N = P1.scale, q = P1.q;
  if (N < 1 || q < 1) throw precondition_error("lemma64_verify: positive scale and modulus");
  double g1 = gammas.first, g2 = gammas.second;
  double norm_lo = std::sqrt(P1.lo * P1.lo + P2.lo * P2.lo);
  double norm_hi = std::sqrt(P1.hi * P1.hi + P2.hi * P2.hi);
  if (!(norm_lo < g1 && g1 <= g2 && g2 < norm_hi))
    throw precondition_error("lemma64_verify: gamma window must sit inside the box norm range");

  std::vector<std::int64_t> e1 = progression_elements(P1);
  std::vector<std::int64_t> e2 = progression_elements(P2);
  if (e1.empty() || e2.empty())
    throw precondition_error("lemma64_verify: progressions must be nonempty");
  Progression T{g1, g2, N, q};
  std::vector<std::int64_t> ts = progression_elements(T);
  if (static_cast<std::int64_t>(ts.size()) * static_cast<std::int64_t>(e1.size()) > budget)
    throw budget_error("lemma64_verify: scan cost exceeds budget");

  std::int64_t m_lo = e1.front() + e2.front();
  std::int64_t m_hi = e1.back() + e2.back();
  std::int64_t mid = ((m_lo + m_hi) / 2) / q * q;
  double nl = P1.lo * P1.lo + P2.lo * P2.lo;  // squared-norm range of the box
  double nh = P1.hi * P1.hi + P2.hi * P2.hi;
  std::int64_t p2_min = e2.front(), p2_max = e2.back();

  std::vector<std::uint8_t> status(ts.size(), 0);  // 0 fail, 1 walk hit, 2 scan hit
  parallel_for(ts.size(), [&](std::size_t idx) {
    std::int64_t t = ts[idx];
    std::int64_t target = t * t + mid;
    double gn = static_cast<double>(target) / (static_cast<double>(N) * static_cast<double>(N));
    if (gn > nl && gn < nh) {
      try {
        TwoSquareResult r = approx_constrained(target, P1, P2, {gn, gn});
        std::int64_t s = mid + r.error;
        if (s >= m_lo && s <= m_hi) {
          status[idx] = 1;
          return;
        }
      } catch (const walk_error&) {
      } catch (const precondition_error&) {
      }
    }
    // Exact scan: for each p1, a q-multiple p2 with p2^2 in the residual window.
    for (std::int64_t p1 : e1) {
      std::int64_t lo = t * t + m_lo - p1 * p1;
      std::int64_t hi = t * t + m_hi - p1 * p1;
      if (hi < 1) continue;
      std::int64_t r_lo = lo <= 1 ? 1 : isqrt64(lo - 1) + 1;  // smallest r with r^2 >= lo
      std::int64_t r_hi = isqrt64(hi);
      r_lo = std::max(r_lo, p2_min);
      r_hi = std::min(r_hi, p2_max);
      if (r_lo > r_hi) continue;
      if (r_hi / q * q >= r_lo) {
        status[idx] = 2;
        return;
      }
    }
  });

  Lemma64Report rep;
  rep.checked = static_cast<std::int64_t>(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (status[i] == 1) ++rep.walk_hits;
    if (status[i] == 0) rep.failures.push_back(ts[i]);
  }
  return rep;
}

namespace {

struct LevelResult {
  bool ok = true;
  std::int64_t range = 0;
  std::int64_t counterexample = 0;
  std::vector<std::int64_t> next;
};

// Every z in [1, range] with z^2 in S+S (the pair (2,2) alone does not count
// for z = 2) must have the expected colour; survivors form the next level.
LevelResult run_level(const Colouring& c, const std::vector<std::int64_t>& S, int expected) {
  LevelResult res;
  if (S.empty()) return res;
  std::int64_t max_s = S.back();
  std::vector<std::int64_t> counts = autoconvolve_counts(S, 2 * max_s);
  res.range = std::min(c.hi, isqrt64(2 * max_s));
  bool has_two = std::binary_search(S.begin(), S.end(), std::int64_t{2});
  for (std::int64_t z = 1; z <= res.range; ++z) {
    std::int64_t cnt = counts[static_cast<std::size_t>(z * z)];
    if (z == 2 && has_two) --cnt;
    if (cnt <= 0) continue;
    if (c.colour_of(z) == expected) {
      res.next.push_back(z);
    } else if (res.ok) {
      res.ok = false;
      res.counterexample = z;
    }
  }
  return res;
}

}  // namespace

ChainReport chain_check(const Colouring& c) {
  if (c.k != 2) throw precondition_error("chain_check: a 2-colouring is required");
  if (c.lo != 1) throw precondition_error("chain_check: colouring must start at 1");
  if (!find_mono_solutions(c, false).empty())
    throw precondition_error("chain_check: colouring has a monochromatic solution");
  std::vector<std::int64_t> V, W;
  for (std::int64_t n = c.lo; n <= c.hi; ++n)
    (c.colour_of(n) == 0 ? V : W).push_back(n);

  ChainReport rep;
  rep.n_max = c.hi;
  LevelResult l1 = run_level(c, V, 1);
  rep.ok1 = l1.ok;
  rep.range1 = l1.range;
  rep.counterexample1 = l1.counterexample;
  LevelResult l2 = run_level(c, l1.next, 0);
  rep.ok2 = l2.ok;
  rep.range2 = l2.range;
  rep.counterexample2 = l2.counterexample;
  LevelResult l3 = run_level(c, l2.next, 1);
  rep.ok3 = l3.ok;
  rep.range3 = l3.range;
  rep.counterexample3 = l3.counterexample;
  return rep;
}

}  // namespace rsl
