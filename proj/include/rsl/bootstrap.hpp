#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rsl/colouring.hpp"
#include "rsl/numtheory.hpp"

namespace rsl {

// Given Q with m = |Q| >= 100 elements and S a subset of Q with
// |S| >= (9/10) m, returns a progression inside S + S with the same common
// difference as Q and at least m elements (the pigeonhole window
// (m/5 + 2, 2m - m/5 - 2) in index space), every element verified to lie in
// S + S.  Throws precondition_error on hypothesis violation; nullopt means the
// window check failed, which cannot happen under the hypotheses.
std::optional<Progression> sumset_subprogression(const Progression& Q,
                                                 const std::vector<std::int64_t>& S);

struct Lemma64Report {
  std::vector<std::int64_t> failures;  // n with n^2 not representable
  std::int64_t checked = 0;
  std::int64_t walk_hits = 0;          // found by the constrained walk fast path
};

// For every n in P([g1, g2]; N, q) checks that n^2 = p1^2 + p2^2 - p1' - p2'
// for some p1, p1' in P1 and p2, p2' in P2 (walk fast path, exact window scan
// as the authority).  P1 and P2 must share scale and modulus, and
// sqrt(lo1^2 + lo2^2) < g1 <= g2 < sqrt(hi1^2 + hi2^2).
Lemma64Report lemma64_verify(const Progression& P1, const Progression& P2,
                             std::pair<double, double> gammas,
                             std::int64_t budget = 2'000'000'000);

struct ChainReport {
  std::int64_t n_max = 0;
  // sqrt(V+V) in W, sqrt(of that set summed) in V, and once more in W;
  // each tested for n up to the stated range (n^2 within reach of the sums).
  bool ok1 = true, ok2 = true, ok3 = true;
  std::int64_t range1 = 0, range2 = 0, range3 = 0;
  std::int64_t counterexample1 = 0, counterexample2 = 0, counterexample3 = 0;  // 0 = none
};

// V = colour-0 class, W = colour-1 class of a verified solution-free
// 2-colouring.  The all-equal triple (2,2,2) is exempt at every level.
// Throws precondition_error if the colouring has a nontrivial monochromatic
// solution or is not a 2-colouring.
ChainReport chain_check(const Colouring& c);

}  // namespace rsl
