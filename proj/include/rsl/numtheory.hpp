#pragma once

#include <cstdint>
#include <vector>

#include "rsl/common.hpp"

namespace rsl {

// Arithmetic progression P([lo,hi]; scale, q) = { n in Z : lo <= n/scale <= hi
// and q | n }.  Elements have common difference q.
struct Progression {
  double lo = 0.0;
  double hi = 0.0;
  std::int64_t scale = 1;  // positive
  std::int64_t q = 1;      // positive modulus

  bool contains(std::int64_t n) const {
    if (n % q != 0) return false;
    double v = static_cast<double>(n);
    return lo * static_cast<double>(scale) <= v && v <= hi * static_cast<double>(scale);
  }
};

// Enumerates the progression in increasing order.
std::vector<std::int64_t> progression_elements(const Progression& p,
                                               std::int64_t budget = 100'000'000);

// Point on the d-dimensional torus; coordinates canonicalized to [0,1).
struct TorusVector {
  std::vector<double> coords;

  TorusVector() = default;
  explicit TorusVector(std::vector<double> c);
  std::size_t dim() const { return coords.size(); }
};

// Distance from x to the nearest integer, in [0, 1/2].
double torus_norm(double x);
// max over coordinates of the distance to the nearest integer.
double torus_norm(const TorusVector& x);

// Number of solutions x^2 = b (mod q) with x in Z/qZ.
std::int64_t sqrt_count(std::int64_t b, std::int64_t q);

// { x^2 mod q : x in Z/qZ }, sorted; includes 0 and non-units.
std::vector<std::int64_t> qr_set(std::int64_t q);

// All square roots of b modulo q, sorted.
std::vector<std::int64_t> sqrt_residues(std::int64_t b, std::int64_t q);

// True iff every nonzero integer vector r with |r|_1 <= A has
// ||r . theta|| >= A/N.  Exhaustive over the l1 ball; throws budget_error if
// the ball exceeds `budget` lattice points.
bool is_irrational(const TorusVector& theta, double A, std::int64_t N,
                   std::int64_t budget = 10'000'000);

// Exact-rational angle p/q for tests that must detect ||r.theta|| = 0 exactly.
struct RationalAngle {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

bool is_irrational(const std::vector<RationalAngle>& theta, double A, std::int64_t N,
                   std::int64_t budget = 10'000'000);

struct RationalApprox {
  std::int64_t q = 1;      // minimizing denominator, tie-break smallest
  std::int64_t p = 0;      // nearest-integer numerator of the convergent p/q
  double distance = 0.0;   // ||q * alpha||
};

// q <= q_max minimizing ||q*alpha||, via continued-fraction convergents of the
// exact binary value of alpha plus a sweep over intermediate fractions.
RationalApprox best_rational_approx(double alpha, std::int64_t q_max);

}  // namespace rsl
