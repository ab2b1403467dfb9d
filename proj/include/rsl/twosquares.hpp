#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "rsl/numtheory.hpp"

namespace rsl {

struct TwoSquareResult {
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  std::int64_t error = 0;  // n1^2 + n2^2 - n, exact
  std::int64_t k = 0;      // walk index used
  bool degenerate = false; // n2 == 0
  double c_measured = 0.0; // |error| / sqrt(scale): sqrt(n) for the free walks,
                           // sqrt(N) for the constrained walk
};

// n1 = floor(sqrt(n)), n2 = floor(sqrt(n - n1^2)).  |error| <= 3 sqrt(n).
TwoSquareResult approx_simple(std::int64_t n);

// Walk n1(k) = floor(sqrt(n/2)) + k, n2(k) = floor(sqrt(n/2)) - k; returns the
// k minimizing |error| around the crossing.  |error| <= 4 sqrt(n) + 2.
TwoSquareResult approx_balanced(std::int64_t n);

struct Box {
  double a1 = 0, b1 = 0;  // bounds for t1
  double a2 = 0, b2 = 0;  // bounds for t2
};

struct SlopeChoice {
  std::int64_t a = 1, b = 1;  // coprime, lambda = a/b in the middle half of I_gamma
  double t1 = 0, t2 = 0;      // t1/t2 = a/b, t1^2 + t2^2 = gamma
  double lambda_lo = 0, lambda_hi = 0;  // I_gamma endpoints
  double margin = 0;          // min distance of t_i to its box bounds
};

// Closed-form I_gamma = { t1/t2 : t in box, t1^2+t2^2 = gamma }; picks the
// rational of least denominator (then least numerator) inside the middle half,
// with numerator and denominator capped at `height`.  Returns nullopt when no
// rational of that height lies in the middle half (caller retries larger).
std::optional<SlopeChoice> select_slope(double gamma, const Box& bounds, std::int64_t height);

// Walk n1(k) = q*floor(t1*N/q) + q*k*b, n2(k) = q*floor(t2*N/q) - q*k*a until
// n1^2+n2^2 first exceeds n; returns the crossing neighbour minimizing |error|.
// Requires P1, P2 to share q and scale N, and the gamma window to be strictly
// inside the box norm range.  Throws walk_error if the walk leaves the boxes
// before bracketing n.
TwoSquareResult approx_constrained(std::int64_t n, const Progression& P1, const Progression& P2,
                                   std::pair<double, double> gammas);

}  // namespace rsl
