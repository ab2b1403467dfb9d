#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsl/numtheory.hpp"

namespace rsl {

struct BohrSpec {
  std::int64_t N = 0;
  std::int64_t q = 1;
  std::int64_t b = 0;   // residue class mod q
  double x = 1.0;       // centre in [0, 4]
  double eps = 0.1;     // 0 < eps < 1; >= 1/2 makes the torus conditions vacuous
  TorusVector theta;    // dim d >= 0
  TorusVector z;        // same dim
};

// Y = { n >= 1 : n = b mod q, |n/N - x| <= eps, ||theta n - z|| <= eps }.
// Exact residue-class scan; throws budget_error when the window exceeds the
// element budget.
std::vector<std::int64_t> bohr_elements(const BohrSpec& spec, std::int64_t budget = 10'000'000);

// { n >= 1 : n^2 in base }; base must be sorted ascending.
std::vector<std::int64_t> sqrt_set(const std::vector<std::int64_t>& base);

// Residues a in [0, q) with a^2 = b mod q.
std::vector<std::int64_t> bohr_sqrt_classes(const BohrSpec& spec);

struct ZPair {
  std::vector<std::int64_t> plus;   // n = +a mod q with n^2 in the Bohr window
  std::vector<std::int64_t> minus;  // n = -a mod q, same window
};

// Z^a_{+-} = { n >= 1 : n = +-a mod q, |n^2/N - x| <= eps, ||theta n^2 - z|| <= eps }.
// Requires a^2 = b mod q.  Union over all such a of both parts equals
// sqrt_set(bohr_elements(spec)) exactly.
ZPair z_sets(const BohrSpec& spec, std::int64_t a);

// Q = P([(2x)^{1/4} - eps/100, (2x)^{1/4} + eps/100]; N^{1/4}, q), x > 0.
Progression q_progression(const BohrSpec& spec);

// Ordered pairs (p, m-p) with p in Zp, m-p in Zm; inputs sorted ascending.
std::int64_t rep_count(const std::vector<std::int64_t>& Zp, const std::vector<std::int64_t>& Zm,
                       std::int64_t m);

// #{ n in Zm : n_plus + n = q^2 m^2 for some integer m }; Zm sorted.
std::int64_t lemma52_count(std::int64_t n_plus, const std::vector<std::int64_t>& Zm,
                           std::int64_t q);

struct Lemma53Report {
  std::int64_t a = 0;          // square-root class used
  std::int64_t q_size = 0;     // |Q|
  std::int64_t passing = 0;    // # t in Q with r(t^2) >= threshold
  double fraction = 0;
  double threshold = 0;        // c (2 eps)^{2d+1} N^{1/2} / q
  double c = 0;                // calibration constant (default 1/8)
};

// For t in q_progression(spec): r(t^2) counted over Z^a_+ x Z^a_-.
Lemma53Report lemma53_report(const BohrSpec& spec, std::int64_t a, double c = 0.125);

struct Prop51Report {
  std::int64_t q_size = 0;
  std::int64_t hits = 0;        // # t in Q with t^2 in sqrtY' + sqrtY'
  std::int64_t deficiency = 0;  // q_size - hits
  double fraction = 0;
};

// Fraction of t in Q with t^2 a sum of two elements of sqrt_set(Yprime);
// Yprime must be a subset of bohr_elements(spec).
Prop51Report prop51_check(const BohrSpec& spec, const std::vector<std::int64_t>& Yprime);

// key = value config: N, q, b, x, eps, d, theta_1.., z_1..; '#' comments.
BohrSpec parse_bohr_config(const std::string& text);

}  // namespace rsl
