#include "rsl/bohr.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rsl {

namespace {

// Torus / window membership of an integer m (the residue test is separate so
// the square-root decomposition can reuse this on n^2).
// Inclusive edges must survive decimal rounding: |140/100 - 1.5| computes to
// 0.1 + one ulp, yet 140 belongs to the x = 1.5, eps = 0.1, N = 100 window.
constexpr double kEdgeSlack = 1e-12;

bool window_member(const BohrSpec& spec, std::int64_t m) {
  double t = static_cast<double>(m) / static_cast<double>(spec.N);
  if (std::fabs(t - spec.x) > spec.eps + kEdgeSlack) return false;
  for (std::size_t i = 0; i < spec.theta.dim(); ++i) {
    double y = spec.theta.coords[i] * static_cast<double>(m) - spec.z.coords[i];
    if (torus_norm(y) > spec.eps + kEdgeSlack) return false;
  }
  return true;
}

void validate(const BohrSpec& spec) {
  if (spec.N < 1) throw precondition_error("bohr: N must be >= 1");
  if (spec.q < 1) throw precondition_error("bohr: q must be >= 1");
  // eps >= 1/2 is accepted: the torus conditions become vacuous (the torus
  // norm never exceeds 1/2) and the set degenerates to the residue-class
  // window, which is still well defined.
  if (!(spec.eps > 0.0 && spec.eps < 1.0)) throw precondition_error("bohr: need 0 < eps < 1");
  if (spec.theta.dim() != spec.z.dim())
    throw precondition_error("bohr: theta and z must share a dimension");
}

}  // namespace

std::vector<std::int64_t> bohr_elements(const BohrSpec& spec, std::int64_t budget) {
  validate(spec);
  // Bracket widened by 2 so membership is decided solely by window_member,
  // immune to rounding at the window edges.
  auto lo = static_cast<std::int64_t>(std::ceil((spec.x - spec.eps) * static_cast<double>(spec.N))) - 2;
  auto hi = static_cast<std::int64_t>(std::floor((spec.x + spec.eps) * static_cast<double>(spec.N))) + 2;
  lo = std::max<std::int64_t>(lo, 1);
  if (hi < lo) return {};
  if ((hi - lo) / spec.q + 1 > budget) throw budget_error("bohr_elements: window exceeds budget");
  std::int64_t b = ((spec.b % spec.q) + spec.q) % spec.q;
  std::int64_t n = lo + ((b - lo) % spec.q + spec.q) % spec.q;
  std::vector<std::int64_t> out;
  for (; n <= hi; n += spec.q)
    if (window_member(spec, n)) out.push_back(n);
  return out;
}

std::vector<std::int64_t> sqrt_set(const std::vector<std::int64_t>& base) {
  std::vector<std::int64_t> out;
  if (base.empty()) return out;
  std::int64_t top = base.back();
  if (top < 1) return out;
  std::int64_t r = isqrt64(top);
  for (std::int64_t n = 1; n <= r; ++n)
    if (std::binary_search(base.begin(), base.end(), n * n)) out.push_back(n);
  return out;
}

std::vector<std::int64_t> bohr_sqrt_classes(const BohrSpec& spec) {
  validate(spec);
  std::int64_t b = ((spec.b % spec.q) + spec.q) % spec.q;
  std::vector<std::int64_t> out;
  for (std::int64_t a = 0; a < spec.q; ++a)
    if (a * a % spec.q == b) out.push_back(a);
  return out;
}

ZPair z_sets(const BohrSpec& spec, std::int64_t a) {
  validate(spec);
  std::int64_t q = spec.q;
  std::int64_t aa = ((a % q) + q) % q;
  std::int64_t b = ((spec.b % q) + q) % q;
  if (aa * aa % q != b) throw precondition_error("z_sets: a^2 must equal b mod q");
  // Same widened bracket + shared predicate as bohr_elements, so the union of
  // the Z sets over all square-root classes matches sqrt_set(bohr_elements).
  double lo_d = (spec.x - spec.eps) * static_cast<double>(spec.N);
  double hi_d = (spec.x + spec.eps) * static_cast<double>(spec.N);
  std::int64_t n_lo = lo_d <= 4.0 ? 1
                                  : static_cast<std::int64_t>(std::floor(std::sqrt(lo_d))) - 2;
  std::int64_t n_hi = hi_d < 1 ? 0
                               : isqrt64(static_cast<std::int64_t>(std::ceil(hi_d)) + 2) + 1;
  ZPair zp;
  for (std::int64_t n = std::max<std::int64_t>(n_lo, 1); n <= n_hi; ++n) {
    std::int64_t r = n % q;
    bool is_plus = r == aa;
    bool is_minus = r == ((q - aa) % q);
    if (!is_plus && !is_minus) continue;
    if (!window_member(spec, n * n)) continue;
    if (is_plus) zp.plus.push_back(n);
    if (is_minus) zp.minus.push_back(n);
  }
  return zp;
}

Progression q_progression(const BohrSpec& spec) {
  validate(spec);
  if (!(spec.x > 0.0)) throw precondition_error("q_progression: x must be positive");
  double root = std::pow(2.0 * spec.x, 0.25);
  Progression P;
  P.lo = root - spec.eps / 100.0;
  P.hi = root + spec.eps / 100.0;
  P.scale = std::llround(std::pow(static_cast<double>(spec.N), 0.25));
  P.q = spec.q;
  return P;
}

std::int64_t rep_count(const std::vector<std::int64_t>& Zp, const std::vector<std::int64_t>& Zm,
                       std::int64_t m) {
  std::int64_t count = 0;
  for (std::int64_t p : Zp) {
    std::int64_t rest = m - p;
    if (rest < 1) continue;
    if (std::binary_search(Zm.begin(), Zm.end(), rest)) ++count;
  }
  return count;
}

std::int64_t lemma52_count(std::int64_t n_plus, const std::vector<std::int64_t>& Zm,
                           std::int64_t q) {
  if (q < 1) throw precondition_error("lemma52_count: q must be >= 1");
  std::int64_t count = 0;
  for (std::int64_t n : Zm) {
    std::int64_t s = n_plus + n;
    if (s < 0 || s % (q * q) != 0) continue;
    std::int64_t quot = s / (q * q);
    std::int64_t r = isqrt64(quot);
    if (r * r == quot) ++count;
  }
  return count;
}

Lemma53Report lemma53_report(const BohrSpec& spec, std::int64_t a, double c) {
  validate(spec);
  ZPair zp = z_sets(spec, a);
  Progression Q = q_progression(spec);
  std::vector<std::int64_t> ts = progression_elements(Q);
  Lemma53Report rep;
  rep.a = ((a % spec.q) + spec.q) % spec.q;
  rep.q_size = static_cast<std::int64_t>(ts.size());
  rep.c = c;
  double d2 = 2.0 * static_cast<double>(spec.theta.dim()) + 1.0;
  rep.threshold = c * std::pow(2.0 * spec.eps, d2) *
                  std::sqrt(static_cast<double>(spec.N)) / static_cast<double>(spec.q);
  for (std::int64_t t : ts)
    if (static_cast<double>(rep_count(zp.plus, zp.minus, t * t)) >= rep.threshold) ++rep.passing;
  rep.fraction = rep.q_size > 0 ? static_cast<double>(rep.passing) / static_cast<double>(rep.q_size)
                                : 0.0;
  return rep;
}

Prop51Report prop51_check(const BohrSpec& spec, const std::vector<std::int64_t>& Yprime) {
  validate(spec);
  std::int64_t b = ((spec.b % spec.q) + spec.q) % spec.q;
  std::vector<std::int64_t> sorted = Yprime;
  std::sort(sorted.begin(), sorted.end());
  for (std::int64_t n : sorted) {
    if (n < 1 || n % spec.q != b || !window_member(spec, n))
      throw precondition_error("prop51_check: Yprime must lie inside the Bohr set");
  }
  std::vector<std::int64_t> R = sqrt_set(sorted);
  Progression Q = q_progression(spec);
  std::vector<std::int64_t> ts = progression_elements(Q);
  Prop51Report rep;
  rep.q_size = static_cast<std::int64_t>(ts.size());
  for (std::int64_t t : ts)
    if (rep_count(R, R, t * t) > 0) ++rep.hits;
  rep.deficiency = rep.q_size - rep.hits;
  rep.fraction = rep.q_size > 0 ? static_cast<double>(rep.hits) / static_cast<double>(rep.q_size)
                                : 0.0;
  return rep;
}

BohrSpec parse_bohr_config(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty())
      throw precondition_error("parse_bohr_config: malformed line: " + line);
    kv[key] = val;
  }
  auto get = [&](const std::string& key) -> std::string {
    auto it = kv.find(key);
    if (it == kv.end()) throw precondition_error("parse_bohr_config: missing key " + key);
    return it->second;
  };
  BohrSpec spec;
  std::vector<double> theta, z;
  try {
    spec.N = std::stoll(get("N"));
    spec.q = std::stoll(get("q"));
    spec.b = std::stoll(get("b"));
    spec.x = std::stod(get("x"));
    spec.eps = std::stod(get("eps"));
    int d = kv.count("d") ? std::stoi(get("d")) : 0;
    if (d < 0 || d > 8) throw precondition_error("parse_bohr_config: need 0 <= d <= 8");
    for (int i = 1; i <= d; ++i) {
      theta.push_back(std::stod(get("theta_" + std::to_string(i))));
      z.push_back(std::stod(get("z_" + std::to_string(i))));
    }
  } catch (const precondition_error&) {
    throw;
  } catch (const std::exception& e) {
    throw precondition_error(std::string("parse_bohr_config: bad value: ") + e.what());
  }
  spec.theta = TorusVector(theta);
  spec.z = TorusVector(z);
  validate(spec);
  return spec;
}

}  // namespace rsl
