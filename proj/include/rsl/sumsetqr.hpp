#pragma once

#include <cstdint>
#include <vector>

namespace rsl {

struct QrFreeResult {
  std::int64_t q = 0;
  std::int64_t max_size = 0;           // largest |S|, S subset of Z/q, with (S+S) disjoint from QR(q)
  std::vector<std::int64_t> witness;   // one extremal S, sorted
};

// Exact maximum via branch and bound on the conflict structure (x and y
// conflict when x + y is a quadratic residue mod q; vertices x with x + x a
// residue are excluded up front).  Requires 1 <= q <= 36.
QrFreeResult max_qr_sumset_free(std::int64_t q);

struct LosRow {
  std::int64_t q = 0;
  std::int64_t max_size = 0;
  std::int64_t bound = 0;  // floor(11 q / 32)
  bool ok = false;         // max_size <= bound
};

// Table for q = 1..q_max; overall claim holds iff every row is ok.
std::vector<LosRow> verify_los(std::int64_t q_max);

}  // namespace rsl
