#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "rsl/sumsetqr.hpp"

TEST_CASE("extremal residue-avoiding sets at small moduli") {
  CHECK(rsl::max_qr_sumset_free(1).max_size == 0);
  CHECK(rsl::max_qr_sumset_free(2).max_size == 0);
  CHECK(rsl::max_qr_sumset_free(3).max_size == 1);
  CHECK(rsl::max_qr_sumset_free(4).max_size == 1);
  CHECK_THROWS_AS(rsl::max_qr_sumset_free(37), rsl::precondition_error);
}

TEST_CASE("modulus 32 attains eleven") {
  auto r = rsl::max_qr_sumset_free(32);
  CHECK(r.max_size == 11);
  REQUIRE(r.witness.size() == 11);
  CHECK(oracle::qr_free_valid(r.witness, 32));
  CHECK(r.max_size == (11 * 32) / 32);  // the 11/32 bound is tight here
}

TEST_CASE("search equals full enumeration") {
  for (std::int64_t q = 1; q <= 16; ++q) {
    CAPTURE(q);
    CHECK(rsl::max_qr_sumset_free(q).max_size == oracle::qr_free_max_brute(q));
  }
}

TEST_CASE("witnesses verify and the table holds the density bound") {
  std::int64_t expect[36] = {0, 0, 1, 1, 1, 2, 1, 2, 3, 2, 2, 4, 2, 2, 5, 5, 2, 6,
                             3, 6, 7, 4, 2, 8, 5, 4, 9, 8, 3, 10, 3, 11, 11, 4, 8, 12};
  auto table = rsl::verify_los(36);
  REQUIRE(table.size() == 36);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& row = table[i];
    CAPTURE(row.q);
    CHECK(row.q == static_cast<std::int64_t>(i) + 1);
    CHECK(row.max_size == expect[i]);
    CHECK(row.bound == (11 * row.q) / 32);
    CHECK(row.ok);
    CHECK(row.max_size <= row.bound);
    CHECK(row.max_size <= row.q / 2 + 1);
    auto w = rsl::max_qr_sumset_free(row.q);
    CHECK(static_cast<std::int64_t>(w.witness.size()) == row.max_size);
    CHECK(oracle::qr_free_valid(w.witness, row.q));
  }
}

TEST_CASE("witness is deterministic") {
  auto a = rsl::max_qr_sumset_free(24);
  auto b = rsl::max_qr_sumset_free(24);
  CHECK(a.witness == b.witness);
  CHECK(a.max_size == b.max_size);
}
