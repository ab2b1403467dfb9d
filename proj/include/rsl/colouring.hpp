#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsl/common.hpp"

namespace rsl {

// Total colouring of the integer interval [lo, hi] with k colours.
struct Colouring {
  std::int64_t lo = 1;
  std::int64_t hi = 1;
  int k = 1;
  std::vector<std::uint8_t> assignment;  // index n - lo

  int colour_of(std::int64_t n) const { return assignment[static_cast<std::size_t>(n - lo)]; }
  std::int64_t size() const { return hi - lo + 1; }
};

// Monochromatic solution of x + y = z^2 with x <= y.
struct MonoSolution {
  std::int64_t x = 0, y = 0, z = 0;
  int colour = 0;
};

// Colour of the dyadic block A_i = [2^i, 2^{i+1}): c0=0, c1=1, c2=2, and for
// i >= 3 the least colour not in {c_{floor(i/2)}, c_{floor(i/2)+1}}.
int dyadic_block_colour(int i);

// 3-colouring of [1, n_max] constant on dyadic blocks.
Colouring dyadic_colouring(std::int64_t n_max);

// All monochromatic (x,y,z), x<=y, x+y=z^2, within [lo,hi]; (2,2,2) filtered
// out unless include_trivial.
std::vector<MonoSolution> find_mono_solutions(const Colouring& c, bool include_trivial);

enum class SearchStatus { found, unsat, budget_exceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::unsat;
  std::optional<Colouring> colouring;  // set iff status == found
  std::int64_t nodes = 0;              // expanded search nodes
};

// Backtracking search (colour 0 branched first, colour(1) fixed to 0, unit
// propagation on triples) for a 2-colouring of [1, n_max] with no
// nontrivial monochromatic solution of x + y = z^2.
SearchResult search_2colouring(std::int64_t n_max, std::int64_t node_budget = 50'000'000);

// Smallest n_max for which search_2colouring reports unsat.
std::int64_t threshold_2colouring(std::int64_t node_budget = 50'000'000,
                                  std::int64_t n_cap = 10'000);

// Counts triples (x,y,z) in (Z/pZ)^3 with x + y = z^2 (mod p), all the same
// colour.  The colouring must cover {0..p-1} with p prime.
std::int64_t count_mono_mod_p(const Colouring& c);

// Text format: header "colouring k=<k> lo=<lo> hi=<hi>", then the colour
// digits concatenated.  Exact round-trip; digits restrict k to <= 10.
std::string serialize(const Colouring& c);
Colouring parse_colouring(const std::string& text);

}  // namespace rsl
