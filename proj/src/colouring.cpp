#include "rsl/colouring.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace rsl {

int dyadic_block_colour(int i) {
  if (i < 0) throw precondition_error("dyadic_block_colour: negative block index");
  static thread_local std::vector<int> memo{0, 1, 2};
  while (static_cast<int>(memo.size()) <= i) {
    int j = static_cast<int>(memo.size());
    int c1 = memo[j / 2];
    int c2 = memo[j / 2 + 1];
    int c = 0;
    while (c == c1 || c == c2) ++c;
    memo.push_back(c);
  }
  return memo[static_cast<std::size_t>(i)];
}

Colouring dyadic_colouring(std::int64_t n_max) {
  if (n_max < 1) throw precondition_error("dyadic_colouring: n_max must be >= 1");
  Colouring c;
  c.lo = 1;
  c.hi = n_max;
  c.k = 3;
  c.assignment.resize(static_cast<std::size_t>(n_max));
  int block = 0;
  std::int64_t next = 2;  // first element of block 1
  auto colour = static_cast<std::uint8_t>(dyadic_block_colour(0));
  for (std::int64_t n = 1; n <= n_max; ++n) {
    if (n == next) {
      ++block;
      next *= 2;
      colour = static_cast<std::uint8_t>(dyadic_block_colour(block));
    }
    c.assignment[static_cast<std::size_t>(n - 1)] = colour;
  }
  return c;
}

std::vector<MonoSolution> find_mono_solutions(const Colouring& c, bool include_trivial) {
  const std::int64_t lo = c.lo, hi = c.hi;
  std::int64_t z_min = isqrt64(std::max<std::int64_t>(2 * lo, 0));
  if (z_min * z_min < 2 * lo) ++z_min;  // smallest z with z^2 >= 2 lo
  z_min = std::max(z_min, lo);
  std::int64_t z_max = std::min(hi, isqrt64(2 * hi));
  if (z_min > z_max) return {};

  auto n_z = static_cast<std::size_t>(z_max - z_min + 1);
  std::vector<std::vector<MonoSolution>> per_z(n_z);
  parallel_for(n_z, [&](std::size_t zi) {
    std::int64_t z = z_min + static_cast<std::int64_t>(zi);
    int cz = c.colour_of(z);
    std::int64_t s = z * z;
    std::int64_t x_lo = std::max(lo, s - hi);
    std::int64_t x_hi = s / 2;
    for (std::int64_t x = x_lo; x <= x_hi; ++x) {
      std::int64_t y = s - x;
      if (c.colour_of(x) != cz || c.colour_of(y) != cz) continue;
      if (!include_trivial && x == 2 && y == 2 && z == 2) continue;
      per_z[zi].push_back(MonoSolution{x, y, z, cz});
    }
  });
  std::vector<MonoSolution> out;
  for (auto& v : per_z) out.insert(out.end(), v.begin(), v.end());
  return out;
}

namespace {

struct Search {
  std::int64_t n_max;
  std::int64_t budget;
  std::int64_t nodes = 0;
  std::vector<std::int8_t> col;  // 1-based; -1 unassigned

  explicit Search(std::int64_t n, std::int64_t b)
      : n_max(n), budget(b), col(static_cast<std::size_t>(n) + 1, -1) {}

  // Triples with largest participant n: x + n = z^2 for z^2 in [n+1, 2n]
  // (plus the n = z = 2 corner, which is the trivial solution and exempt).
  bool consistent(std::int64_t n) const {
    std::int64_t z = isqrt64(n);
    if (z * z <= n) ++z;
    for (; z * z <= 2 * n; ++z) {
      if (z > n_max) break;
      std::int64_t x = z * z - n;
      if (x == 2 && n == 2 && z == 2) continue;
      if (col[static_cast<std::size_t>(x)] == col[static_cast<std::size_t>(n)] &&
          col[static_cast<std::size_t>(z)] == col[static_cast<std::size_t>(n)])
        return false;
    }
    return true;
  }

  bool dfs(std::int64_t n) {
    if (n > n_max) return true;
    if (++nodes > budget) throw budget_error("search_2colouring: node budget exceeded");
    for (std::int8_t v = 0; v < 2; ++v) {
      if (n == 1 && v == 1) break;  // symmetry: colour(1) = 0
      col[static_cast<std::size_t>(n)] = v;
      if (consistent(n) && dfs(n + 1)) return true;
    }
    col[static_cast<std::size_t>(n)] = -1;
    return false;
  }
};

}  // namespace

SearchResult search_2colouring(std::int64_t n_max, std::int64_t node_budget) {
  if (n_max < 1) throw precondition_error("search_2colouring: n_max must be >= 1");
  Search s(n_max, node_budget);
  SearchResult res;
  bool ok;
  try {
    ok = s.dfs(1);
  } catch (const budget_error&) {
    res.nodes = s.nodes;
    res.status = SearchStatus::budget_exceeded;
    return res;
  }
  res.nodes = s.nodes;
  if (!ok) {
    res.status = SearchStatus::unsat;
    return res;
  }
  Colouring c;
  c.lo = 1;
  c.hi = n_max;
  c.k = 2;
  c.assignment.resize(static_cast<std::size_t>(n_max));
  for (std::int64_t n = 1; n <= n_max; ++n)
    c.assignment[static_cast<std::size_t>(n - 1)] =
        static_cast<std::uint8_t>(s.col[static_cast<std::size_t>(n)]);
  res.status = SearchStatus::found;
  res.colouring = std::move(c);
  return res;
}

std::int64_t threshold_2colouring(std::int64_t node_budget, std::int64_t n_cap) {
  for (std::int64_t n = 2; n <= n_cap; ++n) {
    SearchResult r = search_2colouring(n, node_budget);
    if (r.status == SearchStatus::budget_exceeded)
      throw budget_error("threshold_2colouring: search budget exceeded at n = " +
                         std::to_string(n));
    if (r.status == SearchStatus::unsat) return n;
  }
  throw budget_error("threshold_2colouring: no unsat n found below cap");
}

std::int64_t count_mono_mod_p(const Colouring& c) {
  if (c.lo != 0) throw precondition_error("count_mono_mod_p: colouring must start at 0");
  std::int64_t p = c.hi + 1;
  std::int64_t count = 0;
  for (std::int64_t z = 0; z < p; ++z) {
    int cz = c.colour_of(z);
    std::int64_t s = (z * z) % p;
    for (std::int64_t x = 0; x < p; ++x) {
      std::int64_t y = (s - x % p + p) % p;
      if (c.colour_of(x) == cz && c.colour_of(y) == cz) ++count;
    }
  }
  return count;
}

std::string serialize(const Colouring& c) {
  if (c.k > 10) throw precondition_error("serialize: digit format needs k <= 10");
  std::ostringstream os;
  os << "colouring k=" << c.k << " lo=" << c.lo << " hi=" << c.hi << "\n";
  for (std::uint8_t v : c.assignment) os << static_cast<char>('0' + v);
  os << "\n";
  return os.str();
}

Colouring parse_colouring(const std::string& text) {
  std::istringstream is(text);
  std::string word;
  is >> word;
  if (word != "colouring") throw precondition_error("parse_colouring: missing header");
  Colouring c;
  bool have_k = false, have_lo = false, have_hi = false;
  for (int i = 0; i < 3; ++i) {
    is >> word;
    auto eq = word.find('=');
    if (eq == std::string::npos) throw precondition_error("parse_colouring: bad header field");
    std::string key = word.substr(0, eq);
    std::int64_t val = std::stoll(word.substr(eq + 1));
    if (key == "k") {
      c.k = static_cast<int>(val);
      have_k = true;
    } else if (key == "lo") {
      c.lo = val;
      have_lo = true;
    } else if (key == "hi") {
      c.hi = val;
      have_hi = true;
    } else {
      throw precondition_error("parse_colouring: unknown header key " + key);
    }
  }
  if (!have_k || !have_lo || !have_hi)
    throw precondition_error("parse_colouring: incomplete header");
  std::string digits;
  is >> digits;
  if (static_cast<std::int64_t>(digits.size()) != c.hi - c.lo + 1)
    throw precondition_error("parse_colouring: digit count mismatch");
  c.assignment.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '0' || ch >= '0' + c.k)
      throw precondition_error("parse_colouring: digit out of range");
    c.assignment.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return c;
}

}  // namespace rsl
