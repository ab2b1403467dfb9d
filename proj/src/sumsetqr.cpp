#include "rsl/sumsetqr.hpp"

#include <algorithm>

#include "rsl/numtheory.hpp"

namespace rsl {

namespace {

struct MisSearch {
  int n = 0;                                  // candidate count
  std::vector<std::uint64_t> adj;             // conflict bitmask per candidate
  std::vector<std::int64_t> label;            // candidate -> residue
  std::int64_t best_size = 0;
  std::uint64_t best_mask = 0;

  // Greedy clique cover of the vertices in `avail`: number of cliques bounds
  // the independent set size from above.
  int clique_bound(std::uint64_t avail) const {
    int cliques = 0;
    while (avail) {
      ++cliques;
      int v = __builtin_ctzll(avail);
      std::uint64_t clique = 1ULL << v;
      std::uint64_t can = avail & adj[static_cast<std::size_t>(v)];
      avail &= ~(1ULL << v);
      while (can) {
        int u = __builtin_ctzll(can);
        // u must conflict with every clique member
        bool ok = true;
        std::uint64_t cm = clique;
        while (cm) {
          int w = __builtin_ctzll(cm);
          cm &= cm - 1;
          if (!(adj[static_cast<std::size_t>(w)] >> u & 1u)) {
            ok = false;
            break;
          }
        }
        can &= can - 1;
        if (ok) {
          clique |= 1ULL << u;
          avail &= ~(1ULL << u);
          can &= avail;
        }
      }
    }
    return cliques;
  }

  // Include-first branching in ascending candidate order: the first maximum
  // found is the lexicographically least one, and pruning only discards
  // subtrees that cannot strictly exceed the incumbent.
  void grow(std::uint64_t avail, std::uint64_t chosen, std::int64_t size) {
    if (size > best_size) {
      best_size = size;
      best_mask = chosen;
    }
    if (avail == 0) return;
    if (size + clique_bound(avail) <= best_size) return;
    int v = __builtin_ctzll(avail);
    std::uint64_t bit = 1ULL << v;
    grow((avail & ~bit) & ~adj[static_cast<std::size_t>(v)], chosen | bit, size + 1);
    grow(avail & ~bit, chosen, size);
  }
};

}  // namespace

QrFreeResult max_qr_sumset_free(std::int64_t q) {
  if (q < 1 || q > 36) throw precondition_error("max_qr_sumset_free: q must be in [1, 36]");
  std::vector<std::int64_t> qr = qr_set(q);
  std::vector<bool> is_qr(static_cast<std::size_t>(q), false);
  for (std::int64_t v : qr) is_qr[static_cast<std::size_t>(v)] = true;

  MisSearch s;
  for (std::int64_t x = 0; x < q; ++x)
    if (!is_qr[static_cast<std::size_t>((2 * x) % q)]) s.label.push_back(x);
  s.n = static_cast<int>(s.label.size());
  if (s.n > 64) throw budget_error("max_qr_sumset_free: candidate set too large");
  s.adj.assign(static_cast<std::size_t>(s.n), 0);
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j)
      if (i != j && is_qr[static_cast<std::size_t>((s.label[static_cast<std::size_t>(i)] +
                                                    s.label[static_cast<std::size_t>(j)]) %
                                                   q)])
        s.adj[static_cast<std::size_t>(i)] |= 1ULL << j;

  std::uint64_t all = s.n == 64 ? ~0ULL : ((1ULL << s.n) - 1);
  s.grow(all, 0, 0);

  QrFreeResult res;
  res.q = q;
  res.max_size = s.best_size;
  for (int i = 0; i < s.n; ++i)
    if (s.best_mask >> i & 1u) res.witness.push_back(s.label[static_cast<std::size_t>(i)]);
  std::sort(res.witness.begin(), res.witness.end());
  return res;
}

std::vector<LosRow> verify_los(std::int64_t q_max) {
  if (q_max < 1) throw precondition_error("verify_los: q_max must be >= 1");
  std::vector<LosRow> rows(static_cast<std::size_t>(q_max));
  parallel_for(static_cast<std::size_t>(q_max), [&](std::size_t i) {
    std::int64_t q = static_cast<std::int64_t>(i) + 1;
    QrFreeResult r = max_qr_sumset_free(q);
    LosRow row;
    row.q = q;
    row.max_size = r.max_size;
    row.bound = 11 * q / 32;
    row.ok = r.max_size <= row.bound;
    rows[i] = row;
  });
  return rows;
}

}  // namespace rsl
