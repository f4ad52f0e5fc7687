#pragma once

// Slow reference computations used only by tests. Nothing here calls the
// packing engine, the Davenport search or the graded linear algebra.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "zsl/group.hpp"
#include "zsl/sequence.hpp"

namespace oracle {

// Element indices of a sequence with repetition.
inline std::vector<std::int64_t> positions(const zsl::Sequence& s) {
  std::vector<std::int64_t> out;
  for (const auto& x : s.elements()) out.push_back(s.group().index_of(x));
  return out;
}

// k_max over position subsets: f(mask) = max(f(mask - i), 1 + f(mask - T))
// for zero-sum T containing the lowest position i.
inline int kmax(const zsl::AbelianGroup& g, const std::vector<std::int64_t>& idx) {
  const std::size_t n = idx.size();
  std::vector<zsl::GroupElement> el;
  for (auto i : idx) el.push_back(g.element_at(i));
  std::vector<int> memo(std::size_t{1} << n, -1);
  auto sum_zero = [&](std::uint32_t mask) {
    zsl::GroupElement acc = g.zero();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) acc = zsl::add(g, acc, el[i]);
    }
    return acc == g.zero();
  };
  auto f = [&](auto&& self, std::uint32_t mask) -> int {
    if (mask == 0) return 0;
    if (memo[mask] >= 0) return memo[mask];
    const std::uint32_t low = mask & (~mask + 1);
    int best = self(self, mask ^ low);
    const std::uint32_t rest = mask ^ low;
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t t = sub | low;
      if (sum_zero(t)) best = std::max(best, 1 + self(self, mask ^ t));
      if (sub == 0) break;
    }
    return memo[mask] = best;
  };
  return f(f, static_cast<std::uint32_t>((std::size_t{1} << n) - 1));
}

inline int kmax(const zsl::Sequence& s) { return kmax(s.group(), positions(s)); }

// Calls visit(indices) for every multiset of the given length over all
// elements of g (including 0), as non-decreasing index vectors.
template <typename Visit>
void for_each_multiset(std::int64_t order, int length, Visit&& visit) {
  std::vector<std::int64_t> cur(static_cast<std::size_t>(length), 0);
  auto rec = [&](auto&& self, int pos, std::int64_t start) -> void {
    if (pos == length) {
      visit(cur);
      return;
    }
    for (std::int64_t j = start; j < order; ++j) {
      cur[static_cast<std::size_t>(pos)] = j;
      self(self, pos + 1, j);
    }
  };
  rec(rec, 0, 0);
}

// Least n such that every length-n multiset has k disjoint zero-sum blocks.
inline int davenport(const zsl::AbelianGroup& g, int k) {
  for (int n = 0;; ++n) {
    bool all = true;
    for_each_multiset(g.order(), n, [&](const std::vector<std::int64_t>& idx) {
      if (all && kmax(g, idx) < k) all = false;
    });
    if (all) return n;
  }
}

// Largest d such that some zero-sum multiset of length d cannot be split
// into k + 1 non-empty zero-sum blocks; the invariant-monomial picture of
// beta_k for the regular representation.
inline int beta_regular(const zsl::AbelianGroup& g, int k, int max_degree) {
  int best = 0;
  for (int d = 1; d <= max_degree; ++d) {
    bool found = false;
    for_each_multiset(g.order(), d, [&](const std::vector<std::int64_t>& idx) {
      if (found) return;
      zsl::GroupElement acc = g.zero();
      for (auto i : idx) acc = zsl::add(g, acc, g.element_at(i));
      if (acc == g.zero() && kmax(g, idx) <= k) found = true;
    });
    if (found) best = d;
  }
  return best;
}

// Number of automorphisms by trying every permutation of the elements.
inline std::size_t automorphism_count(const zsl::AbelianGroup& g) {
  const auto n = g.order();
  std::vector<std::int64_t> perm(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  const auto els = g.elements();
  std::vector<std::vector<std::int64_t>> table(static_cast<std::size_t>(n),
                                               std::vector<std::int64_t>(static_cast<std::size_t>(n)));
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      table[i][j] = g.index_of(zsl::add(g, els[static_cast<std::size_t>(i)], els[static_cast<std::size_t>(j)]));
    }
  }
  std::size_t count = 0;
  do {
    if (perm[0] != 0) continue;
    bool hom = true;
    for (std::int64_t i = 0; i < n && hom; ++i) {
      for (std::int64_t j = 0; j < n && hom; ++j) {
        hom = perm[table[i][j]] == table[perm[i]][perm[j]];
      }
    }
    if (hom) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Rank of a rational matrix by plain Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const mpq_class f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace oracle
