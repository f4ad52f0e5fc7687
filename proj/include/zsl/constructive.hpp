#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zsl/davenport.hpp"
#include "zsl/group.hpp"
#include "zsl/limits.hpp"
#include "zsl/sequence.hpp"

namespace zsl {

struct SupportLemmaResult {
  std::int64_t p = 0;
  std::vector<std::int64_t> support;  // sorted
  Sequence sequence;
  bool support_sums_to_zero = false;
  // n_values[i] solves n * support[i] = -sum(support) in [1, p-1]; empty when
  // the support already sums to zero.
  std::vector<std::int64_t> n_values;
  std::int64_t n_min = 0;
  std::int64_t raised_element = 0;  // 0 when nothing was raised
};

/// Zero-sum sequence over Z_p with support exactly S and length at most p.
/// Among elements attaining the least n_i the smallest one is raised.
SupportLemmaResult zero_sum_with_support(std::int64_t p, std::span<const std::int64_t> support);

/// n_i pairwise distinct and n_min <= p - |S|.
bool support_lemma_claims_hold(const SupportLemmaResult& r);

struct ProductWitness {
  AbelianGroup group;
  // G-part entries first, then H-part entries.
  std::vector<GroupElement> entries;
  Sequence sequence;
};

/// Embeds SG as (g, 0) and TH as (0, h) in G x H (normalized to invariant
/// factors).
ProductWitness direct_product_witness(const Sequence& sg, const Sequence& th);

struct ProductBoundReport {
  AbelianGroup g;
  AbelianGroup h;
  AbelianGroup product;
  int r = 1;
  int s = 1;
  std::int64_t D_r_g = 0;
  std::int64_t D_s_h = 0;
  std::int64_t lhs = 0;  // D_{r+s-1}(G x H)
  std::int64_t rhs = 0;  // D_r(G) + D_s(H) - 1
  ProductWitness witness;
  std::size_t witness_kmax = 0;
  bool witness_ok = false;
  bool passed = false;
  bool tight = false;
};

ProductBoundReport verify_direct_product_bound(const AbelianGroup& g, const AbelianGroup& h,
                                               int r, int s, const SearchLimits& limits = {});
ProductBoundReport verify_direct_product_bound(const AbelianGroup& g, const AbelianGroup& h,
                                               int r, int s, DavenportCache& cache);

}  // namespace zsl
