#include "zsl/constructive.hpp"

#include <algorithm>
#include <set>

#include "zsl/davenport.hpp"
#include "zsl/errors.hpp"

namespace zsl {

SupportLemmaResult zero_sum_with_support(std::int64_t p, std::span<const std::int64_t> support) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (support.empty()) throw DomainError("support must be non-empty");
  std::set<std::int64_t> s;
  for (auto x : support) {
    if (x <= 0 || x >= p) {
      throw DomainError("support element " + std::to_string(x) + " is not in Z_" +
                        std::to_string(p) + " minus 0");
    }
    if (!s.insert(x).second) throw DomainError("support has repeated element " + std::to_string(x));
  }

  SupportLemmaResult r;
  r.p = p;
  r.support.assign(s.begin(), s.end());
  const AbelianGroup zp = AbelianGroup::cyclic(p);
  r.sequence = Sequence(zp);
  for (auto x : r.support) r.sequence.insert(zp.element({x}));

  std::int64_t total = 0;
  for (auto x : r.support) total = (total + x) % p;
  if (total == 0) {
    r.support_sums_to_zero = true;
    return r;
  }
  const std::int64_t target = (p - total) % p;
  r.n_min = p;
  for (auto x : r.support) {
    // x is invertible mod p.
    const std::int64_t n = target * power_mod(x, p - 2, p) % p;
    r.n_values.push_back(n);
    if (n < r.n_min) {
      r.n_min = n;
      r.raised_element = x;
    }
  }
  r.sequence.insert(zp.element({r.raised_element}), static_cast<std::size_t>(r.n_min));
  return r;
}

bool support_lemma_claims_hold(const SupportLemmaResult& r) {
  if (!is_zero_sum(r.sequence)) return false;
  if (r.sequence.length() > static_cast<std::size_t>(r.p)) return false;
  std::vector<std::int64_t> supp;
  for (const auto& x : r.sequence.support()) supp.push_back(x.coords[0]);
  if (supp != r.support) return false;
  if (r.support_sums_to_zero) return true;
  std::set<std::int64_t> distinct(r.n_values.begin(), r.n_values.end());
  return distinct.size() == r.n_values.size() &&
         r.n_min <= r.p - static_cast<std::int64_t>(r.support.size());
}

ProductWitness direct_product_witness(const Sequence& sg, const Sequence& th) {
  const auto& gf = sg.group().invariant_factors();
  const auto& hf = th.group().invariant_factors();
  std::vector<std::int64_t> orders(gf);
  orders.insert(orders.end(), hf.begin(), hf.end());
  const CyclicProduct product(orders);

  ProductWitness w;
  w.group = product.group();
  w.sequence = Sequence(w.group);
  std::vector<std::int64_t> coords(orders.size(), 0);
  for (const auto& x : sg.elements()) {
    std::fill(coords.begin(), coords.end(), 0);
    std::copy(x.coords.begin(), x.coords.end(), coords.begin());
    w.entries.push_back(product.to_group(coords));
  }
  for (const auto& y : th.elements()) {
    std::fill(coords.begin(), coords.end(), 0);
    std::copy(y.coords.begin(), y.coords.end(), coords.begin() + static_cast<long>(gf.size()));
    w.entries.push_back(product.to_group(coords));
  }
  for (const auto& x : w.entries) w.sequence.insert(x);
  return w;
}

ProductBoundReport verify_direct_product_bound(const AbelianGroup& g, const AbelianGroup& h,
                                               int r, int s, const SearchLimits& limits) {
  DavenportCache cache(limits);
  return verify_direct_product_bound(g, h, r, s, cache);
}

ProductBoundReport verify_direct_product_bound(const AbelianGroup& g, const AbelianGroup& h,
                                               int r, int s, DavenportCache& cache) {
  if (r < 1 || s < 1) throw DomainError("r and s must be at least 1");
  ProductBoundReport rep;
  rep.g = g;
  rep.h = h;
  rep.r = r;
  rep.s = s;
  const DavenportReport dg = cache.davenport_k(g, r);
  const DavenportReport dh = cache.davenport_k(h, s);
  rep.D_r_g = dg.value_Dk;
  rep.D_s_h = dh.value_Dk;
  rep.rhs = rep.D_r_g + rep.D_s_h - 1;

  rep.witness = direct_product_witness(dg.extremal_witness, dh.extremal_witness);
  rep.product = rep.witness.group;
  rep.witness_kmax = k_max_reference(rep.witness.sequence);
  rep.witness_ok = rep.witness_kmax <= static_cast<std::size_t>(r + s - 2) &&
                   static_cast<std::int64_t>(rep.witness.sequence.length()) == rep.rhs - 1;

  rep.lhs = cache.davenport_k(rep.product, r + s - 1).value_Dk;
  rep.passed = rep.witness_ok && rep.lhs >= rep.rhs;
  rep.tight = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace zsl
