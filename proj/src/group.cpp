#include "zsl/group.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "zsl/errors.hpp"

namespace zsl {

void SearchLimits::check_deadline(std::string_view what) const {
  if (expired()) {
    throw CapacityError("time budget exhausted during " + std::string(what));
  }
}

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// Inverse of a modulo n for gcd(a, n) = 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  std::int64_t old_r = mod(a, n), r = n, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  return mod(old_s, n);
}

std::vector<std::pair<std::int64_t, std::int64_t>> factor_prime_powers(std::int64_t n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;  // (prime, prime power)
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    std::int64_t q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    out.emplace_back(p, q);
  }
  if (n > 1) out.emplace_back(n, n);
  return out;
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<std::int64_t> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) {
      throw DomainError("invariant factors must be at least 2");
    }
    if (i > 0 && factors_[i] % factors_[i - 1] != 0) {
      throw DomainError("invariant factors must form a divisibility chain");
    }
  }
}

AbelianGroup AbelianGroup::cyclic(std::int64_t n) {
  if (n < 1) throw DomainError("cyclic group order must be positive");
  if (n == 1) return AbelianGroup{};
  return AbelianGroup({n});
}

std::int64_t AbelianGroup::order() const {
  std::int64_t result = 1;
  for (auto n : factors_) {
    if (result > std::numeric_limits<std::int64_t>::max() / n) {
      throw CapacityError("group order overflows 64-bit integers");
    }
    result *= n;
  }
  return result;
}

bool AbelianGroup::contains(const GroupElement& x) const {
  if (x.coords.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (x.coords[i] < 0 || x.coords[i] >= factors_[i]) return false;
  }
  return true;
}

GroupElement AbelianGroup::zero() const {
  return GroupElement{std::vector<std::int64_t>(factors_.size(), 0)};
}

GroupElement AbelianGroup::element(std::vector<std::int64_t> coords) const {
  if (coords.size() != factors_.size()) {
    throw StructuralError("element has " + std::to_string(coords.size()) +
                          " coordinates, group " + to_string() + " has rank " +
                          std::to_string(rank()));
  }
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = mod(coords[i], factors_[i]);
  return GroupElement{std::move(coords)};
}

std::int64_t AbelianGroup::index_of(const GroupElement& x) const {
  if (!contains(x)) throw StructuralError("element is not valid for " + to_string());
  std::int64_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) index = index * factors_[i] + x.coords[i];
  return index;
}

GroupElement AbelianGroup::element_at(std::int64_t index) const {
  GroupElement x{std::vector<std::int64_t>(factors_.size(), 0)};
  for (std::size_t i = factors_.size(); i-- > 0;) {
    x.coords[i] = index % factors_[i];
    index /= factors_[i];
  }
  return x;
}

std::vector<GroupElement> AbelianGroup::elements() const {
  std::vector<GroupElement> out;
  const auto n = order();
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "Z1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += 'x';
    s += 'Z' + std::to_string(factors_[i]);
  }
  return s;
}

std::string AbelianGroup::format_element(const GroupElement& x) const {
  if (x.coords.empty()) return "0";
  if (x.coords.size() == 1) return std::to_string(x.coords[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x.coords[i]);
  }
  return s + ")";
}

GroupElement add(const AbelianGroup& group, const GroupElement& x, const GroupElement& y) {
  if (x.coords.size() != group.rank() || y.coords.size() != group.rank()) {
    throw StructuralError("rank mismatch in group addition");
  }
  GroupElement z{std::vector<std::int64_t>(group.rank())};
  const auto& n = group.invariant_factors();
  for (std::size_t i = 0; i < n.size(); ++i) z.coords[i] = mod(x.coords[i] + y.coords[i], n[i]);
  return z;
}

GroupElement negate(const AbelianGroup& group, const GroupElement& x) {
  return multiply(group, -1, x);
}

GroupElement multiply(const AbelianGroup& group, std::int64_t k, const GroupElement& x) {
  if (x.coords.size() != group.rank()) throw StructuralError("rank mismatch");
  GroupElement z{std::vector<std::int64_t>(group.rank())};
  const auto& n = group.invariant_factors();
  for (std::size_t i = 0; i < n.size(); ++i) z.coords[i] = mod(mod(k, n[i]) * x.coords[i], n[i]);
  return z;
}

std::int64_t element_order(const AbelianGroup& group, const GroupElement& x) {
  if (!group.contains(x)) throw StructuralError("element is not valid for " + group.to_string());
  std::int64_t order = 1;
  const auto& n = group.invariant_factors();
  for (std::size_t i = 0; i < n.size(); ++i) {
    std::int64_t coord_order = n[i] / std::gcd(n[i], x.coords[i]);
    order = std::lcm(order, coord_order);
  }
  return order;
}

CyclicProduct::CyclicProduct(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
  // prime -> list of (prime power, source factor)
  std::map<std::int64_t, std::vector<std::pair<std::int64_t, std::size_t>>> by_prime;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (orders_[i] < 1) throw DomainError("cyclic factor orders must be positive");
    for (auto [p, q] : factor_prime_powers(orders_[i])) by_prime[p].emplace_back(q, i);
  }
  std::size_t rank = 0;
  for (auto& [p, powers] : by_prime) {
    std::stable_sort(powers.begin(), powers.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    rank = std::max(rank, powers.size());
  }
  std::vector<std::int64_t> factors(rank, 1);
  for (const auto& [p, powers] : by_prime) {
    for (std::size_t t = 0; t < powers.size(); ++t) {
      const std::size_t target = rank - 1 - t;
      factors[target] *= powers[t].first;
      slots_.push_back({powers[t].second, powers[t].first, target});
    }
  }
  group_ = AbelianGroup(std::move(factors));
}

GroupElement CyclicProduct::to_group(std::span<const std::int64_t> product_coords) const {
  if (product_coords.size() != orders_.size()) {
    throw StructuralError("expected " + std::to_string(orders_.size()) + " product coordinates");
  }
  const auto& n = group_.invariant_factors();
  std::vector<std::int64_t> coords(n.size(), 0);
  for (const auto& slot : slots_) {
    const std::int64_t residue = mod(product_coords[slot.source], slot.prime_power);
    const std::int64_t cofactor = n[slot.target] / slot.prime_power;
    const std::int64_t basis =
        mod(cofactor * inverse_mod(cofactor % slot.prime_power, slot.prime_power), n[slot.target]);
    coords[slot.target] = mod(coords[slot.target] + residue * basis, n[slot.target]);
  }
  return GroupElement{std::move(coords)};
}

AbelianGroup direct_sum(const AbelianGroup& g, const AbelianGroup& h) {
  std::vector<std::int64_t> orders = g.invariant_factors();
  orders.insert(orders.end(), h.invariant_factors().begin(), h.invariant_factors().end());
  return CyclicProduct(std::move(orders)).group();
}

bool is_subgroup(const AbelianGroup& b, const AbelianGroup& a) {
  const auto& bf = b.invariant_factors();
  const auto& af = a.invariant_factors();
  if (bf.size() > af.size()) return false;
  for (std::size_t i = 0; i < bf.size(); ++i) {
    if (af[af.size() - 1 - i] % bf[bf.size() - 1 - i] != 0) return false;
  }
  return true;
}

namespace {

std::vector<std::int64_t> images_to_permutation(const AbelianGroup& group,
                                                const std::vector<GroupElement>& columns) {
  const auto n = group.order();
  std::vector<std::int64_t> perm(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    const auto x = group.element_at(i);
    GroupElement image = group.zero();
    for (std::size_t j = 0; j < group.rank(); ++j) {
      image = add(group, image, multiply(group, x.coords[j], columns[j]));
    }
    perm[static_cast<std::size_t>(i)] = group.index_of(image);
  }
  return perm;
}

}  // namespace

Automorphism::Automorphism(const AbelianGroup& group, std::vector<GroupElement> generator_images)
    : columns_(std::move(generator_images)) {
  if (columns_.size() != group.rank()) {
    throw StructuralError("automorphism needs one image per generator");
  }
  if (group.order() > (1 << 16)) throw CapacityError("automorphism check limited to order 65536");
  const auto& n = group.invariant_factors();
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (!group.contains(columns_[j])) throw StructuralError("generator image not in group");
    if (n[j] % element_order(group, columns_[j]) != 0) {
      throw ValidationError("generator images do not define a homomorphism");
    }
  }
  perm_ = images_to_permutation(group, columns_);
  std::vector<char> seen(perm_.size(), 0);
  for (auto v : perm_) {
    if (seen[static_cast<std::size_t>(v)]++) throw ValidationError("homomorphism is not bijective");
  }
}

std::vector<std::vector<std::int64_t>> Automorphism::matrix() const {
  const std::size_t r = columns_.size();
  std::vector<std::vector<std::int64_t>> m(r, std::vector<std::int64_t>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) m[i][j] = columns_[j].coords[i];
  }
  return m;
}

GroupElement Automorphism::apply(const AbelianGroup& group, const GroupElement& x) const {
  return group.element_at(perm_[static_cast<std::size_t>(group.index_of(x))]);
}

std::vector<Automorphism> automorphism_group(const AbelianGroup& group,
                                             const SearchLimits& limits) {
  if (group.order() > limits.max_group_order) {
    throw CapacityError("automorphism enumeration limited to |A| <= " +
                        std::to_string(limits.max_group_order) + ", got " +
                        std::to_string(group.order()));
  }
  const auto n = group.order();
  const auto& factors = group.invariant_factors();
  const std::size_t r = group.rank();

  std::vector<std::vector<std::int64_t>> candidates(r);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::int64_t i = 0; i < n; ++i) {
      if (element_order(group, group.element_at(i)) == factors[j]) candidates[j].push_back(i);
    }
  }

  std::vector<Automorphism> result;
  std::vector<GroupElement> images(r);
  // span[j] = element indices of the image of <e_0, ..., e_{j-1}>.
  std::vector<std::vector<std::int64_t>> span(r + 1);
  span[0] = {group.index_of(group.zero())};

  auto search = [&](auto&& self, std::size_t j) -> void {
    if (j == r) {
      Automorphism a;
      a.columns_ = images;
      a.perm_ = images_to_permutation(group, images);
      result.push_back(std::move(a));
      if (result.size() > limits.max_automorphisms) {
        throw CapacityError("automorphism group exceeds limit of " +
                            std::to_string(limits.max_automorphisms));
      }
      return;
    }
    for (auto c : candidates[j]) {
      const auto y = group.element_at(c);
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      std::vector<std::int64_t> next;
      next.reserve(span[j].size() * static_cast<std::size_t>(factors[j]));
      bool injective = true;
      for (std::int64_t k = 0; k < factors[j] && injective; ++k) {
        const auto shift = multiply(group, k, y);
        for (auto s : span[j]) {
          const auto v = group.index_of(add(group, group.element_at(s), shift));
          if (seen[static_cast<std::size_t>(v)]++) {
            injective = false;
            break;
          }
          next.push_back(v);
        }
      }
      if (!injective) continue;
      images[j] = y;
      span[j + 1] = std::move(next);
      self(self, j + 1);
    }
  };
  search(search, 0);
  return result;
}

Automorphism compose(const AbelianGroup& group, const Automorphism& outer,
                     const Automorphism& inner) {
  std::vector<GroupElement> columns;
  for (const auto& c : inner.columns()) columns.push_back(outer.apply(group, c));
  return Automorphism(group, std::move(columns));
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::int64_t smallest_prime_divisor(std::int64_t n) {
  if (n < 2) throw DomainError("smallest_prime_divisor needs n >= 2, got " + std::to_string(n));
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return p;
  }
  return n;
}

std::int64_t power_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t result = 1 % m;
  base = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::int64_t>((__int128)result * base % m);
    base = static_cast<std::int64_t>((__int128)base * base % m);
    exp >>= 1;
  }
  return result;
}

std::int64_t multiplicative_order(std::int64_t e, std::int64_t p) {
  if (std::gcd(mod(e, p), p) != 1) throw DomainError("element is not a unit");
  std::int64_t x = mod(e, p);
  std::int64_t k = 1;
  while (x != 1 % p) {
    x = x * mod(e, p) % p;
    ++k;
  }
  return k;
}

SemidirectGroup::SemidirectGroup(std::int64_t p, std::int64_t d, std::int64_t e)
    : p_(p), d_(d), e_(e) {
  if (!is_prime(p)) throw ValidationError("SD(p,d,e): p = " + std::to_string(p) + " is not prime");
  if (d < 1 || (p - 1) % d != 0) {
    throw ValidationError("SD(p,d,e): d = " + std::to_string(d) + " must divide p-1");
  }
  if (e < 2 || e >= p) throw ValidationError("SD(p,d,e): e must lie in [2, p)");
  if (multiplicative_order(e, p) != d) {
    throw ValidationError("SD(p,d,e): order of " + std::to_string(e) + " mod " +
                          std::to_string(p) + " is not " + std::to_string(d));
  }
  if (order() <= 60) {
    const auto elems = semidirect_elements(*this);
    for (auto x : elems) {
      if (multiply(x, identity()) != x || multiply(identity(), x) != x ||
          multiply(x, inverse(x)) != identity()) {
        throw ValidationError("semidirect product law fails identity/inverse axioms");
      }
      for (auto y : elems) {
        const auto xy = multiply(x, y);
        for (auto z : elems) {
          if (multiply(xy, z) != multiply(x, multiply(y, z))) {
            throw ValidationError("semidirect product law is not associative");
          }
        }
      }
    }
  }
}

SemidirectGroup::Element SemidirectGroup::multiply(Element x, Element y) const {
  return {mod(x.a + power_mod(e_, x.t, p_) * y.a, p_), mod(x.t + y.t, d_)};
}

SemidirectGroup::Element SemidirectGroup::inverse(Element x) const {
  // (a,t)^-1 = (-e^{-t} a, -t)
  const std::int64_t t = mod(-x.t, d_);
  return {mod(-power_mod(e_, t, p_) * x.a, p_), t};
}

std::int64_t SemidirectGroup::element_order(Element x) const {
  std::int64_t k = 1;
  for (Element y = x; y != identity(); y = multiply(y, x)) ++k;
  return k;
}

std::string SemidirectGroup::to_string() const {
  return "SD(" + std::to_string(p_) + "," + std::to_string(d_) + "," + std::to_string(e_) + ")";
}

std::vector<SemidirectGroup::Element> semidirect_elements(const SemidirectGroup& group) {
  std::vector<SemidirectGroup::Element> out;
  out.reserve(static_cast<std::size_t>(group.order()));
  for (std::int64_t a = 0; a < group.p(); ++a) {
    for (std::int64_t t = 0; t < group.d(); ++t) out.push_back({a, t});
  }
  return out;
}

}  // namespace zsl
