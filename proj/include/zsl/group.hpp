#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zsl/limits.hpp"

namespace zsl {

/// Coordinate vector of an element of an abelian group in invariant-factor
/// form. Entry i lies in [0, n_i).
struct GroupElement {
  std::vector<std::int64_t> coords;

  auto operator<=>(const GroupElement&) const = default;
  bool operator==(const GroupElement&) const = default;
};

/// Finite abelian group Z_{n_1} + ... + Z_{n_r} with n_i | n_{i+1} and n_i >= 2.
/// The empty factor list is the trivial group.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<std::int64_t> invariant_factors);

  static AbelianGroup cyclic(std::int64_t n);

  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::int64_t order() const;
  std::int64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }
  bool is_trivial() const { return factors_.empty(); }
  bool is_cyclic() const { return factors_.size() <= 1; }

  bool contains(const GroupElement& x) const;
  GroupElement zero() const;
  // Reduces arbitrary integer coordinates into canonical range.
  GroupElement element(std::vector<std::int64_t> coords) const;

  // Elements are numbered in mixed radix with the first coordinate most
  // significant, so index order agrees with lexicographic coordinate order.
  std::int64_t index_of(const GroupElement& x) const;
  GroupElement element_at(std::int64_t index) const;
  std::vector<GroupElement> elements() const;

  // "Z2xZ6"; the trivial group prints as "Z1".
  std::string to_string() const;
  std::string format_element(const GroupElement& x) const;

  bool operator==(const AbelianGroup&) const = default;

 private:
  std::vector<std::int64_t> factors_;
};

GroupElement add(const AbelianGroup& group, const GroupElement& x, const GroupElement& y);
GroupElement negate(const AbelianGroup& group, const GroupElement& x);
GroupElement multiply(const AbelianGroup& group, std::int64_t k, const GroupElement& x);
std::int64_t element_order(const AbelianGroup& group, const GroupElement& x);

/// Direct product of cyclic groups Z_{m_1} x ... x Z_{m_t} together with an
/// explicit isomorphism onto its invariant-factor form (prime-power parts are
/// merged by CRT).
class CyclicProduct {
 public:
  explicit CyclicProduct(std::vector<std::int64_t> orders);

  const AbelianGroup& group() const { return group_; }
  const std::vector<std::int64_t>& orders() const { return orders_; }
  // Maps product coordinates (one per cyclic factor) into the normalized group.
  GroupElement to_group(std::span<const std::int64_t> product_coords) const;

 private:
  struct Slot {
    std::size_t source;        // index into orders_
    std::int64_t prime_power;  // q = p^a dividing orders_[source]
    std::size_t target;        // invariant factor receiving this component
  };

  std::vector<std::int64_t> orders_;
  std::vector<Slot> slots_;
  AbelianGroup group_;
};

/// G + H in invariant-factor form. Use CyclicProduct for the coordinate map.
AbelianGroup direct_sum(const AbelianGroup& g, const AbelianGroup& h);

/// B is isomorphic to a subgroup of A.
bool is_subgroup(const AbelianGroup& b, const AbelianGroup& a);

/// Automorphism given by the images of the canonical generators (the columns
/// of its integer matrix).
class Automorphism {
 public:
  // Validates that the images define a bijective homomorphism.
  Automorphism(const AbelianGroup& group, std::vector<GroupElement> generator_images);

  const std::vector<GroupElement>& columns() const { return columns_; }
  std::vector<std::vector<std::int64_t>> matrix() const;
  GroupElement apply(const AbelianGroup& group, const GroupElement& x) const;
  // Action on element indices; permutation()[i] = index of image of element i.
  const std::vector<std::int64_t>& permutation() const { return perm_; }

  bool operator==(const Automorphism& other) const { return perm_ == other.perm_; }

 private:
  Automorphism() = default;
  friend std::vector<Automorphism> automorphism_group(const AbelianGroup&,
                                                      const SearchLimits&);

  std::vector<GroupElement> columns_;
  std::vector<std::int64_t> perm_;
};

/// All automorphisms, by backtracking over generator images. Throws
/// CapacityError when |A| exceeds limits.max_group_order or the group has
/// more than limits.max_automorphisms automorphisms.
std::vector<Automorphism> automorphism_group(const AbelianGroup& group,
                                             const SearchLimits& limits = {});

Automorphism compose(const AbelianGroup& group, const Automorphism& outer,
                     const Automorphism& inner);

bool is_prime(std::int64_t n);
std::int64_t smallest_prime_divisor(std::int64_t n);
std::int64_t multiplicative_order(std::int64_t e, std::int64_t p);
std::int64_t power_mod(std::int64_t base, std::int64_t exp, std::int64_t mod);

/// Z_p x| Z_d with (a,t)(b,u) = (a + e^t b mod p, t + u mod d).
class SemidirectGroup {
 public:
  struct Element {
    std::int64_t a = 0;
    std::int64_t t = 0;
    auto operator<=>(const Element&) const = default;
  };

  SemidirectGroup(std::int64_t p, std::int64_t d, std::int64_t e);

  std::int64_t p() const { return p_; }
  std::int64_t d() const { return d_; }
  std::int64_t e() const { return e_; }
  std::int64_t order() const { return p_ * d_; }

  Element identity() const { return {}; }
  Element multiply(Element x, Element y) const;
  Element inverse(Element x) const;
  std::int64_t element_order(Element x) const;

  std::string to_string() const;
  bool operator==(const SemidirectGroup&) const = default;

 private:
  std::int64_t p_;
  std::int64_t d_;
  std::int64_t e_;
};

std::vector<SemidirectGroup::Element> semidirect_elements(const SemidirectGroup& group);

}  // namespace zsl
