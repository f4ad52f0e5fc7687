#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zsl/group.hpp"

namespace zsl {

/// Finite multiset of elements of an abelian group.
class Sequence {
 public:
  explicit Sequence(AbelianGroup group = {});
  Sequence(AbelianGroup group, const std::vector<GroupElement>& elements);

  // counts[i] = multiplicity of group.element_at(i).
  static Sequence from_counts(AbelianGroup group, std::span<const std::uint16_t> counts);

  const AbelianGroup& group() const { return group_; }
  const std::map<GroupElement, std::size_t>& entries() const { return entries_; }
  std::size_t length() const { return length_; }
  bool empty() const { return length_ == 0; }

  std::size_t multiplicity(const GroupElement& x) const;
  void insert(const GroupElement& x, std::size_t times = 1);
  // Throws DomainError if x occurs fewer than `times` times.
  void remove(const GroupElement& x, std::size_t times = 1);

  std::vector<GroupElement> support() const;
  // Elements with repetition, in increasing index order.
  std::vector<GroupElement> elements() const;
  // Sorted element indices; the canonical multiset encoding used for all
  // orderings (shorter prefix sorts first).
  std::vector<std::int64_t> encoding() const;
  std::vector<std::uint16_t> counts() const;

  // "[1,1,2]" for cyclic groups, "[(1,0),(0,1)]" otherwise.
  std::string to_string() const;

  bool operator==(const Sequence&) const = default;

 private:
  AbelianGroup group_;
  std::map<GroupElement, std::size_t> entries_;
  std::size_t length_ = 0;
};

/// Total order on sequences over the same group via their encodings.
bool encoding_less(const Sequence& a, const Sequence& b);

GroupElement sequence_sum(const Sequence& s);
bool is_zero_sum(const Sequence& s);
Sequence concat(const Sequence& s, const Sequence& t);
bool divides(const Sequence& t, const Sequence& s);
// s with the elements of t removed; t must divide s.
Sequence difference(const Sequence& s, const Sequence& t);

struct BlockPacking {
  std::vector<Sequence> blocks;
  Sequence remainder;
};

struct KmaxResult {
  std::size_t value = 0;
  BlockPacking witness;
};

/// Zero-sum sub-multisets with no proper non-empty zero-sum sub-multiset,
/// sorted by encoding.
std::vector<Sequence> minimal_zero_sum_subsequences(const Sequence& s);

/// Maximum number of disjoint non-empty zero-sum sub-multisets.
std::size_t k_max(const Sequence& s);
KmaxResult k_max_with_witness(const Sequence& s);

/// Slow route to k_max over arbitrary (not necessarily minimal) zero-sum
/// blocks, sharing no code with the packing engine. Used to re-verify
/// witnesses.
std::size_t k_max_reference(const Sequence& s);

/// Blocks non-empty and zero-sum, blocks plus remainder equal to s.
bool is_valid_packing(const Sequence& s, const BlockPacking& packing);

/// Least image of s (by encoding) under the given automorphisms.
Sequence canonical_form(const Sequence& s, std::span<const Automorphism> automorphisms);

/// Parses "[1,1,2]" or "[(1,0),(0,1)]"; coordinates are reduced modulo the
/// invariant factors.
Sequence parse_sequence(std::string_view text, const AbelianGroup& group);

}  // namespace zsl
