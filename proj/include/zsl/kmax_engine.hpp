#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zsl/group.hpp"

namespace zsl {

using Counts = std::vector<std::uint16_t>;

/// Dense addition table for groups of order at most 64; element i is
/// group.element_at(i), so index 0 is the identity.
class GroupTable {
 public:
  static constexpr std::int64_t kMaxOrder = 64;

  explicit GroupTable(const AbelianGroup& group);

  const AbelianGroup& group() const { return group_; }
  int size() const { return n_; }
  int add(int a, int b) const { return add_[static_cast<std::size_t>(a * n_ + b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int order(int a) const { return order_[static_cast<std::size_t>(a)]; }

  // {b + a : b in set}, sets encoded as bitmasks over element indices.
  std::uint64_t translate(std::uint64_t set, int a) const;

 private:
  AbelianGroup group_;
  int n_;
  std::vector<int> add_;
  std::vector<int> neg_;
  std::vector<int> order_;
};

/// Memoized maximum zero-sum block packing over a fixed group.
///
/// Packings are searched with minimal zero-sum blocks only; the smallest
/// element present is either left over or lies in one of the blocks. Zero
/// entries are peeled off first, each forming its own block. The memo is keyed
/// by the multiplicity vector of the non-zero part.
class KmaxEngine {
 public:
  explicit KmaxEngine(const AbelianGroup& group);

  const GroupTable& table() const { return table_; }

  // counts is indexed by element index and has size |A|.
  int kmax(const Counts& counts);
  // Blocks of an optimal packing, each as a count vector; lexicographically
  // least block chosen first at every step.
  std::vector<Counts> packing(const Counts& counts);

  // Calls fn for every minimal zero-sum sub-multiset of `available`. With
  // forced >= 0 only blocks containing element `forced` whose other entries
  // have index >= forced are produced. Blocks arrive in encoding order.
  void for_each_minimal_block(const Counts& available, int forced,
                              const std::function<void(const Counts&)>& fn,
                              int max_length = -1) const;

  bool has_zero_sum_of_length_at_most(const Counts& counts, int max_length) const;

  std::size_t memo_size() const { return memo_.size(); }
  std::uint64_t nodes() const { return nodes_; }

  // Optional spill of the memo table to a text file.
  void save(const std::filesystem::path& path) const;
  void load(const std::filesystem::path& path);

 private:
  int solve(Counts& counts, int total);
  std::string key(const Counts& counts) const;
  std::vector<Counts> blocks_containing_first(const Counts& counts, int& first) const;

  GroupTable table_;
  std::unordered_map<std::string, std::uint8_t> memo_;
  std::uint64_t nodes_ = 0;
};

}  // namespace zsl
