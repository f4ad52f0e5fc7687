#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zsl/group.hpp"
#include "zsl/kmax_engine.hpp"
#include "zsl/limits.hpp"
#include "zsl/sequence.hpp"

namespace zsl {

struct SearchStats {
  std::uint64_t sequences_enumerated = 0;
  std::uint64_t canonical_sequences = 0;
  std::uint64_t memo_states = 0;
  std::size_t automorphisms_used = 0;
  double wall_seconds = 0.0;
};

struct DavenportReport {
  AbelianGroup group;
  int k = 1;
  std::int64_t value_Dk = 0;
  std::int64_t value_dk = 0;
  // Length value_dk with k_max <= k - 1.
  Sequence extremal_witness;
  SearchStats search_stats;
};

struct LinearityProfile {
  AbelianGroup group;
  std::int64_t slope = 0;
  // Least k0 with D_{k+1} - D_k = slope for k0 <= k < k_upto; 0 when the
  // table never stabilized.
  int k0 = 0;
  std::int64_t D0 = 0;
  bool stabilized = false;
  std::vector<std::pair<int, std::int64_t>> table;

  std::string status() const { return stabilized ? "stabilized" : "undetermined"; }
  std::int64_t D(int k) const;
};

/// One instance of a checked relation, e.g. "D_3 <= (3/1) D_1".
struct RelationCheck {
  std::string relation;
  std::string instance;
  bool passed = false;
};

struct RelationReport {
  std::vector<RelationCheck> checks;

  bool passed() const;
  std::vector<RelationCheck> failures() const;
};

/// Search state for one group: automorphisms, the packing memo and the
/// per-length minimum of k_max over sequences in A \ {0}. Reusing one engine
/// across k shares all of that.
class DavenportEngine {
 public:
  explicit DavenportEngine(const AbelianGroup& group, SearchLimits limits = {});
  ~DavenportEngine();

  DavenportEngine(const DavenportEngine&) = delete;
  DavenportEngine& operator=(const DavenportEngine&) = delete;

  const AbelianGroup& group() const { return group_; }

  DavenportReport davenport_k(int k);
  std::int64_t eta();

  const SearchStats& stats() const { return stats_; }
  const SearchLimits& limits() const { return limits_; }
  // Replaces the deadline (and other limits) for later queries.
  void set_limits(const SearchLimits& limits) { limits_ = limits; }

 private:
  struct LengthMinimum {
    int value = 0;
    Counts argmin;  // over all element indices, zero count 0
  };

  const LengthMinimum& minimum_at_length(int length);
  template <typename Visit>
  void enumerate_canonical(int length, Visit&& visit);
  bool is_canonical(const std::vector<int>& sorted_indices) const;

  AbelianGroup group_;
  SearchLimits limits_;
  std::unique_ptr<KmaxEngine> engine_;
  std::vector<std::vector<int>> automorphism_perms_;
  std::map<int, LengthMinimum> minima_;
  SearchStats stats_;
  std::string cache_path_;
};

DavenportReport davenport_k(const AbelianGroup& group, int k, const SearchLimits& limits = {});

/// One engine per group, created on first use.
class DavenportCache {
 public:
  explicit DavenportCache(SearchLimits limits = {}) : limits_(limits) {}

  DavenportEngine& engine(const AbelianGroup& group);
  DavenportReport davenport_k(const AbelianGroup& group, int k) {
    return engine(group).davenport_k(k);
  }
  void set_limits(const SearchLimits& limits);
  const SearchLimits& limits() const { return limits_; }

 private:
  SearchLimits limits_;
  std::map<std::vector<std::int64_t>, std::unique_ptr<DavenportEngine>> engines_;
};

/// Least l such that every length-l sequence has a non-empty zero-sum
/// subsequence of length at most exp(A).
std::int64_t eta(const AbelianGroup& group, const SearchLimits& limits = {});

std::int64_t sigma_abelian(const AbelianGroup& group);

/// Max over non-empty subsets T of the characters of the least length of a
/// non-empty zero-sum sequence supported in T.
std::int64_t sigma_diagonal(const AbelianGroup& group, std::span<const GroupElement> characters);

LinearityProfile linearity_profile(const AbelianGroup& group, int k_upto,
                                   const SearchLimits& limits = {});
LinearityProfile linearity_profile(DavenportEngine& engine, int k_upto);

RelationReport verify_inequalities(const LinearityProfile& profile);

/// exp(A)/|A| <= exp(B)/|B| and D_k(A) <= D_{k[A:B]}(B) for each k.
RelationReport verify_subgroup_relations(const AbelianGroup& a, const AbelianGroup& b,
                                         std::span<const int> ks,
                                         const SearchLimits& limits = {});
RelationReport verify_subgroup_relations(const AbelianGroup& a, const AbelianGroup& b,
                                         std::span<const int> ks, DavenportCache& cache);

}  // namespace zsl
