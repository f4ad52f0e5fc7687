#include "zsl/davenport.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <limits>
#include <set>

#include "zsl/errors.hpp"

namespace zsl {

namespace {

// m(L) for lengths at which no sequence over A \ {0} exists.
constexpr int kNoSequence = 1 << 20;

std::string ratio(std::int64_t num, std::int64_t den) {
  return "(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

}  // namespace

std::int64_t LinearityProfile::D(int k) const {
  for (const auto& [kk, v] : table) {
    if (kk == k) return v;
  }
  throw DomainError("k = " + std::to_string(k) + " not in linearity table");
}

bool RelationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::vector<RelationCheck> RelationReport::failures() const {
  std::vector<RelationCheck> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c);
  }
  return out;
}

DavenportEngine::DavenportEngine(const AbelianGroup& group, SearchLimits limits)
    : group_(group), limits_(limits) {
  if (group.order() > limits_.max_group_order) {
    throw CapacityError("Davenport search limited to |A| <= " +
                        std::to_string(limits_.max_group_order) + ", got |" + group.to_string() +
                        "| = " + std::to_string(group.order()));
  }
  engine_ = std::make_unique<KmaxEngine>(group);
  try {
    for (const auto& a : automorphism_group(group, limits_)) {
      std::vector<int> perm(a.permutation().begin(), a.permutation().end());
      bool identity = true;
      for (std::size_t i = 0; i < perm.size(); ++i) identity = identity && perm[i] == static_cast<int>(i);
      if (!identity) automorphism_perms_.push_back(std::move(perm));
    }
  } catch (const CapacityError&) {
    automorphism_perms_.clear();  // search without symmetry reduction
  }
  stats_.automorphisms_used = automorphism_perms_.size() + 1;

  if (const char* dir = std::getenv("ZSL_CACHE_DIR"); dir && *dir) {
    cache_path_ = (std::filesystem::path(dir) / ("kmax-" + group.to_string() + ".txt")).string();
    engine_->load(cache_path_);
  }
}

DavenportEngine::~DavenportEngine() {
  if (cache_path_.empty()) return;
  try {
    std::filesystem::create_directories(std::filesystem::path(cache_path_).parent_path());
    engine_->save(cache_path_);
  } catch (...) {
    // cache spill is best effort
  }
}

bool DavenportEngine::is_canonical(const std::vector<int>& sorted_indices) const {
  std::vector<int> image(sorted_indices.size());
  for (const auto& perm : automorphism_perms_) {
    for (std::size_t i = 0; i < sorted_indices.size(); ++i) {
      image[i] = perm[static_cast<std::size_t>(sorted_indices[i])];
    }
    std::sort(image.begin(), image.end());
    if (image < sorted_indices) return false;
  }
  return true;
}

template <typename Visit>
void DavenportEngine::enumerate_canonical(int length, Visit&& visit) {
  const int n = engine_->table().size();
  std::vector<int> indices(static_cast<std::size_t>(length));
  Counts counts(static_cast<std::size_t>(n), 0);
  bool stop = false;
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (stop) return;
    if (pos == length) {
      ++stats_.sequences_enumerated;
      if ((stats_.sequences_enumerated & 1023) == 0) limits_.check_deadline("Davenport enumeration");
      if (!is_canonical(indices)) return;
      ++stats_.canonical_sequences;
      if (!visit(counts)) stop = true;
      return;
    }
    for (int j = start; j < n && !stop; ++j) {
      indices[static_cast<std::size_t>(pos)] = j;
      ++counts[static_cast<std::size_t>(j)];
      self(self, pos + 1, j);
      --counts[static_cast<std::size_t>(j)];
    }
  };
  rec(rec, 0, 1);
}

const DavenportEngine::LengthMinimum& DavenportEngine::minimum_at_length(int length) {
  if (auto it = minima_.find(length); it != minima_.end()) return it->second;
  const int n = engine_->table().size();
  LengthMinimum result;
  result.argmin.assign(static_cast<std::size_t>(n), 0);
  if (length == 0) {
    return minima_.emplace(length, result).first->second;
  }
  // Dropping one entry cannot raise k_max, so m(L) >= m(L-1).
  const int floor = minimum_at_length(length - 1).value;
  result.value = kNoSequence;
  enumerate_canonical(length, [&](const Counts& counts) {
    const int v = engine_->kmax(counts);
    if (v < result.value) {
      result.value = v;
      result.argmin = counts;
    }
    return result.value > floor;
  });
  stats_.memo_states = engine_->memo_size();
  return minima_.emplace(length, std::move(result)).first->second;
}

DavenportReport DavenportEngine::davenport_k(int k) {
  if (k < 1) throw DomainError("davenport_k needs k >= 1");
  const auto start = std::chrono::steady_clock::now();
  const std::int64_t bound = static_cast<std::int64_t>(k) * group_.order();

  DavenportReport report;
  report.group = group_;
  report.k = k;
  Counts witness(static_cast<std::size_t>(engine_->table().size()), 0);

  for (std::int64_t n = 0;; ++n) {
    if (n > bound) {
      throw CapacityError("D_" + std::to_string(k) + "(" + group_.to_string() +
                          ") search passed the bound k|A| = " + std::to_string(bound));
    }
    // A length-n sequence with z zeros packs z + k_max(non-zero part).
    int best = kNoSequence;
    Counts argmin;
    for (int z = 0; z <= std::min<std::int64_t>(n, k - 1); ++z) {
      const auto& m = minimum_at_length(static_cast<int>(n - z));
      if (m.value + z < best) {
        best = m.value + z;
        argmin = m.argmin;
        argmin[0] = static_cast<std::uint16_t>(z);
      }
    }
    if (best >= k) {
      report.value_Dk = n;
      report.value_dk = n - 1;
      break;
    }
    witness = argmin;
  }

  report.extremal_witness = Sequence::from_counts(group_, witness);
  if (static_cast<std::int64_t>(report.extremal_witness.length()) != report.value_dk ||
      k_max_reference(report.extremal_witness) > static_cast<std::size_t>(k - 1)) {
    throw VerificationFailure("extremal witness " + report.extremal_witness.to_string() +
                              " failed re-verification");
  }
  stats_.memo_states = engine_->memo_size();
  stats_.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.search_stats = stats_;
  return report;
}

std::int64_t DavenportEngine::eta() {
  const int exponent = static_cast<int>(group_.exponent());
  const std::int64_t bound = group_.order();
  for (std::int64_t length = 1; length <= bound; ++length) {
    bool all_short = true;
    enumerate_canonical(static_cast<int>(length), [&](const Counts& counts) {
      all_short = engine_->has_zero_sum_of_length_at_most(counts, exponent);
      return all_short;
    });
    if (all_short) return length;
  }
  throw CapacityError("eta(" + group_.to_string() + ") search passed the bound |A|");
}

DavenportReport davenport_k(const AbelianGroup& group, int k, const SearchLimits& limits) {
  DavenportEngine engine(group, limits);
  return engine.davenport_k(k);
}

std::int64_t eta(const AbelianGroup& group, const SearchLimits& limits) {
  DavenportEngine engine(group, limits);
  return engine.eta();
}

std::int64_t sigma_abelian(const AbelianGroup& group) { return group.exponent(); }

std::int64_t sigma_diagonal(const AbelianGroup& group, std::span<const GroupElement> characters) {
  if (characters.empty()) throw DomainError("sigma_diagonal needs at least one character");
  std::set<GroupElement> distinct;
  for (const auto& c : characters) {
    if (!group.contains(c)) throw StructuralError("character not valid for " + group.to_string());
    distinct.insert(c);
  }
  const std::vector<GroupElement> chars(distinct.begin(), distinct.end());
  if (chars.size() > 16) throw CapacityError("sigma_diagonal enumerates at most 16 characters");
  if (group.order() > 4096) throw CapacityError("sigma_diagonal limited to |A| <= 4096");

  const auto n = static_cast<std::size_t>(group.order());
  std::int64_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << chars.size()); ++mask) {
    std::vector<std::int64_t> dist(n, -1);
    std::deque<std::int64_t> queue;
    dist[static_cast<std::size_t>(group.index_of(group.zero()))] = 0;
    queue.push_back(group.index_of(group.zero()));
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < chars.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        const auto y = group.index_of(add(group, group.element_at(x), chars[i]));
        if (dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          queue.push_back(y);
        }
      }
    }
    std::int64_t shortest = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < chars.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      const auto back = group.index_of(negate(group, chars[i]));
      shortest = std::min(shortest, 1 + dist[static_cast<std::size_t>(back)]);
    }
    best = std::max(best, shortest);
  }

  std::int64_t max_order = 0;
  for (const auto& c : chars) max_order = std::max(max_order, element_order(group, c));
  if (best != max_order) {
    throw VerificationFailure("sigma_diagonal = " + std::to_string(best) +
                              " differs from the largest character order " +
                              std::to_string(max_order));
  }
  return best;
}

LinearityProfile linearity_profile(DavenportEngine& engine, int k_upto) {
  if (k_upto < 2) throw DomainError("linearity_profile needs k_upto >= 2");
  LinearityProfile profile;
  profile.group = engine.group();
  profile.slope = engine.group().exponent();
  for (int k = 1; k <= k_upto; ++k) profile.table.emplace_back(k, engine.davenport_k(k).value_Dk);

  const auto& t = profile.table;
  int k0 = k_upto;
  while (k0 > 1 && t[static_cast<std::size_t>(k0 - 1)].second - t[static_cast<std::size_t>(k0 - 2)].second ==
                       profile.slope) {
    --k0;
  }
  profile.stabilized = k0 < k_upto;
  profile.k0 = profile.stabilized ? k0 : 0;
  profile.D0 = t.back().second - static_cast<std::int64_t>(k_upto) * profile.slope;
  return profile;
}

LinearityProfile linearity_profile(const AbelianGroup& group, int k_upto,
                                   const SearchLimits& limits) {
  DavenportEngine engine(group, limits);
  return linearity_profile(engine, k_upto);
}

RelationReport verify_inequalities(const LinearityProfile& profile) {
  RelationReport report;
  const auto exp = profile.group.exponent();
  const auto& t = profile.table;
  auto add = [&](std::string relation, std::string instance, bool ok) {
    report.checks.push_back({std::move(relation), std::move(instance), ok});
  };
  for (const auto& [k, Dk] : t) {
    for (const auto& [r, Dr] : t) {
      if (r > k) continue;
      add("D_k <= (k/r) D_r",
          "D_" + std::to_string(k) + " = " + std::to_string(Dk) + " <= " + ratio(k, r) + "*" +
              std::to_string(Dr),
          static_cast<std::int64_t>(r) * Dk <= static_cast<std::int64_t>(k) * Dr);
    }
    add("D_k >= k exp(A)",
        "D_" + std::to_string(k) + " = " + std::to_string(Dk) + " >= " + std::to_string(k) + "*" +
            std::to_string(exp),
        Dk >= k * exp);
    const auto D1 = t.front().second;
    add("D_k <= k D_1",
        "D_" + std::to_string(k) + " = " + std::to_string(Dk) + " <= " + std::to_string(k) + "*" +
            std::to_string(D1),
        Dk <= k * D1);
  }
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    const auto [k, Dk] = t[i];
    const auto Dnext = t[i + 1].second;
    add("D_k <= D_{k+1}",
        "D_" + std::to_string(k) + " = " + std::to_string(Dk) + " <= D_" + std::to_string(k + 1) +
            " = " + std::to_string(Dnext),
        Dk <= Dnext);
    if (profile.stabilized && k >= profile.k0) {
      add("D_{k+1} <= D_k + exp(A)",
          "D_" + std::to_string(k + 1) + " = " + std::to_string(Dnext) + " <= " +
              std::to_string(Dk) + " + " + std::to_string(exp),
          Dnext <= Dk + exp);
    }
  }
  return report;
}

RelationReport verify_subgroup_relations(const AbelianGroup& a, const AbelianGroup& b,
                                         std::span<const int> ks, const SearchLimits& limits) {
  DavenportCache cache(limits);
  return verify_subgroup_relations(a, b, ks, cache);
}

RelationReport verify_subgroup_relations(const AbelianGroup& a, const AbelianGroup& b,
                                         std::span<const int> ks, DavenportCache& cache) {
  if (!is_subgroup(b, a)) {
    throw DomainError(b.to_string() + " is not a subgroup of " + a.to_string());
  }
  RelationReport report;
  const auto index = a.order() / b.order();
  report.checks.push_back(
      {"exp(A)/|A| <= exp(B)/|B|",
       ratio(a.exponent(), a.order()) + " <= " + ratio(b.exponent(), b.order()),
       a.exponent() * b.order() <= b.exponent() * a.order()});
  for (int k : ks) {
    const auto lhs = cache.davenport_k(a, k).value_Dk;
    const int kb = static_cast<int>(k * index);
    const auto rhs = cache.davenport_k(b, kb).value_Dk;
    report.checks.push_back({"D_k(A) <= D_{k[A:B]}(B)",
                             "D_" + std::to_string(k) + "(" + a.to_string() + ") = " +
                                 std::to_string(lhs) + " <= D_" + std::to_string(kb) + "(" +
                                 b.to_string() + ") = " + std::to_string(rhs),
                             lhs <= rhs});
  }
  return report;
}

DavenportEngine& DavenportCache::engine(const AbelianGroup& group) {
  auto& slot = engines_[group.invariant_factors()];
  if (!slot) slot = std::make_unique<DavenportEngine>(group, limits_);
  return *slot;
}

void DavenportCache::set_limits(const SearchLimits& limits) {
  limits_ = limits;
  for (auto& [key, engine] : engines_) engine->set_limits(limits);
}

}  // namespace zsl
