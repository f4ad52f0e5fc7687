#include "zsl/kmax_engine.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "zsl/errors.hpp"

namespace zsl {

GroupTable::GroupTable(const AbelianGroup& group) : group_(group) {
  if (group.order() > kMaxOrder) {
    throw CapacityError("packing engine limited to |A| <= " + std::to_string(kMaxOrder) +
                        ", got " + std::to_string(group.order()));
  }
  n_ = static_cast<int>(group.order());
  add_.resize(static_cast<std::size_t>(n_ * n_));
  neg_.resize(static_cast<std::size_t>(n_));
  order_.resize(static_cast<std::size_t>(n_));
  const auto elems = group.elements();
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      add_[static_cast<std::size_t>(a * n_ + b)] =
          static_cast<int>(group.index_of(zsl::add(group, elems[a], elems[b])));
    }
    neg_[static_cast<std::size_t>(a)] = static_cast<int>(group.index_of(negate(group, elems[a])));
    order_[static_cast<std::size_t>(a)] = static_cast<int>(element_order(group, elems[a]));
  }
}

std::uint64_t GroupTable::translate(std::uint64_t set, int a) const {
  std::uint64_t out = 0;
  while (set) {
    const int b = __builtin_ctzll(set);
    set &= set - 1;
    out |= std::uint64_t{1} << add(b, a);
  }
  return out;
}

KmaxEngine::KmaxEngine(const AbelianGroup& group) : table_(group) {}

std::string KmaxEngine::key(const Counts& counts) const {
  std::string k(counts.size() - 1, '\0');
  for (std::size_t i = 1; i < counts.size(); ++i) {
    if (counts[i] > 255) throw CapacityError("multiplicity above 255 in packing engine");
    k[i - 1] = static_cast<char>(counts[i]);
  }
  return k;
}

void KmaxEngine::for_each_minimal_block(const Counts& available, int forced,
                                        const std::function<void(const Counts&)>& fn,
                                        int max_length) const {
  const int n = table_.size();
  Counts used(static_cast<std::size_t>(n), 0);

  // reach = sums of non-empty sub-multisets of the partial block. A partial
  // block whose reach contains 0 already has a zero-sum proper part.
  auto dfs = [&](auto&& self, int start, int sum, std::uint64_t reach, int length) -> void {
    if (max_length >= 0 && length >= max_length) return;
    for (int j = start; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)] >= available[static_cast<std::size_t>(j)]) continue;
      const int next_sum = table_.add(sum, j);
      const std::uint64_t next_reach = reach | (std::uint64_t{1} << j) | table_.translate(reach, j);
      ++used[static_cast<std::size_t>(j)];
      if (next_sum == 0) {
        fn(used);
      } else if ((next_reach & 1) == 0) {
        self(self, j, next_sum, next_reach, length + 1);
      }
      --used[static_cast<std::size_t>(j)];
    }
  };

  if (forced < 0) {
    dfs(dfs, 0, 0, 0, 0);
    return;
  }
  if (available[static_cast<std::size_t>(forced)] == 0) return;
  used[static_cast<std::size_t>(forced)] = 1;
  if (forced == 0) {
    fn(used);
    return;
  }
  if (max_length == 1) return;
  dfs(dfs, forced, forced, std::uint64_t{1} << forced, 1);
}

bool KmaxEngine::has_zero_sum_of_length_at_most(const Counts& counts, int max_length) const {
  if (counts[0] > 0) return max_length >= 1;
  // Every short zero-sum sub-multiset contains a short minimal one.
  struct Found {};
  try {
    for_each_minimal_block(counts, -1, [](const Counts&) { throw Found{}; }, max_length);
  } catch (const Found&) {
    return true;
  }
  return false;
}

std::vector<Counts> KmaxEngine::blocks_containing_first(const Counts& counts, int& first) const {
  first = -1;
  for (std::size_t i = 1; i < counts.size(); ++i) {
    if (counts[i] > 0) {
      first = static_cast<int>(i);
      break;
    }
  }
  std::vector<Counts> blocks;
  if (first < 0) return blocks;
  for_each_minimal_block(counts, first, [&](const Counts& b) { blocks.push_back(b); });
  return blocks;
}

int KmaxEngine::solve(Counts& counts, int total) {
  if (total < 2) return 0;
  auto k = key(counts);
  if (auto it = memo_.find(k); it != memo_.end()) return it->second;
  ++nodes_;

  int first = -1;
  const auto blocks = blocks_containing_first(counts, first);
  const int upper = total / 2;  // non-zero blocks have length >= 2

  --counts[static_cast<std::size_t>(first)];
  int best = solve(counts, total - 1);
  ++counts[static_cast<std::size_t>(first)];

  for (const auto& block : blocks) {
    if (best >= upper) break;
    int length = 0;
    for (std::size_t i = 0; i < block.size(); ++i) {
      counts[i] -= block[i];
      length += block[i];
    }
    best = std::max(best, 1 + solve(counts, total - length));
    for (std::size_t i = 0; i < block.size(); ++i) counts[i] += block[i];
  }
  memo_.emplace(std::move(k), static_cast<std::uint8_t>(best));
  return best;
}

int KmaxEngine::kmax(const Counts& counts) {
  if (counts.size() != static_cast<std::size_t>(table_.size())) {
    throw StructuralError("count vector does not match group order");
  }
  Counts rest = counts;
  const int zeros = rest[0];
  rest[0] = 0;
  int total = 0;
  for (auto c : rest) total += c;
  return zeros + solve(rest, total);
}

std::vector<Counts> KmaxEngine::packing(const Counts& counts) {
  const int n = table_.size();
  std::vector<Counts> blocks;
  for (int z = 0; z < counts[0]; ++z) {
    Counts b(static_cast<std::size_t>(n), 0);
    b[0] = 1;
    blocks.push_back(std::move(b));
  }
  Counts rest = counts;
  rest[0] = 0;
  int total = 0;
  for (auto c : rest) total += c;

  while (total >= 2) {
    const int value = solve(rest, total);
    if (value == 0) break;
    int first = -1;
    bool taken = false;
    for (const auto& block : blocks_containing_first(rest, first)) {
      int length = 0;
      for (std::size_t i = 0; i < block.size(); ++i) {
        rest[i] -= block[i];
        length += block[i];
      }
      if (1 + solve(rest, total - length) == value) {
        blocks.push_back(block);
        total -= length;
        taken = true;
        break;
      }
      for (std::size_t i = 0; i < block.size(); ++i) rest[i] += block[i];
    }
    if (!taken) {
      --rest[static_cast<std::size_t>(first)];
      --total;
    }
  }
  return blocks;
}

void KmaxEngine::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  out << table_.group().to_string() << '\n';
  for (const auto& [k, v] : memo_) {
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) out << ',';
      out << static_cast<int>(static_cast<unsigned char>(k[i]));
    }
    out << ' ' << static_cast<int>(v) << '\n';
  }
}

void KmaxEngine::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return;
  std::string header;
  std::getline(in, header);
  if (header != table_.group().to_string()) return;
  std::string line;
  while (std::getline(in, line)) {
    const auto space = line.find(' ');
    if (space == std::string::npos) continue;
    std::string k;
    std::stringstream counts(line.substr(0, space));
    for (std::string tok; std::getline(counts, tok, ',');) k.push_back(static_cast<char>(std::stoi(tok)));
    if (k.size() + 1 != static_cast<std::size_t>(table_.size())) continue;
    memo_.emplace(std::move(k), static_cast<std::uint8_t>(std::stoi(line.substr(space + 1))));
  }
}

}  // namespace zsl
