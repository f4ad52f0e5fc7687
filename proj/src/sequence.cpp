#include "zsl/sequence.hpp"

#include <algorithm>
#include <cctype>

#include "zsl/errors.hpp"
#include "zsl/kmax_engine.hpp"

namespace zsl {

Sequence::Sequence(AbelianGroup group) : group_(std::move(group)) {}

Sequence::Sequence(AbelianGroup group, const std::vector<GroupElement>& elements)
    : group_(std::move(group)) {
  for (const auto& x : elements) insert(x);
}

Sequence Sequence::from_counts(AbelianGroup group, std::span<const std::uint16_t> counts) {
  if (static_cast<std::int64_t>(counts.size()) != group.order()) {
    throw StructuralError("count vector does not match group order");
  }
  Sequence s(std::move(group));
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) s.insert(s.group_.element_at(static_cast<std::int64_t>(i)), counts[i]);
  }
  return s;
}

std::size_t Sequence::multiplicity(const GroupElement& x) const {
  auto it = entries_.find(x);
  return it == entries_.end() ? 0 : it->second;
}

void Sequence::insert(const GroupElement& x, std::size_t times) {
  if (!group_.contains(x)) {
    throw StructuralError("element " + group_.format_element(x) + " is not valid for " +
                          group_.to_string());
  }
  if (times == 0) return;
  entries_[x] += times;
  length_ += times;
}

void Sequence::remove(const GroupElement& x, std::size_t times) {
  auto it = entries_.find(x);
  if (it == entries_.end() || it->second < times) {
    throw DomainError("cannot remove element not present with sufficient multiplicity");
  }
  it->second -= times;
  length_ -= times;
  if (it->second == 0) entries_.erase(it);
}

std::vector<GroupElement> Sequence::support() const {
  std::vector<GroupElement> out;
  for (const auto& [x, m] : entries_) out.push_back(x);
  return out;
}

std::vector<GroupElement> Sequence::elements() const {
  std::vector<GroupElement> out;
  out.reserve(length_);
  for (const auto& [x, m] : entries_) out.insert(out.end(), m, x);
  return out;
}

std::vector<std::int64_t> Sequence::encoding() const {
  std::vector<std::int64_t> out;
  out.reserve(length_);
  for (const auto& [x, m] : entries_) out.insert(out.end(), m, group_.index_of(x));
  return out;
}

std::vector<std::uint16_t> Sequence::counts() const {
  std::vector<std::uint16_t> out(static_cast<std::size_t>(group_.order()), 0);
  for (const auto& [x, m] : entries_) {
    if (m > 0xFFFF) throw CapacityError("multiplicity exceeds 65535");
    out[static_cast<std::size_t>(group_.index_of(x))] = static_cast<std::uint16_t>(m);
  }
  return out;
}

std::string Sequence::to_string() const {
  std::string s = "[";
  bool first = true;
  for (const auto& x : elements()) {
    if (!first) s += ',';
    first = false;
    s += group_.format_element(x);
  }
  return s + "]";
}

bool encoding_less(const Sequence& a, const Sequence& b) {
  const auto ea = a.encoding();
  const auto eb = b.encoding();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

GroupElement sequence_sum(const Sequence& s) {
  GroupElement total = s.group().zero();
  for (const auto& [x, m] : s.entries()) {
    total = add(s.group(), total, multiply(s.group(), static_cast<std::int64_t>(m), x));
  }
  return total;
}

bool is_zero_sum(const Sequence& s) { return sequence_sum(s) == s.group().zero(); }

namespace {

void require_same_group(const Sequence& s, const Sequence& t) {
  if (!(s.group() == t.group())) {
    throw StructuralError("sequences over different groups: " + s.group().to_string() + " and " +
                          t.group().to_string());
  }
}

}  // namespace

Sequence concat(const Sequence& s, const Sequence& t) {
  require_same_group(s, t);
  Sequence out = s;
  for (const auto& [x, m] : t.entries()) out.insert(x, m);
  return out;
}

bool divides(const Sequence& t, const Sequence& s) {
  require_same_group(s, t);
  for (const auto& [x, m] : t.entries()) {
    if (s.multiplicity(x) < m) return false;
  }
  return true;
}

Sequence difference(const Sequence& s, const Sequence& t) {
  if (!divides(t, s)) throw DomainError("difference requires t | s");
  Sequence out = s;
  for (const auto& [x, m] : t.entries()) out.remove(x, m);
  return out;
}

std::vector<Sequence> minimal_zero_sum_subsequences(const Sequence& s) {
  KmaxEngine engine(s.group());
  std::vector<Sequence> out;
  engine.for_each_minimal_block(s.counts(), -1, [&](const Counts& block) {
    out.push_back(Sequence::from_counts(s.group(), block));
  });
  std::sort(out.begin(), out.end(), encoding_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t k_max(const Sequence& s) {
  KmaxEngine engine(s.group());
  return static_cast<std::size_t>(engine.kmax(s.counts()));
}

KmaxResult k_max_with_witness(const Sequence& s) {
  KmaxEngine engine(s.group());
  const auto counts = s.counts();
  KmaxResult result;
  result.value = static_cast<std::size_t>(engine.kmax(counts));
  for (const auto& block : engine.packing(counts)) {
    result.witness.blocks.push_back(Sequence::from_counts(s.group(), block));
  }
  std::sort(result.witness.blocks.begin(), result.witness.blocks.end(), encoding_less);
  Sequence remainder = s;
  for (const auto& b : result.witness.blocks) remainder = difference(remainder, b);
  result.witness.remainder = remainder;
  return result;
}

std::size_t k_max_reference(const Sequence& s) {
  const AbelianGroup& group = s.group();
  const auto& n = group.invariant_factors();
  std::vector<GroupElement> support = s.support();
  std::vector<std::size_t> full;
  for (const auto& x : support) full.push_back(s.multiplicity(x));
  const std::size_t r = n.size();
  const std::size_t t = support.size();

  std::map<std::vector<std::size_t>, std::size_t> memo;

  // f(C) = max over non-empty zero-sum B <= C of 1 + f(C - B). The first
  // support position with C > 0 is either unused (drop one copy) or lies in B.
  auto f = [&](auto&& self, std::vector<std::size_t>& c) -> std::size_t {
    std::size_t first = t;
    for (std::size_t i = 0; i < t; ++i) {
      if (c[i] > 0) {
        first = i;
        break;
      }
    }
    if (first == t) return 0;
    if (auto it = memo.find(c); it != memo.end()) return it->second;

    --c[first];
    std::size_t best = self(self, c);
    ++c[first];

    // Odometer over b with b[first] >= 1, b[i] = 0 for i < first.
    std::vector<std::size_t> b(t, 0);
    std::vector<std::int64_t> sum(r, 0);
    auto bump = [&](std::size_t pos, std::int64_t times) {
      for (std::size_t j = 0; j < r; ++j) {
        sum[j] = ((sum[j] + times * support[pos].coords[j]) % n[j] + n[j]) % n[j];
      }
    };
    b[first] = 1;
    bump(first, 1);
    while (true) {
      if (std::all_of(sum.begin(), sum.end(), [](std::int64_t v) { return v == 0; })) {
        for (std::size_t i = 0; i < t; ++i) c[i] -= b[i];
        best = std::max(best, 1 + self(self, c));
        for (std::size_t i = 0; i < t; ++i) c[i] += b[i];
      }
      std::size_t pos = t;
      while (pos-- > first) {
        if (b[pos] < c[pos]) {
          ++b[pos];
          bump(pos, 1);
          break;
        }
        const std::size_t floor = pos == first ? 1 : 0;
        bump(pos, -static_cast<std::int64_t>(b[pos] - floor));
        b[pos] = floor;
        if (pos == first) {
          pos = t + 1;
          break;
        }
      }
      if (pos == t + 1) break;
    }
    memo.emplace(c, best);
    return best;
  };
  return f(f, full);
}

bool is_valid_packing(const Sequence& s, const BlockPacking& packing) {
  Sequence rebuilt = packing.remainder;
  if (!(rebuilt.group() == s.group())) return false;
  for (const auto& b : packing.blocks) {
    if (b.empty() || !is_zero_sum(b) || !(b.group() == s.group())) return false;
    rebuilt = concat(rebuilt, b);
  }
  return rebuilt == s;
}

Sequence canonical_form(const Sequence& s, std::span<const Automorphism> automorphisms) {
  std::vector<std::int64_t> best = s.encoding();
  for (const auto& a : automorphisms) {
    std::vector<std::int64_t> image;
    image.reserve(best.size());
    for (auto i : s.encoding()) image.push_back(a.permutation()[static_cast<std::size_t>(i)]);
    std::sort(image.begin(), image.end());
    if (image < best) best = std::move(image);
  }
  Sequence out(s.group());
  for (auto i : best) out.insert(s.group().element_at(i));
  return out;
}

Sequence parse_sequence(std::string_view text, const AbelianGroup& group) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos);
    }
    ++pos;
  };
  auto integer = [&]() -> std::int64_t {
    skip_ws();
    const std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && text[start] == '-')) {
      throw ParseError("expected integer", start);
    }
    return std::stoll(std::string(text.substr(start, pos - start)));
  };

  Sequence s(group);
  expect('[');
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      skip_ws();
      std::vector<std::int64_t> coords;
      if (pos < text.size() && text[pos] == '(') {
        ++pos;
        coords.push_back(integer());
        skip_ws();
        while (pos < text.size() && text[pos] == ',') {
          ++pos;
          coords.push_back(integer());
          skip_ws();
        }
        expect(')');
      } else {
        coords.push_back(integer());
      }
      if (group.rank() == 0 && coords.size() == 1 && coords[0] == 0) coords.clear();
      if (coords.size() != group.rank()) {
        throw ParseError("element has " + std::to_string(coords.size()) +
                             " coordinates but the group has rank " + std::to_string(group.rank()),
                         pos);
      }
      s.insert(group.element(std::move(coords)));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      expect(']');
      break;
    }
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return s;
}

}  // namespace zsl
