#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace zsl {

struct SearchLimits {
  using Clock = std::chrono::steady_clock;

  std::int64_t max_group_order = 64;
  // Groups whose automorphism count exceeds this are searched without
  // symmetry reduction.
  std::size_t max_automorphisms = 5000;
  // Degree-slice size cap for the graded linear algebra.
  std::size_t max_slice_monomials = 20000;
  std::optional<Clock::time_point> deadline;

  static SearchLimits with_budget(double seconds) {
    SearchLimits limits;
    limits.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(seconds));
    return limits;
  }

  bool expired() const { return deadline && Clock::now() > *deadline; }

  // Throws CapacityError naming `what` once the deadline has passed.
  void check_deadline(std::string_view what) const;
};

}  // namespace zsl
