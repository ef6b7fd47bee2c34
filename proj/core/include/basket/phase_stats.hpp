#pragma once

#include <chrono>
#include <cstddef>

namespace basket {

/// Per-run timing split used by the benchmark harness.
struct PhaseStats {
  std::chrono::nanoseconds build{0};
  std::chrono::nanoseconds mine{0};
  /// Largest candidate set (Apriori, oracle) or FP-tree node count.
  std::size_t peak_structures = 0;

  std::chrono::nanoseconds total() const noexcept { return build + mine; }
};

}  // namespace basket
