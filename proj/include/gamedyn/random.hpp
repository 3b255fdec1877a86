#pragma once

#include <cstdint>
#include <random>

#include "gamedyn/errors.hpp"

namespace gamedyn {

// Deterministic uniform stream over std::mt19937_64. One stream per run;
// callers own the stream, nothing is shared.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform double in [0, 1).
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform index in [0, n).
  std::size_t next_index(std::size_t n) {
    if (n == 0) {
      throw PreconditionError("next_index: n must be positive");
    }
    std::size_t i = static_cast<std::size_t>(next_unit() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gamedyn
