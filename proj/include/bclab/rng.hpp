#pragma once

#include <cstdint>

namespace bclab {

/// SplitMix64. Seeds reproduce across implementations:
///   state += 0x9E3779B97F4A7C15;
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31);
/// uniform(n) is next() % n.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t uniform(std::uint64_t n) { return next() % n; }

  /// Uniform in {-1, 0, 1}.
  int ternary() { return static_cast<int>(uniform(3)) - 1; }

 private:
  std::uint64_t state_;
};

}  // namespace bclab
