#pragma once

#include <complex>
#include <cstdint>

namespace svv {

/// splitmix64 stream. The exact update sequence is part of the file-format
/// contract: emitted systems must be reproducible bit-for-bit from a seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [-range, range].
  std::int64_t next_entry(int range) {
    return static_cast<std::int64_t>(next() % (2 * static_cast<std::uint64_t>(range) + 1)) - range;
  }

  /// Signed 63-bit fraction in [-1, 1).
  double next_unit() {
    return static_cast<double>(static_cast<std::int64_t>(next())) / 9223372036854775808.0;
  }

  /// Two consecutive draws give the real and imaginary parts.
  std::complex<double> next_complex() {
    double re = next_unit();
    double im = next_unit();
    return {re, im};
  }

 private:
  std::uint64_t state_;
};

}  // namespace svv
