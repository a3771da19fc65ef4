#pragma once

#include <cstdint>

namespace corelab {

// Deterministic splitmix64 stream.  All randomized operations take explicit
// seeds and draw through this, so runs replay bit-identically across
// platforms (std:: distributions are implementation-defined; this is not).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) by rejection.
  uint64_t below(uint64_t n) {
    if (n == 0) return 0;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  // Independent child stream.
  Rng fork(uint64_t salt) const {
    Rng child(state_ ^ (0x632be59bd9b4e019ULL + salt * 0x9e3779b97f4a7c15ULL));
    child.next();
    return child;
  }

 private:
  uint64_t state_;
};

}  // namespace corelab
