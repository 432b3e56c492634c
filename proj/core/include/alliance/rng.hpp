#pragma once

#include <cstdint>

namespace alliance {

// splitmix64: stable across platforms, good enough for trial streams and
// test-instance generation. Not for cryptography.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound), bound >= 1
  std::uint64_t below(std::uint64_t bound) {
    // rejection sampling keeps the distribution exact
    std::uint64_t limit = ~0ULL - ~0ULL % bound;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return next() & 1; }

 private:
  std::uint64_t state_;
};

// Derives an independent stream for (seed, index) pairs; used so that work
// item i can be recomputed in isolation regardless of execution order.
inline SplitMix64 stream_for(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mixer(seed ^ (0x6a09e667f3bcc909ULL + index * 0x9e3779b97f4a7c15ULL));
  return SplitMix64(mixer.next());
}

}  // namespace alliance
