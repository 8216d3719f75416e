#pragma once

#include <cstdint>
#include <string>

namespace npc {

// splitmix64.  Chosen over std::mt19937_64 + distributions because the
// whole pipeline must be bit-reproducible across platforms and standard
// library versions; uniformity is via rejection sampling.
struct RandomStream {
  uint64_t state;

  explicit RandomStream(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), n >= 1.
  uint32_t below(uint32_t n) {
    uint64_t limit = ~0ull - ~0ull % n;
    uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return static_cast<uint32_t>(r % n);
  }
};

inline uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline uint64_t mix_seed(uint64_t a, uint64_t b) {
  RandomStream s(a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2)));
  return s.next();
}

// Stream for one purpose: every random draw in the library derives its
// state from (master seed, purpose tag, counter), never from call order.
inline RandomStream derived_stream(uint64_t master, const std::string& tag,
                                   uint64_t counter) {
  return RandomStream(mix_seed(mix_seed(master, fnv1a64(tag)), counter));
}

}  // namespace npc
