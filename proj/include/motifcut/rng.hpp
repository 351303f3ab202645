// Deterministic keyed hashing used for all randomness.
//
// Every random decision is a pure function of (seed, key words...), so the
// result does not depend on iteration order and identical inputs always
// reproduce identical outputs. The mixer is the splitmix64 finalizer.
#pragma once

#include <cstdint>

namespace motifcut {

inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline uint64_t hash_key(uint64_t seed, uint64_t a) { return mix64(mix64(seed) ^ a); }

inline uint64_t hash_key(uint64_t seed, uint64_t a, uint64_t b) {
  return mix64(hash_key(seed, a) ^ b);
}

inline uint64_t hash_key(uint64_t seed, uint64_t a, uint64_t b, uint64_t c) {
  return mix64(hash_key(seed, a, b) ^ c);
}

inline uint64_t hash_key(uint64_t seed, uint64_t a, uint64_t b, uint64_t c, uint64_t d) {
  return mix64(hash_key(seed, a, b, c) ^ d);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double to_unit(uint64_t h) { return static_cast<double>(h >> 11) * 0x1.0p-53; }

inline bool keyed_bernoulli(double p, uint64_t seed, uint64_t a, uint64_t b, uint64_t c) {
  return to_unit(hash_key(seed, a, b, c)) < p;
}

}  // namespace motifcut
