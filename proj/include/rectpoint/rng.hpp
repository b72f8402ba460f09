#pragma once

#include <cstdint>

namespace rectpoint::rng {

// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based draw: the value depends only on (seed, index, trial, slot),
// never on call order, so parallel runs reproduce sequential output exactly.
inline std::uint64_t draw(std::uint64_t seed, std::uint64_t index,
                          std::uint64_t trial, std::uint64_t slot) {
  std::uint64_t h = mix64(seed ^ 0x5bf03635d3b89a7dULL);
  h = mix64(h ^ index);
  h = mix64(h ^ (trial * 0x9e3779b97f4a7c15ULL + 1));
  h = mix64(h ^ (slot + 0x632be59bd9b4e019ULL));
  return h;
}

// Uniform value in [lo, hi], inclusive. Modulo bias is ~range/2^64.
inline std::int64_t draw_in(std::uint64_t seed, std::uint64_t index,
                            std::uint64_t trial, std::uint64_t slot,
                            std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(draw(seed, index, trial, slot) % range);
}

}  // namespace rectpoint::rng
