#pragma once

#include <cstdint>
#include <random>

#include "hymcg/words.hpp"

namespace hymcg {

/// Uniform draw from [0, bound) by rejection; bit-reproducible across
/// platforms, unlike std::uniform_int_distribution.
inline std::uint64_t uniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// Random word of the given letter count with exponents in
/// [-maxExpAbs, maxExpAbs] \ {0}.
TwistWord randomWord(int genus, int letterCount, int maxExpAbs,
                     std::mt19937_64& rng);

/// Random product of squared generators t_i^{+-2}; lands in the mod-2 kernel
/// by construction.
TwistWord randomSquareWord(int genus, int letterCount, std::mt19937_64& rng);

}  // namespace hymcg
