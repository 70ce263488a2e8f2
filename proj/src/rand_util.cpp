#include "hymcg/rand_util.hpp"

namespace hymcg {

TwistWord randomWord(int genus, int letterCount, int maxExpAbs,
                     std::mt19937_64& rng) {
  std::vector<TwistLetter> letters;
  letters.reserve(letterCount);
  const int alphabet = 2 * genus + 1;
  for (int i = 0; i < letterCount; ++i) {
    const int index = static_cast<int>(uniformBelow(rng, alphabet)) + 1;
    const auto mag = static_cast<int>(uniformBelow(rng, maxExpAbs)) + 1;
    const bool neg = uniformBelow(rng, 2) == 1;
    letters.push_back({index, BigInt(neg ? -mag : mag)});
  }
  return TwistWord(genus, std::move(letters));
}

TwistWord randomSquareWord(int genus, int letterCount, std::mt19937_64& rng) {
  std::vector<TwistLetter> letters;
  letters.reserve(letterCount);
  const int alphabet = 2 * genus + 1;
  for (int i = 0; i < letterCount; ++i) {
    const int index = static_cast<int>(uniformBelow(rng, alphabet)) + 1;
    const bool neg = uniformBelow(rng, 2) == 1;
    letters.push_back({index, BigInt(neg ? -2 : 2)});
  }
  return TwistWord(genus, std::move(letters));
}

}  // namespace hymcg
