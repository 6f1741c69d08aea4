#pragma once

// Random generators shared by the property suites.

#include "ordlib/braid/word.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace ordlib::gen {

inline braid::BraidWord randomWord(std::mt19937_64& rng, int strands, int maxLength, int minLength = 0) {
  std::uniform_int_distribution<int> len(minLength, maxLength);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution positive(0.5);
  std::vector<braid::Letter> letters;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) letters.push_back(positive(rng) ? gen(rng) : -gen(rng));
  return braid::BraidWord(strands, letters);
}

/// Applies random braid relations (length-preserving) and, optionally, inserts
/// cancelling pairs, producing another spelling of the same braid.
inline std::vector<braid::Letter> respell(std::mt19937_64& rng, std::vector<braid::Letter> w, int strands,
                                          int steps, bool insertPairs = true) {
  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  for (int s = 0; s < steps; ++s) {
    const int action = coin(rng);
    if (w.size() < 2 && !insertPairs) break;
    if ((action == 0 && insertPairs) || w.size() < 2) {
      // insert s_i^e s_i^-e at a random place
      std::uniform_int_distribution<std::size_t> pos(0, w.size());
      const int i = gen(rng);
      const int e = coin(rng) % 2 == 0 ? 1 : -1;
      auto at = w.begin() + static_cast<std::ptrdiff_t>(pos(rng));
      at = w.insert(at, -e * i);
      w.insert(at, e * i);
      continue;
    }
    std::uniform_int_distribution<std::size_t> pos(0, w.size() - 2);
    const std::size_t p = pos(rng);
    const int a = w[p];
    const int b = w[p + 1];
    const int ia = a < 0 ? -a : a;
    const int ib = b < 0 ? -b : b;
    if (ia - ib >= 2 || ib - ia >= 2) {
      std::swap(w[p], w[p + 1]);  // far commutation holds for any signs
    } else if (p + 2 < w.size() && a == w[p + 2] && (ia - ib == 1 || ib - ia == 1) && (a > 0) == (b > 0)) {
      // s_i s_j s_i -> s_j s_i s_j for |i-j| = 1, same signs
      w[p] = b;
      w[p + 1] = a;
      w[p + 2] = b;
    }
  }
  return w;
}

}  // namespace ordlib::gen
