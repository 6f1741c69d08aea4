#pragma once

// Dehornoy ordering of B_n decided by handle reduction.

#include "ordlib/braid/word.hpp"
#include "ordlib/errors.hpp"
#include "ordlib/order.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

namespace ordlib::braid {

inline constexpr std::size_t kLengthBudgetFactor = 64;

/// Default cap on intermediate word length: 64 * (input length + 1).
inline std::size_t defaultLengthBudget(std::size_t inputLength, std::size_t factor = kLengthBudgetFactor) {
  return factor * (inputLength + 1);
}

/// Removes s_i-handles s_i^e v s_i^-e (v free of s_j for j <= i) until none remain.
///
/// Each step reduces the handle whose closing letter comes first. Any handle nested
/// inside it would close earlier, so the chosen handle is always permitted, and the
/// output is a deterministic function of the input. Reducing replaces every
/// s_{i+1}^d inside v by s_{i+1}^-e s_i^d s_{i+1}^e and drops the two ends; adjacent
/// inverse letters are the empty handle, so free reduction happens along the way.
inline BraidWord handleReduce(const BraidWord& u, std::optional<std::size_t> lengthBudget = std::nullopt) {
  const std::size_t budget = lengthBudget.value_or(defaultLengthBudget(u.length()));
  std::vector<Letter> w = u.letters();
  std::vector<Letter> next;
  std::size_t j = 1;  // candidate closing position; no handle closes before j
  while (j < w.size()) {
    const Letter close = w[j];
    const int i = generatorIndex(close);
    std::size_t open = j;
    bool found = false;
    for (std::size_t k = j; k-- > 0;) {
      const int idx = generatorIndex(w[k]);
      if (idx > i) continue;
      if (idx == i && w[k] == -close) {
        open = k;
        found = true;
      }
      break;
    }
    if (!found) {
      ++j;
      continue;
    }

    const int e = w[open] > 0 ? 1 : -1;
    next.clear();
    next.reserve(w.size() + 2 * (j - open));
    next.insert(next.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(open));
    for (std::size_t k = open + 1; k < j; ++k) {
      const Letter l = w[k];
      if (generatorIndex(l) == i + 1) {
        const int d = l > 0 ? 1 : -1;
        next.push_back(-e * (i + 1));
        next.push_back(d * i);
        next.push_back(e * (i + 1));
      } else {
        next.push_back(l);
      }
    }
    next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(j) + 1, w.end());
    if (next.size() > budget) throw LengthBudgetExceeded(budget, next.size());
    w.swap(next);
    // The prefix before `open` is untouched and handle-free.
    j = open == 0 ? 1 : open;
  }
  return BraidWord(u.strands(), w);
}

struct DehornoyClass {
  enum class Kind { SigmaPositive, SigmaNegative, Trivial };
  Kind kind = Kind::Trivial;
  int index = 0;  // smallest generator index occurring; 0 when trivial

  friend bool operator==(const DehornoyClass&, const DehornoyClass&) = default;
};

/// Classifies a handle-free word by the sign of its smallest generator.
inline DehornoyClass classifyReduced(const BraidWord& reduced) {
  if (reduced.empty()) return {};
  int smallest = reduced.strands();
  for (Letter l : reduced.letters()) smallest = std::min(smallest, generatorIndex(l));
  for (Letter l : reduced.letters()) {
    if (generatorIndex(l) == smallest) {
      return {l > 0 ? DehornoyClass::Kind::SigmaPositive : DehornoyClass::Kind::SigmaNegative, smallest};
    }
  }
  return {};
}

inline DehornoyClass dehornoyClass(const BraidWord& u, std::optional<std::size_t> lengthBudget = std::nullopt) {
  return classifyReduced(handleReduce(u, lengthBudget));
}

/// s_i-positive words are positive, s_i-negative negative, the trivial braid is the identity.
inline OrderSign dehornoySign(const BraidWord& u, std::optional<std::size_t> lengthBudget = std::nullopt) {
  switch (dehornoyClass(u, lengthBudget).kind) {
    case DehornoyClass::Kind::SigmaPositive: return OrderSign::Positive;
    case DehornoyClass::Kind::SigmaNegative: return OrderSign::Negative;
    case DehornoyClass::Kind::Trivial: return OrderSign::Identity;
  }
  return OrderSign::Identity;
}

}  // namespace ordlib::braid
