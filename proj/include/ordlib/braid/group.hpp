#pragma once

// B_n with the Dehornoy ordering as an OrderedGroup, with Delta^2 as its central
// cofinal element.

#include "ordlib/braid/dehornoy.hpp"
#include "ordlib/braid/garside.hpp"
#include "ordlib/braid/word.hpp"
#include "ordlib/order.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace ordlib::braid {

class BraidGroup {
 public:
  using element_type = BraidWord;

  explicit BraidGroup(int strands, std::size_t lengthBudgetFactor = kLengthBudgetFactor)
      : strands_(strands), lengthFactor_(lengthBudgetFactor) {
    if (strands < 2) throw InvalidBraid("braid groups need at least 2 strands");
  }

  int strands() const noexcept { return strands_; }
  std::size_t lengthBudgetFactor() const noexcept { return lengthFactor_; }

  BraidWord identity() const { return BraidWord(strands_); }
  BraidWord multiply(const BraidWord& a, const BraidWord& b) const { return braid::multiply(a, b); }
  BraidWord inverse(const BraidWord& a) const { return braid::inverse(a); }
  bool equal(const BraidWord& a, const BraidWord& b) const { return braid::equal(a, b); }
  OrderSign sign(const BraidWord& a) const {
    return dehornoySign(a, defaultLengthBudget(a.length(), lengthFactor_));
  }
  NormalForm key(const BraidWord& a) const { return normalForm(a); }

  BraidWord generator(int i, int sign = 1) const { return braid::generator(strands_, i, sign); }
  /// s_1^{+-1}, ..., s_{n-1}^{+-1}.
  std::vector<BraidWord> generatorsAndInverses() const {
    std::vector<BraidWord> out;
    for (int i = 1; i < strands_; ++i) {
      out.push_back(generator(i, 1));
      out.push_back(generator(i, -1));
    }
    return out;
  }
  BraidWord fullTwist() const { return deltaSquared(strands_); }

 private:
  int strands_;
  std::size_t lengthFactor_;
};

static_assert(OrderedGroup<BraidGroup>);
static_assert(KeyedGroup<BraidGroup>);

/// X = s_1 s_2 ... s_{n-1}, with X^n = Delta^2.
inline BraidWord rootX(int strands) {
  std::vector<Letter> letters;
  for (int i = 1; i < strands; ++i) letters.push_back(i);
  return BraidWord(strands, letters);
}

/// Y = s_1^2 s_2 ... s_{n-1}, with Y^{n-1} = Delta^2.
inline BraidWord rootY(int strands) {
  std::vector<Letter> letters{1};
  for (int i = 1; i < strands; ++i) letters.push_back(i);
  return BraidWord(strands, letters);
}

/// The certificate X^n = Delta^2, Y^{n-1} = Delta^2. X and Y generate B_n (YX^-1 = s_1 and
/// X conjugates s_i to s_{i+1}), so Delta^2 is cofinal in every left ordering of B_n.
inline RootCertificate<BraidWord> rootCertificate(int strands) {
  RootCertificate<BraidWord> cert{{}, deltaSquared(strands)};
  cert.entries.push_back({rootX(strands), strands, 1});
  cert.entries.push_back({rootY(strands), strands - 1, 1});
  return cert;
}

}  // namespace ordlib::braid
