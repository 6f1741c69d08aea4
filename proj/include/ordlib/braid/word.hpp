#pragma once

// Braid words in Artin generators and the homomorphisms B_n -> S_n and B_n -> Z.

#include "ordlib/errors.hpp"

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ordlib::braid {

/// A letter s_i^{+1} is stored as +i, s_i^{-1} as -i (1-based, never 0).
using Letter = int;

inline int generatorIndex(Letter l) { return l < 0 ? -l : l; }

namespace detail {
inline void freelyReduceInto(std::vector<Letter>& out, std::span<const Letter> letters) {
  for (Letter l : letters) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
}
}  // namespace detail

/// An immutable, freely reduced word in s_1..s_{n-1} and their inverses.
class BraidWord {
 public:
  explicit BraidWord(int strands) : strands_(strands) { checkStrands(); }

  BraidWord(int strands, std::span<const Letter> letters) : strands_(strands) {
    checkStrands();
    for (Letter l : letters) {
      if (l == 0 || generatorIndex(l) > strands_ - 1) {
        throw InvalidBraid("generator index " + std::to_string(l) + " out of range for B_" +
                           std::to_string(strands_));
      }
    }
    detail::freelyReduceInto(letters_, letters);
  }

  BraidWord(int strands, std::initializer_list<Letter> letters)
      : BraidWord(strands, std::span<const Letter>(letters.begin(), letters.size())) {}

  int strands() const noexcept { return strands_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Syntactic equality of reduced words (not equality in the group).
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  friend BraidWord multiply(const BraidWord&, const BraidWord&);
  friend BraidWord inverse(const BraidWord&);

  struct Trusted {};
  BraidWord(Trusted, int strands, std::vector<Letter> letters)
      : strands_(strands), letters_(std::move(letters)) {}

  void checkStrands() const {
    if (strands_ < 2) throw InvalidBraid("braid groups need at least 2 strands");
  }

  int strands_;
  std::vector<Letter> letters_;
};

inline BraidWord multiply(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw StrandMismatch(u.strands(), v.strands());
  std::vector<Letter> out;
  out.reserve(u.length() + v.length());
  out = u.letters();
  detail::freelyReduceInto(out, v.letters());
  return BraidWord(BraidWord::Trusted{}, u.strands(), std::move(out));
}

inline BraidWord inverse(const BraidWord& u) {
  std::vector<Letter> out(u.letters().rbegin(), u.letters().rend());
  for (Letter& l : out) l = -l;
  return BraidWord(BraidWord::Trusted{}, u.strands(), std::move(out));
}

/// u^k, with negative k meaning powers of the inverse.
inline BraidWord power(const BraidWord& u, std::int64_t k) {
  BraidWord base = k < 0 ? inverse(u) : u;
  BraidWord out(u.strands());
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out = multiply(out, base);
  return out;
}

inline BraidWord generator(int strands, int i, int sign = 1) {
  return BraidWord(strands, {sign < 0 ? -i : i});
}

/// Garside half twist (s_1 ... s_{n-1})(s_1 ... s_{n-2}) ... (s_1).
inline BraidWord delta(int strands) {
  std::vector<Letter> letters;
  for (int top = strands - 1; top >= 1; --top) {
    for (int i = 1; i <= top; ++i) letters.push_back(i);
  }
  return BraidWord(strands, letters);
}

/// The full twist, generating the centre of B_n for n >= 3.
inline BraidWord deltaSquared(int strands) {
  BraidWord d = delta(strands);
  return multiply(d, d);
}

/// Image in S_n as a 1-based one-line permutation; letters act on the right, so
/// the result for s_{i1} ... s_{ik} is the composite s_{i1} o ... o s_{ik}.
inline std::vector<int> permutationOf(const BraidWord& u) {
  std::vector<int> perm(static_cast<std::size_t>(u.strands()));
  std::iota(perm.begin(), perm.end(), 1);
  for (Letter l : u.letters()) {
    int i = generatorIndex(l);
    std::swap(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(i)]);
  }
  return perm;
}

/// Abelianisation B_n -> Z.
inline std::int64_t exponentSum(const BraidWord& u) {
  std::int64_t e = 0;
  for (Letter l : u.letters()) e += l > 0 ? 1 : -1;
  return e;
}

/// "s1 s2^-1 s1", or "e" for the empty word.
inline std::string toString(const BraidWord& u) {
  if (u.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < u.length(); ++i) {
    if (i != 0) out += ' ';
    Letter l = u.letters()[i];
    out += 's' + std::to_string(generatorIndex(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const BraidWord& u) { return os << toString(u); }

}  // namespace ordlib::braid
