#pragma once

// Left-greedy Garside normal form Delta^p A_1 ... A_k, the word-problem oracle for B_n.

#include "ordlib/braid/word.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

namespace ordlib::braid {

/// A positive permutation braid, stored as its permutation of {0..n-1} in one-line form.
/// The permutation of s_{i1} ... s_{ik} is s_{i1} o ... o s_{ik}, so appending s_i on the
/// right swaps positions i-1, i and prepending s_i on the left swaps values i-1, i.
class SimpleBraid {
 public:
  explicit SimpleBraid(int strands) : perm_(static_cast<std::size_t>(strands)) {
    std::iota(perm_.begin(), perm_.end(), std::uint8_t{0});
  }
  explicit SimpleBraid(std::vector<std::uint8_t> perm) : perm_(std::move(perm)) {}

  static SimpleBraid generator(int strands, int i) {
    SimpleBraid s(strands);
    s.appendGenerator(i);
    return s;
  }
  static SimpleBraid delta(int strands) {
    SimpleBraid s(strands);
    std::reverse(s.perm_.begin(), s.perm_.end());
    return s;
  }

  int strands() const noexcept { return static_cast<int>(perm_.size()); }
  const std::vector<std::uint8_t>& permutation() const noexcept { return perm_; }

  bool isIdentity() const {
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      if (perm_[i] != i) return false;
    }
    return true;
  }
  bool isDelta() const {
    const std::size_t n = perm_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (perm_[i] != n - 1 - i) return false;
    }
    return true;
  }

  /// i in the finishing set: the braid can be written ... s_i.
  bool endsWith(int i) const { return perm_[static_cast<std::size_t>(i - 1)] > perm_[static_cast<std::size_t>(i)]; }

  /// i in the starting set: the braid can be written s_i ....
  bool startsWith(int i) const { return position(i - 1) > position(i); }

  void appendGenerator(int i) {
    std::swap(perm_[static_cast<std::size_t>(i - 1)], perm_[static_cast<std::size_t>(i)]);
  }
  void prependGenerator(int i) {
    for (auto& v : perm_) {
      if (v == i - 1) {
        v = static_cast<std::uint8_t>(i);
      } else if (v == i) {
        v = static_cast<std::uint8_t>(i - 1);
      }
    }
  }

  /// Conjugation by Delta: s_i -> s_{n-i}.
  SimpleBraid flipped() const {
    const auto n = static_cast<std::uint8_t>(perm_.size());
    std::vector<std::uint8_t> out(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      out[n - 1 - i] = static_cast<std::uint8_t>(n - 1 - perm_[i]);
    }
    return SimpleBraid(std::move(out));
  }

  /// Delta * s_i^-1 as a simple braid: the permutation w0 o s_i.
  static SimpleBraid deltaOverGenerator(int strands, int i) {
    SimpleBraid s = delta(strands);
    s.appendGenerator(i);
    return s;
  }

  /// A reduced positive word for this permutation braid.
  std::vector<Letter> word() const {
    // Peel letters from the right: while some i is in the finishing set, remove s_i.
    SimpleBraid rest = *this;
    std::vector<Letter> rev;
    for (bool found = true; found;) {
      found = false;
      for (int i = 1; i < strands(); ++i) {
        if (rest.endsWith(i)) {
          rest.appendGenerator(i);
          rev.push_back(i);
          found = true;
          break;
        }
      }
    }
    return {rev.rbegin(), rev.rend()};
  }

  friend auto operator<=>(const SimpleBraid&, const SimpleBraid&) = default;

 private:
  int position(int value) const {
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      if (perm_[i] == value) return static_cast<int>(i);
    }
    return -1;
  }

  std::vector<std::uint8_t> perm_;
};

namespace detail {

/// Makes (a, b) left-weighted in place: moves starting letters of b that are not
/// finishing letters of a across. Returns whether anything moved.
inline bool leftWeight(SimpleBraid& a, SimpleBraid& b) {
  bool changed = false;
  const int n = a.strands();
  for (bool again = true; again;) {
    again = false;
    for (int i = 1; i < n; ++i) {
      if (b.startsWith(i) && !a.endsWith(i)) {
        a.appendGenerator(i);
        b.prependGenerator(i);
        again = changed = true;
      }
    }
  }
  return changed;
}

}  // namespace detail

/// Delta^p A_1 ... A_k with each A_j simple, neither identity nor Delta, and each
/// adjacent pair left-weighted. Two braids are equal iff their normal forms are.
struct NormalForm {
  int strands = 2;
  std::int64_t deltaPower = 0;
  std::vector<SimpleBraid> factors;

  bool isIdentity() const { return deltaPower == 0 && factors.empty(); }
  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

inline NormalForm normalForm(const BraidWord& u) {
  const int n = u.strands();
  NormalForm nf;
  nf.strands = n;

  // Rewrite s_i^-1 = Delta^-1 (Delta s_i^-1) and move every Delta^-1 to the front.
  // A factor passes to the left of Delta^-1 by flipping, so a factor gets flipped
  // once per inverse letter to its right.
  std::vector<SimpleBraid> raw;
  std::vector<std::int64_t> negativesBefore;
  raw.reserve(u.length());
  std::int64_t negatives = 0;
  for (Letter l : u.letters()) {
    if (l > 0) {
      raw.push_back(SimpleBraid::generator(n, l));
    } else {
      ++negatives;
      raw.push_back(SimpleBraid::deltaOverGenerator(n, -l));
    }
    negativesBefore.push_back(negatives);
  }
  nf.deltaPower = -negatives;

  std::vector<SimpleBraid>& out = nf.factors;
  for (std::size_t j = 0; j < raw.size(); ++j) {
    SimpleBraid x = (negatives - negativesBefore[j]) % 2 != 0 ? raw[j].flipped() : raw[j];
    out.push_back(std::move(x));
    for (std::size_t k = out.size() - 1; k > 0; --k) {
      if (!detail::leftWeight(out[k - 1], out[k])) break;
    }
  }

  std::size_t leading = 0;
  while (leading < out.size() && out[leading].isDelta()) ++leading;
  nf.deltaPower += static_cast<std::int64_t>(leading);
  out.erase(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(leading));
  while (!out.empty() && out.back().isIdentity()) out.pop_back();
  return nf;
}

/// Equality in B_n.
inline bool equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw StrandMismatch(u.strands(), v.strands());
  return normalForm(multiply(u, inverse(v))).isIdentity();
}

/// A word spelling the normal form.
inline BraidWord toWord(const NormalForm& nf) {
  BraidWord d = delta(nf.strands);
  BraidWord out = power(d, nf.deltaPower);
  for (const auto& f : nf.factors) {
    std::vector<Letter> w = f.word();
    out = multiply(out, BraidWord(nf.strands, w));
  }
  return out;
}

}  // namespace ordlib::braid
