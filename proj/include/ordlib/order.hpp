#pragma once

// Left-ordered groups given by a sign oracle, floors against a central cofinal
// element, algebraic translation numbers and root certificates.

#include "ordlib/errors.hpp"
#include "ordlib/rational.hpp"

#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace ordlib {

enum class OrderSign : int { Negative = -1, Identity = 0, Positive = 1 };

inline OrderSign reversed(OrderSign s) { return static_cast<OrderSign>(-static_cast<int>(s)); }

inline const char* toString(OrderSign s) {
  switch (s) {
    case OrderSign::Negative: return "negative";
    case OrderSign::Identity: return "identity";
    case OrderSign::Positive: return "positive";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, OrderSign s) { return os << toString(s); }

/// A group given by its operations and an equality oracle.
template <class G>
concept Group = requires(const G& group, const typename G::element_type& a,
                         const typename G::element_type& b) {
  typename G::element_type;
  { group.identity() } -> std::convertible_to<typename G::element_type>;
  { group.multiply(a, b) } -> std::convertible_to<typename G::element_type>;
  { group.inverse(a) } -> std::convertible_to<typename G::element_type>;
  { group.equal(a, b) } -> std::convertible_to<bool>;
};

/// A group with a sign oracle for a left ordering.
/// The positive cone is {g : sign(g) == Positive}.
template <class G>
concept OrderedGroup = Group<G> && requires(const G& group, const typename G::element_type& a) {
  { group.sign(a) } -> std::same_as<OrderSign>;
};

/// A finite group that can enumerate its elements and index them densely.
template <class G>
concept FiniteGroup = Group<G> && requires(const G& group, const typename G::element_type& a) {
  { group.order() } -> std::convertible_to<std::size_t>;
  { group.elements() } -> std::convertible_to<std::vector<typename G::element_type>>;
  { group.index(a) } -> std::convertible_to<std::size_t>;
};

/// Groups whose elements have a totally ordered canonical key: key(a) == key(b) iff a == b.
/// Used for table lookups; the equality oracle stays authoritative.
template <class G>
concept KeyedGroup = Group<G> && requires(const G& group, const typename G::element_type& a) {
  { group.key(a) } -> std::totally_ordered;
};

template <Group G>
using ElementOf = typename G::element_type;

/// sign(g^-1 h): Positive means g < h, Negative means g > h.
template <OrderedGroup G>
OrderSign compare(const G& group, const ElementOf<G>& g, const ElementOf<G>& h) {
  return group.sign(group.multiply(group.inverse(g), h));
}

template <OrderedGroup G>
bool less(const G& group, const ElementOf<G>& g, const ElementOf<G>& h) {
  return compare(group, g, h) == OrderSign::Positive;
}

/// g^k by repeated squaring; negative k uses the inverse.
template <Group G>
ElementOf<G> power(const G& group, const ElementOf<G>& g, std::int64_t k) {
  ElementOf<G> base = k < 0 ? group.inverse(g) : g;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  ElementOf<G> result = group.identity();
  while (e != 0) {
    if (e & 1U) result = group.multiply(result, base);
    e >>= 1U;
    if (e != 0) base = group.multiply(base, base);
  }
  return result;
}

inline constexpr std::int64_t kDefaultFloorBudget = std::int64_t{1} << 20;

/// Checks that z is positive and commutes with each sample (the checkable part of
/// being a central cofinal element); returns the first failing sample index
/// (or samples.size() when only positivity fails), nullopt when everything passes.
template <OrderedGroup G>
std::optional<std::size_t> checkCentralPositive(const G& group, const ElementOf<G>& z,
                                                const std::vector<ElementOf<G>>& samples) {
  if (group.sign(z) != OrderSign::Positive) return samples.size();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!group.equal(group.multiply(z, samples[i]), group.multiply(samples[i], z))) return i;
  }
  return std::nullopt;
}

/// The unique k with z^k <= g < z^(k+1).
///
/// Doubles the exponent outward from 0 until it brackets g, then bisects, so the
/// number of sign queries is O(log |k|). Throws CofinalityBudgetExceeded when
/// |k| > budget. Each query is sign(z^-j g) which is
/// non-negative exactly when z^j <= g.
template <OrderedGroup G>
std::int64_t floorOf(const G& group, const ElementOf<G>& z, const ElementOf<G>& g,
                     std::int64_t budget = kDefaultFloorBudget) {
  const ElementOf<G> zInv = group.inverse(z);
  auto atOrBelow = [&](std::int64_t j) {  // z^j <= g
    return group.sign(group.multiply(power(group, zInv, j), g)) != OrderSign::Negative;
  };

  // Invariant after bracketing: atOrBelow(lo) && !atOrBelow(hi).
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  if (atOrBelow(0)) {
    std::int64_t step = 1;
    for (;;) {
      if (step > budget) {
        if (lo > budget) throw CofinalityBudgetExceeded(budget);
        step = budget + 1;
      }
      if (!atOrBelow(step)) {
        hi = step;
        break;
      }
      lo = step;
      step *= 2;
    }
  } else {
    hi = 0;
    std::int64_t step = 1;
    for (;;) {
      if (step > budget) {
        if (hi <= -budget) throw CofinalityBudgetExceeded(budget);
        step = budget;
      }
      if (atOrBelow(-step)) {
        lo = -step;
        break;
      }
      hi = -step;
      step *= 2;
    }
  }
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (atOrBelow(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

/// Re-checks z^k <= g < z^(k+1) with two sign queries.
template <OrderedGroup G>
bool isFloor(const G& group, const ElementOf<G>& z, const ElementOf<G>& g, std::int64_t k) {
  ElementOf<G> zk = power(group, z, k);
  ElementOf<G> zk1 = group.multiply(zk, z);
  return compare(group, zk, g) != OrderSign::Negative && compare(group, g, zk1) == OrderSign::Positive;
}

/// Floors [g^n] for n = 1..N, in order.
template <OrderedGroup G>
std::vector<std::int64_t> powerFloors(const G& group, const ElementOf<G>& z, const ElementOf<G>& g,
                                      int N, std::int64_t budget = kDefaultFloorBudget) {
  std::vector<std::int64_t> floors;
  floors.reserve(static_cast<std::size_t>(N));
  ElementOf<G> gn = g;
  for (int n = 1; n <= N; ++n) {
    if (n > 1) gn = group.multiply(gn, g);
    floors.push_back(floorOf(group, z, gn, budget));
  }
  return floors;
}

/// [max_n [g^n]/n, min_n ([g^n]+1)/n] over n = 1..floors.size().
inline RationalInterval boundsFromFloors(const std::vector<std::int64_t>& floors) {
  if (floors.empty()) throw std::invalid_argument("boundsFromFloors: need at least one floor");
  Rational lo(floors[0]);
  Rational hi(floors[0] + 1);
  for (std::size_t i = 1; i < floors.size(); ++i) {
    const BigInt n(static_cast<std::int64_t>(i + 1));
    lo = std::max(lo, Rational(BigInt(floors[i]), n));
    hi = std::min(hi, Rational(BigInt(floors[i] + 1), n));
  }
  return {lo, hi};
}

/// Bounds on the algebraic translation number lim [g^n]/n from the first N powers.
/// Every n gives [g^n] <= n*tau < [g^n]+1, and the lower bound converges (Fekete).
template <OrderedGroup G>
RationalInterval translationBounds(const G& group, const ElementOf<G>& z, const ElementOf<G>& g,
                                   int N, std::int64_t budget = kDefaultFloorBudget) {
  if (N < 1) throw std::invalid_argument("translationBounds: N must be >= 1");
  return boundsFromFloors(powerFloors(group, z, g, N, budget));
}

/// First n in 1..N with g^n = z^k, returned as (n, k). The floor sequence is then
/// exactly linear and the translation number is k/n.
template <OrderedGroup G>
std::optional<std::pair<int, std::int64_t>> findRootIdentity(const G& group, const ElementOf<G>& z,
                                                             const ElementOf<G>& g, int N,
                                                             std::int64_t budget = kDefaultFloorBudget) {
  ElementOf<G> gn = g;
  for (int n = 1; n <= N; ++n) {
    if (n > 1) gn = group.multiply(gn, g);
    std::int64_t k = floorOf(group, z, gn, budget);
    if (group.equal(gn, power(group, z, k))) return std::pair{n, k};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Root certificates: g_i^{n_i} = z^{m_i} for a generating set makes z cofinal in
// every left ordering of the group they generate.

template <class E>
struct RootEntry {
  E element;
  std::int64_t n = 1;
  std::int64_t m = 1;
};

template <class E>
struct RootCertificate {
  std::vector<RootEntry<E>> entries;
  E z;
};

struct RootVerification {
  bool verified = true;
  std::optional<std::size_t> witness;  // index of the first entry whose identity fails

  explicit operator bool() const noexcept { return verified; }
};

template <Group G>
RootVerification verifyRootCertificate(const G& group, const RootCertificate<ElementOf<G>>& cert) {
  for (std::size_t i = 0; i < cert.entries.size(); ++i) {
    if (cert.entries[i].n == 0 || cert.entries[i].m == 0) throw ZeroExponent(i);
  }
  for (std::size_t i = 0; i < cert.entries.size(); ++i) {
    const auto& e = cert.entries[i];
    if (!group.equal(power(group, e.element, e.n), power(group, cert.z, e.m))) {
      return {false, i};
    }
  }
  return {};
}

}  // namespace ordlib
