#pragma once

// Circular orderings as {0,1}-valued inhomogeneous cocycles, the left-ordered
// central extension they define, the inverse quotient construction, and
// algebraic rotation numbers.

#include "ordlib/order.hpp"

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ordlib {

template <class F, class E>
concept CocycleFunction = requires(const F& f, const E& a, const E& b) {
  { f(a, b) } -> std::convertible_to<int>;
};

/// Dense table of a cocycle on a finite group.
template <FiniteGroup G>
class CocycleTable {
 public:
  using element_type = ElementOf<G>;

  template <CocycleFunction<element_type> F>
  CocycleTable(G group, const F& f) : group_(std::move(group)), n_(group_.order()), table_(n_ * n_) {
    for (const auto& a : group_.elements()) {
      for (const auto& b : group_.elements()) set(a, b, f(a, b));
    }
  }

  int operator()(const element_type& a, const element_type& b) const {
    return table_[group_.index(a) * n_ + group_.index(b)];
  }
  void set(const element_type& a, const element_type& b, int value) {
    table_[group_.index(a) * n_ + group_.index(b)] = static_cast<std::uint8_t>(value);
  }
  const G& group() const noexcept { return group_; }

  friend bool operator==(const CocycleTable& x, const CocycleTable& y) { return x.table_ == y.table_; }

 private:
  G group_;
  std::size_t n_;
  std::vector<std::uint8_t> table_;
};

template <class E>
struct CocycleViolation {
  int axiom = 0;  // 0: value outside {0,1}; 1, 2, 3: the axiom that fails
  std::vector<E> witness;
};

/// Checks the circular-ordering axioms on every pair and triple drawn from `elements`:
///   (i)   f(g, g^-1) = 1 for g != id
///   (ii)  f(id, g) = f(g, id) = 0
///   (iii) f(g2, g3) - f(g1 g2, g3) + f(g1, g2 g3) - f(g1, g2) = 0
/// Violations are reported in lexicographic order of their witnesses.
template <Group G, CocycleFunction<ElementOf<G>> F>
std::vector<CocycleViolation<ElementOf<G>>> checkCocycle(const G& group, const F& f,
                                                         const std::vector<ElementOf<G>>& elements) {
  using E = ElementOf<G>;
  std::vector<CocycleViolation<E>> out;
  const E id = group.identity();
  for (const E& a : elements) {
    for (const E& b : elements) {
      int v = f(a, b);
      if (v != 0 && v != 1) out.push_back({0, {a, b}});
    }
  }
  for (const E& g : elements) {
    if (!group.equal(g, id) && f(g, group.inverse(g)) != 1) out.push_back({1, {g}});
  }
  for (const E& g : elements) {
    if (f(id, g) != 0 || f(g, id) != 0) out.push_back({2, {g}});
  }
  for (const E& g1 : elements) {
    for (const E& g2 : elements) {
      const E g12 = group.multiply(g1, g2);
      const int f12 = f(g1, g2);
      for (const E& g3 : elements) {
        int d = f(g2, g3) - f(g12, g3) + f(g1, group.multiply(g2, g3)) - f12;
        if (d != 0) out.push_back({3, {g1, g2, g3}});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lift group: G x Z with (g, n)(h, m) = (gh, n + m + f(g, h)).

template <class E>
struct Lifted {
  E base;
  std::int64_t height = 0;
};

namespace detail {
inline std::int64_t checkedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("lift height overflow");
  return r;
}
}  // namespace detail

/// The left-ordered central extension defined by a circular ordering f of `base`.
/// Positive cone: height >= 0, excluding (id, 0) which has sign Identity.
template <Group G, CocycleFunction<ElementOf<G>> F>
class LiftGroup {
 public:
  using base_element = ElementOf<G>;
  using element_type = Lifted<base_element>;

  LiftGroup(G base, F cocycle) : base_(std::move(base)), f_(std::move(cocycle)) {}

  const G& base() const noexcept { return base_; }
  const F& cocycle() const noexcept { return f_; }

  element_type identity() const { return {base_.identity(), 0}; }
  element_type multiply(const element_type& a, const element_type& b) const {
    return {base_.multiply(a.base, b.base),
            detail::checkedAdd(detail::checkedAdd(a.height, b.height), f_(a.base, b.base))};
  }
  /// (g, n)^-1 = (g^-1, -n - f(g, g^-1)).
  element_type inverse(const element_type& a) const {
    base_element inv = base_.inverse(a.base);
    return {inv, detail::checkedAdd(-a.height, -f_(a.base, inv))};
  }
  bool equal(const element_type& a, const element_type& b) const {
    return a.height == b.height && base_.equal(a.base, b.base);
  }
  OrderSign sign(const element_type& a) const {
    if (a.height < 0) return OrderSign::Negative;
    if (a.height == 0 && base_.equal(a.base, base_.identity())) return OrderSign::Identity;
    return OrderSign::Positive;
  }
  auto key(const element_type& a) const
    requires KeyedGroup<G>
  {
    return std::pair{base_.key(a.base), a.height};
  }

  /// The canonical positive central cofinal element (id, 1).
  element_type z() const { return {base_.identity(), 1}; }
  element_type lift(const base_element& g, std::int64_t height = 0) const { return {g, height}; }

 private:
  G base_;
  F f_;
};

/// Height of (g, k)^n computed by the closed form sum_{i=1}^{n-1} f(g^i, g) + n*k.
template <Group G, CocycleFunction<ElementOf<G>> F>
std::int64_t liftPowerHeight(const G& group, const F& f, const ElementOf<G>& g, std::int64_t k, int n) {
  std::int64_t h = 0;
  ElementOf<G> gi = g;
  for (int i = 1; i < n; ++i) {
    h += f(gi, g);
    gi = group.multiply(gi, g);
  }
  return detail::checkedAdd(h, static_cast<std::int64_t>(n) * k);
}

/// Translation-number bounds of (g, k) in the lift, from floors [(g,k)^n] = height of the
/// power for n = 1..N. Heights use the closed form; no sign queries are needed.
template <Group G, CocycleFunction<ElementOf<G>> F>
RationalInterval liftTranslationBounds(const G& group, const F& f, const ElementOf<G>& g,
                                       std::int64_t k, int N) {
  if (N < 1) throw std::invalid_argument("liftTranslationBounds: N must be >= 1");
  std::vector<std::int64_t> floors;
  floors.reserve(static_cast<std::size_t>(N));
  std::int64_t h = k;  // height of (g,k)^1
  ElementOf<G> gi = g;
  for (int n = 1; n <= N; ++n) {
    if (n > 1) {
      h = detail::checkedAdd(detail::checkedAdd(h, f(gi, g)), k);
      gi = group.multiply(gi, g);
    }
    floors.push_back(h);
  }
  return boundsFromFloors(floors);
}

/// Algebraic rotation number of g under the circular ordering f, reduced mod 1 so the
/// lower end lies in [0, 1). When g^n = id for some n <= N the value is exact and a
/// point interval is returned.
template <Group G, CocycleFunction<ElementOf<G>> F>
RationalInterval rotationNumber(const G& group, const F& f, const ElementOf<G>& g, int N) {
  if (N < 1) throw std::invalid_argument("rotationNumber: N must be >= 1");
  RationalInterval bounds = liftTranslationBounds(group, f, g, 0, N);
  ElementOf<G> gn = g;
  for (int n = 1; n <= N; ++n) {
    if (n > 1) gn = group.multiply(gn, g);
    if (group.equal(gn, group.identity())) {
      // (g,0)^n = z_f^h exactly, so [(g,0)^(jn)] = jh and the limit is h/n.
      bounds = RationalInterval::point(Rational(BigInt(liftPowerHeight(group, f, g, 0, n)), BigInt(n)));
      break;
    }
  }
  return bounds.shifted(-Rational(rationalFloor(bounds.lo())));
}

// ---------------------------------------------------------------------------
// Quotient by a central cofinal element: G/<z> with the circular ordering f_<.

/// G/<z> realised on coset representatives {g} = g z^-[g], which satisfy id <= {g} < z.
template <OrderedGroup G>
class QuotientGroup {
 public:
  using element_type = ElementOf<G>;

  QuotientGroup(G group, element_type z, std::int64_t budget = kDefaultFloorBudget)
      : group_(std::move(group)), z_(std::move(z)), budget_(budget) {}

  element_type representative(const element_type& g) const {
    return group_.multiply(g, power(group_, z_, -floorOf(group_, z_, g, budget_)));
  }
  element_type identity() const { return group_.identity(); }
  element_type multiply(const element_type& a, const element_type& b) const {
    return representative(group_.multiply(a, b));
  }
  element_type inverse(const element_type& a) const { return representative(group_.inverse(a)); }
  bool equal(const element_type& a, const element_type& b) const {
    return group_.equal(representative(a), representative(b));
  }

  const G& covering() const noexcept { return group_; }
  const element_type& z() const noexcept { return z_; }
  std::int64_t budget() const noexcept { return budget_; }

 private:
  G group_;
  element_type z_;
  std::int64_t budget_;
};

/// f_<(a<z>, b<z>) defined by {a}{b} = {ab} z^f, i.e. f = [{a}{b}].
template <OrderedGroup G>
class QuotientCocycle {
 public:
  explicit QuotientCocycle(QuotientGroup<G> quotient) : q_(std::move(quotient)) {}

  int operator()(const ElementOf<G>& a, const ElementOf<G>& b) const {
    const G& g = q_.covering();
    std::int64_t v = floorOf(g, q_.z(), g.multiply(q_.representative(a), q_.representative(b)), q_.budget());
    return static_cast<int>(v);
  }
  const QuotientGroup<G>& quotient() const noexcept { return q_; }

 private:
  QuotientGroup<G> q_;
};

template <OrderedGroup G>
QuotientCocycle<G> quotientCocycle(const G& group, const ElementOf<G>& z,
                                   std::int64_t budget = kDefaultFloorBudget) {
  return QuotientCocycle<G>(QuotientGroup<G>(group, z, budget));
}

}  // namespace ordlib
