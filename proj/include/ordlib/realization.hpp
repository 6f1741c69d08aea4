#pragma once

// Finite dynamic realisations: tight embeddings of order balls into Q, the
// partial action rho(g)(t(h)) = t(gh) they induce, Euler cocycle values and
// translation estimates read off the action.

#include "ordlib/errors.hpp"
#include "ordlib/order.hpp"
#include "ordlib/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ordlib {

template <class G>
concept RealizableGroup = OrderedGroup<G> && KeyedGroup<G>;

template <RealizableGroup G>
using KeyOf = decltype(std::declval<const G&>().key(std::declval<const ElementOf<G>&>()));

/// Word-metric ball of the given radius, in shortlex order of the first word
/// reaching each element. Generators are right multipliers, used in the order given.
template <RealizableGroup G>
std::vector<ElementOf<G>> ballOf(const G& group, const std::vector<ElementOf<G>>& generators, int radius,
                                 std::size_t maxElements = 1 << 16) {
  std::vector<ElementOf<G>> ball{group.identity()};
  std::map<KeyOf<G>, std::size_t> seen{{group.key(ball.front()), 0}};
  std::size_t levelStart = 0;
  for (int r = 0; r < radius; ++r) {
    const std::size_t levelEnd = ball.size();
    for (std::size_t i = levelStart; i < levelEnd; ++i) {
      for (const auto& s : generators) {
        ElementOf<G> g = group.multiply(ball[i], s);
        if (seen.emplace(group.key(g), ball.size()).second) {
          if (ball.size() >= maxElements) {
            throw ResourceLimitError("ball exceeds " + std::to_string(maxElements) + " elements");
          }
          ball.push_back(std::move(g));
        }
      }
    }
    levelStart = levelEnd;
  }
  return ball;
}

template <class E>
struct EmbeddedPoint {
  E element;
  Rational coord;
};

/// Order-preserving coordinates t on a finite ball, with t(id) = 0 and, when a
/// central cofinal z is given, t(z^k g) = t(g) + k.
template <RealizableGroup G>
class EmbeddingTable {
 public:
  using element_type = ElementOf<G>;
  using Point = EmbeddedPoint<element_type>;

  EmbeddingTable(G group, std::vector<Point> points, std::optional<element_type> z)
      : group_(std::move(group)), points_(std::move(points)), z_(std::move(z)) {
    std::sort(points_.begin(), points_.end(), [](const Point& a, const Point& b) { return a.coord < b.coord; });
    for (std::size_t i = 0; i < points_.size(); ++i) index_.emplace(group_.key(points_[i].element), i);
  }

  const G& group() const noexcept { return group_; }
  /// Points sorted by coordinate.
  const std::vector<Point>& points() const noexcept { return points_; }
  const std::optional<element_type>& z() const noexcept { return z_; }
  std::size_t size() const noexcept { return points_.size(); }

  std::optional<Rational> coordOf(const element_type& g) const {
    auto it = index_.find(group_.key(g));
    if (it == index_.end()) return std::nullopt;
    return points_[it->second].coord;
  }
  bool contains(const element_type& g) const { return index_.contains(group_.key(g)); }

 private:
  G group_;
  std::vector<Point> points_;
  std::optional<element_type> z_;
  std::map<KeyOf<G>, std::size_t> index_;
};

namespace detail {

// Inserts elements one at a time into an order-sorted list and gives each the
// midpoint of its placed neighbours. A missing upper neighbour is highEnd when
// set; otherwise a missing neighbour means stepping 1 past the nearest coordinate.
template <RealizableGroup G>
class MidpointPlacer {
 public:
  MidpointPlacer(const G& group, std::optional<Rational> highEnd) : group_(group), highEnd_(std::move(highEnd)) {}

  void pin(const ElementOf<G>& g, const Rational& c) { insertAt(position(g), g, c); }

  // Returns the coordinate of g, placing it if new.
  Rational place(const ElementOf<G>& g) {
    auto key = group_.key(g);
    if (auto it = coords_.find(key); it != coords_.end()) return it->second;
    const std::size_t pos = position(g);
    std::optional<Rational> lo;
    std::optional<Rational> hi = highEnd_;
    if (pos > 0) lo = sorted_[pos - 1].coord;
    if (pos < sorted_.size()) hi = sorted_[pos].coord;
    Rational c;
    if (lo && hi) {
      c = (*lo + *hi) / 2;
    } else if (lo) {
      c = *lo + 1;
    } else if (hi) {
      c = *hi - 1;
    } else {
      c = 0;
    }
    insertAt(pos, g, c);
    return c;
  }

 private:
  // First index whose element is greater than g.
  std::size_t position(const ElementOf<G>& g) const {
    std::size_t lo = 0;
    std::size_t hi = sorted_.size();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (less(group_, g, sorted_[mid].element)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return lo;
  }

  void insertAt(std::size_t pos, const ElementOf<G>& g, const Rational& c) {
    sorted_.insert(sorted_.begin() + static_cast<std::ptrdiff_t>(pos), {g, c});
    coords_.emplace(group_.key(g), c);
  }

  const G& group_;
  std::optional<Rational> highEnd_;
  std::vector<EmbeddedPoint<ElementOf<G>>> sorted_;
  std::map<KeyOf<G>, Rational> coords_;
};

}  // namespace detail

/// Tight embedding of a ball containing id, processed in the ball's order (use
/// ballOf for the shortlex order).
///
/// With z: the representatives {g} = g z^-[g] lie in [id, z); they are placed in
/// [0, 1) by the midpoint rule with id at 0 and a virtual anchor at 1, and
/// t(g) = t({g}) + [g]. So t(z^k) = k, floor(t(g)) = [g], and t(zg) = t(g) + 1.
/// Without z: id at 0, then midpoints, stepping by 1 past either end.
template <RealizableGroup G>
EmbeddingTable<G> tightEmbedBall(const G& group, const std::vector<ElementOf<G>>& ball,
                                 const std::optional<ElementOf<G>>& z = std::nullopt,
                                 std::int64_t floorBudget = kDefaultFloorBudget) {
  using E = ElementOf<G>;
  std::vector<EmbeddedPoint<E>> points;
  points.reserve(ball.size());
  std::map<KeyOf<G>, bool> seen;
  detail::MidpointPlacer<G> placer(group, z ? std::optional<Rational>(1) : std::nullopt);
  placer.pin(group.identity(), Rational(0));
  for (const E& g : ball) {
    if (!seen.emplace(group.key(g), true).second) continue;
    if (z) {
      const std::int64_t k = floorOf(group, *z, g, floorBudget);
      const E rep = group.multiply(g, power(group, *z, -k));
      points.push_back({g, placer.place(rep) + k});
    } else {
      points.push_back({g, placer.place(g)});
    }
  }
  return EmbeddingTable<G>(group, std::move(points), z);
}

/// Knots (t(h), t(gh)) for h and gh in the table, sorted by x.
template <class E>
struct ActorMap {
  E actor;
  std::vector<std::pair<Rational, Rational>> knots;

  std::optional<Rational> atKnot(const Rational& x) const {
    auto it = std::lower_bound(knots.begin(), knots.end(), x,
                               [](const std::pair<Rational, Rational>& k, const Rational& v) { return k.first < v; });
    if (it == knots.end() || it->first != x) return std::nullopt;
    return it->second;
  }

  /// Piecewise-linear through the knots, slope 1 beyond the outermost ones.
  Rational operator()(const Rational& x) const {
    if (x <= knots.front().first) return knots.front().second + (x - knots.front().first);
    if (x >= knots.back().first) return knots.back().second + (x - knots.back().first);
    auto hi = std::lower_bound(knots.begin(), knots.end(), x,
                               [](const std::pair<Rational, Rational>& k, const Rational& v) { return k.first < v; });
    if (hi->first == x) return hi->second;
    auto lo = hi - 1;
    return lo->second + (x - lo->first) * (hi->second - lo->second) / (hi->first - lo->first);
  }
};

template <RealizableGroup G>
class PartialAction {
 public:
  using element_type = ElementOf<G>;

  PartialAction(EmbeddingTable<G> table, std::vector<ActorMap<element_type>> maps)
      : table_(std::move(table)), maps_(std::move(maps)) {
    for (std::size_t i = 0; i < maps_.size(); ++i) index_.emplace(table_.group().key(maps_[i].actor), i);
  }

  const EmbeddingTable<G>& table() const noexcept { return table_; }
  const std::vector<ActorMap<element_type>>& maps() const noexcept { return maps_; }

  const ActorMap<element_type>& map(const element_type& g) const {
    auto it = index_.find(table_.group().key(g));
    if (it == index_.end()) throw InsufficientKnots("element is not an actor of this action");
    return maps_[it->second];
  }
  bool hasActor(const element_type& g) const { return index_.contains(table_.group().key(g)); }

 private:
  EmbeddingTable<G> table_;
  std::vector<ActorMap<element_type>> maps_;
  std::map<KeyOf<G>, std::size_t> index_;
};

template <RealizableGroup G>
PartialAction<G> buildPartialAction(const EmbeddingTable<G>& table, const std::vector<ElementOf<G>>& actors) {
  const G& group = table.group();
  std::vector<ActorMap<ElementOf<G>>> maps;
  for (const auto& g : actors) {
    ActorMap<ElementOf<G>> m{g, {}};
    for (const auto& p : table.points()) {
      if (auto y = table.coordOf(group.multiply(g, p.element))) m.knots.emplace_back(p.coord, *y);
    }
    if (m.knots.size() < 2) {
      throw InsufficientKnots("actor has " + std::to_string(m.knots.size()) + " knots, need at least 2");
    }
    maps.push_back(std::move(m));
  }
  return PartialAction<G>(table, std::move(maps));
}

/// rho(g)(x), interpolated between knots.
template <RealizableGroup G>
Rational evaluate(const PartialAction<G>& action, const ElementOf<G>& g, const Rational& x) {
  return action.map(g)(x);
}

/// omega(g,h) = r(g)(r(h)(0)) - r(gh)(0), each lift r(a) = rho(a) - floor(rho(a)(0)).
/// Every evaluation must land on a knot; g, h and gh must be actors.
template <RealizableGroup G>
std::int64_t eulerCocycleAt(const PartialAction<G>& action, const ElementOf<G>& g, const ElementOf<G>& h) {
  const G& group = action.table().group();
  auto knot = [&](const ElementOf<G>& a, const Rational& x) {
    auto y = action.map(a).atKnot(x);
    if (!y) throw InsufficientKnots("no knot at " + toString(x));
    return *y;
  };
  auto frac = [](const Rational& y) { return y - Rational(rationalFloor(y)); };
  const Rational gy = knot(g, Rational(0));
  const Rational hy = knot(h, Rational(0));
  const Rational ghy = knot(group.multiply(g, h), Rational(0));
  const Rational omega = knot(g, frac(hy)) - Rational(rationalFloor(gy)) - frac(ghy);
  if (!isInteger(omega)) throw Error("Euler cocycle value " + toString(omega) + " is not an integer");
  return static_cast<std::int64_t>(numerator(omega));
}

struct DynamicEstimate {
  RationalInterval bounds;
  Rational endpoint;  // rho(g)^n (0)
  bool approximate = false;
};

/// [(x_n - 1)/n, (x_n + 1)/n] with x_n = rho(g)^n (0). The exact path follows knots
/// only and throws BallExceeded when g^k leaves the ball; with allowApproximate it
/// interpolates instead and flags the result.
template <RealizableGroup G>
DynamicEstimate dynamicTranslationEstimate(const PartialAction<G>& action, const ElementOf<G>& g, int n,
                                           bool allowApproximate = false) {
  if (n < 1) throw std::invalid_argument("dynamicTranslationEstimate: n must be >= 1");
  const auto& m = action.map(g);
  DynamicEstimate out;
  Rational x(0);
  for (int k = 0; k < n; ++k) {
    if (auto y = m.atKnot(x)) {
      x = *y;
    } else if (allowApproximate) {
      x = m(x);
      out.approximate = true;
    } else {
      throw BallExceeded("power " + std::to_string(k + 1) + " of the actor leaves the ball");
    }
  }
  const Rational nn(n);
  out.endpoint = x;
  out.bounds = RationalInterval((x - 1) / nn, (x + 1) / nn);
  return out;
}

}  // namespace ordlib
