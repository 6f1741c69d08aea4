#pragma once

// Small groups with fully explicit structure, used to exercise the generic
// machinery exhaustively.

#include "ordlib/order.hpp"

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ordlib {

/// The integers under addition with the standard order.
struct IntegerGroup {
  using element_type = std::int64_t;

  element_type identity() const { return 0; }
  element_type multiply(element_type a, element_type b) const { return a + b; }
  element_type inverse(element_type a) const { return -a; }
  bool equal(element_type a, element_type b) const { return a == b; }
  OrderSign sign(element_type a) const {
    return a > 0 ? OrderSign::Positive : (a < 0 ? OrderSign::Negative : OrderSign::Identity);
  }
  element_type key(element_type a) const { return a; }
};

struct Vec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

/// Z^2 ordered by the linear form a*x + b*y, ties broken lexicographically by y then x.
/// With integer (a, b) the separating line has rational slope, so the order is exact.
class SlopeOrderedZ2 {
 public:
  using element_type = Vec2;

  SlopeOrderedZ2(std::int64_t a, std::int64_t b) : a_(a), b_(b) {
    if (a == 0 && b == 0) throw std::invalid_argument("SlopeOrderedZ2: zero linear form");
  }

  element_type identity() const { return {}; }
  element_type multiply(const Vec2& u, const Vec2& v) const { return {u.x + v.x, u.y + v.y}; }
  element_type inverse(const Vec2& u) const { return {-u.x, -u.y}; }
  bool equal(const Vec2& u, const Vec2& v) const { return u == v; }
  OrderSign sign(const Vec2& u) const {
    std::int64_t form = a_ * u.x + b_ * u.y;
    if (form != 0) return form > 0 ? OrderSign::Positive : OrderSign::Negative;
    if (u.y != 0) return u.y > 0 ? OrderSign::Positive : OrderSign::Negative;
    if (u.x != 0) return u.x > 0 ? OrderSign::Positive : OrderSign::Negative;
    return OrderSign::Identity;
  }
  Vec2 key(const Vec2& u) const { return u; }

 private:
  std::int64_t a_;
  std::int64_t b_;
};

/// Z/n written additively with residues 0..n-1.
class CyclicGroup {
 public:
  using element_type = int;

  explicit CyclicGroup(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("CyclicGroup: order must be >= 1");
  }

  int modulus() const noexcept { return n_; }
  element_type identity() const { return 0; }
  element_type multiply(int a, int b) const { return (a + b) % n_; }
  element_type inverse(int a) const { return (n_ - a) % n_; }
  bool equal(int a, int b) const { return a == b; }
  int key(int a) const { return a; }

  std::size_t order() const { return static_cast<std::size_t>(n_); }
  std::vector<int> elements() const {
    std::vector<int> out(static_cast<std::size_t>(n_));
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  std::size_t index(int a) const { return static_cast<std::size_t>(a); }

 private:
  int n_;
};

/// The standard circular ordering of Z/n: the carry of adding residues.
struct CarryCocycle {
  int n;
  int operator()(int a, int b) const { return a + b >= n ? 1 : 0; }
};

}  // namespace ordlib
