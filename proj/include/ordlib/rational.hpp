#pragma once

// Exact rationals, closed rational intervals and Stern-Brocot enumeration.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordlib {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;  // always kept in lowest terms

inline Rational makeRational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Largest integer <= r.
inline BigInt rationalFloor(const Rational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

inline BigInt rationalCeil(const Rational& r) { return -rationalFloor(-r); }

inline bool isInteger(const Rational& r) { return denominator(r) == 1; }

/// "p/q", or "p" when the denominator is one.
inline std::string toString(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

/// Closed interval [lo, hi] with exact endpoints.
class RationalInterval {
 public:
  RationalInterval() = default;
  RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw std::invalid_argument("RationalInterval: lo > hi");
  }
  static RationalInterval point(const Rational& x) { return {x, x}; }

  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  Rational width() const { return hi_ - lo_; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const RationalInterval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool intersects(const RationalInterval& other) const {
    return !(hi_ < other.lo_ || other.hi_ < lo_);
  }
  RationalInterval shifted(const Rational& delta) const { return {lo_ + delta, hi_ + delta}; }

  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;

  friend std::ostream& operator<<(std::ostream& os, const RationalInterval& iv) {
    return os << '[' << toString(iv.lo_) << ", " << toString(iv.hi_) << ']';
  }

 private:
  Rational lo_{0};
  Rational hi_{0};
};

namespace detail {

// Fractions strictly between left = a/b and right = c/d (Stern-Brocot neighbours),
// inside [lo, hi], with denominator <= maxDen. Appended in increasing order.
inline void sternBrocotBetween(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d,
                               const Rational& lo, const Rational& hi, const BigInt& maxDen,
                               std::vector<Rational>& out) {
  BigInt mn = a + c;
  BigInt md = b + d;
  if (md > maxDen) return;
  Rational mediant(mn, md);
  if (lo < mediant) sternBrocotBetween(a, b, mn, md, lo, hi, maxDen, out);
  if (lo <= mediant && mediant <= hi) out.push_back(mediant);
  if (mediant < hi) sternBrocotBetween(mn, md, c, d, lo, hi, maxDen, out);
}

}  // namespace detail

/// Every rational p/q in [lo, hi] with 1 <= q <= maxDen, in increasing order,
/// found by descending the Stern-Brocot tree only where it meets the interval.
inline std::vector<Rational> rationalsInInterval(const RationalInterval& iv, std::int64_t maxDen) {
  if (maxDen < 1) throw std::invalid_argument("maxDenominator must be >= 1");
  std::vector<Rational> out;
  const BigInt md(maxDen);
  for (BigInt t = rationalFloor(iv.lo()); t <= rationalFloor(iv.hi()); ++t) {
    if (iv.contains(Rational(t))) out.push_back(Rational(t));
    detail::sternBrocotBetween(t, 1, t + 1, 1, iv.lo(), iv.hi(), md, out);
  }
  return out;
}

}  // namespace ordlib
