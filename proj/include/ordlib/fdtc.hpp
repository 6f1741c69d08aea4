#pragma once

// Fractional Dehn twist coefficients of braids: floors against Delta^2 in the
// Dehornoy ordering, rational bounds, and exact reconstruction.

#include "ordlib/braid/group.hpp"
#include "ordlib/errors.hpp"
#include "ordlib/order.hpp"
#include "ordlib/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ordlib {

inline constexpr int kDefaultFdtcN = 24;
inline constexpr std::int64_t kDefaultMaxDenominator = 64;

struct SearchBudget {
  std::int64_t floor = kDefaultFloorBudget;
  std::size_t lengthFactor = braid::kLengthBudgetFactor;
};

enum class FdtcMethod { BoundsOnly, ExactByRootIdentity, ExactBySternBrocot, ExactByConjugateFloor };

inline const char* toString(FdtcMethod m) {
  switch (m) {
    case FdtcMethod::BoundsOnly: return "BoundsOnly";
    case FdtcMethod::ExactByRootIdentity: return "ExactByRootIdentity";
    case FdtcMethod::ExactBySternBrocot: return "ExactBySternBrocot";
    case FdtcMethod::ExactByConjugateFloor: return "ExactByConjugateFloor";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, FdtcMethod m) { return os << toString(m); }

/// One evidence pair: the floor [w^n].
struct FloorEvidence {
  int n = 0;
  std::int64_t floor = 0;
  friend bool operator==(const FloorEvidence&, const FloorEvidence&) = default;
};

struct FdtcResult {
  RationalInterval bounds;
  std::optional<Rational> exact;
  bool certified = false;  // only a root identity w^n = Delta^2k certifies
  std::vector<FloorEvidence> evidence;
  FdtcMethod method = FdtcMethod::BoundsOnly;
};

/// Two or more Stern-Brocot candidates survived and no conjugate floor split them.
class AmbiguousReconstruction : public Error {
 public:
  AmbiguousReconstruction(RationalInterval bounds, std::vector<Rational> candidates)
      : Error(message(bounds, candidates)), bounds_(std::move(bounds)), candidates_(std::move(candidates)) {}

  const RationalInterval& bounds() const noexcept { return bounds_; }
  const std::vector<Rational>& candidates() const noexcept { return candidates_; }

 private:
  static std::string message(const RationalInterval& b, const std::vector<Rational>& c) {
    std::string s = "ambiguous reconstruction: " + std::to_string(c.size()) + " candidates in [" +
                    toString(b.lo()) + ", " + toString(b.hi()) + "]:";
    const std::size_t shown = std::min<std::size_t>(c.size(), 12);
    for (std::size_t i = 0; i < shown; ++i) s += " " + toString(c[i]);
    if (shown < c.size()) s += " ...";
    return s;
  }

  RationalInterval bounds_;
  std::vector<Rational> candidates_;
};

namespace detail {

inline std::vector<std::int64_t> floorsOf(const std::vector<FloorEvidence>& ev) {
  std::vector<std::int64_t> out;
  out.reserve(ev.size());
  for (const auto& e : ev) out.push_back(e.floor);
  return out;
}

// w^n == Delta^(2k) for the floor k: the normal form is a bare even power of Delta.
inline bool isCentralPower(const braid::BraidWord& w, std::int64_t k) {
  braid::NormalForm nf = braid::normalForm(w);
  return nf.factors.empty() && nf.deltaPower == 2 * k;
}

}  // namespace detail

/// Bounds on c(w) from [w^n], n = 1..N, against Delta^2.
inline FdtcResult fdtcBounds(const braid::BraidWord& w, int N, const SearchBudget& budget = {}) {
  if (N < 1) throw std::invalid_argument("fdtcBounds: N must be >= 1");
  braid::BraidGroup group(w.strands(), budget.lengthFactor);
  const braid::BraidWord z = group.fullTwist();
  FdtcResult r;
  braid::BraidWord wn = w;
  for (int n = 1; n <= N; ++n) {
    if (n > 1) wn = group.multiply(wn, w);
    r.evidence.push_back({n, floorOf(group, z, wn, budget.floor)});
  }
  r.bounds = boundsFromFloors(detail::floorsOf(r.evidence));
  return r;
}

/// Splits floors k = [w^n] and k' = [f w^n f^-1]. Conjugation moves a floor by at
/// most one, and a strict move pins c(w): k' = k-1 gives k/n, k' = k+1 gives (k+1)/n.
inline std::optional<Rational> pinpointFromFloors(std::int64_t k, std::int64_t kPrime, int n) {
  if (n < 1) throw std::invalid_argument("pinpoint: n must be >= 1");
  if (kPrime == k - 1) return Rational(BigInt(k), BigInt(n));
  if (kPrime == k + 1) return Rational(BigInt(k + 1), BigInt(n));
  if (kPrime == k) return std::nullopt;
  throw Error("conjugate floors differ by more than one: " + std::to_string(k) + " vs " + std::to_string(kPrime));
}

struct PinpointResult {
  std::optional<Rational> value;  // empty means Unknown
  std::int64_t k = 0;
  std::int64_t kPrime = 0;
  int n = 0;
};

inline PinpointResult conjugateFloorPinpoint(const braid::BraidWord& w, const braid::BraidWord& f, int n,
                                             const SearchBudget& budget = {}) {
  if (w.strands() != f.strands()) throw StrandMismatch(w.strands(), f.strands());
  braid::BraidGroup group(w.strands(), budget.lengthFactor);
  const braid::BraidWord z = group.fullTwist();
  const braid::BraidWord wn = braid::power(w, n);
  PinpointResult r;
  r.n = n;
  r.k = floorOf(group, z, wn, budget.floor);
  r.kPrime = floorOf(group, z, group.multiply(group.multiply(f, wn), group.inverse(f)), budget.floor);
  r.value = pinpointFromFloors(r.k, r.kPrime, n);
  return r;
}

/// Exact c(w) where it can be reconstructed.
///
/// 1. w^n = Delta^2k for some n <= N gives k/n, certified.
/// 2. Otherwise the rationals of denominator <= maxDenominator inside the bounds
///    are the candidates. A single candidate p/q is kept when [w^q] = p, and is
///    certified only if w^q = Delta^2p outright.
/// 3. Several candidates: conjugating w^n by s_i^{+-1}, n <= N, looks for a floor
///    that moves. Failing that, AmbiguousReconstruction.
/// No candidate, or a single one that fails its floor check, leaves BoundsOnly.
inline FdtcResult fdtcExact(const braid::BraidWord& w, int N = kDefaultFdtcN,
                            std::int64_t maxDenominator = kDefaultMaxDenominator, const SearchBudget& budget = {}) {
  if (maxDenominator < 1) throw std::invalid_argument("fdtcExact: maxDenominator must be >= 1");
  FdtcResult r = fdtcBounds(w, N, budget);
  braid::BraidGroup group(w.strands(), budget.lengthFactor);
  const braid::BraidWord z = group.fullTwist();

  braid::BraidWord wn = w;
  for (const auto& e : r.evidence) {
    if (e.n > 1) wn = group.multiply(wn, w);
    if (detail::isCentralPower(wn, e.floor)) {
      r.exact = Rational(BigInt(e.floor), BigInt(e.n));
      r.certified = true;
      r.method = FdtcMethod::ExactByRootIdentity;
      return r;
    }
  }

  std::vector<Rational> candidates = rationalsInInterval(r.bounds, maxDenominator);
  if (candidates.empty()) return r;
  if (candidates.size() == 1) {
    const Rational& c = candidates.front();
    const std::int64_t p = static_cast<std::int64_t>(numerator(c));
    const int qn = static_cast<int>(denominator(c));
    const braid::BraidWord wq = braid::power(w, qn);
    const std::int64_t floorQ =
        qn <= N ? r.evidence[static_cast<std::size_t>(qn - 1)].floor : floorOf(group, z, wq, budget.floor);
    if (floorQ != p) return r;
    r.exact = c;
    r.certified = detail::isCentralPower(wq, p);
    r.method = FdtcMethod::ExactBySternBrocot;
    return r;
  }

  for (const auto& e : r.evidence) {
    const braid::BraidWord power = braid::power(w, e.n);
    for (const braid::BraidWord& f : group.generatorsAndInverses()) {
      const braid::BraidWord conj = group.multiply(group.multiply(f, power), group.inverse(f));
      auto value = pinpointFromFloors(e.floor, floorOf(group, z, conj, budget.floor), e.n);
      if (value) {
        r.exact = *value;
        r.method = FdtcMethod::ExactByConjugateFloor;
        return r;
      }
    }
  }
  throw AmbiguousReconstruction(r.bounds, std::move(candidates));
}

/// Translation number of w under B_n -> Z acting by shifts: the exponent sum. This
/// action has no global fixed point, yet its translation numbers are not c(w):
/// s_1^2 in B_3 translates by 2 while c(s_1^2) = 0.
inline std::int64_t abelianizationTranslation(const braid::BraidWord& w) { return braid::exponentSum(w); }

}  // namespace ordlib
