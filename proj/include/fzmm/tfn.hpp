#pragma once

#include <span>
#include <string>
#include <vector>

namespace fzmm {

// Closed real interval [lower, upper].
struct Interval {
  double lower = 0.0;
  double upper = 0.0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Triangular fuzzy number (lo, mid, hi) with lo <= mid <= hi.
///
/// The membership function rises linearly from lo to the apex mid and falls
/// back to zero at hi. Degenerate triplets (v, v, v) stand for the crisp
/// number v; they are accepted everywhere a fuzzy number is.
class Tfn {
 public:
  /// The crisp zero (0, 0, 0).
  constexpr Tfn() = default;

  /// Throws Error(kNotSorted) unless lo <= mid <= hi.
  Tfn(double lo, double mid, double hi);

  static Tfn crisp(double value) { return Tfn(value, value, value); }

  double lo() const noexcept { return lo_; }
  double mid() const noexcept { return mid_; }
  double hi() const noexcept { return hi_; }

  bool is_nonnegative() const noexcept { return lo_ >= 0.0; }
  bool is_degenerate() const noexcept { return lo_ == mid_ && mid_ == hi_; }

  friend bool operator==(const Tfn&, const Tfn&) = default;

 private:
  double lo_ = 0.0;
  double mid_ = 0.0;
  double hi_ = 0.0;
};

// Fuzzy partial orders, checked on the triplet endpoints.
// kEqual implies kLessOrApprox; kStrictlyLess implies kDominates, which
// implies kLessOrApprox.
enum class OrderRelation {
  kStrictlyLess,
  kLessOrApprox,
  kDominates,
  kEqual,
  kIncomparable,
};

/// Whether a pair found to be in relation `actual` also stands in `wanted`.
bool implies(OrderRelation actual, OrderRelation wanted);

std::string to_string(OrderRelation relation);
std::string to_string(const Tfn& value);

/// [lo + (mid - lo) a, hi - (hi - mid) a]; throws kAlphaOutOfRange outside [0, 1].
Interval alpha_level(const Tfn& value, double alpha);

Tfn add(const Tfn& a, const Tfn& b);

/// lambda * a; a negative factor swaps the outer endpoints.
Tfn scale(double lambda, const Tfn& a);

/// Product with a nonnegative right operand. The sign of `a` selects which
/// endpoints of `b` pair up. Throws kRequiresNonnegativeOperand if b.lo < 0.
Tfn mul(const Tfn& a, const Tfn& b);

/// Most specific relation of `a` to `b`; components within `tol` of each other
/// count as equal. Returns kEqual, kStrictlyLess, kDominates (<= with some but
/// not all components strict) or kIncomparable. kLessOrApprox is never the
/// most specific answer; test it with implies() or less_or_approx().
OrderRelation compare(const Tfn& a, const Tfn& b, double tol = 0.0);

/// Componentwise a <= b (within tol).
bool less_or_approx(const Tfn& a, const Tfn& b, double tol = 0.0);

/// a <= b componentwise with at least one strict component.
bool dominates(const Tfn& a, const Tfn& b, double tol = 0.0);

/// Componentwise equality within tol.
bool approx_equal(const Tfn& a, const Tfn& b, double tol = 0.0);

/// Minimal upper bound: componentwise maxima. Throws kEmptySet on empty input.
Tfn theta_mub(std::span<const Tfn> values);

/// True iff every element of `values` is <= `bound` componentwise.
bool is_upper_bound(const Tfn& bound, std::span<const Tfn> values, double tol = 0.0);

inline Tfn operator+(const Tfn& a, const Tfn& b) { return add(a, b); }
inline Tfn operator*(double lambda, const Tfn& a) { return scale(lambda, a); }

}  // namespace fzmm
