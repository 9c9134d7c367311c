#include "fzmm/tfn.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fzmm/error.hpp"

namespace fzmm {

Tfn::Tfn(double lo, double mid, double hi) : lo_(lo), mid_(mid), hi_(hi) {
  // Written so that NaN components are rejected too.
  if (!(lo <= mid && mid <= hi)) {
    throw Error(ErrorCode::kNotSorted, "triplet " + to_string(*this) +
                                           " violates lo <= mid <= hi");
  }
}

bool implies(OrderRelation actual, OrderRelation wanted) {
  if (actual == wanted) return true;
  switch (wanted) {
    case OrderRelation::kLessOrApprox:
      return actual == OrderRelation::kEqual ||
             actual == OrderRelation::kStrictlyLess ||
             actual == OrderRelation::kDominates;
    case OrderRelation::kDominates:
      return actual == OrderRelation::kStrictlyLess;
    default:
      return false;
  }
}

std::string to_string(OrderRelation relation) {
  switch (relation) {
    case OrderRelation::kStrictlyLess: return "StrictlyLess";
    case OrderRelation::kLessOrApprox: return "LessOrApprox";
    case OrderRelation::kDominates: return "Dominates";
    case OrderRelation::kEqual: return "Equal";
    case OrderRelation::kIncomparable: return "Incomparable";
  }
  return "Unknown";
}

std::string to_string(const Tfn& value) {
  std::ostringstream out;
  out << '(' << value.lo() << ", " << value.mid() << ", " << value.hi() << ')';
  return out.str();
}

Interval alpha_level(const Tfn& value, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kAlphaOutOfRange,
                "alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  return {value.lo() + (value.mid() - value.lo()) * alpha,
          value.hi() - (value.hi() - value.mid()) * alpha};
}

Tfn add(const Tfn& a, const Tfn& b) {
  return Tfn(a.lo() + b.lo(), a.mid() + b.mid(), a.hi() + b.hi());
}

Tfn scale(double lambda, const Tfn& a) {
  if (lambda >= 0.0) return Tfn(lambda * a.lo(), lambda * a.mid(), lambda * a.hi());
  return Tfn(lambda * a.hi(), lambda * a.mid(), lambda * a.lo());
}

Tfn mul(const Tfn& a, const Tfn& b) {
  if (!b.is_nonnegative()) {
    throw Error(ErrorCode::kRequiresNonnegativeOperand,
                "right operand " + to_string(b) + " has a negative lower end");
  }
  if (a.lo() >= 0.0) return Tfn(a.lo() * b.lo(), a.mid() * b.mid(), a.hi() * b.hi());
  if (a.hi() >= 0.0) return Tfn(a.lo() * b.hi(), a.mid() * b.mid(), a.hi() * b.hi());
  return Tfn(a.lo() * b.hi(), a.mid() * b.mid(), a.hi() * b.lo());
}

namespace {

// -1: x < y, 0: |x - y| <= tol, +1: x > y.
int cmp(double x, double y, double tol) {
  if (std::abs(x - y) <= tol) return 0;
  return x < y ? -1 : 1;
}

}  // namespace

OrderRelation compare(const Tfn& a, const Tfn& b, double tol) {
  const int c[3] = {cmp(a.lo(), b.lo(), tol), cmp(a.mid(), b.mid(), tol),
                    cmp(a.hi(), b.hi(), tol)};
  int less = 0;
  int equal = 0;
  for (int v : c) {
    if (v < 0) ++less;
    if (v == 0) ++equal;
  }
  if (equal == 3) return OrderRelation::kEqual;
  if (less == 3) return OrderRelation::kStrictlyLess;
  if (less + equal == 3) return OrderRelation::kDominates;
  return OrderRelation::kIncomparable;
}

bool less_or_approx(const Tfn& a, const Tfn& b, double tol) {
  return implies(compare(a, b, tol), OrderRelation::kLessOrApprox);
}

bool dominates(const Tfn& a, const Tfn& b, double tol) {
  return implies(compare(a, b, tol), OrderRelation::kDominates);
}

bool approx_equal(const Tfn& a, const Tfn& b, double tol) {
  return compare(a, b, tol) == OrderRelation::kEqual;
}

Tfn theta_mub(std::span<const Tfn> values) {
  if (values.empty()) throw Error(ErrorCode::kEmptySet, "minimal upper bound of an empty set");
  double lo = values.front().lo();
  double mid = values.front().mid();
  double hi = values.front().hi();
  for (const Tfn& v : values.subspan(1)) {
    lo = std::max(lo, v.lo());
    mid = std::max(mid, v.mid());
    hi = std::max(hi, v.hi());
  }
  return Tfn(lo, mid, hi);
}

bool is_upper_bound(const Tfn& bound, std::span<const Tfn> values, double tol) {
  if (values.empty()) throw Error(ErrorCode::kEmptySet, "upper bound of an empty set");
  return std::all_of(values.begin(), values.end(),
                     [&](const Tfn& v) { return less_or_approx(v, bound, tol); });
}

}  // namespace fzmm
