#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "fzmm/error.hpp"
#include "fzmm/tfn.hpp"

using namespace fzmm;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kSolverFailure;
}

}  // namespace

TEST_CASE("construction") {
  const Tfn a(1, 2, 3);
  CHECK(a.lo() == 1);
  CHECK(a.mid() == 2);
  CHECK(a.hi() == 3);
  CHECK(Tfn(5, 5, 5).is_degenerate());
  CHECK(Tfn::crisp(5) == Tfn(5, 5, 5));
  CHECK(code_of([] { Tfn(3, 2, 1); }) == ErrorCode::kNotSorted);
  CHECK(code_of([] { Tfn(1, 3, 2); }) == ErrorCode::kNotSorted);
  CHECK(code_of([] { Tfn(0, std::nan(""), 1); }) == ErrorCode::kNotSorted);
  CHECK(Tfn(0, 1, 2).is_nonnegative());
  CHECK_FALSE(Tfn(-1, 1, 2).is_nonnegative());
}

TEST_CASE("alpha levels") {
  const Tfn a(1, 2, 4);
  CHECK(alpha_level(a, 0) == Interval{1, 4});
  CHECK(alpha_level(a, 1) == Interval{2, 2});
  CHECK(alpha_level(a, 0.5) == Interval{1.5, 3});
  CHECK(code_of([&] { alpha_level(a, 1.5); }) == ErrorCode::kAlphaOutOfRange);
  CHECK(code_of([&] { alpha_level(a, -0.1); }) == ErrorCode::kAlphaOutOfRange);
}

TEST_CASE("addition") {
  CHECK(add(Tfn(1, 2, 3), Tfn(2, 3, 4)) == Tfn(3, 5, 7));
  CHECK(add(Tfn(), Tfn(1, 4, 9)) == Tfn(1, 4, 9));
  CHECK(Tfn(-1, 0, 2) + Tfn(-2, 1, 1) == Tfn(-3, 1, 3));
}

TEST_CASE("scaling") {
  CHECK(scale(0.5, Tfn(1, 2, 3)) == Tfn(0.5, 1, 1.5));
  CHECK(scale(-0.5, Tfn(1, 2, 3)) == Tfn(-1.5, -1, -0.5));
  CHECK(0.0 * Tfn(1, 2, 3) == Tfn());
}

TEST_CASE("multiplication by a nonnegative operand") {
  CHECK(mul(Tfn(1, 2, 3), Tfn(2, 3, 4)) == Tfn(2, 6, 12));
  CHECK(mul(Tfn(-1, 1, 2), Tfn(2, 3, 4)) == Tfn(-4, 3, 8));
  CHECK(mul(Tfn(-3, -2, -1), Tfn(2, 3, 4)) == Tfn(-12, -6, -2));
  CHECK(code_of([] { mul(Tfn(1, 2, 3), Tfn(-1, 0, 1)); }) == ErrorCode::kRequiresNonnegativeOperand);
}

TEST_CASE("comparison") {
  CHECK(compare(Tfn(1, 2, 3), Tfn(2, 3, 4)) == OrderRelation::kStrictlyLess);
  CHECK(compare(Tfn(1, 2, 3), Tfn(1, 2, 3)) == OrderRelation::kEqual);
  CHECK(compare(Tfn(1, 5, 6), Tfn(2, 3, 4)) == OrderRelation::kIncomparable);
  CHECK(compare(Tfn(1, 2, 3), Tfn(1, 3, 3)) == OrderRelation::kDominates);
  CHECK(compare(Tfn(1, 2, 3), Tfn(1, 2, 3 + 1e-9), 1e-6) == OrderRelation::kEqual);

  CHECK(implies(OrderRelation::kStrictlyLess, OrderRelation::kDominates));
  CHECK(implies(OrderRelation::kDominates, OrderRelation::kLessOrApprox));
  CHECK(implies(OrderRelation::kEqual, OrderRelation::kLessOrApprox));
  CHECK_FALSE(implies(OrderRelation::kEqual, OrderRelation::kDominates));
  CHECK_FALSE(implies(OrderRelation::kIncomparable, OrderRelation::kLessOrApprox));

  CHECK(less_or_approx(Tfn(1, 2, 3), Tfn(1, 2, 3)));
  CHECK(dominates(Tfn(1, 2, 3), Tfn(1, 2, 4)));
  CHECK_FALSE(dominates(Tfn(1, 2, 3), Tfn(1, 2, 3)));
}

TEST_CASE("minimal upper bound") {
  const std::vector<Tfn> s{Tfn(1, 2, 5), Tfn(0, 3, 4)};
  CHECK(theta_mub(s) == Tfn(1, 3, 5));
  const std::vector<Tfn> single{Tfn(4, 5, 6)};
  CHECK(theta_mub(single) == Tfn(4, 5, 6));
  const std::vector<Tfn> crisp{Tfn::crisp(1), Tfn::crisp(2), Tfn::crisp(0)};
  CHECK(theta_mub(crisp) == Tfn::crisp(2));
  CHECK(code_of([] { theta_mub(std::vector<Tfn>{}); }) == ErrorCode::kEmptySet);

  CHECK(is_upper_bound(Tfn(1, 3, 5), s));
  CHECK_FALSE(is_upper_bound(Tfn(0, 3, 5), std::vector<Tfn>{Tfn(1, 2, 5)}));
  CHECK(is_upper_bound(Tfn(9, 9, 9), std::vector<Tfn>{Tfn(1, 2, 3), Tfn()}));
}

TEST_CASE("order is a partial order on random triples") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-3, 3);
  const auto draw = [&] {
    int v[3] = {d(rng), d(rng), d(rng)};
    std::sort(v, v + 3);
    return Tfn(v[0], v[1], v[2]);
  };
  for (int n = 0; n < 3000; ++n) {
    const Tfn a = draw();
    const Tfn b = draw();
    const Tfn c = draw();
    CHECK(less_or_approx(a, a));
    if (less_or_approx(a, b) && less_or_approx(b, a)) CHECK(a == b);
    if (less_or_approx(a, b) && less_or_approx(b, c)) CHECK(less_or_approx(a, c));
    const OrderRelation r = compare(a, b);
    CHECK(implies(r, OrderRelation::kLessOrApprox) == less_or_approx(a, b));
  }
}

TEST_CASE("operations keep the triangle shape") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> d(-10, 10);
  const auto draw = [&](double floor) {
    double v[3] = {d(rng), d(rng), d(rng)};
    std::sort(v, v + 3);
    if (v[0] < floor) {
      const double shift = floor - v[0];
      for (double& x : v) x += shift;
    }
    return Tfn(v[0], v[1], v[2]);
  };
  for (int n = 0; n < 10000; ++n) {
    const Tfn a = draw(-1e9);
    const Tfn b = draw(0);
    const double lambda = d(rng);
    for (const Tfn& r : {add(a, b), scale(lambda, a), mul(a, b)}) {
      CHECK(r.lo() <= r.mid());
      CHECK(r.mid() <= r.hi());
    }
  }
}
