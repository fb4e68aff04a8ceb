#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hmap/series.hpp"

using namespace hmap;

TEST_CASE("construction and factories") {
  CHECK(PowerSeries().order() == 0);
  CHECK(PowerSeries().coeff(0) == Complex{0.0, 0.0});

  const PowerSeries z = PowerSeries::monomial(1);
  CHECK(z.order() == 1);
  CHECK(z.coeff(1) == Complex{1.0, 0.0});
  CHECK(z.coeff(0) == Complex{0.0, 0.0});
  CHECK(z.coeff(5) == Complex{0.0, 0.0});  // zero beyond stored order
  CHECK(z.coeff(-1) == Complex{0.0, 0.0});

  const PowerSeries geo = PowerSeries::geometric(4);
  for (int n = 0; n <= 4; ++n) CHECK(geo.coeff(n) == Complex{1.0, 0.0});

  const PowerSeries geo1 = PowerSeries::geometric_from_one(4);
  CHECK(geo1.coeff(0) == Complex{0.0, 0.0});
  for (int n = 1; n <= 4; ++n) CHECK(geo1.coeff(n) == Complex{1.0, 0.0});

  CHECK_THROWS_AS(PowerSeries(std::vector<Complex>{}), std::invalid_argument);
  CHECK_THROWS_AS(
      PowerSeries(std::vector<Complex>{Complex{std::nan(""), 0.0}}),
      std::invalid_argument);
}

TEST_CASE("truncated cuts or zero-pads") {
  const PowerSeries geo = PowerSeries::geometric(4);
  const PowerSeries cut = geo.truncated(2);
  CHECK(cut.order() == 2);
  CHECK(cut.coeff(2) == Complex{1.0, 0.0});
  const PowerSeries pad = geo.truncated(6);
  CHECK(pad.order() == 6);
  CHECK(pad.coeff(5) == Complex{0.0, 0.0});
  CHECK(pad.coeff(4) == Complex{1.0, 0.0});
}

TEST_CASE("linear_combine pads to max order") {
  const PowerSeries a = PowerSeries::geometric(2);
  const PowerSeries b = PowerSeries::monomial(4);
  const PowerSeries r =
      linear_combine(Complex{2.0, 0.0}, a, Complex{0.0, 1.0}, b);
  CHECK(r.order() == 4);
  CHECK(r.coeff(1) == Complex{2.0, 0.0});
  CHECK(r.coeff(4) == Complex{0.0, 1.0});
  CHECK(r.coeff(3) == Complex{0.0, 0.0});
}

TEST_CASE("cauchy_product truncation rules") {
  const PowerSeries geo = PowerSeries::geometric(5);
  // (sum z^k)^2 has coefficients n+1.
  const PowerSeries sq = cauchy_product(geo, geo);
  CHECK(sq.order() == 5);  // min-order default
  for (int n = 0; n <= 5; ++n)
    CHECK(sq.coeff(n) == Complex{static_cast<double>(n + 1), 0.0});

  const PowerSeries exact =
      cauchy_product(PowerSeries::geometric(2), PowerSeries::geometric(3), 5);
  CHECK(exact.order() == 5);
  CHECK(exact.coeff(5) == Complex{1.0, 0.0});
  CHECK(exact.coeff(2) == Complex{3.0, 0.0});
}

TEST_CASE("hadamard_product is coefficientwise on min order") {
  const PowerSeries a = PowerSeries::geometric(4);
  PowerSeries b = PowerSeries::monomial(2, Complex{3.0, 1.0});
  const PowerSeries r = hadamard_product(a, b);
  CHECK(r.order() == 2);
  CHECK(r.coeff(2) == Complex{3.0, 1.0});
  CHECK(r.coeff(1) == Complex{0.0, 0.0});
}

TEST_CASE("derivative") {
  const PowerSeries p = PowerSeries::geometric(3);  // 1+z+z^2+z^3
  const PowerSeries dp = derivative(p);
  CHECK(dp.order() == 2);
  CHECK(dp.coeff(0) == Complex{1.0, 0.0});
  CHECK(dp.coeff(1) == Complex{2.0, 0.0});
  CHECK(dp.coeff(2) == Complex{3.0, 0.0});
  CHECK_THROWS_AS(derivative(PowerSeries()), std::invalid_argument);
}

TEST_CASE("evaluate matches closed forms") {
  const PowerSeries geo = PowerSeries::geometric(30);
  const Complex z{0.3, 0.2};
  const Complex expect = (1.0 - std::pow(z, 31)) / (1.0 - z);
  CHECK(std::abs(evaluate(geo, z) - expect) < 1e-14);
  CHECK_THROWS_AS(evaluate(geo, Complex{std::nan(""), 0.0}),
                  std::invalid_argument);
}

TEST_CASE("approx_equal over union of supports") {
  const PowerSeries a = PowerSeries::geometric(3);
  CHECK(approx_equal(a, a.truncated(10)));  // trailing zeros ignored
  PowerSeries b = PowerSeries::geometric(3).truncated(4);
  CHECK(approx_equal(a, b));
  CHECK(!approx_equal(a, PowerSeries::monomial(3)));
  CHECK(approx_equal(a, PowerSeries::geometric(3), 1e-15));
}
