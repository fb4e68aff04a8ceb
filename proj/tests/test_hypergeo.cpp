#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hmap/classes.hpp"
#include "hmap/hypergeo.hpp"

using namespace hmap;

TEST_CASE("HGParams validation and termination") {
  CHECK_NOTHROW(HGParams(0.5, 0.5, 5.0));
  CHECK_THROWS_AS(HGParams(1.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(HGParams(1.0, 1.0, -3.0), std::invalid_argument);
  CHECK_NOTHROW(HGParams(1.0, 1.0, 0.5));
  CHECK(HGParams(-2.0, 1.0, 1.0).terminating());
  CHECK(HGParams(1.0, 0.0, 1.0).terminating());
  CHECK(!HGParams(0.5, 0.5, 1.0).terminating());
  CHECK(!HGParams(-2.5, 1.0, 1.0).terminating());
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(-2.0, 2) == 2.0);
  CHECK(pochhammer(-2.0, 3) == 0.0);
  CHECK(pochhammer(1.0, 5) == 120.0);   // (1)_n = n!
  CHECK(pochhammer(0.5, 0) == 1.0);
  CHECK(pochhammer(0.5, 2) == doctest::Approx(0.75));
  CHECK_THROWS_AS(pochhammer(1.0, -1), std::invalid_argument);
}

TEST_CASE("log_gamma against factorials and half-integers") {
  for (int n = 1; n <= 15; ++n) {
    double fact = 1.0;
    for (int k = 2; k < n; ++k) fact *= k;
    CHECK(log_gamma(n) == doctest::Approx(std::log(fact)).epsilon(1e-13));
  }
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-13));
  CHECK(std::exp(log_gamma(2.5)) == doctest::Approx(1.3293403881791).epsilon(1e-12));
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
}

TEST_CASE("f21_coeffs") {
  const PowerSeries t = f21_coeffs(HGParams(-2, -2, 1), 6);
  CHECK(t.coeff(0) == Complex{1.0, 0.0});
  CHECK(t.coeff(1) == Complex{4.0, 0.0});
  CHECK(t.coeff(2) == Complex{1.0, 0.0});
  for (int n = 3; n <= 6; ++n) CHECK(t.coeff(n) == Complex{0.0, 0.0});

  const PowerSeries geo = f21_coeffs(HGParams(1, 1, 1), 8);
  for (int n = 0; n <= 8; ++n) CHECK(geo.coeff(n) == Complex{1.0, 0.0});

  const PowerSeries one = f21_coeffs(HGParams(0, 3.3, 2.2), 5);
  CHECK(one.coeff(0) == Complex{1.0, 0.0});
  for (int n = 1; n <= 5; ++n) CHECK(one.coeff(n) == Complex{0.0, 0.0});

  // Terminating exactness: a = b = -m leaves exactly m+1 nonzero entries,
  // each matching the Pochhammer identity (-m)_n = (-1)^n m!/(m-n)!.
  for (int m = 1; m <= 6; ++m) {
    const PowerSeries s = f21_coeffs(HGParams(-m, -m, 1), m + 4);
    double mfact = 1.0;
    for (int k = 2; k <= m; ++k) mfact *= k;
    for (int n = 0; n <= m + 4; ++n) {
      if (n <= m) {
        double rest = 1.0;  // (m-n)!
        for (int k = 2; k <= m - n; ++k) rest *= k;
        double nfact = 1.0;
        for (int k = 2; k <= n; ++k) nfact *= k;
        const double poch = mfact / rest;  // |(-m)_n|
        const double expect = poch * poch / (nfact * nfact);  // (c)_n = n!
        CHECK(s.coeff(n).real() == expect);
      } else {
        CHECK(s.coeff(n) == Complex{0.0, 0.0});
      }
    }
  }
}

TEST_CASE("gauss_value") {
  CHECK(gauss_value(HGParams(1, 1, 3), GaussMethod::gamma) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(gauss_value(HGParams(1, 1, 3), GaussMethod::series) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(gauss_value(HGParams(-2, -2, 1), GaussMethod::gamma) == 6.0);
  CHECK(gauss_value(HGParams(-2, -2, 1), GaussMethod::series) == 6.0);
  CHECK(gauss_value(HGParams(0, 5, 2), GaussMethod::series) == 1.0);
  CHECK_THROWS_AS(gauss_value(HGParams(2, 2, 3), GaussMethod::gamma),
                  std::domain_error);
  CHECK_THROWS_AS(gauss_value(HGParams(2, 2, 4.005), GaussMethod::series),
                  std::domain_error);
}

TEST_CASE("lemma61_sum closed forms and hypothesis checks") {
  // (i) a=b=1, c=4: telescoping value 3.
  CHECK(lemma61_sum(HGParams(1, 1, 4), Lemma61Sum::i, SumMethod::closed) ==
        doctest::Approx(3.0).epsilon(1e-12));
  CHECK(lemma61_sum(HGParams(1, 1, 4), Lemma61Sum::i, SumMethod::series) ==
        doctest::Approx(3.0).epsilon(1e-12));
  // (i) a -> 0 limit: value -> 1.
  CHECK(lemma61_sum(HGParams(1e-12, 2, 5), Lemma61Sum::i, SumMethod::closed) ==
        doctest::Approx(1.0).epsilon(1e-9));
  // (iii) a=b=2, c=6: the series telescopes to exactly +5/3
  // (sum of 120/((n+2)(n+3)(n+4)(n+5))).
  CHECK(lemma61_sum(HGParams(2, 2, 6), Lemma61Sum::iii, SumMethod::series) ==
        doctest::Approx(5.0 / 3.0).epsilon(1e-12));
  CHECK(lemma61_sum(HGParams(2, 2, 6), Lemma61Sum::iii, SumMethod::closed) ==
        doctest::Approx(5.0 / 3.0).epsilon(1e-12));

  CHECK_THROWS_AS(
      lemma61_sum(HGParams(1, 1, 2), Lemma61Sum::i, SumMethod::closed),
      std::domain_error);
  CHECK_THROWS_AS(
      lemma61_sum(HGParams(1, 1, 4), Lemma61Sum::ii, SumMethod::closed),
      std::domain_error);
  CHECK_THROWS_AS(
      lemma61_sum(HGParams(1, 2, 9), Lemma61Sum::iii, SumMethod::closed),
      std::domain_error);
  CHECK_THROWS_AS(
      lemma61_sum(HGParams(-0.5, 2, 9), Lemma61Sum::i, SumMethod::closed),
      std::domain_error);
}

TEST_CASE("closed vs series agreement on the parameter lattice") {
  const double vals[] = {0.25, 0.5, 1.5, 2.0};
  const double offs[] = {1.5, 3.0, 5.0};
  for (double a : vals) {
    for (double b : vals) {
      for (double off : offs) {
        const HGParams p(a, b, a + b + off);
        const double g1 = gauss_value(p, GaussMethod::gamma);
        const double g2 = gauss_value(p, GaussMethod::series);
        CHECK(std::abs(g1 - g2) <= 1e-9 * std::abs(g1));
        const double i1 = lemma61_sum(p, Lemma61Sum::i, SumMethod::closed);
        const double i2 = lemma61_sum(p, Lemma61Sum::i, SumMethod::series);
        CHECK(std::abs(i1 - i2) <= 1e-9 * std::abs(i1));
        if (off > 2.0) {
          const double s1 = lemma61_sum(p, Lemma61Sum::ii, SumMethod::closed);
          const double s2 = lemma61_sum(p, Lemma61Sum::ii, SumMethod::series);
          CHECK(std::abs(s1 - s2) <= 1e-9 * std::abs(s1));
        }
        if (std::abs(a - 1.0) > 1e-12 && std::abs(b - 1.0) > 1e-12) {
          const double t1 = lemma61_sum(p, Lemma61Sum::iii, SumMethod::closed);
          const double t2 = lemma61_sum(p, Lemma61Sum::iii, SumMethod::series);
          CHECK(std::abs(t1 - t2) <= 1e-9 * std::abs(t1));
        }
      }
    }
  }
}

TEST_CASE("build_mapping reproduces the corollary polynomials") {
  const HGParams p(-2, -2, 1);
  const HarmonicMapping f1 = build_mapping(MappingSelector::f1, p, 6);
  CHECK(f1.g().coeff(2) == Complex{1.0, 0.0});
  CHECK(f1.g().coeff(3) == Complex{4.0, 0.0});
  CHECK(f1.g().coeff(4) == Complex{1.0, 0.0});
  CHECK(f1.g().coeff(5) == Complex{0.0, 0.0});
  CHECK(approx_equal(f1.h(), PowerSeries::monomial(1), 0.0));

  const HarmonicMapping f2 = build_mapping(MappingSelector::f2, p, 6);
  CHECK(f2.g().coeff(2) == Complex{4.0, 0.0});
  CHECK(f2.g().coeff(3) == Complex{1.0, 0.0});
  CHECK(f2.g().coeff(4) == Complex{0.0, 0.0});

  const HarmonicMapping f3 = build_mapping(MappingSelector::f3, p, 6);
  CHECK(f3.g().coeff(2) == Complex{1.0, 0.0});
  CHECK(f3.g().coeff(3) == Complex{2.0, 0.0});
  CHECK(f3.g().coeff(4).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  CHECK_THROWS_AS(build_mapping(MappingSelector::f1, p, 1),
                  std::invalid_argument);
}

TEST_CASE("membership_condition lhs equals the coefficient sum") {
  const ClassParams cp(0.0, 0.0);
  // Terminating G4 on the m=2 polynomial: sum = 2*4 + 3*1 = 11.
  const ConditionReport g4 =
      membership_condition(MembershipConditionId::G4, HGParams(-2, -2, 1), cp);
  CHECK(g4.coefficient_sum == doctest::Approx(11.0).epsilon(1e-14));
  CHECK(g4.lhs == doctest::Approx(12.0).epsilon(1e-14));  // sum + 1
  CHECK(g4.rhs == 2.0);
  CHECK(!g4.satisfied);
  CHECK(!g4.gamma_form_applicable);

  // Non-terminating: every id cross-checks closed form against the sum
  // internally and throws on disagreement; these must not throw.
  const ClassParams cp2(1.0, 0.25);
  const ConditionReport g3 =
      membership_condition(MembershipConditionId::G3, HGParams(1, 1, 5), cp2);
  CHECK(g3.gamma_form_applicable);
  CHECK(std::abs(g3.lhs - g3.coefficient_sum) <= 1e-7 * g3.lhs);
  const ConditionReport g5 = membership_condition(
      MembershipConditionId::G5, HGParams(3, 3, 9), ClassParams(0.0, 0.5));
  CHECK(g5.gamma_form_applicable);
  CHECK(!g5.satisfied);

  // G3 and G5 weight a leading coefficient of 1 by 2(1+alpha), so their
  // lhs is always at least 2 > 1-beta: unsatisfiable for every parameter
  // choice, approaching 2 as a, b -> 0.
  const ConditionReport floor3 = membership_condition(
      MembershipConditionId::G3, HGParams(0.05, 0.05, 40), ClassParams(0.0, 0.0));
  CHECK(floor3.lhs > 2.0);
  CHECK(floor3.lhs < 2.001);
  CHECK(!floor3.satisfied);

  // G4 compares against 2-beta and its lhs tends to 1: satisfiable.
  const ConditionReport ok = membership_condition(
      MembershipConditionId::G4, HGParams(0.05, 0.05, 40), ClassParams(0.0, 0.0));
  CHECK(ok.lhs < 1.001);
  CHECK(ok.satisfied);

  CHECK_THROWS_AS(membership_condition(MembershipConditionId::G3,
                                       HGParams(1, 1, 3), cp),
                  std::domain_error);
  CHECK_THROWS_AS(membership_condition(MembershipConditionId::G5,
                                       HGParams(1, 2, 9), cp),
                  std::domain_error);
}

TEST_CASE("corollary_condition displays") {
  const ClassParams cp(0.0, 0.0);
  const ConditionReport i = corollary_condition(CorollaryConditionId::C64i, 2, 1.0, cp);
  CHECK(i.lhs == 18.0);
  CHECK(i.rhs == 1.0);
  CHECK(!i.satisfied);
  const ConditionReport ii = corollary_condition(CorollaryConditionId::C64ii, 2, 1.0, cp);
  CHECK(ii.lhs == 13.0);
  CHECK(ii.rhs == 4.0);
  CHECK(!ii.satisfied);
  const ConditionReport iii = corollary_condition(CorollaryConditionId::C64iii, 2, 1.0, cp);
  CHECK(iii.lhs == 37.0);
  CHECK(iii.rhs == 6.0);
  CHECK(!iii.satisfied);

  // C63 displays specialize to the C64 displays at m = 2, c = 1 (up to the
  // scaling: x2 for (ii), x6 for (iii)).
  const ClassParams cpa(0.75, 0.25);
  const double c63i = corollary_condition(CorollaryConditionId::C63i, 2, 1.0, cpa).lhs;
  CHECK(c63i == doctest::Approx(2.0 * (19.0 * 0.75 + 9.0)).epsilon(1e-12));
  const double c63ii = corollary_condition(CorollaryConditionId::C63ii, 2, 1.0, cpa).lhs;
  CHECK(2.0 * c63ii == doctest::Approx(28.0 * 0.75 + 13.0).epsilon(1e-12));
  const double c63iii = corollary_condition(CorollaryConditionId::C63iii, 2, 1.0, cpa).lhs;
  CHECK(6.0 * c63iii == doctest::Approx(108.0 * 0.75 + 37.0).epsilon(1e-12));

  CHECK_THROWS_AS(corollary_condition(CorollaryConditionId::C63i, 0, 1.0, cp),
                  std::invalid_argument);
  CHECK_THROWS_AS(corollary_condition(CorollaryConditionId::C63ii, 2, -1.0, cp),
                  std::invalid_argument);
}
