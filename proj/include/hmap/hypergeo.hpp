#pragma once

#include <string>

#include "hmap/harmonic.hpp"

namespace hmap {

/// Gauss hypergeometric parameters; c must not be a nonpositive integer
/// (checked to integer tolerance 1e-12).
struct HGParams {
  double a = 0.0, b = 0.0, c = 1.0;

  HGParams() = default;
  HGParams(double a_, double b_, double c_);

  /// True when a or b is a nonpositive integer, so the 2F1 series terminates.
  bool terminating() const;
};

/// Rising factorial (x)_n = x(x+1)...(x+n-1); (x)_0 = 1. Exactly zero when
/// x is a nonpositive integer and n exceeds |x|.
double pochhammer(double x, int n);

/// log Gamma for strictly positive arguments (Lanczos approximation, g = 7).
/// Expressions with a nonpositive Gamma argument are never evaluated this
/// way; callers route those to series/finite-sum oracles.
double log_gamma(double x);

/// 2F1 coefficients (a)_n (b)_n / ((c)_n n!) for n <= N, by the stable
/// recurrence coeff_{n+1} = coeff_n (a+n)(b+n)/((c+n)(n+1)).
PowerSeries f21_coeffs(const HGParams& params, int N);

enum class GaussMethod { gamma, series };

/// F(a,b;c;1). Gamma method uses the closed form via log-Gamma (requires
/// c-a-b > 0 and all Gamma arguments positive); series method sums directly
/// (Levin-accelerated for slow algebraic tails). Terminating parameters are
/// summed exactly regardless of method. Throws on divergent non-terminating
/// input (c - a - b <= 0).
double gauss_value(const HGParams& params, GaussMethod method);

enum class Lemma61Sum { i, ii, iii };
enum class SumMethod { closed, series };

/// The three weighted hypergeometric sums at z = 1:
///   (i)   sum (n+1)   (a)_n(b)_n / ((c)_n n!)        [c > a+b+1]
///   (ii)  sum (n+1)^2 (a)_n(b)_n / ((c)_n n!)        [c > a+b+2]
///   (iii) sum         (a)_n(b)_n / ((c)_n (n+1)!)    [a,b,c != 1, c > max{0,a+b+1}]
/// The closed form for (iii) is
///   [Gamma(c)Gamma(c-a-b+1)/(Gamma(c-a)Gamma(c-b)) - (c-1)] / ((a-1)(b-1)),
/// which is what the series actually sums to (derivable from
/// d/dz F(a-1,b-1;c-1;z) = ((a-1)(b-1)/(c-1)) F(a,b;c;z)); the variant
/// with Gamma(c-a-b-1) sometimes quoted does not match the series.
double lemma61_sum(const HGParams& params, Lemma61Sum which, SumMethod method);

enum class MappingSelector { f1, f2, f3 };

/// The three hypergeometric harmonic mappings with h = z and co-analytic
/// coefficients (n >= 2):
///   f1: C_n = (a)_{n-2}(b)_{n-2} / ((c)_{n-2} (n-2)!)   [z^2 F]
///   f2: D_n = (a)_{n-1}(b)_{n-1} / ((c)_{n-1} (n-1)!)   [z (F - 1)]
///   f3: E_n = (a)_{n-2}(b)_{n-2} / ((c)_{n-2} (n-1)!)   [z * integral of F]
HarmonicMapping build_mapping(MappingSelector sel, const HGParams& params,
                              int N);

struct ConditionReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;  // lhs <= rhs within 1e-12
  std::string condition_id;
  bool gamma_form_applicable = true;  // false for terminating a,b (finite sum used)
  double coefficient_sum = 0.0;       // ground-truth sum n(1+alpha(n-1))|coef_n|
};

enum class MembershipConditionId { G3, G4, G5 };

/// Sufficient membership conditions for f1/f2/f3. lhs is the closed Gamma
/// expression (or the equivalent finite sum for terminating parameters);
/// rhs = 1-beta for G3/G5 and 2-beta for G4. Every evaluation cross-checks
/// the closed form against the direct coefficient sum (they must agree to
/// 1e-8; G4's closed form equals the sum plus 1) and throws on disagreement.
ConditionReport membership_condition(MembershipConditionId id,
                                     const HGParams& params,
                                     const ClassParams& class_params);

enum class CorollaryConditionId { C63i, C63ii, C63iii, C64i, C64ii, C64iii };

/// Printed polynomial-corollary inequalities. C63 takes (m, c); C64 is the
/// m = 2, c = 1 specialization with fixed displays 2(19a+9) <= 1-b,
/// 28a+13 <= 2(2-b), 108a+37 <= 6(1-b) (arithmetically unsatisfiable for
/// every admissible alpha, beta).
ConditionReport corollary_condition(CorollaryConditionId id, int m, double c,
                                    const ClassParams& class_params);

}  // namespace hmap
