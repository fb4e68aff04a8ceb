#include "hmap/hypergeo.hpp"

#include <gsl/gsl_sum.h>

#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace hmap {

namespace {

bool is_nonpositive_integer(double x) {
  return x < 0.5 && std::abs(x - std::round(x)) < 1e-12 &&
         std::round(x) <= 0.0;
}

/// Index of the last nonzero 2F1 term for terminating parameters.
int termination_index(const HGParams& p) {
  int m = INT32_MAX;
  if (is_nonpositive_integer(p.a))
    m = std::min(m, static_cast<int>(std::llround(-p.a)));
  if (is_nonpositive_integer(p.b))
    m = std::min(m, static_cast<int>(std::llround(-p.b)));
  return m;
}

/// Base 2F1 terms (a)_n (b)_n / ((c)_n n!) for n = 0..count-1.
std::vector<double> base_terms(const HGParams& p, int count) {
  std::vector<double> t(static_cast<size_t>(count));
  double v = 1.0;
  for (int n = 0; n < count; ++n) {
    t[static_cast<size_t>(n)] = v;
    // Multiply before dividing: keeps terminating integer coefficient
    // sequences exact (integer-valued intermediates divide evenly).
    v = v * ((p.a + n) * (p.b + n)) / ((p.c + n) * (n + 1.0));
  }
  return t;
}

/// Levin u-transform acceleration for slow algebraic tails; plain summation
/// would need ~1e10 terms to reach 1e-9 near the convergence hypotheses.
double levin_sum(const std::vector<double>& terms) {
  gsl_sum_levin_u_workspace* w = gsl_sum_levin_u_alloc(terms.size());
  if (!w) throw std::runtime_error("levin_sum: allocation failure");
  double sum = 0.0, abserr = 0.0;
  const int status = gsl_sum_levin_u_accel(terms.data(), terms.size(), w,
                                           &sum, &abserr);
  gsl_sum_levin_u_free(w);
  if (status != 0 || !std::isfinite(sum))
    throw std::runtime_error("levin_sum: acceleration failed");
  return sum;
}

/// Sum of w(n) * (a)_n(b)_n/((c)_n n!): exact for terminating parameters,
/// Levin-accelerated otherwise.
double weighted_sum(const HGParams& p, const std::function<double(int)>& w) {
  if (p.terminating()) {
    const int m = termination_index(p);
    const std::vector<double> t = base_terms(p, m + 1);
    double s = 0.0;
    for (int n = 0; n <= m; ++n) s += w(n) * t[static_cast<size_t>(n)];
    return s;
  }
  constexpr int kTerms = 1200;
  std::vector<double> t = base_terms(p, kTerms);
  for (int n = 0; n < kTerms; ++n) t[static_cast<size_t>(n)] *= w(n);
  // Leading zero terms (weights that zero out a head term) degrade the
  // u-transform's remainder estimates; sum the nonzero tail instead.
  size_t first = 0;
  while (first < t.size() && t[first] == 0.0) ++first;
  if (first == t.size()) return 0.0;
  if (first > 0) t.erase(t.begin(), t.begin() + static_cast<long>(first));
  return levin_sum(t);
}

double gamma_ratio(const HGParams& p, double top) {
  // Gamma(c) Gamma(top) / (Gamma(c-a) Gamma(c-b)); all arguments positive.
  return std::exp(log_gamma(p.c) + log_gamma(top) - log_gamma(p.c - p.a) -
                  log_gamma(p.c - p.b));
}

bool gamma_args_positive(const HGParams& p, double top) {
  return p.c > 0.0 && top > 0.0 && p.c - p.a > 0.0 && p.c - p.b > 0.0;
}

}  // namespace

HGParams::HGParams(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
    throw std::invalid_argument("HGParams: non-finite parameter");
  if (is_nonpositive_integer(c))
    throw std::invalid_argument("HGParams: c must not be 0, -1, -2, ...");
}

bool HGParams::terminating() const {
  return is_nonpositive_integer(a) || is_nonpositive_integer(b);
}

double pochhammer(double x, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: n must be >= 0");
  double v = 1.0;
  for (int k = 0; k < n; ++k) v *= x + k;
  return v;
}

double log_gamma(double x) {
  if (!(x > 0.0))
    throw std::domain_error("log_gamma: argument must be positive");
  // Lanczos approximation, g = 7, 9 coefficients (double precision).
  static constexpr double kCoef[9] = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    // Reflection keeps accuracy near 0.
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) -
           log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double s = kCoef[0];
  for (int i = 1; i < 9; ++i) s += kCoef[i] / (z + i);
  const double t = z + 7.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) -
         t + std::log(s);
}

PowerSeries f21_coeffs(const HGParams& params, int N) {
  if (N < 0) throw std::invalid_argument("f21_coeffs: N must be >= 0");
  const std::vector<double> t = base_terms(params, N + 1);
  std::vector<Complex> v(t.size());
  for (size_t i = 0; i < t.size(); ++i) v[i] = t[i];
  return PowerSeries(std::move(v));
}

double gauss_value(const HGParams& params, GaussMethod method) {
  if (params.terminating()) {
    return weighted_sum(params, [](int) { return 1.0; });
  }
  const double cab = params.c - params.a - params.b;
  if (cab <= 0.0)
    throw std::domain_error("gauss_value: divergent (c - a - b <= 0)");
  if (method == GaussMethod::gamma && gamma_args_positive(params, cab))
    return gamma_ratio(params, cab);
  // Nonpositive Gamma arguments are routed to the series oracle.
  if (cab <= 0.01)
    throw std::domain_error(
        "gauss_value: series method needs c - a - b > 0.01");
  return weighted_sum(params, [](int) { return 1.0; });
}

double lemma61_sum(const HGParams& params, Lemma61Sum which,
                   SumMethod method) {
  const double a = params.a, b = params.b, c = params.c;
  const double cab = c - a - b;
  const bool term = params.terminating();
  if (!term && !(a > 0.0 && b > 0.0))
    throw std::domain_error("lemma61_sum: requires a, b > 0 (or terminating)");
  switch (which) {
    case Lemma61Sum::i:
      if (!(cab > 1.0))
        throw std::domain_error("lemma61_sum(i): requires c > a + b + 1");
      if (method == SumMethod::series || !gamma_args_positive(params, cab - 1.0))
        return weighted_sum(params, [](int n) { return n + 1.0; });
      return gamma_ratio(params, cab - 1.0) * (a * b + cab - 1.0);
    case Lemma61Sum::ii:
      if (!(cab > 2.0))
        throw std::domain_error("lemma61_sum(ii): requires c > a + b + 2");
      if (method == SumMethod::series || !gamma_args_positive(params, cab))
        return weighted_sum(params,
                            [](int n) { return (n + 1.0) * (n + 1.0); });
      return gamma_ratio(params, cab) *
             (pochhammer(a, 2) * pochhammer(b, 2) / pochhammer(cab - 2.0, 2) +
              3.0 * a * b / (cab - 1.0) + 1.0);
    case Lemma61Sum::iii:
      if (std::abs(a - 1.0) < 1e-12 || std::abs(b - 1.0) < 1e-12 ||
          std::abs(c - 1.0) < 1e-12)
        throw std::domain_error("lemma61_sum(iii): requires a, b, c != 1");
      if (!(c > std::max(0.0, a + b + 1.0)))
        throw std::domain_error(
            "lemma61_sum(iii): requires c > max{0, a + b + 1}");
      if (method == SumMethod::series || !gamma_args_positive(params, cab + 1.0))
        return weighted_sum(params, [](int n) { return 1.0 / (n + 1.0); });
      return (gamma_ratio(params, cab + 1.0) - (c - 1.0)) /
             ((a - 1.0) * (b - 1.0));
  }
  throw std::logic_error("lemma61_sum: unreachable");
}

HarmonicMapping build_mapping(MappingSelector sel, const HGParams& params,
                              int N) {
  if (N < 2) throw std::invalid_argument("build_mapping: N must be >= 2");
  const std::vector<double> base = base_terms(params, N);
  std::vector<Complex> g(static_cast<size_t>(N) + 1);
  for (int n = 2; n <= N; ++n) {
    double v = 0.0;
    switch (sel) {
      case MappingSelector::f1:
        v = base[static_cast<size_t>(n - 2)];
        break;
      case MappingSelector::f2:
        v = base[static_cast<size_t>(n - 1)];
        break;
      case MappingSelector::f3:
        v = base[static_cast<size_t>(n - 2)] / (n - 1.0);
        break;
    }
    g[static_cast<size_t>(n)] = v;
  }
  return HarmonicMapping(PowerSeries::monomial(1).truncated(N),
                         PowerSeries(std::move(g)));
}

namespace {

/// Ground truth for every section-6 condition: the direct coefficient sum
/// sum_{n>=2} n(1+alpha(n-1)) |coef_n| of the built mapping.
double condition_coefficient_sum(MappingSelector sel, const HGParams& p,
                                 double alpha) {
  // In terms of the base index m: n = m+2 for f1/f3, n = m+1 (m>=1) for f2.
  switch (sel) {
    case MappingSelector::f1:
      return weighted_sum(p, [alpha](int m) {
        return (m + 2.0) * (1.0 + alpha * (m + 1.0));
      });
    case MappingSelector::f2: {
      // Skip the m = 0 base term (it belongs to the subtracted constant).
      const double with_m0 = weighted_sum(p, [alpha](int m) {
        return m == 0 ? 0.0
                      : (m + 1.0) * (1.0 + alpha * m);
      });
      return with_m0;
    }
    case MappingSelector::f3:
      return weighted_sum(p, [alpha](int m) {
        return (m + 2.0) * (1.0 + alpha * (m + 1.0)) / (m + 1.0);
      });
  }
  throw std::logic_error("condition_coefficient_sum: unreachable");
}

}  // namespace

ConditionReport membership_condition(MembershipConditionId id,
                                     const HGParams& params,
                                     const ClassParams& class_params) {
  const double a = params.a, b = params.b, c = params.c;
  const double al = class_params.alpha;
  const double cab = c - a - b;
  if ((id == MembershipConditionId::G3 || id == MembershipConditionId::G4) &&
      !(cab > 2.0))
    throw std::domain_error("membership_condition: requires c > a + b + 2");
  if (id == MembershipConditionId::G5) {
    if (std::abs(a - 1.0) < 1e-12 || std::abs(b - 1.0) < 1e-12 ||
        std::abs(c - 1.0) < 1e-12)
      throw std::domain_error("membership_condition(G5): a, b, c != 1");
    if (!(c > std::max(0.0, a + b + 1.0)))
      throw std::domain_error(
          "membership_condition(G5): requires c > max{0, a + b + 1}");
  }

  ConditionReport rep;
  const MappingSelector sel = id == MembershipConditionId::G3
                                  ? MappingSelector::f1
                                  : (id == MembershipConditionId::G4
                                         ? MappingSelector::f2
                                         : MappingSelector::f3);
  rep.coefficient_sum = condition_coefficient_sum(sel, params, al);
  const double sum_as_lhs =
      id == MembershipConditionId::G4 ? rep.coefficient_sum + 1.0
                                      : rep.coefficient_sum;

  const double lowest_gamma_arg =
      id == MembershipConditionId::G5 ? cab - 1.0 : cab - 2.0;
  rep.gamma_form_applicable =
      !params.terminating() && gamma_args_positive(params, lowest_gamma_arg);
  if (rep.gamma_form_applicable) {
    double lhs = 0.0;
    switch (id) {
      case MembershipConditionId::G3:
        lhs = gamma_ratio(params, cab - 1.0) *
              (al * pochhammer(a, 2) * pochhammer(b, 2) / (cab - 2.0) +
               (1.0 + 4.0 * al) * a * b + 2.0 * (1.0 + al) * (cab - 1.0));
        break;
      case MembershipConditionId::G4:
        // Bracket's trailing term is (c-a-b-2)(c-a-b-1), the value the
        // coefficient sum actually produces (a bare "+1" here would not
        // reproduce the series).
        lhs = gamma_ratio(params, cab - 2.0) *
              (al * a * b * (a * b + c - 1.0) +
               (1.0 + al) * a * b * (cab - 2.0) + (cab - 2.0) * (cab - 1.0));
        break;
      case MembershipConditionId::G5:
        // Same correction as lemma61_sum(iii): the bracket term is
        // (c-a-b)(c-a-b-1)/((a-1)(b-1)), not 1/((a-1)(b-1)).
        lhs = gamma_ratio(params, cab - 1.0) *
                  (al * a * b + (1.0 + 2.0 * al) * (cab - 1.0) +
                   cab * (cab - 1.0) / ((a - 1.0) * (b - 1.0))) -
              (c - 1.0) / ((a - 1.0) * (b - 1.0));
        break;
    }
    rep.lhs = lhs;
    // Closed form vs. direct sum: fail loudly on disagreement.
    if (std::abs(lhs - sum_as_lhs) >
        1e-8 * std::max(1.0, std::abs(sum_as_lhs)))
      throw std::runtime_error(
          "membership_condition: closed form disagrees with coefficient sum");
  } else {
    rep.lhs = sum_as_lhs;
  }

  rep.rhs = id == MembershipConditionId::G4 ? 2.0 - class_params.beta
                                            : 1.0 - class_params.beta;
  rep.satisfied = rep.lhs <= rep.rhs + 1e-12;
  switch (id) {
    case MembershipConditionId::G3: rep.condition_id = "G3"; break;
    case MembershipConditionId::G4: rep.condition_id = "G4"; break;
    case MembershipConditionId::G5: rep.condition_id = "G5"; break;
  }
  return rep;
}

ConditionReport corollary_condition(CorollaryConditionId id, int m, double c,
                                    const ClassParams& class_params) {
  const double al = class_params.alpha;
  const double be = class_params.beta;
  ConditionReport rep;
  rep.gamma_form_applicable = false;  // fixed display arithmetic only
  const double md = static_cast<double>(m);

  const auto c63_ratio = [&](double top) {
    return std::exp(log_gamma(c) + log_gamma(top) - 2.0 * log_gamma(c + md));
  };

  switch (id) {
    case CorollaryConditionId::C63i:
      if (m < 1 || !(c > 0.0))
        throw std::invalid_argument("corollary_condition: m >= 1, c > 0");
      rep.lhs = c63_ratio(c + 2.0 * md - 1.0) *
                (al * md * md * (md - 1.0) * (md - 1.0) / (c + 2.0 * md - 2.0) +
                 (1.0 + 4.0 * al) * md * md +
                 2.0 * (1.0 + al) * (c + 2.0 * md - 1.0));
      rep.rhs = 1.0 - be;
      rep.condition_id = "C63i";
      break;
    case CorollaryConditionId::C63ii:
      if (m < 1 || !(c > 0.0))
        throw std::invalid_argument("corollary_condition: m >= 1, c > 0");
      rep.lhs = c63_ratio(c + 2.0 * (md - 1.0)) *
                (al * md * md * (md * md + c - 1.0) +
                 (1.0 + al) * md * md * (c + 2.0 * md - 2.0) + 1.0);
      rep.rhs = 2.0 - be;
      rep.condition_id = "C63ii";
      break;
    case CorollaryConditionId::C63iii:
      if (m < 1 || !(c > 0.0))
        throw std::invalid_argument("corollary_condition: m >= 1, c > 0");
      rep.lhs = c63_ratio(c + 2.0 * md - 1.0) *
                    (al * md * md + (1.0 + 2.0 * al) * (c + 2.0 * md - 1.0) +
                     1.0 / ((md + 1.0) * (md + 1.0))) -
                (c - 1.0) / ((md + 1.0) * (md + 1.0));
      rep.rhs = 1.0 - be;
      rep.condition_id = "C63iii";
      break;
    case CorollaryConditionId::C64i:
      rep.lhs = 2.0 * (19.0 * al + 9.0);
      rep.rhs = 1.0 - be;
      rep.condition_id = "C64i";
      break;
    case CorollaryConditionId::C64ii:
      rep.lhs = 28.0 * al + 13.0;
      rep.rhs = 2.0 * (2.0 - be);
      rep.condition_id = "C64ii";
      break;
    case CorollaryConditionId::C64iii:
      rep.lhs = 108.0 * al + 37.0;
      rep.rhs = 6.0 * (1.0 - be);
      rep.condition_id = "C64iii";
      break;
  }
  rep.satisfied = rep.lhs <= rep.rhs + 1e-12;
  return rep;
}

}  // namespace hmap
