#include "hmap/classes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hmap {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double weight(int n, double alpha) {
  return static_cast<double>(n) * (1.0 + alpha * (n - 1));
}

Verdict verdict_from_margin(double margin) {
  if (margin < -kMarginTol) return Verdict::non_member;
  if (margin > kMarginTol) return Verdict::member;
  return Verdict::inconclusive;
}

void require_grid(const Grid& grid) {
  if (grid.radii.empty() || grid.angles < 1)
    throw std::invalid_argument("empty verification grid");
  for (double r : grid.radii)
    if (!(r > 0.0 && r < 1.0))
      throw std::invalid_argument("grid radii must lie in (0,1)");
}

}  // namespace

Grid Grid::default_grid() {
  return Grid{{0.1, 0.3, 0.5, 0.7, 0.9, 0.95, 0.99}, 720};
}

MembershipReport sufficient_membership(const HarmonicMapping& f,
                                       const ClassParams& params) {
  if (!f.in_h0())
    throw std::invalid_argument("sufficient_membership: f not in H^0");
  double s = 0.0;
  const int order = std::max(f.h().order(), f.g().order());
  for (int n = 2; n <= order; ++n)
    s += weight(n, params.alpha) *
         (std::abs(f.h().coeff(n)) + std::abs(f.g().coeff(n)));
  MembershipReport rep;
  rep.method = "sufficient";
  rep.margin = (1.0 - params.beta) - s;
  rep.certificate = rep.margin >= 0.0;
  rep.verdict = rep.margin >= 0.0 ? Verdict::member : Verdict::inconclusive;
  rep.note =
      "coefficient sum over n <= order; the condition requires the full sum "
      "(exact for polynomial input); sufficient, not necessary";
  return rep;
}

MembershipReport grid_membership(const HarmonicMapping& f,
                                 const ClassParams& params, const Grid& grid) {
  require_grid(grid);
  const PowerSeries hp = derivative(f.h());
  const PowerSeries hpp = hp.order() >= 1 ? derivative(hp)
                                          : PowerSeries::zero(0);
  PowerSeries gp = PowerSeries::zero(0);
  PowerSeries gpp = PowerSeries::zero(0);
  if (f.g().order() >= 1) gp = derivative(f.g());
  if (gp.order() >= 1) gpp = derivative(gp);

  MembershipReport rep;
  rep.method = "grid";
  rep.margin = std::numeric_limits<double>::infinity();
  for (double r : grid.radii) {
    for (int k = 0; k < grid.angles; ++k) {
      const Complex z = std::polar(r, kTwoPi * k / grid.angles);
      const Complex hterm =
          evaluate(hp, z) + params.alpha * z * evaluate(hpp, z);
      const Complex gterm =
          evaluate(gp, z) + params.alpha * z * evaluate(gpp, z);
      const double m = hterm.real() - params.beta - std::abs(gterm);
      if (m < rep.margin) {
        rep.margin = m;
        rep.witness = z;
      }
    }
  }
  rep.verdict = verdict_from_margin(rep.margin);
  rep.note = "grid sampling, not a certificate";
  if (rep.verdict != Verdict::non_member) rep.witness.reset();
  else if (!rep.witness) rep.witness = Complex{0.0, 0.0};
  return rep;
}

MembershipReport analytic_condition_test(const PowerSeries& F,
                                         const ClassParams& params,
                                         AnalyticKind kind, const Grid& grid) {
  require_grid(grid);
  if (kind != AnalyticKind::w_class) {
    if (std::abs(F.coeff(0)) > kCoeffTol ||
        std::abs(F.coeff(1) - 1.0) > kCoeffTol)
      throw std::invalid_argument(
          "analytic_condition_test: F not normalized (F(0)=0, F'(0)=1)");
  }
  const PowerSeries Fp = derivative(F);
  const PowerSeries Fpp =
      Fp.order() >= 1 ? derivative(Fp) : PowerSeries::zero(0);

  MembershipReport rep;
  rep.method = "grid";
  rep.margin = std::numeric_limits<double>::infinity();
  for (double r : grid.radii) {
    for (int k = 0; k < grid.angles; ++k) {
      const Complex z = std::polar(r, kTwoPi * k / grid.angles);
      double m = 0.0;
      switch (kind) {
        case AnalyticKind::w_class:
          m = (evaluate(Fp, z) + params.alpha * z * evaluate(Fpp, z)).real() -
              params.beta;
          break;
        case AnalyticKind::ctc:
          m = evaluate(Fp, z).real() - params.beta;
          break;
        case AnalyticKind::half_plane:
          m = (evaluate(F, z) / z).real() - 1.0 / (2.0 - params.beta);
          break;
      }
      if (m < rep.margin) {
        rep.margin = m;
        rep.witness = z;
      }
    }
  }
  rep.verdict = verdict_from_margin(rep.margin);
  rep.note = "grid sampling, not a certificate";
  if (rep.verdict != Verdict::non_member) rep.witness.reset();
  return rep;
}

CoeffBoundReport coeff_bound_check(const HarmonicMapping& f,
                                   const ClassParams& params) {
  if (!f.in_h0())
    throw std::invalid_argument("coeff_bound_check: f not in H^0");
  CoeffBoundReport rep;
  const int order = std::max(f.h().order(), f.g().order());
  for (int n = 2; n <= order; ++n) {
    const double bound_bn = (1.0 - params.beta) / weight(n, params.alpha);
    const double bound2 = 2.0 * bound_bn;
    const double an = std::abs(f.h().coeff(n));
    const double bn = std::abs(f.g().coeff(n));
    CoeffBoundRow row{n, bound_bn - bn, bound2 - (an + bn),
                      bound2 - std::abs(an - bn), bound2 - an};
    if (row.slack_bn < -kCoeffTol || row.slack_sum < -kCoeffTol ||
        row.slack_diff < -kCoeffTol || row.slack_an < -kCoeffTol)
      rep.violation = true;
    rep.rows.push_back(row);
  }
  return rep;
}

GrowthEnvelope growth_envelope(const ClassParams& params, double r, int N) {
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error("growth_envelope: r must be in [0,1)");
  if (N < 2) throw std::invalid_argument("growth_envelope: N must be >= 2");
  GrowthEnvelope env;
  env.r = r;
  env.truncation_order = N;
  const double c = 2.0 * (1.0 - params.beta);
  if (params.alpha == 0.0) {
    // Exact log closed forms: sum r^n/n and the alternating variant.
    env.upper = r + c * (-std::log1p(-r) - r);
    env.lower = r + c * (std::log1p(r) - r);
    env.tail_bound = 0.0;
    return env;
  }
  double up = 0.0, low = 0.0;
  double rn = r;  // r^n
  for (int n = 2; n <= N; ++n) {
    rn *= r;
    const double term = rn / weight(n, params.alpha);
    up += term;
    low += (n % 2 == 1 ? term : -term);  // (-1)^{n-1}
  }
  env.tail_bound = c * std::pow(r, N + 1) /
                   ((N + 1) * (1.0 + params.alpha * N) * (1.0 - r));
  env.upper = r + c * up + env.tail_bound;
  env.lower = r + c * low - env.tail_bound;
  return env;
}

GrowthReport growth_check(const HarmonicMapping& f, const ClassParams& params,
                          const Grid& grid, int N) {
  require_grid(grid);
  GrowthReport rep;
  rep.worst_lower_slack = std::numeric_limits<double>::infinity();
  rep.worst_upper_slack = std::numeric_limits<double>::infinity();
  for (double r : grid.radii) {
    const GrowthEnvelope env = growth_envelope(params, r, N);
    for (int k = 0; k < grid.angles; ++k) {
      const Complex z = std::polar(r, kTwoPi * k / grid.angles);
      const double af =
          std::abs(evaluate(f.h(), z) + std::conj(evaluate(f.g(), z)));
      rep.worst_lower_slack = std::min(rep.worst_lower_slack, af - env.lower);
      rep.worst_upper_slack = std::min(rep.worst_upper_slack, env.upper - af);
    }
  }
  rep.ok = rep.worst_lower_slack >= -kMarginTol &&
           rep.worst_upper_slack >= -kMarginTol;
  return rep;
}

bool convex_null_check(const std::vector<double>& c, double tol) {
  if (c.size() < 3)
    throw std::invalid_argument("convex_null_check: prefix length < 3");
  for (double v : c)
    if (v < 0.0) return false;
  for (size_t i = 0; i + 2 < c.size(); ++i) {
    const double d1 = c[i] - c[i + 1];
    const double d2 = c[i + 1] - c[i + 2];
    if (d1 < d2 - 1e-15) return false;
  }
  if (c[c.size() - 2] < c.back() - 1e-15) return false;  // last diff >= 0
  return std::abs(c.back()) < tol;
}

ConvexityReport harmonic_convexity_test(const HarmonicMapping& f, double r,
                                        int angles, int eps_samples) {
  if (!(r > 0.0 && r < 1.0))
    throw std::domain_error("harmonic_convexity_test: r must be in (0,1)");
  if (angles < 1 || eps_samples < 1)
    throw std::invalid_argument("harmonic_convexity_test: empty sampling");
  const PowerSeries hp = derivative(f.h());
  const PowerSeries hpp =
      hp.order() >= 1 ? derivative(hp) : PowerSeries::zero(0);
  PowerSeries gp = PowerSeries::zero(0);
  PowerSeries gpp = PowerSeries::zero(0);
  if (f.g().order() >= 1) gp = derivative(f.g());
  if (gp.order() >= 1) gpp = derivative(gp);

  ConvexityReport rep;
  rep.direct_margin = std::numeric_limits<double>::infinity();
  rep.eps_margin = std::numeric_limits<double>::infinity();
  for (int k = 0; k < angles; ++k) {
    const Complex z = std::polar(r, kTwoPi * k / angles);
    const Complex hpv = evaluate(hp, z);
    const Complex hppv = evaluate(hpp, z);
    const Complex gpv = evaluate(gp, z);
    const Complex gppv = evaluate(gpp, z);

    const Complex denom = z * hpv - std::conj(z * gpv);
    if (std::abs(denom) < 1e-12) {
      rep.singular = true;
      continue;
    }
    const Complex num =
        z * (hpv + z * hppv) + std::conj(z * (gpv + z * gppv));
    rep.direct_margin = std::min(rep.direct_margin, (num / denom).real());

    for (int e = 0; e < eps_samples; ++e) {
      const Complex eps = std::polar(1.0, kTwoPi * e / eps_samples);
      const Complex fp = hpv + eps * gpv;
      if (std::abs(fp) < 1e-12) {
        rep.singular = true;
        continue;
      }
      const Complex fpp = hppv + eps * gppv;
      rep.eps_margin =
          std::min(rep.eps_margin, (1.0 + z * fpp / fp).real());
    }
  }
  return rep;
}

}  // namespace hmap
