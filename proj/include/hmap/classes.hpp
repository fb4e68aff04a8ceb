#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hmap/harmonic.hpp"

namespace hmap {

/// Verdict band half-width: sharp extremal functions sit exactly on the
/// class boundary, so margins inside (-kMarginTol, +kMarginTol) are reported
/// as inconclusive rather than flipping between member/non-member.
inline constexpr double kMarginTol = 1e-9;

enum class Verdict { member, non_member, inconclusive };

struct MembershipReport {
  Verdict verdict = Verdict::inconclusive;
  double margin = 0.0;               // minimum inequality slack over the test
  std::optional<Complex> witness;    // point of worst margin (grid methods)
  std::string method;                // "sufficient" | "grid"
  bool certificate = false;          // grid sampling is not a certificate
  std::string note;
};

/// Sampling grid on concentric circles.
struct Grid {
  std::vector<double> radii;
  int angles = 720;

  static Grid default_grid();  // radii {0.1,0.3,0.5,0.7,0.9,0.95,0.99} x 720
};

/// Coefficient-sum sufficient condition: S = sum_{n>=2} n(1+alpha(n-1))(|a_n|+|b_n|).
/// Member iff S <= 1-beta (margin = (1-beta) - S); otherwise inconclusive,
/// since the condition is sufficient but not necessary. Requires f in H^0.
MembershipReport sufficient_membership(const HarmonicMapping& f,
                                       const ClassParams& params);

/// Defining inequality sampled on a grid:
/// margin = min Re(h' + alpha z h'' - beta) - |g' + alpha z g''|.
MembershipReport grid_membership(const HarmonicMapping& f,
                                 const ClassParams& params,
                                 const Grid& grid = Grid::default_grid());

enum class AnalyticKind {
  w_class,     // Re(F' + alpha z F'') > beta
  ctc,         // Re(F') > beta
  half_plane,  // Re(F(z)/z) > 1/(2-beta)
};

/// Analytic-side condition tests. F must be normalized (F_0 = 0, F_1 = 1)
/// for kinds ctc and half_plane. half_plane uses the limit F(z)/z -> 1 at 0.
MembershipReport analytic_condition_test(const PowerSeries& F,
                                         const ClassParams& params,
                                         AnalyticKind kind,
                                         const Grid& grid = Grid::default_grid());

/// Per-n slacks of the four coefficient bounds
/// (|b_n| bound, |a_n|+|b_n|, ||a_n|-|b_n||, |a_n| bounds).
struct CoeffBoundRow {
  int n;
  double slack_bn;        // (1-beta)/(n(1+alpha(n-1))) - |b_n|
  double slack_sum;       // 2(1-beta)/(n(1+alpha(n-1))) - (|a_n|+|b_n|)
  double slack_diff;      //  "                         - ||a_n|-|b_n||
  double slack_an;        //  "                         - |a_n|
};
struct CoeffBoundReport {
  std::vector<CoeffBoundRow> rows;
  bool violation = false;  // any negative slack disproves membership
};
CoeffBoundReport coeff_bound_check(const HarmonicMapping& f,
                                   const ClassParams& params);

struct GrowthEnvelope {
  double lower = 0.0;
  double upper = 0.0;
  double r = 0.0;
  int truncation_order = 0;
  double tail_bound = 0.0;  // already folded into lower/upper conservatively
};

/// Growth envelope lower(r) <= |f(z)| <= upper(r) for class members:
///   upper = r + 2(1-beta) sum_{n=2..N} r^n / (n(1+alpha(n-1))) + tail
///   lower = r + 2(1-beta) sum_{n=2..N} (-1)^{n-1} r^n / (n(1+alpha(n-1))) - tail
/// For alpha = 0 exact log closed forms are used (tail = 0).
GrowthEnvelope growth_envelope(const ClassParams& params, double r, int N);

struct GrowthReport {
  double worst_lower_slack = 0.0;  // min over grid of |f| - lower
  double worst_upper_slack = 0.0;  // min over grid of upper - |f|
  bool ok = false;
};

/// Checks lower(|z|) - 1e-9 <= |f(z)| <= upper(|z|) + 1e-9 on the grid.
/// Caller is responsible for f being a certified member.
GrowthReport growth_check(const HarmonicMapping& f, const ClassParams& params,
                          const Grid& grid = Grid::default_grid(),
                          int N = kDefaultOrder);

/// True iff the finite prefix has nonnegative, nonincreasing consecutive
/// differences and the last element is numerically null (|c_last| < tol).
/// Requires prefix length >= 3.
bool convex_null_check(const std::vector<double>& c, double tol = 0.05);

struct ConvexityReport {
  double direct_margin = 0.0;  // harmonic convexity quotient on |z| = r
  double eps_margin = 0.0;     // min over eps of Re(1 + z F_eps''/F_eps')
  bool singular = false;       // a denominator vanished at a sample
  bool ok() const {
    return !singular && direct_margin > 0.0 && eps_margin > 0.0;
  }
};

/// Samples the two convexity tests on |z| = r:
///  (a) direct: Re{(z(h'+zh'') + conj(z(g'+zg''))) / (zh' - conj(zg'))} > 0
///  (b) eps-family: Re(1 + z F_eps''/F_eps') > 0 for eps_samples unit eps.
ConvexityReport harmonic_convexity_test(const HarmonicMapping& f, double r,
                                        int angles, int eps_samples);

}  // namespace hmap
