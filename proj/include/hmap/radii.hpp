#pragma once

#include <string>
#include <vector>

#include "hmap/classes.hpp"
#include "hmap/harmonic.hpp"

namespace hmap {

enum class RadiusProvenance { closed_form, polynomial_root, empirical };

struct RadiusResult {
  double value = 0.0;
  RadiusProvenance provenance = RadiusProvenance::closed_form;
  double lo = 0.0, hi = 0.0;  // bracketing interval
  double residual = 0.0;      // |polynomial(value)| when applicable
  std::string case_tag;
  bool whole_disk = false;    // s22 formula exceeded 1 and was clamped
};

enum class RadiusCase { r1, r2 };

/// The r2 equation has two circulating variants differing only in the r^2
/// coefficient, (1-beta) versus (1+beta); both are kept behind this
/// selector. Default elsewhere: theorem.
enum class R2Variant { theorem, proof };

struct RadiusPolynomial {
  std::vector<double> coefficients;  // ascending by power, constant term 1
  RadiusCase kind = RadiusCase::r1;
  R2Variant variant = R2Variant::theorem;

  double eval(double r) const;
};

/// Coefficients of the convexity-radius equations:
///   r1 (degree 5): 1 - 4r + (6b-2)r^2 - 8(1-b)r^3 + (1-2b)r^4 + 4(1-b)r^5
///   r2 (degree 6): 1 - 4r + (1-b)r^2 - (8-3b)r^3 - (5-2b)r^4 - (4-3b)r^5
///                    + 3(1-b)r^6     [variant proof: (1+b)r^2]
/// beta = 1 is admitted here for solver limit tests only.
RadiusPolynomial radius_polynomial(RadiusCase kind, double beta,
                                   R2Variant variant = R2Variant::theorem);

/// Smallest positive root in (lo, hi): sign-change scan with step 1e-4,
/// then bisection to bracket width 1e-13. Throws when no sign change exists.
RadiusResult smallest_root(const RadiusPolynomial& poly, double lo = 0.0,
                           double hi = 1.0);

/// Radius 1/4 for section shapes (i) 1 = p < q, (ii) 3 <= p < q,
/// (iii) 3 <= q < p. Throws std::invalid_argument for uncovered shapes.
RadiusResult radius_quarter(int p, int q);

/// s_{2,2} radius min(1, (1+alpha)/(4(1-beta))); whole_disk set on clamping.
RadiusResult radius_s22(const ClassParams& params);

/// Dispatcher: routes (p,q) to the quarter radius, the r1/r2 root equations
/// (p=2<q resp. q=2<p), or the s_{2,2} closed form; errors on shapes the
/// theory does not cover.
RadiusResult proved_radius(int p, int q, const ClassParams& params,
                          R2Variant variant = R2Variant::theorem);

/// Empirical cross-validation: largest r in (0, 0.999] such that
/// harmonic_convexity_test(section(f,p,q), r) passes with positive margins,
/// located by bisection to bracket width <= 1e-6.
RadiusResult empirical_convexity_radius(const HarmonicMapping& f, int p, int q,
                                        int eps_samples = 16,
                                        int angles = 180);

}  // namespace hmap
