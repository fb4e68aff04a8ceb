#include "hmap/radii.hpp"

#include <cmath>
#include <stdexcept>

namespace hmap {

double RadiusPolynomial::eval(double r) const {
  double acc = 0.0;
  for (size_t i = coefficients.size(); i-- > 0;)
    acc = acc * r + coefficients[i];
  return acc;
}

RadiusPolynomial radius_polynomial(RadiusCase kind, double beta,
                                   R2Variant variant) {
  if (!(beta >= 0.0 && beta <= 1.0))
    throw std::invalid_argument("radius_polynomial: beta outside [0,1]");
  RadiusPolynomial p;
  p.kind = kind;
  p.variant = variant;
  const double b = beta;
  if (kind == RadiusCase::r1) {
    p.coefficients = {1.0, -4.0, 6.0 * b - 2.0, -8.0 * (1.0 - b),
                      1.0 - 2.0 * b, 4.0 * (1.0 - b)};
  } else {
    const double r2coef = variant == R2Variant::theorem ? 1.0 - b : 1.0 + b;
    p.coefficients = {1.0,           -4.0,
                      r2coef,        -(8.0 - 3.0 * b),
                      -(5.0 - 2.0 * b), -(4.0 - 3.0 * b),
                      3.0 * (1.0 - b)};
  }
  return p;
}

RadiusResult smallest_root(const RadiusPolynomial& poly, double lo,
                           double hi) {
  if (poly.coefficients.empty() || poly.coefficients.front() == 0.0)
    throw std::invalid_argument("smallest_root: constant term must be nonzero");
  constexpr double kStep = 1e-4;
  double a = lo;
  double fa = poly.eval(a);
  double b = a;
  bool found = false;
  // First sign change; root polynomials have roots separated well beyond
  // the scan step for all beta in [0,1).
  for (double x = lo + kStep; x <= hi + 0.5 * kStep; x += kStep) {
    const double fx = poly.eval(std::min(x, hi));
    if (fa == 0.0) {  // exact hit at the left end
      b = a;
      found = true;
      break;
    }
    if (fa * fx <= 0.0) {
      b = std::min(x, hi);
      found = true;
      break;
    }
    a = std::min(x, hi);
    fa = fx;
  }
  if (!found)
    throw std::runtime_error("smallest_root: no sign change in interval");
  while (b - a > 1e-13) {
    const double m = 0.5 * (a + b);
    const double fm = poly.eval(m);
    if (fa * fm <= 0.0) {
      b = m;
    } else {
      a = m;
      fa = fm;
    }
  }
  RadiusResult res;
  res.provenance = RadiusProvenance::polynomial_root;
  res.lo = a;
  res.hi = b;
  res.value = 0.5 * (a + b);
  res.residual = std::abs(poly.eval(res.value));
  res.case_tag = poly.kind == RadiusCase::r1 ? "r1" : "r2";
  return res;
}

RadiusResult radius_quarter(int p, int q) {
  const bool covered =
      (p == 1 && q > 1) || (p >= 3 && p < q) || (q >= 3 && q < p);
  if (!covered)
    throw std::invalid_argument(
        "radius_quarter: (p,q) not covered by the 1/4 theorem");
  RadiusResult res;
  res.value = 0.25;
  res.lo = res.hi = 0.25;
  res.provenance = RadiusProvenance::closed_form;
  res.case_tag = p == 1 ? "quarter(i)" : (p < q ? "quarter(ii)" : "quarter(iii)");
  return res;
}

RadiusResult radius_s22(const ClassParams& params) {
  RadiusResult res;
  res.provenance = RadiusProvenance::closed_form;
  res.case_tag = "s22";
  const double raw = (1.0 + params.alpha) / (4.0 * (1.0 - params.beta));
  if (raw > 1.0) {
    res.value = 1.0;
    res.whole_disk = true;  // formula exceeds the domain; convex everywhere tested
  } else {
    res.value = raw;
  }
  res.lo = res.hi = res.value;
  return res;
}

RadiusResult proved_radius(int p, int q, const ClassParams& params,
                          R2Variant variant) {
  if (p == 2 && q == 2) return radius_s22(params);
  if (p == 2 && q > 2)
    return smallest_root(radius_polynomial(RadiusCase::r1, params.beta));
  if (q == 2 && p > 2)
    return smallest_root(
        radius_polynomial(RadiusCase::r2, params.beta, variant));
  return radius_quarter(p, q);
}

RadiusResult empirical_convexity_radius(const HarmonicMapping& f, int p, int q,
                                        int eps_samples, int angles) {
  const HarmonicMapping s = section(f, p, q);
  const auto passes = [&](double r) {
    const ConvexityReport rep = harmonic_convexity_test(s, r, angles, eps_samples);
    return rep.ok();
  };

  constexpr double kCap = 0.999;
  if (passes(kCap)) {
    RadiusResult res;
    res.value = kCap;
    res.lo = res.hi = kCap;
    res.provenance = RadiusProvenance::empirical;
    res.case_tag = "empirical(cap)";
    return res;
  }
  double lo = 1e-4;
  if (!passes(lo))
    throw std::runtime_error(
        "empirical_convexity_radius: section fails convexity test near 0 "
        "(degenerate section)");
  double hi = kCap;
  while (hi - lo > 1e-6) {
    const double m = 0.5 * (lo + hi);
    if (passes(m)) {
      lo = m;
    } else {
      hi = m;
    }
  }
  RadiusResult res;
  res.value = lo;  // largest radius observed to pass
  res.lo = lo;
  res.hi = hi;
  res.provenance = RadiusProvenance::empirical;
  res.case_tag = "empirical";
  return res;
}

}  // namespace hmap
