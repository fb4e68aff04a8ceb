#include "hmap/harmonic.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace hmap {

ClassParams::ClassParams(double a, double b) : alpha(a), beta(b) {
  if (!(a >= 0.0) || !std::isfinite(a))
    throw std::invalid_argument("ClassParams: alpha must be >= 0");
  if (!(b >= 0.0 && b < 1.0))
    throw std::invalid_argument("ClassParams: beta must be in [0, 1)");
}

HarmonicMapping make_mapping(PowerSeries h, PowerSeries g, bool require_h0) {
  if (std::abs(h.coeff(0)) > kCoeffTol)
    throw std::invalid_argument("make_mapping: h(0) != 0");
  if (std::abs(h.coeff(1) - 1.0) > kCoeffTol)
    throw std::invalid_argument("make_mapping: h'(0) != 1");
  if (std::abs(g.coeff(0)) > kCoeffTol)
    throw std::invalid_argument("make_mapping: g(0) != 0");
  if (require_h0 && std::abs(g.coeff(1)) > kCoeffTol)
    throw std::invalid_argument("make_mapping: g'(0) != 0 (not in H^0)");
  return HarmonicMapping(std::move(h), std::move(g));
}

PointData point_data(const HarmonicMapping& f, Complex z) {
  if (!is_finite(z) || std::abs(z) >= 1.0)
    throw std::domain_error("point_data: z outside the open unit disk");
  const PowerSeries hp = derivative(f.h());
  const Complex hv = evaluate(f.h(), z);
  const Complex gv = evaluate(f.g(), z);
  const Complex hpv = evaluate(hp, z);
  Complex gpv{0.0, 0.0};
  if (f.g().order() >= 1) gpv = evaluate(derivative(f.g()), z);
  PointData d;
  d.value = hv + std::conj(gv);
  d.jacobian = std::norm(hpv) - std::norm(gpv);
  if (std::abs(hpv) >= 1e-14) d.dilatation = gpv / hpv;
  return d;
}

PowerSeries f_epsilon(const HarmonicMapping& f, Complex eps) {
  if (std::abs(std::abs(eps) - 1.0) > 1e-12)
    throw std::invalid_argument("f_epsilon: |eps| != 1");
  return linear_combine(Complex{1.0, 0.0}, f.h(), eps, f.g());
}

HarmonicMapping section(const HarmonicMapping& f, int p, int q) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("section: p and q must be >= 1");
  return HarmonicMapping(f.h().truncated(p), f.g().truncated(q));
}

HarmonicMapping convolve(const HarmonicMapping& f1,
                         const HarmonicMapping& f2) {
  return HarmonicMapping(hadamard_product(f1.h(), f2.h()),
                         hadamard_product(f1.g(), f2.g()));
}

HatConvolveResult hat_convolve(const HarmonicMapping& f,
                               const PowerSeries& phi) {
  if (std::abs(phi.coeff(0)) > kCoeffTol)
    throw std::invalid_argument("hat_convolve: phi(0) != 0");
  HatConvolveResult r{HarmonicMapping(hadamard_product(f.h(), phi),
                                      hadamard_product(f.g(), phi)),
                      std::abs(phi.coeff(1) - 1.0) <= kCoeffTol};
  return r;
}

HarmonicMapping convex_combination(const std::vector<HarmonicMapping>& fs,
                                   const std::vector<double>& ts) {
  if (fs.empty() || fs.size() != ts.size())
    throw std::invalid_argument("convex_combination: size mismatch");
  double sum = 0.0;
  for (double t : ts) {
    if (!(t >= 0.0))
      throw std::invalid_argument("convex_combination: negative weight");
    sum += t;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("convex_combination: weights do not sum to 1");
  const bool h0 = fs.front().in_h0();
  int oh = 0, og = 0;
  for (const auto& f : fs) {
    if (f.in_h0() != h0)
      throw std::invalid_argument(
          "convex_combination: mixed normalization classes");
    oh = std::max(oh, f.h().order());
    og = std::max(og, f.g().order());
  }
  PowerSeries h = PowerSeries::zero(oh);
  PowerSeries g = PowerSeries::zero(og);
  for (size_t i = 0; i < fs.size(); ++i) {
    h = linear_combine(Complex{1.0, 0.0}, h, Complex{ts[i], 0.0}, fs[i].h());
    g = linear_combine(Complex{1.0, 0.0}, g, Complex{ts[i], 0.0}, fs[i].g());
  }
  return HarmonicMapping(std::move(h), std::move(g));
}

namespace {

PowerSeries rotate_series(const PowerSeries& s, double theta) {
  // e^{-i theta} s(e^{i theta} z): coefficient c_n picks up e^{i(n-1) theta}.
  std::vector<Complex> v(static_cast<size_t>(s.order()) + 1);
  for (int n = 0; n <= s.order(); ++n)
    v[static_cast<size_t>(n)] =
        s.coeff(n) * std::polar(1.0, theta * static_cast<double>(n - 1));
  return PowerSeries(std::move(v));
}

}  // namespace

HarmonicMapping rotate(const HarmonicMapping& f, double theta) {
  return HarmonicMapping(rotate_series(f.h(), theta),
                         rotate_series(f.g(), theta));
}

HarmonicMapping member_from_caratheodory(const ClassParams& params,
                                         const PowerSeries& p) {
  if (std::abs(p.coeff(0) - 1.0) > kCoeffTol)
    throw std::invalid_argument("member_from_caratheodory: p(0) != 1");
  // Positivity is checked by sampling, not symbolically; no finite
  // certificate exists for a truncated input.
  for (double r : {0.5, 0.9, 0.99}) {
    for (int k = 0; k < 256; ++k) {
      const double th = 2.0 * std::numbers::pi * k / 256.0;
      if (evaluate(p, std::polar(r, th)).real() <= 0.0)
        throw std::invalid_argument(
            "member_from_caratheodory: Re p <= 0 at a sample point");
    }
  }
  const int order = p.order() + 1;
  std::vector<Complex> h(static_cast<size_t>(order) + 1);
  h[1] = 1.0;
  for (int n = 2; n <= order; ++n) {
    const double denom =
        static_cast<double>(n) * (1.0 + params.alpha * (n - 1));
    h[static_cast<size_t>(n)] = (1.0 - params.beta) * p.coeff(n - 1) / denom;
  }
  return HarmonicMapping(PowerSeries(std::move(h)), PowerSeries::zero(order));
}

HarmonicMapping member_from_budget(const ClassParams& params, uint64_t seed,
                                   int order) {
  if (order < 2)
    throw std::invalid_argument("member_from_budget: order must be >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mag(0.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::vector<Complex> a(static_cast<size_t>(order) + 1);
  std::vector<Complex> b(static_cast<size_t>(order) + 1);
  double weighted = 0.0;
  for (int n = 2; n <= order; ++n) {
    a[static_cast<size_t>(n)] = std::polar(mag(rng), phase(rng));
    b[static_cast<size_t>(n)] = std::polar(mag(rng), phase(rng));
    const double w = static_cast<double>(n) * (1.0 + params.alpha * (n - 1));
    weighted += w * (std::abs(a[static_cast<size_t>(n)]) +
                     std::abs(b[static_cast<size_t>(n)]));
  }
  // Rescale so the sufficient-condition sum lands strictly inside the class; the
  // 0.999 factor keeps grid tests away from boundary equality.
  const double scale =
      weighted > 0.0 ? 0.999 * (1.0 - params.beta) / weighted : 0.0;
  for (int n = 2; n <= order; ++n) {
    a[static_cast<size_t>(n)] *= scale;
    b[static_cast<size_t>(n)] *= scale;
  }
  a[1] = 1.0;
  return HarmonicMapping(PowerSeries(std::move(a)), PowerSeries(std::move(b)));
}

}  // namespace hmap
