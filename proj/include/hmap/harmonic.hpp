#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hmap/series.hpp"

namespace hmap {

/// Parameters (alpha, beta) of the class W_H^0(alpha, beta):
/// harmonic f = h + conj(g) with Re(h' + alpha z h'' - beta) > |g' + alpha z g''|.
struct ClassParams {
  double alpha = 0.0;
  double beta = 0.0;

  ClassParams() = default;
  ClassParams(double a, double b);  // validates alpha >= 0, 0 <= beta < 1
};

/// Harmonic mapping f = h + conj(g). g is stored unconjugated; conjugation
/// happens only at evaluation so all series algebra stays holomorphic.
/// Normalization: h(0) = 0, h'(0) = 1, g(0) = 0. The mapping is in the
/// H^0 subclass when additionally g'(0) = 0.
class HarmonicMapping {
 public:
  HarmonicMapping() : h_(PowerSeries::monomial(1)), g_(PowerSeries::zero(1)) {}
  HarmonicMapping(PowerSeries h, PowerSeries g)
      : h_(std::move(h)), g_(std::move(g)) {}

  const PowerSeries& h() const { return h_; }
  const PowerSeries& g() const { return g_; }
  bool in_h0() const { return std::abs(g_.coeff(1)) <= kCoeffTol; }

 private:
  PowerSeries h_, g_;
};

/// Validating constructor: enforces h_0 = 0, h_1 = 1, g_0 = 0, and with
/// require_h0 additionally g_1 = 0. Throws std::invalid_argument naming the
/// failing coefficient.
HarmonicMapping make_mapping(PowerSeries h, PowerSeries g,
                             bool require_h0 = true);

struct PointData {
  Complex value;                      // f(z) = h(z) + conj(g(z))
  double jacobian;                    // |h'(z)|^2 - |g'(z)|^2
  std::optional<Complex> dilatation;  // g'/h'; absent when |h'| < 1e-14
};

/// Pointwise data at |z| < 1; throws std::domain_error outside the open disk.
PointData point_data(const HarmonicMapping& f, Complex z);

/// F_eps = h + eps*g; requires |eps| = 1 within 1e-12.
PowerSeries f_epsilon(const HarmonicMapping& f, Complex eps);

/// Section s_{p,q}(f) = s_p(h) + conj(s_q(g)); p, q >= 1.
HarmonicMapping section(const HarmonicMapping& f, int p, int q);

/// Harmonic convolution f1 * f2 = h1*h2 + conj(g1*g2) (Hadamard part-by-part).
HarmonicMapping convolve(const HarmonicMapping& f1, const HarmonicMapping& f2);

/// Hat-convolution with an analytic phi: h*phi + conj(g*phi). Requires
/// phi_0 = 0; when phi_1 != 1 the result loses the h'(0) = 1 normalization
/// (reported through the returned flag).
struct HatConvolveResult {
  HarmonicMapping mapping;
  bool normalization_preserved;
};
HatConvolveResult hat_convolve(const HarmonicMapping& f,
                               const PowerSeries& phi);

/// Coefficientwise sum_i t_i f_i; weights nonnegative, summing to 1 within
/// 1e-12, all mappings in the same normalization class.
HarmonicMapping convex_combination(const std::vector<HarmonicMapping>& fs,
                                   const std::vector<double>& ts);

/// Normalization-preserving rotation: h_theta(z) = e^{-i theta} h(e^{i theta} z),
/// same for g. Preserves class membership.
HarmonicMapping rotate(const HarmonicMapping& f, double theta);

/// Analytic member built from a Caratheodory function p (p(0) = 1, Re p > 0
/// sampled on radii {0.5, 0.9, 0.99} x 256 angles):
///   a_n = (1-beta) p_{n-1} / (n (1 + alpha (n-1))),  g = 0.
HarmonicMapping member_from_caratheodory(const ClassParams& params,
                                         const PowerSeries& p);

/// Pseudo-random member: coefficients a_n, b_n (n >= 2) drawn from the given
/// seed and rescaled so that sum n(1+alpha(n-1))(|a_n|+|b_n|) = 0.999 (1-beta),
/// which certifies membership with positive margin.
HarmonicMapping member_from_budget(const ClassParams& params, uint64_t seed,
                                   int order);

}  // namespace hmap
