#pragma once

#include "hmap/harmonic.hpp"

namespace hmap {

/// Sharpness witness for the single-coefficient bound:
/// f(z) = z + (1-beta)/(n(1+alpha(n-1))) conj(z)^n, n >= 2.
/// Attains |b_n| equal to its bound with zero slack.
HarmonicMapping extremal_bn(int n, const ClassParams& params);

/// Sharpness witness for the joint coefficient bounds and growth envelope:
/// f(z) = z + sum_{n=2..N} 2(1-beta)/(n(1+alpha(n-1))) conj(z)^n.
HarmonicMapping extremal_full(const ClassParams& params, int N);

/// The Caratheodory-derivative extremal p(z) = -z - 2 e^{i theta} log(1 - z e^{i theta}),
/// truncated at N. Note: p(0) = 0 here rather than the usual Caratheodory
/// normalization p(0) = 1; the series is kept in this form and is used only
/// to exercise the derivative inequalities
/// |p'| >= (1-r)/(1+r) and |p''/p'| <= 2/(1-r^2).
PowerSeries caratheodory_extremal(double theta, int N);

}  // namespace hmap
