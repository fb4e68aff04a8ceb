#pragma once

#include <complex>
#include <vector>

namespace hmap {

using Complex = std::complex<double>;

/// Default truncation order. Coefficients of every series in this library
/// are O(1/n), so order 64 keeps the truncation tail below 1e-9 at r <= 0.95.
inline constexpr int kDefaultOrder = 64;

/// Absolute tolerance for coefficient comparison (all values are O(1)).
inline constexpr double kCoeffTol = 1e-12;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Truncated complex power series. coeffs()[n] multiplies z^n; the series
/// is exact up to and including power order(). Immutable after construction.
class PowerSeries {
 public:
  /// The zero series of order 0.
  PowerSeries() : coeffs_(1, Complex{0.0, 0.0}) {}

  /// Takes ownership of the coefficient vector; throws std::invalid_argument
  /// on an empty vector or any non-finite coefficient.
  explicit PowerSeries(std::vector<Complex> coeffs);

  static PowerSeries zero(int order);
  static PowerSeries monomial(int power, Complex c = Complex{1.0, 0.0});
  /// 1 + z + ... + z^order (convolution identity on coefficient support).
  static PowerSeries geometric(int order);
  /// z + z^2 + ... + z^order.
  static PowerSeries geometric_from_one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of z^n; zero beyond the stored order.
  Complex coeff(int n) const {
    return (n >= 0 && n <= order()) ? coeffs_[static_cast<size_t>(n)]
                                    : Complex{0.0, 0.0};
  }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  /// Cut or zero-pad to the requested order.
  PowerSeries truncated(int new_order) const;

 private:
  std::vector<Complex> coeffs_;
};

/// Coefficientwise s*A + t*B; shorter operand zero-padded,
/// result order = max(order A, order B).
PowerSeries linear_combine(Complex s, const PowerSeries& a, Complex t,
                           const PowerSeries& b);

/// c_n = sum_{k=0..n} a_k b_{n-k}. Truncates at min(order A, order B) by
/// default; pass result_order >= 0 for an explicit truncation (use
/// order A + order B for an exact polynomial product).
PowerSeries cauchy_product(const PowerSeries& a, const PowerSeries& b,
                           int result_order = -1);

/// Coefficientwise product a_n * b_n, order = min of orders.
PowerSeries hadamard_product(const PowerSeries& a, const PowerSeries& b);

/// Termwise derivative; order decreases by 1. Throws on an order-0 input.
PowerSeries derivative(const PowerSeries& a);

/// Horner evaluation of the truncated polynomial. Throws on non-finite z.
Complex evaluate(const PowerSeries& a, Complex z);

/// Coefficientwise comparison with absolute tolerance, over the union of
/// supports (missing coefficients treated as zero).
bool approx_equal(const PowerSeries& a, const PowerSeries& b,
                  double tol = kCoeffTol);

}  // namespace hmap
