#include "hmap/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace hmap {

PowerSeries::PowerSeries(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw std::invalid_argument("PowerSeries: empty coefficient vector");
  for (const Complex& c : coeffs_)
    if (!is_finite(c))
      throw std::invalid_argument("PowerSeries: non-finite coefficient");
}

PowerSeries PowerSeries::zero(int order) {
  if (order < 0) throw std::invalid_argument("PowerSeries::zero: order < 0");
  return PowerSeries(std::vector<Complex>(static_cast<size_t>(order) + 1));
}

PowerSeries PowerSeries::monomial(int power, Complex c) {
  if (power < 0)
    throw std::invalid_argument("PowerSeries::monomial: power < 0");
  std::vector<Complex> v(static_cast<size_t>(power) + 1);
  v.back() = c;
  return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::geometric(int order) {
  if (order < 0)
    throw std::invalid_argument("PowerSeries::geometric: order < 0");
  return PowerSeries(
      std::vector<Complex>(static_cast<size_t>(order) + 1, Complex{1.0, 0.0}));
}

PowerSeries PowerSeries::geometric_from_one(int order) {
  std::vector<Complex> v(static_cast<size_t>(order) + 1, Complex{1.0, 0.0});
  v[0] = 0.0;
  return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::truncated(int new_order) const {
  if (new_order < 0)
    throw std::invalid_argument("PowerSeries::truncated: order < 0");
  std::vector<Complex> v(static_cast<size_t>(new_order) + 1);
  const int keep = std::min(new_order, order());
  for (int n = 0; n <= keep; ++n) v[static_cast<size_t>(n)] = coeff(n);
  return PowerSeries(std::move(v));
}

PowerSeries linear_combine(Complex s, const PowerSeries& a, Complex t,
                           const PowerSeries& b) {
  if (!is_finite(s) || !is_finite(t))
    throw std::invalid_argument("linear_combine: non-finite scalar");
  const int n = std::max(a.order(), b.order());
  std::vector<Complex> v(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    v[static_cast<size_t>(k)] = s * a.coeff(k) + t * b.coeff(k);
  return PowerSeries(std::move(v));
}

PowerSeries cauchy_product(const PowerSeries& a, const PowerSeries& b,
                           int result_order) {
  const int n = result_order >= 0 ? result_order
                                  : std::min(a.order(), b.order());
  std::vector<Complex> v(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Complex c{0.0, 0.0};
    const int lo = std::max(0, k - b.order());
    const int hi = std::min(k, a.order());
    for (int j = lo; j <= hi; ++j) c += a.coeff(j) * b.coeff(k - j);
    v[static_cast<size_t>(k)] = c;
  }
  return PowerSeries(std::move(v));
}

PowerSeries hadamard_product(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> v(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    v[static_cast<size_t>(k)] = a.coeff(k) * b.coeff(k);
  return PowerSeries(std::move(v));
}

PowerSeries derivative(const PowerSeries& a) {
  if (a.order() < 1)
    throw std::invalid_argument("derivative: series has order 0");
  std::vector<Complex> v(static_cast<size_t>(a.order()));
  for (int k = 1; k <= a.order(); ++k)
    v[static_cast<size_t>(k) - 1] = static_cast<double>(k) * a.coeff(k);
  return PowerSeries(std::move(v));
}

Complex evaluate(const PowerSeries& a, Complex z) {
  if (!is_finite(z)) throw std::invalid_argument("evaluate: non-finite z");
  Complex acc{0.0, 0.0};
  for (int k = a.order(); k >= 0; --k) acc = acc * z + a.coeff(k);
  return acc;
}

bool approx_equal(const PowerSeries& a, const PowerSeries& b, double tol) {
  const int n = std::max(a.order(), b.order());
  for (int k = 0; k <= n; ++k)
    if (std::abs(a.coeff(k) - b.coeff(k)) > tol) return false;
  return true;
}

}  // namespace hmap
