#include "hmap/extremal.hpp"

#include <cmath>
#include <stdexcept>

namespace hmap {

HarmonicMapping extremal_bn(int n, const ClassParams& params) {
  if (n < 2) throw std::invalid_argument("extremal_bn: n must be >= 2");
  const double c =
      (1.0 - params.beta) / (static_cast<double>(n) * (1.0 + params.alpha * (n - 1)));
  return HarmonicMapping(PowerSeries::monomial(1).truncated(n),
                         PowerSeries::monomial(n, Complex{c, 0.0}));
}

HarmonicMapping extremal_full(const ClassParams& params, int N) {
  if (N < 2) throw std::invalid_argument("extremal_full: N must be >= 2");
  std::vector<Complex> g(static_cast<size_t>(N) + 1);
  for (int n = 2; n <= N; ++n)
    g[static_cast<size_t>(n)] =
        2.0 * (1.0 - params.beta) /
        (static_cast<double>(n) * (1.0 + params.alpha * (n - 1)));
  return HarmonicMapping(PowerSeries::monomial(1).truncated(N),
                         PowerSeries(std::move(g)));
}

PowerSeries caratheodory_extremal(double theta, int N) {
  if (N < 2)
    throw std::invalid_argument("caratheodory_extremal: N must be >= 2");
  // -z - 2 e^{i theta} log(1 - z e^{i theta})
  //   = -z + 2 sum_{n>=1} e^{i(n+1) theta} z^n / n.
  std::vector<Complex> v(static_cast<size_t>(N) + 1);
  for (int n = 1; n <= N; ++n)
    v[static_cast<size_t>(n)] =
        2.0 * std::polar(1.0, (n + 1) * theta) / static_cast<double>(n);
  v[1] -= 1.0;
  return PowerSeries(std::move(v));
}

}  // namespace hmap
