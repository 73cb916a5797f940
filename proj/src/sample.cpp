#include "tropical/sample.hpp"

#include <algorithm>
#include <random>

namespace tropical {

std::vector<AffinePoint2<double>> sample_points(std::size_t n, std::size_t hull_size, unsigned seed) {
  if (hull_size > n) throw PreconditionError("sample_points: hull size exceeds the number of points");
  if (hull_size == 1 || hull_size == 2) throw PreconditionError("sample_points: hull size must be 0 or at least 3");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<AffinePoint2<double>> pts;
  pts.reserve(n);
  if (hull_size == 0) {
    for (std::size_t i = 0; i < n; ++i) pts.emplace_back(unit(rng), unit(rng));
    return pts;
  }
  // Chain a: x + y constant, nothing above-right. Chain b: x and y - x rise
  // together, nothing to the left with larger y - x. Chain c: y rises while
  // y - x falls, nothing below with smaller y - x.
  const std::size_t per = (hull_size + 2) / 3;
  for (std::size_t i = 0; pts.size() < hull_size; ++i) {
    const double s = 5.0 * (static_cast<double>(i / 3) + 0.5) / static_cast<double>(per) - 2.5;
    switch (i % 3) {
      case 0: pts.emplace_back(10.0 + s, 10.0 - s); break;
      case 1: pts.emplace_back(-10.0 + s, 2.0 * s); break;
      default: pts.emplace_back(2.0 * s, -10.0 + s); break;
    }
  }
  std::uniform_real_distribution<double> cloud(-3.0, 3.0);
  while (pts.size() < n) pts.emplace_back(cloud(rng), cloud(rng));
  std::shuffle(pts.begin(), pts.end(), rng);
  return pts;
}

}  // namespace tropical
