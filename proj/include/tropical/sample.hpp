#pragma once

// Random planar point sets for benchmarks, double precision.

#include "tropical/hull2d.hpp"

#include <cstddef>
#include <vector>

namespace tropical {

/// n points. With hull_size 0 they are uniform in the unit square. Otherwise
/// (hull_size >= 3) exactly hull_size of them are hull vertices, spread over three antichains
/// (one per empty sector) around a uniform cloud in [-3, 3]^2, shuffled.
std::vector<AffinePoint2<double>> sample_points(std::size_t n, std::size_t hull_size, unsigned seed);

}  // namespace tropical
