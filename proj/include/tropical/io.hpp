#pragma once

// Point files: UTF-8 text, one point per line, whitespace-separated rationals
// (`p`, `p/q` or decimals). `#` starts a comment. An optional first line
// `dim d` declares the dimension.

#include "tropical/core.hpp"
#include "tropical/tropdet.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace tropical {

enum class CoordinateMode {
  projective,  ///< d+1 entries per row, canonicalized
  affine,      ///< d entries per row, 0 prepended
};

std::vector<TropPoint<Rat>> parse_points(std::istream& in, CoordinateMode mode = CoordinateMode::projective);
std::vector<TropPoint<Rat>> parse_points(const std::filesystem::path& path,
                                         CoordinateMode mode = CoordinateMode::projective);

/// Rows of a square matrix, taken as given (no canonicalization).
TropMatrix<Rat> parse_matrix(std::istream& in);

/// Whitespace- or comma-separated coordinates of a single point.
TropPoint<Rat> parse_point(const std::string& text, CoordinateMode mode = CoordinateMode::projective);

/// Space-separated coordinates; affine mode drops the leading canonical
/// coordinate after normalizing it to 0.
std::string format_point(const TropPoint<Rat>& p, CoordinateMode mode = CoordinateMode::projective);

void write_points(std::ostream& out, const std::vector<TropPoint<Rat>>& points,
                  CoordinateMode mode = CoordinateMode::projective);

}  // namespace tropical
