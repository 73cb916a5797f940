#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <type_traits>

namespace tropical {

/// Exact rational scalar backed by GMP. Expression templates are disabled so
/// that `auto` and Eigen expressions always see plain values.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

/// Parses `p`, `p/q` or a decimal literal such as `-1.25` or `3e-2` into an
/// exact rational. Decimals are never routed through binary floating point.
Rat parse_rational(std::string_view token);

/// `p` for integers, `p/q` otherwise.
std::string to_string(const Rat& value);

template <class S>
inline constexpr bool is_exact_v = !std::is_floating_point_v<S>;

template <class S>
double to_double(const S& value) {
  if constexpr (std::is_floating_point_v<S>) {
    return static_cast<double>(value);
  } else {
    return value.template convert_to<double>();
  }
}

}  // namespace tropical
