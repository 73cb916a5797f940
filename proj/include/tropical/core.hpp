#pragma once

// Tropical (min, +) semiring arithmetic and the basic objects of tropical
// projective space: points, hyperplanes, sectors, halfspaces and polytopes.
//
// Every type is templated on the scalar. `Rat` gives exact predicates; `double`
// is accepted for throughput experiments and is inexact by nature.

#include "tropical/errors.hpp"
#include "tropical/rational.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tropical {

template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
S trop_add(const S& lambda, const S& mu) {
  return std::min(lambda, mu);
}

template <class S>
S trop_mul(const S& lambda, const S& mu) {
  return lambda + mu;
}

/// A point of TP^d in canonical coordinates: all entries >= 0, at least one 0.
template <class S = Rat>
class TropPoint {
 public:
  using Scalar = S;

  /// Canonicalizes any representative of the class `raw + R(1,...,1)`.
  template <class Derived>
  static TropPoint from_raw(const Eigen::MatrixBase<Derived>& raw) {
    if (raw.size() < 2) {
      throw DimensionError("a point of TP^d needs at least 2 coordinates, got " +
                           std::to_string(raw.size()));
    }
    Vector<S> coords = raw;
    const S shift = coords.minCoeff();
    coords.array() -= shift;
    return TropPoint(std::move(coords));
  }

  static TropPoint from_raw(std::initializer_list<S> raw) {
    Vector<S> v(static_cast<Eigen::Index>(raw.size()));
    Eigen::Index i = 0;
    for (const S& c : raw) v(i++) = c;
    return from_raw(v);
  }

  /// d, the projective dimension (number of coordinates minus one).
  Eigen::Index dim() const { return coords_.size() - 1; }
  Eigen::Index size() const { return coords_.size(); }
  const Vector<S>& coords() const { return coords_; }
  const S& operator[](Eigen::Index i) const { return coords_(i); }

  friend bool operator==(const TropPoint& a, const TropPoint& b) {
    return a.coords_.size() == b.coords_.size() && a.coords_ == b.coords_;
  }

  /// Lexicographic order on canonical coordinates, for deterministic sorting.
  friend bool lex_less(const TropPoint& a, const TropPoint& b) {
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                        b.coords_.end());
  }

 private:
  explicit TropPoint(Vector<S> coords) : coords_(std::move(coords)) {}

  Vector<S> coords_;
};

template <class Derived>
TropPoint<typename Derived::Scalar> canonicalize(const Eigen::MatrixBase<Derived>& raw) {
  return TropPoint<typename Derived::Scalar>::from_raw(raw);
}

template <class S>
TropPoint<S> canonicalize(const std::vector<S>& raw) {
  return TropPoint<S>::from_raw(
      Eigen::Map<const Vector<S>>(raw.data(), static_cast<Eigen::Index>(raw.size())));
}

inline TropPoint<Rat> point(std::initializer_list<Rat> raw) { return TropPoint<Rat>::from_raw(raw); }

namespace detail {

template <class S>
void require_same_dim(const TropPoint<S>& a, const TropPoint<S>& b, const char* what) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
}

/// Indices attaining min_j (x_j - apex_j). Sorted ascending.
template <class S>
std::vector<int> argmin_indices(const TropPoint<S>& x, const TropPoint<S>& apex) {
  std::vector<int> result;
  std::optional<S> best;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    S diff = x[j] - apex[j];
    if (!best || diff < *best) {
      best = std::move(diff);
      result.assign(1, static_cast<int>(j));
    } else if (diff == *best) {
      result.push_back(static_cast<int>(j));
    }
  }
  return result;
}

}  // namespace detail

/// Affine chart (xi_0, ..., xi_d) -> (xi_1 - xi_0, ..., xi_d - xi_0).
template <class S>
Vector<S> affine_chart(const TropPoint<S>& x) {
  return (x.coords().tail(x.dim()).array() - x[0]).matrix();
}

/// Inverse of `affine_chart`: prepend 0, canonicalize.
template <class Derived>
TropPoint<typename Derived::Scalar> from_affine(const Eigen::MatrixBase<Derived>& chart) {
  using S = typename Derived::Scalar;
  Vector<S> raw(chart.size() + 1);
  raw(0) = S(0);
  raw.tail(chart.size()) = chart;
  return TropPoint<S>::from_raw(raw);
}

/// Largest canonical coordinate; equals max |xi_i - xi_j| for any representative.
template <class S>
S trop_norm(const TropPoint<S>& x) {
  return x.coords().maxCoeff();
}

template <class S>
S trop_dist(const TropPoint<S>& x, const TropPoint<S>& y) {
  detail::require_same_dim(x, y, "trop_dist");
  const Vector<S> diff = x.coords() - y.coords();
  return diff.maxCoeff() - diff.minCoeff();
}

/// lambda (.) x (+) mu (.) y, canonicalized.
template <class S>
TropPoint<S> segment_eval(const TropPoint<S>& x, const TropPoint<S>& y, const S& lambda,
                          const S& mu) {
  detail::require_same_dim(x, y, "segment_eval");
  Vector<S> raw(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) raw(i) = trop_add(S(lambda + x[i]), S(mu + y[i]));
  return TropPoint<S>::from_raw(raw);
}

/// The tropical segment [x, y] as an ordinary polyline from x to y. The kinks
/// sit at the parameters t = x_i - y_i of min(x, t + y); consecutive returned
/// points are joined by ordinary straight pieces inside [x, y].
template <class S>
std::vector<TropPoint<S>> segment_breakpoints(const TropPoint<S>& x, const TropPoint<S>& y) {
  detail::require_same_dim(x, y, "segment_breakpoints");
  std::vector<S> params(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) params[static_cast<std::size_t>(i)] = x[i] - y[i];
  std::sort(params.begin(), params.end(), [](const S& a, const S& b) { return b < a; });
  params.erase(std::unique(params.begin(), params.end()), params.end());

  std::vector<TropPoint<S>> result;
  result.reserve(params.size());
  for (const S& t : params) {
    TropPoint<S> p = segment_eval(x, y, S(0), t);
    if (result.empty() || !(result.back() == p)) result.push_back(std::move(p));
  }
  return result;
}

/// The tropical hyperplane with the given apex, i.e. with linear form -apex.
template <class S = Rat>
struct Hyperplane {
  TropPoint<S> apex;
};

template <class S>
bool hyperplane_contains(const Hyperplane<S>& h, const TropPoint<S>& x) {
  detail::require_same_dim(h.apex, x, "hyperplane_contains");
  return detail::argmin_indices(x, h.apex).size() >= 2;
}

/// apex + S_k (open) or apex + closure(S_k) (closed).
template <class S = Rat>
class Sector {
 public:
  Sector(TropPoint<S> apex, int index, bool closed = true)
      : apex_(std::move(apex)), index_(index), closed_(closed) {
    if (index < 0 || index > apex_.dim()) {
      throw PreconditionError("sector index " + std::to_string(index) + " out of range 0.." +
                              std::to_string(apex_.dim()));
    }
  }

  const TropPoint<S>& apex() const { return apex_; }
  int index() const { return index_; }
  bool closed() const { return closed_; }

 private:
  TropPoint<S> apex_;
  int index_;
  bool closed_;
};

template <class S>
bool sector_contains(const Sector<S>& s, const TropPoint<S>& x) {
  detail::require_same_dim(s.apex(), x, "sector_contains");
  const auto k = s.index();
  const S base = x[k] - s.apex()[k];
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (j == k) continue;
    const S other = x[j] - s.apex()[j];
    if (s.closed() ? other < base : !(base < other)) return false;
  }
  return true;
}

/// Union of the closed sectors apex + S_k, k in K, with 1 <= |K| <= d. The open
/// halfspace with the same data is the complement of the opposite closed one.
template <class S = Rat>
class Halfspace {
 public:
  Halfspace(TropPoint<S> apex, std::vector<int> indices, bool closed = true)
      : apex_(std::move(apex)), indices_(std::move(indices)), closed_(closed) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    const auto d = apex_.dim();
    if (indices_.empty() || static_cast<Eigen::Index>(indices_.size()) > d) {
      throw PreconditionError("a halfspace needs between 1 and " + std::to_string(d) +
                              " sector indices, got " + std::to_string(indices_.size()));
    }
    if (indices_.front() < 0 || indices_.back() > d) {
      throw PreconditionError("halfspace sector index out of range 0.." + std::to_string(d));
    }
  }

  const TropPoint<S>& apex() const { return apex_; }
  const std::vector<int>& indices() const { return indices_; }
  bool closed() const { return closed_; }

  bool has_index(int k) const { return std::binary_search(indices_.begin(), indices_.end(), k); }

  Halfspace opposite() const {
    std::vector<int> rest;
    for (int k = 0; k <= apex_.dim(); ++k) {
      if (!has_index(k)) rest.push_back(k);
    }
    return Halfspace(apex_, std::move(rest), closed_);
  }

  friend bool operator==(const Halfspace& a, const Halfspace& b) {
    return a.closed_ == b.closed_ && a.indices_ == b.indices_ && a.apex_ == b.apex_;
  }

 private:
  TropPoint<S> apex_;
  std::vector<int> indices_;
  bool closed_;
};

template <class S>
bool halfspace_contains(const Halfspace<S>& h, const TropPoint<S>& x) {
  detail::require_same_dim(h.apex(), x, "halfspace_contains");
  const std::vector<int> active = detail::argmin_indices(x, h.apex());
  if (h.closed()) {
    return std::any_of(active.begin(), active.end(), [&](int k) { return h.has_index(k); });
  }
  return std::all_of(active.begin(), active.end(), [&](int k) { return h.has_index(k); });
}

/// Points lying in both closed halfspaces H and opposite(H).
template <class S>
bool halfspace_boundary_contains(const Halfspace<S>& h, const TropPoint<S>& x) {
  detail::require_same_dim(h.apex(), x, "halfspace_boundary_contains");
  const std::vector<int> active = detail::argmin_indices(x, h.apex());
  const bool inside = std::any_of(active.begin(), active.end(), [&](int k) { return h.has_index(k); });
  const bool outside = std::any_of(active.begin(), active.end(), [&](int k) { return !h.has_index(k); });
  return inside && outside;
}

/// Vertices sum_{i in J} -e_i of the k-th tropical hypersimplex in TP^d, J
/// ranging over k-subsets of {0..d} in lexicographic order.
template <class S = Rat>
std::vector<TropPoint<S>> hypersimplex(int d, int k) {
  if (d < 1) throw DimensionError("hypersimplex needs d >= 1");
  if (k < 1 || k > d) {
    throw PreconditionError("hypersimplex needs 1 <= k <= d, got k=" + std::to_string(k));
  }
  std::vector<TropPoint<S>> result;
  std::vector<bool> chosen(static_cast<std::size_t>(d + 1), false);
  std::fill(chosen.begin(), chosen.begin() + k, true);
  do {
    Vector<S> raw = Vector<S>::Zero(d + 1);
    for (int i = 0; i <= d; ++i) {
      if (chosen[static_cast<std::size_t>(i)]) raw(i) = S(-1);
    }
    result.push_back(TropPoint<S>::from_raw(raw));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return result;
}

/// Generators -e_0 - 2 e_i (i = 1..d) and e_1 + ... + e_d of the +-1 cube in
/// the affine chart.
template <class S = Rat>
std::vector<TropPoint<S>> cube_generators(int d) {
  if (d < 1) throw DimensionError("cube needs d >= 1");
  std::vector<TropPoint<S>> result;
  for (int i = 1; i <= d; ++i) {
    Vector<S> raw = Vector<S>::Zero(d + 1);
    raw(0) = S(-1);
    raw(i) = S(-2);
    result.push_back(TropPoint<S>::from_raw(raw));
  }
  Vector<S> top = Vector<S>::Ones(d + 1);
  top(0) = S(0);
  result.push_back(TropPoint<S>::from_raw(top));
  return result;
}

/// tconv of a finite generator list. The vertex set is computed on demand by
/// `vertex_set` (membership.hpp) and shared between copies.
template <class S = Rat>
class Polytope {
 public:
  explicit Polytope(std::vector<TropPoint<S>> generators)
      : generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    if (generators_.empty()) throw PreconditionError("a polytope needs at least one generator");
    for (const auto& g : generators_) detail::require_same_dim(generators_.front(), g, "Polytope");
  }

  Eigen::Index dim() const { return generators_.front().dim(); }
  std::span<const TropPoint<S>> generators() const { return generators_; }

  /// Computes the vertex list once with `compute` and returns the cached copy.
  template <class F>
  const std::vector<TropPoint<S>>& cached_vertices(F&& compute) const {
    std::call_once(cache_->once, [&] { cache_->vertices = compute(generators()); });
    return cache_->vertices;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<TropPoint<S>> vertices;
  };

  std::vector<TropPoint<S>> generators_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace tropical
