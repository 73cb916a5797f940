#pragma once

// Point-in-polytope certificates, vertex sets and separating halfspaces in TP^d.
//
// x lies in tconv(G) iff every closed sector x + S_k contains a generator; the
// residuated coefficients lambda_i = max_k (x_k - g_ik) then reproduce x.

#include "tropical/core.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tropical {

template <class S = Rat>
struct MembershipCertificate {
  bool member = false;
  /// lambda_i, one per generator; populated only for members.
  std::vector<S> coefficients;
  /// witnesses[k]: index of the first generator in x + closed S_k, if any.
  std::vector<std::optional<std::size_t>> witnesses;
  /// Smallest k whose closed sector at x holds no generator; non-members only.
  std::optional<int> missing_sector;
};

namespace detail {

template <class S>
void require_generators(std::span<const TropPoint<S>> generators, const TropPoint<S>& x,
                        const char* what) {
  if (generators.empty()) throw PreconditionError(std::string(what) + ": no generators");
  for (const auto& g : generators) require_same_dim(g, x, what);
}

/// Componentwise min_i (lambda_i + g_i).
template <class S>
Vector<S> combine(std::span<const TropPoint<S>> generators, const std::vector<S>& lambda) {
  Vector<S> result = (generators.front().coords().array() + lambda.front()).matrix();
  for (std::size_t i = 1; i < generators.size(); ++i) {
    for (Eigen::Index j = 0; j < result.size(); ++j) {
      result(j) = trop_add(result(j), S(lambda[i] + generators[i][j]));
    }
  }
  return result;
}

}  // namespace detail

template <class S>
MembershipCertificate<S> contains(std::span<const TropPoint<S>> generators, const TropPoint<S>& x) {
  detail::require_generators(generators, x, "contains");
  const Eigen::Index size = x.size();

  MembershipCertificate<S> cert;
  cert.witnesses.assign(static_cast<std::size_t>(size), std::nullopt);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (int k : detail::argmin_indices(generators[i], x)) {
      auto& w = cert.witnesses[static_cast<std::size_t>(k)];
      if (!w) w = i;
    }
  }
  for (Eigen::Index k = 0; k < size; ++k) {
    if (!cert.witnesses[static_cast<std::size_t>(k)]) {
      cert.missing_sector = static_cast<int>(k);
      return cert;
    }
  }

  cert.coefficients.reserve(generators.size());
  for (const auto& g : generators) cert.coefficients.push_back((x.coords() - g.coords()).maxCoeff());
  if (detail::combine(generators, cert.coefficients) != x.coords()) {
    throw Error("internal: membership combination does not reproduce the point");
  }
  cert.member = true;
  return cert;
}

template <class S>
MembershipCertificate<S> contains(const Polytope<S>& p, const TropPoint<S>& x) {
  return contains(p.generators(), x);
}

/// Generators not in the hull of the others, deduplicated, in first-occurrence order.
template <class S>
std::vector<TropPoint<S>> vertex_set(std::span<const TropPoint<S>> generators) {
  std::vector<TropPoint<S>> distinct;
  for (const auto& g : generators) {
    if (std::find(distinct.begin(), distinct.end(), g) == distinct.end()) distinct.push_back(g);
  }
  if (distinct.size() <= 1) return distinct;

  std::vector<TropPoint<S>> result;
  std::vector<TropPoint<S>> others;
  others.reserve(distinct.size() - 1);
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < distinct.size(); ++j) {
      if (j != i) others.push_back(distinct[j]);
    }
    if (!contains(std::span<const TropPoint<S>>(others), distinct[i]).member) {
      result.push_back(distinct[i]);
    }
  }
  return result;
}

template <class S>
const std::vector<TropPoint<S>>& vertex_set(const Polytope<S>& p) {
  return p.cached_vertices([](std::span<const TropPoint<S>> g) { return vertex_set(g); });
}

/// A closed halfspace holding every generator but not x.
///
/// With k the missing sector, g lies in x + eps e_k + closed S_k iff
/// g_k - x_k - eps <= min_{j != k} (g_j - x_j); each generator therefore stays
/// outside for eps below its slack (g_k - x_k) - min_{j != k}(g_j - x_j) > 0.
/// The apex sits at half the smallest slack.
template <class S>
Halfspace<S> separate(std::span<const TropPoint<S>> generators, const TropPoint<S>& x) {
  const auto cert = contains(generators, x);
  if (cert.member) throw PreconditionError("separate: the point lies in the polytope");
  const int k = *cert.missing_sector;
  const Eigen::Index size = x.size();

  std::optional<S> bound;
  for (const auto& g : generators) {
    std::optional<S> rest;
    for (Eigen::Index j = 0; j < size; ++j) {
      if (j == k) continue;
      S diff = g[j] - x[j];
      if (!rest || diff < *rest) rest = std::move(diff);
    }
    S slack = (g[k] - x[k]) - *rest;
    if (!bound || slack < *bound) bound = std::move(slack);
  }
  const S eps = bound ? S(*bound / 2) : S(1);

  Vector<S> apex = x.coords();
  apex(k) += eps;
  std::vector<int> indices;
  for (int j = 0; j < size; ++j) {
    if (j != k) indices.push_back(j);
  }
  return Halfspace<S>(TropPoint<S>::from_raw(apex), std::move(indices));
}

template <class S>
Halfspace<S> separate(const Polytope<S>& p, const TropPoint<S>& x) {
  return separate(p.generators(), x);
}

}  // namespace tropical
