#pragma once

// Tropical determinant (the min-plus permanent), tropical singularity, the
// tropical sign and the orientation predicates tau and its closure.

#include "tropical/core.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tropical {

template <class S>
using TropMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

/// Which permutation parities attain the tropical determinant.
struct ParitySet {
  bool even = false;
  bool odd = false;

  void add(int sign) { (sign > 0 ? even : odd) = true; }
  bool both() const { return even && odd; }
  friend bool operator==(const ParitySet&, const ParitySet&) = default;
};

template <class S>
struct TdetResult {
  S value;
  ParitySet optimal_parities;
  std::vector<int> witness;  ///< one optimal permutation: row i -> column witness[i]
  bool singular = false;

  /// tsgn: 0 when singular, otherwise the sign of the unique optimal permutation.
  int sign() const;
};

/// Matrices with at most this many rows are solved by permutation enumeration.
/// Reads TROPICAL_ENUM_LIMIT once; defaults to 8.
int default_enumeration_limit();

struct TdetOptions {
  int enumeration_limit = default_enumeration_limit();
};

/// +1 for even, -1 for odd, via cycle decomposition.
int permutation_sign(std::span<const int> perm);

template <class S>
int TdetResult<S>::sign() const {
  return singular ? 0 : permutation_sign(witness);
}

namespace detail {

template <class Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError(std::string(what) + ": expected a nonempty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

/// Exhaustive scan over Sym(n).
template <class Derived>
TdetResult<typename Derived::Scalar> enumerate_assignments(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const int n = static_cast<int>(m.rows());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);

  TdetResult<S> result;
  std::size_t optimal_count = 0;
  bool first = true;
  do {
    S sum = m(0, perm[0]);
    for (int i = 1; i < n; ++i) sum += m(i, perm[static_cast<std::size_t>(i)]);
    if (first || sum < result.value) {
      first = false;
      result.value = std::move(sum);
      result.witness = perm;
      result.optimal_parities = {};
      result.optimal_parities.add(permutation_sign(perm));
      optimal_count = 1;
    } else if (sum == result.value) {
      ++optimal_count;
      result.optimal_parities.add(permutation_sign(perm));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  result.singular = optimal_count > 1;
  return result;
}

template <class S>
struct Assignment {
  S value;
  std::vector<int> row_to_col;
  std::vector<S> row_potential;  ///< u
  std::vector<S> col_potential;  ///< v; a(i,j) - u_i - v_j >= 0 on allowed edges
};

/// Minimum-cost perfect matching (Hungarian method with potentials), exact in
/// any ordered field. Edges with forbidden(i, j) set are unusable; returns
/// nullopt when no perfect matching avoids them.
template <class Derived>
std::optional<Assignment<typename Derived::Scalar>> solve_assignment(
    const Eigen::MatrixBase<Derived>& a, const std::vector<char>& forbidden = {}) {
  using S = typename Derived::Scalar;
  const int n = static_cast<int>(a.rows());
  auto allowed = [&](int i, int j) {
    return forbidden.empty() || !forbidden[static_cast<std::size_t>(i * n + j)];
  };

  // 1-based rows/columns; column 0 is the virtual root.
  std::vector<S> u(static_cast<std::size_t>(n + 1), S(0)), v(static_cast<std::size_t>(n + 1), S(0));
  std::vector<int> match(static_cast<std::size_t>(n + 1), 0), way(static_cast<std::size_t>(n + 1), 0);
  for (int row = 1; row <= n; ++row) {
    match[0] = row;
    int j0 = 0;
    std::vector<std::optional<S>> minv(static_cast<std::size_t>(n + 1));
    std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
    do {
      used[static_cast<std::size_t>(j0)] = 1;
      const int i0 = match[static_cast<std::size_t>(j0)];
      std::optional<S> delta;
      int j1 = -1;
      for (int j = 1; j <= n; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        if (used[ju]) continue;
        if (allowed(i0 - 1, j - 1)) {
          S cur = a(i0 - 1, j - 1) - u[static_cast<std::size_t>(i0)] - v[ju];
          if (!minv[ju] || cur < *minv[ju]) {
            minv[ju] = std::move(cur);
            way[ju] = j0;
          }
        }
        if (minv[ju] && (!delta || *minv[ju] < *delta)) {
          delta = minv[ju];
          j1 = j;
        }
      }
      if (!delta) return std::nullopt;
      for (int j = 0; j <= n; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        if (used[ju]) {
          u[static_cast<std::size_t>(match[ju])] += *delta;
          v[ju] -= *delta;
        } else if (minv[ju]) {
          *minv[ju] -= *delta;
        }
      }
      j0 = j1;
    } while (match[static_cast<std::size_t>(j0)] != 0);
    do {
      const int j1 = way[static_cast<std::size_t>(j0)];
      match[static_cast<std::size_t>(j0)] = match[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment<S> result;
  result.row_to_col.assign(static_cast<std::size_t>(n), -1);
  for (int j = 1; j <= n; ++j) {
    result.row_to_col[static_cast<std::size_t>(match[static_cast<std::size_t>(j)] - 1)] = j - 1;
  }
  result.value = S(0);
  for (int i = 0; i < n; ++i) result.value += a(i, result.row_to_col[static_cast<std::size_t>(i)]);
  result.row_potential.assign(u.begin() + 1, u.end());
  result.col_potential.assign(v.begin() + 1, v.end());
  return result;
}

/// Singular iff forbidding some edge of the optimal matching still reaches
/// the optimum.
template <class Derived>
bool has_second_optimum(const Eigen::MatrixBase<Derived>& a,
                        const Assignment<typename Derived::Scalar>& optimum) {
  const int n = static_cast<int>(a.rows());
  std::vector<char> forbidden(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) {
    const auto edge = static_cast<std::size_t>(i * n + optimum.row_to_col[static_cast<std::size_t>(i)]);
    forbidden[edge] = 1;
    const auto other = solve_assignment(a, forbidden);
    forbidden[edge] = 0;
    if (other && other->value == optimum.value) return true;
  }
  return false;
}

/// Bipartite perfect-matching test restricted to `edges`, with rows in
/// `rows` and columns not yet taken.
inline bool can_complete(const std::vector<std::vector<int>>& edges, int first_row,
                         const std::vector<char>& column_taken) {
  const int n = static_cast<int>(edges.size());
  std::vector<int> col_owner(static_cast<std::size_t>(n), -1);
  std::vector<char> seen;
  auto augment = [&](auto&& self, int row) -> bool {
    for (int col : edges[static_cast<std::size_t>(row)]) {
      const auto c = static_cast<std::size_t>(col);
      if (column_taken[c] || seen[c]) continue;
      seen[c] = 1;
      if (col_owner[c] < 0 || self(self, col_owner[c])) {
        col_owner[c] = row;
        return true;
      }
    }
    return false;
  };
  for (int row = first_row; row < n; ++row) {
    seen.assign(static_cast<std::size_t>(n), 0);
    if (!augment(augment, row)) return false;
  }
  return true;
}

/// Parities of all optimal permutations, i.e. of all perfect matchings in the
/// equality subgraph of an optimal dual. Stops once both parities are seen.
template <class Derived>
ParitySet optimal_parities_from_duals(const Eigen::MatrixBase<Derived>& a,
                                      const Assignment<typename Derived::Scalar>& optimum) {
  const int n = static_cast<int>(a.rows());
  std::vector<std::vector<int>> tight(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a(i, j) - optimum.row_potential[static_cast<std::size_t>(i)] -
              optimum.col_potential[static_cast<std::size_t>(j)] ==
          0) {
        tight[static_cast<std::size_t>(i)].push_back(j);
      }
    }
  }

  ParitySet parities;
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  std::vector<char> taken(static_cast<std::size_t>(n), 0);
  auto search = [&](auto&& self, int row) -> void {
    if (parities.both()) return;
    if (row == n) {
      parities.add(permutation_sign(perm));
      return;
    }
    for (int col : tight[static_cast<std::size_t>(row)]) {
      const auto c = static_cast<std::size_t>(col);
      if (taken[c]) continue;
      taken[c] = 1;
      perm[static_cast<std::size_t>(row)] = col;
      if (can_complete(tight, row + 1, taken)) self(self, row + 1);
      taken[c] = 0;
      if (parities.both()) return;
    }
  };
  search(search, 0);
  return parities;
}

}  // namespace detail

/// Value, singularity, witness and optimal parities in one pass.
template <class Derived>
TdetResult<typename Derived::Scalar> analyze_tdet(const Eigen::MatrixBase<Derived>& m,
                                                  const TdetOptions& options = {}) {
  detail::require_square(m, "tdet");
  if (m.rows() <= options.enumeration_limit) return detail::enumerate_assignments(m);

  using S = typename Derived::Scalar;
  const auto optimum = detail::solve_assignment(m);
  TdetResult<S> result;
  result.value = optimum->value;
  result.witness = optimum->row_to_col;
  result.singular = detail::has_second_optimum(m, *optimum);
  if (result.singular) {
    result.optimal_parities = detail::optimal_parities_from_duals(m, *optimum);
  } else {
    result.optimal_parities.add(permutation_sign(result.witness));
  }
  return result;
}

template <class Derived>
typename Derived::Scalar tdet(const Eigen::MatrixBase<Derived>& m, const TdetOptions& options = {}) {
  detail::require_square(m, "tdet");
  if (m.rows() <= options.enumeration_limit) return detail::enumerate_assignments(m).value;
  return detail::solve_assignment(m)->value;
}

template <class Derived>
bool is_singular(const Eigen::MatrixBase<Derived>& m, const TdetOptions& options = {}) {
  detail::require_square(m, "is_singular");
  if (m.rows() <= options.enumeration_limit) return detail::enumerate_assignments(m).singular;
  const auto optimum = detail::solve_assignment(m);
  return detail::has_second_optimum(m, *optimum);
}

template <class Derived>
int tsgn(const Eigen::MatrixBase<Derived>& m, const TdetOptions& options = {}) {
  detail::require_square(m, "tsgn");
  if (m.rows() <= options.enumeration_limit) return detail::enumerate_assignments(m).sign();
  const auto optimum = detail::solve_assignment(m);
  if (detail::has_second_optimum(m, *optimum)) return 0;
  return permutation_sign(optimum->row_to_col);
}

/// Sign of the closure of tau read off the parities of all optimal permutations:
/// +1 if all are even, -1 if all are odd, 0 otherwise.
inline int closure_sign(const ParitySet& parities) {
  if (parities.both()) return 0;
  return parities.even ? 1 : -1;
}

namespace detail {

template <class S>
TropMatrix<S> orientation_matrix(std::span<const TropPoint<S>> points, const TropPoint<S>& x) {
  const Eigen::Index d = x.dim();
  if (static_cast<Eigen::Index>(points.size()) != d) {
    throw DimensionError("tau in TP^" + std::to_string(d) + " needs " + std::to_string(d) +
                         " points, got " + std::to_string(points.size()));
  }
  TropMatrix<S> m(d + 1, d + 1);
  m.row(0) = x.coords().transpose();
  for (Eigen::Index i = 0; i < d; ++i) {
    require_same_dim(x, points[static_cast<std::size_t>(i)], "tau");
    m.row(i + 1) = points[static_cast<std::size_t>(i)].coords().transpose();
  }
  return m;
}

}  // namespace detail

/// tau_{p_1..p_d}(x) = tsgn(x, p_1, ..., p_d).
template <class S>
int tau(std::span<const TropPoint<S>> points, const TropPoint<S>& x, const TdetOptions& options = {}) {
  return tsgn(detail::orientation_matrix(points, x), options);
}

template <class S>
int tau_closure(std::span<const TropPoint<S>> points, const TropPoint<S>& x,
                const TdetOptions& options = {}) {
  return closure_sign(analyze_tdet(detail::orientation_matrix(points, x), options).optimal_parities);
}

/// Points u_1..u_d on the zero hyperplane with {x : tau_u(x) = +1} equal to the
/// union of the open sectors S_k, k in K, at the origin.
///
/// Built from the chain -e_i - e_{i+1} (i < 2l-1), -e_0 - e_{2l-1} followed by
/// -e_0 - e_i (i >= 2l); that gives +1 exactly on {0, 2, ..., 2l-2}. Larger K
/// use the complement with two points swapped. A coordinate permutation then
/// carries the canonical index set onto K, with one more swap when that
/// permutation is odd.
template <class S = Rat>
std::vector<TropPoint<S>> sector_indicator_points(int d, std::vector<int> sectors) {
  if (d < 1) throw DimensionError("sector_indicator_points needs d >= 1");
  std::sort(sectors.begin(), sectors.end());
  sectors.erase(std::unique(sectors.begin(), sectors.end()), sectors.end());
  const int size = static_cast<int>(sectors.size());
  if (size < 1 || size > d || sectors.front() < 0 || sectors.back() > d) {
    throw PreconditionError("sector set must be a nonempty proper subset of {0.." +
                            std::to_string(d) + "}");
  }

  const bool complement = size > (d + 1) / 2;
  const int chain = complement ? d + 1 - size : size;  // l

  auto pair_point = [d](int i, int j) {
    Vector<S> raw = Vector<S>::Zero(d + 1);
    raw(i) = S(-1);
    raw(j) = S(-1);
    return raw;
  };
  std::vector<Vector<S>> raw_points;
  const int last = 2 * chain - 1;
  for (int i = 1; i < last; ++i) raw_points.push_back(pair_point(i, i + 1));
  raw_points.push_back(pair_point(0, last));
  for (int i = last + 1; i <= d; ++i) raw_points.push_back(pair_point(0, i));

  std::vector<char> canonical(static_cast<std::size_t>(d + 1), 0);
  for (int i = 0; i < chain; ++i) canonical[static_cast<std::size_t>(2 * i)] = 1;
  if (complement) {
    for (auto& c : canonical) c = !c;
  }

  // Coordinate permutation: i-th canonical index -> i-th requested index, and
  // likewise for the complements.
  std::vector<char> requested(static_cast<std::size_t>(d + 1), 0);
  for (int k : sectors) requested[static_cast<std::size_t>(k)] = 1;
  std::vector<int> target(static_cast<std::size_t>(d + 1));
  for (const char flag : {char(1), char(0)}) {
    std::vector<int> from, to;
    for (int i = 0; i <= d; ++i) {
      if (canonical[static_cast<std::size_t>(i)] == flag) from.push_back(i);
      if (requested[static_cast<std::size_t>(i)] == flag) to.push_back(i);
    }
    for (std::size_t i = 0; i < from.size(); ++i) target[static_cast<std::size_t>(from[i])] = to[i];
  }

  bool swap_rows = complement;
  if (permutation_sign(target) < 0) swap_rows = !swap_rows;
  if (swap_rows && d < 2) {
    throw PreconditionError("in TP^1 only K = {0} is realizable by tau");
  }

  std::vector<TropPoint<S>> result;
  for (const auto& raw : raw_points) {
    Vector<S> moved(d + 1);
    for (int i = 0; i <= d; ++i) moved(target[static_cast<std::size_t>(i)]) = raw(i);
    result.push_back(TropPoint<S>::from_raw(moved));
  }
  if (swap_rows) std::swap(result[0], result[1]);
  return result;
}

}  // namespace tropical
