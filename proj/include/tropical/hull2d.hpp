#pragma once

// Tropical polygons in TP^2, worked in the affine chart (xi_1, xi_2) with
// xi_0 = 0: extreme markers, three hull algorithms, pseudovertices, facets and
// the minimal closed halfspaces.
//
// Chart geometry used throughout, with skew(p) = y - x:
//   closed S_0 at a = {x >= a.x, y >= a.y}
//   closed S_1 at a = {x <= a.x, skew >= skew(a)}
//   closed S_2 at a = {y <= a.y, skew <= skew(a)}

#include "tropical/core.hpp"
#include "tropical/membership.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tropical {

template <class S = Rat>
using AffinePoint2 = Eigen::Matrix<S, 2, 1>;

template <class S = Rat>
struct HullResult {
  /// Counter-clockwise, starting at lr.
  std::vector<AffinePoint2<S>> vertices;
  /// First input position of each vertex.
  std::vector<std::size_t> vertex_indices;
};

struct HullStats {
  std::uint64_t comparisons = 0;
  std::uint64_t tau_evaluations = 0;
  std::uint64_t rounds = 0;
};

template <class S = Rat>
struct ExtremeMarkers {
  AffinePoint2<S> lr, rh, hl, lh;
};

template <class S = Rat>
struct FaceLattice {
  /// Faces as sorted sets of positions into the vertex cycle, by rank:
  /// the empty face, vertices, edges, then P itself.
  std::vector<std::vector<std::size_t>> faces;
};

template <class S = Rat>
struct Facets2 {
  std::vector<std::pair<AffinePoint2<S>, AffinePoint2<S>>> facets;
  FaceLattice<S> lattice;
};

template <class S = Rat>
struct MinimalHalfspaceSet {
  std::vector<Halfspace<S>> halfspaces;
  bool full = true;
  std::vector<std::string> warnings;
};

// ---------------------------------------------------------------------------
// Conversions

template <class S>
TropPoint<S> to_projective(const AffinePoint2<S>& p) {
  return from_affine(p);
}

template <class S>
AffinePoint2<S> to_chart2(const TropPoint<S>& p) {
  if (p.dim() != 2) {
    throw DimensionError("2D operation needs points of TP^2, got TP^" + std::to_string(p.dim()));
  }
  return AffinePoint2<S>(p[1] - p[0], p[2] - p[0]);
}

template <class S>
std::vector<AffinePoint2<S>> to_chart2(std::span<const TropPoint<S>> points) {
  std::vector<AffinePoint2<S>> result;
  result.reserve(points.size());
  for (const auto& p : points) result.push_back(to_chart2(p));
  return result;
}

template <class S>
std::vector<TropPoint<S>> to_projective(std::span<const AffinePoint2<S>> points) {
  std::vector<TropPoint<S>> result;
  result.reserve(points.size());
  for (const auto& p : points) result.push_back(to_projective(p));
  return result;
}

// ---------------------------------------------------------------------------
// Predicates

template <class S>
S skew(const AffinePoint2<S>& p) {
  return p.y() - p.x();
}

/// Tropical norm of p - v in the chart: spread of (0, dx, dy).
template <class S>
S chart_distance(const AffinePoint2<S>& p, const AffinePoint2<S>& v) {
  const S dx = p.x() - v.x();
  const S dy = p.y() - v.y();
  const S zero(0);
  return std::max({zero, dx, dy}) - std::min({zero, dx, dy});
}

/// Closure of tau_{v,w}(p) in the chart, from the six terms of the 3x3
/// assignment on rows p, v, w.
template <class S>
int tau_closure2(const AffinePoint2<S>& v, const AffinePoint2<S>& w, const AffinePoint2<S>& p) {
  const S even[3] = {v.x() + w.y(), p.x() + v.y(), p.y() + w.x()};
  const S odd[3] = {v.y() + w.x(), p.x() + w.y(), p.y() + v.x()};
  const S even_min = std::min({even[0], even[1], even[2]});
  const S odd_min = std::min({odd[0], odd[1], odd[2]});
  if (even_min < odd_min) return 1;
  if (odd_min < even_min) return -1;
  return 0;
}

namespace detail {

/// Gift-wrapping order seen from v: does x replace the current candidate y?
template <class S>
bool wraps_past(const AffinePoint2<S>& v, const AffinePoint2<S>& x, const AffinePoint2<S>& y,
                HullStats& stats) {
  ++stats.tau_evaluations;
  const int t = tau_closure2(v, y, x);
  if (t != 0) return t < 0;
  return chart_distance(x, v) > chart_distance(y, v);
}

template <class S>
bool xy_less(const AffinePoint2<S>& a, const AffinePoint2<S>& b) {
  return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
}

/// Positions of the distinct points, first occurrence kept, in input order.
template <class S>
std::vector<std::size_t> distinct_positions(std::span<const AffinePoint2<S>> points, HullStats& stats) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    ++stats.comparisons;
    return xy_less(points[a], points[b]);
  });
  std::vector<std::size_t> keep;
  keep.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || points[order[i]] != points[order[i - 1]]) keep.push_back(order[i]);
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

/// The three orders of the triple sort, each a strict weak order on points.
template <class S>
struct TripleOrders {
  static bool by_y(const AffinePoint2<S>& a, const AffinePoint2<S>& b) {  // y asc, x desc
    return a.y() < b.y() || (a.y() == b.y() && b.x() < a.x());
  }
  static bool by_x(const AffinePoint2<S>& a, const AffinePoint2<S>& b) {  // x asc, y asc
    return xy_less(a, b);
  }
  static bool by_skew(const AffinePoint2<S>& a, const AffinePoint2<S>& b) {  // skew asc, x desc
    const S sa = skew(a), sb = skew(b);
    return sa < sb || (sa == sb && b.x() < a.x());
  }
};

/// Three staircase scans over the sorted lists; `sorter(ids, less)` sorts
/// a list of point positions. Input positions must be distinct points.
template <class S, class Sorter>
std::vector<std::size_t> triple_scan(const std::vector<AffinePoint2<S>>& pts, std::vector<std::size_t> ids,
                                     HullStats& stats, Sorter&& sorter) {
  if (ids.size() <= 1) return ids;
  using O = TripleOrders<S>;
  std::vector<std::size_t> by_y = ids, by_x = ids, by_skew = std::move(ids);
  sorter(by_y, &O::by_y);
  sorter(by_x, &O::by_x);
  sorter(by_skew, &O::by_skew);

  std::vector<std::size_t> cycle;
  auto push = [&](std::size_t i) {
    if (cycle.empty() || cycle.back() != i) cycle.push_back(i);
  };
  // lr up to rh: lowest first, keep each point of smaller skew than all before.
  std::optional<S> bound;
  for (std::size_t i : by_y) {
    ++stats.comparisons;
    const S s = skew(pts[i]);
    if (!bound || s < *bound) {
      push(i);
      bound = s;
    }
  }
  // rh up to hl: rightmost first, keep each point higher than all before.
  bound.reset();
  for (auto it = by_x.rbegin(); it != by_x.rend(); ++it) {
    ++stats.comparisons;
    if (!bound || *bound < pts[*it].y()) {
      push(*it);
      bound = pts[*it].y();
    }
  }
  // hl back to lr: largest skew first, keep each point further left.
  bound.reset();
  for (auto it = by_skew.rbegin(); it != by_skew.rend(); ++it) {
    ++stats.comparisons;
    if (!bound || pts[*it].x() < *bound) {
      push(*it);
      bound = pts[*it].x();
    }
  }
  if (cycle.size() > 1 && cycle.back() == cycle.front()) cycle.pop_back();
  return cycle;
}

template <class S>
auto counting_sorter(const std::vector<AffinePoint2<S>>& pts, HullStats& stats) {
  return [&pts, &stats](std::vector<std::size_t>& ids,
                        bool (*less)(const AffinePoint2<S>&, const AffinePoint2<S>&)) {
    std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
      ++stats.comparisons;
      return less(pts[a], pts[b]);
    });
  };
}

template <class S>
HullResult<S> make_result(std::span<const AffinePoint2<S>> input, const std::vector<std::size_t>& cycle) {
  HullResult<S> result;
  result.vertices.reserve(cycle.size());
  result.vertex_indices = cycle;
  for (std::size_t i : cycle) result.vertices.push_back(input[i]);
  return result;
}

template <class S>
std::vector<AffinePoint2<S>> gather(std::span<const AffinePoint2<S>> input,
                                    const std::vector<std::size_t>& ids) {
  std::vector<AffinePoint2<S>> out;
  out.reserve(ids.size());
  for (std::size_t i : ids) out.push_back(input[i]);
  return out;
}

template <class S>
void require_nonempty(std::size_t n, const char* what) {
  if (n == 0) throw PreconditionError(std::string(what) + ": empty point set");
}

/// Position in `polygon` (a vertex cycle as point positions) of the best
/// wrap candidate from v. v must lie outside the polygon.
template <class S>
std::size_t tangent_index(const std::vector<AffinePoint2<S>>& pts, const std::vector<std::size_t>& polygon,
                          const AffinePoint2<S>& v, HullStats& stats) {
  const std::size_t m = polygon.size();
  auto at = [&](std::size_t i) -> const AffinePoint2<S>& { return pts[polygon[i % m]]; };
  auto better = [&](std::size_t a, std::size_t b) { return wraps_past(v, at(a), at(b), stats); };

  if (m <= 3) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < m; ++i) {
      if (better(i, best)) best = i;
    }
    return best;
  }
  // The rising flags up(i) = better(i + 1, i) form one cyclic run of true
  // followed by one run of false; the maximum ends the true run.
  auto up = [&](std::size_t i) { return better(i + 1, i); };
  if (up(0)) {
    std::size_t lo = 0, hi = m;
    while (hi - lo > 1) {
      const std::size_t c = lo + (hi - lo) / 2;
      if (up(c) && better(c, 0)) {
        lo = c;
      } else {
        hi = c;
      }
    }
    return lo + 1;
  }
  if (up(m - 1)) return 0;
  std::size_t lo = 0, hi = m - 1;
  while (hi - lo > 1) {
    const std::size_t c = lo + (hi - lo) / 2;
    if (!up(c) && better(c, 0)) {
      hi = c;
    } else {
      lo = c;
    }
  }
  return hi;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Extreme markers and hulls

template <class S>
ExtremeMarkers<S> extreme_markers(std::span<const AffinePoint2<S>> points) {
  detail::require_nonempty<S>(points.size(), "extreme_markers");
  ExtremeMarkers<S> m{points[0], points[0], points[0], points[0]};
  for (const auto& p : points) {
    if (p.y() < m.lr.y() || (p.y() == m.lr.y() && m.lr.x() < p.x())) m.lr = p;
    if (m.rh.x() < p.x() || (p.x() == m.rh.x() && m.rh.y() < p.y())) m.rh = p;
    if (m.hl.y() < p.y() || (p.y() == m.hl.y() && m.hl.x() < p.x())) m.hl = p;
    if (p.x() < m.lh.x() || (p.x() == m.lh.x() && m.lh.y() < p.y())) m.lh = p;
  }
  return m;
}

/// Triple sorting, O(n log n) comparisons.
template <class S>
HullResult<S> hull_triple_sort(std::span<const AffinePoint2<S>> points, HullStats* stats = nullptr) {
  detail::require_nonempty<S>(points.size(), "hull_triple_sort");
  HullStats local;
  HullStats& st = stats ? *stats : local;
  const std::vector<AffinePoint2<S>> pts(points.begin(), points.end());
  auto ids = detail::distinct_positions(points, st);
  return detail::make_result(points, detail::triple_scan(pts, std::move(ids), st, detail::counting_sorter(pts, st)));
}

/// Triple sorting with bucket sorts: expected O(n) on uniformly spread input.
/// Floating point only; rationals have no uniform bucketing.
HullResult<double> hull_triple_sort_bucketed(std::span<const AffinePoint2<double>> points,
                                             HullStats* stats = nullptr);

/// Gift wrapping with the closure of tau, O(nh).
template <class S>
HullResult<S> hull_jarvis(std::span<const AffinePoint2<S>> points, HullStats* stats = nullptr) {
  detail::require_nonempty<S>(points.size(), "hull_jarvis");
  HullStats local;
  HullStats& st = stats ? *stats : local;
  const auto ids = detail::distinct_positions(points, st);
  const auto pts = detail::gather(points, ids);
  const std::size_t n = pts.size();

  std::size_t start = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (detail::TripleOrders<S>::by_y(pts[i], pts[start])) start = i;
  }
  std::vector<std::size_t> cycle{ids[start]};
  if (n == 1) return detail::make_result(points, cycle);

  std::size_t v = start;
  for (std::size_t step = 0; step <= n; ++step) {
    std::size_t w = v == 0 ? 1 : 0;
    for (std::size_t p = w + 1; p < n; ++p) {
      if (p != v && detail::wraps_past(pts[v], pts[p], pts[w], st)) w = p;
    }
    if (w == start) return detail::make_result(points, cycle);
    cycle.push_back(ids[w]);
    v = w;
  }
  throw Error("internal: gift wrapping did not close");
}

/// Chan-style combination: group hulls by triple sorting, wrapping steps via
/// binary-search tangents, group size guessed as m = 2^(2^t). O(n log h).
template <class S>
HullResult<S> hull_chan(std::span<const AffinePoint2<S>> points, HullStats* stats = nullptr) {
  detail::require_nonempty<S>(points.size(), "hull_chan");
  HullStats local;
  HullStats& st = stats ? *stats : local;
  const auto ids = detail::distinct_positions(points, st);
  const auto pts = detail::gather(points, ids);
  const std::size_t n = pts.size();

  std::size_t start = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (detail::TripleOrders<S>::by_y(pts[i], pts[start])) start = i;
  }
  if (n == 1) return detail::make_result(points, std::vector<std::size_t>{ids[start]});

  auto sorter = detail::counting_sorter(pts, st);
  std::vector<std::size_t> group_of(n), position(n);
  for (unsigned t = 1;; ++t) {
    ++st.rounds;
    const std::size_t m = t >= 6 ? n : std::min<std::size_t>(n, std::size_t{1} << (1u << t));
    const std::size_t groups = (n + m - 1) / m;

    std::vector<std::vector<std::size_t>> hulls(groups);
    for (std::size_t g = 0; g < groups; ++g) {
      std::vector<std::size_t> members(std::min(m, n - m * g));
      std::iota(members.begin(), members.end(), m * g);
      hulls[g] = detail::triple_scan(pts, std::move(members), st, sorter);
      for (std::size_t k = 0; k < hulls[g].size(); ++k) {
        group_of[hulls[g][k]] = g;
        position[hulls[g][k]] = k;
      }
    }

    std::vector<std::size_t> cycle{start};
    std::size_t v = start;
    for (std::size_t step = 0; step < m; ++step) {
      const std::size_t own = group_of[v];
      std::optional<std::size_t> w;
      auto offer = [&](std::size_t c) {
        if (!w || detail::wraps_past(pts[v], pts[c], pts[*w], st)) w = c;
      };
      for (std::size_t g = 0; g < groups; ++g) {
        const auto& hull = hulls[g];
        if (g == own) {
          if (hull.size() > 1) offer(hull[(position[v] + 1) % hull.size()]);
        } else {
          offer(hull[detail::tangent_index(pts, hull, pts[v], st)]);
        }
      }
      if (*w == start) {
        std::vector<std::size_t> out;
        out.reserve(cycle.size());
        for (std::size_t i : cycle) out.push_back(ids[i]);
        return detail::make_result(points, out);
      }
      cycle.push_back(*w);
      v = *w;
    }
    if (m == n) throw Error("internal: wrapping did not close with a single group");
  }
}

/// The vertex of `polygon` that the wrapping step from v selects, in
/// O(log m) closure evaluations. Requires v outside tconv(polygon).
template <class S>
AffinePoint2<S> tangent_binary_search(const HullResult<S>& polygon, const AffinePoint2<S>& v,
                                      HullStats* stats = nullptr) {
  detail::require_nonempty<S>(polygon.vertices.size(), "tangent_binary_search");
  const auto projective = to_projective<S>(polygon.vertices);
  if (contains<S>(projective, to_projective(v)).member) {
    throw PreconditionError("tangent_binary_search: the query point lies in the polygon");
  }
  HullStats local;
  std::vector<std::size_t> cycle(polygon.vertices.size());
  std::iota(cycle.begin(), cycle.end(), std::size_t{0});
  return polygon.vertices[detail::tangent_index(polygon.vertices, cycle, v, stats ? *stats : local)];
}

// ---------------------------------------------------------------------------
// Boundary, pseudovertices, facets

/// Closed boundary polyline: the breakpoints of the tropical segments between
/// cyclically consecutive vertices, without repeating the start.
template <class S>
std::vector<AffinePoint2<S>> boundary_polyline(const HullResult<S>& hull) {
  std::vector<AffinePoint2<S>> line;
  const std::size_t h = hull.vertices.size();
  if (h == 1) return hull.vertices;
  const std::size_t edges = h == 2 ? 1 : h;
  for (std::size_t i = 0; i < edges; ++i) {
    const auto piece = segment_breakpoints(to_projective(hull.vertices[i]),
                                           to_projective(hull.vertices[(i + 1) % h]));
    for (const auto& p : piece) {
      auto q = to_chart2(p);
      if (line.empty() || line.back() != q) line.push_back(std::move(q));
    }
  }
  if (line.size() > 1 && line.back() == line.front()) line.pop_back();
  return line;
}

/// Vertices of the arrangement of horizontal, vertical and slope-one lines
/// through the hull vertices that lie on the boundary, in boundary order.
template <class S>
std::vector<AffinePoint2<S>> pseudovertices(const HullResult<S>& hull) {
  const std::size_t h = hull.vertices.size();
  detail::require_nonempty<S>(h, "pseudovertices");
  std::vector<S> xs, ys, zs;
  for (const auto& v : hull.vertices) {
    xs.push_back(v.x());
    ys.push_back(v.y());
    zs.push_back(skew(v));
  }
  for (auto* set : {&xs, &ys, &zs}) {
    std::sort(set->begin(), set->end());
    set->erase(std::unique(set->begin(), set->end()), set->end());
  }
  auto on = [](const std::vector<S>& set, const S& value) {
    return std::binary_search(set.begin(), set.end(), value);
  };
  auto families = [&](const AffinePoint2<S>& p) {
    return int(on(xs, p.x())) + int(on(ys, p.y())) + int(on(zs, skew(p)));
  };

  const auto line = boundary_polyline(hull);
  std::vector<AffinePoint2<S>> result;
  auto keep = [&](const AffinePoint2<S>& p) {
    if (families(p) >= 2 && std::find(result.begin(), result.end(), p) == result.end()) result.push_back(p);
  };
  if (line.size() == 1) {
    keep(line.front());
    return result;
  }
  const std::size_t edges = h == 2 ? line.size() - 1 : line.size();
  for (std::size_t e = 0; e < edges; ++e) {
    const AffinePoint2<S>& a = line[e];
    const AffinePoint2<S>& b = line[(e + 1) % line.size()];
    keep(a);
    // Crossings with every line, ordered by the edge parameter.
    std::vector<S> params;
    auto cross = [&](const std::vector<S>& values, auto&& f) {
      const S fa = f(a), fb = f(b);
      if (fa == fb) return;
      for (const S& c : values) {
        S t = (c - fa) / (fb - fa);
        if (S(0) < t && t < S(1)) params.push_back(std::move(t));
      }
    };
    cross(xs, [](const AffinePoint2<S>& p) { return p.x(); });
    cross(ys, [](const AffinePoint2<S>& p) { return p.y(); });
    cross(zs, [](const AffinePoint2<S>& p) { return skew(p); });
    std::sort(params.begin(), params.end());
    for (const S& t : params) keep(AffinePoint2<S>(a + (b - a) * t));
  }
  if (h == 2) keep(line.back());
  return result;
}

template <class S>
std::vector<AffinePoint2<S>> pseudovertices(std::span<const AffinePoint2<S>> points) {
  return pseudovertices(hull_triple_sort(points));
}

/// Facets of the tropical n-gon and its face lattice. A single point has no
/// facets; a segment has one.
template <class S>
Facets2<S> facets2d(const HullResult<S>& hull) {
  const std::size_t h = hull.vertices.size();
  detail::require_nonempty<S>(h, "facets2d");
  Facets2<S> result;
  auto& faces = result.lattice.faces;
  faces.push_back({});
  if (h == 1) {
    faces.push_back({0});
    return result;
  }
  for (std::size_t i = 0; i < h; ++i) faces.push_back({i});
  const std::size_t edges = h == 2 ? 1 : h;
  for (std::size_t i = 0; i < edges; ++i) {
    const std::size_t j = (i + 1) % h;
    result.facets.emplace_back(hull.vertices[i], hull.vertices[j]);
    if (h > 2) faces.push_back({std::min(i, j), std::max(i, j)});
  }
  std::vector<std::size_t> all(h);
  std::iota(all.begin(), all.end(), std::size_t{0});
  faces.push_back(std::move(all));
  return result;
}

template <class S>
Facets2<S> facets2d(std::span<const AffinePoint2<S>> points) {
  return facets2d(hull_triple_sort(points));
}

// ---------------------------------------------------------------------------
// Minimal halfspaces

namespace detail {

/// Rays spanning the closed sector k at the origin of the chart.
template <class S>
std::pair<AffinePoint2<S>, AffinePoint2<S>> sector_rays(int k) {
  const AffinePoint2<S> east(S(1), S(0)), north(S(0), S(1)), southwest(S(-1), S(-1));
  switch (k) {
    case 0: return {east, north};
    case 1: return {north, southwest};
    default: return {southwest, east};
  }
}

template <class S>
S cross2(const AffinePoint2<S>& a, const AffinePoint2<S>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

template <class S>
int sign_of(const S& value) {
  return S(0) < value ? 1 : (value < S(0) ? -1 : 0);
}

/// Is the closed sector apex + S_k inside the closed halfspace h?
template <class S>
bool sector_in_halfspace(const AffinePoint2<S>& apex, int k, const Halfspace<S>& h) {
  const AffinePoint2<S> a1 = to_chart2(h.apex());
  if (h.indices().size() == 1) {
    return h.indices().front() == k && sector_contains(Sector<S>(h.apex(), k), to_projective(apex));
  }
  // h is the closure of the complement of the open sector a1 + S_j.
  const int j = h.opposite().indices().front();
  if (j == k) return false;
  const auto [k1, k2] = sector_rays<S>(k);
  const auto [j1, j2] = sector_rays<S>(j);
  const AffinePoint2<S> shared = (k1 == j1 || k1 == j2) ? k1 : k2;
  const AffinePoint2<S> other = shared == k1 ? k2 : k1;
  const int side = sign_of(cross2(shared, AffinePoint2<S>(a1 - apex)));
  return !(side != 0 && side == sign_of(cross2(shared, other)));
}

}  // namespace detail

/// Exact inclusion of closed halfspaces in TP^2.
template <class S>
bool halfspace_subset(const Halfspace<S>& inner, const Halfspace<S>& outer) {
  if (inner.apex().dim() != 2 || outer.apex().dim() != 2) {
    throw DimensionError("halfspace_subset is implemented for TP^2");
  }
  const AffinePoint2<S> apex = to_chart2(inner.apex());
  return std::all_of(inner.indices().begin(), inner.indices().end(),
                     [&](int k) { return detail::sector_in_halfspace(apex, k, outer); });
}

/// Minimal closed halfspaces containing tconv(points), apexes at pseudovertices.
template <class S>
MinimalHalfspaceSet<S> minimal_halfspaces2d(const HullResult<S>& hull) {
  detail::require_nonempty<S>(hull.vertices.size(), "minimal_halfspaces2d");
  const auto vertices = to_projective<S>(hull.vertices);
  const auto apexes = pseudovertices(hull);
  static const std::vector<std::vector<int>> kSets = {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};

  MinimalHalfspaceSet<S> result;
  const auto line = boundary_polyline(hull);
  for (const auto& a : apexes) {
    for (int m = 0; m < 3 && result.full; ++m) {
      const Halfspace<S> single(to_projective(a), {m});
      const bool flat = std::all_of(line.begin(), line.end(), [&](const AffinePoint2<S>& p) {
        return halfspace_boundary_contains(single, to_projective(p));
      });
      if (flat) {
        result.full = false;
        result.warnings.push_back("polytope is not full: it lies in the boundary of a halfspace; "
                                  "minimal halfspaces may not be unique");
      }
    }
  }

  std::vector<Halfspace<S>> containing;
  for (const auto& a : apexes) {
    const TropPoint<S> apex = to_projective(a);
    for (const auto& k : kSets) {
      Halfspace<S> h(apex, k);
      if (std::all_of(vertices.begin(), vertices.end(), [&](const TropPoint<S>& v) {
            return halfspace_contains(h, v);
          })) {
        containing.push_back(std::move(h));
      }
    }
  }
  for (std::size_t i = 0; i < containing.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < containing.size() && minimal; ++j) {
      if (j != i && halfspace_subset(containing[j], containing[i])) minimal = false;
    }
    if (minimal) result.halfspaces.push_back(containing[i]);
  }
  return result;
}

template <class S>
MinimalHalfspaceSet<S> minimal_halfspaces2d(std::span<const AffinePoint2<S>> points) {
  return minimal_halfspaces2d(hull_triple_sort(points));
}

}  // namespace tropical
