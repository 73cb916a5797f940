#include "tropical/hull2d.hpp"

#include <algorithm>
#include <cmath>

namespace tropical {

namespace {

using P = AffinePoint2<double>;

/// Distributes ids into n buckets over the range of `key`, then sorts each
/// bucket by `less`; `key` must be the leading component of `less`.
template <class Key>
void bucket_sort(const std::vector<P>& pts, std::vector<std::size_t>& ids, Key key,
                 bool (*less)(const P&, const P&), HullStats& stats) {
  const std::size_t n = ids.size();
  double lo = key(pts[ids[0]]), hi = lo;
  for (std::size_t i : ids) {
    lo = std::min(lo, key(pts[i]));
    hi = std::max(hi, key(pts[i]));
  }
  if (!(hi > lo)) {
    std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
      ++stats.comparisons;
      return less(pts[a], pts[b]);
    });
    return;
  }
  const double scale = static_cast<double>(n) / (hi - lo);
  std::vector<std::size_t> count(n + 1, 0);
  std::vector<std::size_t> slot(n);
  for (std::size_t j = 0; j < n; ++j) {
    slot[j] = std::min(n - 1, static_cast<std::size_t>((key(pts[ids[j]]) - lo) * scale));
    ++count[slot[j] + 1];
  }
  for (std::size_t b = 0; b < n; ++b) count[b + 1] += count[b];
  std::vector<std::size_t> out(n);
  std::vector<std::size_t> fill(count.begin(), count.end() - 1);
  for (std::size_t j = 0; j < n; ++j) out[fill[slot[j]]++] = ids[j];
  for (std::size_t b = 0; b < n; ++b) {
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(count[b]),
              out.begin() + static_cast<std::ptrdiff_t>(count[b + 1]), [&](std::size_t a, std::size_t c) {
                ++stats.comparisons;
                return less(pts[a], pts[c]);
              });
  }
  ids = std::move(out);
}

}  // namespace

HullResult<double> hull_triple_sort_bucketed(std::span<const AffinePoint2<double>> points, HullStats* stats) {
  detail::require_nonempty<double>(points.size(), "hull_triple_sort_bucketed");
  HullStats local;
  HullStats& st = stats ? *stats : local;
  const std::vector<P> pts(points.begin(), points.end());
  for (const auto& p : pts) {
    if (!std::isfinite(p.x()) || !std::isfinite(p.y())) {
      throw PreconditionError("hull_triple_sort_bucketed: non-finite coordinate");
    }
  }

  // Deduplicate through the x-ordered bucket sort, first occurrence kept.
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  bucket_sort(
      pts, order, [](const P& p) { return p.x(); },
      [](const P& a, const P& b) { return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y()); }, st);
  std::vector<std::size_t> ids;
  ids.reserve(order.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t first = order[i], j = i + 1;
    while (j < order.size() && pts[order[j]] == pts[order[i]]) first = std::min(first, order[j++]);
    ids.push_back(first);
    i = j;
  }

  auto sorter = [&](std::vector<std::size_t>& list, bool (*less)(const P&, const P&)) {
    using O = detail::TripleOrders<double>;
    if (less == &O::by_y) {
      bucket_sort(pts, list, [](const P& p) { return p.y(); }, less, st);
    } else if (less == &O::by_x) {
      bucket_sort(pts, list, [](const P& p) { return p.x(); }, less, st);
    } else {
      bucket_sort(pts, list, [](const P& p) { return p.y() - p.x(); }, less, st);
    }
  };
  return detail::make_result(points, detail::triple_scan(pts, std::move(ids), st, sorter));
}

}  // namespace tropical
