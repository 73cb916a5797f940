#include "oracles.hpp"
#include "tropical/core.hpp"
#include "tropical/tropdet.hpp"
#include "tropical/io.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tropical;
using tropical::point;
using M = TropMatrix<Rat>;

namespace {

M matrix(std::initializer_list<std::initializer_list<int>> rows) {
  oracle::IntMatrix m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  return oracle::to_eigen<M>(m);
}

M negative_unit_rows(int d) { return M(-M::Identity(d + 1, d + 1)); }

const TdetOptions kAssignment{1};  // forces the assignment-solver path

std::vector<TropPoint<Rat>> pts(std::initializer_list<TropPoint<Rat>> p) { return p; }

}  // namespace

TEST(PermutationSign, MatchesInversionCount) {
  std::vector<int> perm{0, 1, 2, 3, 4, 5};
  do {
    EXPECT_EQ(permutation_sign(perm), oracle::inversion_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Tdet, Examples) {
  EXPECT_EQ(tdet(matrix({{0, 1}, {1, 0}})), 0);
  EXPECT_THROW(tdet(M(2, 3)), DimensionError);
  EXPECT_THROW(tsgn(M(0, 0)), DimensionError);
}

// The matrix of rows -e_0, ..., -e_d has -1 on the diagonal and 0 elsewhere;
// the identity is the unique optimum with value -(d + 1).
TEST(Tdet, NegativeUnitRows) {
  for (int d = 1; d <= 10; ++d) {
    for (const auto& opt : {TdetOptions{}, kAssignment}) {
      const auto r = analyze_tdet(negative_unit_rows(d), opt);
      EXPECT_EQ(r.value, -(d + 1));
      EXPECT_FALSE(r.singular);
      EXPECT_EQ(r.sign(), 1);
      EXPECT_EQ(tsgn(negative_unit_rows(d), opt), 1);
    }
  }
}

TEST(IsSingular, Examples) {
  EXPECT_TRUE(is_singular(matrix({{0, 0}, {0, 0}})));
  EXPECT_FALSE(is_singular(matrix({{0, 1}, {1, 0}})));
  EXPECT_TRUE(is_singular(matrix({{1, 2, 3}, {4, 0, 1}, {1, 2, 3}})));
}

TEST(Tsgn, Examples) {
  EXPECT_EQ(tsgn(matrix({{0, 1}, {1, 0}})), 1);
  EXPECT_EQ(tsgn(matrix({{1, 0}, {0, 1}})), -1);
  EXPECT_EQ(tsgn(matrix({{0, 0}, {0, 0}})), 0);
}

TEST(Tdet, FiveByFiveAgainstEnumeration) {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = oracle::random_int_matrix(rng, 5);
    EXPECT_EQ(tdet(oracle::to_eigen<M>(m)), oracle::all_permutations(m).value);
  }
}

TEST(Tdet, BothPathsAgreeWithEnumeration) {
  std::mt19937 rng(103);
  for (int n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 150; ++trial) {
      // Narrow entry ranges make ties and singular matrices common.
      const int range = trial % 3 == 0 ? 1 : 9;
      const auto m = oracle::random_int_matrix(rng, n, -range, range);
      const auto expected = oracle::all_permutations(m);
      for (const auto& opt : {TdetOptions{}, kAssignment}) {
        const auto r = analyze_tdet(oracle::to_eigen<M>(m), opt);
        ASSERT_EQ(r.value, expected.value);
        ASSERT_EQ(r.singular, expected.optimal_count > 1);
        ASSERT_EQ(r.sign(), expected.sign);
        ASSERT_EQ(r.optimal_parities.even, expected.even) << "n " << n << " trial " << trial;
        ASSERT_EQ(r.optimal_parities.odd, expected.odd);
        ASSERT_EQ(tdet(oracle::to_eigen<M>(m), opt), expected.value);
        ASSERT_EQ(is_singular(oracle::to_eigen<M>(m), opt), expected.optimal_count > 1);
        ASSERT_EQ(tsgn(oracle::to_eigen<M>(m), opt), expected.sign);
        // The witness is optimal.
        long long sum = 0;
        for (int i = 0; i < n; ++i) sum += m[i][r.witness[i]];
        ASSERT_EQ(sum, expected.value);
      }
    }
  }
}

TEST(Tdet, RationalEntries) {
  std::mt19937 rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 6;
    M m(n, n);
    oracle::IntMatrix scaled(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int num = static_cast<int>(rng() % 41) - 20;
        m(i, j) = Rat(num, 6);
        scaled[i][j] = num;
      }
    const auto expected = oracle::all_permutations(scaled);
    const auto r = analyze_tdet(m, kAssignment);
    EXPECT_EQ(r.value, Rat(expected.value, 6));
    EXPECT_EQ(r.sign(), expected.sign);
  }
}

TEST(Tdet, LargeMatricesUseTheAssignmentSolver) {
  std::mt19937 rng(109);
  for (int trial = 0; trial < 4; ++trial) {
    const int n = 9;
    const auto m = oracle::random_int_matrix(rng, n, trial % 2 ? -2 : -30, trial % 2 ? 2 : 30);
    const auto forced = analyze_tdet(oracle::to_eigen<M>(m), kAssignment);
    const auto enumerated = analyze_tdet(oracle::to_eigen<M>(m), TdetOptions{n});
    EXPECT_EQ(forced.value, enumerated.value);
    EXPECT_EQ(forced.singular, enumerated.singular);
    EXPECT_EQ(forced.optimal_parities, enumerated.optimal_parities);
  }
}

TEST(Tsgn, Algebra) {
  std::mt19937 rng(113);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 5;
    const M m = oracle::to_eigen<M>(oracle::random_int_matrix(rng, n));
    const int s = tsgn(m);
    const int i = static_cast<int>(rng() % n);
    const int j = (i + 1 + static_cast<int>(rng() % (n - 1))) % n;

    M dup = m;
    dup.row(j) = m.row(i);
    EXPECT_EQ(tsgn(dup), 0);

    M rows = m;
    rows.row(i).swap(rows.row(j));
    EXPECT_EQ(tsgn(rows), -s);

    M cols = m;
    cols.col(i).swap(cols.col(j));
    EXPECT_EQ(tsgn(cols), -s);

    EXPECT_EQ(tsgn(M(m.transpose())), s);

    M shifted = m;
    for (int r = 0; r < n; ++r) shifted.row(r).array() += oracle::random_rat(rng, 10, 3);
    EXPECT_EQ(tsgn(shifted), s);
  }
}

// Three rows in TP^2 are singular iff one tropical line holds them all. Apex
// candidates: pairwise crossings of the horizontal, vertical and slope-one
// lines through the rows.
TEST(IsSingular, SingularIffOnACommonHyperplane) {
  std::mt19937 rng(127);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = oracle::random_int_matrix(rng, 3, -3, 3);
    std::vector<TropPoint<Rat>> rows;
    for (const auto& r : m) rows.push_back(canonicalize(std::vector<Rat>{Rat(r[0]), Rat(r[1]), Rat(r[2])}));
    struct Line {
      int a, b;  // a*x + b*y = c in the chart
      Rat c;
    };
    std::vector<Line> lines;
    for (const auto& p : rows) {
      const Rat x = p[1] - p[0], y = p[2] - p[0];
      lines.push_back({1, 0, x});
      lines.push_back({0, 1, y});
      lines.push_back({-1, 1, y - x});
    }
    bool common = false;
    for (std::size_t i = 0; i < lines.size() && !common; ++i) {
      for (std::size_t j = i + 1; j < lines.size() && !common; ++j) {
        const auto& l1 = lines[i];
        const auto& l2 = lines[j];
        const int det = l1.a * l2.b - l1.b * l2.a;
        if (det == 0) continue;
        const Rat x = (l1.c * l2.b - l1.b * l2.c) / det;
        const Rat y = (l1.a * l2.c - l1.c * l2.a) / det;
        const Hyperplane<Rat> h{canonicalize(std::vector<Rat>{Rat(0), x, y})};
        common = std::all_of(rows.begin(), rows.end(), [&](const auto& p) { return hyperplane_contains(h, p); });
      }
    }
    EXPECT_EQ(is_singular(oracle::to_eigen<M>(m)), common) << trial;
  }
}

TEST(Tau, Examples) {
  const auto u = pts({point({1, 0, 0}), point({0, 1, 0})});
  EXPECT_EQ(tau<Rat>(u, point({0, 2, 3})), 1);
  EXPECT_EQ(tau<Rat>(u, point({1, 1, 0})), -1);
  EXPECT_EQ(tau<Rat>(u, point({0, 0, 0})), 0);
  EXPECT_THROW(tau<Rat>(u, point({0, 0, 0, 0})), DimensionError);
  EXPECT_THROW(tau<Rat>(pts({point({1, 0, 0})}), point({0, 0, 0})), DimensionError);
}

TEST(TauClosure, Examples) {
  const auto u = pts({point({1, 0, 0}), point({0, 1, 0})});
  EXPECT_EQ(tau_closure<Rat>(u, point({0, 0, 1})), 1);
  EXPECT_EQ(tau<Rat>(u, point({0, 0, 1})), 0);
  for (const auto& x : {point({0, 2, 3}), point({1, 1, 0}), point({0, 5, 1})}) {
    EXPECT_EQ(tau_closure<Rat>(u, x), tau<Rat>(u, x));
  }
  // Degenerate pair: a point far to the left.
  const auto degenerate = pts({point({0, 0, 0}), point({0, 1, 0})});
  const auto left = from_affine(Vector<Rat>(Eigen::Vector2i(-3, 0).cast<Rat>()));
  EXPECT_EQ(tau_closure<Rat>(degenerate, left), 0);
  EXPECT_EQ(oracle::tau_closure_by_neighborhood(degenerate[0], degenerate[1], left).value_or(0), 0);
}

// True when every maximal minor of the rows p_1..p_d (one column deleted) is
// tropically regular.
bool minors_regular(const std::vector<TropPoint<Rat>>& rows) {
  const Eigen::Index n = rows.front().size();
  for (Eigen::Index skip = 0; skip < n; ++skip) {
    M m(n - 1, n - 1);
    for (Eigen::Index r = 0; r + 1 < n; ++r)
      for (Eigen::Index c = 0, k = 0; c < n; ++c)
        if (c != skip) m(r, k++) = rows[static_cast<std::size_t>(r)][c];
    if (is_singular(m)) return false;
  }
  return true;
}

// With regular minors the parity rule and the neighborhood definition agree.
// Otherwise a nonzero parity answer still agrees with the neighborhood.
// p and q share the tie p_1 + q_2 = p_2 + q_1, so two permutations of
// opposite parity tie for every x. Near x only +1 and 0 occur, yet the
// optimal permutations at x have both parities.
TEST(TauClosure, ParityRuleOnDegeneratePoints) {
  const auto u = pts({point({0, 0, 0}), point({0, 1, 1})});
  const auto x = point({0, 1, 2});
  EXPECT_EQ(tau_closure<Rat>(u, x), 0);
  EXPECT_EQ(oracle::tau_closure_by_neighborhood(u[0], u[1], x), 1);
}

TEST(TauClosure, MatchesNeighborhoodDefinitionInThePlane) {
  std::mt19937 rng(131);
  int compared = 0, regular = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto p = oracle::random_point(rng, 2, 3, 1), q = oracle::random_point(rng, 2, 3, 1);
    const auto x = oracle::random_point(rng, 2, 3, 1);
    const auto expected = oracle::tau_closure_by_neighborhood(p, q, x);
    if (!expected) continue;
    ++compared;
    const std::vector<TropPoint<Rat>> u{p, q};
    const int closure = tau_closure<Rat>(u, x);
    EXPECT_EQ(tau_closure<Rat>(u, x, kAssignment), closure);
    if (minors_regular(u)) {
      ++regular;
      EXPECT_EQ(closure, *expected) << trial << " p " << format_point(p) << " q " << format_point(q)
                                    << " x " << format_point(x);
    } else if (closure != 0) {
      EXPECT_EQ(closure, *expected) << trial;
    }
    const int t = tau<Rat>(u, x);
    if (t != 0) {
      EXPECT_EQ(tau_closure<Rat>(u, x), t);
    }
    // Where the closure vanishes next to nonzero values, both parities are optimal.
    if (*expected == 0) {
      M m(3, 3);
      m.row(0) = x.coords().transpose();
      m.row(1) = p.coords().transpose();
      m.row(2) = q.coords().transpose();
      EXPECT_TRUE(analyze_tdet(m).optimal_parities.both());
    }
  }
  EXPECT_GT(compared, 1000);
  EXPECT_GT(regular, 500);
}

// Off its zero set tau is locally constant. With integer p, q and x on a
// grid of step 1/3, every nonzero point keeps its value within 1/1000.
TEST(Tau, LocallyConstant) {
  std::mt19937 rng(137);
  static const int dirs[8][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, -1}, {2, -1}, {-1, 2}};
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto p = oracle::random_point(rng, 2, 3, 1), q = oracle::random_point(rng, 2, 3, 1);
    const std::vector<TropPoint<Rat>> u{p, q};
    const auto x = oracle::random_point(rng, 2, 4, 3);
    const int t = tau<Rat>(u, x);
    if (t == 0) continue;
    ++checked;
    for (const auto& d : dirs) {
      Vector<Rat> c = x.coords();
      c(1) += Rat(d[0], 1000);
      c(2) += Rat(d[1], 1000);
      EXPECT_EQ(tau<Rat>(u, TropPoint<Rat>::from_raw(c)), t) << "trial " << trial;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(SectorIndicator, ExampleInDimensionThree) {
  const auto u = sector_indicator_points<Rat>(3, {0, 2});
  const std::vector<TropPoint<Rat>> expected = {point({1, 0, 0, 1}), point({1, 1, 0, 0}), point({0, 1, 1, 0})};
  EXPECT_EQ(u, expected);
  EXPECT_EQ(tau<Rat>(u, point({0, 1, 1, 1})), 1);
  EXPECT_EQ(tau<Rat>(u, point({1, 0, 1, 1})), -1);
}

TEST(SectorIndicator, Errors) {
  EXPECT_THROW(sector_indicator_points<Rat>(3, {}), PreconditionError);
  EXPECT_THROW(sector_indicator_points<Rat>(3, {0, 1, 2, 3}), PreconditionError);
  EXPECT_THROW(sector_indicator_points<Rat>(2, {3}), PreconditionError);
  EXPECT_THROW(sector_indicator_points<Rat>(0, {0}), DimensionError);
  // In TP^1 a single point u gives tau = +1 only on the sector of index 0.
  EXPECT_THROW(sector_indicator_points<Rat>(1, {1}), PreconditionError);
  const auto u = sector_indicator_points<Rat>(1, {0});
  EXPECT_EQ(tau<Rat>(u, point({0, 1})), 1);
  EXPECT_EQ(tau<Rat>(u, point({1, 0})), -1);
}

// tau is +1 exactly on the open sectors S_k, k in K, at the origin. The
// closure is +1 only inside the closed halfspace.
TEST(SectorIndicator, TauGivesTheOpenSectors) {
  std::mt19937 rng(139);
  const auto origin = [](int d) { return TropPoint<Rat>::from_raw(Vector<Rat>::Zero(d + 1)); };
  for (int d = 2; d <= 5; ++d) {
    for (int mask = 1; mask < (1 << (d + 1)) - 1; ++mask) {
      std::vector<int> k;
      for (int i = 0; i <= d; ++i) {
        if (mask >> i & 1) k.push_back(i);
      }
      const auto u = sector_indicator_points<Rat>(d, k);
      const Halfspace<Rat> closed(origin(d), k);
      for (int s = 0; s < 40; ++s) {
        const auto x = oracle::random_point(rng, d, 2, s % 2 == 0 ? 1 : 4);
        const auto active = detail::argmin_indices(x, origin(d));
        const bool in_open_sector = active.size() == 1 && closed.has_index(active.front());
        EXPECT_EQ(tau<Rat>(u, x) == 1, in_open_sector) << "d " << d << " mask " << mask << " x " << format_point(x) << " tau " << tau<Rat>(u, x);
        if (tau_closure<Rat>(u, x) == 1) {
          EXPECT_TRUE(halfspace_contains(closed, x));
        }
      }
    }
  }
}

// The chain points have no tropically singular maximal minor.
TEST(SectorIndicator, ChainPointsAreInGeneralPosition) {
  for (int d = 2; d <= 5; ++d) {
    for (int l = 1; 2 * l - 1 <= d; ++l) {
      std::vector<int> k;
      for (int i = 0; i < l; ++i) k.push_back(2 * i);
      const auto u = sector_indicator_points<Rat>(d, k);
      for (int drop = 0; drop <= d; ++drop) {
        M minor(d, d);
        for (int r = 0; r < d; ++r) {
          for (int c = 0, cc = 0; c <= d; ++c) {
            if (c != drop) {
              minor(r, cc++) = u[r][c];
            }
          }
        }
        EXPECT_FALSE(is_singular(minor)) << "d " << d << " l " << l << " drop " << drop;
      }
    }
  }
}

TEST(EnumerationLimit, DefaultsToEight) {
  if (std::getenv("TROPICAL_ENUM_LIMIT") == nullptr) {
    EXPECT_EQ(default_enumeration_limit(), 8);
  }
}
