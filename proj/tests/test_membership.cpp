#include "oracles.hpp"
#include "tropical/core.hpp"
#include "tropical/io.hpp"
#include "tropical/membership.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <future>
#include <random>
#include <vector>

using namespace tropical;
using tropical::point;

namespace {

using Points = std::vector<TropPoint<Rat>>;

const Points kDelta22 = {point({1, 0, 0}), point({0, 1, 0}), point({0, 0, 1})};
const Points kDelta21 = {point({0, 1, 1}), point({1, 0, 1}), point({1, 1, 0})};

MembershipCertificate<Rat> check(const Points& g, const TropPoint<Rat>& x) { return contains<Rat>(g, x); }

Points random_generators(std::mt19937& rng, int d, int n) {
  Points g;
  for (int i = 0; i < n; ++i) g.push_back(oracle::random_point(rng, d, 4, 2));
  return g;
}

std::vector<Rat> random_lambdas(std::mt19937& rng, std::size_t n) {
  std::vector<Rat> lambda;
  for (std::size_t i = 0; i < n; ++i) lambda.push_back(oracle::random_rat(rng, 6, 3));
  return lambda;
}

bool same_set(Points a, Points b) {
  auto less = [](const TropPoint<Rat>& p, const TropPoint<Rat>& q) { return lex_less(p, q); };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

}  // namespace

TEST(Contains, Examples) {
  const auto origin = check(kDelta22, point({0, 0, 0}));
  ASSERT_TRUE(origin.member);
  ASSERT_EQ(origin.witnesses.size(), 3u);
  EXPECT_EQ(origin.witnesses[0], 1u);
  EXPECT_EQ(origin.witnesses[1], 0u);
  EXPECT_EQ(origin.witnesses[2], 0u);
  EXPECT_FALSE(origin.missing_sector);
  EXPECT_EQ(oracle::combination(kDelta22, origin.coefficients), point({0, 0, 0}));

  const auto outside = check(kDelta22, point({0, 2, 2}));
  EXPECT_FALSE(outside.member);
  EXPECT_EQ(outside.missing_sector, 0);
  EXPECT_TRUE(outside.coefficients.empty());

  EXPECT_TRUE(check(kDelta21, point({0, 0, 0})).member);
}

TEST(Contains, Errors) {
  EXPECT_THROW(check(kDelta22, point({0, 0, 0, 0})), DimensionError);
  EXPECT_THROW(check({}, point({0, 0, 0})), PreconditionError);
}

TEST(Contains, GeneratorsAreMembers) {
  std::mt19937 rng(201);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_generators(rng, 1 + trial % 5, 1 + trial % 7);
    for (const auto& p : g) EXPECT_TRUE(check(g, p).member);
  }
}

// Every combination of the generators is a member and the certificate
// reproduces it.
TEST(Contains, Generation) {
  std::mt19937 rng(203);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = random_generators(rng, 1 + trial % 5, 1 + trial % 6);
    const auto x = oracle::combination(g, random_lambdas(rng, g.size()));
    const auto cert = check(g, x);
    ASSERT_TRUE(cert.member) << trial;
    EXPECT_EQ(oracle::combination(g, cert.coefficients), x);
  }
}

// Witnesses and missing sectors are rechecked against the sector inequalities.
TEST(Contains, CertificateSoundness) {
  std::mt19937 rng(205);
  int members = 0, others = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int d = 1 + trial % 4;
    const auto g = random_generators(rng, d, 1 + trial % 5);
    const auto x = oracle::random_point(rng, d, 4, 2);
    const auto cert = check(g, x);
    for (int k = 0; k <= d; ++k) {
      const Sector<Rat> s(x, k);
      const auto first = std::find_if(g.begin(), g.end(), [&](const auto& p) { return sector_contains(s, p); });
      const auto& w = cert.witnesses[static_cast<std::size_t>(k)];
      if (first == g.end()) {
        EXPECT_FALSE(w);
      } else {
        ASSERT_TRUE(w);
        EXPECT_EQ(*w, static_cast<std::size_t>(first - g.begin()));
      }
    }
    if (cert.member) {
      ++members;
      EXPECT_EQ(oracle::combination(g, cert.coefficients), x);
    } else {
      ++others;
      const Sector<Rat> s(x, *cert.missing_sector);
      for (const auto& p : g) EXPECT_FALSE(sector_contains(s, p));
      for (int k = 0; k < *cert.missing_sector; ++k) EXPECT_TRUE(cert.witnesses[static_cast<std::size_t>(k)]);
    }
  }
  EXPECT_GT(members, 20);
  EXPECT_GT(others, 20);
}

TEST(Contains, PolytopeOverload) {
  const Polytope<Rat> p(kDelta22);
  EXPECT_TRUE(contains(p, point({0, 0, 0})).member);
  EXPECT_FALSE(contains(p, point({0, 2, 2})).member);
}

TEST(VertexSet, Examples) {
  Points with_origin = kDelta22;
  with_origin.push_back(point({0, 0, 0}));
  EXPECT_EQ(vertex_set<Rat>(with_origin), kDelta22);

  for (int d = 2; d <= 4; ++d) {
    const auto h = hypersimplex(d, 2);
    EXPECT_EQ(vertex_set<Rat>(h), h) << d;
    EXPECT_EQ(h.size(), static_cast<std::size_t>((d + 1) * d / 2));
  }

  const Points repeated(5, point({0, 3, 1}));
  EXPECT_EQ(vertex_set<Rat>(repeated), Points{point({0, 3, 1})});
}

TEST(VertexSet, KeepsFirstOccurrenceOrder) {
  const Points g = {point({0, 0, 1}), point({0, 0, 0}), point({1, 0, 0}), point({0, 0, 1}), point({0, 1, 0})};
  EXPECT_EQ(vertex_set<Rat>(g), (Points{point({0, 0, 1}), point({1, 0, 0}), point({0, 1, 0})}));
}

TEST(VertexSet, CachedOnPolytope) {
  const Polytope<Rat> p(kDelta22);
  const auto& first = vertex_set(p);
  EXPECT_EQ(&first, &vertex_set(p));
  EXPECT_EQ(first, kDelta22);
}

// The vertices regenerate every generator, none of them is redundant, and a
// second pass changes nothing.
TEST(VertexSet, RegeneratesAndIsIdempotent) {
  std::mt19937 rng(207);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + trial % 4;
    auto g = random_generators(rng, d, 2 + trial % 6);
    if (trial % 3 == 0) g.push_back(oracle::combination(g, random_lambdas(rng, g.size())));
    const auto v = vertex_set<Rat>(g);
    ASSERT_FALSE(v.empty());
    for (const auto& p : g) EXPECT_TRUE(check(v, p).member);
    for (std::size_t i = 0; i < v.size(); ++i) {
      Points rest = v;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      if (!rest.empty()) {
        EXPECT_FALSE(check(rest, v[i]).member);
      }
    }
    EXPECT_TRUE(same_set(vertex_set<Rat>(v), v));
  }
}

TEST(Separate, Examples) {
  const auto x = point({0, 3, 3});
  const auto h = separate<Rat>(kDelta21, x);
  EXPECT_EQ(h.indices(), (std::vector<int>{1, 2}));
  // Smallest slack is 2, at (0,1,1); the apex moves by half of it.
  EXPECT_EQ(h.apex(), point({0, 2, 2}));
  EXPECT_EQ(separate<Rat>(kDelta22, x).apex(), point({0, Rat(3, 2), Rat(3, 2)}));
  for (const auto& g : kDelta21) EXPECT_TRUE(halfspace_contains(h, g));
  EXPECT_FALSE(halfspace_contains(h, x));

  const Points single = {point({0, 1, 2})};
  const auto far = point({0, 5, -1});
  const auto hs = separate<Rat>(single, far);
  EXPECT_TRUE(halfspace_contains(hs, single.front()));
  EXPECT_FALSE(halfspace_contains(hs, far));
}

TEST(Separate, RejectsMembers) {
  EXPECT_THROW(separate<Rat>(kDelta22, point({0, 0, 0})), PreconditionError);
  EXPECT_THROW(separate(Polytope<Rat>(kDelta22), point({1, 0, 0})), PreconditionError);
}

TEST(Separate, RandomPairs) {
  std::mt19937 rng(209);
  int separated = 0;
  for (int trial = 0; separated < 500; ++trial) {
    ASSERT_LT(trial, 5000);
    const int d = 1 + trial % 4;
    const auto g = random_generators(rng, d, 1 + trial % 5);
    const auto x = oracle::random_point(rng, d, 5, 3);
    if (check(g, x).member) continue;
    ++separated;
    const auto h = separate<Rat>(g, x);
    EXPECT_TRUE(h.closed());
    EXPECT_EQ(static_cast<int>(h.indices().size()), d);
    for (const auto& p : g) EXPECT_TRUE(halfspace_contains(h, p)) << trial;
    EXPECT_FALSE(halfspace_contains(h, x)) << trial;
  }
}

// The halfspaces produced for non-members cut the sample set down to exactly
// the members: the polytope is the intersection of the halfspaces containing it.
TEST(Separate, ExteriorDescription) {
  std::mt19937 rng(211);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 1 + trial % 3;
    const auto g = random_generators(rng, d, 2 + trial % 4);
    Points samples;
    for (int s = 0; s < 60; ++s) samples.push_back(oracle::random_point(rng, d, 4, 2));
    for (int s = 0; s < 20; ++s) samples.push_back(oracle::combination(g, random_lambdas(rng, g.size())));
    std::vector<Halfspace<Rat>> cuts;
    for (const auto& x : samples) {
      if (!check(g, x).member) cuts.push_back(separate<Rat>(g, x));
    }
    for (const auto& x : samples) {
      const bool inside_all =
          std::all_of(cuts.begin(), cuts.end(), [&](const auto& h) { return halfspace_contains(h, x); });
      EXPECT_EQ(inside_all, check(g, x).member);
    }
  }
}

TEST(Hypersimplex, Nesting) {
  for (int d = 1; d <= 5; ++d) {
    for (int k = 1; k < d; ++k) {
      const auto outer = hypersimplex(d, k), inner = hypersimplex(d, k + 1);
      for (const auto& v : inner) EXPECT_TRUE(check(outer, v).member) << d << " " << k;
      EXPECT_TRUE(std::any_of(outer.begin(), outer.end(), [&](const auto& v) { return !check(inner, v).member; }));
    }
  }
}

// tconv of the second hypersimplex is the part of the zero hyperplane with
// norm at most 1.
TEST(Hypersimplex, SecondIsTheUnitBallOfTheZeroHyperplane) {
  std::mt19937 rng(213);
  std::uniform_int_distribution<int> coord(0, 6);
  for (int d = 2; d <= 4; ++d) {
    const auto g = hypersimplex(d, 2);
    const Hyperplane<Rat> zero{TropPoint<Rat>::from_raw(Vector<Rat>::Zero(d + 1))};
    int inside = 0;
    for (int s = 0; s < 400; ++s) {
      Vector<Rat> raw(d + 1);
      for (int i = 0; i <= d; ++i) raw(i) = Rat(coord(rng), 4);
      if (s % 2 == 0) raw(1) = raw(0);
      const auto x = TropPoint<Rat>::from_raw(raw);
      const bool expected = hyperplane_contains(zero, x) && trop_norm(x) <= 1;
      inside += expected;
      EXPECT_EQ(check(g, x).member, expected) << format_point(x);
    }
    EXPECT_GT(inside, 20);
  }
}

TEST(Concurrency, ParallelQueriesMatchSequential) {
  std::mt19937 rng(215);
  const auto g = random_generators(rng, 3, 6);
  Points queries;
  for (int s = 0; s < 200; ++s) queries.push_back(oracle::random_point(rng, 3, 4, 2));
  std::vector<bool> sequential;
  for (const auto& x : queries) sequential.push_back(check(g, x).member);

  std::vector<std::future<std::vector<bool>>> jobs;
  for (int t = 0; t < 4; ++t) {
    jobs.push_back(std::async(std::launch::async, [&] {
      std::vector<bool> out;
      for (const auto& x : queries) out.push_back(check(g, x).member);
      return out;
    }));
  }
  for (auto& j : jobs) EXPECT_EQ(j.get(), sequential);
}
