#include <gtest/gtest.h>

#include <functional>

#include "linfmap/examples.hpp"
#include "linfmap/linf.hpp"
#include "random_models.hpp"

using namespace linfmap;

namespace {

Rational factorial(int n) {
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Brute-force multilinear expansion of Σ_j (1/j!) ℓ_{j+k}(z,…,z, x_1,…,x_k).
GradedVector twisted_by_expansion(const LInfinity& L, const GradedVector& z, const ArgTuple& x) {
  GradedVector out;
  for (int j = 0; j + int(x.size()) <= L.max_arity(); ++j) {
    std::vector<GradedVector> args(j, z);
    for (auto e : x) args.push_back(GradedVector::unit(e));
    out.add_scaled(eval_bracket(L, args), Rational(1) / factorial(j));
  }
  return out;
}

GradedVector curvature_by_expansion(const LInfinity& L, const GradedVector& z) {
  GradedVector out;
  for (int k = 1; k <= L.max_arity(); ++k)
    out.add_scaled(eval_bracket(L, std::vector<GradedVector>(k, z)), Rational(1) / factorial(k));
  return out;
}

// Every non-decreasing tuple of basis indices of length 1..max_len.
void for_each_tuple(std::size_t n, int max_len, const std::function<void(const ArgTuple&)>& f) {
  ArgTuple t;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (!t.empty()) f(t);
    if (int(t.size()) == max_len) return;
    for (std::size_t i = from; i < n; ++i) {
      t.push_back(i);
      rec(i);
      t.pop_back();
    }
  };
  rec(0);
}

// Lyndon words over a two-letter alphabet give the Hall basis of the free Lie algebra.
int lyndon_count(int length) {
  int count = 0;
  for (int w = 0; w < (1 << length); ++w) {
    std::string s;
    for (int b = length - 1; b >= 0; --b) s.push_back((w >> b) & 1 ? 'b' : 'a');
    bool lyndon = true;
    for (int r = 1; r < length && lyndon; ++r)
      if (!(s < s.substr(r) + s.substr(0, r))) lyndon = false;
    if (lyndon) ++count;
  }
  return count;
}

}  // namespace

TEST(LInfinity, StorageAndSkewSymmetry) {
  auto L = examples::connected_sum_target(2);
  EXPECT_EQ(L.bracket({0, 1}), GradedVector::unit(2));
  // odd-odd swap: sgn·ε = (-1)(-1) = +1
  EXPECT_EQ(L.bracket({1, 0}), GradedVector::unit(2));
  EXPECT_EQ(eval_bracket(L, {GradedVector{}, GradedVector::unit(1)}), GradedVector{});
  EXPECT_THROW(L.bracket({}), AlgebraError);
  EXPECT_TRUE(L.bracket({0, 1, 2, 3}).is_zero());

  auto R = examples::regular_sequence_target(2);
  const auto& sp = R.space();
  EXPECT_EQ(R.bracket({sp.index_of("y1"), sp.index_of("y1")}), GradedVector::unit(sp.index_of("u1")));

  LInfinity bad(GradedSpace({{"x", 2}, {"w", 4}, {"p", 3}}), 3);
  EXPECT_THROW(bad.add_bracket({0, 0}, GradedVector::unit(1)), AlgebraError);
  EXPECT_THROW(bad.add_bracket({0, 2}, GradedVector::unit(1)), AlgebraError);
  EXPECT_THROW(bad.add_bracket({0, 0, 0, 0}, GradedVector::unit(1)), AlgebraError);
  EXPECT_THROW(bad.add_bracket({}, GradedVector::unit(1)), AlgebraError);
}

TEST(LInfinity, DegreeAuditOfBuiltins) {
  for (const auto& L : {examples::regular_sequence_target(2), examples::connected_sum_target(2),
                        examples::s3y_target(), examples::free_lie_target()}) {
    for (int k : L.arities())
      for (const auto& [T, V] : L.table(k)) {
        int deg = k - 2;
        for (auto t : T) deg += L.space().degree(t);
        EXPECT_EQ(*V.degree(L.space()), deg);
      }
  }
}

TEST(Jacobi, BuiltinsUpToFive) {
  for (const auto& L : {examples::regular_sequence_target(2), examples::connected_sum_target(2),
                        examples::connected_sum_target(3), examples::s3y_target(), examples::free_lie_target()}) {
    auto r = check_jacobi(L, 5);
    EXPECT_TRUE(r.ok()) << r.violations.size();
  }
}

TEST(Jacobi, CandidateFilterMatchesExhaustiveSearch) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    LInfinity L = randgen::random_two_layer(rng, 5, 3);
    // Corrupt by feeding a top element back into a bracket when degrees allow.
    const auto& sp = L.space();
    for (std::size_t a = 0; a < sp.size(); ++a)
      for (std::size_t b = a + 1; b < sp.size(); ++b)
        for (std::size_t c = 0; c < sp.size(); ++c)
          if (sp.degree(a) + sp.degree(b) == sp.degree(c) && rng() % 2 == 0 && L.bracket({a, b}).is_zero())
            L.add_bracket({a, b}, GradedVector::unit(c));
    std::size_t exhaustive = 0;
    for_each_tuple(sp.size(), 4, [&](const ArgTuple& t) {
      if (!jacobi_sum(L, t).is_zero()) ++exhaustive;
    });
    EXPECT_EQ(check_jacobi(L, 4).violations.size(), exhaustive);
  }
}

TEST(Jacobi, DetectsClassicalJacobiFailure) {
  // Degree-zero bracket [e1,e2]=e2, [e1,e3]=e3, [e2,e3]=e1; the classical Jacobiator is -2 e1
  // up to the sign convention of the identity.
  LInfinity L(GradedSpace({{"e1", 0}, {"e2", 0}, {"e3", 0}}), 2);
  Rational c[3][3][3] = {};
  auto set = [&](int i, int j, int k, int v) {
    c[i][j][k] = v;
    c[j][i][k] = -v;
  };
  set(0, 1, 1, 1);
  set(0, 2, 2, 1);
  set(1, 2, 0, 1);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      GradedVector v;
      for (int k = 0; k < 3; ++k) v.add_term(k, c[i][j][k]);
      L.add_bracket({std::size_t(i), std::size_t(j)}, v);
    }
  auto br = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    std::vector<Rational> out(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) out[k] += x[i] * y[j] * c[i][j][k];
    return out;
  };
  auto e = [](int i) {
    std::vector<Rational> v(3);
    v[i] = 1;
    return v;
  };
  // [[x1,x2],x3] - [[x1,x3],x2] + [[x2,x3],x1]
  auto a = br(br(e(0), e(1)), e(2)), b = br(br(e(0), e(2)), e(1)), d = br(br(e(1), e(2)), e(0));
  GradedVector expected;
  for (int k = 0; k < 3; ++k) expected.add_term(k, a[k] - b[k] + d[k]);
  ASSERT_FALSE(expected.is_zero());
  EXPECT_EQ(jacobi_sum(L, {0, 1, 2}), expected);
  auto report = check_jacobi(L, 3);
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violations.front().args, (ArgTuple{0, 1, 2}));
}

TEST(Curvature, MatchesMultinomialExpansion) {
  std::mt19937 rng(5);
  int nontrivial = 0;
  for (int trial = 0; trial < 60; ++trial) {
    LInfinity L = randgen::random_two_layer(rng);
    GradedVector z = randgen::random_degree_minus_one(L, rng);
    auto c = curvature(L, z);
    EXPECT_FALSE(c.truncated);
    EXPECT_EQ(c.value, curvature_by_expansion(L, z));
    if (!c.value.is_zero()) ++nontrivial;
  }
  EXPECT_GT(nontrivial, 0);
  auto L = examples::connected_sum_target(2);
  EXPECT_TRUE(curvature(L, {}).value.is_zero());
  EXPECT_THROW(curvature(L, GradedVector::unit(0) + GradedVector::unit(1)), AlgebraError);
}

TEST(Curvature, TruncationFlag) {
  LInfinity L(GradedSpace({{"z", -1}, {"w", -2}}), 3);
  L.add_bracket({0, 0, 0}, GradedVector::unit(1));
  auto c = curvature(L, GradedVector::unit(0), 2);
  EXPECT_TRUE(c.truncated);
  EXPECT_TRUE(c.value.is_zero());
  EXPECT_EQ(curvature(L, GradedVector::unit(0, 6)).value, GradedVector::unit(1, 36));
}

TEST(Twist, MatchesExpansionAndLaws) {
  std::mt19937 rng(9);
  int nontrivial = 0;
  for (int trial = 0; trial < 60; ++trial) {
    LInfinity L = randgen::random_two_layer(rng);
    GradedVector z = randgen::random_degree_minus_one(L, rng);
    LInfinity Lz = twist_unchecked(L, z);
    for_each_tuple(L.space().size(), L.max_arity(), [&](const ArgTuple& t) {
      EXPECT_EQ(Lz.bracket(t), twisted_by_expansion(L, z, t));
    });
    if (!(Lz == L)) ++nontrivial;
    EXPECT_EQ(twist_unchecked(L, {}), L);
    GradedVector w = randgen::random_degree_minus_one(L, rng);
    EXPECT_EQ(twist_unchecked(twist_unchecked(L, z), w), twist_unchecked(L, z + w));
    if (is_maurer_cartan(L, z)) {
      auto nz = nilpotency_order(Lz);
      auto n = nilpotency_order(L);
      ASSERT_TRUE(nz && n);
      EXPECT_LE(*nz, *n);
    }
  }
  EXPECT_GT(nontrivial, 10);
}

TEST(Twist, Errors) {
  LInfinity L(GradedSpace({{"z", -1}, {"w", -2}}), 3);
  L.add_bracket({0, 0, 0}, GradedVector::unit(1));
  EXPECT_THROW(twist(L, GradedVector::unit(0)), AlgebraError);
  LInfinity M(GradedSpace({{"z", -1}, {"x", 1}, {"y", 0}}), 4);
  M.add_bracket({0, 0, 0, 1}, GradedVector::unit(2));
  EXPECT_THROW(twist(M, GradedVector::unit(0), 2), NonTerminatingSeries);
  EXPECT_NO_THROW(twist(M, GradedVector::unit(0), 3));
  EXPECT_EQ(twist(M, GradedVector::unit(0)).bracket({1}), GradedVector::unit(2, Rational(1, 6)));
  EXPECT_EQ(twist(M, {}), M);
}

TEST(LowerCentralSeries, Examples) {
  LInfinity abelian(GradedSpace({{"x", 2}, {"y", 3}}), 2);
  auto lcs = lower_central_series(abelian, 10);
  EXPECT_TRUE(lcs.complete);
  EXPECT_EQ(lcs.filtration.size(), 1u);
  EXPECT_EQ(*nilpotency_order(abelian), 1);
  EXPECT_EQ(*nilpotency_order(LInfinity(GradedSpace(), 2)), 0);

  auto s3 = examples::s3y_target();
  auto l = lower_central_series(s3, 10);
  ASSERT_EQ(l.filtration.size(), 3u);
  Subspace s_only;
  s_only.insert(GradedVector::unit(3));
  EXPECT_EQ(l.filtration[1], s_only);
  EXPECT_EQ(l.filtration[2], s_only);
  EXPECT_EQ(*nilpotency_order(s3), 3);

  EXPECT_EQ(*nilpotency_order(examples::connected_sum_target(2)), 3);
  EXPECT_EQ(*nilpotency_order(examples::regular_sequence_target(2)), 4);
}

TEST(LowerCentralSeries, FreeLieMatchesHallBasis) {
  auto L = examples::free_lie_target();
  auto lcs = lower_central_series(L, 10);
  ASSERT_TRUE(lcs.complete);
  ASSERT_EQ(lcs.filtration.size(), 3u);
  for (int i = 1; i <= 3; ++i) {
    int expected = 0;
    for (int w = i; w <= 3; ++w) expected += lyndon_count(w);
    EXPECT_EQ(lcs.filtration[i - 1].dimension(), std::size_t(expected)) << i;
  }
  EXPECT_EQ(lyndon_count(4), 3);  // weight 4 exists in the free Lie algebra but is truncated here
}

TEST(LowerCentralSeries, FiltrationDecreases) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    auto L = randgen::random_two_layer(rng);
    auto lcs = lower_central_series(L, 20);
    EXPECT_TRUE(lcs.complete);
    for (std::size_t i = 1; i < lcs.filtration.size(); ++i)
      EXPECT_TRUE(lcs.filtration[i - 1].contains_subspace(lcs.filtration[i]));
  }
}

TEST(LowerCentralSeries, NonNilpotentIsReported) {
  LInfinity L(GradedSpace({{"x", 0}, {"y", 0}}), 2);
  L.add_bracket({0, 1}, GradedVector::unit(1));
  EXPECT_FALSE(nilpotency_order(L, 8));
}

TEST(Minimality, Examples) {
  EXPECT_TRUE(is_minimal(examples::regular_sequence_target(2)));
  EXPECT_TRUE(is_minimal(LInfinity(GradedSpace(), 1)));
  LInfinity d(GradedSpace({{"x", 1}, {"y", 0}}), 1);
  d.add_bracket({0}, GradedVector::unit(1));
  EXPECT_FALSE(is_minimal(d));
  EXPECT_THROW(whitehead_length(d), AlgebraError);
}

TEST(Whitehead, Examples) {
  EXPECT_EQ(whitehead_length(examples::s3y_target()), 1);
  EXPECT_EQ(whitehead_length(LInfinity(GradedSpace({{"x", 2}}), 2)), 1);
  EXPECT_EQ(whitehead_length(LInfinity(GradedSpace(), 2)), 0);
  EXPECT_EQ(whitehead_length(examples::free_lie_target()), 3);
  EXPECT_EQ(whitehead_length(examples::free_lie_target(), 2), 2);
}

TEST(HomologyModel, InducedBracket) {
  // x -> y kills y; p, q survive with [p,q] = w + y, so the induced bracket is [p,q] = w.
  LInfinity L(GradedSpace({{"x", 3}, {"y", 2}, {"p", 1}, {"q", 1}, {"w", 2}}), 2);
  L.add_bracket({0}, GradedVector::unit(1));
  L.add_bracket({2, 3}, GradedVector::unit(4) + GradedVector::unit(1));
  auto h = homology_lie_model(L);
  ASSERT_EQ(h.algebra.space().size(), 3u);
  EXPECT_TRUE(is_minimal(h.algebra));
  const auto& hs = h.algebra.space();
  EXPECT_EQ(h.algebra.bracket({hs.index_of("p"), hs.index_of("q")}), GradedVector::unit(hs.index_of("w")));
  EXPECT_EQ(whitehead_length(h.algebra), 2);
}
