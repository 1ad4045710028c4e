#include <gtest/gtest.h>

#include <random>

#include "linfmap/cedual.hpp"
#include "linfmap/convo.hpp"
#include "linfmap/examples.hpp"

#include "fixtures.hpp"
#include "random_models.hpp"

using namespace linfmap;

namespace {

int sgn(int e) { return e % 2 == 0 ? 1 : -1; }

// Hilbert function of Q[t_1..t_r]/(relations) in degree n, all generators of even degree.
// Polynomials are maps from exponent vectors to coefficients.
using Exps = std::vector<int>;
using Poly = std::map<Exps, Rational>;

std::vector<Exps> exps_of_degree(const std::vector<int>& deg, int n) {
  std::vector<Exps> out;
  Exps cur(deg.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == deg.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int e = 0; e * deg[i] <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e * deg[i]);
    }
    cur[i] = 0;
  };
  rec(rec, 0, n);
  return out;
}

std::size_t quotient_dimension(const std::vector<int>& deg, const std::vector<std::pair<Poly, int>>& relations, int n) {
  const auto basis = exps_of_degree(deg, n);
  std::map<Exps, std::size_t> where;
  for (std::size_t i = 0; i < basis.size(); ++i) where[basis[i]] = i;
  std::vector<GradedVector> ideal;
  for (const auto& [r, rdeg] : relations) {
    for (const auto& m : exps_of_degree(deg, n - rdeg)) {
      GradedVector v;
      for (const auto& [e, c] : r) {
        Exps p = e;
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += m[i];
        v.add_term(where.at(p), c);
      }
      ideal.push_back(v);
    }
  }
  const std::size_t rank = ideal.size() - kernel_basis(ideal).size();
  return basis.size() - rank;
}

std::vector<LInfinity> nontrivial_jacobi_algebras() {
  std::vector<LInfinity> out{fixtures::so3(), fixtures::dgl_with_differential(), examples::free_lie_target()};
  {
    auto A = build_convolution(sphere_coalgebra(3), examples::s3y_target(), false);
    out.push_back(truncate_nonneg(twist_convolution(A, A.single("alpha", "b"))).algebra);
  }
  {
    auto A = build_convolution(projective_coalgebra(2), examples::connected_sum_target(2), false);
    out.push_back(truncate_nonneg(twist_convolution(A, A.single("u1", "a"))).algebra);
  }
  {
    auto A = build_convolution(dualize_cdga(fixtures::contractible_cdga()), fixtures::dgl_with_differential(), false);
    out.push_back(truncate_nonneg(A).algebra);
  }
  return out;
}

}  // namespace

TEST(PairingSign, HandExpansionUpToArityFour) {
  // Exponent |v| + Σ_{k<j} (j-k)|sx_k| with |sx| = |x| + 1.
  for (int v = 0; v < 4; ++v)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) {
          EXPECT_EQ(sgn(pairing_exponent(v, {a})), sgn(v));
          EXPECT_EQ(sgn(pairing_exponent(v, {a, b})), sgn(v + a + 1));
          EXPECT_EQ(sgn(pairing_exponent(v, {a, b, c})), sgn(v + 2 * (a + 1) + (b + 1)));
          EXPECT_EQ(sgn(pairing_exponent(v, {a, b, c, 1})), sgn(v + 3 * (a + 1) + 2 * (b + 1) + (c + 1)));
          EXPECT_EQ(sgn(pairing_exponent(v, {a, b, c, 1})), sgn(v + a + c));
        }
  // Lie case: v dual to s[x,y] gives (-1)^{|v|+|x|+1} = (-1)^{|y|}.
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) EXPECT_EQ(sgn(pairing_exponent(x + y + 1, {x, y})), sgn(y));
}

TEST(CdgaOf, AbelianSphere) {
  LInfinity L(GradedSpace({{"x", 2}}), 2);
  auto A = cdga_of(L);
  EXPECT_EQ(A.generators().name(0), "x^");
  EXPECT_EQ(A.generators().degree(0), 3);
  EXPECT_TRUE(A.differential(0).empty());
  EXPECT_EQ(cdga_cohomology(A, 7), (std::vector<std::size_t>{1, 0, 0, 1, 0, 0, 0, 0}));
  EXPECT_TRUE(same_brackets(linfty_of(A), L));
}

TEST(CdgaOf, LieBracketOfOddElements) {
  LInfinity L(GradedSpace({{"x", 1}, {"y", 1}, {"z", 2}}), 2);
  L.add_bracket({0, 1}, GradedVector::unit(2));
  auto A = cdga_of(L);
  const auto& g = A.generators();
  // (-1)^{|y|} = -1, and |x^||y^| is even.
  EXPECT_EQ(A.differential(g.index_of("z^")), monomial_polynomial({g.index_of("x^"), g.index_of("y^")}, -1));
  EXPECT_EQ(A.format(A.differential(g.index_of("z^"))), "-1*x^*y^");
}

TEST(CdgaOf, S3Example) {
  auto A = cdga_of(examples::s3y_target());
  const auto& g = A.generators();
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (const auto& e : g.basis()) {
    names.push_back(e.name);
    degrees.push_back(e.degree);
  }
  EXPECT_EQ(names, (std::vector<std::string>{"a^", "b^", "r^", "s^"}));
  EXPECT_EQ(degrees, (std::vector<int>{2, 3, 3, 7}));
  // ε = 7 + 2·2 + 3 is even and the pairing exponent 2·3 + 2·3 + 3·3 is odd: dt = -xyz.
  EXPECT_EQ(A.differential(3), monomial_polynomial({0, 1, 2}, -1));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(A.differential(i).empty());
  EXPECT_TRUE(A.decomposable());
  // Monomials up to degree 8: 1 | x | y z | x² | xy xz | x³ yz | x²y x²z t | x⁴ xyz.
  // Only t is not a cycle and only xyz = ±dt is a boundary.
  EXPECT_EQ(cdga_cohomology(A, 8), (std::vector<std::size_t>{1, 0, 1, 2, 1, 2, 2, 2, 1}));
}

TEST(LinftyOf, S3Cdga) {
  auto A = SullivanCDGA::from_names({{"x", 2}, {"y", 3}, {"z", 3}, {"t", 7}}, {{"t", {{{"x", "y", "z"}, 1}}}});
  auto L = linfty_of(A);
  EXPECT_EQ(L.space().degree(L.space().index_of("x")), 1);
  EXPECT_EQ(L.bracket({0, 1, 2}), GradedVector::unit(3, -1));
  EXPECT_EQ(L.entry_count(), 1u);
  EXPECT_EQ(cdga_of(L).differential(3), monomial_polynomial({0, 1, 2}));
}

TEST(Roundtrip, BuiltinsAndRandom) {
  std::vector<LInfinity> cases{examples::s3y_target(), examples::connected_sum_target(2),
                               examples::connected_sum_target(3), examples::regular_sequence_target(2),
                               examples::free_lie_target(), fixtures::so3(), fixtures::dgl_with_differential()};
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    auto L = randgen::random_two_layer(rng, 6, 4);
    if (L.space().min_degree().value_or(0) >= 0) cases.push_back(L);
  }
  for (const auto& L : cases) {
    auto A = cdga_of(L);
    EXPECT_TRUE(same_brackets(linfty_of(A), L));
    EXPECT_EQ(cdga_of(linfty_of(A)), A);
  }
}

TEST(DSquared, VanishesExactlyWhenJacobiHolds) {
  int which = 0;
  for (const auto& L : nontrivial_jacobi_algebras()) {
    ASSERT_TRUE(check_jacobi(L, 4).ok());
    auto A = cdga_of(L);
    for (auto v : A.d_squared_failures())
      ADD_FAILURE() << which << " " << A.generators().name(v) << " d=" << A.format(A.differential(v))
                    << " d2=" << A.format(A.apply_d(A.differential(v)));
    ++which;
  }
  auto bad = fixtures::so3(2);
  ASSERT_FALSE(check_jacobi(bad, 3).ok());
  EXPECT_FALSE(cdga_of(bad).d_squared_failures().empty());

  // Corrupt single entries of the differential DGL and compare both tests.
  const auto base = fixtures::dgl_with_differential();
  std::mt19937 rng(5);
  int failures = 0;
  for (int trial = 0; trial < 40; ++trial) {
    LInfinity L = base;
    const auto& table = base.table(rng() % 2 == 0 ? 1 : 2);
    auto it = table.begin();
    std::advance(it, rng() % table.size());
    L.add_bracket(it->first, Rational(1 + int(rng() % 3)) * it->second);
    const bool jacobi = check_jacobi(L, 3).ok();
    const bool d2 = cdga_of(L).d_squared_failures().empty();
    EXPECT_EQ(jacobi, d2);
    failures += !jacobi;
  }
  EXPECT_GT(failures, 0);
}

TEST(Minimality, MatchesDecomposableDifferential) {
  for (const auto& L : nontrivial_jacobi_algebras()) EXPECT_EQ(is_minimal(L), cdga_of(L).decomposable());
  EXPECT_FALSE(cdga_of(fixtures::dgl_with_differential()).decomposable());
}

TEST(Cohomology, RegularSequenceAgainstQuotientRing) {
  // i = 1: Q[y, x_1]/(x_1² - y²); i = 2 adds x_2 with x_2² - y⁴.
  Poly r1{{{2, 0}, 1}, {{0, 2}, -1}};
  Poly r1x{{{2, 0, 0}, 1}, {{0, 2, 0}, -1}};
  Poly r2{{{4, 0, 0}, 1}, {{0, 0, 2}, -1}};
  auto one = cdga_cohomology(cdga_of(examples::regular_sequence_target(1)), 8);
  auto two = cdga_cohomology(cdga_of(examples::regular_sequence_target(2)), 8);
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(one[n], quotient_dimension({2, 2}, {{r1, 4}}, n)) << n;
    EXPECT_EQ(two[n], quotient_dimension({2, 2, 4}, {{r1x, 4}, {r2, 8}}, n)) << n;
  }
  EXPECT_EQ(two, (std::vector<std::size_t>{1, 0, 2, 0, 3, 0, 4, 0, 4}));
}

TEST(Sullivan, ConstructionAndErrors) {
  EXPECT_THROW(cdga_of(LInfinity(GradedSpace({{"x", -1}}), 2)), AlgebraError);
  EXPECT_THROW(cdga_of(examples::s3y_target(), 6), AlgebraError);
  EXPECT_THROW(SullivanCDGA(GradedSpace({{"b", 3}, {"a", 2}}), {{}, {}}), AlgebraError);
  EXPECT_THROW(SullivanCDGA(GradedSpace({{"a", 0}}), {{}}), AlgebraError);
  EXPECT_THROW(SullivanCDGA(GradedSpace({{"a", 2}, {"b", 4}}), {{}, monomial_polynomial({0})}), AlgebraError);
  EXPECT_THROW(SullivanCDGA::from_names({{"a", 2}}, {{"q", {}}}), AlgebraError);
  auto A = SullivanCDGA::from_names({{"a", 2}, {"b", 3}}, {{"b", {{{"a", "a"}, 1}}}});
  auto wide = SullivanCDGA::from_names({{"a", 2}, {"e", 2}}, {});
  EXPECT_EQ(monomials_of_degree(wide, 40).size(), 21u);
  EXPECT_THROW(monomials_of_degree(wide, 40, 5), AlgebraError);
  EXPECT_THROW(cdga_cohomology(wide, 40, 5), AlgebraError);
  EXPECT_EQ(monomials_of_degree(A, 5).size(), 1u);
  EXPECT_TRUE(A.d_squared_failures().empty());
  // Λ(a_2, b_3), db = a²: cohomology is Q[a]/(a²).
  EXPECT_EQ(cdga_cohomology(A, 6), (std::vector<std::size_t>{1, 0, 1, 0, 0, 0, 0}));
}

TEST(Sullivan, Normalization) {
  auto A = SullivanCDGA::from_names({{"a", 2}, {"b", 3}, {"c", 3}}, {});
  EXPECT_EQ(A.normalize({2, 1}), (std::pair<int, Monomial>{-1, {1, 2}}));
  EXPECT_EQ(A.normalize({1, 0, 1}).first, 0);
  EXPECT_EQ(A.normalize({1, 0, 0}), (std::pair<int, Monomial>{1, {0, 0, 1}}));
  auto p = A.multiply(monomial_polynomial({2}), monomial_polynomial({1}));
  EXPECT_EQ(p, monomial_polynomial({1, 2}, -1));
}
