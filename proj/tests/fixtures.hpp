#pragma once

// Small hand-built algebras shared by several test files.

#include "linfmap/coalg.hpp"
#include "linfmap/linf.hpp"

namespace linfmap::fixtures {

// Λ(x_2, y_1)/(x²) with dy = x: acyclic apart from the unit.
inline CDGAlgebra contractible_cdga() {
  GradedSpace s({{"1", 0}, {"y", 1}, {"x", 2}, {"xy", 3}});
  std::map<std::pair<std::size_t, std::size_t>, GradedVector> prod;
  prod[{2, 1}] = GradedVector::unit(3);
  std::vector<GradedVector> d(4);
  d[1] = GradedVector::unit(2);
  return CDGAlgebra(s, "1", prod, d);
}

// so(3) ⊗ A with A = ⟨1, θ_1, η_0⟩, dθ = η and all products of θ, η zero: a DGL with d ≠ 0.
inline LInfinity dgl_with_differential() {
  std::vector<BasisElement> b;
  const char* tags[] = {"", "t", "n"};
  const int degs[] = {0, 1, 0};
  for (int a = 0; a < 3; ++a)
    for (int i = 1; i <= 3; ++i) b.push_back({"e" + std::to_string(i) + tags[a], degs[a]});
  LInfinity L(GradedSpace(b), 2);
  auto idx = [](int i, int a) { return std::size_t(3 * a + (i - 1)); };
  for (int i = 1; i <= 3; ++i) L.add_bracket({idx(i, 1)}, GradedVector::unit(idx(i, 2)));
  const int next[] = {0, 2, 3, 1};
  const int prev[] = {0, 3, 1, 2};
  for (int i = 1; i <= 3; ++i) {
    // [e_i, e_{i+1}] = e_{i+2}
    const int j = next[i], k = prev[i];
    for (int a = 0; a < 3; ++a) L.add_bracket({idx(i, 0), idx(j, a)}, GradedVector::unit(idx(k, a)));
    for (int a = 1; a < 3; ++a) L.add_bracket({idx(j, 0), idx(i, a)}, GradedVector::unit(idx(k, a), -1));
  }
  return L;
}

// so(3) in degree 0: [e_i, e_{i+1}] = e_{i+2}; a nonzero defect adds defect·e1 to [e1, e2],
// which breaks Jacobi on (e1, e2, e3).
inline LInfinity so3(const Rational& defect = 0) {
  LInfinity L(GradedSpace({{"e1", 0}, {"e2", 0}, {"e3", 0}}), 2);
  L.add_bracket({0, 1}, GradedVector::unit(2) + GradedVector::unit(0, defect));
  L.add_bracket({1, 2}, GradedVector::unit(0));
  L.add_bracket({2, 0}, GradedVector::unit(1));
  return L;
}

}  // namespace linfmap::fixtures
