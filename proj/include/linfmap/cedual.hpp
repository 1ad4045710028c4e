#pragma once

// Free graded-commutative algebras (ΛV, d) and the correspondence L ↔ C^∞(L).

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "linfmap/linf.hpp"

namespace linfmap {

/// Sorted multiset of generator indices.
using Monomial = std::vector<std::size_t>;
using Polynomial = std::map<Monomial, Rational>;

/// (ΛV, d) with generators in cohomological degrees ≥ 1, ordered by (degree, name).
class SullivanCDGA {
 public:
  SullivanCDGA() = default;
  /// differential[i] = d(v_i). Throws if generators are unsorted, of degree < 1, or if a
  /// differential is not homogeneous of degree |v_i| + 1.
  SullivanCDGA(GradedSpace generators, std::vector<Polynomial> differential);

  /// Builds from generators in any order with d given by generator names.
  static SullivanCDGA from_names(std::vector<BasisElement> generators,
                                 const std::map<std::string, std::vector<std::pair<std::vector<std::string>, Rational>>>& d);

  const GradedSpace& generators() const { return *generators_; }
  const Polynomial& differential(std::size_t i) const { return differential_[i]; }
  /// Word-length j part of d(v_i).
  Polynomial differential_part(std::size_t i, std::size_t j) const;

  int degree(const Monomial& m) const;
  /// Sign s and sorted monomial with v_{m_1}⋯v_{m_k} = s·v_sorted; s = 0 if an odd generator repeats.
  std::pair<int, Monomial> normalize(Monomial m) const;
  Polynomial multiply(const Polynomial& a, const Polynomial& b) const;
  /// d extended as a derivation of degree +1.
  Polynomial apply_d(const Polynomial& p) const;
  /// Generators v with d²v ≠ 0 (d² is a derivation, so this decides d² = 0).
  std::vector<std::size_t> d_squared_failures() const;
  /// d(V) ⊂ Λ^{≥2}V.
  bool decomposable() const;

  std::string format(const Polynomial& p) const;
  bool operator==(const SullivanCDGA& other) const;

 private:
  std::shared_ptr<const GradedSpace> generators_ = std::make_shared<const GradedSpace>();
  std::vector<Polynomial> differential_;
};

Polynomial monomial_polynomial(const Monomial& m, const Rational& c = 1);

/// Sign exponent |v| + Σ_{k<j} (j-k)|sx_k| of the pairing ⟨d_j v; sx_1∧⋯∧sx_j⟩ = ±⟨v; s[x_1,…,x_j]⟩.
int pairing_exponent(int v_degree, const std::vector<int>& x_degrees);

/// Sign exponent Σ_{a<b} |v_a||v_b| of ⟨v_1⋯v_j; sx_1∧⋯∧sx_j⟩ for v_a dual to sx_a, the tensor
/// pairing convention ⟨β⊗β', b⊗b'⟩ = (-1)^{|β'||b|} β(b)β'(b') applied factor by factor.
int monomial_pairing_exponent(const std::vector<int>& v_degrees);

/// C^∞(L): generator "x^" of degree |x| + 1 for each basis element x, and
/// d_j v = Σ over canonical tuples T of (-1)^{ε + p} ⟨v; sℓ_j(x_T)⟩ / Π m_i! · v_T, where p is the
/// monomial pairing exponent and m_i are the multiplicities in T.
/// Throws for negative degrees or degrees above degree_bound.
SullivanCDGA cdga_of(const LInfinity& L, int degree_bound = 64);

/// Inverse of cdga_of; the basis of L follows the generator order, names lose a trailing '^'.
LInfinity linfty_of(const SullivanCDGA& A, int degree_bound = 64);

/// dim H^n(ΛV, d) for n = 0..degree_bound. Throws if some degree needs more than max_monomials.
std::vector<std::size_t> cdga_cohomology(const SullivanCDGA& A, int degree_bound,
                                         std::size_t max_monomials = 20000);

/// Monomials of total degree n, in lexicographic order.
std::vector<Monomial> monomials_of_degree(const SullivanCDGA& A, int n, std::size_t max_monomials = 20000);

}  // namespace linfmap
