#pragma once

// Convolution L∞ structures on Hom(C, L) and Hom(C̄, L), Maurer–Cartan twisting,
// truncations and the invariants of the resulting mapping-space models.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linfmap/coalg.hpp"
#include "linfmap/linf.hpp"

namespace linfmap {

struct ConvolutionAlgebra {
  DGCoalgebra coalgebra;
  LInfinity target;
  bool reduced = false;
  DegreeWindow window;
  /// Basis "c->x" of degree |x| - |c|, ordered by (degree, coalgebra index, target index).
  std::shared_ptr<const GradedSpace> hom_space;
  /// (coalgebra index, target index) of every Hom basis element.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  LInfinity brackets;

  std::optional<std::size_t> index_of(std::size_t c, std::size_t x) const;
  std::size_t index_of(const std::string& c, const std::string& x) const;
  /// Hom element sending c to x (by names), as a vector.
  GradedVector single(const std::string& c, const std::string& x, const Rational& coef = 1) const;
  /// f(c) ∈ L for a Hom vector f and coalgebra basis index c.
  GradedVector evaluate(const GradedVector& f, std::size_t c) const;
  /// The Hom vector of a linear map C → L (its components on 1 are dropped in the reduced case).
  GradedVector from_map(const GradedLinearMap& phi) const;
};

/// ℓ_1(f) = ℓ_1∘f + (-1)^{|f|} f∘δ and, for k ≥ 2,
/// ℓ_k(f_1,…,f_k)(c) = Σ (-1)^{Σ_{a<b}|f_b||c_a|} ℓ_k(f_1(c_1),…,f_k(c_k)) over Δ^(k-1)(c).
/// The reduced variant uses C̄ and Δ̄.
ConvolutionAlgebra build_convolution(const DGCoalgebra& C, const LInfinity& L, bool reduced,
                                     DegreeWindow window = {});

struct MCReport {
  bool ok = false;
  GradedVector curvature;
  /// Coalgebra basis elements on which the curvature is nonzero.
  std::vector<std::string> offending;
};

/// Checks |φ| = -1, φ(1) = 0 and the Maurer–Cartan equation in the convolution algebra.
MCReport mc_check(const ConvolutionAlgebra& A, const GradedVector& phi, int j_max = 16);

/// The same algebra with brackets ℓ_k^φ.
ConvolutionAlgebra twist_convolution(const ConvolutionAlgebra& A, const GradedVector& phi, int j_max = 16);

/// Sub-L∞ algebra of a convolution algebra: whole in degrees > cut, cycles of ℓ_1 in degree cut.
struct TruncatedModel {
  LInfinity algebra;
  /// Hom vector of each basis element of the truncated algebra.
  std::vector<GradedVector> embedding;
  int cut = 0;
};

TruncatedModel truncate(const ConvolutionAlgebra& A, int cut);
inline TruncatedModel truncate_nonneg(const ConvolutionAlgebra& A) { return truncate(A, 0); }
inline TruncatedModel truncate_universal_cover(const ConvolutionAlgebra& A) { return truncate(A, 1); }

struct MappingSpaceInvariants {
  /// Homology of (truncated model, ℓ_1^φ) per degree of the window.
  std::map<int, std::size_t> homotopy_dims;
  std::map<int, bool> trusted;
  /// Names of sign-normalized class representatives, by degree.
  std::map<int, std::vector<std::string>> generators;
  std::optional<int> nil_twisted;
  std::optional<int> nil_untwisted;
  std::optional<int> nil_target;
  bool twisted_minimal = false;
  /// Whitehead length of the homology of the twisted truncated model.
  int whitehead = 0;
  /// Whether every bracket of class representatives (arity ≥ 2) is a boundary;
  /// nullopt when there are too many classes to enumerate.
  std::optional<bool> induced_brackets_vanish;
};

MappingSpaceInvariants mapping_space_invariants(const ConvolutionAlgebra& untwisted, const GradedVector& phi,
                                                int cut, int j_max = 16);

}  // namespace linfmap
