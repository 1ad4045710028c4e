#pragma once

// Coaugmented cocommutative differential graded coalgebras and their finite
// dimensional duals.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "linfmap/exactlin.hpp"

namespace linfmap {

/// Sparse element of a tensor power; factors are basis indices, left-associated.
using Tensor = std::map<std::vector<std::size_t>, Rational>;

void add_to(Tensor& t, const std::vector<std::size_t>& factors, const Rational& c);

struct Violation {
  std::string identity;
  std::string witness;
};

struct StructureReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string identity, std::string witness) {
    violations.push_back({std::move(identity), std::move(witness)});
  }
};

/// Homologically graded coalgebra C = Q·1 ⊕ C̄ with diagonal Δ and coderivation δ of degree -1.
class DGCoalgebra {
 public:
  /// diagonal[i] holds Δ(basis i) as two-factor terms; differential[i] is δ(basis i).
  DGCoalgebra(GradedSpace space, const std::string& unit_name, std::vector<Tensor> diagonal,
              std::vector<GradedVector> differential);

  /// The coalgebra Q = ⟨1⟩.
  static DGCoalgebra trivial();

  const GradedSpace& space() const { return *space_; }
  std::shared_ptr<const GradedSpace> space_ptr() const { return space_; }
  std::size_t unit() const { return unit_; }
  const Tensor& diagonal(std::size_t i) const { return diagonal_[i]; }
  const GradedVector& differential(std::size_t i) const { return differential_[i]; }
  bool has_differential() const;

  /// Basis indices of C̄ = ker ε, in basis order.
  std::vector<std::size_t> reduced_indices() const;

 private:
  std::shared_ptr<const GradedSpace> space_;
  std::size_t unit_;
  std::vector<Tensor> diagonal_;
  std::vector<GradedVector> differential_;
};

/// Checks counit, coassociativity, cocommutativity, Δ(1) = 1⊗1, the coderivation law,
/// δ(1) = 0 and δ² = 0. Every failure names a basis element witnessing it.
StructureReport validate(const DGCoalgebra& c);

/// Δ^(factors-1): C → C^{⊗factors}, built as (Δ⊗id⊗⋯⊗id)∘Δ^(factors-2).
/// The reduced variant uses Δ̄c = Δc - c⊗1 - 1⊗c and is zero on the unit.
std::vector<Tensor> iterated_diagonal(const DGCoalgebra& c, int factors, bool reduced);

struct CogenerationResult {
  bool primitively_cogenerated = false;
  /// Least n ≥ 1 with Δ̄^(n) vanishing on each element of C̄.
  std::map<std::string, int> depth;
};

CogenerationResult is_primitively_cogenerated(const DGCoalgebra& c);

/// Cohomologically graded commutative differential graded algebra with unit "1".
/// Products with the unit are implicit; `products` lists the remaining pairs.
class CDGAlgebra {
 public:
  CDGAlgebra(GradedSpace space, const std::string& unit_name,
             std::map<std::pair<std::size_t, std::size_t>, GradedVector> products,
             std::vector<GradedVector> differential);

  const GradedSpace& space() const { return *space_; }
  std::shared_ptr<const GradedSpace> space_ptr() const { return space_; }
  std::size_t unit() const { return unit_; }
  const GradedVector& differential(std::size_t i) const { return differential_[i]; }
  /// Products of non-unit pairs, completed by graded commutativity.
  const std::map<std::pair<std::size_t, std::size_t>, GradedVector>& products() const { return products_; }

  GradedVector multiply(std::size_t a, std::size_t b) const;
  GradedVector multiply(const GradedVector& a, const GradedVector& b) const;
  GradedVector apply_differential(const GradedVector& v) const;

 private:
  std::shared_ptr<const GradedSpace> space_;
  std::size_t unit_;
  std::map<std::pair<std::size_t, std::size_t>, GradedVector> products_;
  std::vector<GradedVector> differential_;
};

/// Associativity, graded commutativity, Leibniz rule, d² = 0, connectivity.
StructureReport validate(const CDGAlgebra& b);

/// Name of the dual basis element: toggles a trailing '^'; the unit keeps its name.
std::string dual_name(const std::string& name);

/// B^♯ with ⟨Δγ, b⊗b'⟩ = ⟨γ, b·b'⟩ under ⟨β⊗β', b⊗b'⟩ = (-1)^{|β'||b|} β(b)β'(b'),
/// and ⟨δγ, b⟩ = (-1)^{|γ|} ⟨γ, db⟩. Degrees are reread homologically.
DGCoalgebra dualize_cdga(const CDGAlgebra& b);

/// Inverse of dualize_cdga for finite dimensional coalgebras.
CDGAlgebra dualize_coalgebra(const DGCoalgebra& c);

/// Builtin coalgebras.
DGCoalgebra sphere_coalgebra(int degree, const std::string& name = "alpha");
/// H_*(CP^n): u_0 = 1, ..., u_n with |u_i| = 2i and Δu_r = Σ u_i ⊗ u_j.
DGCoalgebra projective_coalgebra(int n, const std::string& prefix = "u");

}  // namespace linfmap
