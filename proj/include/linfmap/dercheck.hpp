#pragma once

// φ-derivations Der_φ(ΛV, B), their brackets, and the comparison with the convolution
// model through Θ and ∇. Used only as an oracle.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "linfmap/cedual.hpp"
#include "linfmap/coalg.hpp"
#include "linfmap/convo.hpp"

namespace linfmap {

/// (ΛV, d), a CDGA B and a CDGA morphism φ: ΛV → B given on generators.
struct DerivationContext {
  SullivanCDGA base;
  CDGAlgebra target;
  /// phi[i] = φ(v_i) ∈ B.
  std::vector<GradedVector> phi;

  /// φ on a monomial, multiplied in B.
  GradedVector phi_of(const Monomial& m) const;
  /// B is a CDGA, φ is degree-preserving and φ∘d = d_B∘φ on generators; throws otherwise.
  void validate() const;
};

/// θ: ΛV → B lowering degree by `degree`, determined by its values on generators through
/// θ(vw) = θ(v)φ(w) + (-1)^{n|v|} φ(v)θ(w).
struct PhiDerivation {
  std::shared_ptr<const DerivationContext> context;
  std::vector<GradedVector> values;
  int degree = 0;

  static PhiDerivation zero(std::shared_ptr<const DerivationContext> ctx, int degree);
  /// v_i ↦ b_k, degree |v_i| - |b_k|.
  static PhiDerivation elementary(std::shared_ptr<const DerivationContext> ctx, std::size_t v, std::size_t b,
                                  const Rational& c = 1);

  GradedVector apply(const Monomial& m) const;
  GradedVector apply(const Polynomial& p) const;
  bool is_zero() const;
};

/// δθ = d_B∘θ + (-1)^{n+1} θ∘d.
PhiDerivation derivation_delta(const PhiDerivation& theta);

/// [θ_1,…,θ_j](v) = (-1)^{p_1+⋯+p_j-1} Σ ε φ(rest)θ_1(v_{i_1})⋯θ_j(v_{i_j}) over the monomials of dv
/// and ordered selections of j distinct factor positions; ε is the Koszul sign of moving the
/// selected factors to the end in order and passing each θ_a over the factors before it.
PhiDerivation derivation_bracket(const std::vector<PhiDerivation>& thetas);

/// Elements of Hom(V⊗B^♯, Q), keyed by (generator index, B basis index).
using PairingMatrix = std::map<std::pair<std::size_t, std::size_t>, Rational>;

/// Θ(θ)(v⊗β) = (-1)^{|β|(|v|+|θ|)} β(θ(v)).
PairingMatrix theta(const PhiDerivation& theta);

/// ∇g(v⊗β) = (-1)^{|v||g|} ⟨v; g(β)⟩ for g = s∘f, f ∈ Hom(B^♯, L) a vector of the convolution
/// algebra A = Hom(B^♯, L) of degree f_degree (so |g| = f_degree + 1).
/// A must be built on dualize_cdga(B) and linfty_of(ΛV), whose bases follow those of B and V.
PairingMatrix nabla(const ConvolutionAlgebra& A, const GradedVector& f, int f_degree);

/// The Hom(B^♯, L) element f with ∇(s f) = Θ(θ); it has degree |θ| - 1.
GradedVector derivation_to_hom(const ConvolutionAlgebra& A, const PhiDerivation& theta);

/// Maurer–Cartan element of Hom(B^♯, L) matching φ: ∇(sΦ) = Θ(φ) with φ read as a degree 0 map.
GradedVector phi_to_hom(const ConvolutionAlgebra& A, const DerivationContext& ctx);

/// s^{-1}Der_φ(ΛV, B) as an L∞ algebra on the elementary derivations "v->b" (degree |v| - |b| - 1),
/// with ℓ_1(s^{-1}θ) = -s^{-1}δθ and ℓ_j(s^{-1}θ_1,…) = -(-1)^α s^{-1}[θ_1,…,θ_j],
/// α = Σ_{n<j} (j-n)|θ_n|.
LInfinity derivation_linfty(const DerivationContext& ctx);

struct CrosscheckMismatch {
  int arity = 0;
  std::vector<std::string> arguments;
  /// Both sides as Hom(B^♯, L) vectors, formatted.
  std::string derivation_side;
  std::string convolution_side;
  std::string trace;
};

struct CrosscheckReport {
  std::size_t tuples_checked = 0;
  std::vector<CrosscheckMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Compares, for every tuple of elementary derivations of arity ≤ max_arity whose desuspensions
/// have degrees in the window, Ψ(ℓ_j(s^{-1}θ_1,…,s^{-1}θ_j)) with ℓ_j^Φ(Ψθ_1,…,Ψθ_j), where
/// Ψ = derivation_to_hom and the ℓ_j of derivation_linfty.
/// A nonzero flipped_arity negates the derivation side at that arity (fault injection).
CrosscheckReport crosscheck(const DerivationContext& ctx, DegreeWindow window = {-2, 10}, int max_arity = 3,
                            int flipped_arity = 0);

}  // namespace linfmap
