#pragma once

// L∞ algebras stored as finite bracket tables over a graded basis.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "linfmap/exactlin.hpp"

namespace linfmap {

/// Basis indices of bracket arguments; canonical tuples are non-decreasing.
using ArgTuple = std::vector<std::size_t>;
using BracketTable = std::map<ArgTuple, GradedVector>;

/// Raised when a twisting series still has a nonzero term at the configured bound.
class NonTerminatingSeries : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class LInfinity {
 public:
  LInfinity(std::shared_ptr<const GradedSpace> space, int max_arity);
  LInfinity(GradedSpace space, int max_arity)
      : LInfinity(std::make_shared<const GradedSpace>(std::move(space)), max_arity) {}

  const GradedSpace& space() const { return *space_; }
  std::shared_ptr<const GradedSpace> space_ptr() const { return space_; }
  int max_arity() const { return max_arity_; }

  /// Adds value to ℓ_k(args) for arguments in any order. Throws if the arity exceeds
  /// max_arity, the degree is not Σ|x_i| + k - 2, or skew symmetry forces the entry to vanish.
  void add_bracket(const ArgTuple& args, const GradedVector& value);

  /// Stored table of arity k (canonical tuples only, no zero values).
  const BracketTable& table(int k) const;
  /// Arities with at least one nonzero entry, ascending.
  std::vector<int> arities() const;
  std::size_t entry_count() const;

  /// ℓ_k on basis elements in any order.
  GradedVector bracket(const ArgTuple& args) const;

  bool operator==(const LInfinity& other) const;

 private:
  std::shared_ptr<const GradedSpace> space_;
  int max_arity_;
  std::map<int, BracketTable> tables_;
};

/// Same basis names and degrees (in any order) and the same brackets; max_arity is ignored.
bool same_brackets(const LInfinity& a, const LInfinity& b);

/// Sorts args and returns the sign s with [args] = s·[sorted args].
int canonicalize(ArgTuple& args, const GradedSpace& space);

/// Multilinear ℓ_k on arbitrary vectors. k = args.size() must be positive.
GradedVector eval_bracket(const LInfinity& L, const std::vector<GradedVector>& args);

struct JacobiViolation {
  int n = 0;
  ArgTuple args;
  GradedVector value;
};

struct JacobiReport {
  std::vector<JacobiViolation> violations;
  std::size_t tuples_checked = 0;
  bool ok() const { return violations.empty(); }
};

/// Generalized Jacobi identities for n = 1..n_max. Only tuples on which some composite
/// ℓ_j∘ℓ_i can be nonzero are evaluated; all others vanish identically.
JacobiReport check_jacobi(const LInfinity& L, int n_max);

/// Same identity evaluated on one argument tuple.
GradedVector jacobi_sum(const LInfinity& L, const ArgTuple& args);

struct CurvatureResult {
  GradedVector value;
  /// Some term above j_max was nonzero and has been dropped.
  bool truncated = false;
};

/// 𝓕(z) = ℓ_1 z + Σ_{k≥2} (1/k!) ℓ_k(z,…,z), summed up to arity min(j_max, max_arity).
CurvatureResult curvature(const LInfinity& L, const GradedVector& z, int j_max = 16);

bool is_maurer_cartan(const LInfinity& L, const GradedVector& z, int j_max = 16);

/// ℓ_k^z(x_1..x_k) = Σ_j (1/j!) ℓ_{j+k}(z^{∧j}, x_1..x_k). Throws AlgebraError when z is
/// not a Maurer–Cartan element and NonTerminatingSeries when a term beyond j_max is nonzero.
LInfinity twist(const LInfinity& L, const GradedVector& z, int j_max = 16);

/// Twisting without the Maurer–Cartan precondition (the result is generally curved).
LInfinity twist_unchecked(const LInfinity& L, const GradedVector& z, int j_max = 16);

struct LowerCentralSeries {
  /// graded[i-1] = G^i, the span of brackets of arity ≥ 2 with inputs from G^{i_1},…,G^{i_k},
  /// i_1 + ⋯ + i_k = i; G^1 = L.
  std::vector<Subspace> graded;
  /// filtration[i-1] = F^i = G^i + G^{i+1} + ⋯, decreasing.
  std::vector<Subspace> filtration;
  /// True when G^i = 0 is certified for every i past the computed range.
  bool complete = false;
};

LowerCentralSeries lower_central_series(const LInfinity& L, int i_max);

/// Largest i with F^i ≠ 0; nullopt if nilpotency could not be certified below i_max.
std::optional<int> nilpotency_order(const LInfinity& L, int i_max = 32);

bool is_minimal(const LInfinity& L);

/// Largest n ≤ len_max with W^n ≠ 0, where W^1 = L and W^{n+1} = ℓ_2(L, W^n).
/// Throws AlgebraError for non-minimal input.
int whitehead_length(const LInfinity& L, int len_max = 32);

/// Homology of (L, ℓ_1) over all degrees of L with the bracket induced by ℓ_2 on classes.
/// Basis elements are named after normalized class representatives.
struct HomologyLieModel {
  LInfinity algebra;
  std::vector<GradedVector> representatives;
};

HomologyLieModel homology_lie_model(const LInfinity& L);

}  // namespace linfmap
