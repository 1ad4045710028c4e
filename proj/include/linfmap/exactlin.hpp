#pragma once

// Exact rational linear algebra over graded bases: the arithmetic layer shared
// by every other part of linfmap.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace linfmap {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" text ("p" for integers).
std::string format_rational(const Rational& value);

/// Thrown when an input violates a structural precondition (degree, size, ...).
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BasisElement {
  std::string name;
  int degree = 0;

  bool operator==(const BasisElement&) const = default;
};

/// Finite ordered basis of a Z-graded rational vector space.
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::vector<BasisElement> basis);

  std::size_t size() const { return basis_.size(); }
  bool empty() const { return basis_.empty(); }
  const BasisElement& operator[](std::size_t i) const { return basis_[i]; }
  const std::vector<BasisElement>& basis() const { return basis_; }

  int degree(std::size_t i) const { return basis_[i].degree; }
  const std::string& name(std::size_t i) const { return basis_[i].name; }

  std::optional<std::size_t> find(const std::string& name) const;
  /// Like find() but throws AlgebraError for unknown names.
  std::size_t index_of(const std::string& name) const;

  std::vector<std::size_t> indices_in_degree(int degree) const;
  std::optional<int> min_degree() const;
  std::optional<int> max_degree() const;

  bool operator==(const GradedSpace& other) const { return basis_ == other.basis_; }

 private:
  std::vector<BasisElement> basis_;
  std::unordered_map<std::string, std::size_t> index_;
};

GradedSpace suspend(const GradedSpace& space);
GradedSpace desuspend(const GradedSpace& space);

/// Sparse vector keyed by basis index. Zero coefficients are never stored.
class GradedVector {
 public:
  using Terms = std::map<std::size_t, Rational>;

  GradedVector() = default;
  static GradedVector unit(std::size_t index, Rational coefficient = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Rational coefficient(std::size_t index) const;

  void add_term(std::size_t index, const Rational& coefficient);
  void add_scaled(const GradedVector& other, const Rational& factor);
  GradedVector& operator+=(const GradedVector& other);
  GradedVector& operator-=(const GradedVector& other);
  GradedVector& operator*=(const Rational& factor);

  /// Degree of a homogeneous vector; nullopt for zero. Throws on mixed degrees.
  std::optional<int> degree(const GradedSpace& space) const;

  /// Components whose basis element satisfies the predicate.
  template <typename Pred>
  GradedVector filtered(Pred&& keep) const {
    GradedVector out;
    for (const auto& [i, c] : terms_)
      if (keep(i)) out.terms_.emplace(i, c);
    return out;
  }

  /// Scales so that the first nonzero coefficient is positive; returns the sign used.
  int normalize_sign();

  bool operator==(const GradedVector& other) const { return terms_ == other.terms_; }

 private:
  Terms terms_;
};

GradedVector operator+(GradedVector a, const GradedVector& b);
GradedVector operator-(GradedVector a, const GradedVector& b);
GradedVector operator*(const Rational& factor, GradedVector v);

/// Human-readable linear combination such as "2 x - 1/3 y".
std::string format_vector(const GradedVector& v, const GradedSpace& space);

/// Degree-homogeneous sparse linear map; column i is the image of source basis element i.
class GradedLinearMap {
 public:
  GradedLinearMap(std::shared_ptr<const GradedSpace> source, std::shared_ptr<const GradedSpace> target,
                  int degree, std::vector<GradedVector> columns);
  static GradedLinearMap zero(std::shared_ptr<const GradedSpace> source,
                              std::shared_ptr<const GradedSpace> target, int degree);

  const GradedSpace& source() const { return *source_; }
  const GradedSpace& target() const { return *target_; }
  std::shared_ptr<const GradedSpace> source_ptr() const { return source_; }
  std::shared_ptr<const GradedSpace> target_ptr() const { return target_; }
  int degree() const { return degree_; }
  const GradedVector& column(std::size_t i) const { return columns_[i]; }
  const std::vector<GradedVector>& columns() const { return columns_; }

  GradedVector apply(const GradedVector& v) const;
  bool is_zero() const;

 private:
  std::shared_ptr<const GradedSpace> source_;
  std::shared_ptr<const GradedSpace> target_;
  int degree_;
  std::vector<GradedVector> columns_;
};

/// this∘inner; degrees add.
GradedLinearMap compose(const GradedLinearMap& outer, const GradedLinearMap& inner);

/// Permutation of {1..n} given by its list of images.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  /// 1-based image of the 1-based position i.
  int operator()(std::size_t i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  int sign() const;
  Permutation inverse() const;
  /// (*this ∘ other)(i) = (*this)(other(i)).
  Permutation compose(const Permutation& other) const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Koszul sign for rearranging x_1..x_n into x_σ(1)..x_σ(n), where degrees[m-1] = |x_m|.
/// Product over inversions i<j, σ(i)>σ(j) of (-1)^{|x_σ(i)| |x_σ(j)|}.
int koszul_sign(const Permutation& sigma, std::span<const int> degrees);

/// sgn(σ)·ε_σ, the coefficient relating [x_σ(1),...,x_σ(k)] to [x_1,...,x_k].
int skew_sign(const Permutation& sigma, std::span<const int> degrees);

/// All (i, n-i) shuffles, ordered lexicographically by their first block.
std::vector<Permutation> shuffles(int i, int n);

/// Incrementally maintained reduced row echelon basis of a subspace of Q^dim.
/// Pivot of each row is its smallest index; every other row vanishes at every pivot.
class Subspace {
 public:
  Subspace() = default;

  std::size_t dimension() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  const std::vector<GradedVector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection along the pivots; zero iff v lies in the span.
  GradedVector reduce(const GradedVector& v) const;
  bool contains(const GradedVector& v) const { return reduce(v).is_zero(); }
  /// Adds v to the span; returns true if the dimension grew.
  bool insert(const GradedVector& v);
  bool contains_subspace(const Subspace& other) const;

  /// Coordinates of v in the echelon basis, or nullopt if v is not in the span.
  std::optional<std::vector<Rational>> coordinates(const GradedVector& v) const;

  bool operator==(const Subspace& other) const { return rows_ == other.rows_; }

 private:
  std::vector<GradedVector> rows_;   // sorted by pivot
  std::vector<std::size_t> pivots_;  // ascending
};

Subspace span_of(std::span<const GradedVector> vectors);

/// Kernel of the linear map sending unit vector i to images[i], as an RREF basis.
std::vector<GradedVector> kernel_basis(std::span<const GradedVector> images);

/// Coefficients c with Σ c_i generators[i] = target, or nullopt.
std::optional<std::vector<Rational>> solve_in_span(std::span<const GradedVector> generators,
                                                   const GradedVector& target);

struct DegreeWindow {
  int lo = -2;
  int hi = 12;

  bool contains(int d) const { return lo <= d && d <= hi; }
  /// A degree is trusted when both neighbours lie inside the window.
  bool trusted(int d) const { return contains(d - 1) && contains(d + 1); }
  bool operator==(const DegreeWindow&) const = default;
};

struct HomologyInDegree {
  int degree = 0;
  std::size_t cycles = 0;
  std::size_t boundaries = 0;
  std::size_t dimension = 0;
  bool trusted = false;
  std::vector<GradedVector> representatives;
};

struct HomologyResult {
  std::map<int, HomologyInDegree> degrees;

  std::size_t dimension(int degree) const;
};

/// Homology of a degree -1 differential on a space, computed degree by degree inside the window.
/// Throws AlgebraError if the map is not of degree -1, is not an endomorphism, or fails d∘d = 0.
HomologyResult homology(const GradedLinearMap& d, DegreeWindow window);

}  // namespace linfmap
