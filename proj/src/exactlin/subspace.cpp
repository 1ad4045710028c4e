#include <algorithm>

#include "linfmap/exactlin.hpp"

namespace linfmap {

GradedVector Subspace::reduce(const GradedVector& v) const {
  GradedVector r = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rational c = r.coefficient(pivots_[k]);
    if (c != 0) r.add_scaled(rows_[k], -c);
  }
  return r;
}

bool Subspace::insert(const GradedVector& v) {
  GradedVector r = reduce(v);
  if (r.is_zero()) return false;
  const std::size_t pivot = r.terms().begin()->first;
  r *= Rational(1) / r.terms().begin()->second;
  for (auto& row : rows_) {
    Rational c = row.coefficient(pivot);
    if (c != 0) row.add_scaled(r, -c);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto offset = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + offset, std::move(r));
  return true;
}

bool Subspace::contains_subspace(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const auto& row) { return contains(row); });
}

std::optional<std::vector<Rational>> Subspace::coordinates(const GradedVector& v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<Rational> out;
  out.reserve(pivots_.size());
  for (std::size_t p : pivots_) out.push_back(v.coefficient(p));
  return out;
}

Subspace span_of(std::span<const GradedVector> vectors) {
  Subspace s;
  for (const auto& v : vectors) s.insert(v);
  return s;
}

namespace {

std::size_t offset_for(std::span<const GradedVector> vectors, const GradedVector* extra = nullptr) {
  std::size_t m = 0;
  for (const auto& v : vectors)
    if (!v.is_zero()) m = std::max(m, v.terms().rbegin()->first + 1);
  if (extra && !extra->is_zero()) m = std::max(m, extra->terms().rbegin()->first + 1);
  return m;
}

// Rows (image_i, e_i) in a combined coordinate system; image coordinates come first
// so that echelon pivots prefer them.
Subspace augmented(std::span<const GradedVector> images, std::size_t m) {
  Subspace s;
  for (std::size_t i = 0; i < images.size(); ++i) {
    GradedVector row = images[i];
    row.add_term(m + i, 1);
    s.insert(row);
  }
  return s;
}

}  // namespace

std::vector<GradedVector> kernel_basis(std::span<const GradedVector> images) {
  const std::size_t m = offset_for(images);
  Subspace s = augmented(images, m);
  std::vector<GradedVector> out;
  for (std::size_t k = 0; k < s.dimension(); ++k) {
    if (s.pivots()[k] < m) continue;
    GradedVector v;
    for (const auto& [i, c] : s.basis()[k].terms()) v.add_term(i - m, c);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Rational>> solve_in_span(std::span<const GradedVector> generators,
                                                   const GradedVector& target) {
  const std::size_t m = offset_for(generators, &target);
  Subspace s = augmented(generators, m);
  GradedVector r = s.reduce(target);
  std::vector<Rational> coeffs(generators.size());
  for (const auto& [i, c] : r.terms()) {
    if (i < m) return std::nullopt;
    coeffs[i - m] = -c;
  }
  return coeffs;
}

}  // namespace linfmap
