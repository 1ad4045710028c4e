#include <algorithm>
#include <sstream>

#include "linfmap/exactlin.hpp"

namespace linfmap {

GradedSpace::GradedSpace(std::vector<BasisElement> basis) : basis_(std::move(basis)) {
  index_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].name.empty()) throw AlgebraError("basis element with empty name");
    if (!index_.emplace(basis_[i].name, i).second)
      throw AlgebraError("duplicate basis element '" + basis_[i].name + "'");
  }
}

std::optional<std::size_t> GradedSpace::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GradedSpace::index_of(const std::string& name) const {
  auto found = find(name);
  if (!found) throw AlgebraError("unknown basis element '" + name + "'");
  return *found;
}

std::vector<std::size_t> GradedSpace::indices_in_degree(int degree) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].degree == degree) out.push_back(i);
  return out;
}

std::optional<int> GradedSpace::min_degree() const {
  if (basis_.empty()) return std::nullopt;
  return std::min_element(basis_.begin(), basis_.end(),
                          [](const auto& a, const auto& b) { return a.degree < b.degree; })
      ->degree;
}

std::optional<int> GradedSpace::max_degree() const {
  if (basis_.empty()) return std::nullopt;
  return std::max_element(basis_.begin(), basis_.end(),
                          [](const auto& a, const auto& b) { return a.degree < b.degree; })
      ->degree;
}

GradedSpace suspend(const GradedSpace& space) {
  std::vector<BasisElement> out;
  out.reserve(space.size());
  const std::string prefix = "s^-1(";
  for (const auto& e : space.basis()) {
    // Undo a previous desuspension instead of stacking decorations.
    if (e.name.starts_with(prefix) && e.name.ends_with(")"))
      out.push_back({e.name.substr(prefix.size(), e.name.size() - prefix.size() - 1), e.degree + 1});
    else
      out.push_back({"s(" + e.name + ")", e.degree + 1});
  }
  return GradedSpace(std::move(out));
}

GradedSpace desuspend(const GradedSpace& space) {
  std::vector<BasisElement> out;
  out.reserve(space.size());
  for (const auto& e : space.basis()) {
    if (e.name.starts_with("s(") && e.name.ends_with(")"))
      out.push_back({e.name.substr(2, e.name.size() - 3), e.degree - 1});
    else
      out.push_back({"s^-1(" + e.name + ")", e.degree - 1});
  }
  return GradedSpace(std::move(out));
}

// ---------------------------------------------------------------------------

GradedVector GradedVector::unit(std::size_t index, Rational coefficient) {
  GradedVector v;
  v.add_term(index, coefficient);
  return v;
}

Rational GradedVector::coefficient(std::size_t index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GradedVector::add_term(std::size_t index, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void GradedVector::add_scaled(const GradedVector& other, const Rational& factor) {
  if (factor == 0) return;
  for (const auto& [i, c] : other.terms_) add_term(i, c * factor);
}

GradedVector& GradedVector::operator+=(const GradedVector& other) {
  for (const auto& [i, c] : other.terms_) add_term(i, c);
  return *this;
}

GradedVector& GradedVector::operator-=(const GradedVector& other) {
  for (const auto& [i, c] : other.terms_) add_term(i, -c);
  return *this;
}

GradedVector& GradedVector::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [i, c] : terms_) c *= factor;
  return *this;
}

std::optional<int> GradedVector::degree(const GradedSpace& space) const {
  std::optional<int> deg;
  for (const auto& [i, c] : terms_) {
    if (i >= space.size()) throw AlgebraError("vector index outside its space");
    if (deg && *deg != space.degree(i)) throw AlgebraError("vector is not homogeneous");
    deg = space.degree(i);
  }
  return deg;
}

int GradedVector::normalize_sign() {
  if (terms_.empty() || terms_.begin()->second > 0) return 1;
  for (auto& [i, c] : terms_) c = -c;
  return -1;
}

GradedVector operator+(GradedVector a, const GradedVector& b) { return a += b; }
GradedVector operator-(GradedVector a, const GradedVector& b) { return a -= b; }
GradedVector operator*(const Rational& factor, GradedVector v) { return v *= factor; }

std::string format_vector(const GradedVector& v, const GradedSpace& space) {
  if (v.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [i, c] : v.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) out << format_rational(mag) << " ";
    out << space.name(i);
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

GradedLinearMap::GradedLinearMap(std::shared_ptr<const GradedSpace> source,
                                 std::shared_ptr<const GradedSpace> target, int degree,
                                 std::vector<GradedVector> columns)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree), columns_(std::move(columns)) {
  if (columns_.size() != source_->size()) throw AlgebraError("linear map: column count mismatch");
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    auto d = columns_[i].degree(*target_);
    if (d && *d != source_->degree(i) + degree_)
      throw AlgebraError("linear map: image of '" + source_->name(i) + "' has wrong degree");
  }
}

GradedLinearMap GradedLinearMap::zero(std::shared_ptr<const GradedSpace> source,
                                      std::shared_ptr<const GradedSpace> target, int degree) {
  const std::size_t n = source->size();
  return GradedLinearMap(std::move(source), std::move(target), degree, std::vector<GradedVector>(n));
}

GradedVector GradedLinearMap::apply(const GradedVector& v) const {
  GradedVector out;
  for (const auto& [i, c] : v.terms()) out.add_scaled(columns_.at(i), c);
  return out;
}

bool GradedLinearMap::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.is_zero(); });
}

GradedLinearMap compose(const GradedLinearMap& outer, const GradedLinearMap& inner) {
  if (!(inner.target() == outer.source())) throw AlgebraError("compose: spaces do not match");
  std::vector<GradedVector> cols;
  cols.reserve(inner.source().size());
  for (const auto& col : inner.columns()) cols.push_back(outer.apply(col));
  return GradedLinearMap(inner.source_ptr(), outer.target_ptr(), inner.degree() + outer.degree(), std::move(cols));
}

}  // namespace linfmap
