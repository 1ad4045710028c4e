#include "linfmap/coalg.hpp"

#include <algorithm>

namespace linfmap {

namespace {

int parity_sign(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

std::string tensor_witness(const GradedSpace& space, std::size_t i) { return space.name(i); }

}  // namespace

void add_to(Tensor& t, const std::vector<std::size_t>& factors, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t.try_emplace(factors, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

DGCoalgebra::DGCoalgebra(GradedSpace space, const std::string& unit_name, std::vector<Tensor> diagonal,
                         std::vector<GradedVector> differential)
    : space_(std::make_shared<const GradedSpace>(std::move(space))),
      diagonal_(std::move(diagonal)),
      differential_(std::move(differential)) {
  unit_ = space_->index_of(unit_name);
  if (space_->degree(unit_) != 0) throw AlgebraError("coalgebra unit must have degree 0");
  if (diagonal_.size() != space_->size()) throw AlgebraError("coalgebra: diagonal size mismatch");
  if (differential_.empty()) differential_.resize(space_->size());
  if (differential_.size() != space_->size()) throw AlgebraError("coalgebra: differential size mismatch");
  for (std::size_t i = 0; i < space_->size(); ++i) {
    for (const auto& [factors, c] : diagonal_[i]) {
      if (factors.size() != 2) throw AlgebraError("coalgebra: diagonal terms need two factors");
      int deg = 0;
      for (auto f : factors) {
        if (f >= space_->size()) throw AlgebraError("coalgebra: diagonal factor out of range");
        deg += space_->degree(f);
      }
      if (deg != space_->degree(i))
        throw AlgebraError("coalgebra: diagonal of '" + space_->name(i) + "' is not homogeneous");
    }
    auto d = differential_[i].degree(*space_);
    if (d && *d != space_->degree(i) - 1)
      throw AlgebraError("coalgebra: differential of '" + space_->name(i) + "' has wrong degree");
  }
}

DGCoalgebra DGCoalgebra::trivial() {
  Tensor unit_diag;
  add_to(unit_diag, {0, 0}, 1);
  return DGCoalgebra(GradedSpace({{"1", 0}}), "1", {unit_diag}, {});
}

bool DGCoalgebra::has_differential() const {
  return std::any_of(differential_.begin(), differential_.end(), [](const auto& v) { return !v.is_zero(); });
}

std::vector<std::size_t> DGCoalgebra::reduced_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < space_->size(); ++i)
    if (i != unit_) out.push_back(i);
  return out;
}

StructureReport validate(const DGCoalgebra& c) {
  StructureReport report;
  const GradedSpace& sp = c.space();
  const std::size_t u = c.unit();

  Tensor unit_expected;
  add_to(unit_expected, {u, u}, 1);
  if (c.diagonal(u) != unit_expected) report.add("diagonal of unit is 1⊗1", sp.name(u));
  if (!c.differential(u).is_zero()) report.add("differential vanishes on unit", sp.name(u));

  for (std::size_t i = 0; i < sp.size(); ++i) {
    const Tensor& delta = c.diagonal(i);

    GradedVector left, right;
    for (const auto& [f, coef] : delta) {
      if (f[0] == u) left.add_term(f[1], coef);
      if (f[1] == u) right.add_term(f[0], coef);
    }
    if (left != GradedVector::unit(i) || right != GradedVector::unit(i))
      report.add("counit", tensor_witness(sp, i));

    Tensor lhs, rhs;
    for (const auto& [f, coef] : delta) {
      for (const auto& [g, c2] : c.diagonal(f[0])) add_to(lhs, {g[0], g[1], f[1]}, coef * c2);
      for (const auto& [g, c2] : c.diagonal(f[1])) add_to(rhs, {f[0], g[0], g[1]}, coef * c2);
    }
    if (lhs != rhs) report.add("coassociativity", tensor_witness(sp, i));

    Tensor twisted;
    for (const auto& [f, coef] : delta)
      add_to(twisted, {f[1], f[0]}, coef * parity_sign(long(sp.degree(f[0])) * sp.degree(f[1])));
    if (twisted != delta) report.add("cocommutativity", tensor_witness(sp, i));

    Tensor d_then_delta, delta_then_d;
    for (const auto& [j, coef] : c.differential(i).terms())
      for (const auto& [f, c2] : c.diagonal(j)) add_to(d_then_delta, f, coef * c2);
    for (const auto& [f, coef] : delta) {
      for (const auto& [j, c2] : c.differential(f[0]).terms()) add_to(delta_then_d, {j, f[1]}, coef * c2);
      const int sign = parity_sign(sp.degree(f[0]));
      for (const auto& [j, c2] : c.differential(f[1]).terms())
        add_to(delta_then_d, {f[0], j}, coef * c2 * sign);
    }
    if (d_then_delta != delta_then_d) report.add("coderivation", tensor_witness(sp, i));

    GradedVector dd;
    for (const auto& [j, coef] : c.differential(i).terms()) dd.add_scaled(c.differential(j), coef);
    if (!dd.is_zero()) report.add("differential squares to zero", tensor_witness(sp, i));
  }
  return report;
}

std::vector<Tensor> iterated_diagonal(const DGCoalgebra& c, int factors, bool reduced) {
  if (factors < 1) throw AlgebraError("iterated_diagonal: need at least one tensor factor");
  const GradedSpace& sp = c.space();
  const std::size_t u = c.unit();

  auto delta_of = [&](std::size_t i) {
    if (!reduced) return c.diagonal(i);
    Tensor t = c.diagonal(i);
    add_to(t, {i, u}, -1);
    add_to(t, {u, i}, -1);
    return t;
  };

  std::vector<Tensor> out(sp.size());
  for (std::size_t i = 0; i < sp.size(); ++i) {
    if (reduced && i == u) continue;
    add_to(out[i], {i}, 1);
  }
  for (int step = 1; step < factors; ++step) {
    for (auto& t : out) {
      Tensor next;
      for (const auto& [f, coef] : t) {
        for (const auto& [g, c2] : delta_of(f[0])) {
          std::vector<std::size_t> key{g[0], g[1]};
          key.insert(key.end(), f.begin() + 1, f.end());
          add_to(next, key, coef * c2);
        }
      }
      t = std::move(next);
    }
  }
  return out;
}

CogenerationResult is_primitively_cogenerated(const DGCoalgebra& c) {
  CogenerationResult result;
  const auto reduced = c.reduced_indices();
  const int limit = static_cast<int>(reduced.size()) + 2;
  std::map<std::size_t, int> depth;
  for (int n = 1; n <= limit && depth.size() < reduced.size(); ++n) {
    const auto diag = iterated_diagonal(c, n + 1, true);
    for (std::size_t i : reduced)
      if (!depth.count(i) && diag[i].empty()) depth[i] = n;
  }
  result.primitively_cogenerated = depth.size() == reduced.size();
  for (const auto& [i, n] : depth) result.depth[c.space().name(i)] = n;
  return result;
}

// ---------------------------------------------------------------------------

CDGAlgebra::CDGAlgebra(GradedSpace space, const std::string& unit_name,
                       std::map<std::pair<std::size_t, std::size_t>, GradedVector> products,
                       std::vector<GradedVector> differential)
    : space_(std::make_shared<const GradedSpace>(std::move(space))),
      products_(std::move(products)),
      differential_(std::move(differential)) {
  unit_ = space_->index_of(unit_name);
  if (space_->degree(unit_) != 0) throw AlgebraError("algebra unit must have degree 0");
  if (differential_.empty()) differential_.resize(space_->size());
  if (differential_.size() != space_->size()) throw AlgebraError("algebra: differential size mismatch");
  for (const auto& [key, value] : products_) {
    if (key.first == unit_ || key.second == unit_) throw AlgebraError("algebra: unit products are implicit");
    auto d = value.degree(*space_);
    if (d && *d != space_->degree(key.first) + space_->degree(key.second))
      throw AlgebraError("algebra: product is not homogeneous");
  }
  // Complete the table by graded commutativity where only one order was given.
  auto given = products_;
  for (const auto& [key, value] : given) {
    std::pair<std::size_t, std::size_t> swapped{key.second, key.first};
    if (!products_.count(swapped))
      products_.emplace(swapped, Rational(parity_sign(long(space_->degree(key.first)) *
                                                      space_->degree(key.second))) *
                                     value);
  }
  for (std::size_t i = 0; i < space_->size(); ++i) {
    auto d = differential_[i].degree(*space_);
    if (d && *d != space_->degree(i) + 1)
      throw AlgebraError("algebra: differential of '" + space_->name(i) + "' has wrong degree");
  }
}

GradedVector CDGAlgebra::multiply(std::size_t a, std::size_t b) const {
  if (a == unit_) return GradedVector::unit(b);
  if (b == unit_) return GradedVector::unit(a);
  auto it = products_.find({a, b});
  return it == products_.end() ? GradedVector{} : it->second;
}

GradedVector CDGAlgebra::multiply(const GradedVector& a, const GradedVector& b) const {
  GradedVector out;
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms()) out.add_scaled(multiply(i, j), ci * cj);
  return out;
}

GradedVector CDGAlgebra::apply_differential(const GradedVector& v) const {
  GradedVector out;
  for (const auto& [i, c] : v.terms()) out.add_scaled(differential_[i], c);
  return out;
}

StructureReport validate(const CDGAlgebra& b) {
  StructureReport report;
  const GradedSpace& sp = b.space();
  const std::size_t n = sp.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (sp.degree(i) < 0 || (sp.degree(i) == 0 && i != b.unit()))
      report.add("connected and non-negatively graded", sp.name(i));
    if (!b.apply_differential(b.differential(i)).is_zero()) report.add("d squares to zero", sp.name(i));
  }
  if (!b.differential(b.unit()).is_zero()) report.add("d vanishes on unit", sp.name(b.unit()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const GradedVector ij = b.multiply(i, j);
      const int s = parity_sign(long(sp.degree(i)) * sp.degree(j));
      if (ij != Rational(s) * b.multiply(j, i)) report.add("graded commutativity", sp.name(i) + "*" + sp.name(j));
      GradedVector leibniz = b.multiply(b.differential(i), GradedVector::unit(j));
      leibniz.add_scaled(b.multiply(GradedVector::unit(i), b.differential(j)), parity_sign(sp.degree(i)));
      if (b.apply_differential(ij) != leibniz) report.add("Leibniz rule", sp.name(i) + "*" + sp.name(j));
      for (std::size_t k = 0; k < n; ++k) {
        if (b.multiply(ij, GradedVector::unit(k)) != b.multiply(GradedVector::unit(i), b.multiply(j, k)))
          report.add("associativity", sp.name(i) + "*" + sp.name(j) + "*" + sp.name(k));
      }
    }
  }
  return report;
}

std::string dual_name(const std::string& name) {
  if (name == "1") return name;
  if (name.size() > 1 && name.back() == '^') return name.substr(0, name.size() - 1);
  return name + "^";
}

DGCoalgebra dualize_cdga(const CDGAlgebra& b) {
  const GradedSpace& sp = b.space();
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    if (sp.degree(i) < 0 || (sp.degree(i) == 0 && i != b.unit()))
      throw AlgebraError("dualize_cdga: algebra must be connected and non-negatively graded");
    basis.push_back({dual_name(sp.name(i)), sp.degree(i)});
  }
  std::vector<Tensor> diagonal(sp.size());
  std::vector<GradedVector> differential(sp.size());
  for (std::size_t i = 0; i < sp.size(); ++i) {
    for (std::size_t j = 0; j < sp.size(); ++j) {
      const int s = parity_sign(long(sp.degree(i)) * sp.degree(j));
      const GradedVector prod = b.multiply(i, j);
      for (const auto& [k, coef] : prod.terms()) add_to(diagonal[k], {i, j}, coef * s);
    }
    for (const auto& [k, coef] : b.differential(i).terms())
      differential[k].add_term(i, coef * parity_sign(sp.degree(k)));
  }
  return DGCoalgebra(GradedSpace(std::move(basis)), dual_name(sp.name(b.unit())), std::move(diagonal),
                     std::move(differential));
}

CDGAlgebra dualize_coalgebra(const DGCoalgebra& c) {
  const GradedSpace& sp = c.space();
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < sp.size(); ++i) basis.push_back({dual_name(sp.name(i)), sp.degree(i)});
  std::map<std::pair<std::size_t, std::size_t>, GradedVector> products;
  std::vector<GradedVector> differential(sp.size());
  for (std::size_t k = 0; k < sp.size(); ++k) {
    for (const auto& [f, coef] : c.diagonal(k)) {
      if (f[0] == c.unit() || f[1] == c.unit()) continue;
      products[{f[0], f[1]}].add_term(k, coef * parity_sign(long(sp.degree(f[0])) * sp.degree(f[1])));
    }
    for (const auto& [j, coef] : c.differential(k).terms())
      differential[j].add_term(k, coef * parity_sign(sp.degree(k)));
  }
  std::erase_if(products, [](const auto& kv) { return kv.second.is_zero(); });
  return CDGAlgebra(GradedSpace(std::move(basis)), dual_name(sp.name(c.unit())), std::move(products),
                    std::move(differential));
}

DGCoalgebra sphere_coalgebra(int degree, const std::string& name) {
  if (degree <= 0) throw AlgebraError("sphere_coalgebra: degree must be positive");
  std::vector<Tensor> diag(2);
  add_to(diag[0], {0, 0}, 1);
  add_to(diag[1], {1, 0}, 1);
  add_to(diag[1], {0, 1}, 1);
  return DGCoalgebra(GradedSpace({{"1", 0}, {name, degree}}), "1", std::move(diag), {});
}

DGCoalgebra projective_coalgebra(int n, const std::string& prefix) {
  if (n < 0) throw AlgebraError("projective_coalgebra: n must be non-negative");
  std::vector<BasisElement> basis{{"1", 0}};
  for (int i = 1; i <= n; ++i) basis.push_back({prefix + std::to_string(i), 2 * i});
  std::vector<Tensor> diag(n + 1);
  for (int r = 0; r <= n; ++r)
    for (int i = 0; i <= r; ++i) add_to(diag[r], {std::size_t(i), std::size_t(r - i)}, 1);
  return DGCoalgebra(GradedSpace(std::move(basis)), "1", std::move(diag), {});
}

}  // namespace linfmap
