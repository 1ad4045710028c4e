#include "linfmap/cedual.hpp"

#include <algorithm>

namespace linfmap {

namespace {

bool generator_less(const BasisElement& a, const BasisElement& b) {
  return std::tie(a.degree, a.name) < std::tie(b.degree, b.name);
}

Rational factorial_product(const ArgTuple& sorted) {
  Rational out = 1;
  std::size_t run = 1;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (i < sorted.size() && sorted[i] == sorted[i - 1]) {
      ++run;
      out *= Rational(static_cast<long>(run));
    } else {
      run = 1;
    }
  }
  return out;
}

void add_to(Polynomial& p, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

}  // namespace

Polynomial monomial_polynomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  add_to(p, m, c);
  return p;
}

SullivanCDGA::SullivanCDGA(GradedSpace generators, std::vector<Polynomial> differential)
    : generators_(std::make_shared<const GradedSpace>(std::move(generators))), differential_(std::move(differential)) {
  const GradedSpace& g = *generators_;
  if (differential_.size() != g.size()) throw AlgebraError("differential must be given for every generator");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.degree(i) < 1) throw AlgebraError("generator '" + g.name(i) + "' has degree < 1");
    if (i > 0 && !generator_less(g[i - 1], g[i]))
      throw AlgebraError("generators must be sorted by (degree, name)");
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    Polynomial clean;
    for (const auto& [m, c] : differential_[i]) {
      if (m.empty()) throw AlgebraError("d(" + g.name(i) + ") has a constant term");
      for (auto e : m)
        if (e >= g.size()) throw AlgebraError("monomial index out of range");
      auto [s, sorted] = normalize(m);
      if (degree(sorted) != g.degree(i) + 1)
        throw AlgebraError("d(" + g.name(i) + ") is not of degree " + std::to_string(g.degree(i) + 1));
      add_to(clean, sorted, c * s);
    }
    differential_[i] = std::move(clean);
  }
}

SullivanCDGA SullivanCDGA::from_names(
    std::vector<BasisElement> generators,
    const std::map<std::string, std::vector<std::pair<std::vector<std::string>, Rational>>>& d) {
  std::sort(generators.begin(), generators.end(), generator_less);
  GradedSpace space(generators);
  std::vector<Polynomial> diff(space.size());
  for (const auto& [name, terms] : d) {
    const std::size_t v = space.index_of(name);
    for (const auto& [factors, c] : terms) {
      Monomial m;
      for (const auto& f : factors) m.push_back(space.index_of(f));
      // Factors are multiplied in the order given.
      SullivanCDGA probe;
      probe.generators_ = std::make_shared<const GradedSpace>(space);
      auto [s, sorted] = probe.normalize(m);
      add_to(diff[v], sorted, c * s);
    }
  }
  return SullivanCDGA(std::move(space), std::move(diff));
}

Polynomial SullivanCDGA::differential_part(std::size_t i, std::size_t j) const {
  Polynomial out;
  for (const auto& [m, c] : differential_[i])
    if (m.size() == j) out.emplace(m, c);
  return out;
}

int SullivanCDGA::degree(const Monomial& m) const {
  int d = 0;
  for (auto e : m) d += generators_->degree(e);
  return d;
}

std::pair<int, Monomial> SullivanCDGA::normalize(Monomial m) const {
  int sign = 1;
  for (std::size_t i = 1; i < m.size(); ++i) {
    for (std::size_t j = i; j > 0 && m[j - 1] > m[j]; --j) {
      if ((generators_->degree(m[j - 1]) * generators_->degree(m[j])) % 2 != 0) sign = -sign;
      std::swap(m[j - 1], m[j]);
    }
  }
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i] == m[i - 1] && generators_->degree(m[i]) % 2 != 0) return {0, m};
  return {sign, m};
}

Polynomial SullivanCDGA::multiply(const Polynomial& a, const Polynomial& b) const {
  Polynomial out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      auto [s, sorted] = normalize(std::move(m));
      if (s != 0) add_to(out, sorted, ca * cb * s);
    }
  }
  return out;
}

Polynomial SullivanCDGA::apply_d(const Polynomial& p) const {
  Polynomial out;
  for (const auto& [m, c] : p) {
    int before = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const Rational coef = (before % 2 == 0) ? c : Rational(-c);
      for (const auto& [q, cq] : differential_[m[i]]) {
        Monomial w(m.begin(), m.begin() + i);
        w.insert(w.end(), q.begin(), q.end());
        w.insert(w.end(), m.begin() + i + 1, m.end());
        auto [s, sorted] = normalize(std::move(w));
        if (s != 0) add_to(out, sorted, coef * cq * s);
      }
      before += generators_->degree(m[i]);
    }
  }
  return out;
}

std::vector<std::size_t> SullivanCDGA::d_squared_failures() const {
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < differential_.size(); ++i)
    if (!apply_d(differential_[i]).empty()) bad.push_back(i);
  return bad;
}

bool SullivanCDGA::decomposable() const {
  for (const auto& p : differential_)
    for (const auto& [m, c] : p)
      if (m.size() < 2) return false;
  return true;
}

std::string SullivanCDGA::format(const Polynomial& p) const {
  if (p.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(p.begin(), p.end());
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
  std::string out;
  for (const auto& [m, c] : terms) {
    std::string coef = format_rational(c);
    if (out.empty()) {
      out += coef;
    } else if (coef[0] == '-') {
      out += " - " + coef.substr(1);
    } else {
      out += " + " + coef;
    }
    for (auto e : m) out += "*" + generators_->name(e);
  }
  return out;
}

bool SullivanCDGA::operator==(const SullivanCDGA& other) const {
  return *generators_ == *other.generators_ && differential_ == other.differential_;
}

int pairing_exponent(int v_degree, const std::vector<int>& x_degrees) {
  const int j = static_cast<int>(x_degrees.size());
  int e = v_degree;
  for (int k = 1; k < j; ++k) e += (j - k) * (x_degrees[k - 1] + 1);
  return e;
}

int monomial_pairing_exponent(const std::vector<int>& v_degrees) {
  int e = 0, before = 0;
  for (int d : v_degrees) {
    e += before * d;
    before += d;
  }
  return e;
}

SullivanCDGA cdga_of(const LInfinity& L, int degree_bound) {
  const GradedSpace& ls = L.space();
  std::vector<BasisElement> gens;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls.degree(i) < 0) throw AlgebraError("cdga_of: '" + ls.name(i) + "' has negative degree");
    if (ls.degree(i) + 1 > degree_bound) throw AlgebraError("cdga_of: '" + ls.name(i) + "' lies above the degree bound");
    gens.push_back({ls.name(i) + "^", ls.degree(i) + 1});
  }
  std::vector<BasisElement> sorted = gens;
  std::sort(sorted.begin(), sorted.end(), generator_less);
  GradedSpace space(sorted);
  std::vector<std::size_t> to_gen(ls.size());
  for (std::size_t i = 0; i < ls.size(); ++i) to_gen[i] = space.index_of(gens[i].name);

  SullivanCDGA probe(space, std::vector<Polynomial>(space.size()));
  std::vector<Polynomial> diff(space.size());
  for (int k : L.arities()) {
    for (const auto& [T, V] : L.table(k)) {
      std::vector<int> xdeg, vdeg;
      Monomial m;
      for (auto t : T) {
        xdeg.push_back(ls.degree(t));
        vdeg.push_back(ls.degree(t) + 1);
        m.push_back(to_gen[t]);
      }
      const int p = monomial_pairing_exponent(vdeg);
      auto [s, mono] = probe.normalize(m);
      if (s == 0) continue;
      const Rational weight = Rational(1) / factorial_product(T);
      for (const auto& [y, c] : V.terms()) {
        const int e = pairing_exponent(ls.degree(y) + 1, xdeg) + p;
        add_to(diff[to_gen[y]], mono, c * weight * s * (e % 2 == 0 ? 1 : -1));
      }
    }
  }
  return SullivanCDGA(std::move(space), std::move(diff));
}

LInfinity linfty_of(const SullivanCDGA& A, int degree_bound) {
  const GradedSpace& g = A.generators();
  std::vector<BasisElement> basis;
  int arity = 1;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.degree(i) > degree_bound) throw AlgebraError("linfty_of: '" + g.name(i) + "' lies above the degree bound");
    std::string name = g.name(i);
    if (name.size() > 1 && name.back() == '^') name.pop_back();
    basis.push_back({name, g.degree(i) - 1});
    for (const auto& [m, c] : A.differential(i)) arity = std::max(arity, static_cast<int>(m.size()));
  }
  LInfinity L(GradedSpace(basis), arity);
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (const auto& [m, c] : A.differential(v)) {
      std::vector<int> xdeg, vdeg;
      for (auto e : m) {
        xdeg.push_back(basis[e].degree);
        vdeg.push_back(g.degree(e));
      }
      const int e = pairing_exponent(g.degree(v), xdeg) + monomial_pairing_exponent(vdeg);
      L.add_bracket(m, GradedVector::unit(v, c * factorial_product(m) * (e % 2 == 0 ? 1 : -1)));
    }
  }
  return L;
}

std::vector<Monomial> monomials_of_degree(const SullivanCDGA& A, int n, std::size_t max_monomials) {
  const GradedSpace& g = A.generators();
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    if (left == 0) {
      if (out.size() >= max_monomials)
        throw AlgebraError("more than " + std::to_string(max_monomials) + " monomials in degree " + std::to_string(n));
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < g.size(); ++i) {
      if (g.degree(i) > left) break;
      if (g.degree(i) % 2 != 0 && !cur.empty() && cur.back() == i) continue;
      cur.push_back(i);
      self(self, i, left - g.degree(i));
      cur.pop_back();
    }
  };
  if (n >= 0) rec(rec, 0, n);
  return out;
}

std::vector<std::size_t> cdga_cohomology(const SullivanCDGA& A, int degree_bound, std::size_t max_monomials) {
  // rank of d: Λ^n → Λ^{n+1}
  auto rank_from = [&](int n) -> std::size_t {
    const auto src = monomials_of_degree(A, n, max_monomials);
    const auto dst = monomials_of_degree(A, n + 1, max_monomials);
    std::map<Monomial, std::size_t> where;
    for (std::size_t i = 0; i < dst.size(); ++i) where[dst[i]] = i;
    std::vector<GradedVector> images;
    for (const auto& m : src) {
      GradedVector v;
      for (const auto& [q, c] : A.apply_d(monomial_polynomial(m))) v.add_term(where.at(q), c);
      images.push_back(std::move(v));
    }
    return src.size() - kernel_basis(images).size();
  };
  std::vector<std::size_t> dims;
  std::size_t incoming = 0;
  for (int n = 0; n <= degree_bound; ++n) {
    const std::size_t count = monomials_of_degree(A, n, max_monomials).size();
    const std::size_t outgoing = rank_from(n);
    dims.push_back(count - outgoing - incoming);
    incoming = outgoing;
  }
  return dims;
}

}  // namespace linfmap
