#include "linfmap/dercheck.hpp"

#include <algorithm>
#include <sstream>

namespace linfmap {

namespace {

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

const SullivanCDGA& base_of(const PhiDerivation& t) { return t.context->base; }

}  // namespace

GradedVector DerivationContext::phi_of(const Monomial& m) const {
  GradedVector out = GradedVector::unit(target.unit());
  for (auto v : m) out = target.multiply(out, phi[v]);
  return out;
}

void DerivationContext::validate() const {
  const GradedSpace& g = base.generators();
  if (phi.size() != g.size()) throw AlgebraError("φ must be given on every generator");
  if (!linfmap::validate(target).ok()) throw AlgebraError("target is not a CDGA");
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto d = phi[v].degree(target.space());
    if (d && *d != g.degree(v)) throw AlgebraError("φ(" + g.name(v) + ") has the wrong degree");
    GradedVector lhs;
    for (const auto& [m, c] : base.differential(v)) lhs.add_scaled(phi_of(m), c);
    if (lhs != target.apply_differential(phi[v]))
      throw AlgebraError("φ does not commute with the differentials on " + g.name(v));
  }
}

PhiDerivation PhiDerivation::zero(std::shared_ptr<const DerivationContext> ctx, int degree) {
  const std::size_t n = ctx->base.generators().size();
  return PhiDerivation{std::move(ctx), std::vector<GradedVector>(n), degree};
}

PhiDerivation PhiDerivation::elementary(std::shared_ptr<const DerivationContext> ctx, std::size_t v, std::size_t b,
                                        const Rational& c) {
  const int degree = ctx->base.generators().degree(v) - ctx->target.space().degree(b);
  PhiDerivation t = zero(std::move(ctx), degree);
  t.values[v] = GradedVector::unit(b, c);
  return t;
}

GradedVector PhiDerivation::apply(const Monomial& m) const {
  const DerivationContext& ctx = *context;
  const GradedSpace& g = ctx.base.generators();
  GradedVector out;
  int before = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    GradedVector term = ctx.phi_of(Monomial(m.begin(), m.begin() + i));
    term = ctx.target.multiply(term, values[m[i]]);
    term = ctx.target.multiply(term, ctx.phi_of(Monomial(m.begin() + i + 1, m.end())));
    out.add_scaled(term, parity_sign(long(degree) * before));
    before += g.degree(m[i]);
  }
  return out;
}

GradedVector PhiDerivation::apply(const Polynomial& p) const {
  GradedVector out;
  for (const auto& [m, c] : p) out.add_scaled(apply(m), c);
  return out;
}

bool PhiDerivation::is_zero() const {
  for (const auto& v : values)
    if (!v.is_zero()) return false;
  return true;
}

PhiDerivation derivation_delta(const PhiDerivation& theta) {
  const DerivationContext& ctx = *theta.context;
  PhiDerivation out = PhiDerivation::zero(theta.context, theta.degree - 1);
  for (std::size_t v = 0; v < out.values.size(); ++v) {
    out.values[v] = ctx.target.apply_differential(theta.values[v]);
    out.values[v].add_scaled(theta.apply(ctx.base.differential(v)), parity_sign(theta.degree + 1));
  }
  return out;
}

PhiDerivation derivation_bracket(const std::vector<PhiDerivation>& thetas) {
  const std::size_t j = thetas.size();
  if (j < 2) throw AlgebraError("derivation_bracket needs at least two arguments");
  for (const auto& t : thetas)
    if (t.context != thetas[0].context) throw AlgebraError("derivations over different base data");
  const DerivationContext& ctx = *thetas[0].context;
  const GradedSpace& g = ctx.base.generators();
  int psum = 0;
  for (const auto& t : thetas) psum += t.degree;
  PhiDerivation out = PhiDerivation::zero(thetas[0].context, psum - 1);

  for (std::size_t v = 0; v < g.size(); ++v) {
    GradedVector value;
    for (const auto& [m, coef] : ctx.base.differential(v)) {
      const std::size_t k = m.size();
      if (k < j) continue;
      std::vector<std::size_t> chosen;
      std::vector<bool> used(k, false);
      auto rec = [&](auto&& self) -> void {
        if (chosen.size() == j) {
          std::vector<std::size_t> order;
          Monomial rest;
          int rest_degree = 0;
          for (std::size_t q = 0; q < k; ++q)
            if (!used[q]) {
              order.push_back(q);
              rest.push_back(m[q]);
              rest_degree += g.degree(m[q]);
            }
          order.insert(order.end(), chosen.begin(), chosen.end());
          long e = 0;
          for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
              if (order[a] > order[b]) e += long(g.degree(m[order[a]])) * g.degree(m[order[b]]);
          int passed = rest_degree;
          GradedVector term = ctx.phi_of(rest);
          for (std::size_t a = 0; a < j; ++a) {
            e += long(thetas[a].degree) * passed;
            term = ctx.target.multiply(term, thetas[a].values[m[chosen[a]]]);
            passed += g.degree(m[chosen[a]]);
          }
          value.add_scaled(term, coef * parity_sign(e));
          return;
        }
        for (std::size_t q = 0; q < k; ++q) {
          if (used[q]) continue;
          used[q] = true;
          chosen.push_back(q);
          self(self);
          chosen.pop_back();
          used[q] = false;
        }
      };
      rec(rec);
    }
    value *= parity_sign(psum - 1);
    out.values[v] = std::move(value);
  }
  return out;
}

PairingMatrix theta(const PhiDerivation& t) {
  const GradedSpace& g = base_of(t).generators();
  const GradedSpace& bs = t.context->target.space();
  PairingMatrix out;
  for (std::size_t v = 0; v < g.size(); ++v)
    for (const auto& [b, c] : t.values[v].terms())
      out[{v, b}] += c * parity_sign(long(bs.degree(b)) * (g.degree(v) + t.degree));
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

PairingMatrix nabla(const ConvolutionAlgebra& A, const GradedVector& f, int f_degree) {
  const GradedSpace& ls = A.target.space();
  PairingMatrix out;
  for (const auto& [i, c] : f.terms()) {
    const auto [b, x] = A.pairs[i];
    const int v_degree = ls.degree(x) + 1;
    out[{x, b}] += c * parity_sign(long(v_degree) * (f_degree + 1));
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

GradedVector derivation_to_hom(const ConvolutionAlgebra& A, const PhiDerivation& t) {
  const GradedSpace& g = base_of(t).generators();
  GradedVector out;
  for (const auto& [vb, c] : theta(t)) {
    const auto [v, b] = vb;
    auto idx = A.index_of(b, v);
    if (!idx) throw AlgebraError("derivation value outside the Hom space");
    out.add_term(*idx, c * parity_sign(long(g.degree(v)) * t.degree));
  }
  return out;
}

GradedVector phi_to_hom(const ConvolutionAlgebra& A, const DerivationContext& ctx) {
  const GradedSpace& g = ctx.base.generators();
  const GradedSpace& bs = ctx.target.space();
  GradedVector out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (const auto& [b, c] : ctx.phi[v].terms()) {
      if (b == ctx.target.unit()) throw AlgebraError("φ has a component on the unit");
      auto idx = A.index_of(b, v);
      if (!idx) throw AlgebraError("φ value outside the Hom space");
      out.add_term(*idx, c * parity_sign(long(bs.degree(b)) * g.degree(v)));
    }
  }
  return out;
}

LInfinity derivation_linfty(const DerivationContext& ctx_in) {
  auto ctx = std::make_shared<const DerivationContext>(ctx_in);
  const GradedSpace& g = ctx->base.generators();
  const GradedSpace& bs = ctx->target.space();
  std::vector<BasisElement> names;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> where;
  std::vector<PhiDerivation> basis;
  int max_word = 1;
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (const auto& [m, c] : ctx->base.differential(v)) max_word = std::max(max_word, int(m.size()));
    for (std::size_t b = 0; b < bs.size(); ++b) {
      where[{v, b}] = basis.size();
      basis.push_back(PhiDerivation::elementary(ctx, v, b));
      names.push_back({g.name(v) + "->" + bs.name(b), basis.back().degree - 1});
    }
  }
  LInfinity L(GradedSpace(names), max_word);
  auto to_vector = [&](const PhiDerivation& t) {
    GradedVector out;
    for (std::size_t v = 0; v < g.size(); ++v)
      for (const auto& [b, c] : t.values[v].terms()) out.add_term(where.at({v, b}), c);
    return out;
  };
  std::vector<std::size_t> tuple;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    const std::size_t j = tuple.size();
    if (j == 1) {
      L.add_bracket(tuple, Rational(-1) * to_vector(derivation_delta(basis[tuple[0]])));
    } else if (j >= 2) {
      std::vector<PhiDerivation> args;
      long alpha = 0;
      for (std::size_t n = 0; n < j; ++n) {
        args.push_back(basis[tuple[n]]);
        alpha += long(j - 1 - n) * basis[tuple[n]].degree;
      }
      GradedVector value = to_vector(derivation_bracket(args));
      // Entries forced to vanish by skew symmetry must come out zero.
      if (!value.is_zero()) L.add_bracket(tuple, Rational(-parity_sign(alpha)) * value);
    }
    if (int(j) == max_word) return;
    for (std::size_t t = from; t < basis.size(); ++t) {
      tuple.push_back(t);
      self(self, t);
      tuple.pop_back();
    }
  };
  rec(rec, 0);
  return L;
}

CrosscheckReport crosscheck(const DerivationContext& ctx_in, DegreeWindow window, int max_arity, int flipped_arity) {
  ctx_in.validate();
  auto ctx = std::make_shared<const DerivationContext>(ctx_in);
  const GradedSpace& g = ctx->base.generators();
  const GradedSpace& bs = ctx->target.space();

  const ConvolutionAlgebra A = build_convolution(dualize_cdga(ctx->target), linfty_of(ctx->base), false, window);
  const GradedSpace& hs = *A.hom_space;
  CrosscheckReport report;
  const GradedVector Phi = phi_to_hom(A, *ctx);
  const MCReport mc = mc_check(A, Phi);
  if (!mc.ok) {
    report.mismatches.push_back({0, {}, "0", format_vector(mc.curvature, hs), "Φ is not a Maurer-Cartan element"});
    return report;
  }
  const ConvolutionAlgebra T = twist_convolution(A, Phi);

  std::vector<PhiDerivation> basis;
  std::vector<std::string> names;
  for (std::size_t v = 0; v < g.size(); ++v)
    for (std::size_t b = 0; b < bs.size(); ++b) {
      const int n = g.degree(v) - bs.degree(b);
      if (!window.contains(n - 1)) continue;
      basis.push_back(PhiDerivation::elementary(ctx, v, b));
      names.push_back(g.name(v) + "->" + bs.name(b));
    }

  std::vector<std::size_t> tuple;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    const std::size_t j = tuple.size();
    if (j >= 1) {
      std::vector<PhiDerivation> args;
      std::vector<GradedVector> homs;
      for (auto t : tuple) {
        args.push_back(basis[t]);
        homs.push_back(derivation_to_hom(A, basis[t]));
      }
      GradedVector der_side;
      std::ostringstream trace;
      if (j == 1) {
        der_side = derivation_to_hom(A, derivation_delta(args[0]));
        der_side *= -1;
        trace << "l1 = -s^-1 delta; |theta| = " << args[0].degree;
      } else {
        long alpha = 0;
        int psum = 0;
        for (std::size_t n = 1; n <= j; ++n) {
          if (n < j) alpha += long(j - n) * args[n - 1].degree;
          psum += args[n - 1].degree;
        }
        const PhiDerivation br = derivation_bracket(args);
        der_side = derivation_to_hom(A, br);
        der_side *= -parity_sign(alpha);
        trace << "alpha = " << alpha << ", sum p = " << psum << ", bracket degree " << br.degree;
      }
      if (int(j) == flipped_arity) {
        der_side *= -1;
        trace << "; injected sign flip";
      }
      const GradedVector hom_side = eval_bracket(T.brackets, homs);
      ++report.tuples_checked;
      if (der_side != hom_side) {
        CrosscheckMismatch mm;
        mm.arity = int(j);
        for (auto t : tuple) mm.arguments.push_back(names[t]);
        mm.derivation_side = format_vector(der_side, hs);
        mm.convolution_side = format_vector(hom_side, hs);
        trace << "; arguments in Hom:";
        for (const auto& h : homs) trace << " " << format_vector(h, hs);
        mm.trace = trace.str();
        report.mismatches.push_back(std::move(mm));
      }
    }
    if (int(j) == max_arity) return;
    for (std::size_t t = from; t < basis.size(); ++t) {
      tuple.push_back(t);
      self(self, t);
      tuple.pop_back();
    }
  };
  rec(rec, 0);
  return report;
}

}  // namespace linfmap
