#include "linfmap/convo.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace linfmap {

namespace {

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

std::optional<std::size_t> ConvolutionAlgebra::index_of(std::size_t c, std::size_t x) const {
  return hom_space->find(coalgebra.space().name(c) + "->" + target.space().name(x));
}

std::size_t ConvolutionAlgebra::index_of(const std::string& c, const std::string& x) const {
  return hom_space->index_of(c + "->" + x);
}

GradedVector ConvolutionAlgebra::single(const std::string& c, const std::string& x, const Rational& coef) const {
  return GradedVector::unit(index_of(c, x), coef);
}

GradedVector ConvolutionAlgebra::evaluate(const GradedVector& f, std::size_t c) const {
  GradedVector out;
  for (const auto& [i, coef] : f.terms())
    if (pairs[i].first == c) out.add_term(pairs[i].second, coef);
  return out;
}

GradedVector ConvolutionAlgebra::from_map(const GradedLinearMap& phi) const {
  if (!(phi.source() == coalgebra.space()) || !(phi.target() == target.space()))
    throw AlgebraError("map does not go from the coalgebra to the target");
  GradedVector out;
  for (std::size_t c = 0; c < phi.source().size(); ++c) {
    if (reduced && c == coalgebra.unit()) continue;
    for (const auto& [x, coef] : phi.column(c).terms()) out.add_term(*index_of(c, x), coef);
  }
  return out;
}

ConvolutionAlgebra build_convolution(const DGCoalgebra& C, const LInfinity& L, bool reduced, DegreeWindow window) {
  const GradedSpace& cs = C.space();
  const GradedSpace& ls = L.space();
  std::vector<std::tuple<int, std::size_t, std::size_t>> order;
  for (std::size_t c = 0; c < cs.size(); ++c) {
    if (reduced && c == C.unit()) continue;
    for (std::size_t x = 0; x < ls.size(); ++x) order.emplace_back(ls.degree(x) - cs.degree(c), c, x);
  }
  std::sort(order.begin(), order.end());
  std::vector<BasisElement> basis;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> where;
  for (const auto& [d, c, x] : order) {
    where[{c, x}] = basis.size();
    basis.push_back({cs.name(c) + "->" + ls.name(x), d});
    pairs.emplace_back(c, x);
  }
  auto hom = std::make_shared<const GradedSpace>(GradedSpace(std::move(basis)));
  LInfinity brackets(hom, L.max_arity());

  // Arity one.
  if (L.max_arity() >= 1) {
    for (std::size_t f = 0; f < pairs.size(); ++f) {
      const auto [c, x] = pairs[f];
      GradedVector value;
      const GradedVector lx = L.bracket({x});
      for (const auto& [y, coef] : lx.terms()) value.add_term(where.at({c, y}), coef);
      const int s = parity_sign(hom->degree(f));
      for (std::size_t c2 = 0; c2 < cs.size(); ++c2) {
        if (reduced && c2 == C.unit()) continue;
        const Rational coef = C.differential(c2).coefficient(c);
        if (coef != 0) value.add_term(where.at({c2, x}), coef * s);
      }
      brackets.add_bracket({f}, value);
    }
  }

  // Arities two and above, driven by the nonzero entries of L.
  for (int k : L.arities()) {
    if (k < 2) continue;
    const auto diag = iterated_diagonal(C, k, reduced);
    for (std::size_t c = 0; c < cs.size(); ++c) {
      if (reduced && c == C.unit()) continue;
      for (const auto& [cterm, dcoef] : diag[c]) {
        for (const auto& [X, V] : L.table(k)) {
          ArgTuple seq = X;
          do {
            ArgTuple fs(k);
            long exponent = 0;
            for (int a = 0; a < k; ++a) fs[a] = where.at({cterm[a], seq[a]});
            if (!std::is_sorted(fs.begin(), fs.end())) continue;
            for (int a = 0; a < k; ++a)
              for (int b = a + 1; b < k; ++b) exponent += long(hom->degree(fs[b])) * cs.degree(cterm[a]);
            ArgTuple canon = seq;
            const int s = canonicalize(canon, ls) * parity_sign(exponent);
            GradedVector value;
            for (const auto& [y, coef] : V.terms()) value.add_term(where.at({c, y}), coef * dcoef * s);
            brackets.add_bracket(fs, value);
          } while (std::next_permutation(seq.begin(), seq.end()));
        }
      }
    }
  }
  return ConvolutionAlgebra{C, L, reduced, window, hom, std::move(pairs), std::move(brackets)};
}

MCReport mc_check(const ConvolutionAlgebra& A, const GradedVector& phi, int j_max) {
  auto d = phi.degree(*A.hom_space);
  if (d && *d != -1) throw AlgebraError("Maurer-Cartan candidate must have degree -1");
  for (const auto& [i, c] : phi.terms())
    if (A.pairs[i].first == A.coalgebra.unit()) throw AlgebraError("Maurer-Cartan candidate must vanish on 1");
  MCReport report;
  auto curv = curvature(A.brackets, phi, j_max);
  if (curv.truncated) throw NonTerminatingSeries("curvature series exceeds j_max = " + std::to_string(j_max));
  report.curvature = curv.value;
  std::set<std::size_t> bad;
  for (const auto& [i, c] : curv.value.terms()) bad.insert(A.pairs[i].first);
  for (auto c : bad) report.offending.push_back(A.coalgebra.space().name(c));
  report.ok = curv.value.is_zero();
  return report;
}

ConvolutionAlgebra twist_convolution(const ConvolutionAlgebra& A, const GradedVector& phi, int j_max) {
  auto report = mc_check(A, phi, j_max);
  if (!report.ok) throw AlgebraError("twist_convolution: not a Maurer-Cartan element");
  ConvolutionAlgebra out = A;
  out.brackets = twist_unchecked(A.brackets, phi, j_max);
  return out;
}

TruncatedModel truncate(const ConvolutionAlgebra& A, int cut) {
  const GradedSpace& hs = *A.hom_space;
  const LInfinity& Lh = A.brackets;
  const auto at_cut = hs.indices_in_degree(cut);
  std::vector<GradedVector> images;
  for (std::size_t i : at_cut) images.push_back(Lh.bracket({i}));
  std::vector<GradedVector> cycles;
  for (const auto& local : kernel_basis(images)) {
    GradedVector v;
    for (const auto& [q, c] : local.terms()) v.add_term(at_cut[q], c);
    cycles.push_back(std::move(v));
  }

  std::vector<BasisElement> basis;
  std::vector<GradedVector> embedding;
  std::vector<std::optional<std::size_t>> direct(hs.size());  // Hom index -> new index (degree > cut)
  std::map<std::size_t, std::vector<std::size_t>> via_cycle;  // Hom index at cut -> cycles using it
  for (const auto& z : cycles) {
    std::string name;
    if (z.term_count() == 1 && z.terms().begin()->second == 1)
      name = hs.name(z.terms().begin()->first);
    else
      name = "[" + format_vector(z, hs) + "]";
    for (const auto& [i, c] : z.terms()) via_cycle[i].push_back(basis.size());
    basis.push_back({name, cut});
    embedding.push_back(z);
  }
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (hs.degree(i) <= cut) continue;
    direct[i] = basis.size();
    basis.push_back(hs[i]);
    embedding.push_back(GradedVector::unit(i));
  }
  auto space = std::make_shared<const GradedSpace>(GradedSpace(basis));
  TruncatedModel model{LInfinity(space, Lh.max_arity()), embedding, cut};

  auto express = [&](const GradedVector& v) {
    GradedVector out;
    GradedVector low = v.filtered([&](std::size_t i) { return hs.degree(i) <= cut; });
    for (const auto& [i, c] : v.terms())
      if (direct[i]) out.add_term(*direct[i], c);
    if (!low.is_zero()) {
      auto coeffs = solve_in_span(cycles, low);
      if (!coeffs) throw AlgebraError("truncate: bracket leaves the truncated subspace");
      for (std::size_t q = 0; q < cycles.size(); ++q) out.add_term(q, (*coeffs)[q]);
    }
    return out;
  };

  std::set<ArgTuple> candidates;
  for (int k : Lh.arities()) {
    for (const auto& [T, V] : Lh.table(k)) {
      std::vector<std::vector<std::size_t>> choices;
      bool usable = true;
      for (auto t : T) {
        if (direct[t]) {
          choices.push_back({*direct[t]});
        } else {
          auto it = via_cycle.find(t);
          if (it == via_cycle.end()) {
            usable = false;
            break;
          }
          choices.push_back(it->second);
        }
      }
      if (!usable) continue;
      ArgTuple cur;
      auto rec = [&](auto&& self, std::size_t p) -> void {
        if (p == choices.size()) {
          ArgTuple sorted = cur;
          std::sort(sorted.begin(), sorted.end());
          candidates.insert(std::move(sorted));
          return;
        }
        for (auto e : choices[p]) {
          cur.push_back(e);
          self(self, p + 1);
          cur.pop_back();
        }
      };
      rec(rec, 0);
    }
  }
  for (const auto& t : candidates) {
    std::vector<GradedVector> args;
    for (auto e : t) args.push_back(embedding[e]);
    GradedVector value = eval_bracket(Lh, args);
    if (value.is_zero()) continue;
    model.algebra.add_bracket(t, express(value));
  }
  return model;
}

MappingSpaceInvariants mapping_space_invariants(const ConvolutionAlgebra& untwisted, const GradedVector& phi,
                                                int cut, int j_max) {
  MappingSpaceInvariants inv;
  const ConvolutionAlgebra twisted = twist_convolution(untwisted, phi, j_max);
  const TruncatedModel tw = truncate(twisted, cut);
  const TruncatedModel un = truncate(untwisted, cut);

  const LInfinity& M = tw.algebra;
  const GradedSpace& ms = M.space();
  std::vector<GradedVector> cols(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) cols[i] = M.bracket({i});
  GradedLinearMap d(M.space_ptr(), M.space_ptr(), -1, cols);
  const auto h = homology(d, untwisted.window);
  for (const auto& [n, hn] : h.degrees) {
    if (n < cut) continue;
    inv.homotopy_dims[n] = hn.dimension;
    inv.trusted[n] = hn.trusted;
    for (const auto& r : hn.representatives) inv.generators[n].push_back(format_vector(r, ms));
  }

  inv.nil_twisted = nilpotency_order(M);
  inv.nil_untwisted = nilpotency_order(un.algebra);
  inv.nil_target = nilpotency_order(untwisted.target);
  inv.twisted_minimal = is_minimal(M);

  const HomologyLieModel hm = homology_lie_model(M);
  inv.whitehead = whitehead_length(hm.algebra);

  const auto& reps = hm.representatives;
  if (reps.size() <= 12) {
    Subspace boundaries = span_of(cols);
    bool vanish = true;
    ArgTuple t;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (!vanish) return;
      if (t.size() >= 2) {
        std::vector<GradedVector> args;
        for (auto e : t) args.push_back(reps[e]);
        if (!boundaries.contains(eval_bracket(M, args))) vanish = false;
      }
      if (int(t.size()) == M.max_arity()) return;
      for (std::size_t e = from; e < reps.size(); ++e) {
        t.push_back(e);
        self(self, e);
        t.pop_back();
      }
    };
    rec(rec, 0);
    inv.induced_brackets_vanish = vanish;
  }
  return inv;
}

}  // namespace linfmap
