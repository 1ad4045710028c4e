#include "linfmap/linf.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace linfmap {

namespace {

Rational factorial(int n) {
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

std::vector<int> degrees_of(const ArgTuple& args, const GradedSpace& space) {
  std::vector<int> d;
  d.reserve(args.size());
  for (auto a : args) d.push_back(space.degree(a));
  return d;
}

// Distinct elements of a sorted tuple with their multiplicities.
std::vector<std::pair<std::size_t, int>> multiplicities(const ArgTuple& sorted) {
  std::vector<std::pair<std::size_t, int>> out;
  for (auto a : sorted) {
    if (!out.empty() && out.back().first == a)
      ++out.back().second;
    else
      out.push_back({a, 1});
  }
  return out;
}

bool forced_zero(const ArgTuple& sorted, const GradedSpace& space) {
  for (std::size_t p = 1; p < sorted.size(); ++p)
    if (sorted[p] == sorted[p - 1] && space.degree(sorted[p]) % 2 == 0) return true;
  return false;
}

}  // namespace

int canonicalize(ArgTuple& args, const GradedSpace& space) {
  std::vector<int> order(args.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return args[a] < args[b]; });
  std::vector<int> images;
  images.reserve(order.size());
  for (int o : order) images.push_back(o + 1);
  const int s = skew_sign(Permutation(images), degrees_of(args, space));
  ArgTuple sorted;
  sorted.reserve(args.size());
  for (int o : order) sorted.push_back(args[o]);
  args = std::move(sorted);
  return s;
}

LInfinity::LInfinity(std::shared_ptr<const GradedSpace> space, int max_arity)
    : space_(std::move(space)), max_arity_(max_arity) {
  if (max_arity_ < 1) throw AlgebraError("max_arity must be at least 1");
}

void LInfinity::add_bracket(const ArgTuple& args, const GradedVector& value) {
  const int k = static_cast<int>(args.size());
  if (k < 1) throw AlgebraError("bracket of arity 0");
  if (k > max_arity_) throw AlgebraError("bracket arity exceeds max_arity");
  int deg = k - 2;
  for (auto a : args) {
    if (a >= space_->size()) throw AlgebraError("bracket argument out of range");
    deg += space_->degree(a);
  }
  if (value.is_zero()) return;
  auto vd = value.degree(*space_);
  if (*vd != deg) throw AlgebraError("bracket value has degree " + std::to_string(*vd) + ", expected " +
                                     std::to_string(deg));
  ArgTuple key = args;
  const int s = canonicalize(key, *space_);
  if (forced_zero(key, *space_)) throw AlgebraError("bracket entry is forced to vanish by skew symmetry");
  auto& table = tables_[k];
  auto& slot = table[key];
  slot.add_scaled(value, s);
  if (slot.is_zero()) table.erase(key);
  if (table.empty()) tables_.erase(k);
}

const BracketTable& LInfinity::table(int k) const {
  static const BracketTable empty;
  auto it = tables_.find(k);
  return it == tables_.end() ? empty : it->second;
}

std::vector<int> LInfinity::arities() const {
  std::vector<int> out;
  for (const auto& [k, t] : tables_) out.push_back(k);
  return out;
}

std::size_t LInfinity::entry_count() const {
  std::size_t n = 0;
  for (const auto& [k, t] : tables_) n += t.size();
  return n;
}

GradedVector LInfinity::bracket(const ArgTuple& args) const {
  if (args.empty()) throw AlgebraError("bracket of arity 0");
  if (static_cast<int>(args.size()) > max_arity_) return {};
  const auto& t = table(static_cast<int>(args.size()));
  if (t.empty()) return {};
  ArgTuple key = args;
  const int s = canonicalize(key, *space_);
  auto it = t.find(key);
  if (it == t.end()) return {};
  return Rational(s) * it->second;
}

bool LInfinity::operator==(const LInfinity& other) const {
  return *space_ == *other.space_ && max_arity_ == other.max_arity_ && tables_ == other.tables_;
}

bool same_brackets(const LInfinity& a, const LInfinity& b) {
  const GradedSpace& sa = a.space();
  const GradedSpace& sb = b.space();
  if (sa.size() != sb.size()) return false;
  std::vector<std::size_t> to_b(sa.size());
  for (std::size_t i = 0; i < sa.size(); ++i) {
    auto j = sb.find(sa.name(i));
    if (!j || sb.degree(*j) != sa.degree(i)) return false;
    to_b[i] = *j;
  }
  if (a.entry_count() != b.entry_count()) return false;
  for (int k : a.arities()) {
    for (const auto& [T, V] : a.table(k)) {
      ArgTuple mapped;
      for (auto t : T) mapped.push_back(to_b[t]);
      GradedVector expected;
      for (const auto& [y, c] : V.terms()) expected.add_term(to_b[y], c);
      if (k > b.max_arity() || b.bracket(mapped) != expected) return false;
    }
  }
  return true;
}

GradedVector eval_bracket(const LInfinity& L, const std::vector<GradedVector>& args) {
  if (args.empty()) throw AlgebraError("bracket of arity 0");
  GradedVector out;
  if (static_cast<int>(args.size()) > L.max_arity() || L.table(static_cast<int>(args.size())).empty()) return out;
  for (const auto& a : args)
    if (a.is_zero()) return out;
  ArgTuple current(args.size());
  auto recurse = [&](auto&& self, std::size_t slot, const Rational& coef) -> void {
    if (slot == args.size()) {
      out.add_scaled(L.bracket(current), coef);
      return;
    }
    for (const auto& [i, c] : args[slot].terms()) {
      current[slot] = i;
      self(self, slot + 1, coef * c);
    }
  };
  recurse(recurse, 0, Rational(1));
  return out;
}

GradedVector jacobi_sum(const LInfinity& L, const ArgTuple& args) {
  const int n = static_cast<int>(args.size());
  const auto deg = degrees_of(args, L.space());
  GradedVector out;
  for (int i = 1; i <= n; ++i) {
    const int j = n + 1 - i;
    if (i > L.max_arity() || j > L.max_arity() || L.table(i).empty() || L.table(j).empty()) continue;
    const int base = parity_sign(long(i) * (j - 1));
    for (const auto& sigma : shuffles(i, n)) {
      ArgTuple inner_args, rest;
      for (int p = 1; p <= i; ++p) inner_args.push_back(args[sigma(p) - 1]);
      for (int p = i + 1; p <= n; ++p) rest.push_back(args[sigma(p) - 1]);
      const GradedVector inner = L.bracket(inner_args);
      if (inner.is_zero()) continue;
      const int s = base * skew_sign(sigma, deg);
      ArgTuple outer(1 + rest.size());
      std::copy(rest.begin(), rest.end(), outer.begin() + 1);
      for (const auto& [y, c] : inner.terms()) {
        outer[0] = y;
        out.add_scaled(L.bracket(outer), c * s);
      }
    }
  }
  return out;
}

JacobiReport check_jacobi(const LInfinity& L, int n_max) {
  // Entries indexed by each distinct element they contain.
  std::map<std::size_t, std::vector<const std::pair<const ArgTuple, GradedVector>*>> containing;
  for (int k : L.arities())
    for (const auto& entry : L.table(k))
      for (const auto& [e, m] : multiplicities(entry.first)) containing[e].push_back(&entry);

  std::set<ArgTuple> candidates;
  for (int i : L.arities()) {
    for (const auto& [A, V] : L.table(i)) {
      for (const auto& [y, c] : V.terms()) {
        auto it = containing.find(y);
        if (it == containing.end()) continue;
        for (const auto* outer : it->second) {
          const ArgTuple& B = outer->first;
          if (static_cast<int>(A.size() + B.size()) - 1 > n_max) continue;
          ArgTuple X = A;
          bool removed = false;
          for (auto b : B) {
            if (!removed && b == y) {
              removed = true;
              continue;
            }
            X.push_back(b);
          }
          std::sort(X.begin(), X.end());
          candidates.insert(std::move(X));
        }
      }
    }
  }

  JacobiReport report;
  for (const auto& X : candidates) {
    ++report.tuples_checked;
    GradedVector v = jacobi_sum(L, X);
    if (!v.is_zero()) report.violations.push_back({static_cast<int>(X.size()), X, std::move(v)});
  }
  return report;
}

CurvatureResult curvature(const LInfinity& L, const GradedVector& z, int j_max) {
  auto d = z.degree(L.space());
  if (d && *d != -1) throw AlgebraError("curvature: element must have degree -1");
  CurvatureResult result;
  if (z.is_zero()) return result;
  for (int k : L.arities()) {
    for (const auto& [T, V] : L.table(k)) {
      Rational coef = 1;
      for (const auto& [e, m] : multiplicities(T)) {
        Rational c = z.coefficient(e);
        if (c == 0) {
          coef = 0;
          break;
        }
        for (int r = 0; r < m; ++r) coef *= c;
        coef /= factorial(m);
      }
      if (coef == 0) continue;
      if (k > j_max) {
        result.truncated = true;
        continue;
      }
      result.value.add_scaled(V, coef);
    }
  }
  return result;
}

bool is_maurer_cartan(const LInfinity& L, const GradedVector& z, int j_max) {
  auto c = curvature(L, z, j_max);
  return c.value.is_zero() && !c.truncated;
}

LInfinity twist_unchecked(const LInfinity& L, const GradedVector& z, int j_max) {
  auto d = z.degree(L.space());
  if (d && *d != -1) throw AlgebraError("twist: element must have degree -1");
  LInfinity out(L.space_ptr(), L.max_arity());
  const GradedSpace& sp = L.space();
  for (int m : L.arities()) {
    for (const auto& [T, V] : L.table(m)) {
      const auto mult = multiplicities(T);
      const auto deg = degrees_of(T, sp);
      // choice[e] = number of copies of distinct element e moved into the z-slots.
      std::vector<int> choice(mult.size(), 0);
      while (true) {
        int j = 0;
        Rational coef = 1;
        for (std::size_t e = 0; e < mult.size(); ++e) {
          if (choice[e] == 0) continue;
          j += choice[e];
          const Rational c = z.coefficient(mult[e].first);
          for (int r = 0; r < choice[e]; ++r) coef *= c;
          coef /= factorial(choice[e]);
        }
        const int k = m - j;
        if (coef != 0 && k >= 1) {
          if (j > j_max)
            throw NonTerminatingSeries("nilpotency bound exceeded at j_max = " + std::to_string(j_max));
          // Positions: the first choice[e] copies of each element go to the front block.
          std::vector<int> front, back;
          std::size_t pos = 0;
          for (std::size_t e = 0; e < mult.size(); ++e)
            for (int r = 0; r < mult[e].second; ++r, ++pos)
              (r < choice[e] ? front : back).push_back(static_cast<int>(pos) + 1);
          std::vector<int> images = front;
          images.insert(images.end(), back.begin(), back.end());
          const int s = skew_sign(Permutation(images), deg);
          ArgTuple R;
          for (int p : back) R.push_back(T[p - 1]);
          out.add_bracket(R, Rational(s) * coef * V);
        }
        // Next choice vector over elements in the support of z.
        std::size_t e = 0;
        for (; e < mult.size(); ++e) {
          if (z.coefficient(mult[e].first) == 0) continue;
          if (choice[e] < mult[e].second) {
            ++choice[e];
            break;
          }
          choice[e] = 0;
        }
        if (e == mult.size()) break;
      }
    }
  }
  return out;
}

LInfinity twist(const LInfinity& L, const GradedVector& z, int j_max) {
  auto c = curvature(L, z, j_max);
  if (c.truncated) throw NonTerminatingSeries("curvature series exceeds j_max = " + std::to_string(j_max));
  if (!c.value.is_zero()) throw AlgebraError("twist: element is not Maurer-Cartan");
  return twist_unchecked(L, z, j_max);
}

// ---------------------------------------------------------------------------

namespace {

// Non-increasing partitions of n into exactly k parts, each ≥ 1.
void partitions(int n, int k, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (k == 0) {
    if (n == 0) out.push_back(cur);
    return;
  }
  for (int p = std::min(n - (k - 1), max_part); p >= 1; --p) {
    if (p * k < n) break;
    cur.push_back(p);
    partitions(n - p, k - 1, p, cur, out);
    cur.pop_back();
  }
}

// All sub-multisets of size a of the sorted tuple T, each sorted.
void sub_multisets(const ArgTuple& T, std::size_t a, std::set<ArgTuple>& out) {
  const auto mult = multiplicities(T);
  std::vector<int> take(mult.size(), 0);
  auto rec = [&](auto&& self, std::size_t e, std::size_t left) -> void {
    if (e == mult.size()) {
      if (left == 0) {
        ArgTuple s;
        for (std::size_t q = 0; q < mult.size(); ++q)
          for (int r = 0; r < take[q]; ++r) s.push_back(mult[q].first);
        out.insert(std::move(s));
      }
      return;
    }
    for (int t = 0; t <= mult[e].second && std::size_t(t) <= left; ++t) {
      take[e] = t;
      self(self, e + 1, left - t);
    }
    take[e] = 0;
  };
  rec(rec, 0, a);
}

}  // namespace

LowerCentralSeries lower_central_series(const LInfinity& L, int i_max) {
  LowerCentralSeries lcs;
  const GradedSpace& sp = L.space();
  Subspace g1;
  for (std::size_t i = 0; i < sp.size(); ++i) g1.insert(GradedVector::unit(i));
  lcs.graded.push_back(g1);

  int K = 0;
  for (int k : L.arities())
    if (k >= 2) K = k;

  std::map<std::pair<int, std::size_t>, std::set<ArgTuple>> l_slot_candidates;
  auto candidates_for = [&](int k, std::size_t a) -> const std::set<ArgTuple>& {
    auto key = std::make_pair(k, a);
    auto it = l_slot_candidates.find(key);
    if (it != l_slot_candidates.end()) return it->second;
    std::set<ArgTuple> c;
    for (const auto& [T, V] : L.table(k)) sub_multisets(T, a, c);
    return l_slot_candidates.emplace(key, std::move(c)).first->second;
  };

  int zero_run_start = 0;  // first index of the current run of vanishing G^i, 0 if none
  if (K == 0 || sp.size() == 0) {
    lcs.complete = true;
  } else {
    for (int i = 2; i <= i_max; ++i) {
      Subspace gi;
      for (int k = 2; k <= K && k <= i; ++k) {
        if (L.table(k).empty()) continue;
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions(i, k, i, cur, parts);
        for (const auto& part : parts) {
          std::size_t a = std::count(part.begin(), part.end(), 1);
          if (a == static_cast<std::size_t>(k)) {
            for (const auto& [T, V] : L.table(k)) gi.insert(V);
            continue;
          }
          std::vector<const Subspace*> slots;
          bool empty = false;
          for (int p : part) {
            if (p == 1) continue;
            slots.push_back(&lcs.graded[p - 1]);
            if (lcs.graded[p - 1].is_zero()) empty = true;
          }
          if (empty) continue;
          const auto& ys = a ? candidates_for(k, a) : std::set<ArgTuple>{ArgTuple{}};
          // Non-decreasing basis choices within runs of equal part sizes.
          std::vector<std::size_t> pick(slots.size(), 0);
          std::vector<GradedVector> args;
          auto rec = [&](auto&& self, std::size_t s) -> void {
            if (s == slots.size()) {
              for (const auto& y : ys) {
                args.clear();
                for (auto e : y) args.push_back(GradedVector::unit(e));
                for (std::size_t t = 0; t < slots.size(); ++t) args.push_back(slots[t]->basis()[pick[t]]);
                gi.insert(eval_bracket(L, args));
              }
              return;
            }
            const std::size_t from = (s > 0 && slots[s] == slots[s - 1]) ? pick[s - 1] : 0;
            for (std::size_t q = from; q < slots[s]->dimension(); ++q) {
              pick[s] = q;
              self(self, s + 1);
            }
          };
          rec(rec, 0);
        }
      }
      const bool zero = gi.is_zero();
      lcs.graded.push_back(std::move(gi));
      if (zero) {
        if (zero_run_start == 0) zero_run_start = i;
        if (i >= K * (zero_run_start - 1)) {
          lcs.complete = true;
          break;
        }
      } else {
        zero_run_start = 0;
      }
    }
  }

  // Drop trailing zero terms and build the decreasing filtration.
  while (lcs.graded.size() > 1 && lcs.graded.back().is_zero()) lcs.graded.pop_back();
  if (lcs.graded.size() == 1 && lcs.graded.front().is_zero()) lcs.graded.clear();
  lcs.filtration.resize(lcs.graded.size());
  Subspace acc;
  for (std::size_t i = lcs.graded.size(); i-- > 0;) {
    for (const auto& v : lcs.graded[i].basis()) acc.insert(v);
    lcs.filtration[i] = acc;
  }
  return lcs;
}

std::optional<int> nilpotency_order(const LInfinity& L, int i_max) {
  auto lcs = lower_central_series(L, i_max);
  if (!lcs.complete) return std::nullopt;
  return static_cast<int>(lcs.graded.size());
}

bool is_minimal(const LInfinity& L) { return L.table(1).empty(); }

int whitehead_length(const LInfinity& L, int len_max) {
  if (!is_minimal(L)) throw AlgebraError("whitehead_length needs a minimal model (ℓ_1 = 0)");
  const GradedSpace& sp = L.space();
  if (sp.size() == 0) return 0;
  std::map<std::size_t, std::set<std::size_t>> partners;
  for (const auto& [T, V] : L.table(2)) {
    partners[T[0]].insert(T[1]);
    partners[T[1]].insert(T[0]);
  }
  Subspace w;
  for (std::size_t i = 0; i < sp.size(); ++i) w.insert(GradedVector::unit(i));
  int n = 1;
  while (n < len_max) {
    Subspace next;
    for (const auto& v : w.basis()) {
      std::set<std::size_t> ys;
      for (const auto& [e, c] : v.terms()) {
        auto it = partners.find(e);
        if (it != partners.end()) ys.insert(it->second.begin(), it->second.end());
      }
      for (auto y : ys) next.insert(eval_bracket(L, {GradedVector::unit(y), v}));
    }
    if (next.is_zero()) return n;
    w = std::move(next);
    ++n;
  }
  return n;
}

HomologyLieModel homology_lie_model(const LInfinity& L) {
  const GradedSpace& sp = L.space();
  auto space = L.space_ptr();
  std::vector<GradedVector> cols(sp.size());
  for (std::size_t i = 0; i < sp.size(); ++i) cols[i] = L.bracket({i});
  GradedLinearMap d(space, space, -1, cols);
  DegreeWindow window{sp.min_degree().value_or(0) - 1, sp.max_degree().value_or(0) + 1};
  auto h = homology(d, window);

  std::vector<BasisElement> basis;
  std::vector<GradedVector> reps;
  std::map<int, std::vector<std::size_t>> class_index;  // degree -> indices into reps
  for (const auto& [n, hn] : h.degrees) {
    for (const auto& r : hn.representatives) {
      std::string name;
      if (r.term_count() == 1 && r.terms().begin()->second == 1)
        name = sp.name(r.terms().begin()->first);
      else
        name = "[" + format_vector(r, sp) + "]";
      class_index[n].push_back(reps.size());
      basis.push_back({name, n});
      reps.push_back(r);
    }
  }
  HomologyLieModel model{LInfinity(GradedSpace(basis), 2), reps};
  if (L.max_arity() < 2) return model;

  auto express = [&](const GradedVector& v, int n) {
    std::vector<GradedVector> gens;
    for (std::size_t i : sp.indices_in_degree(n + 1))
      if (!cols[i].is_zero()) gens.push_back(cols[i]);
    const std::size_t nb = gens.size();
    for (std::size_t c : class_index[n]) gens.push_back(reps[c]);
    auto coeffs = solve_in_span(gens, v);
    if (!coeffs) throw AlgebraError("homology_lie_model: bracket of cycles is not a cycle");
    GradedVector out;
    for (std::size_t q = 0; q < class_index[n].size(); ++q) out.add_term(class_index[n][q], (*coeffs)[nb + q]);
    return out;
  };

  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = a; b < reps.size(); ++b) {
      GradedVector v = eval_bracket(L, {reps[a], reps[b]});
      if (v.is_zero()) continue;
      const int n = basis[a].degree + basis[b].degree;
      GradedVector cls = express(v, n);
      if (!cls.is_zero()) model.algebra.add_bracket({a, b}, cls);
    }
  }
  return model;
}

}  // namespace linfmap
