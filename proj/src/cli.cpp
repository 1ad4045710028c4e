#include "linfmap/cli.hpp"

#include <algorithm>
#include <sstream>

#include "linfmap/dercheck.hpp"

namespace linfmap::cli {

namespace {

std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : "?"; }

std::string window_text(DegreeWindow w) { return "[" + std::to_string(w.lo) + ", " + std::to_string(w.hi) + "]"; }

std::string bracket_line(const LInfinity& L, const ArgTuple& args, const GradedVector& v) {
  std::string s = "l" + std::to_string(args.size()) + "(";
  for (std::size_t a = 0; a < args.size(); ++a) s += (a ? ", " : "") + L.space().name(args[a]);
  return s + ") = " + format_vector(v, L.space());
}

std::string describe_linfty(const LInfinity& L) {
  std::ostringstream out;
  out << "basis:";
  for (const auto& e : L.space().basis()) out << " " << e.name << "(" << e.degree << ")";
  out << "\n";
  for (int k : L.arities())
    for (const auto& [args, v] : L.table(k)) out << bracket_line(L, args, v) << "\n";
  return out.str();
}

int jacobi_depth(const LInfinity& L) { return std::min(2 * L.max_arity() - 1, 5); }

}  // namespace

CommandResult validate(const ProblemFile& p, Format format) {
  std::vector<std::pair<std::string, std::string>> issues;
  std::vector<std::string> passed;
  auto take = [&](const std::string& what, const StructureReport& r) {
    for (const auto& v : r.violations) issues.push_back({what + ": " + v.identity, v.witness});
    if (r.ok()) passed.push_back(what);
  };
  take("coalgebra", linfmap::validate(p.coalgebra));
  if (p.dual_of) take("dual_of", linfmap::validate(*p.dual_of));

  const JacobiReport jr = check_jacobi(p.target, jacobi_depth(p.target));
  for (const auto& v : jr.violations) {
    std::string args;
    for (auto a : v.args) args += (args.empty() ? "" : ",") + p.target.space().name(a);
    issues.push_back({"target: jacobi n=" + std::to_string(v.n), args});
  }
  if (jr.ok()) passed.push_back("target jacobi n<=" + std::to_string(jacobi_depth(p.target)));

  if (!p.mc.empty()) {
    const ConvolutionAlgebra A = build_convolution(p.coalgebra, p.target, p.options.pointed, effective_window(p));
    const MCReport mc = mc_check(A, mc_vector(p, A), p.options.j_max);
    for (const auto& c : mc.offending) issues.push_back({"mc: curvature", c});
    if (mc.ok) passed.push_back("mc");
  }
  if (p.sullivan) {
    for (auto v : p.sullivan->d_squared_failures())
      issues.push_back({"sullivan: d^2", p.sullivan->generators().name(v)});
    if (p.sullivan->d_squared_failures().empty()) passed.push_back("sullivan d^2");
  }

  CommandResult r;
  std::ostringstream out;
  if (format == Format::records) {
    for (const auto& s : passed) out << "pass\t" << s << "\n";
    for (const auto& [what, witness] : issues) out << "violation\t" << what << "\t" << witness << "\n";
  } else {
    for (const auto& s : passed) out << "ok: " << s << "\n";
    for (const auto& [what, witness] : issues) out << "FAIL " << what << " (witness " << witness << ")\n";
    out << (issues.empty() ? "clean\n" : std::to_string(issues.size()) + " violation(s)\n");
  }
  r.out = out.str();
  r.exit_code = issues.empty() ? kSuccess : kValidationFailure;
  return r;
}

CommandResult model(const ProblemFile& p, bool pointed, bool cover, Format format) {
  const DegreeWindow window = effective_window(p);
  const bool reduced = pointed || p.options.pointed;
  const ConvolutionAlgebra A = build_convolution(p.coalgebra, p.target, reduced, window);
  const GradedVector phi = mc_vector(p, A);
  const MCReport mc = mc_check(A, phi, p.options.j_max);
  if (!mc.ok) {
    std::string err = "phi is not a Maurer-Cartan element; curvature on:";
    for (const auto& c : mc.offending) err += " " + c;
    return {kValidationFailure, "", err + "\n"};
  }
  const int cut = cover ? 1 : 0;
  const MappingSpaceInvariants inv = mapping_space_invariants(A, phi, cut, p.options.j_max);

  std::ostringstream out;
  auto dim_text = [&](int d) { return inv.trusted.at(d) ? std::to_string(inv.homotopy_dims.at(d)) : "?"; };
  const std::string vanish = inv.induced_brackets_vanish ? (*inv.induced_brackets_vanish ? "zero" : "nonzero") : "?";
  if (format == Format::records) {
    out << "model\t" << (reduced ? "pointed" : "free") << "\t" << (cover ? "cover" : "nonneg") << "\n";
    out << "window\t" << window.lo << "\t" << window.hi << "\n";
    for (const auto& [d, n] : inv.homotopy_dims) {
      out << "dim\t" << d << "\t" << dim_text(d) << "\n";
      if (inv.generators.count(d))
        for (const auto& g : inv.generators.at(d)) out << "generator\t" << d << "\t" << g << "\n";
    }
    out << "nil_twisted\t" << opt(inv.nil_twisted) << "\n";
    out << "nil_untwisted\t" << opt(inv.nil_untwisted) << "\n";
    out << "nil_target\t" << opt(inv.nil_target) << "\n";
    out << "minimal\t" << (inv.twisted_minimal ? 1 : 0) << "\n";
    out << "whitehead\t" << inv.whitehead << "\n";
    out << "induced_brackets\t" << vanish << "\n";
  } else {
    out << (reduced ? "pointed" : "free") << " mapping space model, truncated at degree " << cut << ", window "
        << window_text(window) << "\n";
    out << "degree  dim  generators\n";
    for (const auto& [d, n] : inv.homotopy_dims) {
      std::string line = std::to_string(d);
      line.resize(std::max<std::size_t>(line.size() + 1, 8), ' ');
      std::string dim = dim_text(d);
      dim.resize(std::max<std::size_t>(dim.size() + 1, 5), ' ');
      line += dim;
      if (inv.generators.count(d))
        for (std::size_t i = 0; i < inv.generators.at(d).size(); ++i)
          line += (i ? "; " : "") + inv.generators.at(d)[i];
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << "\n";
    }
    out << "nilpotency: twisted " << opt(inv.nil_twisted) << ", untwisted " << opt(inv.nil_untwisted) << ", target "
        << opt(inv.nil_target) << "\n";
    out << "whitehead length: " << inv.whitehead << "\n";
    out << "induced brackets: " << vanish << "\n";
  }
  return {kSuccess, out.str(), ""};
}

CommandResult dualize(const ProblemFile& p, Direction direction, Format format) {
  std::ostringstream out;
  if (direction == Direction::l2a) {
    const SullivanCDGA A = cdga_of(p.target);
    if (format == Format::records) {
      ProblemFile q;
      q.sullivan = A;
      return {kSuccess, emit_problem(q), ""};
    }
    const auto& g = A.generators();
    out << "generators:";
    for (const auto& e : g.basis()) out << " " << e.name << "(" << e.degree << ")";
    out << "\n";
    for (std::size_t v = 0; v < g.size(); ++v)
      if (!A.differential(v).empty()) out << "d(" << g.name(v) << ") = " << A.format(A.differential(v)) << "\n";
    return {kSuccess, out.str(), ""};
  }
  if (!p.sullivan) throw ParseError("/sullivan", "a2l needs a sullivan section");
  if (!p.sullivan->d_squared_failures().empty())
    throw AlgebraError("d^2 != 0 on " + p.sullivan->generators().name(p.sullivan->d_squared_failures().front()));
  const LInfinity L = linfty_of(*p.sullivan);
  if (format == Format::records) {
    ProblemFile q;
    q.target = L;
    return {kSuccess, emit_problem(q), ""};
  }
  return {kSuccess, describe_linfty(L), ""};
}

CommandResult crosscheck(const ProblemFile& p, Format format, int flipped_arity) {
  const DegreeWindow window = effective_window(p);
  DerivationContext ctx{cdga_of(p.target), p.dual_of ? *p.dual_of : dualize_coalgebra(p.coalgebra), {}};
  const GradedSpace& g = ctx.base.generators();
  const GradedSpace& bs = ctx.target.space();
  ctx.phi.resize(g.size());
  // φ(x^) = Σ ±k c^ with the sign of the identification of Hom(B^♯, L) with derivations.
  for (const auto& [c, x, k] : p.mc) {
    const auto v = g.index_of(dual_name(x));
    const auto b = bs.index_of(dual_name(c));
    ctx.phi[v].add_term(b, (long(bs.degree(b)) * g.degree(v)) % 2 ? -k : k);
  }
  const CrosscheckReport rep = linfmap::crosscheck(ctx, window, p.options.max_arity, flipped_arity);
  std::ostringstream out;
  if (format == Format::records) {
    out << "tuples\t" << rep.tuples_checked << "\n";
    out << "mismatches\t" << rep.mismatches.size() << "\n";
    for (const auto& m : rep.mismatches) {
      out << "mismatch\t" << m.arity << "\t";
      for (std::size_t a = 0; a < m.arguments.size(); ++a) out << (a ? "," : "") << m.arguments[a];
      out << "\t" << m.derivation_side << "\t" << m.convolution_side << "\t" << m.trace << "\n";
    }
  } else {
    out << "crosscheck in window " << window_text(window) << ", arity <= " << p.options.max_arity << ": "
        << rep.tuples_checked << " tuples, " << rep.mismatches.size() << " mismatches\n";
    for (const auto& m : rep.mismatches) {
      out << "mismatch at arity " << m.arity << " on";
      for (const auto& a : m.arguments) out << " " << a;
      out << "\n  derivation side:  " << m.derivation_side << "\n  convolution side: " << m.convolution_side
          << "\n  trace: " << m.trace << "\n";
    }
    out << (rep.ok() ? "PASS\n" : "FAIL\n");
  }
  return {rep.ok() ? kSuccess : kValidationFailure, out.str(), ""};
}

}  // namespace linfmap::cli
