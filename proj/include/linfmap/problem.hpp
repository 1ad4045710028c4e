#pragma once

// Problem files: the versioned JSON description of (C, L, φ) read and written by the CLI,
// and the builtin example catalog.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linfmap/cedual.hpp"
#include "linfmap/coalg.hpp"
#include "linfmap/convo.hpp"
#include "linfmap/linf.hpp"

namespace linfmap {

/// Malformed input. `where` is a JSON pointer or "byte N".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct ProblemOptions {
  int max_arity = 3;
  int j_max = 16;
  bool pointed = false;
};

struct ProblemFile {
  std::string format_version = "1";
  DGCoalgebra coalgebra = DGCoalgebra::trivial();
  /// Set when the coalgebra was given as the dual of a CDGA; emitted in that form.
  std::optional<CDGAlgebra> dual_of;
  LInfinity target{GradedSpace(), 2};
  /// φ as (coalgebra name, target name, coefficient).
  std::vector<std::tuple<std::string, std::string, Rational>> mc;
  std::optional<DegreeWindow> window;
  ProblemOptions options;
  /// Optional (ΛV, d), the input of `dualize --direction a2l`.
  std::optional<SullivanCDGA> sullivan;
};

/// Throws ParseError for syntax and schema errors (unknown names included) and AlgebraError when
/// the data is well formed but violates a structural precondition such as a bracket degree.
ProblemFile parse_problem(const std::string& text);

/// Canonical form: fixed key order, sorted entries, rationals as "p/q" strings.
std::string emit_problem(const ProblemFile& p);

/// Window of the problem, else LINFTY_WINDOW ("lo,hi"), else [-2, 12].
DegreeWindow effective_window(const ProblemFile& p);
DegreeWindow parse_window(const std::string& text);

/// φ as a vector of the convolution algebra.
GradedVector mc_vector(const ProblemFile& p, const ConvolutionAlgebra& A);

/// regular-seq-i2, cp2-connected-sum (alias cp2), s3y, free-lie-cpinf.
std::vector<std::string> builtin_names();
/// Throws std::out_of_range for unknown names.
ProblemFile builtin_problem(const std::string& name);

}  // namespace linfmap
