#pragma once

// The CLI commands as functions from a problem to text and an exit code.

#include <string>

#include "linfmap/problem.hpp"

namespace linfmap::cli {

inline constexpr int kSuccess = 0;
inline constexpr int kUsage = 1;
inline constexpr int kValidationFailure = 2;
inline constexpr int kNonTerminating = 3;
inline constexpr int kParseError = 4;

enum class Format { table, records };
enum class Direction { l2a, a2l };

struct CommandResult {
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

/// Coalgebra axioms, CDGA axioms for a dual_of input, Jacobi of the target, the Maurer–Cartan
/// equation of φ and d² = 0 of the Sullivan section.
CommandResult validate(const ProblemFile& p, Format format);

/// Convolution algebra, twist by φ, truncation at 0 (1 with cover) and the invariants.
CommandResult model(const ProblemFile& p, bool pointed, bool cover, Format format);

/// l2a prints C^∞ of the target, a2l the L∞ algebra of the Sullivan section. Records output is a
/// problem file holding the other side.
CommandResult dualize(const ProblemFile& p, Direction direction, Format format);

/// Derivation oracle against the convolution model, at arities ≤ options.max_arity.
CommandResult crosscheck(const ProblemFile& p, Format format, int flipped_arity = 0);

/// Runs a command body, mapping ParseError, NonTerminatingSeries and AlgebraError to exit codes.
template <typename F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return {kParseError, "", std::string("parse error at ") + e.what() + "\n"};
  } catch (const NonTerminatingSeries& e) {
    return {kNonTerminating, "", std::string("nonterminating series: ") + e.what() + "\n"};
  } catch (const AlgebraError& e) {
    return {kValidationFailure, "", std::string("invalid: ") + e.what() + "\n"};
  }
}

/// Reads and parses, then runs the body on the problem.
template <typename F>
CommandResult with_problem(const std::string& text, F&& body) {
  return guarded([&] { return body(parse_problem(text)); });
}

}  // namespace linfmap::cli
