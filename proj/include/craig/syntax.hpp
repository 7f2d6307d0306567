#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "craig/calculus.hpp"
#include "craig/interpolation.hpp"

namespace craig {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column);

  // 1-based.
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// The split of a problem file does not match the root of its derivation.
class RootMismatchError : public std::runtime_error {
 public:
  RootMismatchError(const std::string& split_root, const std::string& derivation_root);

  const std::string& split_root() const { return split_root_; }
  const std::string& derivation_root() const { return derivation_root_; }

 private:
  std::string split_root_;
  std::string derivation_root_;
};

// form := "bot" | "top" | "P" nat "(" [var ("," var)*] ")" | "~" form
//       | "(" form "&" form ")" | "(" form "|" form ")"
//       | ("forall" | "exists") var "." form
// var  := "x" nat
// A binder's scope extends as far right as possible.
Formula parse_formula(std::string_view text);
std::string print_formula(const Formula& f);

// "[A;B] => [C]", sides in canonical order.
Sequent parse_sequent(std::string_view text);
std::string print_sequent(const Sequent& s);

// d := "(" tag seq d* ")"
Derivation parse_derivation(std::string_view text);
std::string print_derivation(const Derivation& d);

struct ProblemFile {
  // Surface order, duplicates kept.
  std::vector<Formula> gamma1;
  std::vector<Formula> gamma2;
  std::vector<Formula> delta1;
  std::vector<Formula> delta2;
  Derivation derivation;

  SplitSequent split() const;
};

// Headers "gamma1:", "gamma2:", "delta1:", "delta2:" (each optional, any
// order) followed by a bracketed formula list, and a mandatory
// "derivation:" header. Throws RootMismatchError when the split does not
// match the derivation.
ProblemFile parse_problem(std::string_view text);
std::string print_problem(const ProblemFile& p);

// Labelled entries "interpolant:", "left:", "right:". Any other
// "name: ..." line is skipped, so the output of `craig interpolate` is a
// valid result file.
InterpolationResult parse_result(std::string_view text);
std::string print_result(const InterpolationResult& r);

}  // namespace craig
