#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "craig/calculus.hpp"
#include "craig/interpolation.hpp"

namespace craig {

// A propositional atom of the quantifier-free fragment.
struct AtomKey {
  Pred pred;
  std::vector<Var> args;

  friend bool operator==(const AtomKey&, const AtomKey&) = default;
  friend auto operator<=>(const AtomKey&, const AtomKey&) = default;
};

using Assignment = std::map<AtomKey, bool>;

class OracleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxOracleAtoms = 16;

// Throws OracleError on a quantifier or an atom missing from `v`.
bool eval(const Formula& f, const Assignment& v);

// Truth-table validity of Γ ⊢ Δ. Throws OracleError on quantifiers or
// more than kMaxOracleAtoms distinct atoms.
bool is_valid_sequent(const FormulaSet& gamma, const FormulaSet& delta);

// Γ1 ⊨ Δ1, C and C, Γ2 ⊨ Δ2.
bool semantic_verify(const SplitSequent& split, const Formula& c);

// SplitMix64: state += 0x9e3779b97f4a7c15, then the output mix
//   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
//   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
//   z ^ (z >> 31)
// below(n) is next() % n.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform-ish in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  bool chance(std::uint64_t one_in) { return below(one_in) == 0; }

 private:
  std::uint64_t state_;
};

struct GenConfig {
  std::size_t max_nodes = 12;
  Pred max_pred = 4;
  std::uint64_t seed = 0;
  bool allow_quantifiers = false;
};

// A wellformed derivation with at most max_nodes nodes, grown bottom-up
// from axiom leaves. Predicates are drawn from [0, max_pred). With
// allow_quantifiers, atoms take at most one argument from x0..x2 and the
// quantifier rules may appear.
Derivation gen_derivation(const GenConfig& cfg);

// Each antecedent formula goes to gamma1, gamma2 or both, each succedent
// formula to delta1, delta2 or both, one below(3) draw per formula in
// canonical order.
SplitSequent random_split(const Sequent& s, std::uint64_t seed);

struct FormulaGenConfig {
  std::size_t max_depth = 6;
  Pred max_pred = 4;
  // Variable indices are drawn from [0, max_var].
  Var max_var = 3;
  bool allow_quantifiers = true;
};

// Arbitrary formula, including raw de Bruijn indices under binders.
Formula gen_formula(SplitMix64& rng, const FormulaGenConfig& cfg);

}  // namespace craig
