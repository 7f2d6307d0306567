#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "craig/calculus.hpp"

namespace craig {

// Four-way split of a root sequent: (gamma1 ∪ gamma2) ⊢ (delta1 ∪ delta2).
// The parts may overlap.
struct SplitSequent {
  FormulaSet gamma1;
  FormulaSet gamma2;
  FormulaSet delta1;
  FormulaSet delta2;

  friend bool operator==(const SplitSequent&, const SplitSequent&) = default;
};

bool matches(const SplitSequent& split, const Sequent& s);

// (Γ, {}, {}, Δ): the split that yields the ordinary interpolation theorem.
SplitSequent weak_split(const Sequent& s);

// left_witness proves gamma1 ⊢ delta1, C; right_witness proves C, gamma2 ⊢ delta2.
struct InterpolationResult {
  Formula interpolant;
  Derivation left_witness;
  Derivation right_witness;

  friend bool operator==(const InterpolationResult&, const InterpolationResult&) = default;
};

// Case-analysis branches of the algorithm. The first 32 are the cases of
// the published proof; the last four handle the ⊥L and ⊤R axioms, which
// the proof does not spell out.
enum class Branch : std::uint8_t {
  InitG1D1, InitG1D2, InitG2D1, InitG2D2,
  AndLG1, AndLG2, AndRD1, AndRD2,
  OrLG1, OrLG2, OrRD1, OrRD2,
  NotLG1, NotLG2, NotRD1, NotRD2,
  AllLG1, AllLG2, AllRD1, AllRD2,
  ExLG1, ExLG2, ExRD1, ExRD2,
  WLBoth, WLG1Only, WLG2Only, WLNeither,
  WRBoth, WRD1Only, WRD2Only, WRNeither,
  BotLG1, BotLG2, TopRD1, TopRD2,
};

inline constexpr std::size_t kCoreBranchCount = 32;
inline constexpr std::size_t kBranchCount = 36;

std::string_view branch_name(Branch b);

struct BranchCoverage {
  std::array<std::uint64_t, kBranchCount> hits{};

  void record(Branch b) { ++hits[static_cast<std::size_t>(b)]; }
  std::uint64_t count(Branch b) const { return hits[static_cast<std::size_t>(b)]; }
  void merge(const BranchCoverage& other);
};

class InterpolationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws InterpolationError if `d` is not wellformed or `split` does not
// match root(d). `coverage`, when given, counts every branch taken.
InterpolationResult interpolate_strong(const Derivation& d, const SplitSequent& split,
                                       BranchCoverage* coverage = nullptr);

InterpolationResult interpolate(const Derivation& d, BranchCoverage* coverage = nullptr);

struct Conjunct {
  std::string name;
  bool passed;
};

struct VerifyReport {
  std::vector<Conjunct> conjuncts;

  bool passed() const;
  // nullptr if no conjunct has this name.
  const Conjunct* find(std::string_view name) const;
};

// Re-checks every condition on an interpolation result from scratch:
//   left_wellformed, right_wellformed  both witnesses are derivations
//   left_root, right_root              their conclusions match the split
//   pos_left   pos C ⊆ pos Γ1 ∪ neg Δ1     pos_right  pos C ⊆ neg Γ2 ∪ pos Δ2
//   neg_left   neg C ⊆ neg Γ1 ∪ pos Δ1     neg_right  neg C ⊆ pos Γ2 ∪ neg Δ2
VerifyReport verify(const SplitSequent& split, const InterpolationResult& result);

// Removes ⊤/⊥ by the unit laws, bottom-up. Never applied by the
// interpolation itself.
Formula simplify_bool(const Formula& f);

}  // namespace craig
