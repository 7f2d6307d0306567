#pragma once

#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "craig/formula.hpp"

namespace craig {

// Finite set of formulae kept as a strictly ascending sequence under
// canonical_compare, so set equality is representation equality.
class FormulaSet {
 public:
  using const_iterator = std::vector<Formula>::const_iterator;

  FormulaSet() = default;
  FormulaSet(std::initializer_list<Formula> fs);
  explicit FormulaSet(std::vector<Formula> fs);

  bool contains(const Formula& f) const;
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  std::span<const Formula> items() const { return items_; }

  FormulaSet with(const Formula& f) const;
  FormulaSet without(const Formula& f) const;
  bool is_subset_of(const FormulaSet& other) const;

  friend FormulaSet operator|(const FormulaSet& a, const FormulaSet& b);
  friend FormulaSet operator&(const FormulaSet& a, const FormulaSet& b);
  friend FormulaSet operator-(const FormulaSet& a, const FormulaSet& b);
  friend bool operator==(const FormulaSet&, const FormulaSet&) = default;
  friend auto operator<=>(const FormulaSet&, const FormulaSet&) = default;

 private:
  std::vector<Formula> items_;
};

struct Sequent {
  FormulaSet antecedent;
  FormulaSet succedent;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

std::set<Var> free_var_set(const FormulaSet& fs);
std::set<Var> free_var_set(const Sequent& s);
std::set<Pred> positives(const FormulaSet& fs);
std::set<Pred> negatives(const FormulaSet& fs);

enum class Rule : std::uint8_t {
  Init, BotL, TopR, AndL, AndR, OrL, OrR, NotL, NotR, AllL, AllR, ExL, ExR, WL, WR
};

inline constexpr std::size_t kRuleCount = 15;

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);
std::size_t rule_arity(Rule r);

// A proof tree; each node stores its conclusion and nothing else, as the
// side conditions are recovered by resolve_rule.
class Derivation {
 public:
  // Throws std::invalid_argument when the premise count does not match
  // rule_arity(rule).
  Derivation(Rule rule, Sequent conclusion, std::vector<Derivation> premises = {});

  Rule rule() const { return node_->rule; }
  const Sequent& root() const { return node_->conclusion; }
  const std::vector<Derivation>& premises() const { return node_->premises; }
  std::size_t size() const { return node_->size; }

  friend bool operator==(const Derivation& a, const Derivation& b);

 private:
  struct Node {
    Rule rule;
    Sequent conclusion;
    std::vector<Derivation> premises;
    std::size_t size;
  };
  std::shared_ptr<const Node> node_;
};

inline const Sequent& root(const Derivation& d) { return d.root(); }
inline std::size_t size(const Derivation& d) { return d.size(); }
inline const std::vector<Derivation>& premises(const Derivation& d) { return d.premises(); }

// The existential witnesses of one wellformedness clause.
struct RuleInstance {
  Rule kind;
  std::optional<Formula> analysed;
  std::optional<std::pair<Formula, Formula>> components;
  std::optional<Var> eigen;
  std::optional<Var> term;

  friend bool operator==(const RuleInstance&, const RuleInstance&) = default;
};

// Checks the node's own clause against the roots of its premises; does not
// descend. Candidates are scanned in canonical order, first match wins.
std::optional<RuleInstance> resolve_rule(const Derivation& d);

bool is_wellformed(const Derivation& d);

// Formula introduced by the rule into the premise, e.g. A[t] for AllL.
std::optional<Formula> quantifier_instance(const RuleInstance& r);

}  // namespace craig
