#include "craig/calculus.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <stdexcept>
#include <string>

namespace craig {

FormulaSet::FormulaSet(std::initializer_list<Formula> fs) : FormulaSet(std::vector<Formula>(fs)) {}

FormulaSet::FormulaSet(std::vector<Formula> fs) : items_(std::move(fs)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool FormulaSet::contains(const Formula& f) const {
  return std::binary_search(items_.begin(), items_.end(), f);
}

FormulaSet FormulaSet::with(const Formula& f) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), f);
  if (it != items_.end() && *it == f) return *this;
  FormulaSet out;
  out.items_.reserve(items_.size() + 1);
  out.items_.insert(out.items_.end(), items_.begin(), it);
  out.items_.push_back(f);
  out.items_.insert(out.items_.end(), it, items_.end());
  return out;
}

FormulaSet FormulaSet::without(const Formula& f) const {
  FormulaSet out;
  out.items_.reserve(items_.size());
  std::copy_if(items_.begin(), items_.end(), std::back_inserter(out.items_),
               [&](const Formula& g) { return g != f; });
  return out;
}

bool FormulaSet::is_subset_of(const FormulaSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

FormulaSet operator|(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out;
  std::set_union(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(),
                 std::back_inserter(out.items_));
  return out;
}

FormulaSet operator&(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out;
  std::set_intersection(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(),
                        std::back_inserter(out.items_));
  return out;
}

FormulaSet operator-(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out;
  std::set_difference(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(),
                      std::back_inserter(out.items_));
  return out;
}

std::set<Var> free_var_set(const FormulaSet& fs) {
  std::set<Var> out;
  for (const auto& f : fs) {
    for (Var v : free_vars(f)) out.insert(v);
  }
  return out;
}

std::set<Var> free_var_set(const Sequent& s) {
  auto out = free_var_set(s.antecedent);
  out.merge(free_var_set(s.succedent));
  return out;
}

std::set<Pred> positives(const FormulaSet& fs) {
  std::set<Pred> out;
  for (const auto& f : fs) out.merge(pos(f));
  return out;
}

std::set<Pred> negatives(const FormulaSet& fs) {
  std::set<Pred> out;
  for (const auto& f : fs) out.merge(neg(f));
  return out;
}

namespace {

constexpr std::array<std::string_view, kRuleCount> kRuleNames = {
    "Init", "BotL", "TopR", "AndL", "AndR", "OrL", "OrR", "NotL",
    "NotR", "AllL", "AllR", "ExL",  "ExR",  "WL",  "WR"};

}  // namespace

std::string_view rule_name(Rule r) { return kRuleNames[static_cast<std::size_t>(r)]; }

std::optional<Rule> rule_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i) {
    if (kRuleNames[i] == name) return static_cast<Rule>(i);
  }
  return std::nullopt;
}

std::size_t rule_arity(Rule r) {
  switch (r) {
    case Rule::Init:
    case Rule::BotL:
    case Rule::TopR:
      return 0;
    case Rule::AndR:
    case Rule::OrL:
      return 2;
    default:
      return 1;
  }
}

Derivation::Derivation(Rule rule, Sequent conclusion, std::vector<Derivation> premises) {
  if (premises.size() != rule_arity(rule)) {
    throw std::invalid_argument(std::string(rule_name(rule)) + " takes " +
                                std::to_string(rule_arity(rule)) + " premise(s), got " +
                                std::to_string(premises.size()));
  }
  std::size_t n = 1;
  for (const auto& p : premises) n += p.size();
  node_ = std::make_shared<const Node>(Node{rule, std::move(conclusion), std::move(premises), n});
}

bool operator==(const Derivation& a, const Derivation& b) {
  if (a.node_ == b.node_) return true;
  return a.rule() == b.rule() && a.size() == b.size() && a.root() == b.root() &&
         a.premises() == b.premises();
}

namespace {

// All E, in canonical order, with base ∪ {E} == extended.
std::vector<Formula> added_candidates(const FormulaSet& base, const FormulaSet& extended) {
  if (!base.is_subset_of(extended)) return {};
  auto extra = extended - base;
  if (extra.size() == 1) return {*extra.begin()};
  if (extra.empty()) return {base.begin(), base.end()};
  return {};
}

RuleInstance principal(Rule kind, const Formula& f) {
  RuleInstance r{kind, f, std::nullopt, std::nullopt, std::nullopt};
  if (f.is(Tag::And) || f.is(Tag::Or)) r.components = std::pair{f.left(), f.right()};
  return r;
}

std::optional<RuleInstance> resolve_quantifier(const Derivation& d, Rule kind) {
  const auto& [gamma, delta] = d.root();
  const auto& premise = d.premises()[0].root();
  const bool left = kind == Rule::AllL || kind == Rule::ExL;
  const Tag head = (kind == Rule::AllL || kind == Rule::AllR) ? Tag::All : Tag::Ex;
  const bool eigen = kind == Rule::AllR || kind == Rule::ExL;

  const FormulaSet& side = left ? gamma : delta;
  const FormulaSet& other = left ? delta : gamma;
  const FormulaSet& premise_side = left ? premise.antecedent : premise.succedent;
  const FormulaSet& premise_other = left ? premise.succedent : premise.antecedent;
  if (premise_other != other) return std::nullopt;

  auto added = added_candidates(side, premise_side);
  if (added.empty()) return std::nullopt;
  std::set<Var> forbidden;
  if (eigen) forbidden = free_var_set(d.root());

  for (const auto& q : side) {
    if (!q.is(head)) continue;
    for (const auto& e : added) {
      RuleInstance r{kind, q, std::nullopt, std::nullopt, std::nullopt};
      if (eigen) {
        if (auto a = match_bind(q, e, forbidden)) {
          r.eigen = *a;
          return r;
        }
      } else if (auto t = match_inst(q, e)) {
        r.term = *t;
        return r;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<RuleInstance> resolve_rule(const Derivation& d) {
  const auto& [gamma, delta] = d.root();
  const auto& subs = d.premises();
  switch (d.rule()) {
    case Rule::Init:
      for (const auto& a : gamma) {
        if (delta.contains(a)) return principal(Rule::Init, a);
      }
      return std::nullopt;
    case Rule::BotL:
      if (gamma.contains(Formula::bot())) return principal(Rule::BotL, Formula::bot());
      return std::nullopt;
    case Rule::TopR:
      if (delta.contains(Formula::top())) return principal(Rule::TopR, Formula::top());
      return std::nullopt;
    case Rule::AndL:
      for (const auto& f : gamma) {
        if (!f.is(Tag::And)) continue;
        if (subs[0].root() == Sequent{gamma.with(f.left()).with(f.right()), delta})
          return principal(Rule::AndL, f);
      }
      return std::nullopt;
    case Rule::AndR:
      for (const auto& f : delta) {
        if (!f.is(Tag::And)) continue;
        if (subs[0].root() == Sequent{gamma, delta.with(f.left())} &&
            subs[1].root() == Sequent{gamma, delta.with(f.right())})
          return principal(Rule::AndR, f);
      }
      return std::nullopt;
    case Rule::OrL:
      for (const auto& f : gamma) {
        if (!f.is(Tag::Or)) continue;
        if (subs[0].root() == Sequent{gamma.with(f.left()), delta} &&
            subs[1].root() == Sequent{gamma.with(f.right()), delta})
          return principal(Rule::OrL, f);
      }
      return std::nullopt;
    case Rule::OrR:
      for (const auto& f : delta) {
        if (!f.is(Tag::Or)) continue;
        if (subs[0].root() == Sequent{gamma, delta.with(f.left()).with(f.right())})
          return principal(Rule::OrR, f);
      }
      return std::nullopt;
    case Rule::NotL:
      for (const auto& f : gamma) {
        if (!f.is(Tag::Not)) continue;
        if (subs[0].root() == Sequent{gamma, delta.with(f.body())}) return principal(Rule::NotL, f);
      }
      return std::nullopt;
    case Rule::NotR:
      for (const auto& f : delta) {
        if (!f.is(Tag::Not)) continue;
        if (subs[0].root() == Sequent{gamma.with(f.body()), delta}) return principal(Rule::NotR, f);
      }
      return std::nullopt;
    case Rule::AllL:
    case Rule::AllR:
    case Rule::ExL:
    case Rule::ExR:
      return resolve_quantifier(d, d.rule());
    case Rule::WL: {
      const auto& premise = subs[0].root();
      if (premise.succedent != delta || !premise.antecedent.is_subset_of(gamma)) return std::nullopt;
      for (const auto& a : gamma) {
        if (premise.antecedent.with(a) == gamma) return principal(Rule::WL, a);
      }
      return std::nullopt;
    }
    case Rule::WR: {
      const auto& premise = subs[0].root();
      if (premise.antecedent != gamma || !premise.succedent.is_subset_of(delta)) return std::nullopt;
      for (const auto& a : delta) {
        if (premise.succedent.with(a) == delta) return principal(Rule::WR, a);
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool is_wellformed(const Derivation& d) {
  if (!resolve_rule(d)) return false;
  return std::all_of(d.premises().begin(), d.premises().end(),
                     [](const Derivation& p) { return is_wellformed(p); });
}

std::optional<Formula> quantifier_instance(const RuleInstance& r) {
  if (!r.analysed || !r.analysed->is_quantifier()) return std::nullopt;
  Quant q = *r.analysed->quantifier();
  if (r.eigen) return inst(q, *r.eigen, *r.analysed);
  if (r.term) return inst(q, *r.term, *r.analysed);
  return std::nullopt;
}

}  // namespace craig
