#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "craig/calculus.hpp"
#include "craig/formula.hpp"
#include "craig/interpolation.hpp"
#include "craig/oracle.hpp"

namespace craig::testing {

inline Formula P(Pred p, std::vector<Var> args = {}) { return Formula::atom(p, std::move(args)); }
inline Formula bot() { return Formula::bot(); }
inline Formula top() { return Formula::top(); }
inline Formula And(Formula a, Formula b) { return Formula::conj(std::move(a), std::move(b)); }
inline Formula Or(Formula a, Formula b) { return Formula::disj(std::move(a), std::move(b)); }
inline Formula Not(Formula a) { return Formula::negation(std::move(a)); }
inline Formula All(Formula a) { return Formula::forall(std::move(a)); }
inline Formula Ex(Formula a) { return Formula::exists(std::move(a)); }

inline Sequent seq(FormulaSet ante, FormulaSet succ) { return {std::move(ante), std::move(succ)}; }

inline Derivation leaf(Rule r, FormulaSet ante, FormulaSet succ) {
  return Derivation(r, {std::move(ante), std::move(succ)});
}

inline Derivation step(Rule r, FormulaSet ante, FormulaSet succ, std::vector<Derivation> subs) {
  return Derivation(r, {std::move(ante), std::move(succ)}, std::move(subs));
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Formula shift_preds(const Formula& f, Pred by) {
  switch (f.tag()) {
    case Tag::Atom:
      return Formula::atom(f.pred() + by, f.args());
    case Tag::Bot:
    case Tag::Top:
      return f;
    case Tag::And:
      return Formula::conj(shift_preds(f.left(), by), shift_preds(f.right(), by));
    case Tag::Or:
      return Formula::disj(shift_preds(f.left(), by), shift_preds(f.right(), by));
    case Tag::Not:
      return Formula::negation(shift_preds(f.body(), by));
    case Tag::All:
      return Formula::forall(shift_preds(f.body(), by));
    case Tag::Ex:
      return Formula::exists(shift_preds(f.body(), by));
  }
  return f;
}

inline FormulaSet shift_preds(const FormulaSet& fs, Pred by) {
  std::vector<Formula> out;
  for (const auto& f : fs) out.push_back(shift_preds(f, by));
  return FormulaSet(std::move(out));
}

// Renaming predicates injectively commutes with every clause, so the
// result is wellformed whenever `d` is.
inline Derivation shift_preds(const Derivation& d, Pred by) {
  std::vector<Derivation> subs;
  for (const auto& p : d.premises()) subs.push_back(shift_preds(p, by));
  return Derivation(d.rule(), {shift_preds(d.root().antecedent, by), shift_preds(d.root().succedent, by)},
                    std::move(subs));
}

// Adds `extra` to the root of `d` one formula at a time with WL and WR.
inline Derivation weaken_root(Derivation d, const Sequent& extra) {
  for (const auto& f : extra.antecedent) {
    if (d.root().antecedent.contains(f)) continue;
    Sequent s{d.root().antecedent.with(f), d.root().succedent};
    d = Derivation(Rule::WL, s, {d});
  }
  for (const auto& f : extra.succedent) {
    if (d.root().succedent.contains(f)) continue;
    Sequent s{d.root().antecedent, d.root().succedent.with(f)};
    d = Derivation(Rule::WR, s, {d});
  }
  return d;
}

struct Instance {
  Derivation derivation;
  SplitSequent split;
};

// Two derivations over predicates {0, 1} and {2, 3}; one of them proves
// the joint root after weakening in the other's root. The split puts each
// language on its own side.
inline Instance disjoint_instance(std::uint64_t seed) {
  SplitMix64 rng(seed);
  GenConfig cfg;
  cfg.max_nodes = 1 + rng.below(8);
  cfg.max_pred = 2;
  cfg.seed = rng.next();
  auto left = gen_derivation(cfg);
  cfg.max_nodes = 1 + rng.below(8);
  cfg.seed = rng.next();
  auto right = shift_preds(gen_derivation(cfg), 2);
  const bool use_left = rng.chance(2);
  auto d = use_left ? weaken_root(left, right.root()) : weaken_root(right, left.root());
  SplitSequent split{left.root().antecedent, right.root().antecedent, left.root().succedent,
                     right.root().succedent};
  return {d, split};
}

// Propositional corpus used by the property and acceptance suites.
inline std::vector<Derivation> corpus(std::size_t n, std::uint64_t seed, std::size_t max_nodes = 12,
                                      Pred max_pred = 4) {
  SplitMix64 rng(seed);
  std::vector<Derivation> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    GenConfig cfg;
    cfg.max_nodes = 1 + rng.below(max_nodes);
    cfg.max_pred = max_pred;
    cfg.seed = rng.next();
    out.push_back(gen_derivation(cfg));
  }
  return out;
}

}  // namespace craig::testing
