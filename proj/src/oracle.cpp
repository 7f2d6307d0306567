#include "craig/oracle.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

namespace craig {

namespace {

void collect_atoms(const Formula& f, std::set<AtomKey>& out) {
  switch (f.tag()) {
    case Tag::Atom:
      out.insert(AtomKey{f.pred(), f.args()});
      return;
    case Tag::Bot:
    case Tag::Top:
      return;
    case Tag::And:
    case Tag::Or:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
      return;
    case Tag::Not:
      collect_atoms(f.body(), out);
      return;
    case Tag::All:
    case Tag::Ex:
      throw OracleError("oracle: formula contains a quantifier");
  }
}

// Truth value under the assignment whose bit i gives atom index i.
bool eval_bits(const Formula& f, const std::map<AtomKey, std::size_t>& index, std::uint32_t bits) {
  switch (f.tag()) {
    case Tag::Atom:
      return (bits >> index.at(AtomKey{f.pred(), f.args()})) & 1u;
    case Tag::Bot:
      return false;
    case Tag::Top:
      return true;
    case Tag::And:
      return eval_bits(f.left(), index, bits) && eval_bits(f.right(), index, bits);
    case Tag::Or:
      return eval_bits(f.left(), index, bits) || eval_bits(f.right(), index, bits);
    case Tag::Not:
      return !eval_bits(f.body(), index, bits);
    case Tag::All:
    case Tag::Ex:
      break;
  }
  throw OracleError("oracle: formula contains a quantifier");
}

}  // namespace

bool eval(const Formula& f, const Assignment& v) {
  switch (f.tag()) {
    case Tag::Atom: {
      auto it = v.find(AtomKey{f.pred(), f.args()});
      if (it == v.end()) throw OracleError("oracle: assignment does not cover every atom");
      return it->second;
    }
    case Tag::Bot:
      return false;
    case Tag::Top:
      return true;
    case Tag::And:
      return eval(f.left(), v) && eval(f.right(), v);
    case Tag::Or:
      return eval(f.left(), v) || eval(f.right(), v);
    case Tag::Not:
      return !eval(f.body(), v);
    case Tag::All:
    case Tag::Ex:
      break;
  }
  throw OracleError("oracle: formula contains a quantifier");
}

bool is_valid_sequent(const FormulaSet& gamma, const FormulaSet& delta) {
  std::set<AtomKey> atoms;
  for (const auto& f : gamma) collect_atoms(f, atoms);
  for (const auto& f : delta) collect_atoms(f, atoms);
  if (atoms.size() > kMaxOracleAtoms) {
    throw OracleError("oracle: " + std::to_string(atoms.size()) + " atoms exceed the budget of " +
                      std::to_string(kMaxOracleAtoms));
  }
  std::map<AtomKey, std::size_t> index;
  for (const auto& a : atoms) index.emplace(a, index.size());
  const std::uint32_t rows = 1u << atoms.size();
  for (std::uint32_t bits = 0; bits < rows; ++bits) {
    const bool ante = std::all_of(gamma.begin(), gamma.end(),
                                  [&](const Formula& f) { return eval_bits(f, index, bits); });
    if (!ante) continue;
    const bool succ = std::any_of(delta.begin(), delta.end(),
                                  [&](const Formula& f) { return eval_bits(f, index, bits); });
    if (!succ) return false;
  }
  return true;
}

bool semantic_verify(const SplitSequent& split, const Formula& c) {
  return is_valid_sequent(split.gamma1, split.delta1.with(c)) &&
         is_valid_sequent(split.gamma2.with(c), split.delta2);
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SplitSequent random_split(const Sequent& s, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Formula> g1, g2, d1, d2;
  auto place = [&](const FormulaSet& side, std::vector<Formula>& one, std::vector<Formula>& two) {
    for (const auto& f : side) {
      switch (rng.below(3)) {
        case 0:
          one.push_back(f);
          break;
        case 1:
          two.push_back(f);
          break;
        default:
          one.push_back(f);
          two.push_back(f);
      }
    }
  };
  place(s.antecedent, g1, g2);
  place(s.succedent, d1, d2);
  return {FormulaSet(std::move(g1)), FormulaSet(std::move(g2)), FormulaSet(std::move(d1)),
          FormulaSet(std::move(d2))};
}

Formula gen_formula(SplitMix64& rng, const FormulaGenConfig& cfg) {
  const Pred preds = std::max<Pred>(cfg.max_pred, 1);
  if (cfg.max_depth <= 1 || rng.chance(4)) {
    switch (rng.below(8)) {
      case 0:
        return Formula::bot();
      case 1:
        return Formula::top();
      default: {
        std::vector<Var> args(rng.below(3));
        for (auto& v : args) v = static_cast<Var>(rng.below(cfg.max_var + 1ULL));
        return Formula::atom(static_cast<Pred>(rng.below(preds)), std::move(args));
      }
    }
  }
  FormulaGenConfig sub = cfg;
  sub.max_depth = cfg.max_depth - 1;
  switch (rng.below(cfg.allow_quantifiers ? 5 : 3)) {
    case 0:
      return Formula::negation(gen_formula(rng, sub));
    case 1: {
      auto l = gen_formula(rng, sub);
      return Formula::conj(std::move(l), gen_formula(rng, sub));
    }
    case 2: {
      auto l = gen_formula(rng, sub);
      return Formula::disj(std::move(l), gen_formula(rng, sub));
    }
    case 3:
      return Formula::forall(gen_formula(rng, sub));
    default:
      return Formula::exists(gen_formula(rng, sub));
  }
}

namespace {

// Every eigenvariable used by an AllR or ExL node of `d`.
void collect_eigenvariables(const Derivation& d, std::set<Var>& out) {
  if (auto r = resolve_rule(d); r && r->eigen) out.insert(*r->eigen);
  for (const auto& p : d.premises()) collect_eigenvariables(p, out);
}

// Adds `extra` to every sequent of `d`. Each clause quantifies over its
// context, so this keeps `d` wellformed as long as no eigenvariable of `d`
// becomes free in a conclusion.
Derivation weaken_everywhere(const Derivation& d, const Sequent& extra) {
  std::vector<Derivation> subs;
  subs.reserve(d.premises().size());
  for (const auto& p : d.premises()) subs.push_back(weaken_everywhere(p, extra));
  return Derivation(d.rule(), {d.root().antecedent | extra.antecedent, d.root().succedent | extra.succedent},
                    std::move(subs));
}

class Generator {
 public:
  explicit Generator(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  Derivation run() { return grow(std::max<std::size_t>(cfg_.max_nodes, 1)); }

 private:
  enum class Step { AndL, AndR, OrL, OrR, NotL, NotR, WL, WR, AllL, AllR, ExL, ExR };

  Pred preds() const { return std::max<Pred>(cfg_.max_pred, 1); }

  Formula atom() {
    const auto p = static_cast<Pred>(rng_.below(preds()));
    if (!cfg_.allow_quantifiers || rng_.chance(2)) return Formula::atom(p, {});
    return Formula::atom(p, {static_cast<Var>(rng_.below(3))});
  }

  Formula small_formula(std::size_t depth = 2) {
    if (depth == 0 || rng_.chance(2)) {
      if (rng_.chance(12)) return rng_.chance(2) ? Formula::bot() : Formula::top();
      return atom();
    }
    switch (rng_.below(3)) {
      case 0:
        return Formula::negation(small_formula(depth - 1));
      case 1: {
        auto l = small_formula(depth - 1);
        return Formula::conj(std::move(l), small_formula(depth - 1));
      }
      default: {
        auto l = small_formula(depth - 1);
        return Formula::disj(std::move(l), small_formula(depth - 1));
      }
    }
  }

  // A member of `side` or, one time in three or when `side` is empty, a
  // fresh small formula.
  Formula pick(const FormulaSet& side) {
    if (side.empty() || rng_.chance(3)) return small_formula();
    return side.items()[rng_.below(side.size())];
  }

  FormulaSet context() {
    FormulaSet out;
    for (std::uint64_t n = rng_.below(3); n > 0; --n) out = out.with(atom());
    return out;
  }

  Derivation leaf() {
    auto gamma = context();
    auto delta = context();
    switch (rng_.below(8)) {
      case 0:
        return Derivation(Rule::BotL, {gamma.with(Formula::bot()), delta});
      case 1:
        return Derivation(Rule::TopR, {gamma, delta.with(Formula::top())});
      default: {
        auto a = rng_.chance(4) ? small_formula() : atom();
        return Derivation(Rule::Init, {gamma.with(a), delta.with(a)});
      }
    }
  }

  // `d` with its root grown to `target`, or nullopt when that would
  // capture an eigenvariable.
  std::optional<Derivation> extend(const Derivation& d, const Sequent& target) {
    Sequent extra{target.antecedent - d.root().antecedent, target.succedent - d.root().succedent};
    if (extra.antecedent.empty() && extra.succedent.empty()) return d;
    if (cfg_.allow_quantifiers) {
      std::set<Var> eigen;
      collect_eigenvariables(d, eigen);
      for (Var v : free_var_set(extra)) {
        if (eigen.count(v)) return std::nullopt;
      }
    }
    return weaken_everywhere(d, extra);
  }

  // Drops each of `fs` from `side` with probability 1/2.
  FormulaSet maybe_drop(FormulaSet side, std::initializer_list<Formula> fs) {
    for (const auto& f : fs) {
      if (rng_.chance(2)) side = side.without(f);
    }
    return side;
  }

  Derivation grow(std::size_t budget) {
    if (budget <= 1 || rng_.chance(16)) return leaf();
    std::vector<Step> steps = {Step::AndL, Step::OrR, Step::NotL, Step::NotR, Step::WL, Step::WR};
    if (budget >= 3) {
      steps.push_back(Step::AndR);
      steps.push_back(Step::OrL);
    }
    if (cfg_.allow_quantifiers) {
      for (Step s : {Step::AllL, Step::AllR, Step::ExL, Step::ExR}) {
        steps.push_back(s);
        steps.push_back(s);
      }
    }
    const Step step = steps[rng_.below(steps.size())];
    if (step == Step::AndR || step == Step::OrL) return binary(step, budget);
    auto sub = grow(budget - 1);
    if (auto d = unary(step, sub)) return *d;
    return weakening(rng_.chance(2) ? Rule::WL : Rule::WR, sub);
  }

  Derivation weakening(Rule rule, const Derivation& sub) {
    const auto& [gamma, delta] = sub.root();
    auto x = small_formula();
    if (rule == Rule::WL) return Derivation(rule, {gamma.with(x), delta}, {sub});
    return Derivation(rule, {gamma, delta.with(x)}, {sub});
  }

  std::optional<Derivation> unary(Step step, const Derivation& sub) {
    const auto& [gamma, delta] = sub.root();
    switch (step) {
      case Step::WL:
        return weakening(Rule::WL, sub);
      case Step::WR:
        return weakening(Rule::WR, sub);
      case Step::AndL:
      case Step::OrR: {
        const bool left = step == Step::AndL;
        const auto& side = left ? gamma : delta;
        auto a = pick(side);
        auto b = pick(side);
        auto p = left ? Formula::conj(a, b) : Formula::disj(a, b);
        auto premise = left ? Sequent{gamma | FormulaSet{a, b, p}, delta} : Sequent{gamma, delta | FormulaSet{a, b, p}};
        auto d = extend(sub, premise);
        if (!d) return std::nullopt;
        auto conclusion = premise;
        auto& grown = left ? conclusion.antecedent : conclusion.succedent;
        grown = maybe_drop(grown, {a, b});
        return Derivation(left ? Rule::AndL : Rule::OrR, conclusion, {*d});
      }
      case Step::NotL: {
        auto a = pick(delta);
        Sequent premise{gamma.with(Formula::negation(a)), delta.with(a)};
        auto d = extend(sub, premise);
        if (!d) return std::nullopt;
        return Derivation(Rule::NotL, {premise.antecedent, maybe_drop(premise.succedent, {a})}, {*d});
      }
      case Step::NotR: {
        auto a = pick(gamma);
        Sequent premise{gamma.with(a), delta.with(Formula::negation(a))};
        auto d = extend(sub, premise);
        if (!d) return std::nullopt;
        return Derivation(Rule::NotR, {maybe_drop(premise.antecedent, {a}), premise.succedent}, {*d});
      }
      case Step::AllL:
      case Step::ExR:
      case Step::AllR:
      case Step::ExL:
        return quantifier(step, sub);
      default:
        return std::nullopt;
    }
  }

  // A body with at most one free variable, taken from `side` when possible.
  std::pair<Formula, Var> single_variable_body(const FormulaSet& side) {
    std::vector<Formula> candidates;
    for (const auto& f : side) {
      if (free_var_set(f).size() <= 1) candidates.push_back(f);
    }
    Formula body = candidates.empty() || rng_.chance(3) ? atom() : candidates[rng_.below(candidates.size())];
    auto fv = free_var_set(body);
    Var v = fv.empty() ? static_cast<Var>(rng_.below(3)) : *fv.begin();
    return {body, v};
  }

  std::optional<Derivation> quantifier(Step step, const Derivation& sub) {
    const auto& [gamma, delta] = sub.root();
    const bool left = step == Step::AllL || step == Step::ExL;
    const Quant q = (step == Step::AllL || step == Step::AllR) ? Quant::All : Quant::Ex;
    const Rule rule = step == Step::AllL ? Rule::AllL
                      : step == Step::ExR ? Rule::ExR
                      : step == Step::AllR ? Rule::AllR
                                           : Rule::ExL;
    auto [body, v] = single_variable_body(left ? gamma : delta);
    auto qf = bind(q, v, body);
    Sequent premise = left ? Sequent{gamma | FormulaSet{body, qf}, delta} : Sequent{gamma, delta | FormulaSet{body, qf}};
    auto d = extend(sub, premise);
    if (!d) return std::nullopt;
    Sequent conclusion = premise;
    auto& side = left ? conclusion.antecedent : conclusion.succedent;
    const bool eigen = rule == Rule::AllR || rule == Rule::ExL;
    if (eigen) {
      side = side.without(body);
      if (free_var_set(conclusion).count(v)) return std::nullopt;
    } else {
      side = maybe_drop(side, {body});
    }
    return Derivation(rule, conclusion, {*d});
  }

  Derivation binary(Step step, std::size_t budget) {
    const bool left = step == Step::OrL;
    const std::size_t first = 1 + rng_.below(budget - 2);
    auto d1 = grow(first);
    auto d2 = grow(budget - 1 - first);
    const auto& side1 = left ? d1.root().antecedent : d1.root().succedent;
    const auto& side2 = left ? d2.root().antecedent : d2.root().succedent;
    auto a = pick(side1);
    auto b = pick(side2);
    auto p = left ? Formula::disj(a, b) : Formula::conj(a, b);
    FormulaSet gamma = d1.root().antecedent | d2.root().antecedent;
    FormulaSet delta = d1.root().succedent | d2.root().succedent;
    FormulaSet& principal_side = left ? gamma : delta;
    principal_side = principal_side.with(p);
    if (rng_.chance(2)) {
      if (!side2.contains(a)) principal_side = principal_side.without(a);
      if (!side1.contains(b)) principal_side = principal_side.without(b);
    }
    auto premise = [&](const Formula& x) {
      return left ? Sequent{gamma.with(x), delta} : Sequent{gamma, delta.with(x)};
    };
    auto e1 = extend(d1, premise(a));
    auto e2 = extend(d2, premise(b));
    if (!e1 || !e2) return weakening(left ? Rule::WL : Rule::WR, d1);
    return Derivation(left ? Rule::OrL : Rule::AndR, {gamma, delta}, {*e1, *e2});
  }

  GenConfig cfg_;
  SplitMix64 rng_;
};

}  // namespace

Derivation gen_derivation(const GenConfig& cfg) { return Generator(cfg).run(); }

}  // namespace craig
