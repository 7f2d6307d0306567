#include "craig/interpolation.hpp"

#include <algorithm>
#include <string>

namespace craig {

bool matches(const SplitSequent& split, const Sequent& s) {
  return (split.gamma1 | split.gamma2) == s.antecedent && (split.delta1 | split.delta2) == s.succedent;
}

SplitSequent weak_split(const Sequent& s) { return {s.antecedent, {}, {}, s.succedent}; }

namespace {

constexpr std::array<std::string_view, kBranchCount> kBranchNames = {
    "Init/gamma1-delta1", "Init/gamma1-delta2", "Init/gamma2-delta1", "Init/gamma2-delta2",
    "AndL/gamma1",        "AndL/gamma2",        "AndR/delta1",        "AndR/delta2",
    "OrL/gamma1",         "OrL/gamma2",         "OrR/delta1",         "OrR/delta2",
    "NotL/gamma1",        "NotL/gamma2",        "NotR/delta1",        "NotR/delta2",
    "AllL/gamma1",        "AllL/gamma2",        "AllR/delta1",        "AllR/delta2",
    "ExL/gamma1",         "ExL/gamma2",         "ExR/delta1",         "ExR/delta2",
    "WL/both",            "WL/gamma1-only",     "WL/gamma2-only",     "WL/neither",
    "WR/both",            "WR/delta1-only",     "WR/delta2-only",     "WR/neither",
    "BotL/gamma1",        "BotL/gamma2",        "TopR/delta1",        "TopR/delta2"};

}  // namespace

std::string_view branch_name(Branch b) { return kBranchNames[static_cast<std::size_t>(b)]; }

void BranchCoverage::merge(const BranchCoverage& other) {
  for (std::size_t i = 0; i < kBranchCount; ++i) hits[i] += other.hits[i];
}

namespace {

using D = Derivation;
using F = Formula;
using S = FormulaSet;

D node(Rule r, S ante, S succ, std::vector<D> subs = {}) {
  return D(r, Sequent{std::move(ante), std::move(succ)}, std::move(subs));
}

S add(const S& s, std::initializer_list<F> fs) {
  S out = s;
  for (const auto& f : fs) out = out.with(f);
  return out;
}

class Interpolator {
 public:
  explicit Interpolator(BranchCoverage* coverage) : coverage_(coverage) {}

  InterpolationResult run(const D& d, const SplitSequent& sp) {
    auto r = resolve_rule(d);
    if (!r) throw InterpolationError("derivation node is not an instance of " + std::string(rule_name(d.rule())));
    switch (r->kind) {
      case Rule::Init:
        return init(sp);
      case Rule::BotL:
        return bot_left(sp);
      case Rule::TopR:
        return top_right(sp);
      case Rule::AndL:
        return and_left(d, *r, sp);
      case Rule::AndR:
        return and_right(d, *r, sp);
      case Rule::OrL:
        return or_left(d, *r, sp);
      case Rule::OrR:
        return or_right(d, *r, sp);
      case Rule::NotL:
        return not_left(d, *r, sp);
      case Rule::NotR:
        return not_right(d, *r, sp);
      case Rule::AllL:
      case Rule::ExR:
        return instance_rule(d, *r, sp);
      case Rule::AllR:
        return all_right(d, *r, sp);
      case Rule::ExL:
        return ex_left(d, *r, sp);
      case Rule::WL:
        return weaken_left(d, *r, sp);
      case Rule::WR:
        return weaken_right(d, *r, sp);
    }
    throw InterpolationError("unknown rule");
  }

 private:
  void hit(Branch b) {
    if (coverage_) coverage_->record(b);
  }

  InterpolationResult init(const SplitSequent& sp) {
    const auto& [g1, g2, d1, d2] = sp;
    for (const auto& a : g1) {
      if (!d1.contains(a)) continue;
      hit(Branch::InitG1D1);
      const F c = F::bot();
      return {c, node(Rule::Init, g1, d1.with(c)), node(Rule::BotL, g2.with(c), d2)};
    }
    for (const auto& a : g1) {
      if (!d2.contains(a)) continue;
      hit(Branch::InitG1D2);
      return {a, node(Rule::Init, g1, d1.with(a)), node(Rule::Init, g2.with(a), d2)};
    }
    for (const auto& a : g2) {
      if (!d1.contains(a)) continue;
      hit(Branch::InitG2D1);
      const F c = F::negation(a);
      return {c, node(Rule::NotR, g1, d1.with(c), {node(Rule::Init, g1.with(a), d1.with(c))}),
              node(Rule::NotL, g2.with(c), d2, {node(Rule::Init, g2.with(c), d2.with(a))})};
    }
    for (const auto& a : g2) {
      if (!d2.contains(a)) continue;
      hit(Branch::InitG2D2);
      const F c = F::top();
      return {c, node(Rule::TopR, g1, d1.with(c)), node(Rule::Init, g2.with(c), d2)};
    }
    throw InterpolationError("Init node shares no formula across the split");
  }

  InterpolationResult bot_left(const SplitSequent& sp) {
    const auto& [g1, g2, d1, d2] = sp;
    if (g1.contains(F::bot())) {
      hit(Branch::BotLG1);
      const F c = F::bot();
      return {c, node(Rule::BotL, g1, d1.with(c)), node(Rule::BotL, g2.with(c), d2)};
    }
    hit(Branch::BotLG2);
    const F c = F::top();
    return {c, node(Rule::TopR, g1, d1.with(c)), node(Rule::BotL, g2.with(c), d2)};
  }

  InterpolationResult top_right(const SplitSequent& sp) {
    const auto& [g1, g2, d1, d2] = sp;
    if (d1.contains(F::top())) {
      hit(Branch::TopRD1);
      const F c = F::bot();
      return {c, node(Rule::TopR, g1, d1.with(c)), node(Rule::BotL, g2.with(c), d2)};
    }
    hit(Branch::TopRD2);
    const F c = F::top();
    return {c, node(Rule::TopR, g1, d1.with(c)), node(Rule::TopR, g2.with(c), d2)};
  }

  // Rules with one premise whose principal formula is analysed on one
  // side: the premise gets `extra` on that side in part 1 or part 2, and
  // the matching witness is closed by the same rule.
  InterpolationResult one_sided(const D& d, Rule rule, bool in_part1, bool antecedent, const F& extra,
                                const SplitSequent& sp) {
    const auto& [g1, g2, d1, d2] = sp;
    SplitSequent sub_split = sp;
    S& target = in_part1 ? (antecedent ? sub_split.gamma1 : sub_split.delta1)
                         : (antecedent ? sub_split.gamma2 : sub_split.delta2);
    target = target.with(extra);
    auto sub = run(d.premises()[0], sub_split);
    const F& c = sub.interpolant;
    if (in_part1) return {c, node(rule, g1, d1.with(c), {sub.left_witness}), sub.right_witness};
    return {c, sub.left_witness, node(rule, g2.with(c), d2, {sub.right_witness})};
  }

  InterpolationResult and_left(const D& d, const RuleInstance& r, const SplitSequent& sp) {
    const auto& [a, b] = *r.components;
    const bool p1 = sp.gamma1.contains(*r.analysed);
    hit(p1 ? Branch::AndLG1 : Branch::AndLG2);
    SplitSequent sub_split = sp;
    S& target = p1 ? sub_split.gamma1 : sub_split.gamma2;
    target = add(target, {a, b});
    auto sub = run(d.premises()[0], sub_split);
    const F& c = sub.interpolant;
    if (p1) return {c, node(Rule::AndL, sp.gamma1, sp.delta1.with(c), {sub.left_witness}), sub.right_witness};
    return {c, sub.left_witness, node(Rule::AndL, sp.gamma2.with(c), sp.delta2, {sub.right_witness})};
  }

  InterpolationResult or_right(const D& d, const RuleInstance& r, const SplitSequent& sp) {
    const auto& [a, b] = *r.components;
    const bool p1 = sp.delta1.contains(*r.analysed);
    hit(p1 ? Branch::OrRD1 : Branch::OrRD2);
    SplitSequent sub_split = sp;
    S& target = p1 ? sub_split.delta1 : sub_split.delta2;
    target = add(target, {a, b});
    auto sub = run(d.premises()[0], sub_split);
    const F& c = sub.interpolant;
    if (p1) return {c, node(Rule::OrR, sp.gamma1, sp.delta1.with(c), {sub.left_witness}), sub.right_witness};
    return {c, sub.left_witness, node(Rule::OrR, sp.gamma2.with(c), sp.delta2, {sub.right_witness})};
  }

  InterpolationResult not_left(const D& d, const RuleInstance& r, const SplitSequent& sp) {
    const bool p1 = sp.gamma1.contains(*r.analysed);
    hit(p1 ? Branch::NotLG1 : Branch::NotLG2);
    return one_sided(d, Rule::NotL, p1, false, r.analysed->body(), sp);
  }

  InterpolationResult not_right(const D& d, const RuleInstance& r, const SplitSequent& sp) {
    const bool p1 = sp.delta1.contains(*r.analysed);
    hit(p1 ? Branch::NotRD1 : Branch::NotRD2);
    return one_sided(d, Rule::NotR, p1, true, r.analysed->body(), sp);
  }

  // AllL and ExR: the instance A[t] joins the side of the principal formula.
  InterpolationResult instance_rule(const D& d, const RuleInstance& r, const SplitSequent& sp) {
    const bool left = r.kind == Rule::AllL;
    const bool p1 = left ? sp.gamma1.contains(*r.analysed) : sp.delta1.contains(*r.analysed);
    if (left) {
      hit(p1 ? Branch::AllLG1 : Branch::AllLG2);
    } else {
      hit(p1 ? Branch::ExRD1 : Branch::ExRD2);
    }
    return one_sided(d, r.kind, p1, left, *quantifier_instance(r), sp);
  }

  InterpolationResult and_right(const D& d, const RuleInstance& r, const SplitSequent& sp) {
    const auto& [g1, g2, d1, d2] = sp;
    const auto& [a, b] = *r.components;
    if (d1.contains(*r.analysed)) {
      hit(Branch::AndRD1);
      auto l = run(d.premises()[0], {g1, g2, d1.with(a), d2});
      auto rr = run(d.premises()[1], {g1, g2, d1.with(b), d2});
      const F& c1 = l.interpolant;
      const F& c2 = rr.interpolant;
      const F c = F::disj(c1, c2);
      auto dll = node(Rule::WR, g1, add(d1, {a, c1, c}), {l.left_witness});
      dll = node(Rule::WR, g1, add(d1, {a, c1, c, c2}), {dll});
      dll = node(Rule::OrR, g1, add(d1, {a, c}), {dll});
      auto drl = node(Rule::WR, g1, add(d1, {b, c2, c}), {rr.left_witness});
      drl = node(Rule::WR, g1, add(d1, {b, c2, c, c1}), {drl});
      drl = node(Rule::OrR, g1, add(d1, {b, c}), {drl});
      auto left = node(Rule::AndR, g1, d1.with(c), {dll, drl});
      auto dlr = node(Rule::WL, add(g2, {c, c1}), d2, {l.right_witness});
      auto drr = node(Rule::WL, add(g2, {c, c2}), d2, {rr.right_witness});
      auto right = node(Rule::OrL, g2.with(c), d2, {dlr, drr});
      return {c, left, right};
    }
    hit(Branch::AndRD2);
    auto l = run(d.premises()[0], {g1, g2, d1, d2.with(a)});
    auto rr = run(d.premises()[1], {g1, g2, d1, d2.with(b)});
    const F& c1 = l.interpolant;
    const F& c2 = rr.interpolant;
    const F c = F::conj(c1, c2);
    auto dll = node(Rule::WR, g1, add(d1, {c1, c}), {l.left_witness});
    auto drl = node(Rule::WR, g1, add(d1, {c2, c}), {rr.left_witness});
    auto left = node(Rule::AndR, g1, d1.with(c), {dll, drl});
    auto dlr = node(Rule::WL, add(g2, {c2, c1}), d2.with(a), {l.right_witness});
    dlr = node(Rule::WL, add(g2, {c, c2, c1}), d2.with(a), {dlr});
    dlr = node(Rule::AndL, g2.with(c), d2.with(a), {dlr});
    auto drr = node(Rule::WL, add(g2, {c1, c2}), d2.with(b), {rr.right_witness});
    drr = node(Rule::WL, add(g2, {c, c1, c2}), d2.with(b), {drr});
    drr = node(Rule::AndL, g2.with(c), d2.with(b), {drr});
    auto right = node(Rule::AndR, g2.with(c), d2, {dlr, drr});
    return {c, left, right};
  }

  InterpolationResult or_left(const D& d, const RuleInstance& r, const SplitSequent& sp) {
    const auto& [g1, g2, d1, d2] = sp;
    const auto& [a, b] = *r.components;
    if (g1.contains(*r.analysed)) {
      hit(Branch::OrLG1);
      auto l = run(d.premises()[0], {g1.with(a), g2, d1, d2});
      auto rr = run(d.premises()[1], {g1.with(b), g2, d1, d2});
      const F& c1 = l.interpolant;
      const F& c2 = rr.interpolant;
      const F c = F::disj(c1, c2);
      auto dll = node(Rule::WR, g1.with(a), add(d1, {c1, c}), {l.left_witness});
      dll = node(Rule::WR, g1.with(a), add(d1, {c1, c, c2}), {dll});
      dll = node(Rule::OrR, g1.with(a), d1.with(c), {dll});
      auto drl = node(Rule::WR, g1.with(b), add(d1, {c2, c}), {rr.left_witness});
      drl = node(Rule::WR, g1.with(b), add(d1, {c2, c, c1}), {drl});
      drl = node(Rule::OrR, g1.with(b), d1.with(c), {drl});
      auto left = node(Rule::OrL, g1, d1.with(c), {dll, drl});
      auto dlr = node(Rule::WL, add(g2, {c, c1}), d2, {l.right_witness});
      auto drr = node(Rule::WL, add(g2, {c, c2}), d2, {rr.right_witness});
      auto right = node(Rule::OrL, g2.with(c), d2, {dlr, drr});
      return {c, left, right};
    }
    hit(Branch::OrLG2);
    auto l = run(d.premises()[0], {g1, g2.with(a), d1, d2});
    auto rr = run(d.premises()[1], {g1, g2.with(b), d1, d2});
    const F& c1 = l.interpolant;
    const F& c2 = rr.interpolant;
    const F c = F::conj(c1, c2);
    auto dll = node(Rule::WR, g1, add(d1, {c1, c}), {l.left_witness});
    auto drl = node(Rule::WR, g1, add(d1, {c2, c}), {rr.left_witness});
    auto left = node(Rule::AndR, g1, d1.with(c), {dll, drl});
    auto dlr = node(Rule::WL, add(g2, {c2, c1, a}), d2, {l.right_witness});
    dlr = node(Rule::WL, add(g2, {c, c2, c1, a}), d2, {dlr});
    dlr = node(Rule::AndL, add(g2, {c, a}), d2, {dlr});
    auto drr = node(Rule::WL, add(g2, {c1, c2, b}), d2, {rr.right_witness});
    drr = node(Rule::WL, add(g2, {c, c1, c2, b}), d2, {drr});
    drr = node(Rule::AndL, add(g2, {c, b}), d2, {drr});
    auto right = node(Rule::OrL, g2.with(c), d2, {dlr, drr});
    return {c, left, right};
  }

  InterpolationResult all_right(const D& d, const RuleInstance& r, const SplitSequent& sp) {
    const auto& [g1, g2, d1, d2] = sp;
    const Var ev = *r.eigen;
    const F e = *quantifier_instance(r);
    if (d1.contains(*r.analysed)) {
      hit(Branch::AllRD1);
      auto sub = run(d.premises()[0], {g1, g2, d1.with(e), d2});
      const F& c1 = sub.interpolant;
      const F c = bind(Quant::Ex, ev, c1);
      auto left = node(Rule::WR, g1, add(d1, {e, c1, c}), {sub.left_witness});
      left = node(Rule::ExR, g1, add(d1, {e, c}), {left});
      left = node(Rule::AllR, g1, d1.with(c), {left});
      auto right = node(Rule::WL, add(g2, {c, c1}), d2, {sub.right_witness});
      right = node(Rule::ExL, g2.with(c), d2, {right});
      return {c, left, right};
    }
    hit(Branch::AllRD2);
    auto sub = run(d.premises()[0], {g1, g2, d1, d2.with(e)});
    const F& c1 = sub.interpolant;
    const F c = bind(Quant::All, ev, c1);
    auto left = node(Rule::WR, g1, add(d1, {c1, c}), {sub.left_witness});
    left = node(Rule::AllR, g1, d1.with(c), {left});
    auto right = node(Rule::WL, add(g2, {c, c1}), d2.with(e), {sub.right_witness});
    right = node(Rule::AllL, g2.with(c), d2.with(e), {right});
    right = node(Rule::AllR, g2.with(c), d2, {right});
    return {c, left, right};
  }

  InterpolationResult ex_left(const D& d, const RuleInstance& r, const SplitSequent& sp) {
    const auto& [g1, g2, d1, d2] = sp;
    const Var ev = *r.eigen;
    const F e = *quantifier_instance(r);
    if (g1.contains(*r.analysed)) {
      hit(Branch::ExLG1);
      auto sub = run(d.premises()[0], {g1.with(e), g2, d1, d2});
      const F& c1 = sub.interpolant;
      const F c = bind(Quant::Ex, ev, c1);
      auto left = node(Rule::WR, g1.with(e), add(d1, {c1, c}), {sub.left_witness});
      left = node(Rule::ExR, g1.with(e), d1.with(c), {left});
      left = node(Rule::ExL, g1, d1.with(c), {left});
      auto right = node(Rule::WL, add(g2, {c, c1}), d2, {sub.right_witness});
      right = node(Rule::ExL, g2.with(c), d2, {right});
      return {c, left, right};
    }
    hit(Branch::ExLG2);
    auto sub = run(d.premises()[0], {g1, g2.with(e), d1, d2});
    const F& c1 = sub.interpolant;
    const F c = bind(Quant::All, ev, c1);
    auto left = node(Rule::WR, g1, add(d1, {c1, c}), {sub.left_witness});
    left = node(Rule::AllR, g1, d1.with(c), {left});
    auto right = node(Rule::WL, add(g2, {c, c1, e}), d2, {sub.right_witness});
    right = node(Rule::AllL, add(g2, {c, e}), d2, {right});
    right = node(Rule::ExL, g2.with(c), d2, {right});
    return {c, left, right};
  }

  InterpolationResult weaken_left(const D& d, const RuleInstance& r, const SplitSequent& sp) {
    const auto& [g1, g2, d1, d2] = sp;
    const F& a = *r.analysed;
    const auto& rest = d.premises()[0].root().antecedent;
    const bool in1 = g1.contains(a);
    const bool in2 = g2.contains(a);
    if (!in1 && !in2) {
      hit(Branch::WLNeither);
      throw std::logic_error("weakened formula lies in neither antecedent part");
    }
    hit(in1 && in2 ? Branch::WLBoth : in1 ? Branch::WLG1Only : Branch::WLG2Only);
    auto sub = run(d.premises()[0], {rest & g1, rest & g2, d1, d2});
    const F& c = sub.interpolant;
    auto left = in1 ? node(Rule::WL, g1, d1.with(c), {sub.left_witness}) : sub.left_witness;
    auto right = in2 ? node(Rule::WL, g2.with(c), d2, {sub.right_witness}) : sub.right_witness;
    return {c, left, right};
  }

  InterpolationResult weaken_right(const D& d, const RuleInstance& r, const SplitSequent& sp) {
    const auto& [g1, g2, d1, d2] = sp;
    const F& a = *r.analysed;
    const auto& rest = d.premises()[0].root().succedent;
    const bool in1 = d1.contains(a);
    const bool in2 = d2.contains(a);
    if (!in1 && !in2) {
      hit(Branch::WRNeither);
      throw std::logic_error("weakened formula lies in neither succedent part");
    }
    hit(in1 && in2 ? Branch::WRBoth : in1 ? Branch::WRD1Only : Branch::WRD2Only);
    auto sub = run(d.premises()[0], {g1, g2, rest & d1, rest & d2});
    const F& c = sub.interpolant;
    auto left = in1 ? node(Rule::WR, g1, d1.with(c), {sub.left_witness}) : sub.left_witness;
    auto right = in2 ? node(Rule::WR, g2.with(c), d2, {sub.right_witness}) : sub.right_witness;
    return {c, left, right};
  }

  BranchCoverage* coverage_;
};

}  // namespace

InterpolationResult interpolate_strong(const Derivation& d, const SplitSequent& split,
                                       BranchCoverage* coverage) {
  if (!matches(split, d.root())) throw InterpolationError("split does not match the derivation root");
  if (!is_wellformed(d)) throw InterpolationError("derivation is not wellformed");
  // Count into a scratch tally so a failed run leaves `coverage` untouched.
  BranchCoverage local;
  auto result = Interpolator(coverage ? &local : nullptr).run(d, split);
  if (coverage) coverage->merge(local);
  return result;
}

InterpolationResult interpolate(const Derivation& d, BranchCoverage* coverage) {
  return interpolate_strong(d, weak_split(d.root()), coverage);
}

bool VerifyReport::passed() const {
  return std::all_of(conjuncts.begin(), conjuncts.end(), [](const Conjunct& c) { return c.passed; });
}

const Conjunct* VerifyReport::find(std::string_view name) const {
  auto it = std::find_if(conjuncts.begin(), conjuncts.end(), [&](const Conjunct& c) { return c.name == name; });
  return it == conjuncts.end() ? nullptr : &*it;
}

namespace {

bool subset(const std::set<Pred>& a, const std::set<Pred>& b1, const std::set<Pred>& b2) {
  return std::all_of(a.begin(), a.end(), [&](Pred p) { return b1.count(p) || b2.count(p); });
}

}  // namespace

VerifyReport verify(const SplitSequent& split, const InterpolationResult& result) {
  const auto& [g1, g2, d1, d2] = split;
  const F& c = result.interpolant;
  const auto pc = polarity(c);
  VerifyReport report;
  report.conjuncts = {
      {"left_wellformed", is_wellformed(result.left_witness)},
      {"right_wellformed", is_wellformed(result.right_witness)},
      {"left_root", result.left_witness.root() == Sequent{g1, d1.with(c)}},
      {"right_root", result.right_witness.root() == Sequent{g2.with(c), d2}},
      {"pos_left", subset(pc.positives, positives(g1), negatives(d1))},
      {"pos_right", subset(pc.positives, negatives(g2), positives(d2))},
      {"neg_left", subset(pc.negatives, negatives(g1), positives(d1))},
      {"neg_right", subset(pc.negatives, positives(g2), negatives(d2))},
  };
  return report;
}

Formula simplify_bool(const Formula& f) {
  switch (f.tag()) {
    case Tag::Atom:
    case Tag::Bot:
    case Tag::Top:
      return f;
    case Tag::And: {
      auto l = simplify_bool(f.left());
      auto r = simplify_bool(f.right());
      if (l.is(Tag::Bot) || r.is(Tag::Bot)) return F::bot();
      if (l.is(Tag::Top)) return r;
      if (r.is(Tag::Top)) return l;
      return F::conj(l, r);
    }
    case Tag::Or: {
      auto l = simplify_bool(f.left());
      auto r = simplify_bool(f.right());
      if (l.is(Tag::Top) || r.is(Tag::Top)) return F::top();
      if (l.is(Tag::Bot)) return r;
      if (r.is(Tag::Bot)) return l;
      return F::disj(l, r);
    }
    case Tag::Not: {
      auto b = simplify_bool(f.body());
      if (b.is(Tag::Top)) return F::bot();
      if (b.is(Tag::Bot)) return F::top();
      return F::negation(b);
    }
    case Tag::All:
    case Tag::Ex: {
      auto b = simplify_bool(f.body());
      if (b.is(Tag::Bot) || b.is(Tag::Top)) return b;
      return F::quantified(*f.quantifier(), b);
    }
  }
  return f;
}

}  // namespace craig
