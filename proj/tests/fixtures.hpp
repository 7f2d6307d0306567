#pragma once

#include <string>
#include <vector>

#include "support.hpp"

namespace craig::testing {

// A derivation, a split and the interpolant the algorithm must return.
struct Fixture {
  std::string name;
  Derivation derivation;
  SplitSequent split;
  Formula expected;
};

inline std::vector<Fixture> init_fixtures() {
  const Formula p = P(0);
  const Formula q = P(1);
  auto d = leaf(Rule::Init, {p}, {p});
  return {
      {"Init gamma1/delta1", d, {{p}, {}, {p}, {}}, bot()},
      {"Init gamma1/delta2", d, {{p}, {}, {}, {p}}, p},
      {"Init gamma2/delta1", d, {{}, {p}, {p}, {}}, Not(p)},
      {"Init gamma2/delta2", d, {{}, {p}, {}, {p}}, top()},
      {"Init gamma2/delta2 with context", leaf(Rule::Init, {p, q}, {q}), {{p}, {q}, {}, {q}}, top()},
  };
}

inline std::vector<Fixture> axiom_fixtures() {
  const Formula p = P(0);
  return {
      {"BotL gamma1", leaf(Rule::BotL, {bot()}, {}), {{bot()}, {}, {}, {}}, bot()},
      {"BotL gamma2", leaf(Rule::BotL, {bot(), p}, {p}), {{p}, {bot()}, {p}, {}}, top()},
      {"TopR delta1", leaf(Rule::TopR, {}, {top()}), {{}, {}, {top()}, {}}, bot()},
      {"TopR delta2", leaf(Rule::TopR, {p}, {top(), p}), {{}, {p}, {p}, {top()}}, top()},
  };
}

inline std::vector<Fixture> connective_fixtures() {
  const Formula p = P(0);
  const Formula q = P(1);
  const Formula pq = And(p, q);
  const Formula porq = Or(p, q);

  auto and_l = step(Rule::AndL, {pq}, {p}, {leaf(Rule::Init, {p, q, pq}, {p})});
  auto or_r = step(Rule::OrR, {p}, {porq}, {leaf(Rule::Init, {p}, {porq, p, q})});
  auto not_l = step(Rule::NotL, {p, Not(p)}, {}, {leaf(Rule::Init, {p, Not(p)}, {p})});
  auto not_r = step(Rule::NotR, {}, {p, Not(p)}, {leaf(Rule::Init, {p}, {p, Not(p)})});
  auto and_r = step(Rule::AndR, {p, q}, {pq},
                    {leaf(Rule::Init, {p, q}, {pq, p}), leaf(Rule::Init, {p, q}, {pq, q})});
  auto or_l = step(Rule::OrL, {porq}, {p, q},
                   {leaf(Rule::Init, {porq, p}, {p, q}), leaf(Rule::Init, {porq, q}, {p, q})});
  auto w_l = step(Rule::WL, {p, q}, {p}, {leaf(Rule::Init, {p}, {p})});
  auto w_r = step(Rule::WR, {p}, {p, q}, {leaf(Rule::Init, {p}, {p})});

  return {
      {"AndL gamma1", and_l, {{pq}, {}, {}, {p}}, p},
      {"AndL gamma2", and_l, {{}, {pq}, {p}, {}}, Not(p)},
      {"OrR delta1", or_r, {{}, {p}, {porq}, {}}, Not(p)},
      {"OrR delta2", or_r, {{p}, {}, {}, {porq}}, p},
      {"NotL gamma1", not_l, {{Not(p)}, {p}, {}, {}}, Not(p)},
      {"NotL gamma2", not_l, {{p}, {Not(p)}, {}, {}}, p},
      {"NotR delta1", not_r, {{}, {}, {Not(p)}, {p}}, p},
      {"NotR delta2", not_r, {{}, {}, {p}, {Not(p)}}, Not(p)},
      {"AndR delta1", and_r, {{p}, {q}, {pq}, {}}, Or(bot(), Not(q))},
      {"AndR delta2", and_r, {{p}, {q}, {}, {pq}}, And(p, top())},
      {"OrL gamma1", or_l, {{porq}, {}, {p}, {q}}, Or(bot(), q)},
      {"OrL gamma2", or_l, {{}, {porq}, {p}, {q}}, And(Not(p), top())},
      {"WL both", w_l, {{p, q}, {q}, {}, {p}}, p},
      {"WL gamma1 only", w_l, {{p, q}, {}, {}, {p}}, p},
      {"WL gamma2 only", w_l, {{p}, {q}, {}, {p}}, p},
      {"WR both", w_r, {{p}, {}, {q}, {p, q}}, p},
      {"WR delta1 only", w_r, {{p}, {}, {q}, {p}}, p},
      {"WR delta2 only", w_r, {{p}, {}, {}, {p, q}}, p},
  };
}

// ∀/∃ rules in both parts. Interpolants of the premises are atoms or
// negated atoms over x0, so each expected C is written out in full.
inline std::vector<Fixture> quantifier_fixtures() {
  const Formula px = P(0, {0});
  const Formula all = bind(Quant::All, 0, px);
  const Formula ex = bind(Quant::Ex, 0, px);

  auto all_l = step(Rule::AllL, {all}, {px}, {leaf(Rule::Init, {all, px}, {px})});
  auto ex_r = step(Rule::ExR, {px}, {ex}, {leaf(Rule::Init, {px}, {ex, px})});
  auto all_r = step(Rule::AllR, {all}, {all},
                    {step(Rule::AllL, {all}, {all, px}, {leaf(Rule::Init, {all, px}, {all, px})})});
  auto ex_l = step(Rule::ExL, {ex}, {ex},
                   {step(Rule::ExR, {ex, px}, {ex}, {leaf(Rule::Init, {ex, px}, {ex, px})})});

  return {
      {"AllL gamma1", all_l, {{all}, {}, {}, {px}}, px},
      {"AllL gamma2", all_l, {{}, {all}, {px}, {}}, Not(px)},
      {"ExR delta1", ex_r, {{}, {px}, {ex}, {}}, Not(px)},
      {"ExR delta2", ex_r, {{px}, {}, {}, {ex}}, px},
      {"AllR delta1", all_r, {{}, {all}, {all}, {}}, bind(Quant::Ex, 0, Not(px))},
      {"AllR delta2", all_r, {{all}, {}, {}, {all}}, bind(Quant::All, 0, px)},
      {"ExL gamma1", ex_l, {{ex}, {}, {}, {ex}}, bind(Quant::Ex, 0, px)},
      {"ExL gamma2", ex_l, {{}, {ex}, {ex}, {}}, bind(Quant::All, 0, Not(px))},
  };
}

}  // namespace craig::testing
