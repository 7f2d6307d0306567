#include <doctest.h>

#include <algorithm>
#include <set>

#include "craig/formula.hpp"
#include "craig/oracle.hpp"
#include "support.hpp"

using namespace craig;
using namespace craig::testing;

namespace {

Var identity(Var v) { return v; }

std::vector<Formula> sample_formulas(std::size_t n, std::uint64_t seed, std::size_t depth = 5) {
  SplitMix64 rng(seed);
  FormulaGenConfig cfg;
  cfg.max_depth = depth;
  std::vector<Formula> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(gen_formula(rng, cfg));
  return out;
}

}  // namespace

TEST_CASE("rename_vars") {
  auto s = [](Var v) { return v == 5 ? 0 : v + 1; };
  CHECK(rename_vars(s, P(0, {5, 3})) == P(0, {0, 4}));

  auto t = [](Var v) { return v == 0 ? Var{2} : v; };
  CHECK(rename_vars(t, All(P(0, {0, 1}))) == All(P(0, {0, 3})));

  for (const auto& f : sample_formulas(500, 1)) CHECK(rename_vars(identity, f) == f);
}

TEST_CASE("rename_vars composes") {
  auto s = [](Var v) { return v * 2 + 1; };
  auto t = [](Var v) { return v % 3; };
  auto st = [&](Var v) { return s(t(v)); };
  for (const auto& f : sample_formulas(500, 2)) {
    CHECK(rename_vars(s, rename_vars(t, f)) == rename_vars(st, f));
  }
}

TEST_CASE("bind") {
  CHECK(bind(Quant::All, 5, P(0, {5, 3})) == All(P(0, {0, 4})));
  CHECK(bind(Quant::Ex, 0, bot()) == Ex(bot()));
  CHECK(free_vars(bind(Quant::All, 5, P(0, {5, 3}))) == std::vector<Var>{3});
}

TEST_CASE("inst") {
  CHECK(inst(Quant::All, 5, bind(Quant::All, 5, P(0, {5, 3}))) == P(0, {5, 3}));
  CHECK(inst(Quant::All, 7, All(P(0, {0, 4}))) == P(0, {7, 3}));
  CHECK_THROWS_AS(inst(Quant::Ex, 0, P(0)), std::invalid_argument);
  CHECK_THROWS_AS(inst(Quant::Ex, 0, All(P(0, {0}))), std::invalid_argument);
}

TEST_CASE("binder axioms") {
  for (const auto& f : sample_formulas(500, 3)) {
    for (Var a : {0u, 1u, 2u, 5u}) {
      for (Quant q : {Quant::All, Quant::Ex}) {
        auto b = bind(q, a, f);
        CHECK(inst(q, a, b) == f);
        auto fv = free_vars(b);
        CHECK(std::find(fv.begin(), fv.end(), a) == fv.end());
      }
    }
  }
}

TEST_CASE("pre_suc") {
  CHECK(pre_suc({}).empty());
  CHECK(pre_suc({0, 4}) == std::vector<Var>{3});
  CHECK(pre_suc({1, 0, 2, 0}) == std::vector<Var>{0, 1});
}

TEST_CASE("free_vars") {
  CHECK(free_vars(P(2, {1, 1, 0})) == std::vector<Var>{1, 1, 0});
  CHECK(free_vars(bot()).empty());
  CHECK(free_vars(All(P(0, {0, 4}))) == std::vector<Var>{3});
  CHECK(free_vars(And(P(0, {2}), Ex(P(1, {0, 1, 2})))) == std::vector<Var>{2, 0, 1});
}

TEST_CASE("polarity") {
  CHECK(polarity(P(3, {0})) == Polarity{{3}, {}});
  CHECK(polarity(bot()) == Polarity{});
  CHECK(polarity(Not(And(P(1), Not(P(2))))) == Polarity{{2}, {1}});
  CHECK(polarity(All(Or(P(0, {0}), Not(P(1, {1}))))) == Polarity{{0}, {1}});
}

TEST_CASE("polarity properties") {
  for (const auto& f : sample_formulas(500, 4)) {
    CHECK(pos(Not(f)) == neg(f));
    CHECK(neg(Not(f)) == pos(f));
    for (Quant q : {Quant::All, Quant::Ex}) {
      auto b = Formula::quantified(q, f);
      CHECK(polarity(inst(q, 3, b)) == polarity(b));
      CHECK(polarity(b) == polarity(f));
    }
  }
}

TEST_CASE("canonical_compare") {
  CHECK(canonical_compare(bot(), bot()) == std::strong_ordering::equal);
  CHECK(canonical_compare(bot(), top()) == std::strong_ordering::less);
  const std::vector<Formula> by_tag = {P(0), bot(), top(), And(P(0), P(0)), Or(P(0), P(0)),
                                       Not(P(0)), All(P(0)), Ex(P(0))};
  for (std::size_t i = 0; i + 1 < by_tag.size(); ++i) CHECK(by_tag[i] < by_tag[i + 1]);
  CHECK(P(0, {5}) < P(1));
  CHECK(P(0, {1}) < P(0, {1, 0}));
  CHECK(And(P(0), P(2)) < And(P(1), P(0)));

  std::vector<Formula> v = {top(), bot(), bot()};
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  CHECK(v == std::vector<Formula>{bot(), top()});
}

TEST_CASE("canonical_compare is a total order agreeing with equality") {
  auto fs = sample_formulas(200, 5, 3);
  for (const auto& a : fs) {
    for (const auto& b : fs) {
      auto ab = canonical_compare(a, b);
      CHECK((ab == 0) == (a == b));
      CHECK((canonical_compare(b, a) < 0) == (ab > 0));
    }
  }
}

TEST_CASE("match_inst") {
  CHECK(match_inst(All(P(0, {0, 4})), P(0, {7, 3})) == 7u);
  CHECK(match_inst(All(P(0, {1})), P(0, {0})) == 0u);
  CHECK(match_inst(All(P(0, {0})), P(1, {2})) == std::nullopt);
  CHECK_THROWS_AS(match_inst(P(0), P(0)), std::invalid_argument);
}

TEST_CASE("match_inst agrees with brute force") {
  SplitMix64 rng(6);
  FormulaGenConfig cfg;
  cfg.max_depth = 4;
  cfg.max_var = 2;
  for (int i = 0; i < 2000; ++i) {
    auto q = rng.chance(2) ? Quant::All : Quant::Ex;
    auto qf = Formula::quantified(q, gen_formula(rng, cfg));
    // Half the time a genuine instance, otherwise an arbitrary formula.
    auto e = rng.chance(2) ? inst(q, static_cast<Var>(rng.below(4)), qf) : gen_formula(rng, cfg);

    std::set<Var> candidates = free_var_set(e);
    candidates.insert(0);
    std::optional<Var> expected;
    for (Var t : candidates) {
      if (inst(q, t, qf) == e) {
        expected = t;
        break;
      }
    }
    CHECK(match_inst(qf, e) == expected);
    if (auto t = match_inst(qf, e)) CHECK(inst(q, *t, qf) == e);
  }
}

TEST_CASE("match_bind") {
  CHECK(match_bind(All(P(0, {0, 4})), P(0, {5, 3}), {3}) == 5u);
  CHECK(match_bind(All(P(0, {0, 4})), P(0, {5, 3}), {3, 5}) == std::nullopt);
  CHECK(match_bind(All(bot()), bot(), {}) == 0u);
  CHECK(match_bind(All(P(0, {1})), P(0, {0}), {0}) == 1u);
}

TEST_CASE("match_bind agrees with brute force") {
  SplitMix64 rng(7);
  FormulaGenConfig cfg;
  cfg.max_depth = 4;
  cfg.max_var = 3;
  for (int i = 0; i < 2000; ++i) {
    auto q = rng.chance(2) ? Quant::All : Quant::Ex;
    auto body = gen_formula(rng, cfg);
    auto qf = rng.chance(2) ? bind(q, static_cast<Var>(rng.below(5)), body)
                            : Formula::quantified(q, gen_formula(rng, cfg));
    std::set<Var> forbidden;
    for (Var v = 0; v < 5; ++v) {
      if (rng.chance(3)) forbidden.insert(v);
    }
    std::optional<Var> expected;
    for (Var a = 0; a < 16; ++a) {
      if (!forbidden.count(a) && bind(q, a, body) == qf) {
        expected = a;
        break;
      }
    }
    CHECK(match_bind(qf, body, forbidden) == expected);
  }
}

TEST_CASE("printing binder round trip") {
  for (const auto& body : sample_formulas(500, 8)) {
    auto f = All(body);
    auto fv = free_var_set(f);
    Var a = 0;
    while (fv.count(a)) ++a;
    CHECK(match_bind(f, inst(Quant::All, a, f), {}).has_value());
    CHECK(bind(Quant::All, a, inst(Quant::All, a, f)) == f);
  }
}
