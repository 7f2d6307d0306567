#include "craig/formula.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace craig {

struct Formula::Node {
  Tag tag;
  Pred pred = 0;
  std::vector<Var> args;
  std::vector<Formula> kids;
  std::size_t depth = 1;
};

Formula Formula::make(Tag tag, Pred pred, std::vector<Var> args, std::vector<Formula> kids) {
  auto n = std::make_shared<Node>();
  n->tag = tag;
  n->pred = pred;
  n->args = std::move(args);
  std::size_t d = 0;
  for (const auto& k : kids) d = std::max(d, k.depth());
  n->depth = d + 1;
  n->kids = std::move(kids);
  return Formula(tag, std::move(n));
}

Formula Formula::atom(Pred pred, std::vector<Var> args) {
  return make(Tag::Atom, pred, std::move(args), {});
}

Formula Formula::bot() {
  static const Formula f = make(Tag::Bot, 0, {}, {});
  return f;
}

Formula Formula::top() {
  static const Formula f = make(Tag::Top, 0, {}, {});
  return f;
}

Formula Formula::conj(Formula left, Formula right) {
  return make(Tag::And, 0, {}, {std::move(left), std::move(right)});
}

Formula Formula::disj(Formula left, Formula right) {
  return make(Tag::Or, 0, {}, {std::move(left), std::move(right)});
}

Formula Formula::negation(Formula body) {
  return make(Tag::Not, 0, {}, {std::move(body)});
}

Formula Formula::forall(Formula body) {
  return make(Tag::All, 0, {}, {std::move(body)});
}

Formula Formula::exists(Formula body) {
  return make(Tag::Ex, 0, {}, {std::move(body)});
}

Formula Formula::quantified(Quant q, Formula body) {
  return q == Quant::All ? forall(std::move(body)) : exists(std::move(body));
}

std::optional<Quant> Formula::quantifier() const {
  if (is(Tag::All)) return Quant::All;
  if (is(Tag::Ex)) return Quant::Ex;
  return std::nullopt;
}

Pred Formula::pred() const {
  assert(is(Tag::Atom));
  return node_->pred;
}

const std::vector<Var>& Formula::args() const {
  assert(is(Tag::Atom));
  return node_->args;
}

const Formula& Formula::left() const {
  assert(is(Tag::And) || is(Tag::Or));
  return node_->kids[0];
}

const Formula& Formula::right() const {
  assert(is(Tag::And) || is(Tag::Or));
  return node_->kids[1];
}

const Formula& Formula::body() const {
  assert(is(Tag::Not) || is_quantifier());
  return node_->kids[0];
}

std::size_t Formula::depth() const { return node_->depth; }

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.tag() <=> b.tag(); c != 0) return c;
  switch (a.tag()) {
    case Tag::Atom:
      if (auto c = a.node_->pred <=> b.node_->pred; c != 0) return c;
      return a.node_->args <=> b.node_->args;
    case Tag::Bot:
    case Tag::Top:
      return std::strong_ordering::equal;
    default:
      break;
  }
  const auto& ka = a.node_->kids;
  const auto& kb = b.node_->kids;
  for (std::size_t i = 0; i < ka.size(); ++i) {
    if (auto c = ka[i] <=> kb[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool operator==(const Formula& a, const Formula& b) { return (a <=> b) == 0; }

std::strong_ordering canonical_compare(const Formula& a, const Formula& b) { return a <=> b; }

namespace {

// `s` lifted under `depth` binders.
Formula rename_under(const std::function<Var(Var)>& s, const Formula& f, Var depth) {
  switch (f.tag()) {
    case Tag::Atom: {
      std::vector<Var> args;
      args.reserve(f.args().size());
      for (Var v : f.args()) args.push_back(v < depth ? v : s(v - depth) + depth);
      return Formula::atom(f.pred(), std::move(args));
    }
    case Tag::Bot:
    case Tag::Top:
      return f;
    case Tag::And:
      return Formula::conj(rename_under(s, f.left(), depth), rename_under(s, f.right(), depth));
    case Tag::Or:
      return Formula::disj(rename_under(s, f.left(), depth), rename_under(s, f.right(), depth));
    case Tag::Not:
      return Formula::negation(rename_under(s, f.body(), depth));
    case Tag::All:
      return Formula::forall(rename_under(s, f.body(), depth + 1));
    case Tag::Ex:
      return Formula::exists(rename_under(s, f.body(), depth + 1));
  }
  return f;
}

}  // namespace

Formula rename_vars(const std::function<Var(Var)>& s, const Formula& f) {
  return rename_under(s, f, 0);
}

Formula bind(Quant q, Var a, const Formula& body) {
  return Formula::quantified(q, rename_vars([a](Var v) { return v == a ? 0 : v + 1; }, body));
}

Formula inst(Quant q, Var t, const Formula& f) {
  if (f.quantifier() != q) {
    throw std::invalid_argument(q == Quant::All ? "inst: formula is not universally quantified"
                                                : "inst: formula is not existentially quantified");
  }
  return rename_vars([t](Var v) { return v == 0 ? t : v - 1; }, f.body());
}

std::vector<Var> pre_suc(const std::vector<Var>& xs) {
  std::vector<Var> out;
  out.reserve(xs.size());
  for (Var v : xs) {
    if (v != 0) out.push_back(v - 1);
  }
  return out;
}

std::vector<Var> free_vars(const Formula& f) {
  switch (f.tag()) {
    case Tag::Atom:
      return f.args();
    case Tag::Bot:
    case Tag::Top:
      return {};
    case Tag::And:
    case Tag::Or: {
      auto out = free_vars(f.left());
      auto rhs = free_vars(f.right());
      out.insert(out.end(), rhs.begin(), rhs.end());
      return out;
    }
    case Tag::Not:
      return free_vars(f.body());
    case Tag::All:
    case Tag::Ex:
      return pre_suc(free_vars(f.body()));
  }
  return {};
}

std::set<Var> free_var_set(const Formula& f) {
  auto xs = free_vars(f);
  return {xs.begin(), xs.end()};
}

Polarity polarity(const Formula& f) {
  switch (f.tag()) {
    case Tag::Atom:
      return {{f.pred()}, {}};
    case Tag::Bot:
    case Tag::Top:
      return {};
    case Tag::And:
    case Tag::Or: {
      auto l = polarity(f.left());
      auto r = polarity(f.right());
      l.positives.merge(r.positives);
      l.negatives.merge(r.negatives);
      return l;
    }
    case Tag::Not: {
      auto p = polarity(f.body());
      std::swap(p.positives, p.negatives);
      return p;
    }
    case Tag::All:
    case Tag::Ex:
      return polarity(f.body());
  }
  return {};
}

std::set<Pred> pos(const Formula& f) { return polarity(f).positives; }
std::set<Pred> neg(const Formula& f) { return polarity(f).negatives; }

std::optional<Var> match_inst(const Formula& quantified, const Formula& instance) {
  auto q = quantified.quantifier();
  if (!q) throw std::invalid_argument("match_inst: formula has no quantifier head");
  // A non-vacuous binder puts t among the free variables of the instance.
  auto candidates = free_var_set(instance);
  candidates.insert(0);
  for (Var t : candidates) {
    if (inst(*q, t, quantified) == instance) return t;
  }
  return std::nullopt;
}

std::optional<Var> match_bind(const Formula& quantified, const Formula& body,
                              const std::set<Var>& forbidden) {
  auto q = quantified.quantifier();
  if (!q) throw std::invalid_argument("match_bind: formula has no quantifier head");
  auto fv = free_var_set(body);
  // Every a outside fv(body) yields the same binder, so only the smallest
  // admissible one needs testing.
  Var fresh = 0;
  while (fv.count(fresh) || forbidden.count(fresh)) ++fresh;
  auto candidates = fv;
  candidates.insert(fresh);
  for (Var a : candidates) {
    if (forbidden.count(a)) continue;
    if (bind(*q, a, body) == quantified) return a;
  }
  return std::nullopt;
}

}  // namespace craig
