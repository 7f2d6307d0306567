#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <vector>

namespace craig {

// Variables double as terms. Inside a formula a variable is a de Bruijn
// index: an occurrence under k binders with index v < k is bound, and
// index v >= k denotes the free variable v - k.
using Var = std::uint32_t;
using Pred = std::uint32_t;

// Declaration order is the canonical constructor order used by
// canonical_compare and therefore by every printed sequent.
enum class Tag : std::uint8_t { Atom, Bot, Top, And, Or, Not, All, Ex };

enum class Quant : std::uint8_t { All, Ex };

class Formula {
 public:
  static Formula atom(Pred pred, std::vector<Var> args);
  static Formula bot();
  static Formula top();
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  static Formula negation(Formula body);
  static Formula forall(Formula body);
  static Formula exists(Formula body);
  static Formula quantified(Quant q, Formula body);

  Tag tag() const { return tag_; }
  bool is(Tag t) const { return tag_ == t; }
  bool is_quantifier() const { return is(Tag::All) || is(Tag::Ex); }
  std::optional<Quant> quantifier() const;

  // Accessors assert the matching constructor.
  Pred pred() const;
  const std::vector<Var>& args() const;
  const Formula& left() const;
  const Formula& right() const;
  // Body of Not, All and Ex.
  const Formula& body() const;

  std::size_t depth() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  static Formula make(Tag tag, Pred pred, std::vector<Var> args, std::vector<Formula> kids);
  Formula(Tag tag, std::shared_ptr<const Node> node) : tag_(tag), node_(std::move(node)) {}
  Tag tag_;
  std::shared_ptr<const Node> node_;
};

std::strong_ordering canonical_compare(const Formula& a, const Formula& b);

// Total renaming of variables; lifted under each binder (0 -> 0,
// n + 1 -> s(n) + 1).
Formula rename_vars(const std::function<Var(Var)>& s, const Formula& f);

// Named binder: abstracts every free occurrence of `a` in `body`.
Formula bind(Quant q, Var a, const Formula& body);

// Instantiates the outermost quantifier of `f` with `t`. Throws
// std::invalid_argument when the head of `f` is not the quantifier `q`.
Formula inst(Quant q, Var t, const Formula& f);

std::vector<Var> pre_suc(const std::vector<Var>& xs);

// Ordered, possibly with duplicates.
std::vector<Var> free_vars(const Formula& f);
std::set<Var> free_var_set(const Formula& f);

struct Polarity {
  std::set<Pred> positives;
  std::set<Pred> negatives;

  friend bool operator==(const Polarity&, const Polarity&) = default;
};

Polarity polarity(const Formula& f);
std::set<Pred> pos(const Formula& f);
std::set<Pred> neg(const Formula& f);

// Some t with inst(q, t, quantified) == instance, smallest first; a vacuous
// binder yields 0.
std::optional<Var> match_inst(const Formula& quantified, const Formula& instance);

// Smallest a outside `forbidden` with bind(q, a, body) == quantified.
std::optional<Var> match_bind(const Formula& quantified, const Formula& body,
                              const std::set<Var>& forbidden);

}  // namespace craig
