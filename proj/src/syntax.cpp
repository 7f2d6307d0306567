#include "craig/syntax.hpp"

#include <algorithm>
#include <optional>

namespace craig {

SyntaxError::SyntaxError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      message_(message),
      line_(line),
      column_(column) {}

RootMismatchError::RootMismatchError(const std::string& split_root, const std::string& derivation_root)
    : std::runtime_error("split " + split_root + " does not match derivation root " + derivation_root),
      split_root_(split_root),
      derivation_root_(derivation_root) {}

namespace {

// Deep enough for any real proof, shallow enough to stay off the end of
// the stack on hostile input.
constexpr std::size_t kMaxNesting = 4096;
constexpr std::uint32_t kMaxIndex = 0x7fffffff;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    std::size_t line = 1;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < pos && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    }
    throw SyntaxError(message, line, pos - line_start + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  // Next non-blank character, or '\0' at the end.
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'" + found());
    ++pos_;
  }

  void expect_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'" + found());
    pos_ += w.size();
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input" + found());
  }

  Formula formula(std::size_t depth = 0) {
    if (depth > kMaxNesting) fail("formula nested too deeply");
    switch (peek()) {
      case 'b':
        expect_word("bot");
        return Formula::bot();
      case 't':
        expect_word("top");
        return Formula::top();
      case 'P': {
        ++pos_;
        Pred p = nat("predicate index");
        std::vector<Var> args;
        expect('(');
        if (peek() != ')') {
          args.push_back(var());
          while (peek() == ',') {
            ++pos_;
            args.push_back(var());
          }
        }
        expect(')');
        return Formula::atom(p, std::move(args));
      }
      case '~':
        ++pos_;
        return Formula::negation(formula(depth + 1));
      case '(': {
        ++pos_;
        auto l = formula(depth + 1);
        char op = peek();
        if (op != '&' && op != '|') fail("expected '&' or '|'" + found());
        ++pos_;
        auto r = formula(depth + 1);
        expect(')');
        return op == '&' ? Formula::conj(std::move(l), std::move(r))
                         : Formula::disj(std::move(l), std::move(r));
      }
      case 'f':
      case 'e': {
        const Quant q = text_[pos_] == 'f' ? Quant::All : Quant::Ex;
        expect_word(q == Quant::All ? "forall" : "exists");
        Var a = var();
        expect('.');
        return bind(q, a, formula(depth + 1));
      }
      default:
        fail("expected formula" + found());
    }
  }

  std::vector<Formula> formula_list() {
    std::vector<Formula> out;
    expect('[');
    if (peek() == ']') {
      ++pos_;
      return out;
    }
    out.push_back(formula());
    while (peek() == ';') {
      ++pos_;
      out.push_back(formula());
    }
    expect(']');
    return out;
  }

  Sequent sequent() {
    FormulaSet ante(formula_list());
    expect_word("=>");
    FormulaSet succ(formula_list());
    return {std::move(ante), std::move(succ)};
  }

  Derivation derivation(std::size_t depth = 0) {
    if (depth > kMaxNesting) fail("derivation nested too deeply");
    expect('(');
    skip_ws();
    const std::size_t tag_pos = pos_;
    std::string tag = word();
    auto rule = rule_from_name(tag);
    if (!rule) fail_at(tag_pos, tag.empty() ? "expected rule tag" + found() : "unknown rule tag '" + tag + "'");
    Sequent s = sequent();
    std::vector<Derivation> subs;
    while (peek() == '(') subs.push_back(derivation(depth + 1));
    expect(')');
    if (subs.size() != rule_arity(*rule)) {
      fail_at(tag_pos, "arity error: " + tag + " takes " + std::to_string(rule_arity(*rule)) +
                           " premise(s), got " + std::to_string(subs.size()));
    }
    return Derivation(*rule, std::move(s), std::move(subs));
  }

  // Alphanumerics and '_' at the cursor, possibly empty.
  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (is_alnum(text_[pos_]) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // Reads "name:"; returns the name and its position.
  std::pair<std::string, std::size_t> label() {
    skip_ws();
    std::size_t at = pos_;
    std::string name = word();
    if (name.empty()) fail("expected a header such as 'derivation:'" + found());
    expect(':');
    return {name, at};
  }

  void skip_line() {
    while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_alnum(char c) {
    return is_digit(c) || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  }

  std::string found() const {
    if (pos_ >= text_.size()) return ", found end of input";
    unsigned char c = static_cast<unsigned char>(text_[pos_]);
    if (c >= 0x21 && c < 0x7f) return std::string(", found '") + static_cast<char>(c) + "'";
    return ", found byte " + std::to_string(c);
  }

  std::uint32_t nat(const char* what) {
    if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail(std::string("expected ") + what + found());
    std::uint64_t n = 0;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      n = n * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (n > kMaxIndex) fail_at(start, std::string(what) + " out of range");
      ++pos_;
    }
    return static_cast<std::uint32_t>(n);
  }

  Var var() {
    if (peek() != 'x') fail("expected variable" + found());
    ++pos_;
    return nat("variable index");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_formula_to(const Formula& f, std::string& out) {
  switch (f.tag()) {
    case Tag::Atom: {
      out += 'P';
      out += std::to_string(f.pred());
      out += '(';
      for (std::size_t i = 0; i < f.args().size(); ++i) {
        if (i) out += ',';
        out += 'x';
        out += std::to_string(f.args()[i]);
      }
      out += ')';
      return;
    }
    case Tag::Bot:
      out += "bot";
      return;
    case Tag::Top:
      out += "top";
      return;
    case Tag::And:
    case Tag::Or:
      out += '(';
      print_formula_to(f.left(), out);
      out += f.is(Tag::And) ? " & " : " | ";
      print_formula_to(f.right(), out);
      out += ')';
      return;
    case Tag::Not:
      out += '~';
      print_formula_to(f.body(), out);
      return;
    case Tag::All:
    case Tag::Ex: {
      auto fv = free_var_set(f);
      Var a = 0;
      while (fv.count(a)) ++a;
      out += f.is(Tag::All) ? "forall x" : "exists x";
      out += std::to_string(a);
      out += ". ";
      print_formula_to(inst(*f.quantifier(), a, f), out);
      return;
    }
  }
}

void print_list_to(std::span<const Formula> fs, std::string& out) {
  out += '[';
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ';';
    print_formula_to(fs[i], out);
  }
  out += ']';
}

void print_sequent_to(const Sequent& s, std::string& out) {
  print_list_to(s.antecedent.items(), out);
  out += " => ";
  print_list_to(s.succedent.items(), out);
}

void print_derivation_to(const Derivation& d, std::string& out) {
  out += '(';
  out += rule_name(d.rule());
  out += ' ';
  print_sequent_to(d.root(), out);
  for (const auto& p : d.premises()) {
    out += ' ';
    print_derivation_to(p, out);
  }
  out += ')';
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p(text);
  auto f = p.formula();
  p.expect_end();
  return f;
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_formula_to(f, out);
  return out;
}

Sequent parse_sequent(std::string_view text) {
  Parser p(text);
  auto s = p.sequent();
  p.expect_end();
  return s;
}

std::string print_sequent(const Sequent& s) {
  std::string out;
  print_sequent_to(s, out);
  return out;
}

Derivation parse_derivation(std::string_view text) {
  Parser p(text);
  auto d = p.derivation();
  p.expect_end();
  return d;
}

std::string print_derivation(const Derivation& d) {
  std::string out;
  print_derivation_to(d, out);
  return out;
}

SplitSequent ProblemFile::split() const {
  return {FormulaSet(gamma1), FormulaSet(gamma2), FormulaSet(delta1), FormulaSet(delta2)};
}

ProblemFile parse_problem(std::string_view text) {
  Parser p(text);
  std::array<std::optional<std::vector<Formula>>, 4> parts;
  constexpr std::array<std::string_view, 4> kParts = {"gamma1", "gamma2", "delta1", "delta2"};
  std::optional<Derivation> derivation;
  while (!p.at_end()) {
    auto [name, at] = p.label();
    if (name == "derivation") {
      if (derivation) p.fail_at(at, "duplicate header 'derivation'");
      derivation = p.derivation();
      continue;
    }
    auto it = std::find(kParts.begin(), kParts.end(), name);
    if (it == kParts.end()) p.fail_at(at, "unknown header '" + name + "'");
    auto& slot = parts[static_cast<std::size_t>(it - kParts.begin())];
    if (slot) p.fail_at(at, "duplicate header '" + name + "'");
    slot = p.formula_list();
  }
  if (!derivation) p.fail("missing 'derivation:' entry");
  ProblemFile out{parts[0].value_or(std::vector<Formula>{}), parts[1].value_or(std::vector<Formula>{}),
                  parts[2].value_or(std::vector<Formula>{}), parts[3].value_or(std::vector<Formula>{}),
                  *derivation};
  auto split = out.split();
  if (!matches(split, derivation->root())) {
    throw RootMismatchError(print_sequent({split.gamma1 | split.gamma2, split.delta1 | split.delta2}),
                            print_sequent(derivation->root()));
  }
  return out;
}

std::string print_problem(const ProblemFile& p) {
  std::string out;
  const std::array<std::pair<const char*, const std::vector<Formula>*>, 4> parts = {
      {{"gamma1: ", &p.gamma1}, {"gamma2: ", &p.gamma2}, {"delta1: ", &p.delta1}, {"delta2: ", &p.delta2}}};
  for (const auto& [name, fs] : parts) {
    out += name;
    print_list_to(*fs, out);
    out += '\n';
  }
  out += "derivation: ";
  print_derivation_to(p.derivation, out);
  out += '\n';
  return out;
}

InterpolationResult parse_result(std::string_view text) {
  Parser p(text);
  std::optional<Formula> interpolant;
  std::optional<Derivation> left;
  std::optional<Derivation> right;
  while (!p.at_end()) {
    auto [name, at] = p.label();
    if (name == "interpolant") {
      if (interpolant) p.fail_at(at, "duplicate entry 'interpolant'");
      interpolant = p.formula();
    } else if (name == "left") {
      if (left) p.fail_at(at, "duplicate entry 'left'");
      left = p.derivation();
    } else if (name == "right") {
      if (right) p.fail_at(at, "duplicate entry 'right'");
      right = p.derivation();
    } else {
      p.skip_line();
    }
  }
  if (!interpolant) p.fail("missing 'interpolant:' entry");
  if (!left) p.fail("missing 'left:' entry");
  if (!right) p.fail("missing 'right:' entry");
  return {*interpolant, *left, *right};
}

std::string print_result(const InterpolationResult& r) {
  std::string out = "interpolant: ";
  print_formula_to(r.interpolant, out);
  out += "\nleft: ";
  print_derivation_to(r.left_witness, out);
  out += "\nright: ";
  print_derivation_to(r.right_witness, out);
  out += '\n';
  return out;
}

}  // namespace craig
