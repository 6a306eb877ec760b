#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordlogic {

// Propositional terms shared by the relevance and denotation-graph
// machinery. And/Or are n-ary and kept flat.
struct Formula {
  enum class Kind { Atom, Top, Bot, Not, And, Or };

  Kind kind = Kind::Top;
  std::string atom;             // Kind::Atom only
  std::vector<Formula> kids;    // Not: exactly 1, And/Or: nonempty

  static Formula make_atom(std::string name);
  static Formula top();
  static Formula bot();
  static Formula negate(Formula f);
  static Formula conj(std::vector<Formula> kids);   // empty list -> Top
  static Formula disj(std::vector<Formula> kids);   // empty list -> Bot

  bool operator==(const Formula&) const = default;
};

struct FormulaError : std::runtime_error {
  size_t position;
  FormulaError(const std::string& msg, size_t pos)
      : std::runtime_error(msg), position(pos) {}
};

// Grammar: atoms [A-Za-z_][A-Za-z0-9_']*, '!' > '&' > '|',
// TOP/BOT keywords, parentheses, n-ary flattening of & and |.
Formula parse_formula(const std::string& text);

std::string render(const Formula& f);

// Sorted, deduplicated atom names.
std::vector<std::string> atoms_of(const Formula& f);

bool eval(const Formula& f, const std::function<bool(const std::string&)>& env);
bool eval(const Formula& f, const std::map<std::string, bool>& env);

// Replaces mapped atoms by constants; unmapped atoms survive.
Formula substitute(const Formula& f, const std::map<std::string, bool>& env);

// Constant folding plus flattening; empty conjunction folds to Top,
// empty disjunction to Bot.
Formula simplify(const Formula& f);

// Negation normal form (constants folded away where possible).
Formula nnf(const Formula& f);

// Truth-table equivalence over the union of the atom sets.
bool equivalent(const Formula& a, const Formula& b);

bool is_constant_true(const Formula& f);   // tautology, by table
bool is_constant_false(const Formula& f);  // contradiction, by table

}  // namespace ordlogic
