#pragma once

// Formula AST for the counterfactual logic: setting and outcome atoms,
// classical connectives, counterfactual (E []-> f) and root-level entailment
// (f => g).
//
// Concrete syntax, by descending precedence:
//   ~   &   |   []->   ->   =>
// `&` and `|` associate to the left, the arrows to the right. Atoms are
// L1 L2 R1 R2 and the outcome atoms L1+ L1- ... R2-; an outcome atom `X s`
// reads "X was performed and its outcome is s". The lexer also accepts
// the Unicode spellings ¬ ∧ ∨ → □→ □-> ⇒ and U+2212 as an outcome sign.

#include <memory>
#include <string>
#include <string_view>

#include "hardy/types.hpp"

namespace hardy {

class Formula {
 public:
  enum class Kind { SettingAtom, OutcomeAtom, Not, And, Or, Implies, Counterfactual, Entails };

  static Formula setting_atom(Setting s);
  static Formula outcome_atom(Setting s, Outcome o);
  // The composite factories throw NestingError when an operand contains
  // `=>`, so an Entails node can only ever be the root.
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula counterfactual(Setting antecedent, Formula consequent);
  static Formula entails(Formula antecedent, Formula consequent);

  Kind kind() const;
  // Atoms and Counterfactual (the antecedent).
  Setting setting() const;
  // OutcomeAtom only.
  Outcome outcome() const;
  // Binary nodes: both; Not: lhs; Counterfactual: rhs is the consequent.
  const Formula& lhs() const;
  const Formula& rhs() const;

  bool contains_entails() const;
  bool contains_counterfactual() const;
  int depth() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind kind, Setting s, Outcome o, const Formula* lhs, const Formula* rhs);

  std::shared_ptr<const Node> node_;
};

// Throws SyntaxError (with byte position), SemanticError for a non-setting
// counterfactual antecedent, NestingError for a non-root `=>`.
Formula parse(std::string_view text);

// Canonical fully parenthesized text; parse(pretty_print(f)) == f.
std::string pretty_print(const Formula& f);

}  // namespace hardy
