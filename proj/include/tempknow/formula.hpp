#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "tempknow/errors.hpp"

namespace tempknow {

// Connectives. "Core" after desugaring means: Atom, True, False, Not, And,
// Or, Since, SinceStrict, plus Until/Next when the future fragment is used.
// Everything else rewrites into the core (see desugar), except KAll, which
// is model-level and never survives desugaring.
enum class Kind : std::uint8_t {
  Atom,
  True,
  False,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Since,        // p S q   : q held at some past-or-present point, p ever since
  SinceStrict,  // p S! q  : same, but the witness point is strictly earlier
  Until,        // p U q
  Next,         // X p
  K1,           // knowledge held stable:  K1 p  ==  p S p
  K2,           // knowledge always held:  K2 p  ==  ~(true S ~p)
  KParam,       // knowledge since event:  K[q] p  ==  p S q
  DiamondPast,  // P p  ==  true S p
  BoxPast,      // H p  ==  ~(true S ~p)
  KAll,         // per-agent knowledge; resolved against a multi-agent model
};

bool is_binary(Kind k);
bool is_unary(Kind k);

/// Immutable formula tree with value semantics. Copies are cheap (shared
/// nodes); structural equality is the identity used everywhere.
class Formula {
 public:
  Formula() : Formula(truth()) {}

  static Formula atom(std::string name);
  static Formula truth();
  static Formula falsity();
  static Formula constant(bool value) { return value ? truth() : falsity(); }
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);
  static Formula since(Formula lhs, Formula rhs);
  static Formula since_strict(Formula lhs, Formula rhs);
  static Formula until(Formula lhs, Formula rhs);
  static Formula next(Formula f);
  static Formula k1(Formula f);
  static Formula k2(Formula f);
  // K[param] body; the parameter is the event the knowledge dates from.
  static Formula k_param(Formula param, Formula body);
  static Formula diamond_past(Formula f);
  static Formula box_past(Formula f);
  static Formula k_all(Formula f);

  Kind kind() const { return node_->kind; }
  /// Atom name; only meaningful for Kind::Atom.
  const std::string& name() const { return node_->name; }
  /// Left child of a binary node, or the single child of a unary node.
  /// For KParam the left child is the parameter formula.
  const Formula& lhs() const { return node_->lhs; }
  const Formula& rhs() const { return node_->rhs; }
  const Formula& child() const { return node_->lhs; }
  const Formula& param() const { return node_->lhs; }
  const Formula& body() const { return node_->rhs; }

  bool is_leaf() const;
  std::size_t hash() const { return node_->hash; }
  std::size_t node_count() const { return node_->size; }

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node {
    Kind kind;
    std::string name;  // Atom only
    Formula lhs;
    Formula rhs;
    std::size_t hash = 0;
    std::size_t size = 1;
    Node(Kind k, std::string n) : kind(k), name(std::move(n)) {}
    Node(Kind k, Formula l, Formula r)
        : kind(k), lhs(std::move(l)), rhs(std::move(r)) {}
    explicit Node(Kind k) : kind(k) {}
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make_leaf(Kind k, std::string name);
  static Formula make_unary(Kind k, Formula child);
  static Formula make_binary(Kind k, Formula lhs, Formula rhs);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

/// Simultaneous mapping from propositional letters to formulas. Letters
/// outside the domain map to themselves.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<std::string, Formula> mapping)
      : map_(std::move(mapping)) {}

  void set(const std::string& letter, Formula f);
  /// The image of a letter: the mapped formula, or the letter itself.
  Formula get(const std::string& letter) const;
  bool contains(const std::string& letter) const;
  const std::map<std::string, Formula>& mapping() const { return map_; }
  bool empty() const { return map_.empty(); }

  /// True when every formula in the range is True or False.
  bool is_ground() const;

 private:
  std::map<std::string, Formula> map_;
};

/// Inference rule "premise_1, ..., premise_n / conclusion".
struct Rule {
  std::vector<Formula> premises;
  Formula conclusion;
};

/// Rewrites knowledge and derived modal operators into the S-core:
///   K1 p     -> p S p
///   K2 p     -> ~(true S ~p)
///   K[q] p   -> p S q
///   P p      -> true S p
///   H p      -> ~(true S ~p)
///   p -> q   -> ~p | q
///   p <-> q  -> (~p | q) & (~q | p)
/// Until/Next pass through unchanged. Idempotent. Throws kall_error when a
/// KAll node is present (KAll is resolved against a multi-agent model, not
/// by rewriting).
Formula desugar(const Formula& f);

/// Replaces every atom by its image under the substitution, simultaneously:
/// letters inside inserted formulas are not substituted again.
Formula apply_substitution(const Substitution& sigma, const Formula& f);

/// (sigma . tau)(x) = apply_substitution(sigma, tau(x)), with domain
/// dom(tau) union dom(sigma).
Substitution compose(const Substitution& sigma, const Substitution& tau);

/// All distinct subformulas, children strictly before parents.
std::vector<Formula> subformula_closure(const Formula& f);

/// Names of the atoms occurring in the formula.
std::set<std::string> letters(const Formula& f);

/// True when the formula contains any of the given kinds.
bool contains_kind(const Formula& f, std::initializer_list<Kind> kinds);

}  // namespace tempknow
