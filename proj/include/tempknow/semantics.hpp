#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tempknow/formula.hpp"
#include "tempknow/model.hpp"

namespace tempknow {

/// Truth of every subformula at every state of a trace. Rows are indexed by
/// the subformula closure of the (desugared) root formula, children first.
class TruthTable {
 public:
  TruthTable(Formula root, std::vector<Formula> closure, std::size_t length);

  const Formula& root() const { return root_; }
  std::size_t length() const { return length_; }
  const std::vector<Formula>& closure() const { return closure_; }

  std::vector<bool>& row(std::size_t index) { return rows_[index]; }
  const std::vector<bool>& row(std::size_t index) const { return rows_[index]; }
  const std::vector<bool>& row(const Formula& f) const;
  bool at(const Formula& f, std::size_t state) const { return row(f)[state]; }
  /// Truth of the root formula at each state.
  const std::vector<bool>& root_row() const { return row(root_); }

  std::size_t index_of(const Formula& f) const;

  /// Set for lasso evaluations: rows of subformulas containing a past
  /// operator report first-unrolling values and are not loop-periodic in
  /// general.
  void mark_history_dependent(std::size_t index) {
    history_dependent_[index] = true;
  }
  bool history_dependent(std::size_t index) const {
    return history_dependent_[index];
  }
  bool history_dependent(const Formula& f) const {
    return history_dependent_[index_of(f)];
  }

 private:
  Formula root_;
  std::vector<Formula> closure_;
  std::unordered_map<Formula, std::size_t, FormulaHash> index_;
  std::size_t length_;
  std::vector<std::vector<bool>> rows_;
  std::vector<bool> history_dependent_;
};

/// Evaluates a past-fragment formula over a finite trace in one forward
/// pass: O(length * closure). The formula is desugared first; Until, Next
/// and KAll are rejected with future_operator_error / kall_error.
TruthTable eval_past(const Trace& trace, const Formula& f);

/// Same contract as eval_past, but Since rows are computed by direct
/// enumeration of witness points b and universal checks of the points c
/// after them — O(length^2) per operator. Serves as the independent oracle
/// for eval_past.
TruthTable eval_brute(const Trace& trace, const Formula& f);

/// Evaluates the full language over an ultimately periodic model. Until and
/// Next are resolved exactly by a two-pass fixpoint over the loop. Past
/// operators are threaded through prefix plus first loop unrolling and their
/// rows are marked history-dependent (see TruthTable).
TruthTable eval_lasso(const LassoTrace& lasso, const Formula& f);

/// Majority-vote valuation: a letter is true at a state iff strictly more
/// than half of the agents have it true there. Ties vote false.
Trace vote(const MultiAgentModel& model);

/// Conflict-resolution knowledge at one state: true iff every agent's
/// valuation satisfies body S body there. The body must be KAll-free;
/// nesting KAll is rejected.
bool eval_conflict_k(const MultiAgentModel& model, const Formula& body,
                     std::size_t state);

/// JSON rendering: {"formula": text, "rows": {subformula: [0/1,...]}}.
std::string truth_table_json(const TruthTable& table,
                             const std::string& formula_text);

}  // namespace tempknow
