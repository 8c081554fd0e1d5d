// Shared test utilities: deterministic random generators for formulas,
// traces and models, plus small independent oracles used to cross-check the
// library. Everything here is test-only code.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tempknow/formula.hpp"
#include "tempknow/model.hpp"

namespace testutil {

using tempknow::Formula;
using tempknow::Kind;
using tempknow::LassoTrace;
using tempknow::MultiAgentModel;
using tempknow::Trace;

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

enum class Fragment {
  Past,        // Boolean + S, S! and the knowledge/modal sugar
  Future,      // Boolean + X, U
  PastCore,    // Boolean + S, S! only (no sugar)
};

inline Formula random_formula(Rng& rng, int depth,
                              const std::vector<std::string>& letters,
                              Fragment fragment) {
  auto leaf = [&]() -> Formula {
    std::size_t c = pick(rng, letters.size() + 2);
    if (c < letters.size()) return Formula::atom(letters[c]);
    return c == letters.size() ? Formula::truth() : Formula::falsity();
  };
  if (depth <= 0 || pick(rng, 5) == 0) return leaf();

  auto sub = [&]() { return random_formula(rng, depth - 1, letters, fragment); };
  switch (fragment) {
    case Fragment::Past:
      switch (pick(rng, 12)) {
        case 0: return Formula::negation(sub());
        case 1: return Formula::conjunction(sub(), sub());
        case 2: return Formula::disjunction(sub(), sub());
        case 3: return Formula::implication(sub(), sub());
        case 4: return Formula::equivalence(sub(), sub());
        case 5: return Formula::since(sub(), sub());
        case 6: return Formula::since_strict(sub(), sub());
        case 7: return Formula::k1(sub());
        case 8: return Formula::k2(sub());
        case 9: return Formula::k_param(sub(), sub());
        case 10: return Formula::diamond_past(sub());
        default: return Formula::box_past(sub());
      }
    case Fragment::Future:
      switch (pick(rng, 7)) {
        case 0: return Formula::negation(sub());
        case 1: return Formula::conjunction(sub(), sub());
        case 2: return Formula::disjunction(sub(), sub());
        case 3: return Formula::implication(sub(), sub());
        case 4: return Formula::equivalence(sub(), sub());
        case 5: return Formula::until(sub(), sub());
        default: return Formula::next(sub());
      }
    case Fragment::PastCore:
      switch (pick(rng, 6)) {
        case 0: return Formula::negation(sub());
        case 1: return Formula::conjunction(sub(), sub());
        case 2: return Formula::disjunction(sub(), sub());
        case 3: return Formula::implication(sub(), sub());
        case 4: return Formula::since(sub(), sub());
        default: return Formula::since_strict(sub(), sub());
      }
  }
  return leaf();
}

/// Any formula the full parser can produce, sugar and KALL included; used
/// for printer round-trips.
inline Formula random_surface_formula(Rng& rng, int depth,
                                      const std::vector<std::string>& letters) {
  auto leaf = [&]() -> Formula {
    std::size_t c = pick(rng, letters.size() + 2);
    if (c < letters.size()) return Formula::atom(letters[c]);
    return c == letters.size() ? Formula::truth() : Formula::falsity();
  };
  if (depth <= 0 || pick(rng, 5) == 0) return leaf();
  auto sub = [&]() { return random_surface_formula(rng, depth - 1, letters); };
  switch (pick(rng, 16)) {
    case 0: return Formula::negation(sub());
    case 1: return Formula::conjunction(sub(), sub());
    case 2: return Formula::disjunction(sub(), sub());
    case 3: return Formula::implication(sub(), sub());
    case 4: return Formula::equivalence(sub(), sub());
    case 5: return Formula::since(sub(), sub());
    case 6: return Formula::since_strict(sub(), sub());
    case 7: return Formula::until(sub(), sub());
    case 8: return Formula::next(sub());
    case 9: return Formula::k1(sub());
    case 10: return Formula::k2(sub());
    case 11: return Formula::k_param(sub(), sub());
    case 12: return Formula::diamond_past(sub());
    case 13: return Formula::box_past(sub());
    default: return Formula::k_all(sub());
  }
}

inline Trace random_trace(Rng& rng, std::size_t length,
                          const std::vector<std::string>& letters) {
  Trace trace(length);
  for (const auto& letter : letters) {
    for (std::size_t a = 0; a < length; ++a) {
      if (pick(rng, 2)) trace.set(letter, a);
    }
  }
  return trace;
}

inline MultiAgentModel random_model(Rng& rng, std::size_t length,
                                    std::size_t agents,
                                    const std::vector<std::string>& letters) {
  MultiAgentModel model(length, agents);
  for (std::size_t i = 0; i < agents; ++i) {
    for (const auto& letter : letters) {
      for (std::size_t a = 0; a < length; ++a) {
        if (pick(rng, 2)) model.agent(i).set(letter, a);
      }
    }
  }
  return model;
}

inline LassoTrace random_lasso(Rng& rng, std::size_t prefix,
                               std::size_t loop,
                               const std::vector<std::string>& letters) {
  LassoTrace lasso(prefix, loop);
  for (const auto& letter : letters) {
    for (std::size_t a = 0; a < lasso.state_count(); ++a) {
      if (pick(rng, 2)) lasso.set(letter, a);
    }
  }
  return lasso;
}

// ---------------------------------------------------------------------------
// Exhaustive bounded satisfiability oracle.
//
// Enumerates every trace over the formula's letters up to max_len states and
// reports whether the formula holds anywhere. Rows are machine words (bit a =
// truth at state a), so this shares no code or data layout with the library
// evaluators. Feasible for <= 2 letters and max_len <= 10.

struct WordEvaluator {
  std::vector<Formula> closure;
  std::vector<std::string> letters;

  explicit WordEvaluator(const Formula& desugared)
      : closure(tempknow::subformula_closure(desugared)) {
    auto set = tempknow::letters(desugared);
    letters.assign(set.begin(), set.end());
  }

  // letter_words[j]: bit a set iff letter j true at state a.
  std::uint32_t root_row(const std::vector<std::uint32_t>& letter_words,
                         std::size_t n) const {
    std::uint32_t mask =
        n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
    std::vector<std::uint32_t> rows(closure.size(), 0);
    for (std::size_t i = 0; i < closure.size(); ++i) {
      const Formula& g = closure[i];
      switch (g.kind()) {
        case Kind::Atom: {
          std::size_t j = 0;
          while (letters[j] != g.name()) ++j;
          rows[i] = letter_words[j];
          break;
        }
        case Kind::True: rows[i] = mask; break;
        case Kind::False: rows[i] = 0; break;
        case Kind::Not: rows[i] = mask & ~row_of(rows, g.child()); break;
        case Kind::And:
          rows[i] = row_of(rows, g.lhs()) & row_of(rows, g.rhs());
          break;
        case Kind::Or:
          rows[i] = row_of(rows, g.lhs()) | row_of(rows, g.rhs());
          break;
        case Kind::Since: {
          std::uint32_t l = row_of(rows, g.lhs()), r = row_of(rows, g.rhs());
          std::uint32_t out = 0;
          bool prev = false;
          for (std::size_t a = 0; a < n; ++a) {
            prev = ((r >> a) & 1u) || (a > 0 && ((l >> a) & 1u) && prev);
            out |= std::uint32_t{prev} << a;
          }
          rows[i] = out;
          break;
        }
        case Kind::SinceStrict: {
          std::uint32_t l = row_of(rows, g.lhs()), r = row_of(rows, g.rhs());
          std::uint32_t out = 0;
          bool prev = false;
          for (std::size_t a = 0; a < n; ++a) {
            prev = a > 0 && ((l >> a) & 1u) && (((r >> (a - 1)) & 1u) || prev);
            out |= std::uint32_t{prev} << a;
          }
          rows[i] = out;
          break;
        }
        default:
          throw tempknow::error("word oracle handles the past core only");
      }
    }
    return rows.back();
  }

 private:
  std::uint32_t row_of(const std::vector<std::uint32_t>& rows,
                       const Formula& g) const {
    for (std::size_t i = 0;; ++i) {
      if (closure[i] == g) return rows[i];
    }
  }
};

/// Number of distinct since/strict-since nodes after desugaring; each one
/// carries exactly one bit of state between frame points, so a satisfiable
/// past formula has a witness of length at most 2^count (splice out a
/// repeated memory configuration and the shorter trace still witnesses it).
inline std::size_t since_count(const Formula& desugared) {
  std::size_t count = 0;
  for (const Formula& g : tempknow::subformula_closure(desugared)) {
    if (g.kind() == Kind::Since || g.kind() == Kind::SinceStrict) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Bounded-unrolling oracle for lasso evaluation.

/// The lasso flattened to prefix plus `copies` copies of the loop.
inline Trace unroll(const LassoTrace& lasso, std::size_t copies) {
  std::size_t p = lasso.prefix_length();
  std::size_t l = lasso.loop_length();
  Trace word(p + copies * l);
  auto letters = lasso.letters();
  auto copy_state = [&](std::size_t from, std::size_t to) {
    for (const auto& letter : letters) {
      if (lasso.holds(letter, from)) word.set(letter, to);
    }
  };
  for (std::size_t a = 0; a < p; ++a) copy_state(a, a);
  for (std::size_t c = 0; c < copies; ++c) {
    for (std::size_t a = 0; a < l; ++a) copy_state(p + a, p + c * l + a);
  }
  return word;
}

/// Evaluates a desugared future-fragment formula over a plain finite word
/// with weak end-of-word semantics: the last state has no successor, so
/// X f is false there and Until finds no witness beyond the end. Rows are
/// aligned with the given closure.
inline std::vector<std::vector<bool>> future_rows_finite(
    const Trace& word, const std::vector<Formula>& closure) {
  std::size_t n = word.length();
  std::vector<std::vector<bool>> rows(closure.size(),
                                      std::vector<bool>(n, false));
  auto row_of = [&](const Formula& g) -> const std::vector<bool>& {
    for (std::size_t i = 0;; ++i) {
      if (closure[i] == g) return rows[i];
    }
  };
  for (std::size_t i = 0; i < closure.size(); ++i) {
    const Formula& g = closure[i];
    switch (g.kind()) {
      case Kind::Atom:
        for (std::size_t a = 0; a < n; ++a) rows[i][a] = word.holds(g.name(), a);
        break;
      case Kind::True:
        rows[i].assign(n, true);
        break;
      case Kind::False:
        break;
      case Kind::Not: {
        const auto& c = row_of(g.child());
        for (std::size_t a = 0; a < n; ++a) rows[i][a] = !c[a];
        break;
      }
      case Kind::And: {
        const auto& l = row_of(g.lhs());
        const auto& r = row_of(g.rhs());
        for (std::size_t a = 0; a < n; ++a) rows[i][a] = l[a] && r[a];
        break;
      }
      case Kind::Or: {
        const auto& l = row_of(g.lhs());
        const auto& r = row_of(g.rhs());
        for (std::size_t a = 0; a < n; ++a) rows[i][a] = l[a] || r[a];
        break;
      }
      case Kind::Next: {
        const auto& c = row_of(g.child());
        for (std::size_t a = 0; a + 1 < n; ++a) rows[i][a] = c[a + 1];
        break;
      }
      case Kind::Until: {
        const auto& l = row_of(g.lhs());
        const auto& r = row_of(g.rhs());
        for (std::size_t a = n; a-- > 0;) {
          rows[i][a] = r[a] || (l[a] && a + 1 < n && rows[i][a + 1]);
        }
        break;
      }
      default:
        throw tempknow::error("finite-word oracle covers the future core only");
    }
  }
  return rows;
}

/// Exhaustive satisfiability over all traces of length 1..max_len on the
/// formula's own letters.
inline bool exhaustive_sat(const Formula& formula, std::size_t max_len) {
  Formula core = tempknow::desugar(formula);
  WordEvaluator eval(core);
  std::size_t k = eval.letters.size();
  for (std::size_t n = 1; n <= max_len; ++n) {
    std::uint64_t combos = std::uint64_t{1} << (k * n);
    for (std::uint64_t code = 0; code < combos; ++code) {
      std::vector<std::uint32_t> words(k);
      for (std::size_t j = 0; j < k; ++j) {
        words[j] =
            static_cast<std::uint32_t>((code >> (j * n)) & ((1u << n) - 1));
      }
      if (eval.root_row(words, n) != 0) return true;
    }
  }
  return false;
}

}  // namespace testutil
