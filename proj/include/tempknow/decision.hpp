#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tempknow/formula.hpp"
#include "tempknow/model.hpp"

namespace tempknow {

struct DecisionConfig {
  std::size_t state_cap = std::size_t{1} << 22;
  std::size_t letter_cap = 16;
};

/// Truth bits of every closure subformula at the current frame point.
/// Composite bits are derived from atom and since bits, never free.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::size_t bit_count)
      : words_((bit_count + 63) / 64, 0) {}

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool value) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }

  bool operator==(const StateVector& other) const {
    return words_ == other.words_;
  }
  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t w : words_) {
      h = (h ^ w) * 0x100000001b3ull;
    }
    return h;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct StateVectorHash {
  std::size_t operator()(const StateVector& v) const { return v.hash(); }
};

/// A satisfying trace plus the state where the target formula holds.
struct Witness {
  Trace trace;
  std::size_t designated = 0;
};

/// The deterministic truth-vector automaton of a desugared past formula:
/// states are StateVectors over the subformula closure, inputs are atom
/// valuations encoded as bitmasks over letters() in sorted order.
class StateSpace {
 public:
  StateSpace(const Formula& f, const DecisionConfig& config = {});

  const Formula& root() const { return root_; }
  const std::vector<Formula>& closure() const { return closure_; }
  const std::vector<std::string>& letters() const { return letters_; }
  std::size_t valuation_count() const {
    return std::size_t{1} << letters_.size();
  }

  /// The unique vector at frame point 0 under the given atom valuation:
  /// non-strict since bits reduce to their right argument, strict bits are
  /// false.
  StateVector initial(std::uint32_t valuation) const;

  /// Deterministic successor at the next frame point.
  StateVector step(const StateVector& s, std::uint32_t valuation) const;

  bool target_bit(const StateVector& s) const {
    return s.get(closure_.size() - 1);
  }

 private:
  enum class Op : std::uint8_t { Atom, True, False, Not, And, Or, Since, SinceStrict };
  struct Instruction {
    Op op;
    std::uint32_t a = 0;  // child index / letter index
    std::uint32_t b = 0;
  };
  StateVector run(const StateVector* previous, std::uint32_t valuation) const;

  Formula root_;
  std::vector<Formula> closure_;
  std::vector<std::string> letters_;
  std::vector<Instruction> program_;
};

/// Complete satisfiability for the past fragment: breadth-first reachability
/// over truth vectors, branching over all atom valuations at each point.
/// Returns the witness found at the shallowest depth, or nullopt when the
/// reachable set saturates without hitting the target bit.
std::optional<Witness> satisfiable(const Formula& f,
                                   const DecisionConfig& config = {});

/// Membership in the logic: true iff the negation is unsatisfiable.
bool valid_in_logic(const Formula& f, const DecisionConfig& config = {});

/// Validity of the biconditional.
bool equivalent(const Formula& f, const Formula& g,
                const DecisionConfig& config = {});

}  // namespace tempknow
