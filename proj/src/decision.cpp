#include "tempknow/decision.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace tempknow {

StateSpace::StateSpace(const Formula& f, const DecisionConfig& config)
    : root_(desugar(f)) {
  if (contains_kind(root_, {Kind::Until, Kind::Next})) {
    throw future_operator_error(
        "satisfiability covers the past fragment only; remove Until/Next");
  }
  closure_ = subformula_closure(root_);

  auto letter_set = tempknow::letters(root_);
  letters_.assign(letter_set.begin(), letter_set.end());
  if (letters_.size() > config.letter_cap) {
    std::ostringstream msg;
    msg << "formula has " << letters_.size() << " letters, cap is "
        << config.letter_cap;
    throw resource_limit_error(msg.str());
  }

  std::unordered_map<Formula, std::uint32_t, FormulaHash> index;
  for (std::size_t i = 0; i < closure_.size(); ++i) {
    index.emplace(closure_[i], static_cast<std::uint32_t>(i));
  }
  program_.reserve(closure_.size());
  for (const Formula& g : closure_) {
    Instruction ins{};
    switch (g.kind()) {
      case Kind::Atom: {
        ins.op = Op::Atom;
        auto it = std::lower_bound(letters_.begin(), letters_.end(), g.name());
        ins.a = static_cast<std::uint32_t>(it - letters_.begin());
        break;
      }
      case Kind::True: ins.op = Op::True; break;
      case Kind::False: ins.op = Op::False; break;
      case Kind::Not:
        ins.op = Op::Not;
        ins.a = index.at(g.child());
        break;
      case Kind::And:
      case Kind::Or:
      case Kind::Since:
      case Kind::SinceStrict:
        ins.op = g.kind() == Kind::And     ? Op::And
                 : g.kind() == Kind::Or    ? Op::Or
                 : g.kind() == Kind::Since ? Op::Since
                                           : Op::SinceStrict;
        ins.a = index.at(g.lhs());
        ins.b = index.at(g.rhs());
        break;
      default:
        throw error("unexpected operator after desugaring");
    }
    program_.push_back(ins);
  }
}

StateVector StateSpace::run(const StateVector* previous,
                            std::uint32_t valuation) const {
  StateVector out(closure_.size());
  for (std::size_t i = 0; i < program_.size(); ++i) {
    const Instruction& ins = program_[i];
    bool bit = false;
    switch (ins.op) {
      case Op::Atom: bit = (valuation >> ins.a) & 1u; break;
      case Op::True: bit = true; break;
      case Op::False: bit = false; break;
      case Op::Not: bit = !out.get(ins.a); break;
      case Op::And: bit = out.get(ins.a) && out.get(ins.b); break;
      case Op::Or: bit = out.get(ins.a) || out.get(ins.b); break;
      case Op::Since:
        bit = out.get(ins.b) ||
              (out.get(ins.a) && previous && previous->get(i));
        break;
      case Op::SinceStrict:
        // Needs the previous point's bits of both arguments; false at the
        // initial point.
        bit = previous && out.get(ins.a) &&
              (previous->get(ins.b) || previous->get(i));
        break;
    }
    out.set(i, bit);
  }
  return out;
}

StateVector StateSpace::initial(std::uint32_t valuation) const {
  return run(nullptr, valuation);
}

StateVector StateSpace::step(const StateVector& s,
                             std::uint32_t valuation) const {
  return run(&s, valuation);
}

namespace {

Trace trace_from_valuations(const std::vector<std::string>& letters,
                            const std::vector<std::uint32_t>& valuations) {
  Trace trace(valuations.size());
  for (std::size_t a = 0; a < valuations.size(); ++a) {
    for (std::size_t j = 0; j < letters.size(); ++j) {
      if ((valuations[a] >> j) & 1u) trace.set(letters[j], a);
    }
  }
  return trace;
}

}  // namespace

std::optional<Witness> satisfiable(const Formula& f,
                                   const DecisionConfig& config) {
  StateSpace space(f, config);

  struct Discovered {
    StateVector vector;
    std::int64_t parent;       // index into the discovered list, -1 for roots
    std::uint32_t valuation;   // input that produced this vector
  };
  std::vector<Discovered> discovered;
  std::unordered_map<StateVector, std::size_t, StateVectorHash> seen;
  std::deque<std::size_t> frontier;

  auto build_witness = [&](std::size_t end) {
    std::vector<std::uint32_t> valuations;
    for (std::int64_t at = static_cast<std::int64_t>(end); at >= 0;
         at = discovered[static_cast<std::size_t>(at)].parent) {
      valuations.push_back(discovered[static_cast<std::size_t>(at)].valuation);
    }
    std::reverse(valuations.begin(), valuations.end());
    Trace trace = trace_from_valuations(space.letters(), valuations);
    return Witness{std::move(trace), valuations.size() - 1};
  };

  auto discover = [&](StateVector vector, std::int64_t parent,
                      std::uint32_t valuation) -> std::optional<std::size_t> {
    auto it = seen.find(vector);
    if (it != seen.end()) return std::nullopt;
    if (discovered.size() >= config.state_cap) {
      std::ostringstream msg;
      msg << "reachable state vectors exceed the cap of " << config.state_cap;
      throw resource_limit_error(msg.str());
    }
    std::size_t id = discovered.size();
    seen.emplace(vector, id);
    discovered.push_back({std::move(vector), parent, valuation});
    return id;
  };

  std::size_t branch = space.valuation_count();
  for (std::uint32_t v = 0; v < branch; ++v) {
    auto id = discover(space.initial(v), -1, v);
    if (!id) continue;
    if (space.target_bit(discovered[*id].vector)) return build_witness(*id);
    frontier.push_back(*id);
  }
  while (!frontier.empty()) {
    std::size_t at = frontier.front();
    frontier.pop_front();
    for (std::uint32_t v = 0; v < branch; ++v) {
      StateVector next = space.step(discovered[at].vector, v);
      auto id = discover(std::move(next), static_cast<std::int64_t>(at), v);
      if (!id) continue;
      if (space.target_bit(discovered[*id].vector)) return build_witness(*id);
      frontier.push_back(*id);
    }
  }
  return std::nullopt;
}

bool valid_in_logic(const Formula& f, const DecisionConfig& config) {
  return !satisfiable(Formula::negation(f), config).has_value();
}

bool equivalent(const Formula& f, const Formula& g,
                const DecisionConfig& config) {
  return valid_in_logic(Formula::equivalence(f, g), config);
}

}  // namespace tempknow
