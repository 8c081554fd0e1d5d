#include "tempknow/unification.hpp"

#include <stdexcept>

namespace tempknow {

std::vector<Substitution> ground_unifiers(const Formula& f,
                                          const UnifyConfig& config) {
  auto letter_set = letters(f);
  std::vector<std::string> names(letter_set.begin(), letter_set.end());
  if (names.size() >= 8 * sizeof(std::size_t)) {
    throw resource_limit_error("too many letters for ground enumeration");
  }
  std::vector<Substitution> out;
  std::size_t count = std::size_t{1} << names.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    Substitution ground;
    // First letter is the most significant bit, false before true.
    for (std::size_t j = 0; j < names.size(); ++j) {
      bool value = (mask >> (names.size() - 1 - j)) & 1u;
      ground.set(names[j], Formula::constant(value));
    }
    if (valid_in_logic(apply_substitution(ground, f), config.decision)) {
      out.push_back(std::move(ground));
    }
  }
  return out;
}

bool is_unifiable(const Formula& f, const UnifyConfig& config) {
  auto letter_set = letters(f);
  std::vector<std::string> names(letter_set.begin(), letter_set.end());
  if (names.size() >= 8 * sizeof(std::size_t)) {
    throw resource_limit_error("too many letters for ground enumeration");
  }
  std::size_t count = std::size_t{1} << names.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    Substitution ground;
    for (std::size_t j = 0; j < names.size(); ++j) {
      bool value = (mask >> (names.size() - 1 - j)) & 1u;
      ground.set(names[j], Formula::constant(value));
    }
    if (valid_in_logic(apply_substitution(ground, f), config.decision)) {
      return true;
    }
  }
  return false;
}

Substitution loewenheim_candidate(const Formula& f,
                                  const Substitution& ground) {
  Formula box = Formula::box_past(f);
  Substitution sigma;
  for (const auto& name : letters(f)) {
    Formula keep = Formula::conjunction(box, Formula::atom(name));
    Formula image = ground.get(name);
    if (image.kind() == Kind::True) {
      sigma.set(name, Formula::disjunction(keep, Formula::negation(box)));
    } else if (image.kind() == Kind::False) {
      sigma.set(name, keep);
    } else {
      sigma.set(name,
                Formula::disjunction(
                    keep, Formula::conjunction(Formula::negation(box), image)));
    }
  }
  return sigma;
}

bool verify_projective(const Formula& f, const Substitution& sigma,
                       const UnifyConfig& config) {
  if (!valid_in_logic(apply_substitution(sigma, f), config.decision)) {
    return false;
  }
  Formula box = Formula::box_past(f);
  for (const auto& name : letters(f)) {
    Formula condition = Formula::implication(
        box, Formula::equivalence(Formula::atom(name), sigma.get(name)));
    if (!valid_in_logic(condition, config.decision)) return false;
  }
  return true;
}

UnificationOutcome projective_unifier(const Formula& f,
                                      const UnifyConfig& config) {
  UnificationOutcome outcome;
  outcome.ground_unifiers = ground_unifiers(f, config);
  if (outcome.ground_unifiers.empty()) {
    outcome.status = UnifyStatus::NotUnifiable;
    return outcome;
  }
  for (const Substitution& ground : outcome.ground_unifiers) {
    Substitution base = loewenheim_candidate(f, ground);
    Substitution candidate = base;
    for (std::size_t power = 1; power <= config.compose_bound; ++power) {
      if (verify_projective(f, candidate, config)) {
        outcome.status = UnifyStatus::Projective;
        outcome.projective = candidate;
        outcome.ground_seed = ground;
        return outcome;
      }
      candidate = compose(base, candidate);
    }
  }
  outcome.status = UnifyStatus::UnknownProjective;
  return outcome;
}

bool check_most_general(const Formula& f, const Substitution& sigma_p,
                        const Substitution& sigma, const UnifyConfig& config) {
  if (!valid_in_logic(apply_substitution(sigma, f), config.decision)) {
    throw not_a_unifier_error("the given substitution does not unify the formula");
  }
  for (const auto& name : letters(f)) {
    Formula through =
        apply_substitution(sigma, sigma_p.get(name));
    Formula condition = Formula::equivalence(sigma.get(name), through);
    if (!valid_in_logic(condition, config.decision)) return false;
  }
  return true;
}

AdmissibilityResult is_admissible(const Rule& rule, const UnifyConfig& config) {
  if (rule.premises.empty()) {
    throw std::invalid_argument("admissibility needs at least one premise");
  }
  Formula premise = rule.premises.front();
  for (std::size_t i = 1; i < rule.premises.size(); ++i) {
    premise = Formula::conjunction(premise, rule.premises[i]);
  }

  AdmissibilityResult result;
  UnificationOutcome outcome = projective_unifier(premise, config);
  switch (outcome.status) {
    case UnifyStatus::NotUnifiable:
      result.verdict = Admissibility::Admissible;
      result.vacuous = true;
      return result;
    case UnifyStatus::UnknownProjective:
      result.verdict = Admissibility::Unknown;
      return result;
    case UnifyStatus::Projective:
      break;
  }
  result.projective = outcome.projective;
  Formula instance = apply_substitution(*outcome.projective, rule.conclusion);
  if (valid_in_logic(instance, config.decision)) {
    result.verdict = Admissibility::Admissible;
    return result;
  }
  result.verdict = Admissibility::NotAdmissible;
  // A ground counter-unifier is the most useful certificate; one is not
  // guaranteed to exist even when the projective route refutes the rule.
  for (const Substitution& ground : outcome.ground_unifiers) {
    if (!valid_in_logic(apply_substitution(ground, rule.conclusion),
                        config.decision)) {
      result.evidence = ground;
      break;
    }
  }
  return result;
}

}  // namespace tempknow
