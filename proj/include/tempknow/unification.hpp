#pragma once

#include <optional>
#include <vector>

#include "tempknow/decision.hpp"
#include "tempknow/formula.hpp"

namespace tempknow {

struct UnifyConfig {
  // How many self-compositions of each candidate to try before moving on.
  std::size_t compose_bound = 3;
  DecisionConfig decision;
};

enum class UnifyStatus { NotUnifiable, Projective, UnknownProjective };

/// Result of the projective-unifier search. A Projective outcome has passed
/// verify_projective; UnknownProjective means ground unifiers exist but no
/// candidate verified within the configured bounds — never an unverified
/// claim.
struct UnificationOutcome {
  UnifyStatus status = UnifyStatus::NotUnifiable;
  std::optional<Substitution> projective;
  std::optional<Substitution> ground_seed;
  std::vector<Substitution> ground_unifiers;
};

/// All ground substitutions over letters(f) whose instance is in the logic,
/// in lexicographic letter order with false before true.
std::vector<Substitution> ground_unifiers(const Formula& f,
                                          const UnifyConfig& config = {});

bool is_unifiable(const Formula& f, const UnifyConfig& config = {});

/// Loewenheim-style candidate built from a ground unifier:
///   sigma(x) = (H f & x) | (~H f & epsilon(x))
/// with the constant branches simplified away.
Substitution loewenheim_candidate(const Formula& f, const Substitution& ground);

/// Checks that sigma unifies f and satisfies the projectivity condition
///   H f -> (x <-> sigma(x))   in the logic, for every letter x of f.
bool verify_projective(const Formula& f, const Substitution& sigma,
                       const UnifyConfig& config = {});

/// Candidate-and-verify search for a projective unifier: for each ground
/// unifier in enumeration order, tries the Loewenheim candidate and its
/// self-compositions up to the compose bound, returning the first candidate
/// that verifies.
UnificationOutcome projective_unifier(const Formula& f,
                                      const UnifyConfig& config = {});

/// Certifies that sigma_p is more general than sigma, with sigma itself as
/// the connecting substitution: sigma(x) <-> sigma(sigma_p(x)) must be in
/// the logic for every letter x of f. Throws not_a_unifier_error when sigma
/// does not unify f.
bool check_most_general(const Formula& f, const Substitution& sigma_p,
                        const Substitution& sigma,
                        const UnifyConfig& config = {});

enum class Admissibility { Admissible, NotAdmissible, Unknown };

struct AdmissibilityResult {
  Admissibility verdict = Admissibility::Unknown;
  /// Premise was not unifiable, so the rule holds vacuously.
  bool vacuous = false;
  /// The verified projective unifier of the premise, when one was found.
  std::optional<Substitution> projective;
  /// For NotAdmissible: a ground unifier of the premise that does not unify
  /// the conclusion, when one exists.
  std::optional<Substitution> evidence;
};

/// Rule admissibility via the projective unifier of the (conjoined)
/// premises: not unifiable -> vacuously admissible; projective sigma_p ->
/// admissible iff sigma_p(conclusion) is in the logic; unresolved
/// projectivity -> Unknown.
AdmissibilityResult is_admissible(const Rule& rule,
                                  const UnifyConfig& config = {});

}  // namespace tempknow
