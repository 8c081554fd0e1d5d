// tempknow — command-line front door for the past-directed temporal
// knowledge toolkit: trace evaluation, satisfiability/validity, unification
// and rule admissibility.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "tempknow/decision.hpp"
#include "tempknow/errors.hpp"
#include "tempknow/formula.hpp"
#include "tempknow/model.hpp"
#include "tempknow/parser.hpp"
#include "tempknow/semantics.hpp"
#include "tempknow/unification.hpp"

namespace {

using namespace tempknow;

constexpr int kExitOk = 0;
constexpr int kExitSyntax = 2;        // formula/model syntax or format
constexpr int kExitPrecondition = 3;  // semantic precondition violated
constexpr int kExitResource = 4;      // configured cap exceeded

struct RunConfig {
  std::size_t state_cap = std::size_t{1} << 22;
  std::size_t compose_bound = 3;
  bool strict_since = false;
  std::string format = "text";

  bool json() const { return format == "json"; }
  ParseOptions parse_options() const { return ParseOptions{strict_since}; }
  DecisionConfig decision() const { return DecisionConfig{state_cap, 16}; }
  UnifyConfig unify() const { return UnifyConfig{compose_bound, decision()}; }
};

void add_common_flags(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--state-cap", config.state_cap,
                  "cap on reachable truth vectors")
      ->envname("TEMPKNOW_STATE_CAP");
  cmd->add_option("--compose-bound", config.compose_bound,
                  "self-composition bound for projective candidates");
  cmd->add_flag("--strict-since", config.strict_since,
                "parse surface S as strict since");
  cmd->add_option("--format", config.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

nlohmann::json substitution_json(const Substitution& sigma) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [letter, image] : sigma.mapping()) {
    out[letter] = pretty_print(image);
  }
  return out;
}

void print_table_text(const TruthTable& table, std::size_t loop_start) {
  std::size_t width = 0;
  for (const Formula& g : table.closure()) {
    width = std::max(width, pretty_print(g).size());
  }
  std::cout << std::left << std::setw(static_cast<int>(width)) << "state"
            << " :";
  for (std::size_t a = 0; a < table.length(); ++a) {
    if (a == loop_start) std::cout << " |";
    std::cout << ' ' << a % 10;
  }
  std::cout << '\n';
  for (std::size_t i = 0; i < table.closure().size(); ++i) {
    std::cout << std::left << std::setw(static_cast<int>(width))
              << pretty_print(table.closure()[i]) << " :";
    for (std::size_t a = 0; a < table.length(); ++a) {
      if (a == loop_start) std::cout << " |";
      std::cout << ' ' << (table.row(i)[a] ? '1' : '0');
    }
    if (table.history_dependent(i)) std::cout << "  (history-dependent)";
    std::cout << '\n';
  }
}

int run_eval(const std::string& model_path, const std::string& formula_text,
             const RunConfig& config, std::optional<std::size_t> agent,
             bool use_vote, bool allow_kall) {
  MultiAgentModel model = load_model_file(model_path);
  Formula formula = parse_formula(formula_text, config.parse_options());

  if (allow_kall) {
    if (formula.kind() != Kind::KAll) {
      throw precondition_error("--kall expects a top-level KALL formula");
    }
    std::vector<bool> row(model.length());
    for (std::size_t a = 0; a < model.length(); ++a) {
      row[a] = eval_conflict_k(model, formula.child(), a);
    }
    if (config.json()) {
      nlohmann::json bits = nlohmann::json::array();
      for (bool b : row) bits.push_back(b ? 1 : 0);
      nlohmann::json doc;
      doc["formula"] = formula_text;
      doc["rows"] = nlohmann::json::object();
      doc["rows"][pretty_print(formula)] = std::move(bits);
      std::cout << doc.dump() << '\n';
    } else {
      std::cout << pretty_print(formula) << " :";
      for (bool b : row) std::cout << ' ' << (b ? '1' : '0');
      std::cout << '\n';
    }
    return kExitOk;
  }

  Trace trace;
  if (use_vote) {
    trace = vote(model);
  } else if (agent) {
    if (*agent >= model.agent_count()) {
      throw format_error("model has only " +
                         std::to_string(model.agent_count()) + " agents");
    }
    trace = model.agent(*agent);
  } else if (model.agent_count() == 1) {
    trace = model.agent(0);
  } else {
    throw precondition_error(
        "model has several agents; choose --agent N, --vote or --kall");
  }

  TruthTable table = eval_past(trace, formula);
  if (config.json()) {
    std::cout << truth_table_json(table, formula_text) << '\n';
  } else {
    print_table_text(table, table.length());
  }
  return kExitOk;
}

int run_sat(const std::string& formula_text, const RunConfig& config,
            const std::string& witness_path) {
  Formula formula = parse_formula(formula_text, config.parse_options());
  auto witness = satisfiable(formula, config.decision());
  std::string payload;
  if (witness) {
    payload =
        model_json(witness->trace, static_cast<long long>(witness->designated));
    if (!witness_path.empty()) {
      std::ofstream out(witness_path);
      out << payload << '\n';
    }
  }
  if (config.json()) {
    nlohmann::json doc;
    doc["verdict"] = witness ? "SAT" : "UNSAT";
    if (witness) doc["witness"] = nlohmann::json::parse(payload);
    std::cout << doc.dump() << '\n';
  } else if (witness) {
    std::cout << "SAT\nwitness: " << payload << '\n';
  } else {
    std::cout << "UNSAT\n";
  }
  return kExitOk;
}

int run_valid(const std::string& formula_text, const RunConfig& config) {
  Formula formula = parse_formula(formula_text, config.parse_options());
  auto counter = satisfiable(Formula::negation(formula), config.decision());
  std::string payload;
  if (counter) {
    payload =
        model_json(counter->trace, static_cast<long long>(counter->designated));
  }
  if (config.json()) {
    nlohmann::json doc;
    doc["verdict"] = counter ? "INVALID" : "VALID";
    if (counter) doc["counterexample"] = nlohmann::json::parse(payload);
    std::cout << doc.dump() << '\n';
  } else if (counter) {
    std::cout << "INVALID\ncounterexample: " << payload << '\n';
  } else {
    std::cout << "VALID\n";
  }
  return kExitOk;
}

int run_equiv(const std::string& lhs_text, const std::string& rhs_text,
              const RunConfig& config) {
  Formula lhs = parse_formula(lhs_text, config.parse_options());
  Formula rhs = parse_formula(rhs_text, config.parse_options());
  auto counter = satisfiable(
      Formula::negation(Formula::equivalence(lhs, rhs)), config.decision());
  std::string payload;
  if (counter) {
    payload =
        model_json(counter->trace, static_cast<long long>(counter->designated));
  }
  if (config.json()) {
    nlohmann::json doc;
    doc["verdict"] = counter ? "NOT_EQUIVALENT" : "EQUIVALENT";
    if (counter) doc["counterexample"] = nlohmann::json::parse(payload);
    std::cout << doc.dump() << '\n';
  } else if (counter) {
    std::cout << "NOT EQUIVALENT\ncounterexample: " << payload << '\n';
  } else {
    std::cout << "EQUIVALENT\n";
  }
  return kExitOk;
}

int run_unify(const std::string& formula_text, const RunConfig& config) {
  Formula formula = parse_formula(formula_text, config.parse_options());
  UnificationOutcome outcome = projective_unifier(formula, config.unify());

  nlohmann::json checks = nlohmann::json::array();
  if (outcome.status == UnifyStatus::Projective) {
    checks.push_back(pretty_print(apply_substitution(*outcome.projective,
                                                     formula)) +
                     "  in the logic");
    Formula box = Formula::box_past(formula);
    for (const auto& name : letters(formula)) {
      Formula condition = Formula::implication(
          box,
          Formula::equivalence(Formula::atom(name),
                               outcome.projective->get(name)));
      checks.push_back(pretty_print(condition) + "  in the logic");
    }
  }

  if (config.json()) {
    nlohmann::json doc;
    switch (outcome.status) {
      case UnifyStatus::NotUnifiable: doc["status"] = "not_unifiable"; break;
      case UnifyStatus::Projective: doc["status"] = "projective"; break;
      case UnifyStatus::UnknownProjective:
        doc["status"] = "unknown_projective";
        break;
    }
    if (outcome.projective) {
      doc["sigma"] = substitution_json(*outcome.projective);
      doc["seed"] = substitution_json(*outcome.ground_seed);
      doc["checks"] = checks;
    }
    if (outcome.status != UnifyStatus::NotUnifiable) {
      nlohmann::json grounds = nlohmann::json::array();
      for (const auto& ground : outcome.ground_unifiers) {
        grounds.push_back(substitution_json(ground));
      }
      doc["ground_unifiers"] = std::move(grounds);
    }
    std::cout << doc.dump() << '\n';
    return kExitOk;
  }

  switch (outcome.status) {
    case UnifyStatus::NotUnifiable:
      std::cout << "not unifiable\n";
      break;
    case UnifyStatus::Projective:
      std::cout << "projective\nsigma: " << substitution_json(*outcome.projective).dump()
                << "\nseed: " << substitution_json(*outcome.ground_seed).dump()
                << "\nverified:\n";
      for (const auto& check : checks) {
        std::cout << "  " << check.get<std::string>() << '\n';
      }
      break;
    case UnifyStatus::UnknownProjective:
      std::cout << "unifiable, projectivity unresolved\nground unifiers:\n";
      for (const auto& ground : outcome.ground_unifiers) {
        std::cout << "  " << substitution_json(ground).dump() << '\n';
      }
      break;
  }
  return kExitOk;
}

int run_admissible(const std::string& rule_text, const RunConfig& config) {
  Rule rule = parse_rule(rule_text, config.parse_options());
  AdmissibilityResult result = is_admissible(rule, config.unify());

  if (config.json()) {
    nlohmann::json doc;
    switch (result.verdict) {
      case Admissibility::Admissible: doc["admissible"] = true; break;
      case Admissibility::NotAdmissible: doc["admissible"] = false; break;
      case Admissibility::Unknown: doc["admissible"] = "unknown"; break;
    }
    doc["vacuous"] = result.vacuous;
    if (result.projective) {
      doc["projective_unifier"] = substitution_json(*result.projective);
    }
    if (result.evidence) doc["evidence"] = substitution_json(*result.evidence);
    std::cout << doc.dump() << '\n';
    return kExitOk;
  }

  switch (result.verdict) {
    case Admissibility::Admissible:
      std::cout << (result.vacuous ? "admissible (premise not unifiable)\n"
                                   : "admissible\n");
      break;
    case Admissibility::NotAdmissible:
      std::cout << "not admissible\n";
      if (result.evidence) {
        std::cout << "evidence: " << substitution_json(*result.evidence).dump()
                  << '\n';
      } else {
        std::cout << "no ground counter-unifier; refuted via the projective "
                     "unifier\n";
      }
      if (result.projective) {
        std::cout << "projective unifier: "
                  << substitution_json(*result.projective).dump() << '\n';
      }
      break;
    case Admissibility::Unknown:
      std::cout << "unknown (projectivity unresolved for the premise)\n";
      break;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"past-directed temporal knowledge toolkit"};
  app.require_subcommand(1);
  RunConfig config;

  std::string model_path, formula_text, rhs_text, rule_text, witness_path;
  std::optional<std::size_t> agent;
  bool use_vote = false;
  bool allow_kall = false;

  CLI::App* eval = app.add_subcommand("eval", "evaluate a formula over a model");
  eval->add_option("model", model_path, "model JSON file")->required();
  eval->add_option("formula", formula_text, "formula text")->required();
  auto* agent_opt = eval->add_option("--agent", agent, "agent valuation index");
  auto* vote_opt =
      eval->add_flag("--vote", use_vote, "evaluate under the voted valuation");
  auto* kall_opt = eval->add_flag(
      "--kall", allow_kall, "evaluate a top-level KALL formula per state");
  agent_opt->excludes(vote_opt)->excludes(kall_opt);
  vote_opt->excludes(kall_opt);
  add_common_flags(eval, config);

  CLI::App* sat = app.add_subcommand("sat", "decide satisfiability");
  sat->add_option("formula", formula_text, "formula text")->required();
  sat->add_option("--witness", witness_path, "write the witness JSON here");
  add_common_flags(sat, config);

  CLI::App* valid = app.add_subcommand("valid", "decide logic membership");
  valid->add_option("formula", formula_text, "formula text")->required();
  add_common_flags(valid, config);

  CLI::App* equiv = app.add_subcommand("equiv", "decide equivalence");
  equiv->add_option("formula", formula_text, "first formula")->required();
  equiv->add_option("other", rhs_text, "second formula")->required();
  add_common_flags(equiv, config);

  CLI::App* unify = app.add_subcommand("unify", "compute a projective unifier");
  unify->add_option("formula", formula_text, "formula text")->required();
  add_common_flags(unify, config);

  CLI::App* admissible =
      app.add_subcommand("admissible", "check rule admissibility");
  admissible->add_option("rule", rule_text, "rule text 'p1, ..., pn / q'")
      ->required();
  add_common_flags(admissible, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitSyntax;
  }

  try {
    if (eval->parsed()) {
      return run_eval(model_path, formula_text, config, agent, use_vote,
                      allow_kall);
    }
    if (sat->parsed()) return run_sat(formula_text, config, witness_path);
    if (valid->parsed()) return run_valid(formula_text, config);
    if (equiv->parsed()) return run_equiv(formula_text, rhs_text, config);
    if (unify->parsed()) return run_unify(formula_text, config);
    if (admissible->parsed()) return run_admissible(rule_text, config);
  } catch (const syntax_error& e) {
    std::cerr << "syntax error at " << e.span.begin << ".." << e.span.end
              << ": " << e.what() << '\n';
    return kExitSyntax;
  } catch (const format_error& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return kExitSyntax;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  }
  return kExitOk;
}
