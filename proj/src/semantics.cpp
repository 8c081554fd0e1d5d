#include "tempknow/semantics.hpp"

#include <algorithm>

#include "json.hpp"
#include "tempknow/parser.hpp"

namespace tempknow {

namespace {

Formula prepare_past(const Formula& f) {
  Formula core = desugar(f);
  if (contains_kind(core, {Kind::Until, Kind::Next})) {
    throw future_operator_error(
        "Until/Next are not defined over finite past traces");
  }
  return core;
}

bool is_past_operator(Kind k) {
  return k == Kind::Since || k == Kind::SinceStrict;
}

}  // namespace

TruthTable::TruthTable(Formula root, std::vector<Formula> closure,
                       std::size_t length)
    : root_(std::move(root)),
      closure_(std::move(closure)),
      length_(length),
      rows_(closure_.size(), std::vector<bool>(length, false)),
      history_dependent_(closure_.size(), false) {
  index_.reserve(closure_.size());
  for (std::size_t i = 0; i < closure_.size(); ++i) index_.emplace(closure_[i], i);
}

std::size_t TruthTable::index_of(const Formula& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) throw error("formula is not in the table");
  return it->second;
}

const std::vector<bool>& TruthTable::row(const Formula& f) const {
  return rows_[index_of(f)];
}

TruthTable eval_past(const Trace& trace, const Formula& f) {
  Formula core = prepare_past(f);
  std::vector<Formula> closure = subformula_closure(core);
  TruthTable table(core, std::move(closure), trace.length());

  const auto& subs = table.closure();
  std::size_t n = trace.length();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const Formula& g = subs[i];
    auto& out = table.row(i);
    switch (g.kind()) {
      case Kind::Atom:
        for (std::size_t a = 0; a < n; ++a) out[a] = trace.holds(g.name(), a);
        break;
      case Kind::True:
        out.assign(n, true);
        break;
      case Kind::False:
        break;
      case Kind::Not: {
        const auto& child = table.row(g.child());
        for (std::size_t a = 0; a < n; ++a) out[a] = !child[a];
        break;
      }
      case Kind::And: {
        const auto& l = table.row(g.lhs());
        const auto& r = table.row(g.rhs());
        for (std::size_t a = 0; a < n; ++a) out[a] = l[a] && r[a];
        break;
      }
      case Kind::Or: {
        const auto& l = table.row(g.lhs());
        const auto& r = table.row(g.rhs());
        for (std::size_t a = 0; a < n; ++a) out[a] = l[a] || r[a];
        break;
      }
      case Kind::Since: {
        // (0 |= a S b) = (0 |= b);  (a+1 |= ...) = b_new | (a_new & prev).
        const auto& l = table.row(g.lhs());
        const auto& r = table.row(g.rhs());
        bool prev = false;
        for (std::size_t a = 0; a < n; ++a) {
          prev = r[a] || (a > 0 && l[a] && prev);
          out[a] = prev;
        }
        break;
      }
      case Kind::SinceStrict: {
        // The witness must lie strictly in the past, so state 0 is false and
        // the step needs the new point to satisfy the left argument as well:
        // (a+1 |= l S! r) = l_new & (r_old | prev).
        const auto& l = table.row(g.lhs());
        const auto& r = table.row(g.rhs());
        bool prev = false;
        for (std::size_t a = 0; a < n; ++a) {
          prev = a > 0 && l[a] && (r[a - 1] || prev);
          out[a] = prev;
        }
        break;
      }
      default:
        throw error("unexpected operator after desugaring");
    }
  }
  return table;
}

TruthTable eval_brute(const Trace& trace, const Formula& f) {
  Formula core = prepare_past(f);
  std::vector<Formula> closure = subformula_closure(core);
  TruthTable table(core, std::move(closure), trace.length());

  const auto& subs = table.closure();
  std::size_t n = trace.length();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const Formula& g = subs[i];
    auto& out = table.row(i);
    switch (g.kind()) {
      case Kind::Atom:
        for (std::size_t a = 0; a < n; ++a) out[a] = trace.holds(g.name(), a);
        break;
      case Kind::True:
        out.assign(n, true);
        break;
      case Kind::False:
        break;
      case Kind::Not: {
        const auto& child = table.row(g.child());
        for (std::size_t a = 0; a < n; ++a) out[a] = !child[a];
        break;
      }
      case Kind::And: {
        const auto& l = table.row(g.lhs());
        const auto& r = table.row(g.rhs());
        for (std::size_t a = 0; a < n; ++a) out[a] = l[a] && r[a];
        break;
      }
      case Kind::Or: {
        const auto& l = table.row(g.lhs());
        const auto& r = table.row(g.rhs());
        for (std::size_t a = 0; a < n; ++a) out[a] = l[a] || r[a];
        break;
      }
      case Kind::Since:
      case Kind::SinceStrict: {
        // Literal quantifier form: a witness b at or before a (strictly
        // before for S!) where the right argument held, with the left
        // argument at every c, b < c <= a.
        const auto& l = table.row(g.lhs());
        const auto& r = table.row(g.rhs());
        bool strict = g.kind() == Kind::SinceStrict;
        for (std::size_t a = 0; a < n; ++a) {
          bool found = false;
          std::size_t b_limit = strict ? a : a + 1;  // exclusive
          for (std::size_t b = 0; b < b_limit && !found; ++b) {
            if (!r[b]) continue;
            bool all_after = true;
            for (std::size_t c = b + 1; c <= a; ++c) {
              if (!l[c]) {
                all_after = false;
                break;
              }
            }
            found = all_after;
          }
          out[a] = found;
        }
        break;
      }
      default:
        throw error("unexpected operator after desugaring");
    }
  }
  return table;
}

TruthTable eval_lasso(const LassoTrace& lasso, const Formula& f) {
  Formula core = desugar(f);
  std::vector<Formula> closure = subformula_closure(core);
  std::size_t m = lasso.state_count();
  TruthTable table(core, std::move(closure), m);

  const auto& subs = table.closure();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const Formula& g = subs[i];
    auto& out = table.row(i);
    bool history = is_past_operator(g.kind());
    switch (g.kind()) {
      case Kind::Atom:
        for (std::size_t a = 0; a < m; ++a) out[a] = lasso.holds(g.name(), a);
        break;
      case Kind::True:
        out.assign(m, true);
        break;
      case Kind::False:
        break;
      case Kind::Not: {
        const auto& child = table.row(g.child());
        for (std::size_t a = 0; a < m; ++a) out[a] = !child[a];
        history = table.history_dependent(g.child());
        break;
      }
      case Kind::And:
      case Kind::Or: {
        const auto& l = table.row(g.lhs());
        const auto& r = table.row(g.rhs());
        bool conj = g.kind() == Kind::And;
        for (std::size_t a = 0; a < m; ++a) {
          out[a] = conj ? (l[a] && r[a]) : (l[a] || r[a]);
        }
        history = table.history_dependent(g.lhs()) ||
                  table.history_dependent(g.rhs());
        break;
      }
      case Kind::Next: {
        const auto& child = table.row(g.child());
        for (std::size_t a = 0; a < m; ++a) out[a] = child[lasso.next_state(a)];
        history = table.history_dependent(g.child());
        break;
      }
      case Kind::Until: {
        // Least fixpoint of U = r | (l & U o next). Two backward sweeps over
        // the stored states stabilize it: any witness reachable from a loop
        // state appears within two loop unrollings.
        const auto& l = table.row(g.lhs());
        const auto& r = table.row(g.rhs());
        for (int pass = 0; pass < 2; ++pass) {
          for (std::size_t k = m; k-- > 0;) {
            out[k] = r[k] || (l[k] && out[lasso.next_state(k)]);
          }
        }
        history = table.history_dependent(g.lhs()) ||
                  table.history_dependent(g.rhs());
        break;
      }
      case Kind::Since: {
        const auto& l = table.row(g.lhs());
        const auto& r = table.row(g.rhs());
        bool prev = false;
        for (std::size_t a = 0; a < m; ++a) {
          prev = r[a] || (a > 0 && l[a] && prev);
          out[a] = prev;
        }
        history = true;
        break;
      }
      case Kind::SinceStrict: {
        const auto& l = table.row(g.lhs());
        const auto& r = table.row(g.rhs());
        bool prev = false;
        for (std::size_t a = 0; a < m; ++a) {
          prev = a > 0 && l[a] && (r[a - 1] || prev);
          out[a] = prev;
        }
        history = true;
        break;
      }
      default:
        throw error("unexpected operator after desugaring");
    }
    if (history) table.mark_history_dependent(i);
  }
  return table;
}

Trace vote(const MultiAgentModel& model) {
  Trace result(model.length());
  std::set<std::string> all_letters;
  for (const Trace& agent : model.agents()) {
    auto ls = agent.letters();
    all_letters.insert(ls.begin(), ls.end());
  }
  std::size_t k = model.agent_count();
  for (const auto& letter : all_letters) {
    for (std::size_t a = 0; a < model.length(); ++a) {
      std::size_t count = 0;
      for (const Trace& agent : model.agents()) {
        if (agent.holds(letter, a)) ++count;
      }
      if (2 * count > k) result.set(letter, a);
    }
  }
  return result;
}

bool eval_conflict_k(const MultiAgentModel& model, const Formula& body,
                     std::size_t state) {
  if (contains_kind(body, {Kind::KAll})) {
    throw kall_error("nested KALL is not supported");
  }
  Formula core = desugar(body);
  Formula stable = Formula::since(core, core);
  for (const Trace& agent : model.agents()) {
    if (!eval_past(agent, stable).root_row()[state]) return false;
  }
  return true;
}

std::string truth_table_json(const TruthTable& table,
                             const std::string& formula_text) {
  nlohmann::json rows = nlohmann::json::object();
  bool any_history = false;
  for (std::size_t i = 0; i < table.closure().size(); ++i) {
    nlohmann::json bits = nlohmann::json::array();
    for (bool b : table.row(i)) bits.push_back(b ? 1 : 0);
    rows[pretty_print(table.closure()[i])] = std::move(bits);
    any_history = any_history || table.history_dependent(i);
  }
  nlohmann::json doc;
  doc["formula"] = formula_text;
  doc["rows"] = std::move(rows);
  if (any_history) {
    nlohmann::json flagged = nlohmann::json::array();
    for (std::size_t i = 0; i < table.closure().size(); ++i) {
      if (table.history_dependent(i)) {
        flagged.push_back(pretty_print(table.closure()[i]));
      }
    }
    doc["history_dependent"] = std::move(flagged);
  }
  return doc.dump();
}

}  // namespace tempknow
