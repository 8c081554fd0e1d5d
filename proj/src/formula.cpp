#include "tempknow/formula.hpp"

#include <functional>
#include <unordered_set>

namespace tempknow {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace

bool is_binary(Kind k) {
  switch (k) {
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff:
    case Kind::Since:
    case Kind::SinceStrict:
    case Kind::Until:
    case Kind::KParam:
      return true;
    default:
      return false;
  }
}

bool is_unary(Kind k) {
  switch (k) {
    case Kind::Not:
    case Kind::Next:
    case Kind::K1:
    case Kind::K2:
    case Kind::DiamondPast:
    case Kind::BoxPast:
    case Kind::KAll:
      return true;
    default:
      return false;
  }
}

bool Formula::is_leaf() const {
  Kind k = kind();
  return k == Kind::Atom || k == Kind::True || k == Kind::False;
}

Formula Formula::make_leaf(Kind k, std::string name) {
  auto node = std::make_shared<Node>(k, std::move(name));
  node->hash = hash_combine(static_cast<std::size_t>(k) + 1,
                            std::hash<std::string>{}(node->name));
  node->size = 1;
  return Formula(std::move(node));
}

Formula Formula::make_unary(Kind k, Formula child) {
  auto node = std::make_shared<Node>(k);
  node->hash = hash_combine(static_cast<std::size_t>(k) + 1, child.hash());
  node->size = 1 + child.node_count();
  node->lhs = std::move(child);
  return Formula(std::move(node));
}

Formula Formula::make_binary(Kind k, Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>(k);
  node->hash = hash_combine(
      hash_combine(static_cast<std::size_t>(k) + 1, lhs.hash()), rhs.hash());
  node->size = 1 + lhs.node_count() + rhs.node_count();
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return Formula(std::move(node));
}

Formula Formula::atom(std::string name) {
  return make_leaf(Kind::Atom, std::move(name));
}

Formula Formula::truth() {
  static const Formula instance = make_leaf(Kind::True, "");
  return instance;
}

Formula Formula::falsity() {
  static const Formula instance = make_leaf(Kind::False, "");
  return instance;
}

Formula Formula::negation(Formula f) {
  return make_unary(Kind::Not, std::move(f));
}
Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return make_binary(Kind::And, std::move(lhs), std::move(rhs));
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return make_binary(Kind::Or, std::move(lhs), std::move(rhs));
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return make_binary(Kind::Implies, std::move(lhs), std::move(rhs));
}
Formula Formula::equivalence(Formula lhs, Formula rhs) {
  return make_binary(Kind::Iff, std::move(lhs), std::move(rhs));
}
Formula Formula::since(Formula lhs, Formula rhs) {
  return make_binary(Kind::Since, std::move(lhs), std::move(rhs));
}
Formula Formula::since_strict(Formula lhs, Formula rhs) {
  return make_binary(Kind::SinceStrict, std::move(lhs), std::move(rhs));
}
Formula Formula::until(Formula lhs, Formula rhs) {
  return make_binary(Kind::Until, std::move(lhs), std::move(rhs));
}
Formula Formula::next(Formula f) { return make_unary(Kind::Next, std::move(f)); }
Formula Formula::k1(Formula f) { return make_unary(Kind::K1, std::move(f)); }
Formula Formula::k2(Formula f) { return make_unary(Kind::K2, std::move(f)); }
Formula Formula::k_param(Formula param, Formula body) {
  return make_binary(Kind::KParam, std::move(param), std::move(body));
}
Formula Formula::diamond_past(Formula f) {
  return make_unary(Kind::DiamondPast, std::move(f));
}
Formula Formula::box_past(Formula f) {
  return make_unary(Kind::BoxPast, std::move(f));
}
Formula Formula::k_all(Formula f) { return make_unary(Kind::KAll, std::move(f)); }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->hash != other.node_->hash || node_->kind != other.node_->kind ||
      node_->size != other.node_->size) {
    return false;
  }
  if (node_->kind == Kind::Atom) return node_->name == other.node_->name;
  if (is_leaf()) return true;
  if (is_unary(kind())) return lhs() == other.lhs();
  return lhs() == other.lhs() && rhs() == other.rhs();
}

void Substitution::set(const std::string& letter, Formula f) {
  map_.insert_or_assign(letter, std::move(f));
}

Formula Substitution::get(const std::string& letter) const {
  auto it = map_.find(letter);
  return it != map_.end() ? it->second : Formula::atom(letter);
}

bool Substitution::contains(const std::string& letter) const {
  return map_.count(letter) != 0;
}

bool Substitution::is_ground() const {
  for (const auto& [letter, image] : map_) {
    if (image.kind() != Kind::True && image.kind() != Kind::False) return false;
  }
  return true;
}

Formula desugar(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::True:
    case Kind::False:
      return f;
    case Kind::Not:
      return Formula::negation(desugar(f.child()));
    case Kind::And:
      return Formula::conjunction(desugar(f.lhs()), desugar(f.rhs()));
    case Kind::Or:
      return Formula::disjunction(desugar(f.lhs()), desugar(f.rhs()));
    case Kind::Implies:
      return Formula::disjunction(Formula::negation(desugar(f.lhs())),
                                  desugar(f.rhs()));
    case Kind::Iff: {
      Formula a = desugar(f.lhs());
      Formula b = desugar(f.rhs());
      return Formula::conjunction(
          Formula::disjunction(Formula::negation(a), b),
          Formula::disjunction(Formula::negation(b), a));
    }
    case Kind::Since:
      return Formula::since(desugar(f.lhs()), desugar(f.rhs()));
    case Kind::SinceStrict:
      return Formula::since_strict(desugar(f.lhs()), desugar(f.rhs()));
    case Kind::Until:
      return Formula::until(desugar(f.lhs()), desugar(f.rhs()));
    case Kind::Next:
      return Formula::next(desugar(f.child()));
    case Kind::K1: {
      Formula body = desugar(f.child());
      return Formula::since(body, body);
    }
    case Kind::K2: {
      Formula body = desugar(f.child());
      return Formula::negation(
          Formula::since(Formula::truth(), Formula::negation(body)));
    }
    case Kind::KParam:
      return Formula::since(desugar(f.body()), desugar(f.param()));
    case Kind::DiamondPast:
      return Formula::since(Formula::truth(), desugar(f.child()));
    case Kind::BoxPast: {
      Formula body = desugar(f.child());
      return Formula::negation(
          Formula::since(Formula::truth(), Formula::negation(body)));
    }
    case Kind::KAll:
      throw kall_error(
          "KALL cannot be desugared; evaluate it against a multi-agent model");
  }
  throw error("unreachable formula kind");
}

Formula apply_substitution(const Substitution& sigma, const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
      return sigma.get(f.name());
    case Kind::True:
    case Kind::False:
      return f;
    default:
      break;
  }
  if (is_unary(f.kind())) {
    Formula child = apply_substitution(sigma, f.child());
    switch (f.kind()) {
      case Kind::Not: return Formula::negation(std::move(child));
      case Kind::Next: return Formula::next(std::move(child));
      case Kind::K1: return Formula::k1(std::move(child));
      case Kind::K2: return Formula::k2(std::move(child));
      case Kind::DiamondPast: return Formula::diamond_past(std::move(child));
      case Kind::BoxPast: return Formula::box_past(std::move(child));
      case Kind::KAll: return Formula::k_all(std::move(child));
      default: break;
    }
  }
  Formula lhs = apply_substitution(sigma, f.lhs());
  Formula rhs = apply_substitution(sigma, f.rhs());
  switch (f.kind()) {
    case Kind::And: return Formula::conjunction(std::move(lhs), std::move(rhs));
    case Kind::Or: return Formula::disjunction(std::move(lhs), std::move(rhs));
    case Kind::Implies:
      return Formula::implication(std::move(lhs), std::move(rhs));
    case Kind::Iff: return Formula::equivalence(std::move(lhs), std::move(rhs));
    case Kind::Since: return Formula::since(std::move(lhs), std::move(rhs));
    case Kind::SinceStrict:
      return Formula::since_strict(std::move(lhs), std::move(rhs));
    case Kind::Until: return Formula::until(std::move(lhs), std::move(rhs));
    case Kind::KParam: return Formula::k_param(std::move(lhs), std::move(rhs));
    default:
      throw error("unreachable formula kind");
  }
}

Substitution compose(const Substitution& sigma, const Substitution& tau) {
  std::map<std::string, Formula> result;
  for (const auto& [letter, image] : tau.mapping()) {
    result.insert_or_assign(letter, apply_substitution(sigma, image));
  }
  for (const auto& [letter, image] : sigma.mapping()) {
    result.emplace(letter, image);  // keep tau's entry when both define it
  }
  return Substitution(std::move(result));
}

std::vector<Formula> subformula_closure(const Formula& f) {
  std::vector<Formula> order;
  std::unordered_set<Formula, FormulaHash> seen;
  std::function<void(const Formula&)> visit = [&](const Formula& g) {
    if (seen.count(g)) return;
    if (!g.is_leaf()) {
      visit(g.lhs());
      if (is_binary(g.kind())) visit(g.rhs());
    }
    if (seen.insert(g).second) order.push_back(g);
  };
  visit(f);
  return order;
}

std::set<std::string> letters(const Formula& f) {
  std::set<std::string> out;
  std::function<void(const Formula&)> visit = [&](const Formula& g) {
    if (g.kind() == Kind::Atom) {
      out.insert(g.name());
      return;
    }
    if (g.is_leaf()) return;
    visit(g.lhs());
    if (is_binary(g.kind())) visit(g.rhs());
  };
  visit(f);
  return out;
}

bool contains_kind(const Formula& f, std::initializer_list<Kind> kinds) {
  for (Kind k : kinds) {
    if (f.kind() == k) return true;
  }
  if (f.is_leaf()) return false;
  if (contains_kind(f.lhs(), kinds)) return true;
  return is_binary(f.kind()) && contains_kind(f.rhs(), kinds);
}

}  // namespace tempknow
