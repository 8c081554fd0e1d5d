#include "tempknow/parser.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace tempknow {

namespace {

enum class Tok {
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Slash,
  Arrow,        // ->
  DoubleArrow,  // <->
  Or,
  And,
  Not,
  Since,
  SinceStrict,
  Until,
  Next,
  K1,
  K2,
  KWord,  // bare K, must be followed by [
  KAll,
  PastDiamond,
  PastBox,
  True,
  False,
  Atom,
  End,
};

struct Token {
  Tok tok;
  std::string text;
  SourceSpan span;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Slash: return "'/'";
    case Tok::Arrow: return "'->'";
    case Tok::DoubleArrow: return "'<->'";
    case Tok::Or: return "'|'";
    case Tok::And: return "'&'";
    case Tok::Not: return "'~'";
    case Tok::Since: return "'S'";
    case Tok::SinceStrict: return "'S!'";
    case Tok::Until: return "'U'";
    case Tok::Next: return "'X'";
    case Tok::K1: return "'K1'";
    case Tok::K2: return "'K2'";
    case Tok::KWord: return "'K['";
    case Tok::KAll: return "'KALL'";
    case Tok::PastDiamond: return "'P'";
    case Tok::PastBox: return "'H'";
    case Tok::True: return "'true'";
    case Tok::False: return "'false'";
    case Tok::Atom: return "atom";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Tok::End, "", {start, start}};
    char c = text_[pos_];
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '[': return single(Tok::LBracket);
      case ']': return single(Tok::RBracket);
      case ',': return single(Tok::Comma);
      case '/': return single(Tok::Slash);
      case '|': return single(Tok::Or);
      case '&': return single(Tok::And);
      case '~': return single(Tok::Not);
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          pos_ += 2;
          return {Tok::Arrow, "->", {start, pos_}};
        }
        throw syntax_error("unexpected '-'; did you mean '->'?",
                           {start, start + 1});
      case '<':
        if (pos_ + 2 < text_.size() + 1 && text_.substr(pos_, 3) == "<->") {
          pos_ += 3;
          return {Tok::DoubleArrow, "<->", {start, pos_}};
        }
        throw syntax_error("unexpected '<'; did you mean '<->'?",
                           {start, start + 1});
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return word();
    std::ostringstream msg;
    msg << "unexpected character '" << c << "'";
    throw syntax_error(msg.str(), {start, start + 1});
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  Token single(Tok t) {
    std::size_t start = pos_++;
    return {t, std::string(1, text_[start]), {start, pos_}};
  }

  Token word() {
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++pos_;
      } else {
        break;
      }
    }
    std::string w(text_.substr(start, pos_ - start));
    if (std::islower(static_cast<unsigned char>(w[0]))) {
      if (w == "true") return {Tok::True, w, {start, pos_}};
      if (w == "false") return {Tok::False, w, {start, pos_}};
      return {Tok::Atom, w, {start, pos_}};
    }
    if (w == "S") {
      if (pos_ < text_.size() && text_[pos_] == '!') {
        ++pos_;
        return {Tok::SinceStrict, "S!", {start, pos_}};
      }
      return {Tok::Since, w, {start, pos_}};
    }
    if (w == "U") return {Tok::Until, w, {start, pos_}};
    if (w == "X") return {Tok::Next, w, {start, pos_}};
    if (w == "K1") return {Tok::K1, w, {start, pos_}};
    if (w == "K2") return {Tok::K2, w, {start, pos_}};
    if (w == "K") return {Tok::KWord, w, {start, pos_}};
    if (w == "KALL") return {Tok::KAll, w, {start, pos_}};
    if (w == "P") return {Tok::PastDiamond, w, {start, pos_}};
    if (w == "H") return {Tok::PastBox, w, {start, pos_}};
    throw syntax_error("unknown operator '" + w +
                           "' (atoms start with a lowercase letter)",
                       {start, pos_});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& opts)
      : lexer_(text), opts_(opts) {
    advance();
  }

  Formula parse_formula_all() {
    Formula f = parse_iff();
    expect(Tok::End);
    return f;
  }

  Rule parse_rule_all() {
    std::vector<Formula> premises;
    premises.push_back(parse_iff());
    while (cur_.tok == Tok::Comma) {
      advance();
      premises.push_back(parse_iff());
    }
    if (cur_.tok != Tok::Slash) {
      fail("expected ',' or '/' after premise");
    }
    advance();
    Formula conclusion = parse_iff();
    expect(Tok::End);
    return Rule{std::move(premises), std::move(conclusion)};
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& expected) const {
    std::ostringstream msg;
    msg << expected << ", found " << describe(cur_.tok);
    if (cur_.tok == Tok::Atom) msg << " '" << cur_.text << "'";
    throw syntax_error(msg.str(), cur_.span);
  }

  void expect(Tok t) {
    if (cur_.tok != t) {
      fail(std::string("expected ") + describe(t));
    }
    advance();
  }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    if (cur_.tok == Tok::DoubleArrow) {
      advance();
      return Formula::equivalence(std::move(lhs), parse_iff());
    }
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (cur_.tok == Tok::Arrow) {
      advance();
      return Formula::implication(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (cur_.tok == Tok::Or) {
      advance();
      lhs = Formula::disjunction(std::move(lhs), parse_and());
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_temporal();
    while (cur_.tok == Tok::And) {
      advance();
      lhs = Formula::conjunction(std::move(lhs), parse_temporal());
    }
    return lhs;
  }

  bool at_temporal() const {
    return cur_.tok == Tok::Since || cur_.tok == Tok::SinceStrict ||
           cur_.tok == Tok::Until;
  }

  Formula parse_temporal() {
    Formula lhs = parse_prefix();
    if (!at_temporal()) return lhs;
    Tok op = cur_.tok;
    advance();
    Formula rhs = parse_prefix();
    if (at_temporal()) {
      throw syntax_error(
          "temporal operators are non-associative; add parentheses",
          cur_.span);
    }
    switch (op) {
      case Tok::Since:
        return opts_.strict_since
                   ? Formula::since_strict(std::move(lhs), std::move(rhs))
                   : Formula::since(std::move(lhs), std::move(rhs));
      case Tok::SinceStrict:
        return Formula::since_strict(std::move(lhs), std::move(rhs));
      default:
        return Formula::until(std::move(lhs), std::move(rhs));
    }
  }

  Formula parse_prefix() {
    switch (cur_.tok) {
      case Tok::Not:
        advance();
        return Formula::negation(parse_prefix());
      case Tok::Next:
        advance();
        return Formula::next(parse_prefix());
      case Tok::K1:
        advance();
        return Formula::k1(parse_prefix());
      case Tok::K2:
        advance();
        return Formula::k2(parse_prefix());
      case Tok::PastDiamond:
        advance();
        return Formula::diamond_past(parse_prefix());
      case Tok::PastBox:
        advance();
        return Formula::box_past(parse_prefix());
      case Tok::KAll:
        advance();
        return Formula::k_all(parse_prefix());
      case Tok::KWord: {
        advance();
        expect(Tok::LBracket);
        Formula param = parse_iff();
        expect(Tok::RBracket);
        return Formula::k_param(std::move(param), parse_prefix());
      }
      default:
        return parse_primary();
    }
  }

  Formula parse_primary() {
    switch (cur_.tok) {
      case Tok::True:
        advance();
        return Formula::truth();
      case Tok::False:
        advance();
        return Formula::falsity();
      case Tok::Atom: {
        Formula f = Formula::atom(cur_.text);
        advance();
        return f;
      }
      case Tok::LParen: {
        advance();
        Formula f = parse_iff();
        expect(Tok::RParen);
        return f;
      }
      default:
        fail("expected a formula");
    }
  }

  Lexer lexer_;
  ParseOptions opts_;
  Token cur_;
};

void print_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Kind::Atom: out += f.name(); return;
    case Kind::True: out += "true"; return;
    case Kind::False: out += "false"; return;
    case Kind::Not:
      out += '~';
      print_into(f.child(), out);
      return;
    case Kind::Next: out += "X "; print_into(f.child(), out); return;
    case Kind::K1: out += "K1 "; print_into(f.child(), out); return;
    case Kind::K2: out += "K2 "; print_into(f.child(), out); return;
    case Kind::DiamondPast: out += "P "; print_into(f.child(), out); return;
    case Kind::BoxPast: out += "H "; print_into(f.child(), out); return;
    case Kind::KAll: out += "KALL "; print_into(f.child(), out); return;
    case Kind::KParam:
      out += "K[";
      print_into(f.param(), out);
      out += "] ";
      print_into(f.body(), out);
      return;
    default:
      break;
  }
  const char* op = nullptr;
  switch (f.kind()) {
    case Kind::And: op = " & "; break;
    case Kind::Or: op = " | "; break;
    case Kind::Implies: op = " -> "; break;
    case Kind::Iff: op = " <-> "; break;
    case Kind::Since: op = " S "; break;
    case Kind::SinceStrict: op = " S! "; break;
    case Kind::Until: op = " U "; break;
    default: throw error("unreachable formula kind");
  }
  out += '(';
  print_into(f.lhs(), out);
  out += op;
  print_into(f.rhs(), out);
  out += ')';
}

}  // namespace

Formula parse_formula(std::string_view text, const ParseOptions& opts) {
  return Parser(text, opts).parse_formula_all();
}

Rule parse_rule(std::string_view text, const ParseOptions& opts) {
  return Parser(text, opts).parse_rule_all();
}

std::string pretty_print(const Formula& f) {
  std::string out;
  out.reserve(f.node_count() * 4);
  print_into(f, out);
  return out;
}

}  // namespace tempknow
