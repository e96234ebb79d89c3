#include "hardy/formula.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

#include "hardy/errors.hpp"

namespace hardy {

struct Formula::Node {
  Kind kind;
  Setting setting;
  Outcome outcome;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
  bool has_entails;
  bool has_counterfactual;
  int depth;
};

Formula Formula::make(Kind kind, Setting s, Outcome o, const Formula* lhs, const Formula* rhs) {
  bool entails = kind == Kind::Entails;
  bool cf = kind == Kind::Counterfactual;
  int depth = 1;
  for (const Formula* child : {lhs, rhs}) {
    if (child == nullptr) continue;
    if (child->contains_entails()) {
      throw NestingError("`=>` may only appear at the root of a formula");
    }
    cf = cf || child->contains_counterfactual();
    depth = std::max(depth, child->depth() + 1);
  }
  auto node = std::make_shared<Node>(Node{kind, s, o, std::nullopt, std::nullopt, entails, cf, depth});
  if (lhs != nullptr) node->lhs = *lhs;
  if (rhs != nullptr) node->rhs = *rhs;
  return Formula(std::move(node));
}

Formula Formula::setting_atom(Setting s) {
  return make(Kind::SettingAtom, s, Outcome::Plus, nullptr, nullptr);
}
Formula Formula::outcome_atom(Setting s, Outcome o) {
  return make(Kind::OutcomeAtom, s, o, nullptr, nullptr);
}
Formula Formula::negation(Formula operand) {
  return make(Kind::Not, {}, Outcome::Plus, &operand, nullptr);
}
Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return make(Kind::And, {}, Outcome::Plus, &lhs, &rhs);
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return make(Kind::Or, {}, Outcome::Plus, &lhs, &rhs);
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return make(Kind::Implies, {}, Outcome::Plus, &lhs, &rhs);
}
Formula Formula::counterfactual(Setting antecedent, Formula consequent) {
  return make(Kind::Counterfactual, antecedent, Outcome::Plus, nullptr, &consequent);
}
Formula Formula::entails(Formula antecedent, Formula consequent) {
  return make(Kind::Entails, {}, Outcome::Plus, &antecedent, &consequent);
}

Formula::Kind Formula::kind() const { return node_->kind; }
Setting Formula::setting() const { return node_->setting; }
Outcome Formula::outcome() const { return node_->outcome; }
const Formula& Formula::lhs() const { return *node_->lhs; }
const Formula& Formula::rhs() const { return *node_->rhs; }
bool Formula::contains_entails() const { return node_->has_entails; }
bool Formula::contains_counterfactual() const { return node_->has_counterfactual; }
int Formula::depth() const { return node_->depth; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::SettingAtom:
      return a.setting() == b.setting();
    case Formula::Kind::OutcomeAtom:
      return a.setting() == b.setting() && a.outcome() == b.outcome();
    case Formula::Kind::Not:
      return a.lhs() == b.lhs();
    case Formula::Kind::Counterfactual:
      return a.setting() == b.setting() && a.rhs() == b.rhs();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

namespace {

enum class Tok { Atom, Not, And, Or, Box, Arrow, Entails, LParen, RParen, End };

struct Token {
  Tok type;
  std::size_t pos;
  Setting setting{};
  std::optional<Outcome> outcome;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (i_ >= text_.size()) {
        out.push_back({Tok::End, i_, {}, std::nullopt});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  bool starts_with(std::string_view s) const { return text_.substr(i_).starts_with(s); }

  void skip_space() {
    while (i_ < text_.size() &&
           (text_[i_] == ' ' || text_[i_] == '\t' || text_[i_] == '\n' || text_[i_] == '\r')) {
      ++i_;
    }
  }

  Token take(Tok t, std::size_t len) {
    Token tok{t, i_, {}, std::nullopt};
    i_ += len;
    return tok;
  }

  Token next() {
    const std::size_t start = i_;
    const char c = text_[i_];
    if (c == 'L' || c == 'R') return atom();
    if (c == '(') return take(Tok::LParen, 1);
    if (c == ')') return take(Tok::RParen, 1);
    if (c == '~') return take(Tok::Not, 1);
    if (c == '&') return take(Tok::And, 1);
    if (c == '|') return take(Tok::Or, 1);
    if (starts_with("[]->")) return take(Tok::Box, 4);
    if (starts_with("->")) return take(Tok::Arrow, 2);
    if (starts_with("=>")) return take(Tok::Entails, 2);
    if (starts_with("□->")) return take(Tok::Box, 5);
    if (starts_with("□→")) return take(Tok::Box, 6);
    if (starts_with("→")) return take(Tok::Arrow, 3);
    if (starts_with("⇒")) return take(Tok::Entails, 3);
    if (starts_with("¬")) return take(Tok::Not, 2);
    if (starts_with("∧")) return take(Tok::And, 3);
    if (starts_with("∨")) return take(Tok::Or, 3);
    throw SyntaxError(std::string("unexpected character '") + c + "'", start);
  }

  Token atom() {
    Token tok{Tok::Atom, i_, {}, std::nullopt};
    const Region region = text_[i_] == 'L' ? Region::Left : Region::Right;
    if (i_ + 1 >= text_.size() || (text_[i_ + 1] != '1' && text_[i_ + 1] != '2')) {
      throw SyntaxError("expected 1 or 2 after experiment region", i_ + 1);
    }
    tok.setting = Setting{region, text_[i_ + 1] - '0'};
    i_ += 2;
    // A '-' directly followed by '>' starts an arrow, not an outcome sign.
    if (starts_with("+")) {
      tok.outcome = Outcome::Plus;
      i_ += 1;
    } else if (starts_with("-") && !starts_with("->")) {
      tok.outcome = Outcome::Minus;
      i_ += 1;
    } else if (starts_with("−")) {
      tok.outcome = Outcome::Minus;
      i_ += 3;
    }
    if (i_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i_])) != 0)) {
      throw SyntaxError("unknown atom", tok.pos);
    }
    return tok;
  }

  std::string_view text_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula run() {
    Formula f = entails();
    if (peek().type != Tok::End) throw SyntaxError("unexpected trailing input", peek().pos);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[k_]; }
  bool accept(Tok t) {
    if (peek().type != t) return false;
    ++k_;
    return true;
  }

  Formula entails() {
    Formula lhs = implies();
    if (accept(Tok::Entails)) return Formula::entails(lhs, entails());
    return lhs;
  }

  Formula implies() {
    Formula lhs = box();
    if (accept(Tok::Arrow)) return Formula::implication(lhs, implies());
    return lhs;
  }

  Formula box() {
    const std::size_t pos = peek().pos;
    Formula lhs = disjunction();
    if (accept(Tok::Box)) {
      if (lhs.kind() != Formula::Kind::SettingAtom) {
        throw SemanticError("counterfactual antecedent must be an experiment choice (position " +
                            std::to_string(pos) + ")");
      }
      return Formula::counterfactual(lhs.setting(), box());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Or)) f = Formula::disjunction(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept(Tok::And)) f = Formula::conjunction(f, unary());
    return f;
  }

  Formula unary() {
    if (accept(Tok::Not)) return Formula::negation(unary());
    return primary();
  }

  Formula primary() {
    const Token tok = peek();
    if (accept(Tok::Atom)) {
      return tok.outcome ? Formula::outcome_atom(tok.setting, *tok.outcome)
                         : Formula::setting_atom(tok.setting);
    }
    if (accept(Tok::LParen)) {
      Formula inner = entails();
      if (!accept(Tok::RParen)) throw SyntaxError("expected ')'", peek().pos);
      return inner;
    }
    if (tok.type == Tok::End) throw SyntaxError("unexpected end of formula", tok.pos);
    throw SyntaxError("expected an atom, '~' or '('", tok.pos);
  }

  std::vector<Token> tokens_;
  std::size_t k_ = 0;
};

void print(const Formula& f, std::string& out) {
  using K = Formula::Kind;
  auto binary = [&](const char* op) {
    out += '(';
    print(f.lhs(), out);
    out += op;
    print(f.rhs(), out);
    out += ')';
  };
  switch (f.kind()) {
    case K::SettingAtom:
      out += to_string(f.setting());
      break;
    case K::OutcomeAtom:
      out += to_string(f.setting());
      out += sign_char(f.outcome());
      break;
    case K::Not:
      out += "(~";
      print(f.lhs(), out);
      out += ')';
      break;
    case K::And:
      binary(" & ");
      break;
    case K::Or:
      binary(" | ");
      break;
    case K::Implies:
      binary(" -> ");
      break;
    case K::Counterfactual:
      out += '(';
      out += to_string(f.setting());
      out += " []-> ";
      print(f.rhs(), out);
      out += ')';
      break;
    case K::Entails:
      binary(" => ");
      break;
  }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(Lexer(text).run()).run(); }

std::string pretty_print(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

}  // namespace hardy
