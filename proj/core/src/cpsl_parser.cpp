#include "pryvect/cpsl/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <unordered_set>

#include "pryvect/trace.hpp"

namespace pryvect::cpsl {

namespace {

enum class Tok {
  Ident,
  Int,
  IdLit,
  KwState,
  KwGiven,
  KwWhen,
  KwThen,
  KwAccept,
  KwBool,
  KwInt,
  KwId,
  KwSet,
  KwOf,
  KwSkip,
  KwTrue,
  KwFalse,
  KwNot,
  KwAnd,
  KwOr,
  KwIn,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Comma,
  Colon,
  Assign,  // :=
  Plus,
  Minus,
  Star,
  Pipe,
  Eq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::IdLit: return "id literal";
    case Tok::KwState: return "STATE";
    case Tok::KwGiven: return "GIVEN";
    case Tok::KwWhen: return "WHEN";
    case Tok::KwThen: return "THEN";
    case Tok::KwAccept: return "ACCEPT";
    case Tok::KwBool: return "Bool";
    case Tok::KwInt: return "Int";
    case Tok::KwId: return "Id";
    case Tok::KwSet: return "Set";
    case Tok::KwOf: return "of";
    case Tok::KwSkip: return "skip";
    case Tok::KwTrue: return "true";
    case Tok::KwFalse: return "false";
    case Tok::KwNot: return "not";
    case Tok::KwAnd: return "and";
    case Tok::KwOr: return "or";
    case Tok::KwIn: return "in";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Assign: return "':='";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Pipe: return "'|'";
    case Tok::Eq: return "'='";
    case Tok::Ne: return "'!='";
    case Tok::Lt: return "'<'";
    case Tok::Le: return "'<='";
    case Tok::Gt: return "'>'";
    case Tok::Ge: return "'>='";
    case Tok::End: return "end of input";
  }
  return "?";
}

Tok keyword_kind(const std::string& s) {
  if (s == "STATE") return Tok::KwState;
  if (s == "GIVEN") return Tok::KwGiven;
  if (s == "WHEN") return Tok::KwWhen;
  if (s == "THEN") return Tok::KwThen;
  if (s == "ACCEPT") return Tok::KwAccept;
  if (s == "Bool") return Tok::KwBool;
  if (s == "Int") return Tok::KwInt;
  if (s == "Id") return Tok::KwId;
  if (s == "Set") return Tok::KwSet;
  if (s == "of") return Tok::KwOf;
  if (s == "skip") return Tok::KwSkip;
  if (s == "true") return Tok::KwTrue;
  if (s == "false") return Tok::KwFalse;
  if (s == "not") return Tok::KwNot;
  if (s == "and") return Tok::KwAnd;
  if (s == "or") return Tok::KwOr;
  if (s == "in") return Tok::KwIn;
  return Tok::Ident;
}

class Lexer {
public:
  explicit Lexer(const std::string& src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= src_.size()) break;
      out.push_back(next());
    }
    out.push_back({Tok::End, "", line_, col_});
    return out;
  }

private:
  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(line_, col_, "", msg); }

  Token next() {
    int line = line_, col = col_;
    char c = src_[pos_];
    auto make = [&](Tok k, std::string text) { return Token{k, std::move(text), line, col}; };

    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        word.push_back(src_[pos_]);
        advance();
      }
      return make(keyword_kind(word), word);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        num.push_back(src_[pos_]);
        advance();
      }
      return make(Tok::Int, num);
    }
    if (c == '\'') {
      advance();
      std::string text;
      while (pos_ < src_.size() && src_[pos_] != '\'') {
        char v = src_[pos_];
        if (!(std::isalnum(static_cast<unsigned char>(v)) || v == '_' || v == '+' || v == '-' || v == '*'))
          fail(std::string("bad character in id literal: '") + v + "'");
        text.push_back(v);
        advance();
      }
      if (pos_ >= src_.size()) fail("unterminated id literal");
      advance();  // closing quote
      if (text.empty()) fail("empty id literal");
      return make(Tok::IdLit, text);
    }

    advance();
    switch (c) {
      case '(': return make(Tok::LParen, "(");
      case ')': return make(Tok::RParen, ")");
      case '[': return make(Tok::LBracket, "[");
      case ']': return make(Tok::RBracket, "]");
      case '{': return make(Tok::LBrace, "{");
      case '}': return make(Tok::RBrace, "}");
      case ',': return make(Tok::Comma, ",");
      case '+': return make(Tok::Plus, "+");
      case '-': return make(Tok::Minus, "-");
      case '*': return make(Tok::Star, "*");
      case '|': return make(Tok::Pipe, "|");
      case '=': return make(Tok::Eq, "=");
      case ':':
        if (pos_ < src_.size() && src_[pos_] == '=') {
          advance();
          return make(Tok::Assign, ":=");
        }
        return make(Tok::Colon, ":");
      case '!':
        if (pos_ < src_.size() && src_[pos_] == '=') {
          advance();
          return make(Tok::Ne, "!=");
        }
        fail("stray '!'");
      case '<':
        if (pos_ < src_.size() && src_[pos_] == '=') {
          advance();
          return make(Tok::Le, "<=");
        }
        return make(Tok::Lt, "<");
      case '>':
        if (pos_ < src_.size() && src_[pos_] == '=') {
          advance();
          return make(Tok::Ge, ">=");
        }
        return make(Tok::Gt, ">");
      default:
        fail(std::string("unexpected character '") + c + "'");
    }
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  PolicyAst policy() {
    PolicyAst p;
    expect(Tok::KwState, "STATE");
    while (at(Tok::Ident)) p.state_decls.push_back(decl());
    while (at(Tok::KwGiven) || at(Tok::KwWhen)) p.rules.push_back(rule());
    expect(Tok::KwAccept, "ACCEPT");
    p.accept = expression();
    expect(Tok::End, "end of input");
    return p;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }

  Token take() { return toks_[pos_++]; }

  Token expect(Tok k, const std::string& expected) {
    if (!at(k)) {
      const Token& t = peek();
      throw ParseError(t.line, t.col, expected,
                       "unexpected " + std::string(tok_name(t.kind)) +
                           (t.text.empty() ? "" : " '" + t.text + "'"));
    }
    return take();
  }

  bool accept_tok(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }

  int64_t signed_int() {
    bool neg = accept_tok(Tok::Minus);
    Token t = expect(Tok::Int, "integer");
    int64_t v = std::strtoll(t.text.c_str(), nullptr, 10);
    return neg ? -v : v;
  }

  TypeTag type_tag(bool allow_set) {
    if (accept_tok(Tok::KwBool)) return TypeTag::boolean();
    if (accept_tok(Tok::KwId)) return TypeTag::ident();
    if (accept_tok(Tok::KwInt)) {
      if (!accept_tok(Tok::LBracket)) return TypeTag::unbounded_int();
      int64_t lo = signed_int();
      expect(Tok::Comma, "','");
      int64_t hi = signed_int();
      expect(Tok::RBracket, "']'");
      return TypeTag::integer(lo, hi);
    }
    if (allow_set && at(Tok::KwSet)) {
      take();
      expect(Tok::KwOf, "of");
      TypeTag inner = type_tag(false);
      return TypeTag::set_of(inner.base, inner.lo, inner.hi);
    }
    const Token& t = peek();
    throw ParseError(t.line, t.col, allow_set ? "Bool, Int, Id or Set" : "Bool, Int or Id",
                     "unexpected " + std::string(tok_name(t.kind)));
  }

  Value literal() {
    if (accept_tok(Tok::KwTrue)) return Value::boolean(true);
    if (accept_tok(Tok::KwFalse)) return Value::boolean(false);
    if (at(Tok::Int) || at(Tok::Minus)) return Value::integer(signed_int());
    if (at(Tok::IdLit)) return Value::ident(take().text);
    if (accept_tok(Tok::LBrace)) {
      std::vector<Value> elems;
      if (!at(Tok::RBrace)) {
        elems.push_back(literal());
        while (accept_tok(Tok::Comma)) elems.push_back(literal());
      }
      expect(Tok::RBrace, "'}'");
      return Value::set(std::move(elems));
    }
    const Token& t = peek();
    throw ParseError(t.line, t.col, "literal value", "unexpected " + std::string(tok_name(t.kind)));
  }

  VarDecl decl() {
    VarDecl d;
    d.name = expect(Tok::Ident, "variable name").text;
    expect(Tok::Colon, "':'");
    d.type = type_tag(true);
    expect(Tok::Assign, "':='");
    d.init = literal();
    return d;
  }

  EventPattern event_pattern() {
    EventPattern ev;
    ev.label = expect(Tok::Ident, "event label").text;
    if (accept_tok(Tok::LParen)) {
      const Token& t = peek();
      switch (t.kind) {
        case Tok::Ident:
        case Tok::Int:
          ev.value = take().text;
          break;
        case Tok::Plus:
          take();
          ev.value = "+";
          break;
        case Tok::Minus:
          take();
          ev.value = "-";
          break;
        case Tok::Star:
          take();
          ev.value = "*";
          break;
        default:
          throw ParseError(t.line, t.col, "event value", "unexpected " + std::string(tok_name(t.kind)));
      }
      expect(Tok::RParen, "')'");
    }
    return ev;
  }

  RuleAst rule() {
    RuleAst r;
    if (accept_tok(Tok::KwGiven))
      r.guard = expression();
    else
      r.guard = bool_lit(true);
    Token when = expect(Tok::KwWhen, "WHEN");
    r.events.push_back(event_pattern());
    while (accept_tok(Tok::Comma)) r.events.push_back(event_pattern());
    for (std::size_t i = 0; i < r.events.size(); ++i)
      for (std::size_t j = i + 1; j < r.events.size(); ++j)
        if (r.events[i] == r.events[j])
          throw ParseError(when.line, when.col, "",
                           "duplicate event " + r.events[j].str() + " in WHEN list");
    expect(Tok::KwThen, "THEN");
    if (accept_tok(Tok::KwSkip)) return r;
    do {
      Assign a;
      a.var = expect(Tok::Ident, "variable name").text;
      expect(Tok::Assign, "':='");
      a.rhs = expression();
      r.updates.push_back(std::move(a));
    } while (accept_tok(Tok::Comma));
    return r;
  }

  ExpPtr expression() { return or_exp(); }

  ExpPtr or_exp() {
    ExpPtr e = and_exp();
    while (accept_tok(Tok::KwOr)) e = binary(Exp::Kind::Or, std::move(e), and_exp());
    return e;
  }

  ExpPtr and_exp() {
    ExpPtr e = not_exp();
    while (accept_tok(Tok::KwAnd)) e = binary(Exp::Kind::And, std::move(e), not_exp());
    return e;
  }

  ExpPtr not_exp() {
    if (accept_tok(Tok::KwNot)) return unary(Exp::Kind::Not, not_exp());
    return cmp_exp();
  }

  ExpPtr cmp_exp() {
    ExpPtr e = add_exp();
    auto op = [&]() -> std::optional<Exp::CmpOp> {
      switch (peek().kind) {
        case Tok::Eq: return Exp::CmpOp::Eq;
        case Tok::Ne: return Exp::CmpOp::Ne;
        case Tok::Lt: return Exp::CmpOp::Lt;
        case Tok::Le: return Exp::CmpOp::Le;
        case Tok::Gt: return Exp::CmpOp::Gt;
        case Tok::Ge: return Exp::CmpOp::Ge;
        default: return std::nullopt;
      }
    }();
    if (op) {
      take();
      return cmp(*op, std::move(e), add_exp());
    }
    if (accept_tok(Tok::KwIn)) return binary(Exp::Kind::In, std::move(e), add_exp());
    return e;
  }

  ExpPtr add_exp() {
    ExpPtr e = mul_exp();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      Tok k = take().kind;
      e = binary(k == Tok::Plus ? Exp::Kind::Add : Exp::Kind::Sub, std::move(e), mul_exp());
    }
    return e;
  }

  ExpPtr mul_exp() {
    ExpPtr e = unary_exp();
    while (accept_tok(Tok::Star)) e = binary(Exp::Kind::Mul, std::move(e), unary_exp());
    return e;
  }

  ExpPtr unary_exp() {
    if (accept_tok(Tok::Minus)) return unary(Exp::Kind::Neg, unary_exp());
    return primary();
  }

  ExpPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::KwTrue:
        take();
        return bool_lit(true);
      case Tok::KwFalse:
        take();
        return bool_lit(false);
      case Tok::Int:
        return int_lit(std::strtoll(take().text.c_str(), nullptr, 10));
      case Tok::IdLit:
        return id_lit(take().text);
      case Tok::Ident: {
        Token tok = take();
        Exp e;
        e.kind = Exp::Kind::Var;
        e.name = tok.text;
        e.line = tok.line;
        e.col = tok.col;
        return Exp::make(std::move(e));
      }
      case Tok::LParen: {
        take();
        ExpPtr e = expression();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Pipe: {
        take();
        ExpPtr e = expression();
        expect(Tok::Pipe, "'|'");
        return unary(Exp::Kind::Card, std::move(e));
      }
      case Tok::LBrace: {
        take();
        std::vector<Value> elems;
        if (!at(Tok::RBrace)) {
          elems.push_back(literal());
          while (accept_tok(Tok::Comma)) elems.push_back(literal());
        }
        expect(Tok::RBrace, "'}'");
        Exp e;
        e.kind = Exp::Kind::SetLit;
        e.set_elems = Value::set(std::move(elems)).elems;
        return Exp::make(std::move(e));
      }
      default:
        throw ParseError(t.line, t.col, "expression", "unexpected " + std::string(tok_name(t.kind)));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

PolicyAst parse(const std::string& source) {
  Lexer lexer(source);
  Parser parser(lexer.run());
  return parser.policy();
}

PolicyAst load_policy(const std::string& path) { return parse(read_file(path)); }

}  // namespace pryvect::cpsl
