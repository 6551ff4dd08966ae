#include "regproc/syntax.hpp"

#include <algorithm>
#include <cctype>

#include "regproc/error.hpp"

namespace regproc {

namespace {

constexpr std::string_view kEncapKeyword = "encap";

std::size_t mix(std::size_t seed, std::size_t v) noexcept {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

// ---------------------------------------------------------------------------
// Action

bool Action::is_valid_name(std::string_view name) noexcept {
  if (name.empty() || name == kEncapKeyword) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  for (char c : name) {
    auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || u == '_')) return false;
  }
  return true;
}

Action::Action(std::string name) : name_(std::move(name)) {
  if (!is_valid_name(name_))
    throw InvalidArgument("invalid action name '" + name_ + "'");
}

// ---------------------------------------------------------------------------
// Expression

struct Expression::Node {
  Kind kind;
  std::optional<Action> action;
  std::vector<Expression> children;
  ActionSet blocked;
  bool terminates = false;
  std::size_t hash = 0;
  std::size_t size = 1;
};

namespace {

std::size_t action_hash(const Action& a) { return std::hash<Action>{}(a); }

}  // namespace

Expression Expression::deadlock() {
  static const Expression e = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Deadlock;
    n->hash = mix(0, static_cast<std::size_t>(Kind::Deadlock));
    return Expression(std::move(n));
  }();
  return e;
}

Expression Expression::empty() {
  static const Expression e = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Empty;
    n->terminates = true;
    n->hash = mix(0, static_cast<std::size_t>(Kind::Empty));
    return Expression(std::move(n));
  }();
  return e;
}

Expression Expression::act(Action a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Act;
  n->hash = mix(mix(0, static_cast<std::size_t>(Kind::Act)), action_hash(a));
  n->action = std::move(a);
  return Expression(std::move(n));
}

namespace {

template <class NodeT>
std::shared_ptr<NodeT> make_binary(Kind kind, Expression l, Expression r) {
  auto n = std::make_shared<NodeT>();
  n->kind = kind;
  n->hash = mix(mix(mix(0, static_cast<std::size_t>(kind)), l.hash()), r.hash());
  n->size = 1 + l.size() + r.size();
  n->children = {std::move(l), std::move(r)};
  return n;
}

}  // namespace

Expression Expression::seq(Expression left, Expression right) {
  bool t = left.terminates() && right.terminates();
  auto n = make_binary<Node>(Kind::Seq, std::move(left), std::move(right));
  n->terminates = t;
  return Expression(std::move(n));
}

Expression Expression::alt(Expression left, Expression right) {
  bool t = left.terminates() || right.terminates();
  auto n = make_binary<Node>(Kind::Alt, std::move(left), std::move(right));
  n->terminates = t;
  return Expression(std::move(n));
}

Expression Expression::par(Expression left, Expression right) {
  bool t = left.terminates() && right.terminates();
  auto n = make_binary<Node>(Kind::Par, std::move(left), std::move(right));
  n->terminates = t;
  return Expression(std::move(n));
}

Expression Expression::star(Expression body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Star;
  n->terminates = true;
  n->hash = mix(mix(0, static_cast<std::size_t>(Kind::Star)), body.hash());
  n->size = 1 + body.size();
  n->children = {std::move(body)};
  return Expression(std::move(n));
}

Expression Expression::encap(ActionSet blocked, Expression body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Encap;
  n->terminates = body.terminates();
  std::size_t h = mix(0, static_cast<std::size_t>(Kind::Encap));
  for (const auto& a : blocked) h = mix(h, action_hash(a));
  n->hash = mix(h, body.hash());
  n->size = 1 + body.size();
  n->blocked = std::move(blocked);
  n->children = {std::move(body)};
  return Expression(std::move(n));
}

Kind Expression::kind() const noexcept { return node_->kind; }

const Action& Expression::action() const {
  if (node_->kind != Kind::Act) throw InvalidArgument("not an action node");
  return *node_->action;
}

const Expression& Expression::left() const {
  if (!is_binary()) throw InvalidArgument("not a binary node");
  return node_->children[0];
}

const Expression& Expression::right() const {
  if (!is_binary()) throw InvalidArgument("not a binary node");
  return node_->children[1];
}

const Expression& Expression::body() const {
  if (node_->kind != Kind::Star && node_->kind != Kind::Encap)
    throw InvalidArgument("not a star or encapsulation node");
  return node_->children[0];
}

const ActionSet& Expression::blocked() const {
  if (node_->kind != Kind::Encap) throw InvalidArgument("not an encapsulation node");
  return node_->blocked;
}

bool Expression::is_binary() const noexcept {
  auto k = node_->kind;
  return k == Kind::Seq || k == Kind::Alt || k == Kind::Par;
}

bool Expression::terminates() const noexcept { return node_->terminates; }
std::size_t Expression::hash() const noexcept { return node_->hash; }
std::size_t Expression::size() const noexcept { return node_->size; }

bool operator==(const Expression& a, const Expression& b) noexcept {
  const auto* x = a.node_.get();
  const auto* y = b.node_.get();
  if (x == y) return true;
  if (x->hash != y->hash || x->kind != y->kind || x->size != y->size) return false;
  switch (x->kind) {
    case Kind::Deadlock:
    case Kind::Empty:
      return true;
    case Kind::Act:
      return *x->action == *y->action;
    case Kind::Encap:
      if (x->blocked != y->blocked) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < x->children.size(); ++i)
    if (!(x->children[i] == y->children[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Theory

std::string_view to_string(Theory t) noexcept {
  switch (t) {
    case Theory::BPA: return "BPA";
    case Theory::PA: return "PA";
    case Theory::ACP: return "ACP";
  }
  return "?";
}

Theory classify_theory(const Expression& e) {
  switch (e.kind()) {
    case Kind::Deadlock:
    case Kind::Empty:
    case Kind::Act:
      return Theory::BPA;
    case Kind::Encap:
      return Theory::ACP;
    case Kind::Star:
      return classify_theory(e.body());
    case Kind::Par: {
      auto l = classify_theory(e.left());
      auto r = classify_theory(e.right());
      return std::max({Theory::PA, l, r});
    }
    case Kind::Seq:
    case Kind::Alt:
      return std::max(classify_theory(e.left()), classify_theory(e.right()));
  }
  return Theory::ACP;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Ident, Zero, One, Encap, Dot, Plus, Bar2, Star, LParen, RParen, LBrace, RBrace, Comma, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier '" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Tok::End, start, ""};
    char c = text_[pos_];
    auto single = [&](Tok k) {
      ++pos_;
      return Token{k, start, std::string(1, c)};
    };
    switch (c) {
      case '.': return single(Tok::Dot);
      case '+': return single(Tok::Plus);
      case '*': return single(Tok::Star);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '{': return single(Tok::LBrace);
      case '}': return single(Tok::RBrace);
      case ',': return single(Tok::Comma);
      case '|':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '|') {
          pos_ += 2;
          return {Tok::Bar2, start, "||"};
        }
        throw ParseError(start, "expected '||'");
      default:
        break;
    }
    auto u = static_cast<unsigned char>(c);
    if (std::isdigit(u)) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
      std::string_view word = text_.substr(pos_, end - pos_);
      if (word == "0" || word == "1") {
        pos_ = end;
        return {word == "0" ? Tok::Zero : Tok::One, start, std::string(word)};
      }
      throw ParseError(start, "invalid token '" + std::string(word) + "'");
    }
    if (std::isalpha(u) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size()) {
        auto d = static_cast<unsigned char>(text_[end]);
        if (!(std::isalnum(d) || d == '_')) break;
        ++end;
      }
      std::string word(text_.substr(pos_, end - pos_));
      pos_ = end;
      if (word == kEncapKeyword) return {Tok::Encap, start, word};
      return {Tok::Ident, start, word};
    }
    throw ParseError(start, std::string("unexpected character '") + c + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  Expression parse_all() {
    Expression e = parse_alt();
    if (cur_.kind != Tok::End) fail("unexpected " + describe(cur_));
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(cur_.pos, msg); }

  void advance() { cur_ = lexer_.next(); }

  void expect(Tok k, std::string_view what) {
    if (cur_.kind != k) fail("expected " + std::string(what) + ", found " + describe(cur_));
    advance();
  }

  Expression parse_alt() {
    Expression e = parse_par();
    while (cur_.kind == Tok::Plus) {
      advance();
      e = Expression::alt(std::move(e), parse_par());
    }
    return e;
  }

  Expression parse_par() {
    Expression e = parse_seq();
    while (cur_.kind == Tok::Bar2) {
      advance();
      e = Expression::par(std::move(e), parse_seq());
    }
    return e;
  }

  Expression parse_seq() {
    Expression e = parse_postfix();
    while (cur_.kind == Tok::Dot) {
      advance();
      e = Expression::seq(std::move(e), parse_postfix());
    }
    return e;
  }

  Expression parse_postfix() {
    Expression e = parse_atom();
    while (cur_.kind == Tok::Star) {
      advance();
      e = Expression::star(std::move(e));
    }
    return e;
  }

  Expression parse_atom() {
    switch (cur_.kind) {
      case Tok::Zero:
        advance();
        return Expression::deadlock();
      case Tok::One:
        advance();
        return Expression::empty();
      case Tok::Ident: {
        Action a(cur_.text);
        advance();
        return Expression::act(std::move(a));
      }
      case Tok::LParen: {
        advance();
        Expression e = parse_alt();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Encap:
        return parse_encap();
      default:
        fail("expected an expression, found " + describe(cur_));
    }
  }

  Expression parse_encap() {
    advance();
    if (cur_.kind != Tok::LBrace) fail("'encap' is reserved and cannot name an action");
    advance();
    ActionSet blocked;
    if (cur_.kind != Tok::RBrace) {
      for (;;) {
        if (cur_.kind != Tok::Ident) fail("expected an action name, found " + describe(cur_));
        blocked.insert(Action(cur_.text));
        advance();
        if (cur_.kind != Tok::Comma) break;
        advance();
      }
    }
    expect(Tok::RBrace, "'}'");
    expect(Tok::LParen, "'('");
    Expression body = parse_alt();
    expect(Tok::RParen, "')'");
    return Expression::encap(std::move(blocked), std::move(body));
  }

  Lexer lexer_;
  Token cur_{Tok::End, 0, ""};
};

// Binding strength; higher binds tighter.
int precedence(Kind k) {
  switch (k) {
    case Kind::Alt: return 1;
    case Kind::Par: return 2;
    case Kind::Seq: return 3;
    case Kind::Star: return 4;
    default: return 5;
  }
}

void render_into(const Expression& e, std::string& out);

void render_operand(const Expression& e, bool parens, std::string& out) {
  if (parens) out += '(';
  render_into(e, out);
  if (parens) out += ')';
}

void render_into(const Expression& e, std::string& out) {
  switch (e.kind()) {
    case Kind::Deadlock: out += '0'; return;
    case Kind::Empty: out += '1'; return;
    case Kind::Act: out += e.action().name(); return;
    case Kind::Star:
      render_operand(e.body(), precedence(e.body().kind()) < precedence(Kind::Star), out);
      out += '*';
      return;
    case Kind::Encap: {
      out += kEncapKeyword;
      out += '{';
      bool first = true;
      for (const auto& a : e.blocked()) {
        if (!first) out += ',';
        first = false;
        out += a.name();
      }
      out += "}(";
      render_into(e.body(), out);
      out += ')';
      return;
    }
    case Kind::Seq:
    case Kind::Alt:
    case Kind::Par: {
      int p = precedence(e.kind());
      render_operand(e.left(), precedence(e.left().kind()) < p, out);
      out += e.kind() == Kind::Seq ? "." : e.kind() == Kind::Alt ? "+" : "||";
      render_operand(e.right(), precedence(e.right().kind()) <= p, out);
      return;
    }
  }
}

}  // namespace

Expression parse_expression(std::string_view text) { return Parser(text).parse_all(); }

std::string render_expression(const Expression& e) {
  std::string out;
  out.reserve(e.size() * 2);
  render_into(e, out);
  return out;
}

}  // namespace regproc
