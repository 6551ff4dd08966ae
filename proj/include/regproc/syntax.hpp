#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace regproc {

/// An action name. Names follow `[A-Za-z_][A-Za-z0-9_]*`; the keyword
/// `encap` is reserved by the expression grammar and rejected.
class Action {
 public:
  explicit Action(std::string name);

  static bool is_valid_name(std::string_view name) noexcept;

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Action&, const Action&) = default;
  friend auto operator<=>(const Action&, const Action&) = default;

 private:
  std::string name_;
};

using ActionSet = std::set<Action>;

enum class Kind { Deadlock, Empty, Act, Seq, Alt, Star, Par, Encap };

/// Immutable process expression. Copies share the underlying tree; equality
/// is structural and never rewrites (`1.a` and `a` are different).
class Expression {
 public:
  static Expression deadlock();
  static Expression empty();
  static Expression act(Action a);
  static Expression act(std::string name) { return act(Action(std::move(name))); }
  static Expression seq(Expression left, Expression right);
  static Expression alt(Expression left, Expression right);
  static Expression star(Expression body);
  static Expression par(Expression left, Expression right);
  static Expression encap(ActionSet blocked, Expression body);

  Kind kind() const noexcept;
  // Only valid for Act.
  const Action& action() const;
  // Seq, Alt, Par.
  const Expression& left() const;
  const Expression& right() const;
  // Star, Encap.
  const Expression& body() const;
  // Encap.
  const ActionSet& blocked() const;

  bool is_binary() const noexcept;

  // Cached at construction.
  bool terminates() const noexcept;
  std::size_t hash() const noexcept;
  std::size_t size() const noexcept;

  friend bool operator==(const Expression& a, const Expression& b) noexcept;

 private:
  struct Node;
  explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct ExpressionHash {
  std::size_t operator()(const Expression& e) const noexcept { return e.hash(); }
};

/// Subtheory classes: BPA < PA < ACP.
enum class Theory { BPA, PA, ACP };

std::string_view to_string(Theory t) noexcept;

/// Parses the concrete syntax. Operators from tightest to loosest: postfix
/// `*`, `.`, `||`, `+`; binary operators associate to the left. `0` is
/// deadlock, `1` the empty process, `encap{a,b}(p)` encapsulation.
/// Throws ParseError.
Expression parse_expression(std::string_view text);

/// Minimal-parenthesis rendering; parse_expression inverts it exactly.
std::string render_expression(const Expression& e);

Theory classify_theory(const Expression& e);

/// Finite partial communication function on unordered action pairs.
class CommFn {
 public:
  CommFn() = default;

  // Throws InvalidArgument when {a,b} is already mapped to a different
  // result.
  void define(const Action& a, const Action& b, const Action& result);

  std::optional<Action> lookup(const Action& a, const Action& b) const;

  bool empty() const noexcept { return table_.empty(); }
  std::size_t size() const noexcept { return table_.size(); }

  // Entries keyed by (min, max) argument pair.
  const std::map<std::pair<Action, Action>, Action>& table() const noexcept {
    return table_;
  }

  // Arguments and results mentioned in the table.
  ActionSet support() const;

  friend bool operator==(const CommFn&, const CommFn&) = default;

 private:
  std::map<std::pair<Action, Action>, Action> table_;
};

struct CommViolation {
  enum class Kind { NonAssociative, NotHandshaking };
  Kind kind;
  // NonAssociative: the triple (a,b,c). NotHandshaking: the result action
  // followed by the argument pair it occurs in.
  std::vector<Action> actions;
  std::string description;
};

struct CommValidation {
  bool commutative = true;
  bool associative = true;
  bool handshaking = true;
  std::vector<CommViolation> violations;
};

CommValidation validate_comm_fn(const CommFn& g);

/// Reads the `a b -> c` line format; `#` starts a comment. Throws FormatError.
CommFn parse_comm_fn(std::string_view text);
std::string render_comm_fn(const CommFn& g);

}  // namespace regproc

template <>
struct std::hash<regproc::Action> {
  std::size_t operator()(const regproc::Action& a) const noexcept {
    return std::hash<std::string>{}(a.name());
  }
};

template <>
struct std::hash<regproc::Expression> {
  std::size_t operator()(const regproc::Expression& e) const noexcept {
    return e.hash();
  }
};
