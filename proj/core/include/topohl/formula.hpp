#ifndef TOPOHL_FORMULA_HPP_
#define TOPOHL_FORMULA_HPP_

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace topohl {

// Syntax of H(E): propositions, nominals, boolean connectives, the
// topological box/diamond, satisfaction operator @ and global modalities.
enum class Op {
  Prop,
  Nom,
  Neg,
  And,
  Or,
  Impl,
  Dia,
  Box,
  At,
  E,
  A,
};

const char* opName(Op op) noexcept;

// Immutable, structurally shared formula tree. Copying is cheap; equality
// and ordering are structural.
class Formula {
public:
  static Formula prop(std::string name);
  static Formula nom(std::string name);
  static Formula neg(Formula f);
  static Formula conj(Formula f, Formula g);
  static Formula disj(Formula f, Formula g);
  static Formula impl(Formula f, Formula g);
  static Formula dia(Formula f);
  static Formula box(Formula f);
  // @_nominal f
  static Formula at(std::string nominal, Formula f);
  static Formula exists(Formula f);
  static Formula forall(Formula f);

  Op op() const noexcept { return node_->op; }
  // Name of a Prop/Nom, or the nominal of an At node; empty otherwise.
  const std::string& name() const noexcept { return node_->name; }
  std::size_t arity() const noexcept { return node_->kids.size(); }
  const Formula& child(std::size_t i = 0) const { return node_->kids.at(i); }
  const std::vector<Formula>& children() const noexcept { return node_->kids; }

  bool isAtom() const noexcept { return op() == Op::Prop || op() == Op::Nom; }
  std::size_t size() const noexcept { return node_->size; }
  std::size_t depth() const noexcept { return node_->depth; }
  std::size_t hash() const noexcept { return node_->hash; }

  // Concrete syntax; parse(toString()) reproduces the same tree.
  std::string toString() const;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

private:
  struct Node {
    Op op;
    std::string name;
    std::vector<Formula> kids;
    std::size_t size;
    std::size_t depth;
    std::size_t hash;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Op op, std::string name, std::vector<Formula> kids);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

using FormulaSet = std::set<Formula>;

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

private:
  std::size_t pos_;
};

// Grammar: atoms p, nominals 'i, ~f, f & g, f | g, f -> g (right assoc),
// [] f, <> f, @'i f, E f, A f, parentheses. Unary binds tightest, then &,
// then |, then ->.
Formula parse(const std::string& text);

// Smallest set containing f and closed under immediate subformulas. For an
// At node the nominal itself counts as a subformula.
FormulaSet subformulaClosure(const Formula& f);
FormulaSet subformulaClosure(const std::vector<Formula>& fs);

// s plus single negations of its non-negated members plus bodies of its
// negated members.
FormulaSet negationClosure(const FormulaSet& s);

inline FormulaSet closeNeg(const Formula& f) { return negationClosure(subformulaClosure(f)); }

bool isSubformulaClosed(const FormulaSet& s);

// Rewrites every @_i g bottom-up into E(i & g).
Formula eliminateAt(const Formula& f);

// Leaves only Prop, Nom, Neg, And, Dia, E (and At if present):
// [] g => ~<>~g, A g => ~E~g, f | g => ~(~f & ~g), f -> g => ~(f & ~g).
Formula normalizeToDiamond(const Formula& f);

std::set<std::string> propositionsOf(const Formula& f);
std::set<std::string> nominalsOf(const Formula& f);

// Number of non-atomic nodes.
std::size_t connectiveCount(const Formula& f);

}  // namespace topohl

#endif  // TOPOHL_FORMULA_HPP_
