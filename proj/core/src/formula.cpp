#include "topohl/formula.hpp"

#include <algorithm>
#include <functional>

namespace topohl {

const char* opName(Op op) noexcept {
  switch (op) {
    case Op::Prop: return "Prop";
    case Op::Nom: return "Nom";
    case Op::Neg: return "Neg";
    case Op::And: return "And";
    case Op::Or: return "Or";
    case Op::Impl: return "Impl";
    case Op::Dia: return "Dia";
    case Op::Box: return "Box";
    case Op::At: return "At";
    case Op::E: return "E";
    case Op::A: return "A";
  }
  return "?";
}

namespace {

std::size_t mixHash(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

void requireName(const std::string& name, const char* what) {
  if (name.empty()) throw std::invalid_argument(std::string(what) + " name must be nonempty");
}

}  // namespace

Formula Formula::make(Op op, std::string name, std::vector<Formula> kids) {
  std::size_t size = 1, depth = 0;
  std::size_t h = mixHash(static_cast<std::size_t>(op) + 1, std::hash<std::string>{}(name));
  for (const auto& k : kids) {
    size += k.size();
    depth = std::max(depth, k.depth() + 1);
    h = mixHash(h, k.hash());
  }
  return Formula(std::make_shared<const Node>(Node{op, std::move(name), std::move(kids), size, depth, h}));
}

Formula Formula::prop(std::string name) {
  requireName(name, "proposition");
  return make(Op::Prop, std::move(name), {});
}
Formula Formula::nom(std::string name) {
  requireName(name, "nominal");
  return make(Op::Nom, std::move(name), {});
}
Formula Formula::neg(Formula f) { return make(Op::Neg, {}, {std::move(f)}); }
Formula Formula::conj(Formula f, Formula g) { return make(Op::And, {}, {std::move(f), std::move(g)}); }
Formula Formula::disj(Formula f, Formula g) { return make(Op::Or, {}, {std::move(f), std::move(g)}); }
Formula Formula::impl(Formula f, Formula g) { return make(Op::Impl, {}, {std::move(f), std::move(g)}); }
Formula Formula::dia(Formula f) { return make(Op::Dia, {}, {std::move(f)}); }
Formula Formula::box(Formula f) { return make(Op::Box, {}, {std::move(f)}); }
Formula Formula::at(std::string nominal, Formula f) {
  requireName(nominal, "nominal");
  return make(Op::At, std::move(nominal), {std::move(f)});
}
Formula Formula::exists(Formula f) { return make(Op::E, {}, {std::move(f)}); }
Formula Formula::forall(Formula f) { return make(Op::A, {}, {std::move(f)}); }

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.op() != b.op() || a.name() != b.name() || a.arity() != b.arity())
    return false;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!(a.node_->kids[i] == b.node_->kids[i])) return false;
  return true;
}

// Orders by size first so that subformulas sort before their superformulas.
std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = static_cast<int>(a.op()) <=> static_cast<int>(b.op()); c != 0) return c;
  if (auto c = a.name().compare(b.name()); c != 0) return c <=> 0;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (auto c = a.node_->kids[i] <=> b.node_->kids[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

namespace {

int precedence(Op op) {
  switch (op) {
    case Op::Impl: return 1;
    case Op::Or: return 2;
    case Op::And: return 3;
    case Op::Prop:
    case Op::Nom: return 5;
    default: return 4;
  }
}

void print(const Formula& f, std::string& out);

void printChild(const Formula& f, int minPrec, std::string& out) {
  if (precedence(f.op()) < minPrec) {
    out += '(';
    print(f, out);
    out += ')';
  } else {
    print(f, out);
  }
}

void print(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::Prop: out += f.name(); return;
    case Op::Nom: out += '\''; out += f.name(); return;
    case Op::Neg: out += '~'; printChild(f.child(), 4, out); return;
    case Op::Dia: out += "<>"; printChild(f.child(), 4, out); return;
    case Op::Box: out += "[]"; printChild(f.child(), 4, out); return;
    case Op::E: out += "E "; printChild(f.child(), 4, out); return;
    case Op::A: out += "A "; printChild(f.child(), 4, out); return;
    case Op::At:
      out += "@'";
      out += f.name();
      out += ' ';
      printChild(f.child(), 4, out);
      return;
    case Op::And:
    case Op::Or: {
      // left associative
      int p = precedence(f.op());
      printChild(f.child(0), p, out);
      out += f.op() == Op::And ? " & " : " | ";
      printChild(f.child(1), p + 1, out);
      return;
    }
    case Op::Impl:
      // right associative
      printChild(f.child(0), 2, out);
      out += " -> ";
      printChild(f.child(1), 1, out);
      return;
  }
}

}  // namespace

std::string Formula::toString() const {
  std::string out;
  print(*this, out);
  return out;
}

namespace {

void collect(const Formula& f, FormulaSet& out) {
  if (!out.insert(f).second) return;
  if (f.op() == Op::At) out.insert(Formula::nom(f.name()));
  for (const auto& k : f.children()) collect(k, out);
}

}  // namespace

FormulaSet subformulaClosure(const Formula& f) {
  FormulaSet out;
  collect(f, out);
  return out;
}

FormulaSet subformulaClosure(const std::vector<Formula>& fs) {
  FormulaSet out;
  for (const auto& f : fs) collect(f, out);
  return out;
}

FormulaSet negationClosure(const FormulaSet& s) {
  FormulaSet out = s;
  for (const auto& g : s) {
    if (g.op() == Op::Neg)
      out.insert(g.child());
    else
      out.insert(Formula::neg(g));
  }
  return out;
}

bool isSubformulaClosed(const FormulaSet& s) {
  for (const auto& f : s) {
    for (const auto& k : f.children())
      if (!s.contains(k)) return false;
    if (f.op() == Op::At && !s.contains(Formula::nom(f.name()))) return false;
  }
  return true;
}

Formula eliminateAt(const Formula& f) {
  switch (f.op()) {
    case Op::Prop:
    case Op::Nom: return f;
    case Op::At: return Formula::exists(Formula::conj(Formula::nom(f.name()), eliminateAt(f.child())));
    case Op::Neg: return Formula::neg(eliminateAt(f.child()));
    case Op::Dia: return Formula::dia(eliminateAt(f.child()));
    case Op::Box: return Formula::box(eliminateAt(f.child()));
    case Op::E: return Formula::exists(eliminateAt(f.child()));
    case Op::A: return Formula::forall(eliminateAt(f.child()));
    case Op::And: return Formula::conj(eliminateAt(f.child(0)), eliminateAt(f.child(1)));
    case Op::Or: return Formula::disj(eliminateAt(f.child(0)), eliminateAt(f.child(1)));
    case Op::Impl: return Formula::impl(eliminateAt(f.child(0)), eliminateAt(f.child(1)));
  }
  return f;
}

Formula normalizeToDiamond(const Formula& f) {
  using F = Formula;
  switch (f.op()) {
    case Op::Prop:
    case Op::Nom: return f;
    case Op::Neg: return F::neg(normalizeToDiamond(f.child()));
    case Op::Dia: return F::dia(normalizeToDiamond(f.child()));
    case Op::Box: return F::neg(F::dia(F::neg(normalizeToDiamond(f.child()))));
    case Op::E: return F::exists(normalizeToDiamond(f.child()));
    case Op::A: return F::neg(F::exists(F::neg(normalizeToDiamond(f.child()))));
    case Op::At: return F::at(f.name(), normalizeToDiamond(f.child()));
    case Op::And: return F::conj(normalizeToDiamond(f.child(0)), normalizeToDiamond(f.child(1)));
    case Op::Or:
      return F::neg(F::conj(F::neg(normalizeToDiamond(f.child(0))), F::neg(normalizeToDiamond(f.child(1)))));
    case Op::Impl:
      return F::neg(F::conj(normalizeToDiamond(f.child(0)), F::neg(normalizeToDiamond(f.child(1)))));
  }
  return f;
}

namespace {

void atomsOf(const Formula& f, std::set<std::string>& props, std::set<std::string>& noms) {
  if (f.op() == Op::Prop) props.insert(f.name());
  if (f.op() == Op::Nom || f.op() == Op::At) noms.insert(f.name());
  for (const auto& k : f.children()) atomsOf(k, props, noms);
}

}  // namespace

std::set<std::string> propositionsOf(const Formula& f) {
  std::set<std::string> p, n;
  atomsOf(f, p, n);
  return p;
}

std::set<std::string> nominalsOf(const Formula& f) {
  std::set<std::string> p, n;
  atomsOf(f, p, n);
  return n;
}

std::size_t connectiveCount(const Formula& f) {
  if (f.isAtom()) return 0;
  std::size_t n = 1;
  for (const auto& k : f.children()) n += connectiveCount(k);
  return n;
}

}  // namespace topohl
