#include "topohl/hintikka.hpp"

#include <algorithm>
#include <stdexcept>

namespace topohl {

Universe::Universe(const FormulaSet& sigma) : formulas_(sigma.begin(), sigma.end()) {
  if (!isSubformulaClosed(sigma)) throw std::invalid_argument("universe is not subformula-closed");
  const std::size_t n = formulas_.size();
  kids_.resize(n);
  atNominal_.assign(n, npos);
  for (std::size_t i = 0; i < n; ++i) {
    const Formula& f = formulas_[i];
    if (f.op() != Op::Neg && !sigma.contains(Formula::neg(f)))
      throw std::invalid_argument("universe is not closed under single negation: " + f.toString());
    for (const auto& k : f.children()) kids_[i].push_back(indexOf(k));
    switch (f.op()) {
      case Op::Dia: dia_.push_back(i); free_.push_back(i); break;
      case Op::Box: box_.push_back(i); free_.push_back(i); break;
      case Op::At:
        atNominal_[i] = indexOf(Formula::nom(f.name()));
        global_.push_back(i);
        free_.push_back(i);
        break;
      case Op::E:
      case Op::A: global_.push_back(i); free_.push_back(i); break;
      case Op::Nom: nom_.push_back(i); free_.push_back(i); break;
      case Op::Prop: free_.push_back(i); break;
      default: break;
    }
  }
}

std::shared_ptr<const Universe> Universe::of(const Formula& target) {
  return std::make_shared<const Universe>(closeNeg(target));
}

std::size_t Universe::indexOf(const Formula& f) const {
  auto it = std::lower_bound(formulas_.begin(), formulas_.end(), f);
  if (it == formulas_.end() || !(*it == f)) return npos;
  return static_cast<std::size_t>(it - formulas_.begin());
}

HintikkaSet HintikkaSet::fromFormulas(UniversePtr u, const std::vector<Formula>& members) {
  std::vector<bool> bits(u->size(), false);
  for (const auto& f : members) {
    auto i = u->indexOf(f);
    if (i == Universe::npos) throw std::invalid_argument("formula outside the universe: " + f.toString());
    bits[i] = true;
  }
  return HintikkaSet(std::move(u), std::move(bits));
}

bool HintikkaSet::has(const Formula& f) const {
  auto i = universe_->indexOf(f);
  return i != Universe::npos && bits_[i];
}

std::vector<Formula> HintikkaSet::members() const {
  std::vector<Formula> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(universe_->formula(i));
  return out;
}

std::string HintikkaSet::toString() const {
  std::string out = "{";
  bool first = true;
  for (const auto& f : members()) {
    if (!first) out += ", ";
    first = false;
    out += f.toString();
  }
  return out + "}";
}

namespace {

// Value a boolean node must take given its children; nullopt for free nodes.
std::optional<bool> derived(const Universe& u, std::size_t i, const std::vector<bool>& bits) {
  const auto& k = u.kids(i);
  switch (u.formula(i).op()) {
    case Op::Neg: return !bits[k[0]];
    case Op::And: return bits[k[0]] && bits[k[1]];
    case Op::Or: return bits[k[0]] || bits[k[1]];
    case Op::Impl: return !bits[k[0]] || bits[k[1]];
    default: return std::nullopt;
  }
}

bool reflexiveClosed(const Universe& u, const std::vector<bool>& bits, std::string* why) {
  for (auto d : u.diamonds())
    if (bits[u.kids(d)[0]] && !bits[d]) {
      if (why) *why = "contains " + u.formula(u.kids(d)[0]).toString() + " but not " + u.formula(d).toString();
      return false;
    }
  for (auto b : u.boxes())
    if (bits[b] && !bits[u.kids(b)[0]]) {
      if (why) *why = "contains " + u.formula(b).toString() + " but not its body";
      return false;
    }
  return true;
}

}  // namespace

Verdict checkHintikka(const Universe& u, const std::vector<bool>& bits) {
  if (bits.size() != u.size()) return Verdict::fail("membership vector has the wrong length");
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto want = derived(u, i, bits);
    if (want && *want != bits[i]) return Verdict::fail("boolean condition fails at " + u.formula(i).toString());
  }
  std::string why;
  if (!reflexiveClosed(u, bits, &why)) return Verdict::fail(why);
  return Verdict::pass();
}

std::vector<HintikkaSet> enumerateHintikkaSets(const UniversePtr& u) {
  const auto& freeIdx = u->freeFormulas();
  if (freeIdx.size() > 24) throw std::length_error("too many independent formulas to enumerate Hintikka sets");
  std::vector<HintikkaSet> out;
  std::vector<bool> bits(u->size(), false);
  const std::uint64_t limit = std::uint64_t{1} << freeIdx.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    for (std::size_t j = 0; j < freeIdx.size(); ++j) bits[freeIdx[j]] = (mask >> j) & 1U;
    // indices are in subformula order, so one pass settles every boolean node
    for (std::size_t i = 0; i < u->size(); ++i)
      if (auto d = derived(*u, i, bits)) bits[i] = *d;
    if (reflexiveClosed(*u, bits, nullptr)) out.emplace_back(u, bits);
  }
  return out;
}

}  // namespace topohl
