#ifndef TOPOHL_HINTIKKA_HPP_
#define TOPOHL_HINTIKKA_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "topohl/formula.hpp"
#include "topohl/verdict.hpp"

namespace topohl {

// An indexed, subformula- and single-negation-closed formula set. Indices
// follow formula order, so subformulas always precede their parents.
class Universe {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // sigma must be closed under subformulas and single negations.
  explicit Universe(const FormulaSet& sigma);
  static std::shared_ptr<const Universe> of(const Formula& target);

  std::size_t size() const noexcept { return formulas_.size(); }
  const Formula& formula(std::size_t i) const { return formulas_.at(i); }
  const std::vector<Formula>& formulas() const noexcept { return formulas_; }
  std::size_t indexOf(const Formula& f) const;  // npos when absent
  bool contains(const Formula& f) const { return indexOf(f) != npos; }

  // Indices of the immediate subformulas (for At: the body).
  const std::vector<std::size_t>& kids(std::size_t i) const { return kids_.at(i); }
  // For At: index of the nominal; npos otherwise.
  std::size_t atNominal(std::size_t i) const { return atNominal_.at(i); }
  const std::vector<std::size_t>& diamonds() const noexcept { return dia_; }
  const std::vector<std::size_t>& boxes() const noexcept { return box_; }
  const std::vector<std::size_t>& globals() const noexcept { return global_; }  // E, A, At
  const std::vector<std::size_t>& nominals() const noexcept { return nom_; }
  // Formulas whose membership is not fixed by the boolean structure.
  const std::vector<std::size_t>& freeFormulas() const noexcept { return free_; }

  friend bool operator==(const Universe& a, const Universe& b) { return a.formulas_ == b.formulas_; }

private:
  std::vector<Formula> formulas_;
  std::vector<std::vector<std::size_t>> kids_;
  std::vector<std::size_t> atNominal_;
  std::vector<std::size_t> dia_, box_, global_, nom_, free_;
};

using UniversePtr = std::shared_ptr<const Universe>;

// Membership vector over a universe.
class HintikkaSet {
public:
  HintikkaSet() = default;
  HintikkaSet(UniversePtr u, std::vector<bool> members) : universe_(std::move(u)), bits_(std::move(members)) {}
  // Members given as formulas; throws std::invalid_argument on a formula
  // outside the universe.
  static HintikkaSet fromFormulas(UniversePtr u, const std::vector<Formula>& members);

  const UniversePtr& universe() const noexcept { return universe_; }
  const std::vector<bool>& bits() const noexcept { return bits_; }
  bool has(std::size_t i) const { return bits_.at(i); }
  bool has(const Formula& f) const;
  std::vector<Formula> members() const;
  std::string toString() const;

  friend bool operator==(const HintikkaSet& a, const HintikkaSet& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const HintikkaSet& a, const HintikkaSet& b) { return a.bits_ < b.bits_; }

private:
  UniversePtr universe_;
  std::vector<bool> bits_;
};

// Single negations, conjunction (and the derived connectives), and the
// reflexivity closures: psi in A => <>psi in A, []psi in A => psi in A.
Verdict checkHintikka(const Universe& u, const std::vector<bool>& bits);

// Every Hintikka set over u, in a fixed order.
std::vector<HintikkaSet> enumerateHintikkaSets(const UniversePtr& u);

}  // namespace topohl

#endif  // TOPOHL_HINTIKKA_HPP_
