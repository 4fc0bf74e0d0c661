#ifndef TOPOHL_FINREP_HPP_
#define TOPOHL_FINREP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "topohl/hintikka.hpp"
#include "topohl/model.hpp"

namespace topohl {

// Which separation class a finite representation stands for.
enum class RepClass { T0, T1 };

const char* className(RepClass c) noexcept;

struct Filtration {
  TopoModel model;
  std::vector<Point> projection;  // point -> class
};

// Quotient of m by agreement on sigma, with the quotient topology. Every
// proposition of m holds on the classes containing one of its points.
// Throws std::invalid_argument if sigma is not subformula-closed.
Filtration filtrate(const TopoModel& m, const FormulaSet& sigma);

// T1: the complement of every nominal-named point is open.
// T0: nominal-named points are pairwise separated by an open on one side.
Verdict checkFiniteRep(const TopoModel& m, RepClass cls);

// Finite space labelled by Hintikka sets over ClNeg(target).
struct QuasiModel {
  FiniteSpace space;
  std::vector<HintikkaSet> labels;
  Formula target = Formula::prop("p");
  UniversePtr universe;

  std::size_t size() const noexcept { return space.size(); }
};

// Hintikka labels, target present somewhere, every nominal of the universe
// in exactly one label, the neighborhood condition for <> and [], @ through
// the named point, the class condition, and (withE) the global condition for
// E and A in both directions.
Verdict checkQuasiModel(const QuasiModel& q, RepClass cls, bool withE = true);

// Labels are the truth sets restricted to ClNeg(phi). Throws
// std::invalid_argument if phi holds nowhere in m.
QuasiModel quasiFromModel(const TopoModel& m, const Formula& phi);

// Valuation read off the labels. Throws std::invalid_argument if a nominal
// is not carried by exactly one label.
TopoModel modelFromQuasi(const QuasiModel& q);

}  // namespace topohl

#endif  // TOPOHL_FINREP_HPP_
