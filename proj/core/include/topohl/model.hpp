#ifndef TOPOHL_MODEL_HPP_
#define TOPOHL_MODEL_HPP_

#include <map>
#include <string>

#include "topohl/formula.hpp"
#include "topohl/topo.hpp"
#include "topohl/verdict.hpp"

namespace topohl {

// A finite topological model. Propositions not listed have empty extension.
struct TopoModel {
  FiniteSpace space;
  std::map<std::string, PointSet> props;
  std::map<std::string, Point> noms;

  std::size_t size() const noexcept { return space.size(); }
  PointSet valuation(const std::string& prop) const;
  // Union of all nominal-named points.
  PointSet namedPoints() const;
};

class EvalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Verdict validateModel(const TopoModel& m);

// Points where f holds. Throws EvalError on a nominal the model does not
// name.
PointSet extension(const TopoModel& m, const Formula& f);
bool checkTruth(const TopoModel& m, Point w, const Formula& f);

// Set of points on which m satisfies f everywhere / somewhere.
inline bool validIn(const TopoModel& m, const Formula& f) { return extension(m, f) == m.space.points(); }
inline bool satisfiedIn(const TopoModel& m, const Formula& f) { return extension(m, f) != 0; }

}  // namespace topohl

#endif  // TOPOHL_MODEL_HPP_
