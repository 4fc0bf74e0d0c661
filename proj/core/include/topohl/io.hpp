#ifndef TOPOHL_IO_HPP_
#define TOPOHL_IO_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "topohl/bisim.hpp"
#include "topohl/construct.hpp"
#include "topohl/finrep.hpp"
#include "topohl/model.hpp"

namespace topohl {

class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Space documents: {"points": [ids], "opens": [[ids], ...]}, with
// "preorder": [[u, v], ...] (reflexive and transitive) or "subbase" in place
// of "opens". Points are integer ids.
FiniteSpace spaceFromJson(const std::string& text);
std::string spaceToJson(const FiniteSpace& s);

// Space document plus "valuation": {"p": [ids]} and "nominals": {"i": id}.
TopoModel modelFromJson(const std::string& text);
std::string modelToJson(const TopoModel& m);

// {"pairs": [[x, y], ...]} over the point ids of left and right.
PointRelation relationFromJson(const std::string& text, const FiniteSpace& left, const FiniteSpace& right);
std::string relationToJson(const PointRelation& r, const FiniteSpace& left, const FiniteSpace& right);

// Space document plus "target": formula and "labels": {"id": [formulas]}.
// Labels list every member; the universe is ClNeg(target).
QuasiModel quasiModelFromJson(const std::string& text);
std::string quasiModelToJson(const QuasiModel& q);

std::string symbolicToJson(const SymbolicModel& s);
// values may be empty; otherwise one "p/q" per node.
std::string treeToJson(const LabeledTree& t, const TopoModel& m, const std::vector<Rational>& values);

// Preorder view without arcs implied by transitivity.
std::string modelToDot(const TopoModel& m);
// Points show their atoms and diamond formulas.
std::string quasiModelToDot(const QuasiModel& q);
std::string treeToDot(const LabeledTree& t, const TopoModel& m, const std::vector<Rational>& values);

}  // namespace topohl

#endif  // TOPOHL_IO_HPP_
