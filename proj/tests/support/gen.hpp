#ifndef TOPOHL_TESTS_GEN_HPP_
#define TOPOHL_TESTS_GEN_HPP_

#include <random>
#include <string>
#include <vector>

#include "topohl/formula.hpp"
#include "topohl/model.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

struct FormulaShape {
  std::size_t connectives = 6;
  std::vector<std::string> props{"p", "q"};
  std::vector<std::string> noms{};
  bool boxes = true;
  std::size_t maxE = 0;   // E/A occurrences
  bool at = false;
};

// Exactly `connectives` connectives.
topohl::Formula randomFormula(Rng& rng, const FormulaShape& shape);

// Random preorder: random arcs closed reflexively and transitively.
topohl::FiniteSpace randomSpace(Rng& rng, std::size_t n, double density = 0.3);

topohl::TopoModel randomModel(Rng& rng, std::size_t n, const std::vector<std::string>& props,
                              const std::vector<std::string>& noms, double density = 0.3);

// Points 0..roots-1 are named i, j, k, ... and have no incoming arcs; every
// other point lies above one of them. Satisfies the T1 representation
// condition and the peel-off precondition.
topohl::TopoModel randomT1Rep(Rng& rng, std::size_t n, std::size_t roots, const std::vector<std::string>& props,
                              double density = 0.3);

// Random subformula-closed set drawn from the subformulas of f.
topohl::FormulaSet randomClosedSubset(Rng& rng, const topohl::Formula& f);

}  // namespace testsupport

#endif
