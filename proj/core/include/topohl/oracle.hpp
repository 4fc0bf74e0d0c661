#ifndef TOPOHL_ORACLE_HPP_
#define TOPOHL_ORACLE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "topohl/finrep.hpp"

namespace topohl {

// Exhaustive search for small quasi-models, independent of the game. Labels
// are Hintikka sets over ClNeg(phi) itself, without any normalisation.

// Every preorder on n points (n <= 6); with upToIso only one per
// isomorphism class.
std::vector<Preorder> enumeratePreorders(std::size_t n, bool upToIso = true);

struct OracleOptions {
  std::size_t maxPoints = 3;
  // Preorders up to isomorphism and labels non-decreasing inside each
  // cluster. Every quasi-model is still found up to isomorphism.
  bool prune = true;
};

// Calls visit on each quasi-model with 1..maxPoints points until visit
// returns false. Returns the number of quasi-models visited.
std::size_t enumerateQuasiModels(const Formula& phi, RepClass cls, const OracleOptions& opts,
                                 const std::function<bool(const QuasiModel&)>& visit);

struct OracleVerdict {
  std::optional<QuasiModel> witness;  // empty means none at the bound
  std::size_t bound = 0;

  bool sat() const noexcept { return witness.has_value(); }
};

OracleVerdict bruteForceSat(const Formula& phi, RepClass cls, std::size_t maxPoints, bool prune = true);

}  // namespace topohl

#endif  // TOPOHL_ORACLE_HPP_
