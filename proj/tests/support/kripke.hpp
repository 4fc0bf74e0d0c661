#ifndef TOPOHL_TESTS_KRIPKE_HPP_
#define TOPOHL_TESTS_KRIPKE_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "topohl/model.hpp"

namespace testsupport {

// Relational model read off the opens of a space: w R v iff every open
// containing w contains v. Kept apart from the library's neighborhood code.
struct KripkeModel {
  std::vector<std::vector<bool>> rel;
  std::map<std::string, std::set<std::size_t>> val;
  std::map<std::string, std::size_t> nom;

  std::size_t size() const { return rel.size(); }
};

KripkeModel fromOpens(const topohl::TopoModel& m);

// Plain recursive evaluation.
bool holds(const KripkeModel& k, std::size_t w, const topohl::Formula& f);

// Every topology on n points by brute force over families of subsets (n <= 4).
std::vector<std::vector<topohl::PointSet>> allTopologies(std::size_t n);

}  // namespace testsupport

#endif
