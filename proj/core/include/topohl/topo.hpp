#ifndef TOPOHL_TOPO_HPP_
#define TOPOHL_TOPO_HPP_

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace topohl {

// Points of a finite space are the indices 0..n-1; subsets are bit sets.
using PointSet = std::uint64_t;
using Point = std::size_t;
inline constexpr std::size_t kMaxPoints = 64;

constexpr PointSet singleton(Point p) noexcept { return PointSet{1} << p; }
constexpr PointSet fullSet(std::size_t n) noexcept { return n >= 64 ? ~PointSet{0} : (PointSet{1} << n) - 1; }
constexpr bool member(PointSet s, Point p) noexcept { return (s >> p) & 1U; }
constexpr bool subsetOf(PointSet a, PointSet b) noexcept { return (a & ~b) == 0; }
inline std::size_t cardinality(PointSet s) noexcept { return static_cast<std::size_t>(std::popcount(s)); }

template <class Fn>
void forEachPoint(PointSet s, Fn&& fn) {
  while (s) {
    Point p = static_cast<Point>(std::countr_zero(s));
    fn(p);
    s &= s - 1;
  }
}

std::vector<Point> toPoints(PointSet s);

class SpaceError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class Separation { T0, T1, T2 };

// Reflexive, transitive relation; succ[w] holds every v with w R v.
struct Preorder {
  std::vector<PointSet> succ;

  std::size_t size() const noexcept { return succ.size(); }
  bool related(Point u, Point v) const { return member(succ.at(u), v); }
  bool isReflexive() const;
  bool isTransitive() const;
  friend bool operator==(const Preorder&, const Preorder&) = default;
};

// A finite topological space. Every finite space is Alexandroff, so the
// topology is held as the minimal neighborhood of each point; the opens are
// exactly the unions of minimal neighborhoods.
class FiniteSpace {
public:
  FiniteSpace() = default;

  // Validates that the family contains the empty and full sets and is closed
  // under pairwise union and intersection.
  static FiniteSpace fromOpens(std::size_t n, const std::vector<PointSet>& opens);
  // Validates that neighborhoods[w] contains w and is downward coherent.
  static FiniteSpace fromNeighborhoods(std::vector<PointSet> neighborhoods);
  static FiniteSpace discrete(std::size_t n);
  static FiniteSpace indiscrete(std::size_t n);

  std::size_t size() const noexcept { return nbhd_.size(); }
  PointSet points() const noexcept { return fullSet(size()); }

  PointSet minimalNeighborhood(Point w) const;
  const std::vector<PointSet>& neighborhoods() const noexcept { return nbhd_; }

  bool isOpen(PointSet u) const;
  // Smallest open superset.
  PointSet upClosure(PointSet u) const;
  // Largest open subset.
  PointSet interior(PointSet u) const;
  // Every open set, sorted ascending. Exponential in general; meant for
  // small spaces.
  std::vector<PointSet> opens() const;

  // External point names used by I/O; defaults to 0..n-1.
  const std::vector<long long>& pointIds() const noexcept { return ids_; }
  void setPointIds(std::vector<long long> ids);
  Point indexOf(long long id) const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) { return a.nbhd_ == b.nbhd_; }

private:
  explicit FiniteSpace(std::vector<PointSet> nbhd);
  std::vector<PointSet> nbhd_;
  std::vector<long long> ids_;
};

// Smallest topology on n points containing the subbase.
FiniteSpace generateTopology(std::size_t n, const std::vector<PointSet>& subbase);

// w R v iff v lies in the minimal neighborhood of w.
Preorder toPreorder(const FiniteSpace& s);
// Opens are the R-upward closed sets.
FiniteSpace fromPreorder(const Preorder& p);

bool checkSeparation(const FiniteSpace& s, Separation axiom);

// U is open in the quotient iff its preimage under proj is open. proj maps
// each point to a class index; classes must be 0..k-1 with no gaps.
FiniteSpace quotientTopology(const FiniteSpace& s, const std::vector<std::size_t>& proj);

std::string formatSet(PointSet s, const std::vector<long long>& ids);

}  // namespace topohl

#endif  // TOPOHL_TOPO_HPP_
