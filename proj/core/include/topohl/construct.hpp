#ifndef TOPOHL_CONSTRUCT_HPP_
#define TOPOHL_CONSTRUCT_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "topohl/finrep.hpp"

namespace topohl {

class ConstructError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Identifies topologically indistinguishable points. Only for nominal-free
// models whose valuation is constant on each cluster.
Filtration kolmogorovQuotient(const TopoModel& m);

// A model together with the source point each of its points copies.
struct Projected {
  TopoModel model;
  std::vector<Point> origin;
};

// Disjoint union of the submodels generated by the named points, each copy
// keeping only the nominals of its root. Requires the T1 representation
// condition and every point lying above some named point.
Projected peelOff(const TopoModel& rep);

// Every non-named one-point cluster becomes a two-point cluster with the
// same valuation and arcs. Named points are kept as they are.
Projected fattenClusters(const TopoModel& m);

// Infinite model over the carrier {1, 2, ...}, described by finitely many
// classes. Class k is mapped to point k of the representation. Elements
// 1..prefix are the singleton classes; the rest are progressions.
struct ClassDescriptor {
  enum class Kind { Singleton, Progression };
  Kind kind = Kind::Singleton;
  long long offset = 1;  // the element itself for a singleton
  long long stride = 0;

  bool contains(long long x) const noexcept;
  std::string toString() const;
};

enum class TopologyKind {
  // basic opens f^-1(O) minus any finite set
  T1Generated,
  // f^-1(O) minus a finite set of non-prefix elements
  T0Family
};

// f^-1(base) minus removed.
struct BasicOpen {
  PointSet base = 0;
  std::vector<long long> removed;
};

struct SymbolicModel {
  TopoModel baseRep;
  std::vector<ClassDescriptor> classes;  // one per point of baseRep
  TopologyKind topology = TopologyKind::T1Generated;
  long long prefix = 0;  // number of singleton classes, all at the front

  bool finite() const noexcept;
  bool inCarrier(long long x) const noexcept;
  Point classOf(long long x) const;  // the collapse map f; throws outside the carrier
  bool removable(long long x) const noexcept;
  bool contains(const BasicOpen& o, long long x) const;
  // f of the basic open: base minus the classes lying wholly inside removed.
  PointSet image(const BasicOpen& o) const;
  // Valuation pulled back along f.
  bool satisfiesAtom(const std::string& name, bool nominal, long long x) const;
};

SymbolicModel symbolicWitnessT1(const TopoModel& rep);
SymbolicModel symbolicWitnessT0(const TopoModel& rep);

// (a) continuity, (b) openness, (c) separation, (d) Prop/total/hybrid for
// the graph of f. The reason names the first failed obligation.
Verdict verifySymbolic(const SymbolicModel& s);

// Depth-truncated full n-ary tree in heap order: the children of node i are
// n*i+1 .. n*i+n.
struct LabeledTree {
  std::size_t branching = 2;
  std::size_t depth = 0;
  std::vector<Point> labels;

  std::size_t size() const noexcept { return labels.size(); }
  std::size_t child(std::size_t node, std::size_t m) const noexcept { return branching * node + 1 + m; }
  std::size_t level(std::size_t node) const noexcept;
  bool internal(std::size_t node) const noexcept { return level(node) < depth; }
};

// Children of a node labelled x carry the successors of x (without the root
// itself at the root), the first successor repeated to fill n slots. Throws
// if some point has more than n successors, the root has incoming arcs, some
// point is not above the root, or the root has no successor and d > 0.
LabeledTree unravelToFullTree(const TopoModel& m, Point root, std::size_t n, std::size_t d);

// At every internal node the children's labels are exactly the successors of
// its label, and only the tree root carries the model root.
Verdict checkLocalPMorphism(const LabeledTree& t, const TopoModel& m, Point root);

using Rational = boost::rational<long long>;

// f(root) = 0; for w at level k with children v_1..v_n,
// f(v_1) = f(w) - 1/(n+1)^k and f(v_m) = f(w) + (m-1)/(n+1)^k.
std::vector<Rational> rationalEmbed(const LabeledTree& t);

// Injective, and at every internal node the value ranges of the child
// subtrees are pairwise disjoint and avoid the node's own value.
Verdict verifyEmbedding(const LabeledTree& t, const std::vector<Rational>& f);

std::string formatRational(const Rational& r);

}  // namespace topohl

#endif  // TOPOHL_CONSTRUCT_HPP_
