#include "topohl/topo.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace topohl {

std::vector<Point> toPoints(PointSet s) {
  std::vector<Point> out;
  forEachPoint(s, [&](Point p) { out.push_back(p); });
  return out;
}

bool Preorder::isReflexive() const {
  for (Point w = 0; w < size(); ++w)
    if (!member(succ[w], w)) return false;
  return true;
}

bool Preorder::isTransitive() const {
  for (Point w = 0; w < size(); ++w) {
    bool ok = true;
    forEachPoint(succ[w], [&](Point v) { ok = ok && subsetOf(succ[v], succ[w]); });
    if (!ok) return false;
  }
  return true;
}

FiniteSpace::FiniteSpace(std::vector<PointSet> nbhd) : nbhd_(std::move(nbhd)) {
  ids_.resize(nbhd_.size());
  std::iota(ids_.begin(), ids_.end(), 0LL);
}

FiniteSpace FiniteSpace::fromNeighborhoods(std::vector<PointSet> neighborhoods) {
  const std::size_t n = neighborhoods.size();
  if (n > kMaxPoints) throw SpaceError("at most 64 points are supported");
  for (Point w = 0; w < n; ++w) {
    PointSet nw = neighborhoods[w];
    if (!subsetOf(nw, fullSet(n))) throw SpaceError("neighborhood mentions an unknown point");
    if (!member(nw, w)) throw SpaceError("relation is not reflexive at point " + std::to_string(w));
    forEachPoint(nw, [&](Point v) {
      if (!subsetOf(neighborhoods[v], nw))
        throw SpaceError("relation is not transitive through point " + std::to_string(v));
    });
  }
  return FiniteSpace(std::move(neighborhoods));
}

FiniteSpace FiniteSpace::fromOpens(std::size_t n, const std::vector<PointSet>& opens) {
  if (n > kMaxPoints) throw SpaceError("at most 64 points are supported");
  const PointSet all = fullSet(n);
  std::set<PointSet> family;
  for (PointSet o : opens) {
    if (!subsetOf(o, all)) throw SpaceError("open set mentions an unknown point");
    family.insert(o);
  }
  if (!family.contains(0)) throw SpaceError("opens must contain the empty set");
  if (!family.contains(all)) throw SpaceError("opens must contain the full point set");
  for (PointSet a : family)
    for (PointSet b : family) {
      if (!family.contains(a & b)) throw SpaceError("opens not closed under intersection");
      if (!family.contains(a | b)) throw SpaceError("opens not closed under union");
    }
  std::vector<PointSet> nbhd(n, all);
  for (PointSet o : family)
    forEachPoint(o, [&](Point w) { nbhd[w] &= o; });
  return FiniteSpace(std::move(nbhd));
}

FiniteSpace FiniteSpace::discrete(std::size_t n) {
  std::vector<PointSet> nbhd(n);
  for (Point w = 0; w < n; ++w) nbhd[w] = singleton(w);
  return fromNeighborhoods(std::move(nbhd));
}

FiniteSpace FiniteSpace::indiscrete(std::size_t n) {
  return fromNeighborhoods(std::vector<PointSet>(n, fullSet(n)));
}

PointSet FiniteSpace::minimalNeighborhood(Point w) const {
  if (w >= size()) throw SpaceError("unknown point " + std::to_string(w));
  return nbhd_[w];
}

bool FiniteSpace::isOpen(PointSet u) const {
  if (!subsetOf(u, points())) return false;
  bool ok = true;
  forEachPoint(u, [&](Point w) { ok = ok && subsetOf(nbhd_[w], u); });
  return ok;
}

PointSet FiniteSpace::upClosure(PointSet u) const {
  PointSet out = 0;
  forEachPoint(u & points(), [&](Point w) { out |= nbhd_[w]; });
  return out;
}

PointSet FiniteSpace::interior(PointSet u) const {
  PointSet out = 0;
  for (Point w = 0; w < size(); ++w)
    if (subsetOf(nbhd_[w], u)) out |= singleton(w);
  return out;
}

std::vector<PointSet> FiniteSpace::opens() const {
  // Each up-set is produced once: a point is either forced in (with its
  // neighborhood) or forced out (with everything that sees it).
  const std::size_t n = size();
  std::vector<PointSet> seesPoint(n, 0);
  for (Point w = 0; w < n; ++w)
    forEachPoint(nbhd_[w], [&](Point v) { seesPoint[v] |= singleton(w); });

  std::vector<PointSet> out;
  auto rec = [&](auto&& self, Point i, PointSet in, PointSet out_) -> void {
    while (i < n && (member(in, i) || member(out_, i))) ++i;
    if (i == n) {
      out.push_back(in);
      return;
    }
    if ((nbhd_[i] & out_) == 0) self(self, i + 1, in | nbhd_[i], out_);
    self(self, i + 1, in, out_ | seesPoint[i]);
  };
  rec(rec, 0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

void FiniteSpace::setPointIds(std::vector<long long> ids) {
  if (ids.size() != size()) throw SpaceError("point id list has the wrong length");
  std::set<long long> seen(ids.begin(), ids.end());
  if (seen.size() != ids.size()) throw SpaceError("duplicate point id");
  ids_ = std::move(ids);
}

Point FiniteSpace::indexOf(long long id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) throw SpaceError("unknown point " + std::to_string(id));
  return static_cast<Point>(it - ids_.begin());
}

FiniteSpace generateTopology(std::size_t n, const std::vector<PointSet>& subbase) {
  if (n > kMaxPoints) throw SpaceError("at most 64 points are supported");
  const PointSet all = fullSet(n);
  std::vector<PointSet> nbhd(n, all);
  for (PointSet b : subbase) {
    if (!subsetOf(b, all)) throw SpaceError("subbase member is not a subset of the points");
    forEachPoint(b, [&](Point w) { nbhd[w] &= b; });
  }
  return FiniteSpace::fromNeighborhoods(std::move(nbhd));
}

Preorder toPreorder(const FiniteSpace& s) { return Preorder{s.neighborhoods()}; }

FiniteSpace fromPreorder(const Preorder& p) {
  if (!p.isReflexive()) throw SpaceError("relation is not reflexive");
  if (!p.isTransitive()) throw SpaceError("relation is not transitive");
  return FiniteSpace::fromNeighborhoods(p.succ);
}

bool checkSeparation(const FiniteSpace& s, Separation axiom) {
  const std::size_t n = s.size();
  for (Point x = 0; x < n; ++x) {
    const PointSet nx = s.minimalNeighborhood(x);
    switch (axiom) {
      case Separation::T1:
        // complement of {x} open
        if (!s.isOpen(s.points() & ~singleton(x))) return false;
        break;
      case Separation::T0:
        for (Point y = x + 1; y < n; ++y)
          if (member(nx, y) && member(s.minimalNeighborhood(y), x)) return false;
        break;
      case Separation::T2:
        // minimal neighborhoods are the smallest candidates
        for (Point y = x + 1; y < n; ++y)
          if ((nx & s.minimalNeighborhood(y)) != 0) return false;
        break;
    }
  }
  return true;
}

FiniteSpace quotientTopology(const FiniteSpace& s, const std::vector<std::size_t>& proj) {
  if (proj.size() != s.size()) throw SpaceError("projection must be total");
  std::size_t k = 0;
  for (auto c : proj) k = std::max(k, c + 1);
  std::vector<PointSet> fibre(k, 0);
  for (Point w = 0; w < proj.size(); ++w) fibre[proj[w]] |= singleton(w);
  for (std::size_t c = 0; c < k; ++c)
    if (fibre[c] == 0) throw SpaceError("projection is not surjective onto class " + std::to_string(c));

  auto image = [&](PointSet u) {
    PointSet out = 0;
    forEachPoint(u, [&](Point w) { out |= singleton(proj[w]); });
    return out;
  };
  auto preimage = [&](PointSet classes) {
    PointSet out = 0;
    forEachPoint(classes, [&](Point c) { out |= fibre[c]; });
    return out;
  };

  std::vector<PointSet> nbhd(k);
  for (std::size_t c = 0; c < k; ++c) {
    PointSet u = singleton(c);
    for (;;) {
      PointSet next = image(s.upClosure(preimage(u)));
      if (next == u) break;
      u = next;
    }
    nbhd[c] = u;
  }
  return FiniteSpace::fromNeighborhoods(std::move(nbhd));
}

std::string formatSet(PointSet s, const std::vector<long long>& ids) {
  std::string out = "{";
  bool first = true;
  forEachPoint(s, [&](Point p) {
    if (!first) out += ",";
    first = false;
    out += p < ids.size() ? std::to_string(ids[p]) : std::to_string(p);
  });
  return out + "}";
}

}  // namespace topohl
