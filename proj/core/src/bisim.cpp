#include "topohl/bisim.hpp"

#include <set>

namespace topohl {

PointRelation PointRelation::fromPairs(std::size_t leftSize, std::size_t rightSize,
                                       const std::vector<std::pair<Point, Point>>& pairs) {
  PointRelation r(leftSize, rightSize);
  for (auto [x, y] : pairs) r.add(x, y);
  return r;
}

PointRelation PointRelation::identity(std::size_t n) {
  PointRelation r(n, n);
  for (Point w = 0; w < n; ++w) r.add(w, w);
  return r;
}

PointRelation PointRelation::graph(const std::vector<Point>& map, std::size_t rightSize) {
  PointRelation r(map.size(), rightSize);
  for (Point x = 0; x < map.size(); ++x) r.add(x, map[x]);
  return r;
}

void PointRelation::add(Point x, Point y) {
  if (x >= image_.size() || y >= rightSize_) throw std::out_of_range("pair outside the point sets");
  image_[x] |= singleton(y);
}

PointSet PointRelation::imageOf(PointSet xs) const {
  PointSet out = 0;
  forEachPoint(xs, [&](Point x) { out |= image_.at(x); });
  return out;
}

PointSet PointRelation::preimageOf(PointSet ys) const {
  PointSet out = 0;
  for (Point x = 0; x < image_.size(); ++x)
    if (image_[x] & ys) out |= singleton(x);
  return out;
}

std::vector<std::pair<Point, Point>> PointRelation::pairs() const {
  std::vector<std::pair<Point, Point>> out;
  for (Point x = 0; x < image_.size(); ++x) forEachPoint(image_[x], [&](Point y) { out.emplace_back(x, y); });
  return out;
}

std::size_t PointRelation::pairCount() const {
  std::size_t n = 0;
  for (auto s : image_) n += cardinality(s);
  return n;
}

bool PointRelation::isLeftTotal() const {
  for (auto s : image_)
    if (s == 0) return false;
  return true;
}

bool PointRelation::isRightTotal() const { return imageOf(fullSet(image_.size())) == fullSet(rightSize_); }

namespace {

// Atom-agreement table: agree[x] = right points with the same propositions
// and nominals as x.
std::vector<PointSet> atomAgreement(const TopoModel& a, const TopoModel& b) {
  std::set<std::string> props, noms;
  for (const auto& [p, _] : a.props) props.insert(p);
  for (const auto& [p, _] : b.props) props.insert(p);
  for (const auto& [i, _] : a.noms) noms.insert(i);
  for (const auto& [i, _] : b.noms) noms.insert(i);

  std::vector<PointSet> agree(a.size(), fullSet(b.size()));
  auto restrict = [&](PointSet left, PointSet right) {
    for (Point x = 0; x < a.size(); ++x) agree[x] &= member(left, x) ? right : ~right & fullSet(b.size());
  };
  for (const auto& p : props) restrict(a.valuation(p), b.valuation(p));
  for (const auto& i : noms) {
    auto ia = a.noms.find(i), ib = b.noms.find(i);
    restrict(ia == a.noms.end() ? 0 : singleton(ia->second), ib == b.noms.end() ? 0 : singleton(ib->second));
  }
  return agree;
}

}  // namespace

Verdict verifyTopobisimulation(const TopoModel& left, const TopoModel& right, const PointRelation& r,
                               bool requireTotal, bool requireHybrid) {
  if (r.leftSize() != left.size() || r.rightSize() != right.size())
    return Verdict::fail("relation does not match the models' point sets");
  auto agree = atomAgreement(left, right);
  for (Point x = 0; x < left.size(); ++x)
    if (!subsetOf(r.image(x), agree[x]))
      return Verdict::fail("Prop: point " + std::to_string(x) + " related to a point with different atoms");
  for (Point x = 0; x < left.size(); ++x)
    if (!right.space.isOpen(r.imageOf(left.space.minimalNeighborhood(x))))
      return Verdict::fail("Zig: image of the neighborhood of left point " + std::to_string(x) + " is not open");
  for (Point y = 0; y < right.size(); ++y)
    if (!left.space.isOpen(r.preimageOf(right.space.minimalNeighborhood(y))))
      return Verdict::fail("Zag: preimage of the neighborhood of right point " + std::to_string(y) +
                           " is not open");
  if (requireTotal) {
    if (!r.isLeftTotal()) return Verdict::fail("total: some left point is unrelated");
    if (!r.isRightTotal()) return Verdict::fail("total: some right point is unrelated");
  }
  if (requireHybrid) {
    for (const auto& [i, x] : left.noms) {
      auto it = right.noms.find(i);
      if (it != right.noms.end() && !r.contains(x, it->second))
        return Verdict::fail("hybrid: points named " + i + " are not related");
    }
  }
  return Verdict::pass();
}

Verdict verifyInteriorMap(const std::vector<Point>& f, const FiniteSpace& from, const FiniteSpace& to) {
  if (f.size() != from.size()) throw std::invalid_argument("map must be total on the source points");
  for (Point v : f)
    if (v >= to.size()) throw std::invalid_argument("map leaves the target space");
  auto r = PointRelation::graph(f, to.size());
  for (Point x = 0; x < from.size(); ++x)
    if (!to.isOpen(r.imageOf(from.minimalNeighborhood(x))))
      return Verdict::fail("not open: image of the neighborhood of point " + std::to_string(x));
  for (Point y = 0; y < to.size(); ++y)
    if (!from.isOpen(r.preimageOf(to.minimalNeighborhood(y))))
      return Verdict::fail("not continuous: preimage of the neighborhood of point " + std::to_string(y));
  return Verdict::pass();
}

LargestBisimulation largestHybridBisimulation(const TopoModel& a, const TopoModel& b) {
  auto z = atomAgreement(a, b);
  const auto& na = a.space.neighborhoods();
  const auto& nb = b.space.neighborhoods();
  for (bool changed = true; changed;) {
    changed = false;
    for (Point x = 0; x < a.size(); ++x) {
      PointSet keep = z[x];
      forEachPoint(z[x], [&](Point y) {
        bool ok = true;
        // forth: every x' above x matched above y
        forEachPoint(na[x], [&](Point x2) { ok = ok && (z[x2] & nb[y]) != 0; });
        // back: every y' above y matched above x
        forEachPoint(nb[y], [&](Point y2) {
          if (!ok) return;
          bool found = false;
          forEachPoint(na[x], [&](Point x2) { found = found || member(z[x2], y2); });
          ok = found;
        });
        if (!ok) keep &= ~singleton(y);
      });
      if (keep != z[x]) {
        z[x] = keep;
        changed = true;
      }
    }
  }
  LargestBisimulation out;
  out.relation = PointRelation(a.size(), b.size());
  for (Point x = 0; x < a.size(); ++x) forEachPoint(z[x], [&](Point y) { out.relation.add(x, y); });
  out.total = out.relation.isLeftTotal() && out.relation.isRightTotal();
  out.hybrid = verifyTopobisimulation(a, b, out.relation, false, true).ok;
  return out;
}

}  // namespace topohl
