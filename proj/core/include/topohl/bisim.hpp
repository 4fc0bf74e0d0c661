#ifndef TOPOHL_BISIM_HPP_
#define TOPOHL_BISIM_HPP_

#include <utility>
#include <vector>

#include "topohl/model.hpp"

namespace topohl {

// Relation between the points of two models, stored as the image of every
// left point.
class PointRelation {
public:
  PointRelation() = default;
  PointRelation(std::size_t leftSize, std::size_t rightSize)
      : image_(leftSize, 0), rightSize_(rightSize) {}

  static PointRelation fromPairs(std::size_t leftSize, std::size_t rightSize,
                                 const std::vector<std::pair<Point, Point>>& pairs);
  static PointRelation identity(std::size_t n);
  // Graph of a total map left -> right.
  static PointRelation graph(const std::vector<Point>& map, std::size_t rightSize);

  std::size_t leftSize() const noexcept { return image_.size(); }
  std::size_t rightSize() const noexcept { return rightSize_; }

  void add(Point x, Point y);
  bool contains(Point x, Point y) const { return member(image_.at(x), y); }
  PointSet image(Point x) const { return image_.at(x); }
  // R(X) and R^-1(Y)
  PointSet imageOf(PointSet xs) const;
  PointSet preimageOf(PointSet ys) const;

  std::vector<std::pair<Point, Point>> pairs() const;
  std::size_t pairCount() const;
  bool isLeftTotal() const;
  bool isRightTotal() const;

  friend bool operator==(const PointRelation&, const PointRelation&) = default;

private:
  std::vector<PointSet> image_;
  std::size_t rightSize_ = 0;
};

// Prop (nominals are compared like propositions), Zig, Zag and optionally
// totality and the hybrid condition.
Verdict verifyTopobisimulation(const TopoModel& left, const TopoModel& right, const PointRelation& r,
                               bool requireTotal, bool requireHybrid);

// Open and continuous. Throws std::invalid_argument if f is not total.
Verdict verifyInteriorMap(const std::vector<Point>& f, const FiniteSpace& from, const FiniteSpace& to);

struct LargestBisimulation {
  PointRelation relation;
  bool total = false;
  bool hybrid = false;
};

// Greatest fixpoint of pair removal starting from atom agreement.
LargestBisimulation largestHybridBisimulation(const TopoModel& a, const TopoModel& b);

}  // namespace topohl

#endif  // TOPOHL_BISIM_HPP_
