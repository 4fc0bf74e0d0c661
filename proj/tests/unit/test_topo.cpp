#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "kripke.hpp"
#include "topohl/topo.hpp"

using namespace topohl;

namespace {

// Point 0 is open, point 1 only sees the whole space.
FiniteSpace sierpinski() { return FiniteSpace::fromOpens(2, {0b00, 0b01, 0b11}); }

std::vector<PointSet> sortedOpens(const std::vector<PointSet>& v) {
  std::vector<PointSet> out(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("fromOpens rejects families that are not topologies") {
  CHECK_THROWS_AS(FiniteSpace::fromOpens(2, {0b01, 0b11}), SpaceError);
  CHECK_THROWS_AS(FiniteSpace::fromOpens(2, {0b00, 0b01}), SpaceError);
  CHECK_THROWS_AS(FiniteSpace::fromOpens(3, {0b000, 0b011, 0b110, 0b111}), SpaceError);
}

TEST_CASE("generateTopology") {
  CHECK(generateTopology(2, {0b01}).opens() == std::vector<PointSet>{0b00, 0b01, 0b11});
  CHECK(generateTopology(2, {}).opens() == std::vector<PointSet>{0b00, 0b11});
  CHECK(generateTopology(3, {0b011, 0b110}).opens() ==
        std::vector<PointSet>{0b000, 0b010, 0b011, 0b110, 0b111});
  CHECK_THROWS(generateTopology(2, {0b100}));
}

TEST_CASE("minimal neighborhoods") {
  CHECK(sierpinski().minimalNeighborhood(1) == 0b11);
  CHECK(sierpinski().minimalNeighborhood(0) == 0b01);
  auto d = FiniteSpace::discrete(4);
  for (Point x = 0; x < 4; ++x) CHECK(d.minimalNeighborhood(x) == singleton(x));
  auto ind = FiniteSpace::indiscrete(3);
  for (Point x = 0; x < 3; ++x) CHECK(ind.minimalNeighborhood(x) == 0b111);
  CHECK_THROWS(sierpinski().minimalNeighborhood(5));
}

TEST_CASE("preorder view") {
  CHECK(toPreorder(sierpinski()).succ == std::vector<PointSet>{0b01, 0b11});
  CHECK(toPreorder(FiniteSpace::discrete(3)).succ == std::vector<PointSet>{0b001, 0b010, 0b100});
  CHECK(toPreorder(FiniteSpace::indiscrete(2)).succ == std::vector<PointSet>{0b11, 0b11});

  CHECK(fromPreorder(Preorder{{0b01, 0b10}}) == FiniteSpace::discrete(2));
  CHECK(fromPreorder(Preorder{{0b01, 0b11}}) == sierpinski());
  CHECK(fromPreorder(Preorder{{0b11, 0b11}}) == FiniteSpace::indiscrete(2));
  CHECK_THROWS_AS(fromPreorder(Preorder{{0b10, 0b11}}), SpaceError);
  CHECK_THROWS_AS(fromPreorder(Preorder{{0b011, 0b110, 0b100}}), SpaceError);
}

TEST_CASE("every topology on at most four points survives the preorder round trip") {
  std::size_t counts[] = {1, 1, 4, 29, 355};
  for (std::size_t n = 1; n <= 4; ++n) {
    auto all = testsupport::allTopologies(n);
    CHECK(all.size() == counts[n]);
    for (const auto& opens : all) {
      auto s = FiniteSpace::fromOpens(n, opens);
      auto p = toPreorder(s);
      CHECK(p.isReflexive());
      CHECK(p.isTransitive());
      CHECK(fromPreorder(p).opens() == sortedOpens(opens));
      for (Point w = 0; w < n; ++w) CHECK(p.succ[w] == s.minimalNeighborhood(w));

      bool discrete = s == FiniteSpace::discrete(n);
      CHECK(checkSeparation(s, Separation::T1) == discrete);
      CHECK(checkSeparation(s, Separation::T2) == discrete);
    }
  }
}

TEST_CASE("separation axioms") {
  CHECK(checkSeparation(sierpinski(), Separation::T0));
  CHECK_FALSE(checkSeparation(sierpinski(), Separation::T1));
  CHECK(checkSeparation(FiniteSpace::discrete(3), Separation::T2));
  CHECK_FALSE(checkSeparation(FiniteSpace::indiscrete(2), Separation::T0));
}

TEST_CASE("interior and closure") {
  auto s = sierpinski();
  CHECK(s.interior(0b10) == 0);
  CHECK(s.interior(0b01) == 0b01);
  CHECK(s.upClosure(0b10) == 0b11);
  CHECK(s.isOpen(0b01));
  CHECK_FALSE(s.isOpen(0b10));
}

TEST_CASE("quotient topology") {
  auto one = quotientTopology(FiniteSpace::indiscrete(2), {0, 0});
  CHECK(one.size() == 1);
  CHECK(quotientTopology(sierpinski(), {0, 1}) == sierpinski());
  CHECK(quotientTopology(FiniteSpace::discrete(2), {0, 0}).size() == 1);
  CHECK_THROWS(quotientTopology(FiniteSpace::discrete(3), {0, 2, 2}));

  // Opens of the quotient are exactly the sets with open preimage.
  testsupport::Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    auto s = testsupport::randomSpace(rng, 5);
    std::vector<std::size_t> proj{0, 1, 0, 2, 1};
    auto q = quotientTopology(s, proj);
    for (PointSet u = 0; u < 8; ++u) {
      PointSet pre = 0;
      for (Point w = 0; w < 5; ++w)
        if (member(u, proj[w])) pre |= singleton(w);
      CHECK(q.isOpen(u) == s.isOpen(pre));
    }
  }
}

TEST_CASE("point ids") {
  auto s = sierpinski();
  s.setPointIds({1, 2});
  CHECK(s.indexOf(2) == 1);
  CHECK(formatSet(0b11, s.pointIds()) == "{1,2}");
  CHECK_THROWS(s.indexOf(7));
}
