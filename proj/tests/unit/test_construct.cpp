#include "doctest.h"
#include "gen.hpp"
#include "kripke.hpp"
#include "topohl/bisim.hpp"
#include "topohl/construct.hpp"
#include "topohl/game.hpp"

using namespace topohl;
using testsupport::Rng;

namespace {

TopoModel withSpace(FiniteSpace s) {
  TopoModel m;
  m.space = std::move(s);
  return m;
}

TopoModel fromSucc(std::vector<PointSet> succ) { return withSpace(fromPreorder(Preorder{std::move(succ)})); }

std::size_t countKind(const SymbolicModel& s, ClassDescriptor::Kind k) {
  return static_cast<std::size_t>(
      std::count_if(s.classes.begin(), s.classes.end(), [&](const auto& c) { return c.kind == k; }));
}

using Kind = ClassDescriptor::Kind;

}  // namespace

TEST_CASE("Kolmogorov quotient examples") {
  auto pair = withSpace(FiniteSpace::indiscrete(2));
  pair.props["p"] = 0b11;
  CHECK(kolmogorovQuotient(pair).model.size() == 1);

  auto sier = fromSucc({0b01, 0b11});
  auto same = kolmogorovQuotient(sier);
  CHECK(same.model.size() == 2);
  CHECK(same.projection[0] != same.projection[1]);

  // two indiscrete pairs side by side, p on the first
  auto twin = fromSucc({0b0011, 0b0011, 0b1100, 0b1100});
  twin.props["p"] = 0b0011;
  auto k = kolmogorovQuotient(twin);
  CHECK(k.model.space == FiniteSpace::discrete(2));

  auto named = pair;
  named.noms["i"] = 0;
  CHECK_THROWS_AS(kolmogorovQuotient(named), ConstructError);
  auto split = pair;
  split.props["p"] = 0b01;
  CHECK_THROWS_AS(kolmogorovQuotient(split), ConstructError);
}

TEST_CASE("Kolmogorov quotient of every small space") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& opens : testsupport::allTopologies(n)) {
      auto m = withSpace(FiniteSpace::fromOpens(n, opens));
      auto k = kolmogorovQuotient(m);
      CHECK(checkSeparation(k.model.space, Separation::T0));
      CHECK(verifyTopobisimulation(m, k.model, PointRelation::graph(k.projection, k.model.size()), true, false).ok);
    }
}

TEST_CASE("symbolic T1 witnesses") {
  // 'i & <>~'i: the named point sees an open plain point
  auto rep = fromSucc({0b11, 0b10});
  rep.noms["i"] = 0;
  auto s = symbolicWitnessT1(rep);
  CHECK(countKind(s, Kind::Singleton) == 1);
  CHECK(countKind(s, Kind::Progression) == 1);
  CHECK(s.prefix == 1);
  CHECK(verifySymbolic(s).ok);
  CHECK(s.classOf(1) == 0);
  CHECK(s.classOf(5) == 1);
  CHECK(s.satisfiesAtom("i", true, 1));
  CHECK_FALSE(s.satisfiesAtom("i", true, 2));

  auto discrete = withSpace(FiniteSpace::discrete(2));
  discrete.noms["i"] = 0;
  discrete.noms["j"] = 1;
  auto fin = symbolicWitnessT1(discrete);
  CHECK(fin.finite());
  CHECK(countKind(fin, Kind::Progression) == 0);
  CHECK(verifySymbolic(fin).ok);

  auto sier = fromSucc({0b01, 0b11});
  auto plain = symbolicWitnessT1(sier);
  CHECK(countKind(plain, Kind::Progression) == 2);
  for (const auto& c : plain.classes) CHECK(c.stride == 2);
  CHECK(verifySymbolic(plain).ok);

  auto bad = sier;
  bad.noms["i"] = 0;
  CHECK_THROWS_AS(symbolicWitnessT1(bad), ConstructError);
}

TEST_CASE("a singleton class on an open point breaks openness") {
  auto plain = symbolicWitnessT1(fromSucc({0b01, 0b11}));
  plain.classes[0] = ClassDescriptor{Kind::Singleton, 1, 0};
  plain.classes[1] = ClassDescriptor{Kind::Progression, 2, 1};
  plain.prefix = 1;
  auto v = verifySymbolic(plain);
  CHECK_FALSE(v.ok);
  CHECK(v.reason.rfind("(b)", 0) == 0);
}

TEST_CASE("symbolic T0 witnesses") {
  // the named point * lies below a plain two-point cluster that sees it
  auto rep = fromSucc({0b001, 0b111, 0b111});
  rep.noms["i"] = 0;
  CHECK(extension(rep, parse("<>(~'i & <>'i)")) != 0);
  auto s = symbolicWitnessT0(rep);
  CHECK(s.topology == TopologyKind::T0Family);
  CHECK(verifySymbolic(s).ok);

  auto small = fromSucc({0b11, 0b10});
  small.noms["i"] = 0;
  auto t = symbolicWitnessT0(small);
  CHECK(countKind(t, Kind::Singleton) == 1);
  REQUIRE(countKind(t, Kind::Progression) == 1);
  CHECK(t.classes[1].stride == 1);
  CHECK(verifySymbolic(t).ok);

  auto all = withSpace(FiniteSpace::discrete(2));
  all.noms["i"] = 0;
  all.noms["j"] = 1;
  auto lifted = symbolicWitnessT0(all);
  CHECK(lifted.finite());
  CHECK(verifySymbolic(lifted).ok);

  auto twins = withSpace(FiniteSpace::indiscrete(2));
  twins.noms["i"] = 0;
  twins.noms["j"] = 1;
  CHECK_THROWS_AS(symbolicWitnessT0(twins), ConstructError);
}

TEST_CASE("symbolic witnesses of solver output") {
  for (const char* text : {"<>(~'i & <>'i)", "'i & <>~'i", "<>'i & ~'i", "'i & <>('j & <>p)", "E('i & ~p) & <>p"}) {
    CAPTURE(text);
    Formula f = parse(text);
    for (RepClass cls : {RepClass::T0, RepClass::T1}) {
      auto r = solve(f, cls);
      if (!r.sat) continue;
      auto rep = modelFromQuasi(*r.witness);
      auto s = cls == RepClass::T1 ? symbolicWitnessT1(rep) : symbolicWitnessT0(rep);
      CHECK(verifySymbolic(s).ok);
      // the class of some carrier element is a point satisfying f
      auto ext = extension(rep, f);
      bool found = false;
      for (long long x = 1; x <= 40 && !found; ++x) found = member(ext, s.classOf(x));
      CHECK(found);
    }
  }
}

TEST_CASE("peel-off") {
  // two named roots sharing a plain successor
  auto rep = fromSucc({0b101, 0b110, 0b100});
  rep.noms["i"] = 0;
  rep.noms["j"] = 1;
  rep.props["p"] = 0b100;
  auto out = peelOff(rep);
  CHECK(out.model.size() == 4);
  CHECK(std::count(out.origin.begin(), out.origin.end(), 2) == 2);
  CHECK(out.model.noms.size() == 2);
  auto lb = largestHybridBisimulation(rep, out.model);
  CHECK(lb.total);
  CHECK(lb.hybrid);

  auto single = fromSucc({0b11, 0b10});
  single.noms["i"] = 0;
  auto same = peelOff(single);
  CHECK(same.model.space == single.space);

  auto stray = fromSucc({0b01, 0b10});
  stray.noms["i"] = 0;
  CHECK_THROWS_AS(peelOff(stray), ConstructError);
}

TEST_CASE("cluster fattening") {
  auto one = withSpace(FiniteSpace::discrete(1));
  one.props["p"] = 1;
  auto fat = fattenClusters(one);
  CHECK(fat.model.space == FiniteSpace::indiscrete(2));
  CHECK(fat.model.valuation("p") == 0b11);

  auto proper = withSpace(FiniteSpace::indiscrete(2));
  CHECK(fattenClusters(proper).model.space == proper.space);

  auto rooted = fromSucc({0b11, 0b10});
  rooted.noms["i"] = 0;
  auto out = fattenClusters(rooted);
  CHECK(out.model.size() == 3);
  CHECK(out.model.noms.at("i") == 0);
  CHECK(out.model.space.minimalNeighborhood(0) == 0b111);
}

TEST_CASE("peel-off and fattening keep truth") {
  Rng rng(71);
  testsupport::FormulaShape shape;
  shape.noms = {"i", "j"};
  shape.maxE = 1;
  shape.at = true;
  for (int k = 0; k < 40; ++k) {
    auto rep = testsupport::randomT1Rep(rng, 2 + k % 5, 1 + k % 2, {"p", "q"});
    if (rep.noms.size() < 2) rep.noms["j"] = rep.noms.at("i");
    auto peeled = peelOff(rep);
    auto fat = fattenClusters(peeled.model);
    for (const TopoModel* out : {&peeled.model, &fat.model}) {
      auto lb = largestHybridBisimulation(rep, *out);
      CHECK(lb.total);
      CHECK(lb.hybrid);
    }
    for (int t = 0; t < 10; ++t) {
      shape.connectives = 1 + t % 5;
      Formula f = testsupport::randomFormula(rng, shape);
      if (f.depth() > 3) continue;
      auto base = extension(rep, f);
      auto a = extension(peeled.model, f);
      auto b = extension(fat.model, f);
      for (Point w = 0; w < peeled.model.size(); ++w) CHECK(member(a, w) == member(base, peeled.origin[w]));
      for (Point w = 0; w < fat.model.size(); ++w)
        CHECK(member(b, w) == member(base, peeled.origin[fat.origin[w]]));
    }
  }
}

TEST_CASE("unravelling") {
  auto m = fromSucc({0b11, 0b10});
  m.noms["i"] = 0;
  auto t = unravelToFullTree(m, 0, 2, 2);
  CHECK(t.size() == 7);
  CHECK(t.labels == std::vector<Point>{0, 1, 1, 1, 1, 1, 1});
  CHECK(checkLocalPMorphism(t, m, 0).ok);
  CHECK(unravelToFullTree(m, 0, 2, 0).size() == 1);

  auto fork = fromSucc({0b111, 0b010, 0b100});
  auto f = unravelToFullTree(fork, 0, 2, 1);
  CHECK(std::set<Point>{f.labels[1], f.labels[2]} == std::set<Point>{1, 2});
  CHECK(checkLocalPMorphism(f, fork, 0).ok);
  CHECK_THROWS_AS(unravelToFullTree(fromSucc({0b1111, 0b0010, 0b0100, 0b1000}), 0, 2, 1), ConstructError);

  auto broken = t;
  broken.labels[3] = 0;
  CHECK_FALSE(checkLocalPMorphism(broken, m, 0).ok);
}

TEST_CASE("rational embedding") {
  auto m = fromSucc({0b11, 0b10});
  auto t = unravelToFullTree(m, 0, 2, 2);
  auto f = rationalEmbed(t);
  CHECK(f[0] == Rational(0));
  CHECK(f[1] == Rational(-1));
  CHECK(f[2] == Rational(1));
  CHECK(f[3] == Rational(-4, 3));
  CHECK(f[4] == Rational(-2, 3));
  CHECK(formatRational(f[3]) == "-4/3");
  CHECK(verifyEmbedding(t, f).ok);

  for (std::size_t n : {2, 3})
    for (std::size_t d = 0; d <= 6; ++d) {
      LabeledTree full;
      full.branching = n;
      full.depth = d;
      std::size_t size = 1, width = 1;
      for (std::size_t k = 0; k < d; ++k) size += (width *= n);
      full.labels.assign(size, 0);
      CHECK(verifyEmbedding(full, rationalEmbed(full)).ok);
    }

  auto clash = f;
  clash[6] = clash[5];
  CHECK_FALSE(verifyEmbedding(t, clash).ok);
}
