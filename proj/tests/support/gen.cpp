#include "gen.hpp"

#include <algorithm>

namespace testsupport {

using namespace topohl;

namespace {

Formula build(Rng& rng, const FormulaShape& shape, std::size_t budget, std::size_t& eLeft) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  if (budget == 0) {
    std::size_t atoms = shape.props.size() + shape.noms.size();
    std::size_t k = pick(atoms);
    return k < shape.props.size() ? Formula::prop(shape.props[k]) : Formula::nom(shape.noms[k - shape.props.size()]);
  }
  std::vector<int> ops{0, 1, 2, 3, 4};  // neg and or impl dia
  if (shape.boxes) ops.push_back(5);
  if (eLeft > 0) ops.push_back(6);
  if (shape.at && !shape.noms.empty()) ops.push_back(7);
  int op = ops[pick(ops.size())];
  auto unary = [&] { return build(rng, shape, budget - 1, eLeft); };
  auto binary = [&](auto make) {
    std::size_t left = pick(budget);
    Formula a = build(rng, shape, left, eLeft);
    Formula b = build(rng, shape, budget - 1 - left, eLeft);
    return make(a, b);
  };
  switch (op) {
    case 0: return Formula::neg(unary());
    case 1: return binary([](auto a, auto b) { return Formula::conj(a, b); });
    case 2: return binary([](auto a, auto b) { return Formula::disj(a, b); });
    case 3: return binary([](auto a, auto b) { return Formula::impl(a, b); });
    case 4: return Formula::dia(unary());
    case 5: return Formula::box(unary());
    case 6:
      --eLeft;
      return pick(2) ? Formula::exists(unary()) : Formula::forall(unary());
    default: return Formula::at(shape.noms[pick(shape.noms.size())], unary());
  }
}

}  // namespace

Formula randomFormula(Rng& rng, const FormulaShape& shape) {
  std::size_t eLeft = shape.maxE;
  return build(rng, shape, shape.connectives, eLeft);
}

namespace {

FiniteSpace closeUp(std::vector<PointSet> succ) {
  const std::size_t n = succ.size();
  for (std::size_t w = 0; w < n; ++w) succ[w] |= singleton(w);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t w = 0; w < n; ++w) {
      PointSet next = succ[w];
      forEachPoint(succ[w], [&](Point v) { next |= succ[v]; });
      if (next != succ[w]) {
        succ[w] = next;
        changed = true;
      }
    }
  }
  return FiniteSpace::fromNeighborhoods(succ);
}

}  // namespace

FiniteSpace randomSpace(Rng& rng, std::size_t n, double density) {
  std::bernoulli_distribution arc(density);
  std::vector<PointSet> succ(n, 0);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t v = 0; v < n; ++v)
      if (v != w && arc(rng)) succ[w] |= singleton(v);
  return closeUp(std::move(succ));
}

TopoModel randomT1Rep(Rng& rng, std::size_t n, std::size_t roots, const std::vector<std::string>& props,
                      double density) {
  roots = std::clamp<std::size_t>(roots, 1, n);
  std::bernoulli_distribution arc(density);
  std::uniform_int_distribution<std::size_t> root(0, roots - 1);
  std::vector<PointSet> succ(n, 0);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t v = roots; v < n; ++v)
      if (v != w && arc(rng)) succ[w] |= singleton(v);
  for (std::size_t v = roots; v < n; ++v) succ[root(rng)] |= singleton(v);
  TopoModel m;
  m.space = closeUp(std::move(succ));
  std::uniform_int_distribution<PointSet> subset(0, fullSet(n));
  for (const auto& p : props) m.props[p] = subset(rng);
  for (std::size_t r = 0; r < roots; ++r) m.noms[std::string(1, static_cast<char>('i' + r))] = r;
  return m;
}

TopoModel randomModel(Rng& rng, std::size_t n, const std::vector<std::string>& props,
                      const std::vector<std::string>& noms, double density) {
  TopoModel m;
  m.space = randomSpace(rng, n, density);
  std::uniform_int_distribution<PointSet> subset(0, fullSet(n));
  std::uniform_int_distribution<std::size_t> point(0, n - 1);
  for (const auto& p : props) m.props[p] = subset(rng);
  for (const auto& i : noms) m.noms[i] = point(rng);
  return m;
}

FormulaSet randomClosedSubset(Rng& rng, const Formula& f) {
  FormulaSet out;
  std::bernoulli_distribution keep(0.5);
  auto all = subformulaClosure(f);
  for (const auto& g : all)
    if (g == f || keep(rng)) {
      auto sub = subformulaClosure(g);
      out.insert(sub.begin(), sub.end());
    }
  return out;
}

}  // namespace testsupport
