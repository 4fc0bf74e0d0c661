#include "doctest.h"
#include "gen.hpp"
#include "topohl/finrep.hpp"
#include "topohl/hintikka.hpp"

using namespace topohl;
using testsupport::Rng;

namespace {

// Local conditions written out directly over formulas.
bool locallyConsistent(const Universe& u, const std::vector<bool>& bits) {
  auto in = [&](const Formula& f) { return bits[u.indexOf(f)]; };
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Formula& f = u.formula(i);
    bool here = bits[i];
    switch (f.op()) {
      case Op::Neg:
        if (here == in(f.child())) return false;
        break;
      case Op::And:
        if (here != (in(f.child(0)) && in(f.child(1)))) return false;
        break;
      case Op::Or:
        if (here != (in(f.child(0)) || in(f.child(1)))) return false;
        break;
      case Op::Impl:
        if (here != (!in(f.child(0)) || in(f.child(1)))) return false;
        break;
      case Op::Dia:
        if (in(f.child()) && !here) return false;
        break;
      case Op::Box:
        if (here && !in(f.child())) return false;
        break;
      default:
        break;
    }
  }
  return true;
}

std::size_t bruteCount(const Universe& u) {
  std::size_t n = u.size(), count = 0;
  std::vector<bool> bits(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) bits[i] = (mask >> i) & 1U;
    if (locallyConsistent(u, bits)) {
      ++count;
      CHECK(checkHintikka(u, bits).ok);
    } else {
      CHECK_FALSE(checkHintikka(u, bits).ok);
    }
  }
  return count;
}

}  // namespace

TEST_CASE("universe layout") {
  auto u = Universe::of(parse("<>(~'i & <>'i)"));
  CHECK(u->size() == 8);
  CHECK(u->diamonds().size() == 2);
  CHECK(u->nominals().size() == 1);
  for (std::size_t i = 0; i < u->size(); ++i)
    for (auto k : u->kids(i)) CHECK(k < i);
  CHECK(u->indexOf(parse("q")) == Universe::npos);
  CHECK_THROWS(Universe(FormulaSet{parse("~p")}));
}

TEST_CASE("small Hintikka counts") {
  CHECK(enumerateHintikkaSets(Universe::of(parse("p"))).size() == 2);
  CHECK(enumerateHintikkaSets(Universe::of(parse("<>p"))).size() == 3);
  CHECK(enumerateHintikkaSets(Universe::of(parse("[]p"))).size() == 3);
  CHECK(enumerateHintikkaSets(Universe::of(parse("p & ~p"))).size() == 2);
  for (const auto& h : enumerateHintikkaSets(Universe::of(parse("p & ~p"))))
    CHECK_FALSE(h.has(parse("p & ~p")));
}

TEST_CASE("enumeration agrees with brute force over sign vectors") {
  Rng rng(13);
  testsupport::FormulaShape shape;
  shape.noms = {"i"};
  shape.maxE = 1;
  shape.at = true;
  for (int k = 0; k < 60; ++k) {
    shape.connectives = 1 + k % 5;
    Formula f = testsupport::randomFormula(rng, shape);
    auto u = Universe::of(f);
    if (u->size() > 16) continue;
    auto sets = enumerateHintikkaSets(u);
    CAPTURE(f.toString());
    CHECK(sets.size() == bruteCount(*u));
    std::set<HintikkaSet> distinct(sets.begin(), sets.end());
    CHECK(distinct.size() == sets.size());
  }
}

TEST_CASE("truth sets of model points are Hintikka sets") {
  Rng rng(19);
  testsupport::FormulaShape shape;
  shape.noms = {"i"};
  shape.maxE = 1;
  for (int k = 0; k < 100; ++k) {
    auto m = testsupport::randomModel(rng, 1 + k % 4, {"p", "q"}, {"i"});
    shape.connectives = 1 + k % 6;
    Formula f = testsupport::randomFormula(rng, shape);
    Formula any = Formula::disj(f, Formula::neg(f));
    auto q = quasiFromModel(m, any);
    for (const auto& label : q.labels) CHECK(checkHintikka(*q.universe, label.bits()).ok);
  }
}

TEST_CASE("membership helpers") {
  auto u = Universe::of(parse("<>p"));
  auto h = HintikkaSet::fromFormulas(u, {parse("p"), parse("<>p")});
  CHECK(h.has(parse("p")));
  CHECK_FALSE(h.has(parse("~p")));
  CHECK(h.members().size() == 2);
  CHECK_THROWS_AS(HintikkaSet::fromFormulas(u, {parse("q")}), std::invalid_argument);
  CHECK_FALSE(checkHintikka(*u, HintikkaSet::fromFormulas(u, {parse("p"), parse("~<>p")}).bits()).ok);
}
