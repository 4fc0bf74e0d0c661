#include "doctest.h"
#include "gen.hpp"
#include "kripke.hpp"
#include "topohl/formula.hpp"

using namespace topohl;
using testsupport::FormulaShape;
using testsupport::Rng;

namespace {

Formula p() { return Formula::prop("p"); }
Formula i() { return Formula::nom("i"); }
Formula j() { return Formula::nom("j"); }

FormulaSet setOf(std::initializer_list<Formula> fs) { return FormulaSet(fs); }

}  // namespace

TEST_CASE("parse builds the expected trees") {
  CHECK(parse("<>'i -> 'i") == Formula::impl(Formula::dia(i()), i()));
  CHECK(parse("p") == p());
  auto t0 = Formula::impl(Formula::at("i", Formula::neg(j())),
                          Formula::disj(Formula::at("i", Formula::box(Formula::neg(j()))),
                                        Formula::at("j", Formula::box(Formula::neg(i())))));
  CHECK(parse("@'i ~'j -> (@'i [] ~'j | @'j [] ~'i)") == t0);
}

TEST_CASE("precedence and associativity") {
  auto q = Formula::prop("q");
  auto r = Formula::prop("r");
  CHECK(parse("p -> q -> r") == Formula::impl(p(), Formula::impl(q, r)));
  CHECK(parse("p & q | r") == Formula::disj(Formula::conj(p(), q), r));
  CHECK(parse("p | q & r") == Formula::disj(p(), Formula::conj(q, r)));
  CHECK(parse("~p & q") == Formula::conj(Formula::neg(p()), q));
  CHECK(parse("[]<>p") == Formula::box(Formula::dia(p())));
  CHECK(parse("E p & A q") == Formula::conj(Formula::exists(p()), Formula::forall(q)));
  CHECK(parse("p & q & r") == Formula::conj(Formula::conj(p(), q), r));
}

TEST_CASE("parse errors report positions") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("(p & q"), ParseError);
  CHECK_THROWS_AS(parse("p & q)"), ParseError);
  CHECK_THROWS_AS(parse("p $ q"), ParseError);
  CHECK_THROWS_AS(parse("p &"), ParseError);
  CHECK_THROWS_AS(parse("@p q"), ParseError);
  try {
    parse("p $ q");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("print then parse is the identity on random trees") {
  Rng rng(11);
  FormulaShape shape;
  shape.noms = {"i", "j"};
  shape.maxE = 2;
  shape.at = true;
  for (int k = 0; k < 500; ++k) {
    shape.connectives = static_cast<std::size_t>(k % 12);
    Formula f = testsupport::randomFormula(rng, shape);
    CAPTURE(f.toString());
    CHECK(parse(f.toString()) == f);
  }
}

TEST_CASE("subformula closure") {
  CHECK(subformulaClosure(parse("[]p")) == setOf({parse("[]p"), p()}));
  CHECK(subformulaClosure(parse("<>(~'i & <>'i)")) ==
        setOf({parse("<>(~'i & <>'i)"), parse("~'i & <>'i"), parse("~'i"), i(), parse("<>'i")}));
  CHECK(subformulaClosure(p()) == setOf({p()}));
  CHECK(subformulaClosure(parse("@'i p")).contains(i()));
}

TEST_CASE("subformula closure is idempotent and monotone") {
  Rng rng(5);
  FormulaShape shape;
  shape.noms = {"i"};
  shape.maxE = 1;
  for (int k = 0; k < 200; ++k) {
    Formula f = testsupport::randomFormula(rng, shape);
    auto cl = subformulaClosure(f);
    std::vector<Formula> members(cl.begin(), cl.end());
    CHECK(subformulaClosure(members) == cl);
    for (const auto& g : cl) {
      auto sub = subformulaClosure(g);
      CHECK(std::includes(cl.begin(), cl.end(), sub.begin(), sub.end()));
    }
  }
}

TEST_CASE("negation closure") {
  CHECK(negationClosure(setOf({p()})) == setOf({p(), Formula::neg(p())}));
  CHECK(negationClosure(setOf({Formula::neg(p()), p()})) == setOf({Formula::neg(p()), p()}));
  auto boxed = setOf({parse("[]p"), p()});
  auto closed = negationClosure(boxed);
  CHECK(closed == setOf({parse("[]p"), parse("~[]p"), p(), parse("~p")}));
  CHECK(closed.size() <= 2 * boxed.size());
}

TEST_CASE("at elimination") {
  CHECK(eliminateAt(parse("@'i p")) == parse("E('i & p)"));
  CHECK(eliminateAt(p()) == p());
  CHECK(eliminateAt(parse("@'i @'j p")) == parse("E('i & E('j & p))"));
}

TEST_CASE("diamond normal form") {
  CHECK(normalizeToDiamond(parse("[]p")) == parse("~<>~p"));
  CHECK(normalizeToDiamond(parse("<>p")) == parse("<>p"));
  CHECK(normalizeToDiamond(parse("A p")) == parse("~E~p"));
  auto n = normalizeToDiamond(parse("(p | q) -> [] A q"));
  for (const auto& g : subformulaClosure(n)) {
    CHECK(g.op() != Op::Box);
    CHECK(g.op() != Op::A);
    CHECK(g.op() != Op::Or);
    CHECK(g.op() != Op::Impl);
  }
}

TEST_CASE("normal forms keep truth on small models") {
  Rng rng(23);
  FormulaShape shape;
  shape.noms = {"i", "j"};
  shape.maxE = 2;
  shape.at = true;
  for (int k = 0; k < 300; ++k) {
    shape.connectives = 1 + static_cast<std::size_t>(k % 7);
    Formula f = testsupport::randomFormula(rng, shape);
    Formula g = eliminateAt(normalizeToDiamond(f));
    auto m = testsupport::randomModel(rng, 1 + k % 3, {"p", "q"}, {"i", "j"});
    auto km = testsupport::fromOpens(m);
    for (std::size_t w = 0; w < m.size(); ++w) {
      CAPTURE(f.toString());
      CHECK(testsupport::holds(km, w, f) == testsupport::holds(km, w, g));
    }
  }
}

TEST_CASE("vocabulary and counts") {
  Formula f = parse("@'i (p & <>q) -> E 'j");
  CHECK(propositionsOf(f) == std::set<std::string>{"p", "q"});
  CHECK(nominalsOf(f) == std::set<std::string>{"i", "j"});
  CHECK(connectiveCount(f) == 5);
  CHECK(parse("<>'i -> 'i").depth() == 2);
}
