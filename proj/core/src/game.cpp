#include "topohl/game.hpp"

#include <algorithm>
#include <cctype>

namespace topohl {

RepClass resolveClass(std::string_view name, const Formula& phi) {
  std::string n(name);
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
  if (n == "t0") return RepClass::T0;
  if (n == "t1" || n == "t2") return RepClass::T1;
  if (n == "all") {
    if (!nominalsOf(phi).empty())
      throw std::invalid_argument("class 'all' is only supported for nominal-free formulas");
    return RepClass::T0;
  }
  throw std::invalid_argument("unknown class '" + std::string(name) + "' (expected t0, t1, t2 or all)");
}

Formula prepareTarget(const Formula& phi) {
  Formula f = normalizeToDiamond(eliminateAt(phi));
  for (const auto& i : nominalsOf(phi)) {
    Formula di = Formula::dia(Formula::nom(i));
    f = Formula::conj(f, Formula::neg(Formula::conj(di, Formula::neg(di))));
  }
  return f;
}

bool canonicallyRelated(const HintikkaSet& x, const HintikkaSet& y) {
  const Universe& u = *x.universe();
  for (auto d : u.diamonds())
    if (!x.has(d) && (y.has(d) || y.has(u.kids(d)[0]))) return false;
  return true;
}

namespace {

void requireShared(const UniversePtr& u, const HintikkaSet& s) {
  if (!s.universe() || !(*s.universe() == *u)) throw GameError("Hintikka set over a different universe");
}

// Board index of the set carrying each nominal, for the opening sets.
std::map<std::size_t, std::size_t> namedIndices(const Universe& u, const std::vector<HintikkaSet>& board,
                                                std::size_t initialCount) {
  std::map<std::size_t, std::size_t> out;
  for (auto i : u.nominals())
    for (std::size_t k = 0; k < initialCount; ++k)
      if (board[k].has(i)) out.emplace(i, k);
  return out;
}

bool hasNominal(const Universe& u, const HintikkaSet& s) {
  return std::any_of(u.nominals().begin(), u.nominals().end(), [&](auto i) { return s.has(i); });
}

bool hasDiamond(const Universe& u, const HintikkaSet& s) {
  return std::any_of(u.diamonds().begin(), u.diamonds().end(), [&](auto d) { return s.has(d); });
}

struct ResponseCheck {
  Verdict verdict;
  std::vector<std::string> rules;
  std::optional<std::size_t> named;  // opening index the response is identified with
};

ResponseCheck checkResponse(const GameState& g, std::size_t diamond, std::size_t source, const HintikkaSet& y) {
  const Universe& u = *g.universe;
  ResponseCheck out;
  auto fail = [&](std::string rule, std::string why) {
    out.verdict = Verdict::fail(rule + ": " + why);
    return out;
  };
  if (auto v = checkHintikka(u, y.bits()); !v) return fail("(hintikka)", v.reason);

  const HintikkaSet& x = g.board[source];
  if (!y.has(u.kids(diamond)[0])) return fail("(diamond)", "response lacks " + u.formula(u.kids(diamond)[0]).toString());
  if (!canonicallyRelated(x, y)) return fail("(diamond)", "response is not a successor of the challenged set");
  out.rules.push_back("(diamond)");

  const HintikkaSet& root = g.board.front();
  for (std::size_t e = 0; e < u.size(); ++e) {
    if (u.formula(e).op() != Op::E) continue;
    if (y.has(e) != root.has(e)) return fail("(univ)", "disagrees on " + u.formula(e).toString());
    if (y.has(u.kids(e)[0]) && !root.has(e)) return fail("(univ)", "witnesses a false " + u.formula(e).toString());
  }
  out.rules.push_back("(univ)");

  auto named = namedIndices(u, g.board, g.initialCount);
  if (hasNominal(u, y)) {
    std::optional<std::size_t> k;
    for (auto [nom, idx] : named)
      if (y.has(nom)) k = idx;
    if (!k || !(g.board[*k] == y)) return fail("(nom)", "named response is not one of the opening sets");
    out.named = k;
    out.rules.push_back("(nom)");
  }

  if (g.cls == RepClass::T1) {
    if (out.named) {
      if (*out.named != source) return fail("(no-incoming)", "arc into a named set");
    } else {
      for (auto [nom, idx] : named)
        if (canonicallyRelated(y, g.board[idx])) return fail("(no-incoming)", "arc into a named set");
    }
    out.rules.push_back("(no-incoming)");
  } else {
    // a fresh set carries no nominal, so it closes no cycle between named sets
    out.rules.push_back("(cycles)");
  }
  return out;
}

}  // namespace

Preorder canonicalRelation(const std::vector<HintikkaSet>& board) {
  Preorder p;
  p.succ.assign(board.size(), 0);
  if (board.size() > kMaxPoints) throw GameError("board too large for a 64-point space");
  for (const auto& s : board) requireShared(board.front().universe(), s);
  for (std::size_t x = 0; x < board.size(); ++x)
    for (std::size_t y = 0; y < board.size(); ++y)
      if (canonicallyRelated(board[x], board[y])) p.succ[x] |= singleton(y);
  return p;
}

Verdict legalInitMove(const Formula& target, RepClass cls, const std::vector<HintikkaSet>& sets) {
  if (sets.empty()) return Verdict::fail("(root): no sets played");
  auto u = Universe::of(target);
  for (const auto& s : sets) {
    requireShared(u, s);
    if (auto v = checkHintikka(*u, s.bits()); !v) return Verdict::fail("(hintikka): " + v.reason);
  }
  if (!sets.front().has(target)) return Verdict::fail("(root): first set does not contain the target");
  if (sets.size() > subformulaClosure(target).size()) return Verdict::fail("(root): too many sets");

  for (auto i : u->nominals()) {
    auto n = std::count_if(sets.begin(), sets.end(), [&](const auto& s) { return s.has(i); });
    if (n != 1)
      return Verdict::fail("(init-nom): " + u->formula(i).toString() + " occurs in " + std::to_string(n) + " sets");
  }

  auto rel = canonicalRelation(sets);
  for (std::size_t l = 0; l < sets.size(); ++l)
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (!rel.related(l, j)) continue;
      for (auto d : u->diamonds())
        if (!sets[l].has(d) && (sets[j].has(d) || sets[j].has(u->kids(d)[0])))
          return Verdict::fail("(init-diamond): " + u->formula(d).toString());
    }

  for (std::size_t e = 0; e < u->size(); ++e) {
    if (u->formula(e).op() != Op::E) continue;
    bool witnessed = std::any_of(sets.begin(), sets.end(), [&](const auto& s) { return s.has(u->kids(e)[0]); });
    for (const auto& s : sets)
      if (s.has(e) != witnessed) return Verdict::fail("(init-univ): " + u->formula(e).toString());
  }

  std::vector<std::size_t> named;
  for (std::size_t k = 0; k < sets.size(); ++k)
    if (hasNominal(*u, sets[k])) named.push_back(k);
  if (cls == RepClass::T0) {
    for (auto a : named)
      for (auto b : named)
        if (a != b && rel.related(a, b) && rel.related(b, a))
          return Verdict::fail("(init-cycles): named sets " + std::to_string(a) + " and " + std::to_string(b));
  } else {
    for (auto b : named)
      for (std::size_t l = 0; l < sets.size(); ++l)
        if (l != b && rel.related(l, b))
          return Verdict::fail("(no-incoming): arc from set " + std::to_string(l) + " into named set " +
                               std::to_string(b));
  }
  return Verdict::pass();
}

GameState startGame(const Formula& target, RepClass cls, std::vector<HintikkaSet> initial) {
  GameState g;
  g.target = target;
  g.universe = Universe::of(target);
  g.cls = cls;
  auto v = legalInitMove(target, cls, initial);
  g.board = std::move(initial);
  g.initialCount = g.board.size();
  if (!v) {
    g.status = GameStatus::AbelardWon;
    g.reason = v.reason;
    return g;
  }
  bool anyChallenge = std::any_of(g.board.begin(), g.board.end(), [&](const auto& s) { return hasDiamond(*g.universe, s); });
  if (!anyChallenge) {
    g.status = GameStatus::EloiseWon;
    g.reason = "Abelard has no challenge";
  }
  return g;
}

MoveResult applyMove(const GameState& g, const AbelardMove& move) {
  if (g.over()) throw GameError("the game is over");
  if (g.eloiseToMove()) throw GameError("out of turn: Eloise is to move");
  const Universe& u = *g.universe;
  std::size_t d = u.indexOf(move.diamond);
  if (d == Universe::npos || move.diamond.op() != Op::Dia)
    throw GameError("malformed move: " + move.diamond.toString() + " is not a diamond formula of the universe");
  if (g.lastIndex) {
    if (move.source != *g.lastIndex) throw GameError("malformed move: challenges must come from the last played set");
  } else if (move.source >= g.initialCount) {
    throw GameError("malformed move: the first challenge must target an opening set");
  }
  if (!g.board[move.source].has(d)) throw GameError("malformed move: the set does not contain " + move.diamond.toString());

  MoveResult r{g, {}, {}};
  auto it = g.history.find(d);
  if (it == g.history.end()) {
    r.state.pending = PendingChallenge{d, move.source};
    r.rules.push_back("(challenge)");
    return r;
  }
  // repetition: the recorded response is forced and the game stops
  auto check = checkResponse(g, d, move.source, g.board[it->second]);
  r.rules = check.rules;
  r.rules.push_back("(repetition)");
  r.state.lastIndex = it->second;
  if (check.verdict) {
    r.state.status = GameStatus::EloiseWon;
    r.state.reason = "repeated challenge met by the recorded response";
  } else {
    r.state.status = GameStatus::AbelardWon;
    r.state.reason = "recorded response fails: " + check.verdict.reason;
    r.violation = check.verdict.reason;
  }
  return r;
}

MoveResult applyMove(const GameState& g, const EloiseMove& move) {
  if (g.over()) throw GameError("the game is over");
  if (!g.eloiseToMove()) throw GameError("out of turn: Abelard is to move");
  requireShared(g.universe, move.response);
  const auto [d, source] = *g.pending;
  auto check = checkResponse(g, d, source, move.response);
  MoveResult r{g, check.rules, {}};
  r.state.pending.reset();
  if (!check.verdict) {
    r.violation = check.verdict.reason;
    r.state.status = GameStatus::AbelardWon;
    r.state.reason = "Eloise broke " + check.verdict.reason;
    return r;
  }
  if (check.named) {
    r.state.lastIndex = *check.named;
    r.state.history.emplace(d, *check.named);
    r.state.status = GameStatus::EloiseWon;
    r.state.reason = "answered with a named opening set";
    return r;
  }
  r.state.board.push_back(move.response);
  r.state.lastIndex = r.state.board.size() - 1;
  r.state.history.emplace(d, *r.state.lastIndex);
  if (!hasDiamond(*g.universe, move.response)) {
    r.state.status = GameStatus::EloiseWon;
    r.state.reason = "Abelard has no challenge left";
  }
  return r;
}

std::vector<HintikkaSet> policyOpening(const QuasiModel& q) {
  const Universe& u = *q.universe;
  std::vector<std::size_t> picked;
  auto pick = [&](std::size_t formula) {
    for (Point w = 0; w < q.size(); ++w)
      if (q.labels[w].has(formula)) {
        if (std::find(picked.begin(), picked.end(), w) == picked.end()) picked.push_back(w);
        return;
      }
    throw GameError("quasi-model has no point for " + u.formula(formula).toString());
  };
  pick(u.indexOf(q.target));
  for (auto i : u.nominals()) pick(i);
  for (std::size_t e = 0; e < u.size(); ++e)
    if (u.formula(e).op() == Op::E && q.labels.front().has(e)) pick(u.kids(e)[0]);
  std::vector<HintikkaSet> out;
  for (auto w : picked) out.push_back(q.labels[w]);
  return out;
}

HintikkaSet eloisePolicy(const QuasiModel& q, const GameState& g) {
  if (!g.pending) throw GameError("Eloise is not to move");
  const auto [d, source] = *g.pending;
  if (auto it = g.history.find(d); it != g.history.end()) return g.board[it->second];

  const HintikkaSet& x = g.board[source];
  std::optional<Point> at;
  for (Point w = 0; w < q.size() && !at; ++w)
    if (q.labels[w] == x) at = w;
  if (!at) throw GameError("quasi-model has no point labelled by the challenged set");

  const std::size_t psi = g.universe->kids(d)[0];
  const auto& nb = q.space.neighborhoods();
  PointSet cands = 0;
  forEachPoint(nb[*at], [&](Point s) {
    if (q.labels[s].has(psi)) cands |= singleton(s);
  });
  // maximal: every candidate above s is in the cluster of s
  std::optional<Point> best;
  auto maximal = [&](Point s) {
    bool ok = true;
    forEachPoint(nb[s] & cands, [&](Point t) { ok = ok && member(nb[t], s); });
    return ok;
  };
  if (member(cands, *at) && maximal(*at)) best = *at;
  forEachPoint(cands, [&](Point s) {
    if (!best && maximal(s)) best = s;
  });
  if (!best) throw GameError("quasi-model does not support the position");
  return q.labels[*best];
}

namespace {

Verdict playAllLines(const QuasiModel& q, const GameState& g) {
  std::vector<std::size_t> sources;
  if (g.lastIndex)
    sources.push_back(*g.lastIndex);
  else
    for (std::size_t k = 0; k < g.initialCount; ++k) sources.push_back(k);
  const Universe& u = *g.universe;
  for (auto src : sources)
    for (auto d : u.diamonds()) {
      if (!g.board[src].has(d)) continue;
      auto a = applyMove(g, AbelardMove{src, u.formula(d)});
      if (a.state.status == GameStatus::AbelardWon)
        return Verdict::fail("Abelard wins by repeating " + u.formula(d).toString() + ": " + a.state.reason);
      if (a.state.over()) continue;
      auto e = applyMove(a.state, EloiseMove{eloisePolicy(q, a.state)});
      if (e.state.status == GameStatus::AbelardWon)
        return Verdict::fail("policy reply to " + u.formula(d).toString() + " fails: " + e.state.reason);
      if (e.state.over()) continue;
      if (auto v = playAllLines(q, e.state); !v) return v;
    }
  return Verdict::pass();
}

}  // namespace

Verdict verifyEloisePolicy(const QuasiModel& q, RepClass cls) {
  auto g = startGame(q.target, cls, policyOpening(q));
  if (g.status == GameStatus::AbelardWon) return Verdict::fail("opening rejected: " + g.reason);
  if (g.over()) return Verdict::pass();
  return playAllLines(q, g);
}

}  // namespace topohl
