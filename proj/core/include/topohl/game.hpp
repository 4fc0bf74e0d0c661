#ifndef TOPOHL_GAME_HPP_
#define TOPOHL_GAME_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "topohl/finrep.hpp"
#include "topohl/topo.hpp"

namespace topohl {

// Satisfiability game between Abelard (challenges) and Eloise (Hintikka
// sets). Positions are content-based: the relation between board sets is
// always the canonical one.
//
//   x R y  iff  for every <>chi in the universe, <>chi not in x implies
//               <>chi not in y and chi not in y.
//
// With the reflexivity closure of Hintikka sets this is the inclusion of
// the diamond parts, y's inside x's.

class GameError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Class names accepted on the command line: t0, t1, t2 (same logic as t1),
// all (nominal-free formulas only; decided by the T0 game).
RepClass resolveClass(std::string_view name, const Formula& phi);

// @-elimination, box/A/or/implication elimination, and for every nominal i
// the tautology ~(<>i & ~<>i) conjoined on the right. The extra conjuncts
// bring <>i into the universe so that canonical arcs into a named set are
// exactly the topological ones.
Formula prepareTarget(const Formula& phi);

bool canonicallyRelated(const HintikkaSet& x, const HintikkaSet& y);
// Throws GameError when the sets do not share a universe.
Preorder canonicalRelation(const std::vector<HintikkaSet>& board);

// Rules of the opening move: (root), (init-nom), (init-diamond),
// (init-univ) and (init-cycles) for T0 or (no-incoming) for T1. Cycles are
// only forbidden between distinct named sets; the canonical relation is
// reflexive and may have clusters elsewhere.
Verdict legalInitMove(const Formula& target, RepClass cls, const std::vector<HintikkaSet>& sets);

enum class GameStatus { Ongoing, EloiseWon, AbelardWon };

struct PendingChallenge {
  std::size_t diamond;  // universe index of <>psi
  std::size_t source;   // board index
};

struct GameState {
  Formula target = Formula::prop("p");  // prepared
  UniversePtr universe;
  RepClass cls = RepClass::T0;
  std::vector<HintikkaSet> board;
  std::size_t initialCount = 0;
  std::optional<std::size_t> lastIndex;
  // challenge (universe index of a diamond) -> board index of the first
  // response
  std::map<std::size_t, std::size_t> history;
  std::optional<PendingChallenge> pending;  // set while Eloise is to move
  GameStatus status = GameStatus::Ongoing;
  std::string reason;

  bool eloiseToMove() const noexcept { return pending.has_value(); }
  bool over() const noexcept { return status != GameStatus::Ongoing; }
};

// The opening position after Eloise's first move. An illegal opening is an
// immediate loss for her.
GameState startGame(const Formula& target, RepClass cls, std::vector<HintikkaSet> initial);

struct AbelardMove {
  std::size_t source;  // board index
  Formula diamond;
};

struct EloiseMove {
  HintikkaSet response;
};

struct MoveResult {
  GameState state;
  std::vector<std::string> rules;  // rules the move satisfied
  std::string violation;           // empty unless a rule was broken
};

// Throws GameError on an out-of-turn or malformed move. A repeated
// challenge is answered by the recorded response and ends the game.
MoveResult applyMove(const GameState& g, const AbelardMove& move);
MoveResult applyMove(const GameState& g, const EloiseMove& move);

// Winning strategy of Eloise: the opening board plus, for every position
// reachable under the strategy, her reply to each challenge. Positions with
// equal (set, history) are shared.
struct Strategy {
  struct Reply {
    std::size_t diamond = 0;   // universe index
    std::size_t response = 0;  // index into sets
    enum class Kind { Continue, Named, Repeat } kind = Kind::Continue;
    std::optional<std::size_t> child;  // node index for Continue
  };
  struct Node {
    std::size_t set = 0;  // index into sets
    std::vector<Reply> replies;
  };

  Formula target = Formula::prop("p");
  UniversePtr universe;
  RepClass cls = RepClass::T0;
  std::vector<HintikkaSet> sets;      // every set the strategy plays
  std::vector<std::size_t> opening;   // indices into sets; opening[0] holds the target
  std::vector<std::size_t> roots;     // node per opening set
  std::vector<Node> nodes;
};

struct SolveStats {
  std::size_t hintikkaSets = 0;
  std::size_t contexts = 0;
  std::size_t positions = 0;
};

struct SolveResult {
  bool sat = false;
  Formula target = Formula::prop("p");
  std::optional<QuasiModel> witness;
  std::optional<Strategy> strategy;
  SolveStats stats;
};

SolveResult solve(const Formula& phi, RepClass cls);

// Points are the distinct sets of the strategy, related canonically, with
// the up-set topology. Re-validates every reply and the resulting
// quasi-model; throws GameError if either fails.
QuasiModel extractQuasiModel(const Strategy& s);

// Opening read off a quasi-model: a point with the target, the named points,
// and a witness for every true E-formula.
std::vector<HintikkaSet> policyOpening(const QuasiModel& q);

// Eloise's reply read off q: the label of an R-maximal successor containing
// psi of the point whose label is the challenged set; the recorded response
// on a repeated challenge. Throws GameError if q has no matching point.
HintikkaSet eloisePolicy(const QuasiModel& q, const GameState& g);

// Plays every Abelard line against eloisePolicy(q) from policyOpening(q).
Verdict verifyEloisePolicy(const QuasiModel& q, RepClass cls);

}  // namespace topohl

#endif  // TOPOHL_GAME_HPP_
