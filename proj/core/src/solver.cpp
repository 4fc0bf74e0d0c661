#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <unordered_map>

#include <boost/functional/hash.hpp>

#include "topohl/game.hpp"

namespace topohl {

namespace {

using Bits = std::uint64_t;
using History = std::vector<std::pair<std::uint32_t, std::uint32_t>>;  // diamond position -> set, sorted
using Key = std::vector<std::uint32_t>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept { return boost::hash_range(k.begin(), k.end()); }
};

constexpr Bits bit(std::size_t i) noexcept { return Bits{1} << i; }

struct SetInfo {
  Bits dia = 0;    // diamonds held, by position in diamonds()
  Bits wit = 0;    // diamonds whose body is held
  Bits noms = 0;   // by position in nominals()
  Bits e = 0;      // E-formulas held, by position in eIdx
  Bits eBody = 0;  // E-formulas whose body is held
  bool target = false;
};

Key makeKey(std::uint32_t x, std::uint32_t d, const History& h) {
  Key k{x, d};
  for (auto [a, b] : h) {
    k.push_back(a);
    k.push_back(b);
  }
  return k;
}

const std::uint32_t* recorded(const History& h, std::uint32_t d) {
  for (const auto& p : h)
    if (p.first == d) return &p.second;
  return nullptr;
}

History extend(const History& h, std::uint32_t d, std::uint32_t y) {
  History out = h;
  out.insert(std::upper_bound(out.begin(), out.end(), std::make_pair(d, y)), {d, y});
  return out;
}

class Solver {
public:
  Solver(Formula target, RepClass cls) : target_(std::move(target)), u_(Universe::of(target_)), cls_(cls) {
    const Universe& u = *u_;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u.formula(i).op() == Op::E) eIdx_.push_back(i);
    if (u.diamonds().size() > 64 || u.nominals().size() > 64 || eIdx_.size() > 64)
      throw GameError("formula too large for the game solver");
    sets_ = enumerateHintikkaSets(u_);
    const std::size_t t = u.indexOf(target_);
    for (const auto& s : sets_) {
      SetInfo in;
      for (std::size_t k = 0; k < u.diamonds().size(); ++k) {
        if (s.has(u.diamonds()[k])) in.dia |= bit(k);
        if (s.has(u.kids(u.diamonds()[k])[0])) in.wit |= bit(k);
      }
      for (std::size_t k = 0; k < u.nominals().size(); ++k)
        if (s.has(u.nominals()[k])) in.noms |= bit(k);
      for (std::size_t k = 0; k < eIdx_.size(); ++k) {
        if (s.has(eIdx_[k])) in.e |= bit(k);
        if (s.has(u.kids(eIdx_[k])[0])) in.eBody |= bit(k);
      }
      in.target = s.has(t);
      info_.push_back(in);
    }
  }

  SolveResult run() {
    SolveResult out;
    out.target = target_;
    out.stats.hintikkaSets = sets_.size();
    std::vector<Bits> profiles;
    for (std::size_t x = 0; x < sets_.size(); ++x)
      if (info_[x].target && compatible(x, info_[x].e) &&
          std::find(profiles.begin(), profiles.end(), info_[x].e) == profiles.end())
        profiles.push_back(info_[x].e);

    for (Bits p : profiles) {
      profile_ = p;
      compat_.clear();
      for (std::size_t x = 0; x < sets_.size(); ++x)
        if (compatible(x, p)) compat_.push_back(static_cast<std::uint32_t>(x));
      named_.assign(u_->nominals().size(), kNone);
      if (assignNominals(0, out.stats)) {
        out.sat = true;
        out.strategy = buildStrategy();
        out.witness = extractQuasiModel(*out.strategy);
        out.stats.positions += memo_.size();
        return out;
      }
    }
    return out;
  }

private:
  static constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

  bool compatible(std::size_t x, Bits p) const { return info_[x].e == p && (info_[x].eBody & ~p) == 0; }
  bool arc(std::uint32_t x, std::uint32_t y) const { return (info_[y].dia & ~info_[x].dia) == 0; }
  bool isNamed(std::uint32_t x) const { return info_[x].noms != 0; }

  bool assignNominals(std::size_t j, SolveStats& stats) {
    while (j < named_.size() && named_[j] != kNone) ++j;
    if (j == named_.size()) {
      ++stats.contexts;
      bool ok = tryContext();
      stats.positions += ok ? 0 : memo_.size();
      return ok;
    }
    Bits assigned = 0;
    for (std::size_t k = 0; k < named_.size(); ++k)
      if (named_[k] != kNone) assigned |= bit(k);
    for (auto x : compat_) {
      if (!(info_[x].noms & bit(j)) || (info_[x].noms & assigned)) continue;
      for (std::size_t k = 0; k < named_.size(); ++k)
        if (info_[x].noms & bit(k)) named_[k] = x;
      if (assignNominals(j + 1, stats)) return true;
      for (std::size_t k = 0; k < named_.size(); ++k)
        if (info_[x].noms & bit(k)) named_[k] = kNone;
    }
    return false;
  }

  std::vector<std::uint32_t> namedSets() const {
    std::vector<std::uint32_t> out;
    for (auto x : named_)
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    return out;
  }

  bool tryContext() {
    memo_.clear();
    const auto named = namedSets();
    for (auto a : named)
      for (auto b : named) {
        if (a == b || !arc(a, b)) continue;
        if (cls_ == RepClass::T1 || arc(b, a)) return false;
      }

    pool_.clear();
    for (auto x : compat_) {
      if (isNamed(x)) continue;
      if (cls_ == RepClass::T1 &&
          std::any_of(named.begin(), named.end(), [&](auto n) { return arc(x, n); }))
        continue;
      pool_.push_back(x);
    }
    std::stable_sort(pool_.begin(), pool_.end(), [&](auto a, auto b) {
      return std::popcount(info_[a].dia) < std::popcount(info_[b].dia);
    });

    for (auto n : named)
      if (!good(n, {})) return false;

    opening_.clear();
    auto pickGood = [&](auto&& wanted) -> bool {
      for (auto x : opening_)
        if (wanted(x)) return true;
      for (auto x : named)
        if (wanted(x)) {
          opening_.push_back(x);
          return true;
        }
      for (auto x : pool_)
        if (wanted(x) && good(x, {})) {
          opening_.push_back(x);
          return true;
        }
      return false;
    };
    if (!pickGood([&](auto x) { return info_[x].target; })) return false;
    for (auto n : named)
      if (std::find(opening_.begin(), opening_.end(), n) == opening_.end()) opening_.push_back(n);
    for (std::size_t k = 0; k < eIdx_.size(); ++k)
      if (profile_ & bit(k))
        if (!pickGood([&](auto x) { return (info_[x].eBody & bit(k)) != 0; })) return false;
    return true;
  }

  // Every challenge against x at this history can be met.
  bool good(std::uint32_t x, const History& h) {
    for (Bits rest = info_[x].dia; rest; rest &= rest - 1) {
      auto d = static_cast<std::uint32_t>(std::countr_zero(rest));
      if (const auto* y = recorded(h, d)) {
        if (!arc(x, *y)) return false;
      } else if (win(x, d, h) == kNone) {
        return false;
      }
    }
    return true;
  }

  // Eloise's winning response to challenge d against x, or kNone.
  std::uint32_t win(std::uint32_t x, std::uint32_t d, const History& h) {
    Key key = makeKey(x, d, h);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    memo_[key] = kNone;
    std::uint32_t found = kNone;
    auto usable = [&](std::uint32_t y) { return (info_[y].wit & bit(d)) && arc(x, y); };
    for (auto n : namedSets())
      if (usable(n) && (cls_ == RepClass::T0 || n == x)) {
        found = n;
        break;
      }
    if (found == kNone && !isNamed(x) && usable(x) && good(x, extend(h, d, x))) found = x;
    if (found == kNone)
      for (auto y : pool_)
        if (y != x && usable(y) && good(y, extend(h, d, y))) {
          found = y;
          break;
        }
    memo_[key] = found;
    return found;
  }

  Strategy buildStrategy() {
    Strategy s;
    s.target = target_;
    s.universe = u_;
    s.cls = cls_;
    std::map<std::uint32_t, std::size_t> index;
    auto setIndex = [&](std::uint32_t x) {
      auto [it, fresh] = index.emplace(x, s.sets.size());
      if (fresh) s.sets.push_back(sets_[x]);
      return it->second;
    };
    for (auto x : opening_) s.opening.push_back(setIndex(x));

    std::unordered_map<Key, std::size_t, KeyHash> nodeOf;
    auto build = [&](auto&& self, std::uint32_t x, const History& h) -> std::size_t {
      Key key = makeKey(x, kNone, h);
      if (auto it = nodeOf.find(key); it != nodeOf.end()) return it->second;
      const std::size_t idx = s.nodes.size();
      nodeOf.emplace(key, idx);
      s.nodes.push_back(Strategy::Node{setIndex(x), {}});
      std::vector<Strategy::Reply> replies;
      for (Bits rest = info_[x].dia; rest; rest &= rest - 1) {
        auto d = static_cast<std::uint32_t>(std::countr_zero(rest));
        Strategy::Reply r;
        r.diamond = u_->diamonds()[d];
        if (const auto* prior = recorded(h, d)) {
          r.kind = Strategy::Reply::Kind::Repeat;
          r.response = setIndex(*prior);
        } else {
          std::uint32_t y = win(x, d, h);
          r.response = setIndex(y);
          if (isNamed(y)) {
            r.kind = Strategy::Reply::Kind::Named;
          } else {
            r.kind = Strategy::Reply::Kind::Continue;
            r.child = self(self, y, extend(h, d, y));
          }
        }
        replies.push_back(r);
      }
      s.nodes[idx].replies = std::move(replies);
      return idx;
    };
    for (auto x : opening_) s.roots.push_back(build(build, x, {}));
    return s;
  }

  Formula target_;
  UniversePtr u_;
  RepClass cls_;
  std::vector<std::size_t> eIdx_;
  std::vector<HintikkaSet> sets_;
  std::vector<SetInfo> info_;

  Bits profile_ = 0;
  std::vector<std::uint32_t> compat_;
  std::vector<std::uint32_t> named_;  // nominal position -> set
  std::vector<std::uint32_t> pool_;   // non-named candidates
  std::vector<std::uint32_t> opening_;
  std::unordered_map<Key, std::uint32_t, KeyHash> memo_;
};

bool hasNominal(const Universe& u, const HintikkaSet& s) {
  return std::any_of(u.nominals().begin(), u.nominals().end(), [&](auto i) { return s.has(i); });
}

}  // namespace

SolveResult solve(const Formula& phi, RepClass cls) { return Solver(prepareTarget(phi), cls).run(); }

QuasiModel extractQuasiModel(const Strategy& s) {
  if (!s.universe || !(*s.universe == *Universe::of(s.target))) throw GameError("strategy universe is not ClNeg(target)");
  const Universe& u = *s.universe;
  if (s.opening.empty() || s.roots.size() != s.opening.size()) throw GameError("strategy has no opening");
  std::vector<HintikkaSet> opening;
  for (auto k : s.opening) opening.push_back(s.sets.at(k));
  if (auto v = legalInitMove(s.target, s.cls, opening); !v) throw GameError("illegal opening: " + v.reason);

  std::vector<std::size_t> named;
  for (auto k : s.opening)
    if (hasNominal(u, s.sets[k])) named.push_back(k);
  const HintikkaSet& root = s.sets[s.opening.front()];

  for (std::size_t n = 0; n < s.nodes.size(); ++n) {
    const auto& node = s.nodes[n];
    const HintikkaSet& x = s.sets.at(node.set);
    std::vector<std::size_t> answered;
    for (const auto& r : node.replies) {
      const HintikkaSet& y = s.sets.at(r.response);
      auto where = "node " + std::to_string(n) + ", " + u.formula(r.diamond).toString() + ": ";
      if (!x.has(r.diamond) || u.formula(r.diamond).op() != Op::Dia) throw GameError(where + "not a challenge");
      answered.push_back(r.diamond);
      if (!y.has(u.kids(r.diamond)[0]) || !canonicallyRelated(x, y)) throw GameError(where + "reply is not a witness");
      for (std::size_t e = 0; e < u.size(); ++e)
        if (u.formula(e).op() == Op::E && y.has(e) != root.has(e)) throw GameError(where + "reply breaks (univ)");
      switch (r.kind) {
        case Strategy::Reply::Kind::Named:
          if (std::find(named.begin(), named.end(), r.response) == named.end())
            throw GameError(where + "named reply is not a named opening set");
          if (s.cls == RepClass::T1 && r.response != node.set) throw GameError(where + "arc into a named set");
          break;
        case Strategy::Reply::Kind::Continue:
          if (!r.child || s.nodes.at(*r.child).set != r.response) throw GameError(where + "dangling continuation");
          if (hasNominal(u, y)) throw GameError(where + "fresh reply carries a nominal");
          if (s.cls == RepClass::T1)
            for (auto k : named)
              if (canonicallyRelated(y, s.sets[k])) throw GameError(where + "arc into a named set");
          break;
        case Strategy::Reply::Kind::Repeat: break;
      }
    }
    for (auto d : u.diamonds())
      if (x.has(d) && std::count(answered.begin(), answered.end(), d) != 1)
        throw GameError("node " + std::to_string(n) + " does not answer " + u.formula(d).toString() + " exactly once");
  }

  std::vector<HintikkaSet> points = s.sets;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  // keep the target's set first
  auto it = std::find(points.begin(), points.end(), root);
  std::rotate(points.begin(), it, it + 1);

  QuasiModel q;
  q.space = fromPreorder(canonicalRelation(points));
  q.labels = std::move(points);
  q.target = s.target;
  q.universe = s.universe;
  if (auto v = checkQuasiModel(q, s.cls, true); !v) throw GameError("extracted quasi-model fails: " + v.reason);
  return q;
}

}  // namespace topohl
