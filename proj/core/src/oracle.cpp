#include "topohl/oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace topohl {

namespace {

using Bits = std::uint64_t;

std::vector<Preorder> extendByOne(const std::vector<Preorder>& smaller, std::size_t n) {
  std::vector<Preorder> out;
  const PointSet all = fullSet(n);
  for (const auto& p : smaller) {
    auto upClosed = [&](PointSet s) {
      bool ok = true;
      forEachPoint(s, [&](Point v) { ok = ok && subsetOf(p.succ[v], s); });
      return ok;
    };
    auto downClosed = [&](PointSet s) {
      for (Point x = 0; x < n; ++x)
        if (!member(s, x) && (p.succ[x] & s)) return false;
      return true;
    };
    for (PointSet up = 0; up <= all; ++up) {
      if (!upClosed(up)) continue;
      for (PointSet down = 0; down <= all; ++down) {
        if (!downClosed(down)) continue;
        bool ok = true;
        forEachPoint(down, [&](Point d) { ok = ok && subsetOf(up, p.succ[d]); });
        if (!ok) continue;
        Preorder q = p;
        q.succ.push_back(up | singleton(n));
        forEachPoint(down, [&](Point d) { q.succ[d] |= singleton(n); });
        out.push_back(std::move(q));
      }
    }
  }
  return out;
}

Bits encode(const Preorder& p, const std::vector<std::size_t>& perm) {
  const std::size_t n = p.size();
  Bits code = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.related(perm[i], perm[j])) code |= Bits{1} << (i * n + j);
  return code;
}

Bits canonicalCode(const Preorder& p) {
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  Bits best = ~Bits{0};
  do {
    best = std::min(best, encode(p, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

const std::vector<Preorder>& labelledPreorders(std::size_t n) {
  static std::mutex mu;
  static std::array<std::vector<Preorder>, 7> cache;
  static std::size_t built = 0;
  std::lock_guard lock(mu);
  if (built == 0) {
    cache[0] = {Preorder{}};
    built = 1;
  }
  for (; built <= n; ++built) cache[built] = extendByOne(cache[built - 1], built - 1);
  return cache[n];
}

struct LabelInfo {
  Bits dia = 0, diaBody = 0, box = 0, boxBody = 0, noms = 0;
};

class Search {
public:
  Search(const Formula& phi, RepClass cls, bool prune, const std::function<bool(const QuasiModel&)>& visit)
      : phi_(phi), u_(Universe::of(phi)), cls_(cls), prune_(prune), visit_(visit) {
    const Universe& u = *u_;
    if (u.diamonds().size() > 64 || u.boxes().size() > 64 || u.nominals().size() > 64)
      throw std::length_error("formula too large for the oracle");
    labels_ = enumerateHintikkaSets(u_);
    for (const auto& l : labels_) {
      LabelInfo in;
      for (std::size_t k = 0; k < u.diamonds().size(); ++k) {
        if (l.has(u.diamonds()[k])) in.dia |= Bits{1} << k;
        if (l.has(u.kids(u.diamonds()[k])[0])) in.diaBody |= Bits{1} << k;
      }
      for (std::size_t k = 0; k < u.boxes().size(); ++k) {
        if (l.has(u.boxes()[k])) in.box |= Bits{1} << k;
        if (l.has(u.kids(u.boxes()[k])[0])) in.boxBody |= Bits{1} << k;
      }
      for (std::size_t k = 0; k < u.nominals().size(); ++k)
        if (l.has(u.nominals()[k])) in.noms |= Bits{1} << k;
      info_.push_back(in);
    }
    // labels of one model agree on every global formula
    std::map<std::vector<bool>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      std::vector<bool> key;
      for (auto g : u.globals()) key.push_back(labels_[i].has(g));
      groups[key].push_back(i);
    }
    for (auto& [_, g] : groups) groups_.push_back(std::move(g));
  }

  // false once the visitor asked to stop
  bool run(const Preorder& p) {
    p_ = &p;
    const std::size_t n = p.size();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Point a, Point b) { return cardinality(p.succ[a]) < cardinality(p.succ[b]); });
    assigned_.assign(n, 0);
    for (const auto& g : groups_) {
      group_ = &g;
      if (!assign(0, 0, 0)) return false;
    }
    return true;
  }

  std::size_t found() const noexcept { return found_; }

private:
  bool pairOk(std::size_t from, std::size_t to) const {
    const auto& a = info_[from];
    const auto& b = info_[to];
    return (b.diaBody & ~a.dia) == 0 && (a.box & ~b.boxBody) == 0;
  }

  bool fullOk(Point x) const {
    Bits bodies = 0, missing = 0;
    forEachPoint(p_->succ[x], [&](Point v) {
      bodies |= info_[labelOf(v)].diaBody;
      missing |= ~info_[labelOf(v)].boxBody;
    });
    const auto& a = info_[labelOf(x)];
    return (a.dia & ~bodies) == 0 && (~a.box & ~missing & boxMask()) == 0;
  }

  Bits boxMask() const {
    const auto k = u_->boxes().size();
    return k >= 64 ? ~Bits{0} : (Bits{1} << k) - 1;
  }

  std::size_t labelOf(Point v) const { return (*group_)[assigned_[v]]; }

  bool assign(std::size_t pos, PointSet done, Bits usedNoms) {
    const std::size_t n = p_->size();
    if (pos == n) return emit();
    const Point w = order_[pos];
    std::size_t start = 0;
    if (prune_)
      for (std::size_t k = 0; k < pos; ++k)
        if (p_->succ[order_[k]] == p_->succ[w]) start = std::max(start, assigned_[order_[k]]);
    const PointSet now = done | singleton(w);
    for (std::size_t c = start; c < group_->size(); ++c) {
      const std::size_t l = (*group_)[c];
      if (info_[l].noms & usedNoms) continue;
      assigned_[w] = c;
      bool ok = true;
      forEachPoint(done, [&](Point v) {
        if (member(p_->succ[w], v)) ok = ok && pairOk(l, labelOf(v));
        if (member(p_->succ[v], w)) ok = ok && pairOk(labelOf(v), l);
      });
      if (!ok) continue;
      forEachPoint(now, [&](Point x) {
        if (ok && subsetOf(p_->succ[x], now) && (x == w || member(p_->succ[x], w))) ok = fullOk(x);
      });
      if (!ok) continue;
      if (!assign(pos + 1, now, usedNoms | info_[l].noms)) return false;
    }
    return true;
  }

  bool emit() {
    QuasiModel q;
    q.space = fromPreorder(*p_);
    q.target = phi_;
    q.universe = u_;
    for (Point v = 0; v < p_->size(); ++v) q.labels.push_back(labels_[labelOf(v)]);
    if (!checkQuasiModel(q, cls_, true)) return true;
    ++found_;
    return visit_(q);
  }

  Formula phi_;
  UniversePtr u_;
  RepClass cls_;
  bool prune_;
  const std::function<bool(const QuasiModel&)>& visit_;
  std::vector<HintikkaSet> labels_;
  std::vector<LabelInfo> info_;
  std::vector<std::vector<std::size_t>> groups_;

  const Preorder* p_ = nullptr;
  const std::vector<std::size_t>* group_ = nullptr;
  std::vector<Point> order_;
  std::vector<std::size_t> assigned_;  // point -> position in group_
  std::size_t found_ = 0;
};

}  // namespace

std::vector<Preorder> enumeratePreorders(std::size_t n, bool upToIso) {
  if (n > 6) throw std::invalid_argument("preorder enumeration is limited to 6 points");
  const auto& all = labelledPreorders(n);
  if (!upToIso) return all;
  std::vector<Preorder> out;
  std::set<Bits> seen;
  for (const auto& p : all)
    if (seen.insert(canonicalCode(p)).second) out.push_back(p);
  return out;
}

std::size_t enumerateQuasiModels(const Formula& phi, RepClass cls, const OracleOptions& opts,
                                 const std::function<bool(const QuasiModel&)>& visit) {
  if (opts.maxPoints < 1) throw std::invalid_argument("maxPoints must be at least 1");
  Search search(phi, cls, opts.prune, visit);
  for (std::size_t n = 1; n <= opts.maxPoints; ++n)
    for (const auto& p : enumeratePreorders(n, opts.prune))
      if (!search.run(p)) return search.found();
  return search.found();
}

OracleVerdict bruteForceSat(const Formula& phi, RepClass cls, std::size_t maxPoints, bool prune) {
  OracleVerdict out;
  out.bound = maxPoints;
  enumerateQuasiModels(phi, cls, OracleOptions{maxPoints, prune}, [&](const QuasiModel& q) {
    out.witness = q;
    return false;
  });
  return out;
}

}  // namespace topohl
