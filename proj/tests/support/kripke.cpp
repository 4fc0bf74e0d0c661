#include "kripke.hpp"

#include <stdexcept>

namespace testsupport {

using namespace topohl;

KripkeModel fromOpens(const TopoModel& m) {
  KripkeModel k;
  const std::size_t n = m.size();
  const auto opens = m.space.opens();
  k.rel.assign(n, std::vector<bool>(n, true));
  for (auto o : opens)
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t v = 0; v < n; ++v)
        if (((o >> w) & 1U) && !((o >> v) & 1U)) k.rel[w][v] = false;
  for (const auto& [p, set] : m.props)
    for (std::size_t w = 0; w < n; ++w)
      if ((set >> w) & 1U) k.val[p].insert(w);
  k.nom = std::map<std::string, std::size_t>(m.noms.begin(), m.noms.end());
  return k;
}

bool holds(const KripkeModel& k, std::size_t w, const Formula& f) {
  switch (f.op()) {
    case Op::Prop: {
      auto it = k.val.find(f.name());
      return it != k.val.end() && it->second.count(w);
    }
    case Op::Nom: return k.nom.at(f.name()) == w;
    case Op::Neg: return !holds(k, w, f.child(0));
    case Op::And: return holds(k, w, f.child(0)) && holds(k, w, f.child(1));
    case Op::Or: return holds(k, w, f.child(0)) || holds(k, w, f.child(1));
    case Op::Impl: return !holds(k, w, f.child(0)) || holds(k, w, f.child(1));
    case Op::Dia:
      for (std::size_t v = 0; v < k.size(); ++v)
        if (k.rel[w][v] && holds(k, v, f.child(0))) return true;
      return false;
    case Op::Box:
      for (std::size_t v = 0; v < k.size(); ++v)
        if (k.rel[w][v] && !holds(k, v, f.child(0))) return false;
      return true;
    case Op::At: return holds(k, k.nom.at(f.name()), f.child(0));
    case Op::E:
      for (std::size_t v = 0; v < k.size(); ++v)
        if (holds(k, v, f.child(0))) return true;
      return false;
    case Op::A:
      for (std::size_t v = 0; v < k.size(); ++v)
        if (!holds(k, v, f.child(0))) return false;
      return true;
  }
  throw std::logic_error("unhandled operator");
}

std::vector<std::vector<PointSet>> allTopologies(std::size_t n) {
  if (n > 4) throw std::invalid_argument("at most 4 points");
  const std::size_t subsets = std::size_t{1} << n;
  const PointSet full = subsets - 1;
  std::vector<std::vector<PointSet>> out;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << subsets); ++family) {
    auto in = [&](PointSet s) { return (family >> s) & 1U; };
    if (!in(0) || !in(full)) continue;
    bool ok = true;
    for (PointSet a = 0; a < subsets && ok; ++a)
      for (PointSet b = 0; b < subsets && ok; ++b)
        if (in(a) && in(b) && (!in(a | b) || !in(a & b))) ok = false;
    if (!ok) continue;
    std::vector<PointSet> opens;
    for (PointSet s = 0; s < subsets; ++s)
      if (in(s)) opens.push_back(s);
    out.push_back(opens);
  }
  return out;
}

}  // namespace testsupport
