#include "topohl/finrep.hpp"

#include <map>
#include <stdexcept>

namespace topohl {

const char* className(RepClass c) noexcept { return c == RepClass::T0 ? "T0" : "T1"; }

Filtration filtrate(const TopoModel& m, const FormulaSet& sigma) {
  if (!isSubformulaClosed(sigma)) throw std::invalid_argument("sigma is not subformula-closed");
  std::vector<PointSet> ext;
  ext.reserve(sigma.size());
  for (const auto& f : sigma) ext.push_back(extension(m, f));

  std::map<std::vector<bool>, Point> classOf;
  Filtration out;
  out.projection.resize(m.size());
  std::vector<long long> ids;
  for (Point w = 0; w < m.size(); ++w) {
    std::vector<bool> sig(ext.size());
    for (std::size_t k = 0; k < ext.size(); ++k) sig[k] = member(ext[k], w);
    auto [it, fresh] = classOf.emplace(std::move(sig), classOf.size());
    if (fresh) ids.push_back(m.space.pointIds()[w]);
    out.projection[w] = it->second;
  }

  std::vector<std::size_t> proj(out.projection.begin(), out.projection.end());
  out.model.space = quotientTopology(m.space, proj);
  out.model.space.setPointIds(std::move(ids));
  for (const auto& [p, set] : m.props) {
    PointSet img = 0;
    forEachPoint(set, [&](Point w) { img |= singleton(out.projection[w]); });
    out.model.props[p] = img;
  }
  for (const auto& [i, w] : m.noms) out.model.noms[i] = out.projection[w];
  return out;
}

Verdict checkFiniteRep(const TopoModel& m, RepClass cls) {
  const auto& s = m.space;
  if (cls == RepClass::T1) {
    for (const auto& [i, w] : m.noms)
      if (!s.isOpen(s.points() & ~singleton(w)))
        return Verdict::fail("T1: complement of the point named " + i + " is not open");
    return Verdict::pass();
  }
  auto named = toPoints(m.namedPoints());
  for (std::size_t a = 0; a < named.size(); ++a)
    for (std::size_t b = a + 1; b < named.size(); ++b) {
      Point x = named[a], y = named[b];
      if (member(s.minimalNeighborhood(x), y) && member(s.minimalNeighborhood(y), x))
        return Verdict::fail("T0: named points " + std::to_string(x) + " and " + std::to_string(y) +
                             " are topologically indistinguishable");
    }
  return Verdict::pass();
}

Verdict checkQuasiModel(const QuasiModel& q, RepClass cls, bool withE) {
  if (!q.universe) throw std::invalid_argument("quasi-model has no universe");
  const Universe& u = *q.universe;
  if (!(u == *Universe::of(q.target))) throw std::invalid_argument("universe is not ClNeg(target)");
  if (q.labels.size() != q.size()) throw std::invalid_argument("every point needs exactly one label");
  for (const auto& l : q.labels)
    if (!l.universe() || !(*l.universe() == u)) throw std::invalid_argument("label universe mismatch");

  const std::size_t n = q.size();
  const auto& nb = q.space.neighborhoods();
  auto holds = [&](std::size_t f) {
    PointSet out = 0;
    for (Point w = 0; w < n; ++w)
      if (q.labels[w].has(f)) out |= singleton(w);
    return out;
  };

  for (Point w = 0; w < n; ++w)
    if (auto v = checkHintikka(u, q.labels[w].bits()); !v)
      return Verdict::fail("label of point " + std::to_string(w) + " is not a Hintikka set: " + v.reason);

  if (holds(u.indexOf(q.target)) == 0) return Verdict::fail("no label contains the target");

  std::map<std::string, Point> named;
  for (auto i : u.nominals()) {
    PointSet carriers = holds(i);
    if (cardinality(carriers) != 1)
      return Verdict::fail("nominal " + u.formula(i).toString() + " is carried by " +
                           std::to_string(cardinality(carriers)) + " labels");
    named[u.formula(i).name()] = toPoints(carriers).front();
  }

  for (auto d : u.diamonds()) {
    PointSet body = holds(u.kids(d)[0]);
    for (Point w = 0; w < n; ++w)
      if (q.labels[w].has(d) != ((nb[w] & body) != 0))
        return Verdict::fail("neighborhood condition fails for " + u.formula(d).toString() + " at point " +
                             std::to_string(w));
  }
  for (auto b : u.boxes()) {
    PointSet body = holds(u.kids(b)[0]);
    for (Point w = 0; w < n; ++w)
      if (q.labels[w].has(b) != subsetOf(nb[w], body))
        return Verdict::fail("neighborhood condition fails for " + u.formula(b).toString() + " at point " +
                             std::to_string(w));
  }

  for (auto g : u.globals()) {
    const Formula& f = u.formula(g);
    if (f.op() != Op::At && !withE) continue;
    PointSet body = holds(u.kids(g)[0]);
    bool value = false;
    switch (f.op()) {
      case Op::E: value = body != 0; break;
      case Op::A: value = body == q.space.points(); break;
      default: value = member(body, named.at(f.name())); break;
    }
    if (holds(g) != (value ? q.space.points() : 0))
      return Verdict::fail("global condition fails for " + f.toString());
  }

  const PointSet namedSet = [&] {
    PointSet s = 0;
    for (const auto& [_, w] : named) s |= singleton(w);
    return s;
  }();
  if (cls == RepClass::T1) {
    bool ok = true;
    forEachPoint(namedSet, [&](Point w) { ok = ok && q.space.isOpen(q.space.points() & ~singleton(w)); });
    if (!ok) return Verdict::fail("T1 condition: complement of a named point is not open");
  } else {
    auto pts = toPoints(namedSet);
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b)
        if (member(nb[pts[a]], pts[b]) && member(nb[pts[b]], pts[a]))
          return Verdict::fail("T0 condition: two named points cannot be separated");
  }
  return Verdict::pass();
}

QuasiModel quasiFromModel(const TopoModel& m, const Formula& phi) {
  QuasiModel q;
  q.space = m.space;
  q.target = phi;
  q.universe = Universe::of(phi);
  const Universe& u = *q.universe;
  std::vector<PointSet> ext;
  ext.reserve(u.size());
  for (const auto& f : u.formulas()) ext.push_back(extension(m, f));
  if (ext[u.indexOf(phi)] == 0) throw std::invalid_argument("formula is not satisfied in the model");
  for (Point w = 0; w < m.size(); ++w) {
    std::vector<bool> bits(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) bits[i] = member(ext[i], w);
    q.labels.emplace_back(q.universe, std::move(bits));
  }
  return q;
}

TopoModel modelFromQuasi(const QuasiModel& q) {
  TopoModel m;
  m.space = q.space;
  const Universe& u = *q.universe;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Formula& f = u.formula(i);
    if (!f.isAtom()) continue;
    PointSet s = 0;
    for (Point w = 0; w < q.size(); ++w)
      if (q.labels[w].has(i)) s |= singleton(w);
    if (f.op() == Op::Prop) {
      m.props[f.name()] = s;
    } else {
      if (cardinality(s) != 1) throw std::invalid_argument("nominal " + f.name() + " must label exactly one point");
      m.noms[f.name()] = toPoints(s).front();
    }
  }
  return m;
}

}  // namespace topohl
