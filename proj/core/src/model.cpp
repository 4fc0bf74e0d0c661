#include "topohl/model.hpp"

namespace topohl {

PointSet TopoModel::valuation(const std::string& prop) const {
  auto it = props.find(prop);
  return it == props.end() ? 0 : it->second;
}

PointSet TopoModel::namedPoints() const {
  PointSet out = 0;
  for (const auto& [name, p] : noms) out |= singleton(p);
  return out;
}

Verdict validateModel(const TopoModel& m) {
  const auto& s = m.space;
  for (Point w = 0; w < s.size(); ++w) {
    PointSet nw = s.neighborhoods()[w];
    if (!member(nw, w) || !subsetOf(nw, s.points()))
      return Verdict::fail("space: neighborhood of point " + std::to_string(w) + " is malformed");
    if (s.upClosure(nw) != nw) return Verdict::fail("space: opens not closed under intersection");
  }
  for (const auto& [name, ext] : m.props) {
    if (name.empty()) return Verdict::fail("empty proposition name");
    if (!subsetOf(ext, s.points())) return Verdict::fail("valuation of " + name + " leaves the point set");
  }
  for (const auto& [name, p] : m.noms) {
    if (name.empty()) return Verdict::fail("empty nominal name");
    if (p >= s.size()) return Verdict::fail("nominal " + name + " is mapped to a missing point");
  }
  return Verdict::pass();
}

PointSet extension(const TopoModel& m, const Formula& f) {
  const PointSet all = m.space.points();
  const auto& nb = m.space.neighborhoods();
  auto nominalPoint = [&](const std::string& name) {
    auto it = m.noms.find(name);
    if (it == m.noms.end()) throw EvalError("unknown nominal '" + name + "'");
    return it->second;
  };
  switch (f.op()) {
    case Op::Prop: return m.valuation(f.name()) & all;
    case Op::Nom: return singleton(nominalPoint(f.name()));
    case Op::Neg: return all & ~extension(m, f.child());
    case Op::And: return extension(m, f.child(0)) & extension(m, f.child(1));
    case Op::Or: return extension(m, f.child(0)) | extension(m, f.child(1));
    case Op::Impl: return (all & ~extension(m, f.child(0))) | extension(m, f.child(1));
    case Op::Box: {
      // some open around w inside ext(g), i.e. the minimal one
      PointSet g = extension(m, f.child()), out = 0;
      for (Point w = 0; w < nb.size(); ++w)
        if (subsetOf(nb[w], g)) out |= singleton(w);
      return out;
    }
    case Op::Dia: {
      PointSet g = extension(m, f.child()), out = 0;
      for (Point w = 0; w < nb.size(); ++w)
        if ((nb[w] & g) != 0) out |= singleton(w);
      return out;
    }
    case Op::At: {
      Point v = nominalPoint(f.name());
      return member(extension(m, f.child()), v) ? all : 0;
    }
    case Op::E: return extension(m, f.child()) != 0 ? all : 0;
    case Op::A: return extension(m, f.child()) == all ? all : 0;
  }
  return 0;
}

bool checkTruth(const TopoModel& m, Point w, const Formula& f) {
  if (w >= m.size()) throw EvalError("unknown point " + std::to_string(w));
  return member(extension(m, f), w);
}

}  // namespace topohl
