#include "topohl/construct.hpp"

#include <algorithm>
#include <numeric>

namespace topohl {

namespace {

// Points equivalent to w: same minimal neighborhood.
PointSet clusterOf(const FiniteSpace& s, Point w) {
  PointSet out = 0;
  const auto& nb = s.neighborhoods();
  for (Point v = 0; v < s.size(); ++v)
    if (nb[v] == nb[w]) out |= singleton(v);
  return out;
}

PointSet above(const FiniteSpace& s, PointSet from) {
  PointSet out = 0;
  forEachPoint(from, [&](Point w) { out |= s.minimalNeighborhood(w); });
  return out;
}

}  // namespace

Filtration kolmogorovQuotient(const TopoModel& m) {
  if (auto v = validateModel(m); !v) throw ConstructError("invalid model: " + v.reason);
  if (!m.noms.empty()) throw ConstructError("the Kolmogorov quotient is defined for nominal-free models");
  Filtration out;
  out.projection.assign(m.size(), 0);
  std::vector<Point> rep;  // class -> representative
  for (Point w = 0; w < m.size(); ++w) {
    auto it = std::find_if(rep.begin(), rep.end(), [&](Point r) { return member(clusterOf(m.space, r), w); });
    if (it == rep.end()) {
      out.projection[w] = rep.size();
      rep.push_back(w);
    } else {
      out.projection[w] = static_cast<Point>(it - rep.begin());
    }
  }
  for (const auto& [p, set] : m.props)
    for (auto r : rep) {
      PointSet cl = clusterOf(m.space, r);
      if ((set & cl) != 0 && (set & cl) != cl)
        throw ConstructError("proposition " + p + " separates indistinguishable points");
    }

  std::vector<std::size_t> proj(out.projection.begin(), out.projection.end());
  out.model.space = quotientTopology(m.space, proj);
  std::vector<long long> ids;
  for (auto r : rep) ids.push_back(m.space.pointIds()[r]);
  out.model.space.setPointIds(std::move(ids));
  for (const auto& [p, set] : m.props) {
    PointSet img = 0;
    forEachPoint(set, [&](Point w) { img |= singleton(out.projection[w]); });
    out.model.props[p] = img;
  }
  return out;
}

Projected peelOff(const TopoModel& rep) {
  if (auto v = validateModel(rep); !v) throw ConstructError("invalid model: " + v.reason);
  if (auto v = checkFiniteRep(rep, RepClass::T1); !v) throw ConstructError("not a T1 representation: " + v.reason);
  const PointSet named = rep.namedPoints();
  if (above(rep.space, named) != rep.space.points())
    throw ConstructError("some point lies above no named point");

  Projected out;
  std::vector<PointSet> nbhd;
  forEachPoint(named, [&](Point r) {
    const auto part = toPoints(rep.space.minimalNeighborhood(r));
    const std::size_t base = out.origin.size();
    if (base + part.size() > kMaxPoints) throw ConstructError("peeled model exceeds 64 points");
    auto local = [&](Point w) { return base + static_cast<std::size_t>(std::find(part.begin(), part.end(), w) - part.begin()); };
    for (auto w : part) {
      PointSet n = 0;
      forEachPoint(rep.space.minimalNeighborhood(w), [&](Point v) { n |= singleton(local(v)); });
      nbhd.push_back(n);
      out.origin.push_back(w);
    }
    for (const auto& [p, set] : rep.props)
      for (auto w : part)
        if (member(set, w)) out.model.props[p] |= singleton(local(w));
    for (const auto& [i, w] : rep.noms)
      if (w == r) out.model.noms[i] = local(r);
  });
  for (const auto& [p, _] : rep.props) out.model.props.try_emplace(p, 0);
  out.model.space = FiniteSpace::fromNeighborhoods(std::move(nbhd));
  return out;
}

Projected fattenClusters(const TopoModel& m) {
  if (auto v = validateModel(m); !v) throw ConstructError("invalid model: " + v.reason);
  const PointSet named = m.namedPoints();
  Projected out;
  std::vector<std::vector<Point>> copies(m.size());  // source point -> its copies
  for (Point w = 0; w < m.size(); ++w) {
    const bool simple = cardinality(clusterOf(m.space, w)) == 1;
    const std::size_t k = (simple && !member(named, w)) ? 2 : 1;
    for (std::size_t c = 0; c < k; ++c) {
      copies[w].push_back(out.origin.size());
      out.origin.push_back(w);
    }
  }
  if (out.origin.size() > kMaxPoints) throw ConstructError("fattened model exceeds 64 points");
  std::vector<PointSet> nbhd(out.origin.size(), 0);
  for (Point x = 0; x < out.origin.size(); ++x)
    forEachPoint(m.space.minimalNeighborhood(out.origin[x]), [&](Point v) {
      for (auto c : copies[v]) nbhd[x] |= singleton(c);
    });
  out.model.space = FiniteSpace::fromNeighborhoods(std::move(nbhd));
  for (const auto& [p, set] : m.props) {
    PointSet img = 0;
    forEachPoint(set, [&](Point w) {
      for (auto c : copies[w]) img |= singleton(c);
    });
    out.model.props[p] = img;
  }
  for (const auto& [i, w] : m.noms) out.model.noms[i] = copies[w].front();
  return out;
}

bool ClassDescriptor::contains(long long x) const noexcept {
  if (kind == Kind::Singleton) return x == offset;
  return x >= offset && (x - offset) % stride == 0;
}

std::string ClassDescriptor::toString() const {
  if (kind == Kind::Singleton) return "{" + std::to_string(offset) + "}";
  return "{" + std::to_string(offset) + " + " + std::to_string(stride) + "j | j >= 0}";
}

bool SymbolicModel::finite() const noexcept {
  return std::none_of(classes.begin(), classes.end(),
                      [](const auto& c) { return c.kind == ClassDescriptor::Kind::Progression; });
}

bool SymbolicModel::inCarrier(long long x) const noexcept { return x >= 1 && (!finite() || x <= prefix); }

Point SymbolicModel::classOf(long long x) const {
  for (Point k = 0; k < classes.size(); ++k)
    if (classes[k].contains(x)) return k;
  throw ConstructError("element " + std::to_string(x) + " is outside the carrier");
}

bool SymbolicModel::removable(long long x) const noexcept {
  return topology == TopologyKind::T1Generated || x > prefix;
}

bool SymbolicModel::contains(const BasicOpen& o, long long x) const {
  if (!inCarrier(x) || std::find(o.removed.begin(), o.removed.end(), x) != o.removed.end()) return false;
  return member(o.base, classOf(x));
}

PointSet SymbolicModel::image(const BasicOpen& o) const {
  PointSet out = o.base;
  for (Point k = 0; k < classes.size(); ++k)
    if (classes[k].kind == ClassDescriptor::Kind::Singleton &&
        std::find(o.removed.begin(), o.removed.end(), classes[k].offset) != o.removed.end())
      out &= ~singleton(k);
  return out;
}

bool SymbolicModel::satisfiesAtom(const std::string& name, bool nominal, long long x) const {
  Point k = classOf(x);
  if (nominal) {
    auto it = baseRep.noms.find(name);
    return it != baseRep.noms.end() && it->second == k;
  }
  return member(baseRep.valuation(name), k);
}

namespace {

// Named points first as singletons 1..m, then one progression per remaining
// point with stride n - m.
SymbolicModel classScheme(const TopoModel& rep, TopologyKind kind) {
  SymbolicModel s;
  s.baseRep = rep;
  s.topology = kind;
  const PointSet named = rep.namedPoints();
  const long long n = static_cast<long long>(rep.size());
  const long long m = static_cast<long long>(cardinality(named));
  s.prefix = m;
  s.classes.resize(rep.size());
  long long nextSingleton = 1, nextOffset = m + 1;
  for (Point k = 0; k < rep.size(); ++k) {
    if (member(named, k)) {
      s.classes[k] = {ClassDescriptor::Kind::Singleton, nextSingleton++, 0};
    } else {
      s.classes[k] = {ClassDescriptor::Kind::Progression, nextOffset++, n - m};
    }
  }
  return s;
}

}  // namespace

SymbolicModel symbolicWitnessT1(const TopoModel& rep) {
  if (auto v = validateModel(rep); !v) throw ConstructError("invalid model: " + v.reason);
  if (auto v = checkFiniteRep(rep, RepClass::T1); !v) throw ConstructError("not a T1 representation: " + v.reason);
  return classScheme(rep, TopologyKind::T1Generated);
}

SymbolicModel symbolicWitnessT0(const TopoModel& rep) {
  if (auto v = validateModel(rep); !v) throw ConstructError("invalid model: " + v.reason);
  if (auto v = checkFiniteRep(rep, RepClass::T0); !v) throw ConstructError("not a T0 representation: " + v.reason);
  return classScheme(rep, TopologyKind::T0Family);
}

Verdict verifySymbolic(const SymbolicModel& s) {
  const TopoModel& rep = s.baseRep;
  const std::size_t n = rep.size();
  if (s.classes.size() != n) return Verdict::fail("(d) total: one class per representation point is required");

  // The carrier is {1..prefix} when finite; otherwise membership is periodic
  // past the largest offset, so one period settles the partition.
  long long period = 1, reach = s.prefix;
  for (const auto& c : s.classes) {
    if (c.kind == ClassDescriptor::Kind::Progression) {
      if (c.stride < 1 || c.offset < 1) return Verdict::fail("(d) total: malformed progression " + c.toString());
      period = std::lcm(period, c.stride);
    }
    reach = std::max(reach, c.offset);
  }
  const long long window = s.finite() ? s.prefix : reach + period;
  long long singletons = 0;
  for (const auto& c : s.classes)
    if (c.kind == ClassDescriptor::Kind::Singleton) {
      ++singletons;
      if (c.offset < 1 || c.offset > s.prefix) return Verdict::fail("(d) total: singleton outside the prefix");
    }
  if (singletons != s.prefix) return Verdict::fail("(d) total: prefix and singleton classes disagree");
  for (long long x = 1; x <= window; ++x) {
    auto hits = std::count_if(s.classes.begin(), s.classes.end(), [&](const auto& c) { return c.contains(x); });
    if (hits != 1) return Verdict::fail("(d) total: element " + std::to_string(x) + " lies in " + std::to_string(hits) + " classes");
  }

  // minimal neighborhoods form a basis and f commutes with unions, so the
  // basic opens built on them settle every open
  auto opens = rep.space.neighborhoods();
  opens.push_back(rep.space.points());
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

  // (a) the preimage of every open is the union of its classes
  for (auto o : opens)
    for (long long x = 1; x <= window; ++x)
      if (s.contains(BasicOpen{o, {}}, x) != member(o, s.classOf(x)))
        return Verdict::fail("(a) continuity: preimage of " + formatSet(o, rep.space.pointIds()) + " is not a basic open");

  // (b) images of basic opens are open; only removable singletons matter
  std::vector<long long> removable;
  for (const auto& c : s.classes)
    if (c.kind == ClassDescriptor::Kind::Singleton && s.removable(c.offset)) removable.push_back(c.offset);
  if (removable.size() > 20) return Verdict::fail("(b) openness: too many singleton classes to check");
  for (auto o : opens)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << removable.size()); ++mask) {
      BasicOpen b{o, {}};
      for (std::size_t j = 0; j < removable.size(); ++j)
        if ((mask >> j) & 1U) b.removed.push_back(removable[j]);
      // a finite removal never exhausts a progression, so these are all the images
      if (!rep.space.isOpen(s.image(b)))
        return Verdict::fail("(b) openness: image " + formatSet(s.image(b), rep.space.pointIds()) + " is not open");
    }

  // (c) separation
  const PointSet all = rep.space.points();
  const long long probe = s.finite() ? s.prefix : reach + 2 * period;
  if (s.topology == TopologyKind::T1Generated) {
    for (long long x = 1; x <= probe; ++x) {
      BasicOpen co{all, {x}};
      for (long long y = 1; y <= probe; ++y)
        if (s.contains(co, y) == (y == x))
          return Verdict::fail("(c) separation: complement of " + std::to_string(x) + " is not a basic open");
    }
  } else {
    for (long long x = 1; x <= probe; ++x)
      for (long long y = x + 1; y <= probe; ++y) {
        bool separated = false;
        if (s.removable(y)) separated = true;  // f^-1(W) minus {y}
        if (s.removable(x)) separated = true;
        for (auto o : opens)
          if (member(o, s.classOf(x)) != member(o, s.classOf(y))) separated = true;
        if (!separated)
          return Verdict::fail("(c) separation: " + std::to_string(x) + " and " + std::to_string(y) + " are indistinguishable");
      }
  }

  // (d) graph of f: atoms are pulled back, nominals land on singletons
  for (const auto& [i, k] : rep.noms) {
    if (k >= n) return Verdict::fail("(d) hybrid: nominal " + i + " names no point");
    if (s.classes[k].kind != ClassDescriptor::Kind::Singleton)
      return Verdict::fail("(d) hybrid: nominal " + i + " would hold on an infinite class");
  }
  for (long long x = 1; x <= window; ++x) {
    Point k = s.classOf(x);
    for (const auto& [p, set] : rep.props)
      if (s.satisfiesAtom(p, false, x) != member(set, k)) return Verdict::fail("(d) Prop: " + p + " disagrees");
  }
  return Verdict::pass();
}

std::size_t LabeledTree::level(std::size_t node) const noexcept {
  std::size_t k = 0;
  while (node > 0) {
    node = (node - 1) / branching;
    ++k;
  }
  return k;
}

namespace {

std::vector<Point> successors(const TopoModel& m, Point x, Point root) {
  auto out = toPoints(m.space.minimalNeighborhood(x));
  if (x == root) out.erase(std::remove(out.begin(), out.end(), root), out.end());
  return out;
}

}  // namespace

LabeledTree unravelToFullTree(const TopoModel& m, Point root, std::size_t n, std::size_t d) {
  if (auto v = validateModel(m); !v) throw ConstructError("invalid model: " + v.reason);
  if (root >= m.size()) throw ConstructError("root is not a point of the model");
  if (n < 2) throw ConstructError("branching must be at least 2");
  if (m.space.minimalNeighborhood(root) != m.space.points()) throw ConstructError("model is not rooted at the given point");
  for (Point w = 0; w < m.size(); ++w) {
    if (w != root && member(m.space.minimalNeighborhood(w), root)) throw ConstructError("root has incoming arcs");
    if (successors(m, w, root).size() > n)
      throw ConstructError("point " + std::to_string(w) + " has more than " + std::to_string(n) + " successors");
  }
  if (d > 0 && successors(m, root, root).empty()) throw ConstructError("root has no successor to unravel");

  LabeledTree t;
  t.branching = n;
  t.depth = d;
  std::size_t total = 0, width = 1;
  for (std::size_t k = 0; k <= d; ++k, width *= n) total += width;
  t.labels.assign(total, root);
  for (std::size_t i = 0; i < total; ++i) {
    if (!t.internal(i)) continue;
    auto succ = successors(m, t.labels[i], root);
    for (std::size_t c = 0; c < n; ++c) t.labels[t.child(i, c)] = c < succ.size() ? succ[c] : succ.front();
  }
  return t;
}

Verdict checkLocalPMorphism(const LabeledTree& t, const TopoModel& m, Point root) {
  if (t.labels.empty() || t.labels.front() != root) return Verdict::fail("tree root is not labelled by the model root");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0 && t.labels[i] == root) return Verdict::fail("node " + std::to_string(i) + " repeats the root label");
    if (!t.internal(i)) continue;
    auto succ = successors(m, t.labels[i], root);
    std::vector<Point> kids;
    for (std::size_t c = 0; c < t.branching; ++c) kids.push_back(t.labels.at(t.child(i, c)));
    std::sort(kids.begin(), kids.end());
    kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
    for (auto k : kids)
      if (!std::binary_search(succ.begin(), succ.end(), k))
        return Verdict::fail("zig fails at node " + std::to_string(i));
    for (auto v : succ)
      if (!std::binary_search(kids.begin(), kids.end(), v))
        return Verdict::fail("zag fails at node " + std::to_string(i));
  }
  return Verdict::pass();
}

std::vector<Rational> rationalEmbed(const LabeledTree& t) {
  std::size_t total = 0, width = 1;
  for (std::size_t k = 0; k <= t.depth; ++k, width *= t.branching) total += width;
  if (t.branching < 2 || t.size() != total) throw ConstructError("not a full tree");
  const long long n = static_cast<long long>(t.branching);
  std::vector<Rational> f(t.size());
  f[0] = 0;
  std::vector<long long> scale(t.depth + 1, 1);  // (n+1)^k
  for (std::size_t k = 1; k <= t.depth; ++k) scale[k] = scale[k - 1] * (n + 1);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!t.internal(i)) continue;
    const Rational step(1, scale[t.level(i)]);
    f[t.child(i, 0)] = f[i] - step;
    for (std::size_t c = 1; c < t.branching; ++c) f[t.child(i, c)] = f[i] + static_cast<long long>(c) * step;
  }
  return f;
}

Verdict verifyEmbedding(const LabeledTree& t, const std::vector<Rational>& f) {
  if (f.size() != t.size()) return Verdict::fail("embedding does not cover the tree");
  auto sorted = f;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return Verdict::fail("embedding is not injective");

  std::vector<Rational> lo(f), hi(f);
  for (std::size_t i = t.size(); i-- > 0;) {
    if (!t.internal(i)) continue;
    std::vector<std::pair<Rational, Rational>> ranges;
    for (std::size_t c = 0; c < t.branching; ++c) {
      auto k = t.child(i, c);
      lo[i] = std::min(lo[i], lo[k]);
      hi[i] = std::max(hi[i], hi[k]);
      ranges.emplace_back(lo[k], hi[k]);
      if (lo[k] <= f[i] && f[i] <= hi[k])
        return Verdict::fail("subtree of child " + std::to_string(k) + " covers the value of node " + std::to_string(i));
    }
    std::sort(ranges.begin(), ranges.end());
    for (std::size_t j = 1; j < ranges.size(); ++j)
      if (!(ranges[j - 1].second < ranges[j].first))
        return Verdict::fail("sibling subtrees of node " + std::to_string(i) + " overlap");
  }
  return Verdict::pass();
}

std::string formatRational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace topohl
