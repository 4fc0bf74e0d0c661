#include "topohl/io.hpp"

#include <sstream>

#include "json.hpp"

namespace topohl {

using nlohmann::json;

namespace {

json parseDocument(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw FormatError(std::string("field '") + key + "' has the wrong type");
  }
}

PointSet toSet(const FiniteSpace& s, const std::vector<long long>& ids) {
  PointSet out = 0;
  for (auto id : ids) {
    try {
      out |= singleton(s.indexOf(id));
    } catch (const SpaceError& e) {
      throw FormatError(e.what());
    }
  }
  return out;
}

std::vector<long long> toIds(const FiniteSpace& s, PointSet set) {
  std::vector<long long> out;
  forEachPoint(set, [&](Point w) { out.push_back(s.pointIds()[w]); });
  return out;
}

FiniteSpace spaceFrom(const json& j) {
  auto ids = field<std::vector<long long>>(j, "points");
  if (ids.size() > kMaxPoints) throw FormatError("at most 64 points are supported");
  const std::size_t n = ids.size();
  // index lookup against the id list before the space exists
  FiniteSpace scratch = FiniteSpace::discrete(n);
  try {
    scratch.setPointIds(ids);
  } catch (const SpaceError& e) {
    throw FormatError(e.what());
  }
  auto sets = [&](const char* key) {
    std::vector<PointSet> out;
    for (const auto& member : field<std::vector<std::vector<long long>>>(j, key)) out.push_back(toSet(scratch, member));
    return out;
  };
  FiniteSpace s;
  try {
    if (j.contains("opens")) {
      s = FiniteSpace::fromOpens(n, sets("opens"));
    } else if (j.contains("preorder")) {
      Preorder p;
      p.succ.assign(n, 0);
      for (const auto& pair : field<std::vector<std::vector<long long>>>(j, "preorder")) {
        if (pair.size() != 2) throw FormatError("preorder pairs need two points");
        p.succ[scratch.indexOf(pair[0])] |= singleton(scratch.indexOf(pair[1]));
      }
      s = fromPreorder(p);
    } else if (j.contains("subbase")) {
      s = generateTopology(n, sets("subbase"));
    } else {
      throw FormatError("space needs 'opens', 'preorder' or 'subbase'");
    }
  } catch (const SpaceError& e) {
    throw FormatError(e.what());
  }
  s.setPointIds(std::move(ids));
  return s;
}

json spaceTo(const FiniteSpace& s) {
  json j;
  j["points"] = s.pointIds();
  json pairs = json::array();
  for (Point u = 0; u < s.size(); ++u)
    forEachPoint(s.minimalNeighborhood(u), [&](Point v) { pairs.push_back({s.pointIds()[u], s.pointIds()[v]}); });
  j["preorder"] = pairs;
  return j;
}

TopoModel modelFrom(const json& j) {
  TopoModel m;
  m.space = spaceFrom(j);
  if (j.contains("valuation"))
    for (const auto& [p, ids] : field<std::map<std::string, std::vector<long long>>>(j, "valuation"))
      m.props[p] = toSet(m.space, ids);
  if (j.contains("nominals"))
    for (const auto& [i, id] : field<std::map<std::string, long long>>(j, "nominals")) {
      try {
        m.noms[i] = m.space.indexOf(id);
      } catch (const SpaceError& e) {
        throw FormatError(std::string("nominal ") + i + ": " + e.what());
      }
    }
  return m;
}

json modelTo(const TopoModel& m) {
  json j = spaceTo(m.space);
  json val = json::object();
  for (const auto& [p, set] : m.props) val[p] = toIds(m.space, set);
  json noms = json::object();
  for (const auto& [i, w] : m.noms) noms[i] = m.space.pointIds()[w];
  j["valuation"] = val;
  j["nominals"] = noms;
  return j;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Arcs u -> v between distinct clusters that no third cluster mediates, plus
// the arcs inside each cluster.
std::vector<std::pair<Point, Point>> coverArcs(const FiniteSpace& s) {
  const auto& nb = s.neighborhoods();
  auto strictly = [&](Point u, Point v) { return member(nb[u], v) && !member(nb[v], u); };
  std::vector<std::pair<Point, Point>> out;
  for (Point u = 0; u < s.size(); ++u)
    for (Point v = 0; v < s.size(); ++v) {
      if (u == v || !member(nb[u], v)) continue;
      if (!strictly(u, v)) {
        out.emplace_back(u, v);
        continue;
      }
      bool mediated = false;
      for (Point w = 0; w < s.size() && !mediated; ++w) mediated = strictly(u, w) && strictly(w, v);
      if (!mediated) out.emplace_back(u, v);
    }
  return out;
}

std::string spaceDot(const FiniteSpace& s, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "digraph G {\n  rankdir=BT;\n  node [shape=box];\n";
  for (Point w = 0; w < s.size(); ++w)
    out << "  n" << w << " [label=" << quoted(std::to_string(s.pointIds()[w]) + ": " + labels[w]) << "];\n";
  for (auto [u, v] : coverArcs(s)) out << "  n" << u << " -> n" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

FiniteSpace spaceFromJson(const std::string& text) { return spaceFrom(parseDocument(text)); }
std::string spaceToJson(const FiniteSpace& s) { return spaceTo(s).dump(2); }

TopoModel modelFromJson(const std::string& text) { return modelFrom(parseDocument(text)); }
std::string modelToJson(const TopoModel& m) { return modelTo(m).dump(2); }

PointRelation relationFromJson(const std::string& text, const FiniteSpace& left, const FiniteSpace& right) {
  json j = parseDocument(text);
  PointRelation r(left.size(), right.size());
  for (const auto& pair : field<std::vector<std::vector<long long>>>(j, "pairs")) {
    if (pair.size() != 2) throw FormatError("relation pairs need two points");
    try {
      r.add(left.indexOf(pair[0]), right.indexOf(pair[1]));
    } catch (const SpaceError& e) {
      throw FormatError(e.what());
    }
  }
  return r;
}

std::string relationToJson(const PointRelation& r, const FiniteSpace& left, const FiniteSpace& right) {
  json pairs = json::array();
  for (auto [x, y] : r.pairs()) pairs.push_back({left.pointIds()[x], right.pointIds()[y]});
  return json{{"pairs", pairs}}.dump(2);
}

QuasiModel quasiModelFromJson(const std::string& text) {
  json j = parseDocument(text);
  QuasiModel q;
  q.space = spaceFrom(j);
  try {
    q.target = parse(field<std::string>(j, "target"));
  } catch (const ParseError& e) {
    throw FormatError(std::string("target: ") + e.what());
  }
  q.universe = Universe::of(q.target);
  auto labels = field<std::map<std::string, std::vector<std::string>>>(j, "labels");
  q.labels.resize(q.size());
  std::vector<bool> seen(q.size(), false);
  for (const auto& [key, members] : labels) {
    Point w;
    try {
      w = q.space.indexOf(std::stoll(key));
    } catch (const std::exception&) {
      throw FormatError("label for unknown point '" + key + "'");
    }
    std::vector<Formula> fs;
    try {
      for (const auto& m : members) fs.push_back(parse(m));
      q.labels[w] = HintikkaSet::fromFormulas(q.universe, fs);
    } catch (const std::exception& e) {
      throw FormatError("label of point " + key + ": " + e.what());
    }
    seen[w] = true;
  }
  for (Point w = 0; w < q.size(); ++w)
    if (!seen[w]) throw FormatError("point " + std::to_string(q.space.pointIds()[w]) + " has no label");
  return q;
}

std::string quasiModelToJson(const QuasiModel& q) {
  json j = spaceTo(q.space);
  j["target"] = q.target.toString();
  json labels = json::object();
  for (Point w = 0; w < q.size(); ++w) {
    std::vector<std::string> members;
    for (const auto& f : q.labels[w].members()) members.push_back(f.toString());
    labels[std::to_string(q.space.pointIds()[w])] = members;
  }
  j["labels"] = labels;
  return j.dump(2);
}

std::string symbolicToJson(const SymbolicModel& s) {
  json j;
  j["base"] = modelTo(s.baseRep);
  j["topology"] = s.topology == TopologyKind::T1Generated ? "T1-generated" : "T0-family";
  j["carrier"] = s.finite() ? "finite" : (s.topology == TopologyKind::T1Generated ? "N" : "prefix+N");
  j["prefix"] = s.prefix;
  json classes = json::array();
  for (Point k = 0; k < s.classes.size(); ++k) {
    const auto& c = s.classes[k];
    json d{{"point", s.baseRep.space.pointIds()[k]}};
    if (c.kind == ClassDescriptor::Kind::Singleton) {
      d["kind"] = "singleton";
      d["element"] = c.offset;
    } else {
      d["kind"] = "progression";
      d["offset"] = c.offset;
      d["stride"] = c.stride;
    }
    classes.push_back(d);
  }
  j["classes"] = classes;
  json basic = json::array();
  // preimages of the minimal neighborhoods already generate the topology
  for (auto o : s.baseRep.space.neighborhoods())
    basic.push_back(json{{"base", toIds(s.baseRep.space, o)}, {"removed", json::array()}});
  j["basicOpens"] = basic;
  j["removable"] = s.topology == TopologyKind::T1Generated ? "any finite set" : "finite sets above the prefix";
  return j.dump(2);
}

std::string treeToJson(const LabeledTree& t, const TopoModel& m, const std::vector<Rational>& values) {
  json nodes = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    json node{{"node", i}, {"level", t.level(i)}, {"label", m.space.pointIds()[t.labels[i]]}};
    if (!values.empty()) node["value"] = formatRational(values.at(i));
    nodes.push_back(node);
  }
  return json{{"branching", t.branching}, {"depth", t.depth}, {"nodes", nodes}}.dump(2);
}

std::string modelToDot(const TopoModel& m) {
  std::vector<std::string> labels(m.size());
  for (Point w = 0; w < m.size(); ++w) {
    std::string l;
    for (const auto& [p, set] : m.props)
      if (member(set, w)) l += (l.empty() ? "" : " ") + p;
    for (const auto& [i, v] : m.noms)
      if (v == w) l += (l.empty() ? "'" : " '") + i;
    labels[w] = l;
  }
  return spaceDot(m.space, labels);
}

std::string quasiModelToDot(const QuasiModel& q) {
  const Universe& u = *q.universe;
  std::vector<std::string> labels(q.size());
  for (Point w = 0; w < q.size(); ++w) {
    std::string l;
    for (std::size_t i = 0; i < u.size(); ++i) {
      auto op = u.formula(i).op();
      if (!q.labels[w].has(i) || !(op == Op::Prop || op == Op::Nom || op == Op::Dia)) continue;
      l += (l.empty() ? "" : ", ") + u.formula(i).toString();
    }
    labels[w] = l;
  }
  return spaceDot(q.space, labels);
}

std::string treeToDot(const LabeledTree& t, const TopoModel& m, const std::vector<Rational>& values) {
  std::ostringstream out;
  out << "digraph T {\n  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::string l = std::to_string(m.space.pointIds()[t.labels[i]]);
    if (!values.empty()) l += " @ " + formatRational(values.at(i));
    out << "  t" << i << " [label=" << quoted(l) << "];\n";
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.internal(i))
      for (std::size_t c = 0; c < t.branching; ++c) out << "  t" << i << " -> t" << t.child(i, c) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace topohl
