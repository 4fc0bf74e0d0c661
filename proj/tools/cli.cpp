#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "topohl/bisim.hpp"
#include "topohl/construct.hpp"
#include "topohl/game.hpp"
#include "topohl/io.hpp"
#include "topohl/oracle.hpp"

namespace topohl::cli {

namespace {

class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string readFile(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text << (text.empty() || text.back() == '\n' ? "" : "\n");
  else
    writeFile(path, text);
}

struct Options {
  std::string formula, cls = "t0", model, point, witness, out, quasi, left, right, relation, transcript;
  std::vector<std::string> sigma;
  std::size_t oracleMax = 0, branching = 2, depth = 3;
  long long root = 0;
  bool prepared = false, total = false, hybrid = false, tree = false, embed = false, strategy = false;
};

std::string idsOf(const FiniteSpace& s, PointSet set) { return formatSet(set, s.pointIds()); }

int cmdParse(const Options& o, std::ostream& out) {
  Formula f = parse(o.formula);
  out << f.toString() << "\n";
  out << "connectives: " << connectiveCount(f) << "  depth: " << f.depth() << "\n";
  if (o.prepared) out << "prepared: " << prepareTarget(f).toString() << "\n";
  return 0;
}

int cmdCheck(const Options& o, std::ostream& out) {
  TopoModel m = modelFromJson(readFile(o.model));
  if (auto v = validateModel(m); !v) throw InputError("invalid model: " + v.reason);
  Formula f = parse(o.formula);
  if (!o.point.empty()) {
    Point w;
    try {
      w = m.space.indexOf(std::stoll(o.point));
    } catch (const std::exception&) {
      throw InputError("unknown point " + o.point);
    }
    bool t = checkTruth(m, w, f);
    out << (t ? "true" : "false") << "\n";
    return t ? 0 : 1;
  }
  PointSet ext = extension(m, f);
  out << "extension: " << idsOf(m.space, ext) << "\n";
  return ext == m.space.points() ? 0 : 1;
}

void printStrategy(const SolveResult& r, std::ostream& out) {
  const Strategy& s = *r.strategy;
  const Universe& u = *s.universe;
  out << "strategy: " << s.nodes.size() << " positions over " << s.sets.size() << " sets\n";
  for (std::size_t k = 0; k < s.sets.size(); ++k) out << "  H" << k << " = " << s.sets[k].toString() << "\n";
  for (std::size_t n = 0; n < s.nodes.size(); ++n)
    for (const auto& rep : s.nodes[n].replies) {
      out << "  node " << n << " (H" << s.nodes[n].set << ") " << u.formula(rep.diamond).toString() << " -> H" << rep.response;
      if (rep.kind == Strategy::Reply::Kind::Named) out << " (named)";
      if (rep.kind == Strategy::Reply::Kind::Repeat) out << " (repeat)";
      if (rep.child) out << " node " << *rep.child;
      out << "\n";
    }
}

int cmdSat(const Options& o, std::ostream& out, std::ostream& err) {
  Formula phi = parse(o.formula);
  RepClass cls = resolveClass(o.cls, phi);
  auto r = solve(phi, cls);
  out << (r.sat ? "SAT" : "UNSAT") << " (" << className(cls) << ")\n";
  out << "hintikka sets: " << r.stats.hintikkaSets << "  contexts: " << r.stats.contexts << "\n";
  if (r.sat) {
    out << "witness: " << r.witness->size() << " points\n";
    if (o.strategy) printStrategy(r, out);
    if (!o.witness.empty()) writeFile(o.witness, quasiModelToJson(*r.witness));
  }
  if (o.oracleMax > 0) {
    auto v = bruteForceSat(phi, cls, o.oracleMax);
    out << "oracle (<= " << v.bound << " points): " << (v.sat() ? "SAT" : "none") << "\n";
    if (v.sat() && !r.sat) {
      err << "oracle disagrees: found a quasi-model for an UNSAT verdict\n";
      return 2;
    }
  }
  return r.sat ? 0 : 1;
}

int cmdValid(const Options& o, std::ostream& out) {
  Formula phi = parse(o.formula);
  RepClass cls = resolveClass(o.cls, phi);
  auto r = solve(Formula::neg(phi), cls);
  out << (r.sat ? "NOT VALID" : "VALID") << " (" << className(cls) << ")\n";
  if (r.sat && !o.witness.empty()) writeFile(o.witness, quasiModelToJson(*r.witness));
  return r.sat ? 1 : 0;
}

int cmdFiltrate(const Options& o, std::ostream& out) {
  TopoModel m = modelFromJson(readFile(o.model));
  if (auto v = validateModel(m); !v) throw InputError("invalid model: " + v.reason);
  std::vector<Formula> fs;
  for (const auto& s : o.sigma) fs.push_back(parse(s));
  if (fs.empty()) throw InputError("filtrate needs at least one --sigma formula");
  auto f = filtrate(m, subformulaClosure(fs));
  out << "classes: " << f.model.size() << "\n";
  for (Point w = 0; w < m.size(); ++w)
    out << "  " << m.space.pointIds()[w] << " -> " << f.model.space.pointIds()[f.projection[w]] << "\n";
  if (!o.out.empty()) writeFile(o.out, modelToJson(f.model));
  return 0;
}

int cmdBisim(const Options& o, std::ostream& out) {
  TopoModel a = modelFromJson(readFile(o.left));
  TopoModel b = modelFromJson(readFile(o.right));
  for (const auto* m : {&a, &b})
    if (auto v = validateModel(*m); !v) throw InputError("invalid model: " + v.reason);
  if (!o.relation.empty()) {
    auto r = relationFromJson(readFile(o.relation), a.space, b.space);
    auto v = verifyTopobisimulation(a, b, r, o.total, o.hybrid);
    out << (v ? "topobisimulation" : "not a topobisimulation: " + v.reason) << "\n";
    return v ? 0 : 1;
  }
  auto l = largestHybridBisimulation(a, b);
  out << relationToJson(l.relation, a.space, b.space) << "\n";
  out << "total: " << (l.total ? "yes" : "no") << "  hybrid: " << (l.hybrid ? "yes" : "no") << "\n";
  bool ok = l.relation.pairCount() > 0 && (!o.total || l.total) && (!o.hybrid || l.hybrid);
  return ok ? 0 : 1;
}

int cmdWitness(const Options& o, std::ostream& out) {
  QuasiModel q;
  RepClass cls;
  if (!o.quasi.empty()) {
    q = quasiModelFromJson(readFile(o.quasi));
    cls = resolveClass(o.cls, q.target);
    if (auto v = checkQuasiModel(q, cls); !v) throw InputError("invalid quasi-model: " + v.reason);
  } else {
    Formula phi = parse(o.formula);
    cls = resolveClass(o.cls, phi);
    auto r = solve(phi, cls);
    if (!r.sat) {
      out << "UNSAT (" << className(cls) << "): no witness\n";
      return 1;
    }
    q = *r.witness;
  }
  TopoModel rep = modelFromQuasi(q);
  SymbolicModel s = cls == RepClass::T1 ? symbolicWitnessT1(rep) : symbolicWitnessT0(rep);
  auto v = verifySymbolic(s);
  emit(o.out, symbolicToJson(s), out);
  out << "verifySymbolic: " << (v ? "ok" : v.reason) << "\n";
  return v ? 0 : 1;
}

int cmdExportDot(const Options& o, std::ostream& out) {
  if (o.tree) {
    TopoModel m = modelFromJson(readFile(o.model));
    Point root = m.space.indexOf(o.root);
    auto t = unravelToFullTree(m, root, o.branching, o.depth);
    std::vector<Rational> values;
    if (o.embed) values = rationalEmbed(t);
    emit(o.out, treeToDot(t, m, values), out);
    return 0;
  }
  if (!o.quasi.empty()) {
    emit(o.out, quasiModelToDot(quasiModelFromJson(readFile(o.quasi))), out);
    return 0;
  }
  if (o.model.empty()) throw InputError("export-dot needs --model or --quasi");
  emit(o.out, modelToDot(modelFromJson(readFile(o.model))), out);
  return 0;
}

int cmdValidateQuasi(const Options& o, std::ostream& out) {
  QuasiModel q = quasiModelFromJson(readFile(o.quasi));
  RepClass cls = resolveClass(o.cls, q.target);
  auto v = checkQuasiModel(q, cls);
  out << (v ? "valid " + std::string(className(cls)) + " quasi-model" : "invalid: " + v.reason) << "\n";
  return v ? 0 : 1;
}

void printBoard(const GameState& g, std::ostream& out) {
  out << "board:\n";
  for (std::size_t k = 0; k < g.board.size(); ++k)
    out << "  [" << k << "]" << (k < g.initialCount ? "*" : " ") << " " << g.board[k].toString() << "\n";
}

std::string joinRules(const std::vector<std::string>& rules) {
  std::string s;
  for (const auto& r : rules) s += (s.empty() ? "" : " ") + r;
  return s;
}

int cmdGame(const Options& o, std::istream& in, std::ostream& out) {
  Formula phi = parse(o.formula);
  RepClass cls = resolveClass(o.cls, phi);
  auto r = solve(phi, cls);
  nlohmann::json transcript = nlohmann::json::array();
  auto save = [&] {
    if (!o.transcript.empty()) writeFile(o.transcript, transcript.dump(2));
  };
  if (!r.sat) {
    out << "UNSAT (" << className(cls) << "): Eloise has no winning strategy, no game is played\n";
    save();
    return 1;
  }
  const QuasiModel& q = *r.witness;
  GameState g = startGame(r.target, cls, policyOpening(q));
  const Universe& u = *g.universe;
  out << "target: " << r.target.toString() << "\n";
  out << "Eloise opens with " << g.initialCount << " set(s): (root) (init-nom) (init-diamond) (init-univ) "
      << (cls == RepClass::T0 ? "(init-cycles)" : "(no-incoming)") << "\n";
  transcript.push_back({{"player", "eloise"}, {"opening", [&] {
                          std::vector<std::string> sets;
                          for (const auto& s : g.board) sets.push_back(s.toString());
                          return sets;
                        }()}});
  while (!g.over()) {
    printBoard(g, out);
    std::vector<std::pair<std::size_t, std::size_t>> options;
    std::vector<std::size_t> sources;
    if (g.lastIndex)
      sources.push_back(*g.lastIndex);
    else
      for (std::size_t k = 0; k < g.initialCount; ++k) sources.push_back(k);
    for (auto src : sources)
      for (auto d : u.diamonds())
        if (g.board[src].has(d)) options.emplace_back(src, d);
    out << "challenges:\n";
    for (std::size_t k = 0; k < options.size(); ++k)
      out << "  " << k << ") set [" << options[k].first << "] " << u.formula(options[k].second).toString() << "\n";
    out << "abelard> " << std::flush;
    std::string line;
    if (!std::getline(in, line)) {
      out << "\nno move; game abandoned\n";
      save();
      return 0;
    }
    line.erase(0, line.find_first_not_of(" \t"));
    if (line == "quit" || line == "q") {
      save();
      return 0;
    }
    AbelardMove move{0, Formula::prop("p")};
    try {
      std::size_t pos = 0;
      std::size_t k = std::stoul(line, &pos);
      std::string rest = line.substr(pos);
      rest.erase(0, rest.find_first_not_of(" \t"));
      if (rest.empty()) {
        if (k >= options.size()) throw std::out_of_range("no such challenge");
        move = {options[k].first, u.formula(options[k].second)};
      } else {
        // typed formulas are read in the normal form the board uses
        move = {k, normalizeToDiamond(eliminateAt(parse(rest)))};
      }
    } catch (const ParseError& e) {
      out << "illegal move (malformed): " << e.what() << "\n";
      continue;
    } catch (const std::exception&) {
      out << "illegal move (malformed): enter a challenge number or 'SET FORMULA'\n";
      continue;
    }
    MoveResult a;
    try {
      a = applyMove(g, move);
    } catch (const GameError& e) {
      out << "illegal move " << e.what() << "\n";
      continue;
    }
    transcript.push_back({{"player", "abelard"}, {"source", move.source}, {"challenge", move.diamond.toString()},
                          {"rules", a.rules}});
    if (a.state.over()) {
      out << "repeated challenge: forced response [" << *a.state.lastIndex << "] " << a.state.board[*a.state.lastIndex].toString()
          << "  " << joinRules(a.rules) << "\n";
      g = a.state;
      break;
    }
    HintikkaSet reply = eloisePolicy(q, a.state);
    MoveResult e = applyMove(a.state, EloiseMove{reply});
    out << "eloise plays " << reply.toString() << "  " << joinRules(e.rules) << "\n";
    transcript.push_back({{"player", "eloise"}, {"response", reply.toString()}, {"rules", e.rules},
                          {"violation", e.violation}});
    g = e.state;
  }
  out << (g.status == GameStatus::EloiseWon ? "Eloise wins: " : "Abelard wins: ") << g.reason << "\n";
  transcript.push_back({{"result", g.status == GameStatus::EloiseWon ? "eloise" : "abelard"}, {"reason", g.reason}});
  save();
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topological semantics of hybrid logic: model checking, satisfiability games, constructions",
               "topohl"};
  app.require_subcommand(1);
  Options o;
  auto classOpt = [&](CLI::App* c) {
    c->add_option("--class", o.cls, "t0, t1, t2 (same as t1) or all (nominal-free formulas)")->capture_default_str();
  };

  auto* parseCmd = app.add_subcommand("parse", "Parse and print a formula");
  parseCmd->add_option("formula", o.formula)->required();
  parseCmd->add_flag("--prepared", o.prepared, "Also print the form the game works on");

  auto* checkCmd = app.add_subcommand("check", "Model-check a formula");
  checkCmd->add_option("--model", o.model, "Model JSON")->required();
  checkCmd->add_option("--point", o.point, "Point id; without it the formula must hold everywhere");
  checkCmd->add_option("formula", o.formula)->required();

  auto* satCmd = app.add_subcommand("sat", "Decide satisfiability on the given class");
  satCmd->add_option("formula", o.formula)->required();
  classOpt(satCmd);
  satCmd->add_option("--witness", o.witness, "Write the quasi-model witness as JSON");
  satCmd->add_option("--oracle-max", o.oracleMax, "Cross-check with exhaustive search up to N points");
  satCmd->add_flag("--strategy", o.strategy, "Print Eloise's winning strategy");

  auto* validCmd = app.add_subcommand("valid", "Decide validity (satisfiability of the negation)");
  validCmd->add_option("formula", o.formula)->required();
  classOpt(validCmd);
  validCmd->add_option("--witness", o.witness, "Write a countermodel quasi-model as JSON");

  auto* filtrateCmd = app.add_subcommand("filtrate", "Filtrate a model through the closure of some formulas");
  filtrateCmd->add_option("--model", o.model, "Model JSON")->required();
  filtrateCmd->add_option("--sigma", o.sigma, "Formula whose subformulas join sigma (repeatable)")->required();
  filtrateCmd->add_option("--out", o.out, "Write the filtrated model as JSON");

  auto* bisimCmd = app.add_subcommand("bisim", "Check a topobisimulation or compute the largest one");
  bisimCmd->add_option("--left", o.left, "Left model JSON")->required();
  bisimCmd->add_option("--right", o.right, "Right model JSON")->required();
  bisimCmd->add_option("--relation", o.relation, "Relation JSON to verify");
  bisimCmd->add_flag("--total", o.total, "Require totality");
  bisimCmd->add_flag("--hybrid", o.hybrid, "Require the hybrid condition");

  auto* witnessCmd = app.add_subcommand("witness", "Build and verify the symbolic infinite model");
  witnessCmd->add_option("formula", o.formula);
  witnessCmd->add_option("--quasi", o.quasi, "Start from a quasi-model JSON instead of a formula");
  classOpt(witnessCmd);
  witnessCmd->add_option("--out", o.out, "Write the symbolic model JSON here instead of stdout");

  auto* gameCmd = app.add_subcommand("game", "Play Abelard against the machine's Eloise");
  gameCmd->add_option("formula", o.formula)->required();
  classOpt(gameCmd);
  gameCmd->add_option("--transcript", o.transcript, "Write the play as JSON");

  auto* dotCmd = app.add_subcommand("export-dot", "Graphviz output for models, quasi-models and trees");
  dotCmd->add_option("--model", o.model, "Model JSON");
  dotCmd->add_option("--quasi", o.quasi, "Quasi-model JSON");
  dotCmd->add_flag("--tree", o.tree, "Unravel --model from --root into a full tree");
  dotCmd->add_option("--root", o.root, "Root point id for --tree");
  dotCmd->add_option("--branching", o.branching, "Tree branching")->capture_default_str();
  dotCmd->add_option("--depth", o.depth, "Tree depth")->capture_default_str();
  dotCmd->add_flag("--embed", o.embed, "Annotate tree nodes with their rational embedding");
  dotCmd->add_option("--out", o.out, "Output file (default stdout)");

  auto* vqCmd = app.add_subcommand("validate-quasi", "Check a quasi-model JSON file");
  vqCmd->add_option("file", o.quasi)->required();
  classOpt(vqCmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*parseCmd) return cmdParse(o, out);
    if (*checkCmd) return cmdCheck(o, out);
    if (*satCmd) return cmdSat(o, out, err);
    if (*validCmd) return cmdValid(o, out);
    if (*filtrateCmd) return cmdFiltrate(o, out);
    if (*bisimCmd) return cmdBisim(o, out);
    if (*witnessCmd) {
      if (o.formula.empty() == o.quasi.empty()) throw InputError("witness needs a formula or --quasi, not both");
      return cmdWitness(o, out);
    }
    if (*gameCmd) return cmdGame(o, in, out);
    if (*dotCmd) return cmdExportDot(o, out);
    if (*vqCmd) return cmdValidateQuasi(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ConstructError& e) {
    err << "construction failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace topohl::cli
