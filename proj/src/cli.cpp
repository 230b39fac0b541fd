// Copyright 2026 The lcpnash Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lcpnash/cli.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lcpnash/document.hpp"
#include "lcpnash/errors.hpp"
#include "lcpnash/lemke.hpp"
#include "lcpnash/oracle.hpp"
#include "lcpnash/pipeline.hpp"
#include "lcpnash/recovery.hpp"
#include "lcpnash/reduction.hpp"

namespace lcpnash {

namespace {

using json = nlohmann::ordered_json;

struct Settings {
  std::string file;
  std::string d_file;
  std::string beta;
  std::vector<std::string> x;
  int decimal = -1;
  std::size_t max_support = 12;
  unsigned threads = 1;
  bool trace = false;
  bool as_json = false;
};

class Printer {
 public:
  explicit Printer(int decimal) : decimal_(decimal) {}

  std::string operator()(const Rational& r) const {
    return decimal_ < 0 ? to_string(r) : to_string(r) + " (~" + to_decimal(r, decimal_) + ")";
  }

  std::string operator()(const Vector& v) const {
    if (decimal_ < 0) return to_string(v);
    std::string approx = "[";
    for (std::size_t i = 0; i < v.size(); ++i) approx += (i ? ", " : "") + to_decimal(v[i], decimal_);
    return to_string(v) + " (~" + approx + "])";
  }

  std::string ray(const SecondaryRay& r) const {
    return "vertex=(" + to_string(r.vertex.z0) + "," + to_string(r.vertex.z) + ") direction=(" +
           std::to_string(r.direction.u0) + "," + to_string(r.direction.u) + ")" +
           (decimal_ < 0 ? "" : " vertex z ~ " + (*this)(r.vertex.z));
  }

  std::string direction(const SecondaryDirection& d) const {
    return "(" + std::to_string(d.u0) + ", " + (*this)(d.u) + ")";
  }

  void matrix(std::ostream& out, const std::string& title, const Matrix& m) const {
    out << title << " =\n";
    for (std::size_t i = 0; i < m.rows(); ++i) out << "  " << to_string(m.row(i)) << "\n";
  }

 private:
  int decimal_;
};

json jvec(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json jmat(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(jvec(m.row(i)));
  return a;
}

json jbasis(const Basis& b) {
  json a = json::array();
  for (const Var& v : b) a.push_back(v.name());
  return a;
}

json jdir(const SecondaryDirection& d) { return {{"u0", d.u0}, {"u", jvec(d.u)}}; }

json jray(const SecondaryRay& r) {
  return {{"vertex", {{"z0", to_string(r.vertex.z0)}, {"z", jvec(r.vertex.z)}}},
          {"basis", jbasis(r.basis)},
          {"direction", jdir(r.direction)}};
}

json jclass(const EquilibriumClassification& c) {
  json j = {{"tag", to_string(c.tag)}};
  if (const auto* z = std::get_if<Vector>(&c.payload)) j["z"] = jvec(*z);
  if (const auto* r = std::get_if<SecondaryRay>(&c.payload)) j["ray"] = jray(*r);
  if (const auto* d = std::get_if<SecondaryDirection>(&c.payload)) j["direction"] = jdir(*d);
  return j;
}

std::string class_text(const Printer& p, const EquilibriumClassification& c) {
  std::string s = to_string(c.tag);
  if (const auto* z = std::get_if<Vector>(&c.payload)) s += " z = " + p(*z);
  if (const auto* r = std::get_if<SecondaryRay>(&c.payload)) s += " " + p.ray(*r);
  if (const auto* d = std::get_if<SecondaryDirection>(&c.payload)) s += " " + p.direction(*d);
  return s;
}

ExtendedInstance load_instance(const Settings& s, std::optional<Rational>& beta) {
  InstanceDocument doc = load_document(s.file);
  if (!s.d_file.empty()) doc.d = load_covering(s.d_file);
  beta = doc.beta;
  if (!s.beta.empty()) {
    try {
      beta = parse_rational(s.beta);
    } catch (const std::invalid_argument& e) {
      throw ParseError("--beta: " + std::string(e.what()));
    }
  }
  return doc.instance();
}

int cmd_lemke(const Settings& s, std::ostream& out) {
  std::optional<Rational> beta;
  const ExtendedInstance ext = load_instance(s, beta);
  const Printer p(s.decimal);
  const LemkeOutcome o = lemke_solve(ext);
  const int code = o.status == LemkeStatus::Ray ? kExitRay : kExitOk;
  if (s.as_json) {
    json j = {{"command", "lemke"}};
    j["status"] = o.status == LemkeStatus::Ray ? "RAY" : o.status == LemkeStatus::Solved ? "SOLVED" : "TRIVIAL";
    if (o.ray) j["ray"] = jray(*o.ray);
    else j["z"] = jvec(o.solution);
    if (s.trace) {
      json path = json::array();
      for (const auto& step : o.path)
        path.push_back({{"entering", step.entering.name()},
                        {"leaving", step.leaving.name()},
                        {"basis", jbasis(step.basis_after)},
                        {"z0", to_string(step.vertex_after.z0)},
                        {"z", jvec(step.vertex_after.z)}});
      j["path"] = path;
    }
    out << j.dump(2) << "\n";
    return code;
  }
  if (s.trace) {
    for (std::size_t k = 0; k < o.path.size(); ++k) {
      const auto& step = o.path[k];
      out << "step " << k + 1 << ": enter " << step.entering.name() << ", leave " << step.leaving.name()
          << ", basis " << to_string(step.basis_after) << ", z0 = " << p(step.vertex_after.z0)
          << ", z = " << p(step.vertex_after.z) << "\n";
    }
  }
  switch (o.status) {
    case LemkeStatus::Trivial: out << "TRIVIAL z = " << p(o.solution) << "\n"; break;
    case LemkeStatus::Solved: out << "SOLVED z = " << p(o.solution) << "\n"; break;
    case LemkeStatus::Ray: out << "RAY " << p.ray(*o.ray) << "\n"; break;
  }
  return code;
}

int cmd_reduce(const Settings& s, std::ostream& out) {
  std::optional<Rational> beta;
  const ExtendedInstance ext = load_instance(s, beta);
  const Printer p(s.decimal);
  const SymmetricGame basic = build_game_basic(ext.base());
  const FullReduction red = reduce_full(ext, beta);
  if (s.as_json) {
    json j = {{"command", "reduce"},
              {"basic_game", jmat(basic.cost())},
              {"scaled_M", jmat(red.scaled.scaled.M())},
              {"scaled_q", jvec(red.scaled.scaled.q())},
              {"beta", to_string(red.augmented.beta)},
              {"M_tilde", jmat(red.augmented.m_tilde())},
              {"q_tilde", jvec(red.augmented.q_tilde())},
              {"full_game", jmat(red.game.cost())}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  p.matrix(out, "C(q, M)", basic.cost());
  if (ext.d() != Vector::ones(ext.dim())) {
    p.matrix(out, "scaled M", red.scaled.scaled.M());
    out << "scaled q = " << p(red.scaled.scaled.q()) << "\n";
  }
  out << "beta = " << p(red.augmented.beta) << "\n";
  p.matrix(out, "M~", red.augmented.m_tilde());
  out << "q~ = " << p(red.augmented.q_tilde()) << "\n";
  p.matrix(out, "full game C", red.game.cost());
  return kExitOk;
}

int cmd_solve_game(const Settings& s, std::ostream& out) {
  const SymmetricGame game = load_game(s.file);
  const Printer p(s.decimal);
  const auto eqs = enumerate_sne(game, {s.max_support, s.threads});
  if (s.as_json) {
    json list = json::array();
    for (const auto& e : eqs)
      list.push_back({{"x", jvec(e.profile.x)}, {"value", to_string(e.profile.value)}, {"isolated", e.isolated}});
    out << json{{"command", "solve-game"}, {"equilibria", list}}.dump(2) << "\n";
    return kExitOk;
  }
  out << "equilibria: " << eqs.size() << "\n";
  for (const auto& e : eqs) {
    out << "x = " << p(e.profile.x) << " value = " << p(e.profile.value) << (e.isolated ? "" : " (vertex of a component)")
        << "\n";
  }
  return kExitOk;
}

int cmd_pipeline(const Settings& s, std::ostream& out) {
  std::optional<Rational> beta;
  const ExtendedInstance ext = load_instance(s, beta);
  const Printer p(s.decimal);
  PipelineOptions opts;
  opts.beta = beta;
  opts.max_strategies = s.max_support;
  opts.threads = s.threads;
  const PipelineReport r = run_pipeline(ext, opts);

  auto resolved_text = [&](const Resolution& res) {
    if (const auto* z = std::get_if<Vector>(&res)) return "SOLVED z = " + p(*z);
    return "RAY " + p.ray(std::get<SecondaryRay>(res));
  };
  if (s.as_json) {
    json j = {{"command", "pipeline"}, {"trivial", r.trivial}};
    if (r.trivial) j["z"] = jvec(Vector::zeros(ext.dim()));
    if (r.epsilon) {
      j["epsilon"] = to_string(*r.epsilon);
      j["d"] = jvec(r.instance.d());
    }
    if (!r.trivial) j["beta"] = to_string(r.beta);
    json list = json::array();
    for (const auto& e : r.entries) {
      json item = {{"x", jvec(e.equilibrium.profile.x)},
                   {"value", to_string(e.equilibrium.profile.value)},
                   {"isolated", e.equilibrium.isolated},
                   {"classification", jclass(e.classification)}};
      if (e.resolved) {
        if (const auto* z = std::get_if<Vector>(&*e.resolved)) item["resolved"] = {{"z", jvec(*z)}};
        else item["resolved"] = {{"ray", jray(std::get<SecondaryRay>(*e.resolved))}};
      }
      list.push_back(item);
    }
    j["equilibria"] = list;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (r.trivial) {
    out << "TRIVIAL z = " << p(Vector::zeros(ext.dim())) << "\n";
    return kExitOk;
  }
  if (r.epsilon) {
    out << "degenerate type-1 direction: retried with epsilon = " << to_string(*r.epsilon)
        << ", d = " << p(r.instance.d()) << "\n";
  }
  out << "beta = " << p(r.beta) << "\n";
  out << "equilibria: " << r.entries.size() << "\n";
  for (const auto& e : r.entries) {
    out << "x = " << p(e.equilibrium.profile.x) << " value = " << p(e.equilibrium.profile.value) << ": "
        << class_text(p, e.classification);
    if (e.resolved) out << " -> " << resolved_text(*e.resolved);
    out << "\n";
  }
  return kExitOk;
}

int cmd_classify(const Settings& s, std::ostream& out) {
  std::optional<Rational> beta;
  const ExtendedInstance ext = load_instance(s, beta);
  const Printer p(s.decimal);
  const FullReduction red = reduce_full(ext, beta);
  Vector x(s.x.size());
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    try {
      x[i] = parse_rational(s.x[i]);
    } catch (const std::invalid_argument& e) {
      throw ParseError("--x: " + std::string(e.what()));
    }
  }
  const EquilibriumClassification c = classify_equilibrium(ext, red, make_profile(red.game, x));
  if (s.as_json) {
    out << json{{"command", "classify"}, {"beta", to_string(red.augmented.beta)}, {"classification", jclass(c)}}.dump(2)
        << "\n";
  } else {
    out << class_text(p, c) << "\n";
  }
  return kExitOk;
}

int cmd_audit(const Settings& s, std::ostream& out) {
  std::optional<Rational> beta;
  const ExtendedInstance ext = load_instance(s, beta);
  PipelineOptions opts;
  opts.beta = beta;
  opts.max_strategies = s.max_support;
  opts.threads = s.threads;
  const AuditReport r = audit(ext, opts);
  const int code = r.passed() ? kExitOk : kExitAuditMismatch;
  if (s.as_json) {
    json list = json::array();
    for (const auto& c : r.checks) list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out << json{{"command", "audit"}, {"passed", r.passed()}, {"checks", list}}.dump(2) << "\n";
    return code;
  }
  for (const auto& c : r.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  out << (r.passed() ? "AUDIT PASS" : "AUDIT FAIL") << "\n";
  return code;
}

int cmd_oracle(const Settings& s, std::ostream& out) {
  std::optional<Rational> beta;
  const ExtendedInstance ext = load_instance(s, beta);
  const Printer p(s.decimal);
  const PolyhedronSkeleton sk = enumerate_skeleton(ext);
  const SolutionSet sol = enumerate_solutions(ext.base());
  const DirectionSet dirs = enumerate_directions(ext);
  if (s.as_json) {
    json vertices = json::array(), edges = json::array(), rays = json::array(), sols = json::array();
    for (const auto& v : sk.vertices) {
      json bases = json::array();
      for (const auto& b : v.bases) bases.push_back(jbasis(b));
      vertices.push_back({{"z0", to_string(v.point.z0)}, {"z", jvec(v.point.z)}, {"bases", bases},
                          {"complementary", v.complementary}});
    }
    for (const auto& e : sk.edges)
      edges.push_back({{"from", e.from}, {"to", e.to}, {"entering", e.entering.name()}, {"leaving", e.leaving.name()}});
    for (const auto& r : sk.rays)
      rays.push_back({{"vertex", r.vertex}, {"entering", r.entering.name()}, {"direction", jdir(r.direction)},
                      {"complementary", r.complementary}});
    for (const auto& z : sol.points) sols.push_back(jvec(z));
    json t0 = json::array(), t1 = json::array();
    for (const auto& d : dirs.type0) t0.push_back(jdir(d));
    for (const auto& d : dirs.type1) t1.push_back(jdir(d));
    out << json{{"command", "oracle"},
                {"skeleton", {{"nondegenerate", sk.nondegenerate}, {"vertices", vertices}, {"edges", edges}, {"rays", rays}}},
                {"solutions", {{"degenerate", sol.degenerate}, {"points", sols}}},
                {"directions", {{"degenerate", dirs.degenerate}, {"type0", t0}, {"type1", t1}}}}
                .dump(2)
        << "\n";
    return kExitOk;
  }
  out << "vertices: " << sk.vertices.size() << (sk.nondegenerate ? "" : " (degenerate)") << "\n";
  for (std::size_t i = 0; i < sk.vertices.size(); ++i) {
    const auto& v = sk.vertices[i];
    out << "  #" << i << " z0 = " << p(v.point.z0) << " z = " << p(v.point.z) << " bases";
    for (const auto& b : v.bases) out << " " << to_string(b);
    out << (v.complementary ? " complementary" : "") << "\n";
  }
  out << "edges: " << sk.edges.size() << "\n";
  for (const auto& e : sk.edges)
    out << "  #" << e.from << " -> #" << e.to << " enter " << e.entering.name() << " leave " << e.leaving.name() << "\n";
  out << "rays: " << sk.rays.size() << "\n";
  for (const auto& r : sk.rays) {
    out << "  #" << r.vertex << " enter " << r.entering.name() << " direction " << p.direction(r.direction)
        << (r.complementary ? " complementary" : "") << "\n";
  }
  out << "solutions: " << sol.points.size() << (sol.degenerate ? " (degenerate pieces)" : "") << "\n";
  for (const auto& z : sol.points) out << "  " << p(z) << "\n";
  out << "type-0 directions: " << dirs.type0.size() << "\n";
  for (const auto& d : dirs.type0) out << "  " << p.direction(d) << "\n";
  out << "type-1 directions: " << dirs.type1.size() << "\n";
  for (const auto& d : dirs.type1) out << "  " << p.direction(d) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact LCP solving by Lemke pivoting and by symmetric game reduction"};
  app.require_subcommand(1);
  Settings s;

  struct Command {
    const char* name;
    const char* help;
    std::function<int(const Settings&, std::ostream&)> run;
  };
  const std::vector<Command> commands = {
      {"lemke", "run Lemke's algorithm on an instance", cmd_lemke},
      {"reduce", "print the game matrices built from an instance", cmd_reduce},
      {"solve-game", "enumerate symmetric equilibria of a game file", cmd_solve_game},
      {"pipeline", "solve an instance through the game reduction", cmd_pipeline},
      {"classify", "classify one profile of the full game", cmd_classify},
      {"audit", "check Lemke and the pipeline against the oracle", cmd_audit},
      {"oracle", "brute-force vertices, rays, solutions and directions", cmd_oracle},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("file", s.file, "instance (or game) JSON file")->required();
    sub->add_flag("--json", s.as_json, "machine-readable output");
    sub->add_option("--decimal", s.decimal, "append k-digit decimal approximations")->check(CLI::Range(0, 1000));
    const std::string name = c.name;
    if (name != "solve-game") sub->add_option("--d-file", s.d_file, "covering vector file");
    if (name == "lemke") sub->add_flag("--trace", s.trace, "print every pivot");
    if (name == "reduce" || name == "pipeline" || name == "classify" || name == "audit")
      sub->add_option("--beta", s.beta, "override the vertex bound beta");
    if (name == "pipeline" || name == "audit" || name == "solve-game") {
      sub->add_option("--max-support", s.max_support, "largest game for support enumeration");
      sub->add_option("--threads", s.threads, "support enumeration workers (0 = all cores)");
    }
    if (name == "classify") sub->add_option("--x", s.x, "profile entries")->required()->delimiter(',');
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (std::size_t i = 0; i < commands.size(); ++i)
      if (subs[i]->parsed()) return commands[i].run(s, out);
  } catch (const ParseError& e) {
    err << "parse error";
    if (e.line() > 0) err << " at line " << e.line() << ", column " << e.column();
    err << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegeneracyError& e) {
    err << "degeneracy error: " << e.what() << "\n";
    return kExitDegeneracy;
  } catch (const SizeError& e) {
    err << "size error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lcpnash
