#include <CLI11.hpp>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "folia/io.hpp"
#include "folia/ledger.hpp"
#include "folia/parser.hpp"

using namespace folia;

namespace {

struct Options {
  bool json = false;
  bool strict = false;
  std::string dot;
  unsigned max_depth = kDefaultMaxDepth;
  unsigned cap = kDefaultTruncationCap;
  std::string expr;
  std::string input;
  std::string at;
  std::string curve;
  unsigned orbifold_order = 1;
  std::vector<std::string> curves;
  std::string classify;
  bool nef_model = false;
  bool kodaira = false;
};

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

// What a subcommand produces: a JSON result, text lines, and checks.
struct Outcome {
  Json input;
  Json result = Json::object();
  std::vector<std::string> text;
  std::vector<Check> checks;
  std::vector<std::string> warnings;
};

bool color_enabled() {
  const char* v = std::getenv("FOLIA_COLOR");
  if (!v) return false;
  std::string s(v);
  if (s == "1" || s == "always" || s == "true") return true;
  if (s == "auto") return isatty(fileno(stdout));
  return false;
}

std::string verdict(bool pass) {
  if (!color_enabled()) return pass ? "PASS" : "FAIL";
  return pass ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomically(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

std::string expression_text(const Options& o) {
  if (!o.expr.empty() && !o.input.empty())
    throw Error(ErrorKind::InvalidArgument, "give either --expr or an input file, not both");
  if (!o.expr.empty()) return o.expr;
  if (o.input.empty()) throw Error(ErrorKind::InvalidArgument, "missing input: --expr or a file");
  std::string s = read_file(o.input);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

Json json_input(const Options& o) {
  if (o.input.empty()) throw Error(ErrorKind::InvalidArgument, "missing input: a JSON file or inline JSON");
  std::string text = o.input.front() == '{' ? o.input : read_file(o.input);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::SchemaError, std::string("invalid JSON: ") + e.what());
  }
}

Point parse_point(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::InvalidArgument, "point must be 'z,w'");
  auto trim = [](std::string t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    return t;
  };
  try {
    return {Rat::parse(trim(s.substr(0, comma))), Rat::parse(trim(s.substr(comma + 1)))};
  } catch (const Error&) {
    throw Error(ErrorKind::InvalidArgument, "point coordinates must be rationals: " + s);
  }
}

// Scalar polynomial given as text, parsed through the same grammar.
BiPoly parse_polynomial(const std::string& text) {
  auto ast = parse_ast("(" + text + ")*dz");
  return ast.terms.front().coefficient->eval();
}

ParsedFoliation read_foliation(const Options& o, Outcome& out) {
  std::string text = expression_text(o);
  ParsedFoliation pf = parse_foliation(text);
  out.input["expression"] = text;
  out.input["form"] = pf.one_form ? "one-form" : "vector-field";
  out.input["P"] = pf.germ.P().str();
  out.input["Q"] = pf.germ.Q().str();
  for (const auto& w : pf.warnings) out.warnings.push_back(w);
  out.text.push_back("foliation: " + print_foliation(pf.germ));
  return pf;
}

// ---------------------------------------------------------------------------

Outcome run_analyze(const Options& o) {
  Outcome out;
  ParsedFoliation pf = read_foliation(o, out);
  SingularLocus loc = singular_locus(pf.germ);
  Json pts = Json::array();
  out.text.push_back("singular points:");
  if (loc.points.empty()) out.text.push_back("  none with rational coordinates");
  for (const auto& p : loc.points) {
    SingClass c = classify_point(pf.germ, p);
    pts.push_back(Json{{"point", to_json(p)}, {"class", to_json(c)}});
    out.text.push_back("  " + p.str() + "  " + describe(c));
  }
  Json res = Json::array();
  for (const auto& r : loc.residual) {
    res.push_back(to_json(r));
    out.text.push_back("residual system: " + r.str());
  }
  out.result["singular_points"] = pts;
  out.result["residual"] = res;
  return out;
}

Outcome run_reduce(const Options& o) {
  Outcome out;
  ParsedFoliation pf = read_foliation(o, out);
  Point base = o.at.empty() ? kOrigin : parse_point(o.at);
  FoliationGerm germ = pf.germ.at(base);
  BlowupTree tree = reduce_seidenberg(germ, o.max_depth);
  out.result["tree"] = to_json(tree);
  out.text.push_back("base point: " + base.str() + "  " + describe(tree.root_class));
  out.text.push_back("blow-ups: " + std::to_string(tree.events.size()));
  for (const auto& c : tree.curves)
    out.text.push_back("  " + c.name() + "  self-int " + c.self_intersection.str() + "  " +
                       (c.invariant ? "invariant" : "dicritical"));
  bool all_reduced = true;
  if (!tree.events.empty()) out.text.push_back("leaf points:");
  for (auto [e, p] : tree.leaves()) {
    const SpecialPoint& sp = tree.events[e].points[p];
    all_reduced = all_reduced && is_reduced(sp.cls);
    std::string on;
    for (const auto& c : sp.curves) on += (on.empty() ? "" : ",") + ("E" + std::to_string(c.curve));
    out.text.push_back("  " + sp.id + "  " + describe(sp.cls) + "  on " + on);
  }
  for (const auto& ev : tree.events)
    for (const auto& r : ev.non_rational) out.warnings.push_back("E" + std::to_string(ev.curve) + ": non-rational centre " + r.str());
  out.checks.push_back({"leaves reduced", all_reduced && tree.complete,
                        tree.complete ? "" : "reduction stopped at non-rational centres"});
  if (tree.complete && !tree.events.empty()) {
    SurfaceModel m = ledger_to_surface(tree, o.cap);
    out.result["surface"] = to_json(m);
    for (const auto& c : m.curves) {
      if (!c.invariant || !c.singularities) continue;
      CsReport r = verify_camacho_sad(c.id, m);
      out.checks.push_back({"Camacho-Sad " + c.id, r.pass(),
                            "sum " + r.sum.str() + ", self-int " + r.self_intersection.str()});
    }
  }
  if (!o.dot.empty()) {
    write_atomically(o.dot, to_dot(tree));
    out.result["dot"] = o.dot;
    out.text.push_back("dual graph written to " + o.dot);
  }
  return out;
}

Outcome run_indices(const Options& o) {
  Outcome out;
  ParsedFoliation pf = read_foliation(o, out);
  if (o.curve.empty()) throw Error(ErrorKind::InvalidArgument, "--curve is required");
  BiPoly f = parse_polynomial(o.curve);
  if (f.is_constant()) throw Error(ErrorKind::InvalidArgument, "curve equation is constant");
  const FoliationGerm& g = pf.germ;
  BiPoly vf = g.apply(f);
  bool invariant = f.divides(vf);
  out.input["curve"] = f.str();
  out.result["invariant"] = invariant;
  out.text.push_back("curve: " + f.str() + (invariant ? "  (invariant)" : "  (not invariant)"));

  std::vector<Point> points;
  if (!o.at.empty()) {
    points.push_back(parse_point(o.at));
    if (!f.eval(points[0]).is_zero()) throw Error(ErrorKind::InvalidArgument, "curve does not pass through " + o.at);
  } else if (invariant) {
    for (const auto& p : singular_locus(g).points)
      if (f.eval(p).is_zero()) points.push_back(p);
  } else {
    BiPoly common = gcd(f, vf);
    if (!common.is_constant())
      throw Error(ErrorKind::CurveIsInvariant, "component " + common.str() + " of the curve is invariant");
    SingularLocus loc = singular_locus(FoliationGerm(f, vf));
    points = loc.points;
    for (const auto& r : loc.residual) out.warnings.push_back("tangencies at non-rational points: " + r.str());
  }

  Json recs = Json::array();
  if (invariant) {
    Rat zsum(0), cssum(0);
    for (const auto& p : points) {
      CurveIndices ix = invariant_curve_indices(g, f, p, "C", o.cap);
      zsum += ix.z.value;
      cssum += ix.cs.value;
      recs.push_back(Json{{"point", to_json(p)}, {"branches", ix.branches.size()},
                          {"Z", ix.z.value.num().get_si()}, {"CS", ix.cs.value.str()}});
      out.text.push_back("  " + p.str() + "  Z = " + ix.z.value.str() + "  CS = " + ix.cs.value.str() +
                         (ix.branches.size() == 2 ? "  (node)" : ""));
    }
    out.result["records"] = recs;
    out.result["Z_total"] = zsum.num().get_si();
    out.result["CS_total"] = cssum.str();
    out.text.push_back("total: Z = " + zsum.str() + "  CS = " + cssum.str());
  } else {
    Rat tsum(0);
    for (const auto& p : points) {
      Rat t = tang_index(g, f, p, o.orbifold_order);
      tsum += t;
      recs.push_back(Json{{"point", to_json(p)}, {"tang", t.str()}, {"orbifold_order", o.orbifold_order}});
      out.text.push_back("  " + p.str() + "  tang = " + t.str());
    }
    out.result["records"] = recs;
    out.result["tang_total"] = tsum.str();
    out.text.push_back("total: tang = " + tsum.str());
  }
  return out;
}

Scene read_scene(const Options& o, Outcome& out) {
  SchemaPolicy pol{o.strict, &out.warnings};
  Scene s = scene_from_json(json_input(o), pol);
  out.input["curves"] = s.model.size();
  return s;
}

Outcome run_verify(const Options& o) {
  Outcome out;
  Scene s = read_scene(o, out);
  const SurfaceModel& m = s.model;
  std::vector<std::string> ids = o.curves.empty() ? sorted_ids(m) : o.curves;
  Json per = Json::array();
  for (const auto& id : ids) {
    const Curve& c = m.curve(id);
    Json cj;
    cj["id"] = id;
    std::string line = id + ":";
    ChiOrbReport chi = chi_orb_report(id, m);
    if (chi.direct) cj["chi_orb"] = chi.direct->str();
    if (chi.adjunction) cj["chi_orb_adjunction"] = chi.adjunction->str();
    if (chi.direct && chi.adjunction)
      out.checks.push_back({"adjunction " + id, chi.consistent(),
                            "direct " + chi.direct->str() + ", adjunction " + chi.adjunction->str()});
    try {
      KfReport kf = kf_degree_report(id, m);
      cj["kf_degree"] = kf.degree.str();
      line += "  K_F.C = " + kf.degree.str();
      if (kf.positivity) {
        cj["positivity"] = kf.positivity->str();
        cj["transverse"] = kf.transverse;
        out.checks.push_back({"tangency positivity " + id, kf.positivity->sign() >= 0 && (kf.positivity->is_zero() == kf.transverse),
                              "(K_F + C).C = " + kf.positivity->str()});
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::MissingIndices && e.kind() != ErrorKind::InsufficientData &&
          e.kind() != ErrorKind::InconsistentModel)
        throw;
      cj["kf_degree"] = nullptr;
      line += "  K_F.C unavailable (" + e.detail() + ")";
      if (o.strict || e.kind() == ErrorKind::InconsistentModel) out.checks.push_back({"K_F degree " + id, false, e.detail()});
    }
    if (c.invariant) {
      try {
        CsReport r = verify_camacho_sad(id, m);
        cj["cs_sum"] = r.sum.str();
        cj["cs_residual"] = r.residual.str();
        line += "  CS sum " + r.sum.str() + " vs C.C " + r.self_intersection.str();
        out.checks.push_back({"Camacho-Sad " + id, r.pass(), "residual " + r.residual.str()});
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::MissingIndices) throw;
        line += "  CS unavailable";
        if (o.strict) out.checks.push_back({"Camacho-Sad " + id, false, e.detail()});
      }
    }
    per.push_back(cj);
    out.text.push_back(line);
  }
  out.result["curves"] = per;

  if (o.nef_model) {
    NefModelResult nm = nef_model(m);
    out.result["nef_model"] = Json{{"contracted", nm.contracted}, {"model", to_json(nm.model)}};
    Json inc = Json::array();
    for (const auto& [id, why] : nm.inconsistencies) inc.push_back(Json{{"curve", id}, {"reason", why}});
    out.result["nef_model"]["inconsistencies"] = inc;
    std::string seq;
    for (const auto& id : nm.contracted) seq += (seq.empty() ? "" : ", ") + id;
    out.text.push_back("nef model: contracted " + (seq.empty() ? std::string("nothing") : seq));
    out.checks.push_back({"nef model reached", nm.inconsistencies.empty(),
                          nm.inconsistencies.empty() ? "" : nm.inconsistencies.front().second});
  }
  if (!o.classify.empty()) {
    std::vector<std::string> comp;
    std::stringstream ss(o.classify);
    for (std::string id; std::getline(ss, id, ',');)
      if (!id.empty()) comp.push_back(id);
    auto cls = classify_component(comp, m);
    out.result["component_case"] = cls ? Json(std::string(1, *cls)) : Json(nullptr);
    out.text.push_back("component case: " + (cls ? std::string(1, *cls) : std::string("none")));
  }
  out.text.push_back("(nef and negativity verdicts are relative to the curves in the scene)");
  return out;
}

Outcome run_zariski(const Options& o) {
  Outcome out;
  Scene s = read_scene(o, out);
  if (!s.divisor) throw Error(ErrorKind::SchemaError, "scene has no \"divisor\" to decompose");
  const SurfaceModel& m = s.model;
  out.input["divisor"] = to_json(*s.divisor);
  out.text.push_back("L = " + s.divisor->str());
  ZariskiDecomposition z = zariski_decompose(*s.divisor, m);
  out.result["positive"] = to_json(z.positive);
  out.result["negative"] = to_json(z.negative);
  out.result["support"] = z.support;
  Json gram = Json::array();
  for (const auto& row : z.gram) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.str());
    gram.push_back(r);
  }
  out.result["gram"] = gram;
  Json resid = Json::array();
  for (const auto& x : z.residuals) resid.push_back(x.str());
  out.result["residuals"] = resid;
  out.text.push_back("P = " + z.positive.str());
  out.text.push_back("N = " + z.negative.str());
  bool orth = std::all_of(z.residuals.begin(), z.residuals.end(), [](const Rat& r) { return r.is_zero(); });
  out.checks.push_back({"N effective", z.negative.is_zero() || z.negative.is_effective(), ""});
  out.checks.push_back({"Gram negative definite", z.gram.empty() || is_negative_definite(z.gram), ""});
  out.checks.push_back({"P orthogonal to Supp N", orth, ""});
  NefResult nef = is_nef(z.positive, m);
  out.checks.push_back({"P nef (model-relative)", nef.nef, nef.witness ? "P." + *nef.witness + " < 0" : ""});
  if (o.kodaira) {
    int nu = numerical_kodaira(*s.divisor, m);
    out.result["numerical_kodaira"] = nu;
    out.text.push_back("numerical Kodaira dimension of L: " + std::to_string(nu));
  }
  return out;
}

Outcome run_riccati(const Options& o) {
  Outcome out;
  SchemaPolicy pol{o.strict, &out.warnings};
  Json j = json_input(o);
  FibreModelInput in = fibre_model_from_json(j, pol);
  out.input = j;
  if (in.riccati) {
    Rat chi = base_chi_orb(*in.riccati);
    Rat deg = pushforward_degree(*in.riccati);
    Kodaira kod = kodaira_from_degree(deg);
    out.result["chi_orb"] = chi.str();
    out.result["degree"] = deg.str();
    out.result["kod"] = to_string(kod);
    out.text.push_back("chi_orb(B) = " + chi.str());
    out.text.push_back("deg pi_* K_F = " + deg.str());
    out.text.push_back("kod = " + to_string(kod));
  } else {
    Rat chi = contribution_chi_orb(*in.contributions);
    Rat deg = contribution_degree(*in.contributions);
    out.result["mode"] = "contribution sum (user-supplied contributions)";
    out.result["chi_orb"] = chi.str();
    out.result["degree"] = deg.str();
    out.result["kod"] = to_string(kodaira_from_degree(deg));
    out.text.push_back("contribution sum (user-supplied contributions)");
    out.text.push_back("chi_orb(B) = " + chi.str());
    out.text.push_back("-chi_orb(B) + sum of contributions = " + deg.str());
    out.text.push_back("sign trichotomy: " + to_string(kodaira_from_degree(deg)));
  }
  return out;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotDecomposable:
    case ErrorKind::NotNef:
    case ErrorKind::InconsistentModel:
    case ErrorKind::DepthExceeded:
    case ErrorKind::TreeIncomplete:
    case ErrorKind::InsufficientTruncation:
    case ErrorKind::NotContractible:
      return 1;
    default:
      return 2;
  }
}

int emit(const std::string& command, const Outcome& out, const Options& o) {
  bool ok = std::all_of(out.checks.begin(), out.checks.end(), [](const Check& c) { return c.pass; });
  if (o.json) {
    Json j;
    j["command"] = command;
    j["status"] = ok ? "ok" : "check-failed";
    j["input"] = out.input;
    j["result"] = out.result;
    Json checks = Json::array();
    for (const auto& c : out.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = checks;
    j["warnings"] = out.warnings;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& w : out.warnings) std::cerr << "warning: " << w << "\n";
    for (const auto& line : out.text) std::cout << line << "\n";
    if (!out.checks.empty()) std::cout << "checks:\n";
    for (const auto& c : out.checks)
      std::cout << "  " << verdict(c.pass) << "  " << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
  }
  return ok ? 0 : 1;
}

int emit_error(const std::string& command, const Error& e, const Options& o) {
  int code = exit_code_for(e.kind());
  if (o.json) {
    Json err;
    err["kind"] = std::string(to_string(e.kind()));
    err["message"] = e.detail();
    if (auto* pe = dynamic_cast<const ParseError*>(&e)) err["offset"] = pe->offset();
    Json j;
    j["command"] = command;
    j["status"] = code == 1 ? "check-failed" : "input-error";
    j["error"] = err;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cerr << "error: " << e.what() << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"folia: exact analysis of singular holomorphic foliations on surfaces"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool expression) {
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_flag("--strict", o.strict, "reject unknown JSON fields, missing versions and missing indices");
    sub->add_option("input", o.input, expression ? "file holding the expression" : "JSON file or inline JSON object");
    if (expression) sub->add_option("--expr", o.expr, "foliation as P*d/dz + Q*d/dw or A*dz + B*dw");
  };

  auto* analyze = app.add_subcommand("analyze", "singular locus and classification");
  common(analyze, true);
  auto* reduce = app.add_subcommand("reduce", "Seidenberg reduction by blow-ups");
  common(reduce, true);
  reduce->add_option("--at", o.at, "base point 'z,w' (default origin)");
  reduce->add_option("--max-depth", o.max_depth, "depth cap")->check(CLI::PositiveNumber);
  reduce->add_option("--dot", o.dot, "write the dual graph in DOT form");
  reduce->add_option("--truncation-cap", o.cap, "series truncation cap")->check(CLI::PositiveNumber);
  auto* indices = app.add_subcommand("indices", "tang, Z and CS indices along a curve");
  common(indices, true);
  indices->add_option("--curve", o.curve, "curve equation f(z, w)")->required();
  indices->add_option("--at", o.at, "single point 'z,w'");
  indices->add_option("--orbifold-order", o.orbifold_order, "orbifold order k for tang")->check(CLI::PositiveNumber);
  indices->add_option("--truncation-cap", o.cap, "series truncation cap")->check(CLI::PositiveNumber);
  auto* verify = app.add_subcommand("verify", "index formula checks on a scene");
  common(verify, false);
  verify->add_option("--curve", o.curves, "restrict to these curves");
  verify->add_flag("--nef-model", o.nef_model, "contract K_F-negative curves");
  verify->add_option("--classify", o.classify, "comma-separated component to classify");
  auto* zariski = app.add_subcommand("zariski", "Zariski decomposition of the scene divisor");
  common(zariski, false);
  zariski->add_flag("--kodaira", o.kodaira, "numerical Kodaira dimension of the divisor");
  auto* riccati = app.add_subcommand("riccati", "Riccati direct-image degree and Kodaira dimension");
  common(riccati, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string name = app.get_subcommands().front()->get_name();
  try {
    Outcome out;
    if (name == "analyze") out = run_analyze(o);
    else if (name == "reduce") out = run_reduce(o);
    else if (name == "indices") out = run_indices(o);
    else if (name == "verify") out = run_verify(o);
    else if (name == "zariski") out = run_zariski(o);
    else out = run_riccati(o);
    return emit(name, out, o);
  } catch (const Error& e) {
    return emit_error(name, e, o);
  } catch (const std::exception& e) {
    Error wrapped(ErrorKind::InvalidArgument, e.what());
    return emit_error(name, wrapped, o);
  }
}
