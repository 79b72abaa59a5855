#pragma once

#include <json.hpp>

#include <climits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "folia/blowup.hpp"
#include "folia/models.hpp"
#include "folia/surface.hpp"

namespace folia {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// ---------------------------------------------------------------------------
// scalars

inline Json to_json(const Rat& r) { return r.str(); }
inline Json to_json(const Point& p) { return Json::array({p.z.str(), p.w.str()}); }

inline Rat rat_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) {
    try {
      return Rat::parse(j.get<std::string>());
    } catch (const Error&) {
    }
  }
  throw Error(ErrorKind::SchemaError, where + ": expected an integer or a \"p/q\" string");
}

inline long long int_from_json(const Json& j, const std::string& where, long long min) {
  if (!j.is_number_integer() || j.get<long long>() < min)
    throw Error(ErrorKind::SchemaError, where + ": expected an integer >= " + std::to_string(min));
  return j.get<long long>();
}

inline std::vector<unsigned> orders_from_json(const Json& j, const std::string& where, long long min) {
  if (!j.is_array()) throw Error(ErrorKind::SchemaError, where + ": expected an array");
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(static_cast<unsigned>(int_from_json(j[i], where + "[" + std::to_string(i) + "]", min)));
  return out;
}

// Strict objects reject unknown keys; lenient ones collect them as warnings.
struct SchemaPolicy {
  bool strict = false;
  std::vector<std::string>* warnings = nullptr;
};

inline void check_keys(const Json& j, const std::string& where, std::initializer_list<const char*> allowed,
                       const SchemaPolicy& pol) {
  if (!j.is_object()) throw Error(ErrorKind::SchemaError, where + ": expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items()) {
    if (ok.count(k)) continue;
    if (pol.strict) throw Error(ErrorKind::SchemaError, where + ": unknown field \"" + k + "\"");
    if (pol.warnings) pol.warnings->push_back(where + ": ignored unknown field \"" + k + "\"");
  }
}

inline void check_version(const Json& j, const std::string& where, const SchemaPolicy& pol) {
  if (!j.contains("version")) {
    if (pol.strict) throw Error(ErrorKind::SchemaError, where + ": missing \"version\"");
    return;
  }
  if (int_from_json(j["version"], where + ".version", 0) != kFormatVersion)
    throw Error(ErrorKind::SchemaError, where + ": unsupported version");
}

// ---------------------------------------------------------------------------
// germs and blow-up trees

inline Json to_json(const FoliationGerm& g) {
  Json j;
  j["P"] = g.P().str();
  j["Q"] = g.Q().str();
  j["base"] = to_json(g.base());
  return j;
}

inline Json to_json(const SingClass& c) {
  Json j;
  j["description"] = describe(c);
  if (std::holds_alternative<NonSingular>(c)) {
    j["type"] = "nonsingular";
  } else if (auto* r = std::get_if<ReducedNonDegenerate>(&c)) {
    j["type"] = "reduced-nondegenerate";
    if (r->ratio) j["lambda"] = r->ratio->str();
    j["ratio_sum"] = r->ratio_sum.str();
    j["discriminant"] = r->discriminant.str();
  } else if (auto* s = std::get_if<ReducedSaddleNode>(&c)) {
    j["type"] = "saddle-node";
    j["k"] = s->multiplicity;
  } else {
    const auto& n = std::get<NonReduced>(c);
    j["type"] = "non-reduced";
    j["reason"] = n.reason == NonReduced::Reason::RatioInQPlus ? "ratio-in-Q+"
                  : n.reason == NonReduced::Reason::Nilpotent  ? "nilpotent"
                                                               : "zero-linear-part";
    if (n.ratio) j["ratio"] = n.ratio->str();
  }
  return j;
}

inline Json to_json(const ResidualFactor& r) {
  Json j;
  j["factor"] = r.fixed_z ? r.factor.str('w') : r.factor.str('z');
  if (r.fixed_z) j["z"] = r.fixed_z->str();
  return j;
}

inline Json to_json(const BlowupTree& t) {
  Json j;
  j["root"] = to_json(t.root);
  j["root_class"] = to_json(t.root_class);
  j["complete"] = t.complete;
  Json curves = Json::array();
  for (const auto& c : t.curves) {
    Json cj;
    cj["id"] = c.name();
    cj["self_intersection"] = c.self_intersection.str();
    cj["invariant"] = c.invariant;
    cj["event"] = c.event;
    curves.push_back(cj);
  }
  j["curves"] = curves;
  Json events = Json::array();
  for (const auto& ev : t.events) {
    Json ej;
    ej["curve"] = "E" + std::to_string(ev.curve);
    ej["parent"] = ev.parent ? Json{{"event", ev.parent->first}, {"point", ev.parent->second}} : Json(nullptr);
    ej["depth"] = ev.depth;
    ej["multiplicity"] = ev.multiplicity;
    ej["dicritical"] = ev.dicritical;
    ej["chart1"] = to_json(ev.chart1);
    ej["chart2"] = to_json(ev.chart2);
    Json pts = Json::array();
    for (const auto& p : ev.points) {
      Json pj;
      pj["id"] = p.id;
      pj["chart"] = p.chart;
      pj["coords"] = to_json(p.coords);
      pj["class"] = to_json(p.cls);
      Json through = Json::array();
      for (const auto& c : p.curves) through.push_back("E" + std::to_string(c.curve));
      pj["curves"] = through;
      pj["germ"] = to_json(p.germ);
      pj["child"] = p.child ? Json(*p.child) : Json(nullptr);
      pts.push_back(pj);
    }
    ej["points"] = pts;
    Json nr = Json::array();
    for (const auto& r : ev.non_rational) nr.push_back(to_json(r));
    ej["non_rational_centres"] = nr;
    Json it = Json::array();
    for (const auto& r : ev.irrational_tangency) it.push_back(to_json(r));
    ej["irrational_tangency"] = it;
    events.push_back(ej);
  }
  j["events"] = events;
  Json edges = Json::array();
  for (auto [a, b, n] : dual_graph_edges(t))
    edges.push_back(Json::array({"E" + std::to_string(a), "E" + std::to_string(b), n}));
  j["dual_graph"] = edges;
  return j;
}

// Dual graph of the exceptional curves in DOT form.
inline std::string to_dot(const BlowupTree& t) {
  std::ostringstream os;
  os << "graph dual {\n  node [shape=ellipse];\n";
  for (const auto& c : t.curves)
    os << "  " << c.name() << " [label=\"" << c.name() << "\\nself-int " << c.self_intersection.str() << "\\n"
       << (c.invariant ? "invariant" : "dicritical") << "\"" << (c.invariant ? "" : ", style=dashed") << "];\n";
  for (auto [a, b, n] : dual_graph_edges(t)) {
    os << "  E" << a << " -- E" << b;
    if (n > 1) os << " [label=\"" << n << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// scenes

struct Scene {
  SurfaceModel model;
  std::optional<QDivisor> divisor;
};

inline Json to_json(const SingularityRecord& r) {
  Json j;
  j["point"] = r.point;
  if (r.z) j["Z"] = *r.z;
  if (r.cs) j["CS"] = r.cs->str();
  if (r.tang) j["tang"] = r.tang->str();
  return j;
}

inline Json to_json(const QDivisor& d) {
  Json j = Json::object();
  for (const auto& [id, c] : d.terms()) j[id] = c.str();
  return j;
}

inline Json to_json(const SurfaceModel& m, const std::optional<QDivisor>& divisor = std::nullopt) {
  Json j;
  j["version"] = kFormatVersion;
  Json curves = Json::array();
  for (const auto& c : m.curves) {
    Json cj;
    cj["id"] = c.id;
    if (c.genus) cj["genus"] = *c.genus;
    cj["nodes"] = c.nodes;
    cj["invariant"] = c.invariant;
    cj["orbifold_orders"] = c.orbifold_orders;
    if (c.singularities) {
      Json rs = Json::array();
      for (const auto& r : *c.singularities) rs.push_back(to_json(r));
      cj["singularities"] = rs;
    }
    if (c.kx_degree) cj["kx_degree"] = c.kx_degree->str();
    curves.push_back(cj);
  }
  j["curves"] = curves;
  Json tri = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k <= i; ++k) row.push_back(m.matrix[i][k].str());
    tri.push_back(row);
  }
  j["intersection"] = tri;
  if (divisor) j["divisor"] = to_json(*divisor);
  return j;
}

inline Scene scene_from_json(const Json& j, const SchemaPolicy& pol = {}) {
  check_keys(j, "scene", {"version", "curves", "intersection", "divisor"}, pol);
  check_version(j, "scene", pol);
  if (!j.contains("curves") || !j["curves"].is_array())
    throw Error(ErrorKind::SchemaError, "scene: \"curves\" must be an array");
  Scene s;
  const Json& cs = j["curves"];
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::string where = "curves[" + std::to_string(i) + "]";
    const Json& cj = cs[i];
    check_keys(cj, where, {"id", "genus", "nodes", "invariant", "orbifold_orders", "singularities", "kx_degree"}, pol);
    Curve c;
    if (!cj.contains("id") || !cj["id"].is_string()) throw Error(ErrorKind::SchemaError, where + ": missing string \"id\"");
    c.id = cj["id"].get<std::string>();
    if (cj.contains("genus")) {
      const Json& g = cj["genus"];
      if (g == "rational")
        c.genus = 0;
      else if (g == "elliptic")
        c.genus = 1;
      else
        c.genus = static_cast<int>(int_from_json(g, where + ".genus", 0));
    }
    if (cj.contains("nodes")) c.nodes = static_cast<int>(int_from_json(cj["nodes"], where + ".nodes", 0));
    if (cj.contains("invariant")) {
      if (!cj["invariant"].is_boolean()) throw Error(ErrorKind::SchemaError, where + ".invariant: expected a boolean");
      c.invariant = cj["invariant"].get<bool>();
    }
    if (cj.contains("orbifold_orders")) c.orbifold_orders = orders_from_json(cj["orbifold_orders"], where + ".orbifold_orders", 2);
    if (cj.contains("singularities")) {
      const Json& rs = cj["singularities"];
      if (!rs.is_array()) throw Error(ErrorKind::SchemaError, where + ".singularities: expected an array");
      std::vector<SingularityRecord> recs;
      for (std::size_t r = 0; r < rs.size(); ++r) {
        std::string rw = where + ".singularities[" + std::to_string(r) + "]";
        check_keys(rs[r], rw, {"point", "Z", "CS", "tang"}, pol);
        SingularityRecord rec;
        if (!rs[r].contains("point") || !rs[r]["point"].is_string())
          throw Error(ErrorKind::SchemaError, rw + ": missing string \"point\"");
        rec.point = rs[r]["point"].get<std::string>();
        if (rs[r].contains("Z")) {
          if (!rs[r]["Z"].is_number_integer()) throw Error(ErrorKind::SchemaError, rw + ".Z: expected an integer");
          rec.z = rs[r]["Z"].get<long>();
        }
        if (rs[r].contains("CS")) rec.cs = rat_from_json(rs[r]["CS"], rw + ".CS");
        if (rs[r].contains("tang")) {
          rec.tang = rat_from_json(rs[r]["tang"], rw + ".tang");
          if (rec.tang->sign() < 0) throw Error(ErrorKind::SchemaError, rw + ".tang: must be nonnegative");
        }
        recs.push_back(rec);
      }
      c.singularities = recs;
    }
    if (cj.contains("kx_degree")) c.kx_degree = rat_from_json(cj["kx_degree"], where + ".kx_degree");
    s.model.curves.push_back(c);
  }
  std::size_t n = s.model.size();
  if (!j.contains("intersection") || !j["intersection"].is_array() || j["intersection"].size() != n)
    throw Error(ErrorKind::SchemaError, "scene: \"intersection\" must be a lower triangle with one row per curve");
  s.model.matrix.assign(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = j["intersection"][i];
    if (!row.is_array() || row.size() != i + 1)
      throw Error(ErrorKind::SchemaError, "intersection[" + std::to_string(i) + "]: expected " + std::to_string(i + 1) + " entries");
    for (std::size_t k = 0; k <= i; ++k)
      s.model.matrix[i][k] = s.model.matrix[k][i] =
          rat_from_json(row[k], "intersection[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  try {
    s.model.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::SchemaError, e.what());
  }
  if (j.contains("divisor")) {
    const Json& d = j["divisor"];
    if (!d.is_object()) throw Error(ErrorKind::SchemaError, "divisor: expected an object");
    QDivisor q;
    for (const auto& [id, c] : d.items()) {
      if (!s.model.find(id)) throw Error(ErrorKind::SchemaError, "divisor: unknown curve \"" + id + "\"");
      q.set(id, rat_from_json(c, "divisor." + id));
    }
    s.divisor = q;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Riccati and contribution-list models

struct FibreModelInput {
  std::optional<RiccatiModel> riccati;
  std::optional<ContributionModel> contributions;
};

inline FibreModelInput fibre_model_from_json(const Json& j, const SchemaPolicy& pol = {}) {
  FibreModelInput in;
  if (j.is_object() && j.contains("contributions")) {
    check_keys(j, "model", {"version", "chi_top", "orbifold_orders", "contributions"}, pol);
    check_version(j, "model", pol);
    ContributionModel m;
    if (j.contains("chi_top")) m.chi_top = static_cast<long>(int_from_json(j["chi_top"], "chi_top", LLONG_MIN));
    if (j.contains("orbifold_orders")) m.orbifold_orders = orders_from_json(j["orbifold_orders"], "orbifold_orders", 2);
    if (!j["contributions"].is_array()) throw Error(ErrorKind::SchemaError, "contributions: expected an array");
    for (std::size_t i = 0; i < j["contributions"].size(); ++i)
      m.contributions.push_back(rat_from_json(j["contributions"][i], "contributions[" + std::to_string(i) + "]"));
    in.contributions = m;
    return in;
  }
  check_keys(j, "model", {"version", "chi_top", "b_orders", "c_count", "d_multiplicities", "e_multiplicities"}, pol);
  check_version(j, "model", pol);
  RiccatiModel m;
  if (!j.contains("chi_top")) throw Error(ErrorKind::SchemaError, "model: missing \"chi_top\"");
  m.chi_top = static_cast<long>(int_from_json(j["chi_top"], "chi_top", LLONG_MIN));
  if (j.contains("b_orders")) m.b_orders = orders_from_json(j["b_orders"], "b_orders", 2);
  if (j.contains("c_count")) m.c_count = static_cast<unsigned>(int_from_json(j["c_count"], "c_count", 0));
  if (j.contains("d_multiplicities")) m.d_multiplicities = orders_from_json(j["d_multiplicities"], "d_multiplicities", 1);
  if (j.contains("e_multiplicities")) m.e_multiplicities = orders_from_json(j["e_multiplicities"], "e_multiplicities", 1);
  in.riccati = m;
  return in;
}

inline Json to_json(const RiccatiModel& m) {
  Json j;
  j["version"] = kFormatVersion;
  j["chi_top"] = m.chi_top;
  j["b_orders"] = m.b_orders;
  j["c_count"] = m.c_count;
  j["d_multiplicities"] = m.d_multiplicities;
  j["e_multiplicities"] = m.e_multiplicities;
  return j;
}

}  // namespace folia
