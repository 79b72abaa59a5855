#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "folia/germ.hpp"

namespace folia {

// An exceptional curve passing through a special point, with its local
// equation in coordinates centred at that point.
struct CurveThrough {
  int curve = 0;
  BiPoly equation;
};

// A point of an exceptional divisor that matters for the reduction: a
// singular point, a tangency point of a dicritical divisor, or a point where
// earlier exceptional curves cross it.
struct SpecialPoint {
  int chart = 1;              // 1: (z, w) = (x, xy), E = {x = 0}; 2: (z, w) = (xy, y), E = {y = 0}
  Point coords;               // in chart coordinates
  FoliationGerm germ;         // transformed germ, centred at this point
  std::vector<CurveThrough> curves;  // includes the divisor the point lies on
  SingClass cls = NonSingular{};
  std::optional<std::size_t> child;  // event that blew this point up
  std::string id;
};

struct BlowupEvent {
  int curve = 0;  // exceptional curve created (E1, E2, ...)
  std::optional<std::pair<std::size_t, std::size_t>> parent;  // (event, point) blown up; root otherwise
  unsigned depth = 1;
  unsigned multiplicity = 0;  // nu: order of the 1-form at the centre
  bool dicritical = false;
  FoliationGerm chart1;  // transformed germ in (x, y) with (z, w) = (x, xy)
  FoliationGerm chart2;  // transformed germ in (x, y) with (z, w) = (xy, y)
  std::vector<SpecialPoint> points;
  std::vector<ResidualFactor> non_rational;  // NonRationalCenter reports (chart 1 coordinate y)
  std::vector<ResidualFactor> irrational_tangency;  // dicritical divisor only
};

struct ExceptionalCurve {
  int id = 0;
  Rat self_intersection = Rat(-1);
  bool invariant = true;
  std::size_t event = 0;
  std::string name() const { return "E" + std::to_string(id); }
};

struct BlowupTree {
  FoliationGerm root;
  SingClass root_class = NonSingular{};
  std::vector<BlowupEvent> events;
  std::vector<ExceptionalCurve> curves;
  // every leaf special point is nonsingular or reduced and no centre was skipped
  bool complete = true;

  // Leaf special points (not blown up), as (event, point) indices.
  std::vector<std::pair<std::size_t, std::size_t>> leaves() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t e = 0; e < events.size(); ++e)
      for (std::size_t p = 0; p < events[e].points.size(); ++p)
        if (!events[e].points[p].child) out.emplace_back(e, p);
    return out;
  }
};

namespace detail {

inline BiPoly pull_chart1(const BiPoly& f) { return f.substitute(BiPoly::z(), BiPoly::z() * BiPoly::w()); }
inline BiPoly pull_chart2(const BiPoly& f) { return f.substitute(BiPoly::z() * BiPoly::w(), BiPoly::w()); }

// Strict transform of a curve through the centre.
inline BiPoly strict_transform(const BiPoly& g, int chart) {
  unsigned m = static_cast<unsigned>(g.order());
  BiPoly out;
  if (chart == 1)
    pull_chart1(g).divide_monomial(m, 0, out);
  else
    pull_chart2(g).divide_monomial(0, m, out);
  return out;
}

inline std::vector<Rat> merge_roots(std::vector<Rat> a, const std::vector<Rat>& b) {
  for (const auto& r : b)
    if (std::find(a.begin(), a.end(), r) == a.end()) a.push_back(r);
  std::sort(a.begin(), a.end());
  return a;
}

inline std::string point_id(int curve, int chart, const Point& p) {
  return "E" + std::to_string(curve) + ":c" + std::to_string(chart) + ":" + p.z.str() + "," + p.w.str();
}

}  // namespace detail

// Blows up the base point of a germ, tracking the given curves through it.
inline BlowupEvent blow_up(const FoliationGerm& germ_in, const std::vector<CurveThrough>& through,
                           int curve_id) {
  FoliationGerm germ = germ_in.centred();
  if (!germ.singular_at(kOrigin))
    throw Error(ErrorKind::NotSingularHere, germ_in.str() + " is regular at " + germ_in.base().str());
  BiPoly A = germ.A(), B = germ.B();
  int oa = A.order(), ob = B.order();
  unsigned nu = static_cast<unsigned>(oa < 0 ? ob : (ob < 0 ? oa : std::min(oa, ob)));
  BiPoly tangency = BiPoly::z() * A.homogeneous_part(nu) + BiPoly::w() * B.homogeneous_part(nu);

  BlowupEvent ev;
  ev.curve = curve_id;
  ev.multiplicity = nu;
  ev.dicritical = tangency.is_zero();
  unsigned e = nu + (ev.dicritical ? 1 : 0);

  BiPoly a1 = detail::pull_chart1(A), b1 = detail::pull_chart1(B);
  BiPoly c1a = a1 + BiPoly::w() * b1, c1b = BiPoly::z() * b1;
  BiPoly a2 = detail::pull_chart2(A), b2 = detail::pull_chart2(B);
  BiPoly c2a = BiPoly::w() * a2, c2b = BiPoly::z() * a2 + b2;
  BiPoly t1a, t1b, t2a, t2b;
  if (!c1a.divide_monomial(e, 0, t1a) || !c1b.divide_monomial(e, 0, t1b) ||
      !c2a.divide_monomial(0, e, t2a) || !c2b.divide_monomial(0, e, t2b))
    throw Error(ErrorKind::InvalidArgument, "pull-back not divisible by the expected power");
  ev.chart1 = FoliationGerm::from_one_form(t1a, t1b);
  ev.chart2 = FoliationGerm::from_one_form(t2a, t2b);

  // Special points in chart 1 lie on x = 0 at y = root; chart 2 adds the origin.
  const FoliationGerm& g1 = ev.chart1;
  const FoliationGerm& g2 = ev.chart2;
  std::vector<BiPoly> strict1, strict2;
  for (const auto& c : through) {
    strict1.push_back(detail::strict_transform(c.equation, 1));
    strict2.push_back(detail::strict_transform(c.equation, 2));
  }
  UPoly sing1 = gcd(g1.P().at_z(Rat(0)), g1.Q().at_z(Rat(0)));
  std::vector<Rat> ys;
  if (!sing1.is_zero() && sing1.degree() > 0) {
    ys = rational_roots(sing1);
    UPoly rest = strip_rational_roots(sing1);
    if (rest.degree() > 0) ev.non_rational.push_back({rest.monic(), Rat(0)});
  }
  if (ev.dicritical) {
    UPoly tan1 = g1.P().at_z(Rat(0));
    if (!tan1.is_zero() && tan1.degree() > 0) {
      ys = detail::merge_roots(ys, rational_roots(tan1));
      UPoly rest = strip_rational_roots(tan1);
      if (rest.degree() > 0) ev.irrational_tangency.push_back({rest.monic(), Rat(0)});
    }
  }
  for (const auto& s : strict1) {
    UPoly cr = s.at_z(Rat(0));
    if (!cr.is_zero() && cr.degree() > 0) ys = detail::merge_roots(ys, rational_roots(cr));
  }

  auto make_point = [&](int chart, const Point& pt, const FoliationGerm& g,
                        const std::vector<BiPoly>& strict) {
    SpecialPoint sp;
    sp.chart = chart;
    sp.coords = pt;
    sp.germ = g.at(pt).centred();
    sp.curves.push_back({curve_id, chart == 1 ? BiPoly::z() : BiPoly::w()});
    for (std::size_t k = 0; k < through.size(); ++k) {
      BiPoly local = strict[k].translate(pt);
      if (local.coeff(0, 0).is_zero()) sp.curves.push_back({through[k].curve, local});
    }
    sp.cls = classify_point(sp.germ, kOrigin);
    sp.id = detail::point_id(curve_id, chart, pt);
    return sp;
  };

  for (const auto& y : ys) ev.points.push_back(make_point(1, {Rat(0), y}, g1, strict1));

  // the one point of E not seen by chart 1
  bool special2 = g2.singular_at(kOrigin);
  if (ev.dicritical && g2.Q().eval(kOrigin).is_zero()) special2 = true;
  for (const auto& s : strict2)
    if (s.eval(kOrigin).is_zero()) special2 = true;
  if (special2) ev.points.push_back(make_point(2, kOrigin, g2, strict2));
  return ev;
}

// Blows up a germ at its base point with no previously tracked curves.
inline BlowupEvent blow_up(const FoliationGerm& germ) { return blow_up(germ, {}, 1); }

inline constexpr unsigned kDefaultMaxDepth = 32;

// Blows up non-reduced singular points breadth-first (ordered by depth, then
// chart, then coordinates) until only reduced singularities remain.
inline BlowupTree reduce_seidenberg(const FoliationGerm& germ, unsigned max_depth = kDefaultMaxDepth) {
  BlowupTree tree;
  tree.root = germ;
  FoliationGerm root = germ.centred();
  tree.root_class = classify_point(root, kOrigin);
  if (is_reduced(tree.root_class)) return tree;

  auto add_event = [&](const FoliationGerm& g, const std::vector<CurveThrough>& through,
                       std::optional<std::pair<std::size_t, std::size_t>> parent, unsigned depth) {
    if (depth > max_depth)
      throw Error(ErrorKind::DepthExceeded, "reduction did not finish within depth " + std::to_string(max_depth));
    int id = static_cast<int>(tree.curves.size()) + 1;
    BlowupEvent ev = blow_up(g, through, id);
    ev.parent = parent;
    ev.depth = depth;
    for (const auto& c : through) tree.curves[static_cast<std::size_t>(c.curve - 1)].self_intersection -= Rat(1);
    tree.curves.push_back({id, Rat(-1), !ev.dicritical, tree.events.size()});
    if (!ev.non_rational.empty()) tree.complete = false;
    tree.events.push_back(std::move(ev));
    return tree.events.size() - 1;
  };

  std::deque<std::size_t> queue{add_event(root, {}, std::nullopt, 1)};
  while (!queue.empty()) {
    std::size_t e = queue.front();
    queue.pop_front();
    for (std::size_t p = 0; p < tree.events[e].points.size(); ++p) {
      const SpecialPoint& sp = tree.events[e].points[p];
      if (is_reduced(sp.cls)) continue;
      FoliationGerm g = sp.germ;
      std::vector<CurveThrough> through = sp.curves;
      std::size_t child = add_event(g, through, std::make_pair(e, p), tree.events[e].depth + 1);
      tree.events[e].points[p].child = child;
      queue.push_back(child);
    }
  }
  return tree;
}

// Exceptional curves meeting at leaf points, as (i, j, count) with i < j.
inline std::vector<std::tuple<int, int, int>> dual_graph_edges(const BlowupTree& tree) {
  std::map<std::pair<int, int>, int> count;
  for (auto [e, p] : tree.leaves()) {
    const auto& cs = tree.events[e].points[p].curves;
    for (std::size_t a = 0; a < cs.size(); ++a)
      for (std::size_t b = a + 1; b < cs.size(); ++b) {
        int i = std::min(cs[a].curve, cs[b].curve), j = std::max(cs[a].curve, cs[b].curve);
        ++count[{i, j}];
      }
  }
  std::vector<std::tuple<int, int, int>> out;
  for (const auto& [k, v] : count) out.emplace_back(k.first, k.second, v);
  return out;
}

}  // namespace folia
