#pragma once

#include <string>
#include <utility>

#include "folia/series.hpp"

namespace folia {

// A smooth local branch of a plane curve at a rational point.
//
// In local coordinates centred at `base`, the branch is the graph
// w = series(z) when `by_z` holds, and z = series(w) otherwise; the series has
// no constant term.
struct Branch {
  enum class Origin { Smooth, Node };

  Point base;
  bool by_z = true;
  TruncSeries series;
  BiPoly source;  // equation of the curve the branch lies on (global coordinates)
  Origin origin = Origin::Smooth;
  Rat slope;      // tangent slope of a node branch in the parametrizing variable

  // Same branch recomputed to a higher truncation order.
  Branch expanded(unsigned order) const;

  std::string describe() const {
    std::string var = by_z ? "w" : "z";
    std::string par = by_z ? "z" : "w";
    return var + " = " + series.str(par[0]) + " at " + base.str();
  }
};

namespace detail {

// Smooth branch of f through the origin along a graph over the parameter
// (f local, f(0) = 0, the partial derivative in the graph variable nonzero).
inline TruncSeries graph_series(const BiPoly& f_local, bool by_z, unsigned order) {
  BiPoly f = by_z ? f_local : f_local.swap_vars();  // now solve w = phi(z)
  Rat fw = f.coeff(0, 1);
  std::vector<Rat> phi(order + 1, Rat(0));
  for (unsigned k = 1; k <= order; ++k) {
    TruncSeries cur(phi, k, false);
    TruncSeries val = compose(f, cur);
    phi[k] = -val[k] / fw;
  }
  TruncSeries candidate(phi, order, true);
  if (compose(f, candidate).is_exact_zero()) return candidate;
  return TruncSeries(std::move(phi), order, false);
}

}  // namespace detail

// Graph parametrization of {f = 0} at p, preferring w as a series in z.
inline Branch solve_smooth_branch(const BiPoly& f, const Point& p, unsigned order) {
  BiPoly local = f.translate(p);
  if (!local.coeff(0, 0).is_zero())
    throw Error(ErrorKind::InvalidArgument, "curve " + f.str() + " does not pass through " + p.str());
  bool by_z;
  if (!local.coeff(0, 1).is_zero()) {
    by_z = true;
  } else if (!local.coeff(1, 0).is_zero()) {
    by_z = false;
  } else {
    throw Error(ErrorKind::NotSmoothHere, "both partials of " + f.str() + " vanish at " + p.str());
  }
  Branch b;
  b.base = p;
  b.by_z = by_z;
  b.series = detail::graph_series(local, by_z, order);
  b.source = f;
  b.origin = Branch::Origin::Smooth;
  return b;
}

namespace detail {

inline Branch node_branch(const BiPoly& f, const Point& p, bool by_z, const Rat& slope,
                          unsigned order) {
  BiPoly local = f.translate(p);
  // blow up along the tangent direction: w = z * t (or z = w * s)
  BiPoly oriented = by_z ? local : local.swap_vars();
  BiPoly strict;
  oriented.substitute(BiPoly::z(), BiPoly::z() * BiPoly::w()).divide_monomial(2, 0, strict);
  // strict(z, t) = 0 has t = slope + psi(z) with psi(0) = 0, smooth since the root is simple
  BiPoly shifted = strict.translate({Rat(0), slope});
  TruncSeries psi = graph_series(shifted, true, order == 0 ? 0 : order - 1);
  std::vector<Rat> c(order + 1, Rat(0));
  if (order >= 1) c[1] = slope;
  for (unsigned k = 0; k + 1 <= order; ++k) c[k + 1] += psi[k];
  Branch b;
  b.base = p;
  b.by_z = by_z;
  b.series = TruncSeries(std::move(c), order, psi.exact());
  b.source = f;
  b.origin = Branch::Origin::Node;
  b.slope = slope;
  return b;
}

}  // namespace detail

// Two transverse smooth branches of a curve with an ordinary double point at p.
inline std::pair<Branch, Branch> factor_at_node(const BiPoly& f, const Point& p, unsigned order = 8) {
  BiPoly local = f.translate(p);
  if (!local.coeff(0, 0).is_zero())
    throw Error(ErrorKind::NotANode, "curve does not pass through " + p.str());
  if (!local.coeff(1, 0).is_zero() || !local.coeff(0, 1).is_zero())
    throw Error(ErrorKind::NotANode, "curve is smooth at " + p.str());
  Rat a = local.coeff(2, 0), b = local.coeff(1, 1), c = local.coeff(0, 2);
  Rat disc = b * b - Rat(4) * a * c;
  if (disc.is_zero())
    throw Error(ErrorKind::NotANode, "quadratic part of " + f.str() + " is degenerate at " + p.str());
  Rat root;
  if (!rational_sqrt(disc, root))
    throw Error(ErrorKind::IrrationalTangents,
                "tangent cone of " + f.str() + " at " + p.str() + " is not defined over Q");
  if (!c.is_zero()) {
    // c m^2 + b m + a = 0 for tangents w = m z
    Rat m1 = (-b - root) / (Rat(2) * c), m2 = (-b + root) / (Rat(2) * c);
    if (m2 < m1) std::swap(m1, m2);
    return {detail::node_branch(f, p, true, m1, order), detail::node_branch(f, p, true, m2, order)};
  }
  // c = 0: q = z (a z + b w), b != 0; tangents z = 0 and w = -(a/b) z
  return {detail::node_branch(f, p, true, -a / b, order),
          detail::node_branch(f, p, false, Rat(0), order)};
}

inline Branch Branch::expanded(unsigned order) const {
  if (series.exact()) return *this;
  if (origin == Origin::Smooth) return solve_smooth_branch(source, base, order);
  return detail::node_branch(source, base, by_z, slope, order);
}

// Substitutes the branch into g (global coordinates), giving a series in the local parameter.
inline TruncSeries restrict_to_branch(const BiPoly& g, const Branch& b) {
  return compose(g.translate(b.base), b.series, !b.by_z);
}

}  // namespace folia
