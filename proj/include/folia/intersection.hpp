#pragma once

#include <optional>
#include <utility>

#include "folia/bipoly.hpp"

namespace folia {

// Local intersection multiplicity; std::nullopt stands for infinity.
using Multiplicity = std::optional<unsigned>;

// dim O_p / <f, g> computed by the classical recursive plane-curve procedure:
// translate p to the origin, then repeatedly cancel the leading terms of the
// restrictions to the axis w = 0 or split off the factor w.
inline Multiplicity local_intersection_multiplicity(const BiPoly& f_in, const BiPoly& g_in,
                                                    const Point& p = kOrigin) {
  BiPoly f = f_in.translate(p);
  BiPoly g = g_in.translate(p);
  unsigned total = 0;
  while (true) {
    if (f.is_zero() || g.is_zero()) return std::nullopt;
    if (!f.coeff(0, 0).is_zero() || !g.coeff(0, 0).is_zero()) return total;
    UPoly r = f.at_w(Rat(0));
    UPoly s = g.at_w(Rat(0));
    if (r.is_zero() && s.is_zero()) return std::nullopt;  // w divides both
    if (r.is_zero()) {
      std::swap(f, g);
      std::swap(r, s);
    }
    if (s.is_zero()) {
      // g = w * h: I(f, g) = I(f, w) + I(f, h), and I(f, w) = ord_z f(z, 0).
      total += static_cast<unsigned>(r.valuation());
      BiPoly h;
      g.divide_monomial(0, 1, h);
      g = std::move(h);
      continue;
    }
    if (r.degree() > s.degree()) {
      std::swap(f, g);
      std::swap(r, s);
    }
    // deg r <= deg s: lower the degree of g(z, 0).
    unsigned shift = static_cast<unsigned>(s.degree() - r.degree());
    g = g * r.lead() - BiPoly::term(s.lead(), shift, 0) * f;
  }
}

}  // namespace folia
