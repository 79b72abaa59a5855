#pragma once

#include <map>
#include <string>
#include <vector>

#include "folia/blowup.hpp"
#include "folia/surface.hpp"

namespace folia {

// Surface model made of the exceptional curves of a finished reduction:
// self-intersections, invariance, dual graph, and index records at the leaf
// points (Z and CS on invariant curves, nonzero tang on dicritical ones).
inline SurfaceModel ledger_to_surface(const BlowupTree& tree, unsigned cap = kDefaultTruncationCap) {
  if (!tree.complete)
    throw Error(ErrorKind::TreeIncomplete, "reduction stopped at centres with non-rational coordinates");
  for (auto [e, p] : tree.leaves())
    if (!is_reduced(tree.events[e].points[p].cls))
      throw Error(ErrorKind::TreeIncomplete, "leaf " + tree.events[e].points[p].id + " is not reduced");

  SurfaceModel m;
  std::size_t n = tree.curves.size();
  m.matrix.assign(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    const ExceptionalCurve& ec = tree.curves[i];
    Curve c;
    c.id = ec.name();
    c.genus = 0;
    c.invariant = ec.invariant;
    c.kx_degree = Rat(-2) - ec.self_intersection;
    c.singularities = std::vector<SingularityRecord>{};
    if (!tree.events[ec.event].irrational_tangency.empty()) c.singularities.reset();
    m.curves.push_back(c);
    m.matrix[i][i] = ec.self_intersection;
  }
  for (auto [i, j, count] : dual_graph_edges(tree)) {
    auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(j - 1);
    m.matrix[a][b] = m.matrix[b][a] = Rat(count);
  }

  for (auto [e, p] : tree.leaves()) {
    const SpecialPoint& sp = tree.events[e].points[p];
    for (const auto& ct : sp.curves) {
      Curve& c = m.curves[static_cast<std::size_t>(ct.curve - 1)];
      if (!c.singularities) continue;
      if (c.invariant) {
        if (!is_singular(sp.cls)) continue;
        CurveIndices ix = invariant_curve_indices(sp.germ, ct.equation, kOrigin, c.id, cap);
        c.singularities->push_back({sp.id, ix.z.value.num().get_si(), ix.cs.value, std::nullopt});
      } else {
        Rat t = tang_index(sp.germ, ct.equation, kOrigin);
        if (!t.is_zero()) c.singularities->push_back({sp.id, std::nullopt, std::nullopt, t});
      }
    }
  }
  return m;
}

}  // namespace folia
