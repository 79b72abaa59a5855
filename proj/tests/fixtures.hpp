#pragma once

// Hand-built surface models shared by the unit tests and the acceptance run.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "folia/linalg.hpp"
#include "folia/surface.hpp"

namespace fixtures {

using folia::Curve;
using folia::QDivisor;
using folia::Rat;
using folia::SingularityRecord;
using folia::SurfaceModel;

inline Curve rational(const std::string& id, std::vector<unsigned> orders = {}) {
  Curve c;
  c.id = id;
  c.genus = 0;
  c.orbifold_orders = std::move(orders);
  c.singularities = std::vector<SingularityRecord>{};
  return c;
}

inline SingularityRecord rec(const std::string& point, long z, Rat cs) { return {point, z, cs, std::nullopt}; }

inline void add(SurfaceModel& m, Curve c, const Rat& self) {
  for (auto& row : m.matrix) row.push_back(Rat(0));
  m.matrix.emplace_back(m.size() + 1, Rat(0));
  m.matrix.back().back() = self;
  m.curves.push_back(std::move(c));
}

inline void edge(SurfaceModel& m, const std::string& a, const std::string& b, const Rat& v) {
  std::size_t i = m.index_of(a), j = m.index_of(b);
  m.matrix[i][j] = m.matrix[j][i] = v;
}

inline Curve& curve(SurfaceModel& m, const std::string& id) { return m.curves[m.index_of(id)]; }

// Records at the crossing of a and b on both curves.
inline void crossing(SurfaceModel& m, const std::string& a, const std::string& b, const std::string& point,
                     long za = 1, Rat csa = Rat(-1), long zb = 1, Rat csb = Rat(-1)) {
  curve(m, a).singularities->push_back(rec(point, za, csa));
  curve(m, b).singularities->push_back(rec(point, zb, csb));
}

struct Archetype {
  char expected;
  SurfaceModel model;
  std::vector<std::string> component;
};

inline Archetype archetype(char kind) {
  SurfaceModel m;
  switch (kind) {
    case 'a': {
      Curve e;
      e.id = "A";
      e.genus = 1;
      e.singularities = std::vector<SingularityRecord>{};
      add(m, e, Rat(0));
      return {'a', m, {"A"}};
    }
    case 'b': {
      for (const char* id : {"B1", "B2", "B3"}) add(m, rational(id), Rat(-2));
      edge(m, "B1", "B2", Rat(1));
      edge(m, "B2", "B3", Rat(1));
      edge(m, "B3", "B1", Rat(1));
      crossing(m, "B1", "B2", "p12");
      crossing(m, "B2", "B3", "p23");
      crossing(m, "B3", "B1", "p31");
      return {'b', m, {"B1", "B2", "B3"}};
    }
    case 'c':
      add(m, rational("R", {2, 3, 6}), Rat(0));
      return {'c', m, {"R"}};
    case 'd':
      add(m, rational("R", {2, 2, 2, 2}), Rat(0));
      return {'d', m, {"R"}};
    case 'e': {
      add(m, rational("E1", {2, 2}), Rat(-1));
      add(m, rational("E2"), Rat(-2));
      add(m, rational("E3", {2, 2}), Rat(-1));
      edge(m, "E1", "E2", Rat(1));
      edge(m, "E2", "E3", Rat(1));
      crossing(m, "E1", "E2", "p12", 1, Rat(-1), 1, Rat(-1));
      crossing(m, "E2", "E3", "p23", 1, Rat(-1), 1, Rat(-1));
      return {'e', m, {"E1", "E2", "E3"}};
    }
  }
  throw folia::Error(folia::ErrorKind::InvalidArgument, std::string("no archetype ") + kind);
}

// Four single structural edits per archetype.
inline std::vector<std::pair<std::string, Archetype>> corruptions(char kind) {
  using Edit = std::pair<std::string, std::function<void(SurfaceModel&)>>;
  std::vector<Edit> edits;
  switch (kind) {
    case 'a':
      edits = {{"genus 0", [](SurfaceModel& m) { curve(m, "A").genus = 0; }},
               {"orbifold point", [](SurfaceModel& m) { curve(m, "A").orbifold_orders = {2}; }},
               {"singular point", [](SurfaceModel& m) { curve(m, "A").singularities->push_back(rec("p", 1, Rat(0))); }},
               {"not invariant", [](SurfaceModel& m) { curve(m, "A").invariant = false; }}};
      break;
    case 'b':
      edits = {{"cycle broken", [](SurfaceModel& m) {
                  edge(m, "B3", "B1", Rat(0));
                  std::erase_if(*curve(m, "B3").singularities, [](const auto& r) { return r.point == "p31"; });
                  std::erase_if(*curve(m, "B1").singularities, [](const auto& r) { return r.point == "p31"; });
                }},
               {"orbifold point", [](SurfaceModel& m) { curve(m, "B2").orbifold_orders = {3}; }},
               {"singularity off the crossings",
                [](SurfaceModel& m) { curve(m, "B1").singularities->push_back(rec("x", 1, Rat(0))); }},
               {"elliptic member", [](SurfaceModel& m) { curve(m, "B3").genus = 1; }}};
      break;
    case 'c':
      edits = {{"orders 2,3,7", [](SurfaceModel& m) { curve(m, "R").orbifold_orders = {2, 3, 7}; }},
               {"fourth point", [](SurfaceModel& m) { curve(m, "R").orbifold_orders = {2, 3, 6, 6}; }},
               {"singular point", [](SurfaceModel& m) { curve(m, "R").singularities->push_back(rec("p", 1, Rat(0))); }},
               {"elliptic", [](SurfaceModel& m) { curve(m, "R").genus = 1; }}};
      break;
    case 'd':
      edits = {{"orders 2,2,2,3", [](SurfaceModel& m) { curve(m, "R").orbifold_orders = {2, 2, 2, 3}; }},
               {"three points", [](SurfaceModel& m) { curve(m, "R").orbifold_orders = {2, 2, 2}; }},
               {"nodal", [](SurfaceModel& m) { curve(m, "R").nodes = 1; }},
               {"not invariant", [](SurfaceModel& m) { curve(m, "R").invariant = false; }}};
      break;
    case 'e':
      edits = {{"end lacks a point", [](SurfaceModel& m) { curve(m, "E1").orbifold_orders = {2}; }},
               {"interior point", [](SurfaceModel& m) { curve(m, "E2").orbifold_orders = {2}; }},
               {"closed into a cycle", [](SurfaceModel& m) {
                  edge(m, "E3", "E1", Rat(1));
                  crossing(m, "E3", "E1", "p31");
                }},
               {"singularity off the crossings",
                [](SurfaceModel& m) { curve(m, "E2").singularities->push_back(rec("x", 1, Rat(0))); }}};
      break;
  }
  std::vector<std::pair<std::string, Archetype>> out;
  for (auto& [name, f] : edits) {
    Archetype a = archetype(kind);
    f(a.model);
    out.emplace_back(name, std::move(a));
  }
  return out;
}

// A negative-definite chain or cycle of rational curves C1..Cn, plus an
// ample-ish curve H (H.H = 1) meeting some of them.
struct Configuration {
  SurfaceModel model;
  std::vector<std::string> ids;
  bool cycle = false;
};

inline Configuration random_configuration(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(1, 6), self(2, 4), coin(0, 1);
  while (true) {
    Configuration c;
    std::size_t n = static_cast<std::size_t>(size(rng));
    c.cycle = n >= 3 && coin(rng);
    for (std::size_t i = 0; i < n; ++i) {
      std::string id = "C" + std::to_string(i + 1);
      add(c.model, rational(id), Rat(-self(rng)));
      c.ids.push_back(id);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) edge(c.model, c.ids[i], c.ids[i + 1], Rat(1));
    if (c.cycle) edge(c.model, c.ids[n - 1], c.ids[0], Rat(1));
    if (!folia::is_negative_definite(c.model.matrix)) continue;
    add(c.model, rational("H"), Rat(1));
    for (const auto& id : c.ids)
      if (coin(rng)) edge(c.model, "H", id, Rat(1));
    return c;
  }
}

// Same model with the curves stored in another order.
inline SurfaceModel permuted(const SurfaceModel& m, const std::vector<std::size_t>& perm) {
  SurfaceModel out;
  for (std::size_t i : perm) out.curves.push_back(m.curves[i]);
  out.matrix.assign(m.size(), std::vector<Rat>(m.size()));
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = 0; b < perm.size(); ++b) out.matrix[a][b] = m.matrix[perm[a]][perm[b]];
  return out;
}

}  // namespace fixtures
