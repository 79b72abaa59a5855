#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "folia/error.hpp"
#include "folia/linalg.hpp"
#include "folia/rat.hpp"

namespace folia {

// Index data of the foliation at one point of a curve.  Invariant curves carry
// Z and CS, non-invariant curves carry tang (already divided by the orbifold order).
struct SingularityRecord {
  std::string point;
  std::optional<long> z;
  std::optional<Rat> cs;
  std::optional<Rat> tang;
  friend bool operator==(const SingularityRecord&, const SingularityRecord&) = default;
};

struct Curve {
  std::string id;
  std::optional<int> genus;  // 0 rational, 1 elliptic; nullopt when unknown
  int nodes = 0;
  bool invariant = true;
  std::vector<unsigned> orbifold_orders;
  std::optional<std::vector<SingularityRecord>> singularities;  // nullopt: not recorded
  std::optional<Rat> kx_degree;
  friend bool operator==(const Curve&, const Curve&) = default;
};

// Finite combinatorial model of a foliated surface.  Nef and related
// predicates are relative to the curves listed here.
struct SurfaceModel {
  std::vector<Curve> curves;
  RatMatrix matrix;

  std::size_t size() const { return curves.size(); }

  std::optional<std::size_t> find(const std::string& id) const {
    for (std::size_t i = 0; i < curves.size(); ++i)
      if (curves[i].id == id) return i;
    return std::nullopt;
  }

  std::size_t index_of(const std::string& id) const {
    auto i = find(id);
    if (!i) throw Error(ErrorKind::UnknownCurve, "no curve named '" + id + "'");
    return *i;
  }

  const Curve& curve(const std::string& id) const { return curves[index_of(id)]; }
  const Rat& pairing(std::size_t i, std::size_t j) const { return matrix[i][j]; }
  const Rat& pairing(const std::string& a, const std::string& b) const {
    return matrix[index_of(a)][index_of(b)];
  }
  const Rat& self_intersection(const std::string& id) const { return pairing(id, id); }

  void validate() const {
    if (matrix.size() != curves.size())
      throw Error(ErrorKind::InconsistentModel, "intersection matrix size differs from the curve count");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < curves.size(); ++i) {
      const Curve& c = curves[i];
      if (c.id.empty()) throw Error(ErrorKind::InconsistentModel, "empty curve id");
      if (!seen.insert(c.id).second) throw Error(ErrorKind::InconsistentModel, "duplicate curve id '" + c.id + "'");
      if (matrix[i].size() != curves.size())
        throw Error(ErrorKind::InconsistentModel, "intersection matrix is not square");
      if (c.genus && *c.genus < 0) throw Error(ErrorKind::InconsistentModel, "negative genus on " + c.id);
      if (c.nodes < 0) throw Error(ErrorKind::InconsistentModel, "negative node count on " + c.id);
      for (unsigned k : c.orbifold_orders)
        if (k < 2) throw Error(ErrorKind::InconsistentModel, "orbifold order below 2 on " + c.id);
      for (std::size_t j = 0; j < i; ++j) {
        if (matrix[i][j] != matrix[j][i])
          throw Error(ErrorKind::InconsistentModel, "intersection matrix not symmetric at " + c.id + ", " + curves[j].id);
        if (matrix[i][j].sign() < 0)
          throw Error(ErrorKind::InconsistentModel, "negative intersection " + c.id + "." + curves[j].id);
      }
    }
  }

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

// Q-divisor supported on named curves; zero coefficients are never stored.
class QDivisor {
 public:
  QDivisor() = default;
  static QDivisor of(const std::string& id, const Rat& c = Rat(1)) {
    QDivisor d;
    d.set(id, c);
    return d;
  }

  void set(const std::string& id, const Rat& c) {
    if (c.is_zero())
      terms_.erase(id);
    else
      terms_[id] = c;
  }
  Rat coeff(const std::string& id) const {
    auto it = terms_.find(id);
    return it == terms_.end() ? Rat(0) : it->second;
  }
  const std::map<std::string, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_effective() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.sign() > 0; });
  }

  QDivisor& operator+=(const QDivisor& o) {
    for (const auto& [id, c] : o.terms_) set(id, coeff(id) + c);
    return *this;
  }
  QDivisor& operator-=(const QDivisor& o) {
    for (const auto& [id, c] : o.terms_) set(id, coeff(id) - c);
    return *this;
  }
  friend QDivisor operator+(QDivisor a, const QDivisor& b) { return a += b; }
  friend QDivisor operator-(QDivisor a, const QDivisor& b) { return a -= b; }
  friend QDivisor operator*(const Rat& s, const QDivisor& d) {
    QDivisor out;
    for (const auto& [id, c] : d.terms_) out.set(id, s * c);
    return out;
  }
  friend bool operator==(const QDivisor&, const QDivisor&) = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [id, c] : terms_) {
      if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
      else if (c.sign() < 0) out += "-";
      Rat a = abs(c);
      if (a != Rat(1)) out += a.str() + "*";
      out += id;
    }
    return out;
  }

 private:
  std::map<std::string, Rat> terms_;
};

inline Rat intersect(const QDivisor& d1, const QDivisor& d2, const SurfaceModel& m) {
  Rat s(0);
  for (const auto& [a, ca] : d1.terms()) {
    std::size_t i = m.index_of(a);
    for (const auto& [b, cb] : d2.terms()) s += ca * cb * m.matrix[i][m.index_of(b)];
  }
  return s;
}

// ---------------------------------------------------------------------------
// Orbifold Euler characteristic and K_F degrees

struct ChiOrbReport {
  std::optional<Rat> direct;      // from genus, nodes and orbifold orders
  std::optional<Rat> adjunction;  // -K_X.C - C.C
  bool consistent() const { return !direct || !adjunction || *direct == *adjunction; }
};

inline ChiOrbReport chi_orb_report(const std::string& id, const SurfaceModel& m) {
  const Curve& c = m.curve(id);
  ChiOrbReport r;
  if (c.genus) {
    Rat x(2 - 2 * *c.genus - 2 * c.nodes);
    for (unsigned k : c.orbifold_orders) x += Rat(1 - static_cast<long>(k), static_cast<long>(k));
    r.direct = x;
  }
  if (c.kx_degree) r.adjunction = -*c.kx_degree - m.self_intersection(id);
  return r;
}

inline Rat chi_orb(const std::string& id, const SurfaceModel& m) {
  ChiOrbReport r = chi_orb_report(id, m);
  if (!r.direct && !r.adjunction)
    throw Error(ErrorKind::InsufficientData, "curve " + id + " has neither genus nor K_X degree");
  if (!r.consistent())
    throw Error(ErrorKind::InconsistentModel, "chi_orb of " + id + ": direct " + r.direct->str() +
                                                  " but adjunction gives " + r.adjunction->str());
  return r.direct ? *r.direct : *r.adjunction;
}

struct KfReport {
  Rat degree;
  bool invariant = true;
  std::optional<Rat> positivity;  // (K_F + C).C, non-invariant curves only
  bool transverse = false;        // every tang index vanishes
};

inline const std::vector<SingularityRecord>& records_of(const Curve& c) {
  if (!c.singularities) throw Error(ErrorKind::MissingIndices, "curve " + c.id + " has no singularity records");
  return *c.singularities;
}

inline KfReport kf_degree_report(const std::string& id, const SurfaceModel& m) {
  const Curve& c = m.curve(id);
  const auto& recs = records_of(c);
  KfReport r;
  r.invariant = c.invariant;
  if (c.invariant) {
    long zsum = 0;
    for (const auto& s : recs) {
      if (!s.z) throw Error(ErrorKind::MissingIndices, "record " + s.point + " on " + id + " lacks Z");
      zsum += *s.z;
    }
    r.degree = -chi_orb(id, m) + Rat(zsum);
    return r;
  }
  Rat tang(0);
  for (const auto& s : recs) {
    if (!s.tang) throw Error(ErrorKind::MissingIndices, "record " + s.point + " on " + id + " lacks tang");
    tang += *s.tang;
  }
  r.degree = -m.self_intersection(id) + tang;
  r.positivity = r.degree + m.self_intersection(id);
  r.transverse = tang.is_zero();
  return r;
}

inline Rat kf_degree(const std::string& id, const SurfaceModel& m) { return kf_degree_report(id, m).degree; }

struct CsReport {
  Rat sum;
  Rat self_intersection;
  Rat residual;  // sum - C.C
  bool pass() const { return residual.is_zero(); }
};

inline CsReport verify_camacho_sad(const std::string& id, const SurfaceModel& m) {
  const Curve& c = m.curve(id);
  if (!c.invariant) throw Error(ErrorKind::InvalidArgument, "curve " + id + " is not invariant");
  CsReport r;
  for (const auto& s : records_of(c)) {
    if (!s.cs) throw Error(ErrorKind::MissingIndices, "record " + s.point + " on " + id + " lacks CS");
    r.sum += *s.cs;
  }
  r.self_intersection = m.self_intersection(id);
  r.residual = r.sum - r.self_intersection;
  return r;
}

// ---------------------------------------------------------------------------
// Nefness and Zariski decomposition (relative to the model's curves)

inline std::vector<std::string> sorted_ids(const SurfaceModel& m) {
  std::vector<std::string> ids;
  for (const auto& c : m.curves) ids.push_back(c.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

struct NefResult {
  bool nef = true;
  std::optional<std::string> witness;
  Rat witness_pairing;
};

inline NefResult is_nef(const QDivisor& l, const SurfaceModel& m) {
  for (const auto& [id, c] : l.terms()) (void)m.index_of(id);
  for (const auto& id : sorted_ids(m)) {
    Rat p = intersect(l, QDivisor::of(id), m);
    if (p.sign() < 0) return {false, id, p};
  }
  return {};
}

struct ZariskiDecomposition {
  QDivisor positive;
  QDivisor negative;
  std::vector<std::string> support;  // ascending id
  RatMatrix gram;
  std::vector<Rat> residuals;        // P.C_j over the support
};

inline ZariskiDecomposition zariski_decompose(const QDivisor& l, const SurfaceModel& m) {
  for (const auto& [id, c] : l.terms()) (void)m.index_of(id);
  std::vector<std::string> ids = sorted_ids(m);
  std::set<std::string> support;
  QDivisor n;
  RatMatrix gram;
  std::vector<std::string> supp;
  while (true) {
    QDivisor p = l - n;
    bool grew = false;
    for (const auto& id : ids)
      if (!support.count(id) && intersect(p, QDivisor::of(id), m).sign() < 0) {
        support.insert(id);
        grew = true;
      }
    if (!grew) break;
    supp.assign(support.begin(), support.end());
    gram.assign(supp.size(), std::vector<Rat>(supp.size()));
    std::vector<Rat> rhs;
    for (std::size_t i = 0; i < supp.size(); ++i) {
      for (std::size_t j = 0; j < supp.size(); ++j) gram[i][j] = m.pairing(supp[i], supp[j]);
      rhs.push_back(intersect(l, QDivisor::of(supp[i]), m));
    }
    if (!is_negative_definite(gram))
      throw Error(ErrorKind::NotDecomposable, "Gram matrix of the support is not negative definite");
    auto sol = solve_linear(gram, rhs);
    n = QDivisor();
    for (std::size_t i = 0; i < supp.size(); ++i) {
      if ((*sol)[i].sign() < 0)
        throw Error(ErrorKind::NotDecomposable,
                    "negative part has coefficient " + (*sol)[i].str() + " on " + supp[i]);
      n.set(supp[i], (*sol)[i]);
    }
  }
  ZariskiDecomposition z;
  z.negative = n;
  z.positive = l - n;
  z.support = supp;
  z.gram = gram;
  for (const auto& id : supp) z.residuals.push_back(intersect(z.positive, QDivisor::of(id), m));
  return z;
}

// ---------------------------------------------------------------------------
// Contraction of foliated negative curves and blow-up bookkeeping

struct ContractionResult {
  SurfaceModel model;
  unsigned k = 1;  // orbifold order on the contracted curve (1 if none)
  unsigned l = 1;  // order of the point created
  std::vector<std::string> neighbours;
};

namespace detail {

inline SurfaceModel remove_and_correct(const SurfaceModel& m, std::size_t c, const Rat& factor) {
  SurfaceModel out;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (i != c) keep.push_back(i);
  for (std::size_t i : keep) out.curves.push_back(m.curves[i]);
  out.matrix.assign(keep.size(), std::vector<Rat>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      out.matrix[a][b] = m.matrix[keep[a]][keep[b]] + m.matrix[keep[a]][c] * m.matrix[keep[b]][c] * factor;
  const auto& kc = m.curves[c].kx_degree;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    const Rat& dc = m.matrix[keep[a]][c];
    if (dc.is_zero()) continue;
    auto& kx = out.curves[a].kx_degree;
    if (kx && kc)
      *kx += *kc * dc * factor;
    else
      kx.reset();
  }
  return out;
}

}  // namespace detail

// Contracts an invariant smooth rational curve with C.C = -l/k carrying a
// single Z = 1 singularity and at most one orbifold point of order k.
inline ContractionResult contract_negative_curve(const std::string& id, const SurfaceModel& m) {
  std::size_t ci = m.index_of(id);
  const Curve& c = m.curves[ci];
  auto fail = [&](const std::string& why) { throw Error(ErrorKind::NotContractible, id + ": " + why); };
  if (!c.invariant) fail("curve is not invariant");
  if (!c.genus || *c.genus != 0 || c.nodes != 0) fail("curve is not a smooth rational curve");
  if (c.orbifold_orders.size() > 1) fail("more than one orbifold point");
  if (!c.singularities) fail("no singularity records");
  if (c.singularities->size() != 1) fail(std::to_string(c.singularities->size()) + " singular points, expected one");
  const SingularityRecord& rec = c.singularities->front();
  if (!rec.z || *rec.z != 1) fail("singularity " + rec.point + " does not have Z = 1");
  if (kf_degree(id, m).sign() >= 0) fail("K_F degree is not negative");
  unsigned k = c.orbifold_orders.empty() ? 1u : c.orbifold_orders.front();
  Rat lr = -m.matrix[ci][ci] * Rat(static_cast<long>(k));
  if (lr.sign() <= 0 || !lr.is_integer()) fail("self-intersection " + m.matrix[ci][ci].str() + " is not -l/k with l a positive integer");
  if (!lr.num().fits_ulong_p()) fail("self-intersection is too large");
  unsigned l = static_cast<unsigned>(lr.num().get_ui());
  if (std::gcd(k, l) != 1) fail("l = " + std::to_string(l) + " is not prime to k = " + std::to_string(k));

  ContractionResult res;
  res.k = k;
  res.l = l;
  res.model = detail::remove_and_correct(m, ci, Rat(static_cast<long>(k), static_cast<long>(l)));
  for (std::size_t i = 0, a = 0; i < m.size(); ++i) {
    if (i == ci) continue;
    Curve& d = res.model.curves[a++];
    if (m.matrix[i][ci].is_zero()) continue;
    res.neighbours.push_back(d.id);
    if (l > 1) {
      d.orbifold_orders.push_back(l);
      std::sort(d.orbifold_orders.begin(), d.orbifold_orders.end());
    }
    if (d.singularities) {
      auto& rs = *d.singularities;
      rs.erase(std::remove_if(rs.begin(), rs.end(), [&](const auto& r) { return r.point == rec.point; }), rs.end());
    }
  }
  std::sort(res.neighbours.begin(), res.neighbours.end());
  return res;
}

// Blows down a smooth rational (-1)-curve free of orbifold points.  Records
// of neighbours at the points shared with the curve merge into one record at
// the image point "q:<id>" (Z kept, CS raised by 1 per branch); a neighbour
// meeting the curve twice acquires a node there.  The record update assumes
// the shared points are reduced nondegenerate singularities.
inline SurfaceModel blow_down(const std::string& id, const SurfaceModel& m) {
  std::size_t ci = m.index_of(id);
  const Curve& c = m.curves[ci];
  auto fail = [&](const std::string& why) { throw Error(ErrorKind::NotContractible, id + ": " + why); };
  if (!c.genus || *c.genus != 0 || c.nodes != 0) fail("curve is not a smooth rational curve");
  if (!c.orbifold_orders.empty()) fail("curve carries orbifold points");
  if (m.matrix[ci][ci] != Rat(-1)) fail("self-intersection is not -1");
  std::set<std::string> shared;
  if (c.singularities)
    for (const auto& r : *c.singularities) shared.insert(r.point);
  SurfaceModel out = detail::remove_and_correct(m, ci, Rat(1));
  std::string q = "q:" + id;
  for (std::size_t i = 0, a = 0; i < m.size(); ++i) {
    if (i == ci) continue;
    Curve& d = out.curves[a++];
    const Rat& dc = m.matrix[i][ci];
    if (dc.is_zero()) continue;
    if (dc != Rat(1) && dc != Rat(2)) fail("neighbour " + d.id + " meets it with multiplicity " + dc.str());
    if (dc == Rat(2)) d.nodes += 1;
    if (!d.singularities) continue;
    std::vector<SingularityRecord> kept, merged;
    for (const auto& r : *d.singularities) (shared.count(r.point) ? merged : kept).push_back(r);
    if (merged.empty()) continue;
    SingularityRecord nr{q, std::nullopt, std::nullopt, std::nullopt};
    long z = 0;
    Rat cs(0);
    bool have_z = true, have_cs = true;
    for (const auto& r : merged) {
      if (r.z) z += *r.z; else have_z = false;
      if (r.cs) cs += *r.cs + Rat(1); else have_cs = false;
    }
    if (merged.size() == 2) {
      z -= 2;
      cs += Rat(2);
    }
    if (have_z) nr.z = z;
    if (have_cs) nr.cs = cs;
    kept.push_back(nr);
    d.singularities = kept;
  }
  return out;
}

// Blows up a point lying on the listed curves (pairwise transverse there),
// adding the exceptional curve `new_id`.
inline SurfaceModel blow_up_point(const SurfaceModel& m, const std::vector<std::string>& through,
                                  const std::string& new_id, bool invariant = true) {
  if (m.find(new_id)) throw Error(ErrorKind::InvalidArgument, "curve id '" + new_id + "' already used");
  std::vector<std::size_t> idx;
  for (const auto& t : through) idx.push_back(m.index_of(t));
  SurfaceModel out = m;
  std::size_t n = m.size();
  for (auto& row : out.matrix) row.push_back(Rat(0));
  out.matrix.emplace_back(n + 1, Rat(0));
  out.matrix[n][n] = Rat(-1);
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b) out.matrix[idx[a]][idx[b]] -= Rat(1);
    out.matrix[idx[a]][n] = out.matrix[n][idx[a]] = Rat(1);
    if (auto& kx = out.curves[idx[a]].kx_degree) *kx += Rat(1);
  }
  Curve e;
  e.id = new_id;
  e.genus = 0;
  e.invariant = invariant;
  e.kx_degree = Rat(-1);
  out.curves.push_back(e);
  return out;
}

struct NefModelResult {
  SurfaceModel model;
  std::vector<std::string> contracted;  // in contraction order
  std::vector<std::pair<std::string, std::string>> inconsistencies;  // K_F-negative curves failing the profile
};

inline NefModelResult nef_model(const SurfaceModel& m) {
  NefModelResult res{m, {}, {}};
  while (true) {
    std::vector<std::string> negative;
    for (const auto& id : sorted_ids(res.model))
      if (kf_degree(id, res.model).sign() < 0) negative.push_back(id);
    if (negative.empty()) return res;
    bool done = false;
    std::vector<std::pair<std::string, std::string>> failures;
    for (const auto& id : negative) {
      try {
        res.model = contract_negative_curve(id, res.model).model;
        res.contracted.push_back(id);
        done = true;
        break;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotContractible) throw;
        failures.emplace_back(id, e.what());
      }
    }
    if (!done) {
      res.inconsistencies = failures;
      return res;
    }
  }
}

// Numerical Kodaira dimension of a nef class: 2, 1 or 0.
inline int numerical_kodaira(const QDivisor& kf, const SurfaceModel& m) {
  NefResult nef = is_nef(kf, m);
  if (!nef.nef)
    throw Error(ErrorKind::NotNef, "K_F." + *nef.witness + " = " + nef.witness_pairing.str() + " < 0");
  Rat sq = intersect(kf, kf, m);
  if (sq.sign() < 0) throw Error(ErrorKind::InconsistentModel, "nef class with negative square " + sq.str());
  if (sq.sign() > 0) return 2;
  for (const auto& c : m.curves)
    if (!intersect(kf, QDivisor::of(c.id), m).is_zero()) return 1;
  return 0;
}

// ---------------------------------------------------------------------------
// Structural classifier for connected components of nef, square-zero supports

namespace detail {

inline bool has_no_records(const Curve& c) { return !c.singularities || c.singularities->empty(); }

inline bool smooth_rational(const Curve& c) { return c.genus && *c.genus == 0 && c.nodes == 0; }

// Singular points of every curve lie exactly at the intersections with the
// other curves of the component (each such point shared by exactly two curves).
inline bool singular_exactly_at_crossings(const std::vector<std::size_t>& idx, const SurfaceModel& m) {
  std::map<std::string, std::vector<std::size_t>> owners;
  for (std::size_t i : idx) {
    const Curve& c = m.curves[i];
    if (!c.singularities) return false;
    std::set<std::string> pts;
    for (const auto& r : *c.singularities)
      if (!pts.insert(r.point).second) return false;
    Rat crossings(0);
    for (std::size_t j : idx)
      if (j != i) crossings += m.matrix[i][j];
    if (Rat(static_cast<long>(pts.size())) != crossings) return false;
    for (const auto& p : pts) owners[p].push_back(i);
  }
  for (const auto& [p, o] : owners) {
    if (o.size() != 2) return false;
    if (m.matrix[o[0]][o[1]].is_zero()) return false;
  }
  return true;
}

}  // namespace detail

// Matches a connected component against the five structural cases of curves
// supporting a nef square-zero divisor: (a) smooth elliptic curve; (b) cycle
// of smooth rational curves or nodal rational curve; (c) rational curve with
// three quotient points, sum of 1/k equal to 1; (d) rational curve with four
// order-2 points; (e) chain of rational curves with two order-2 points on
// each end.
inline std::optional<char> classify_component(const std::vector<std::string>& ids, const SurfaceModel& m) {
  if (ids.empty()) throw Error(ErrorKind::InvalidArgument, "empty component");
  std::vector<std::size_t> idx;
  for (const auto& id : ids) idx.push_back(m.index_of(id));
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw Error(ErrorKind::InvalidArgument, "component lists a curve twice");
  {
    std::vector<bool> seen(idx.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < idx.size(); ++b)
        if (!seen[b] && !m.matrix[idx[a]][idx[b]].is_zero()) {
          seen[b] = true;
          stack.push_back(b);
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
      throw Error(ErrorKind::InvalidArgument, "component is not connected");
  }
  for (std::size_t i : idx)
    if (!m.curves[i].invariant) return std::nullopt;

  if (idx.size() == 1) {
    const Curve& c = m.curves[idx[0]];
    if (!c.genus) return std::nullopt;
    if (*c.genus == 1 && c.nodes == 0 && c.orbifold_orders.empty() && detail::has_no_records(c)) return 'a';
    if (*c.genus != 0) return std::nullopt;
    if (c.nodes == 1 && c.orbifold_orders.empty() && c.singularities && c.singularities->size() == 1) return 'b';
    if (c.nodes != 0 || !detail::has_no_records(c)) return std::nullopt;
    const auto& k = c.orbifold_orders;
    if (k.size() == 3) {
      Rat s(0);
      for (unsigned x : k) s += Rat(1, static_cast<long>(x));
      if (s == Rat(1)) return 'c';
    }
    if (k.size() == 4 && std::all_of(k.begin(), k.end(), [](unsigned x) { return x == 2; })) return 'd';
    return std::nullopt;
  }

  for (std::size_t i : idx)
    if (!detail::smooth_rational(m.curves[i])) return std::nullopt;
  if (!detail::singular_exactly_at_crossings(idx, m)) return std::nullopt;

  // degrees in the dual graph, counting intersection multiplicity
  std::vector<Rat> degree(idx.size(), Rat(0));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      if (a != b) {
        const Rat& x = m.matrix[idx[a]][idx[b]];
        if (x != Rat(0) && x != Rat(1) && !(idx.size() == 2 && x == Rat(2))) return std::nullopt;
        degree[a] += x;
      }
  bool cycle = std::all_of(degree.begin(), degree.end(), [](const Rat& d) { return d == Rat(2); });
  if (cycle) {
    for (std::size_t i : idx)
      if (!m.curves[i].orbifold_orders.empty()) return std::nullopt;
    return 'b';
  }
  std::size_t ends = 0;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    const Curve& c = m.curves[idx[a]];
    if (degree[a] == Rat(1)) {
      ++ends;
      if (c.orbifold_orders != std::vector<unsigned>{2, 2}) return std::nullopt;
    } else if (degree[a] == Rat(2)) {
      if (!c.orbifold_orders.empty()) return std::nullopt;
    } else {
      return std::nullopt;
    }
  }
  // connected with all degrees 1 or 2 and not a cycle: a chain
  return ends == 2 ? std::optional<char>('e') : std::nullopt;
}

}  // namespace folia
