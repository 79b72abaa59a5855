#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "folia/branch.hpp"
#include "folia/intersection.hpp"

namespace folia {

// Foliation generated by the vector field P d/dz + Q d/dw on an affine chart,
// looked at near `base`. The dual 1-form is A dz + B dw = -Q dz + P dw.
class FoliationGerm {
 public:
  FoliationGerm() = default;
  FoliationGerm(BiPoly p, BiPoly q, Point base = kOrigin) : base_(std::move(base)) {
    if (p.is_zero() && q.is_zero())
      throw Error(ErrorKind::InvalidArgument, "vector field is identically zero");
    BiPoly g = gcd(p, q);
    if (!g.is_constant()) {
      p = exact_div(p, g);
      q = exact_div(q, g);
      removed_ = g;
    }
    p_ = std::move(p);
    q_ = std::move(q);
  }
  // Foliation given by the kernel of A dz + B dw.
  static FoliationGerm from_one_form(const BiPoly& a, const BiPoly& b, Point base = kOrigin) {
    return FoliationGerm(b, -a, std::move(base));
  }

  const BiPoly& P() const { return p_; }
  const BiPoly& Q() const { return q_; }
  BiPoly A() const { return -q_; }
  const BiPoly& B() const { return p_; }
  const Point& base() const { return base_; }
  // Common factor divided out of the input components (1 when none).
  const BiPoly& removed_factor() const { return removed_; }

  // Lie derivative v(f).
  BiPoly apply(const BiPoly& f) const { return p_ * f.dz() + q_ * f.dw(); }

  bool singular_at(const Point& pt) const { return p_.eval(pt).is_zero() && q_.eval(pt).is_zero(); }

  FoliationGerm at(const Point& pt) const {
    FoliationGerm g = *this;
    g.base_ = pt;
    return g;
  }
  // Same foliation in coordinates centred at the base point.
  FoliationGerm centred() const {
    FoliationGerm g;
    g.p_ = p_.translate(base_);
    g.q_ = q_.translate(base_);
    g.removed_ = removed_;
    return g;
  }

  std::string str() const { return "(" + p_.str() + ")*d/dz + (" + q_.str() + ")*d/dw"; }

  friend bool operator==(const FoliationGerm& a, const FoliationGerm& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.base_ == b.base_;
  }

 private:
  BiPoly p_, q_;
  Point base_ = kOrigin;
  BiPoly removed_ = BiPoly(1);
};

// ---------------------------------------------------------------------------
// Singularity classes

struct NonSingular {
  friend bool operator==(const NonSingular&, const NonSingular&) = default;
};

// Eigenvalue ratio not in Q+. `ratio` is set when the ratio is rational; the
// certificate is s = t^2/d - 2 (so lambda + 1/lambda = s) and disc = s^2 - 4.
struct ReducedNonDegenerate {
  std::optional<Rat> ratio;
  Rat ratio_sum;
  Rat discriminant;
  friend bool operator==(const ReducedNonDegenerate&, const ReducedNonDegenerate&) = default;
};

struct ReducedSaddleNode {
  unsigned multiplicity = 1;  // k, with Milnor number k + 1
  friend bool operator==(const ReducedSaddleNode&, const ReducedSaddleNode&) = default;
};

struct NonReduced {
  enum class Reason { RatioInQPlus, Nilpotent, ZeroLinearPart };
  Reason reason = Reason::ZeroLinearPart;
  std::optional<Rat> ratio;  // for RatioInQPlus
  friend bool operator==(const NonReduced&, const NonReduced&) = default;
};

using SingClass = std::variant<NonSingular, ReducedNonDegenerate, ReducedSaddleNode, NonReduced>;

inline bool is_reduced(const SingClass& c) { return !std::holds_alternative<NonReduced>(c); }
inline bool is_singular(const SingClass& c) { return !std::holds_alternative<NonSingular>(c); }

inline std::string describe(const SingClass& c) {
  struct V {
    std::string operator()(const NonSingular&) const { return "nonsingular"; }
    std::string operator()(const ReducedNonDegenerate& r) const {
      if (r.ratio) return "reduced nondegenerate (lambda = " + r.ratio->str() + ")";
      return "reduced nondegenerate (lambda + 1/lambda = " + r.ratio_sum.str() +
             ", discriminant " + r.discriminant.str() + ")";
    }
    std::string operator()(const ReducedSaddleNode& s) const {
      return "saddle-node (k = " + std::to_string(s.multiplicity) + ")";
    }
    std::string operator()(const NonReduced& n) const {
      switch (n.reason) {
        case NonReduced::Reason::RatioInQPlus: return "non-reduced (ratio " + n.ratio->str() + " in Q+)";
        case NonReduced::Reason::Nilpotent: return "non-reduced (nilpotent linear part)";
        case NonReduced::Reason::ZeroLinearPart: return "non-reduced (zero linear part)";
      }
      return "non-reduced";
    }
  };
  return std::visit(V{}, c);
}

// Classifies the singularity of the germ at its base point from the trace t and
// determinant d of the linear part.
inline SingClass classify_singularity(const FoliationGerm& germ) {
  const Point& p = germ.base();
  if (!germ.singular_at(p))
    throw Error(ErrorKind::NotSingularHere, germ.str() + " does not vanish at " + p.str());
  Rat a = germ.P().dz().eval(p), b = germ.P().dw().eval(p);
  Rat c = germ.Q().dz().eval(p), d = germ.Q().dw().eval(p);
  Rat tr = a + d, det = a * d - b * c;
  if (!det.is_zero()) {
    Rat s = tr * tr / det - Rat(2);
    Rat disc = s * s - Rat(4);
    Rat root;
    if (rational_sqrt(disc, root)) {
      // rational ratio; both roots share the sign of s (their product is 1)
      Rat lam = (s - root) / Rat(2);  // the root of larger magnitude when s < 0
      if (s.sign() > 0) {
        Rat big = (s + root) / Rat(2);
        return NonReduced{NonReduced::Reason::RatioInQPlus, big};
      }
      return ReducedNonDegenerate{lam, s, disc};
    }
    return ReducedNonDegenerate{std::nullopt, s, disc};
  }
  if (!tr.is_zero()) {
    Multiplicity mu = local_intersection_multiplicity(germ.P(), germ.Q(), p);
    if (!mu) throw Error(ErrorKind::InvalidArgument, "non-isolated singularity at " + p.str());
    return ReducedSaddleNode{*mu - 1};
  }
  bool zero = a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero();
  return NonReduced{zero ? NonReduced::Reason::ZeroLinearPart : NonReduced::Reason::Nilpotent,
                    std::nullopt};
}

inline SingClass classify_point(const FoliationGerm& germ, const Point& p) {
  if (!germ.singular_at(p)) return NonSingular{};
  return classify_singularity(germ.at(p));
}

// ---------------------------------------------------------------------------
// Singular locus

// Common zeroes that are not rational points; `fixed_z` is set when the factor
// is in w above a rational abscissa.
struct ResidualFactor {
  UPoly factor;
  std::optional<Rat> fixed_z;
  std::string str() const {
    if (fixed_z) return factor.str('w') + " at z = " + fixed_z->str();
    return factor.str('z');
  }
};

struct SingularLocus {
  std::vector<Point> points;  // ascending
  std::vector<ResidualFactor> residual;
};

// Common zeroes of P and Q through the resultant in w and rational root extraction.
inline SingularLocus singular_locus(const FoliationGerm& germ) {
  const BiPoly &P = germ.P(), &Q = germ.Q();
  SingularLocus out;
  UPoly res = resultant_w(P, Q);
  if (res.is_zero()) throw Error(ErrorKind::InvalidArgument, "components share a factor");
  if (res.degree() == 0) return out;
  for (const Rat& z0 : rational_roots(res)) {
    UPoly pw = P.at_z(z0), qw = Q.at_z(z0);
    UPoly g = gcd(pw, qw);
    if (g.is_zero()) throw Error(ErrorKind::InvalidArgument, "vertical line of zeroes");
    if (g.degree() <= 0) continue;
    for (const Rat& w0 : rational_roots(g)) out.points.push_back({z0, w0});
    UPoly rest = strip_rational_roots(g);
    if (rest.degree() > 0) out.residual.push_back({squarefree_part(rest), z0});
  }
  UPoly rest = strip_rational_roots(squarefree_part(res));
  if (rest.degree() > 0) out.residual.push_back({rest.monic(), std::nullopt});
  std::sort(out.points.begin(), out.points.end());
  return out;
}

// ---------------------------------------------------------------------------
// Indices

enum class IndexKind { Tang, Z, CS };

inline std::string_view to_string(IndexKind k) {
  switch (k) {
    case IndexKind::Tang: return "tang";
    case IndexKind::Z: return "Z";
    case IndexKind::CS: return "CS";
  }
  return "?";
}

struct IndexRecord {
  IndexKind kind = IndexKind::Z;
  Rat value;
  Point point;
  std::string curve;
  unsigned orbifold_order = 1;
};

// dim O_p/<f, v(f)> divided by the orbifold order k of the point.
inline Rat tang_index(const FoliationGerm& germ, const BiPoly& f, const Point& p, unsigned k = 1) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "orbifold order must be positive");
  BiPoly vf = germ.apply(f);
  Multiplicity m = local_intersection_multiplicity(f, vf, p);
  if (!m) {
    BiPoly g = gcd(f, vf);
    throw Error(ErrorKind::CurveIsInvariant, "component " + g.str() + " of " + f.str() +
                                                 " is invariant (or repeated) through " + p.str());
  }
  return Rat(static_cast<long>(*m)) / Rat(static_cast<long>(k));
}

namespace detail {

inline constexpr unsigned kInitialOrder = 8;

// v restricted to the branch: the parameter component and the transverse residual.
inline void check_invariant(const FoliationGerm& germ, const Branch& b) {
  const BiPoly& along = b.by_z ? germ.P() : germ.Q();
  const BiPoly& across = b.by_z ? germ.Q() : germ.P();
  TruncSeries lhs = restrict_to_branch(across, b) - b.series.derivative() * restrict_to_branch(along, b);
  if (lhs.exact()) {
    if (!lhs.is_exact_zero())
      throw Error(ErrorKind::BranchNotInvariant, b.describe() + " is not invariant");
    return;
  }
  for (unsigned k = 0; k <= lhs.order(); ++k)
    if (!lhs[k].is_zero()) throw Error(ErrorKind::BranchNotInvariant, b.describe() + " is not invariant");
}

template <class F>
auto with_reexpansion(Branch b, unsigned cap, F&& body) {
  unsigned order = std::max(b.series.order(), kInitialOrder);
  if (order > cap) order = cap;
  if (b.series.order() < order) b = b.expanded(order);
  while (true) {
    try {
      return body(b);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InsufficientTruncation || b.series.exact() || order >= cap) throw;
      order = std::min(cap, order * 2);
      b = b.expanded(order);
    }
  }
}

}  // namespace detail

// Z index of an invariant smooth branch: vanishing order of v restricted to it.
inline long z_index(const FoliationGerm& germ, const Branch& branch,
                    unsigned cap = kDefaultTruncationCap) {
  return detail::with_reexpansion(branch, cap, [&](const Branch& b) -> long {
    detail::check_invariant(germ, b);
    TruncSeries along = restrict_to_branch(b.by_z ? germ.P() : germ.Q(), b);
    if (along.is_exact_zero())
      throw Error(ErrorKind::InvalidArgument, "vector field vanishes along " + b.describe());
    int v = along.valuation();
    if (v < 0) throw Error(ErrorKind::InsufficientTruncation, "restriction vanishes to truncation order");
    return v;
  });
}

// Camacho-Sad index of an invariant smooth branch: in coordinates where the
// branch is {w = 0}, the residue of -A^/B with A = w A^.
inline Rat cs_index(const FoliationGerm& germ, const Branch& branch,
                    unsigned cap = kDefaultTruncationCap) {
  return detail::with_reexpansion(branch, cap, [&](const Branch& b) -> Rat {
    detail::check_invariant(germ, b);
    const BiPoly& along = b.by_z ? germ.P() : germ.Q();
    const BiPoly& across = b.by_z ? germ.Q() : germ.P();
    BiPoly across_d = b.by_z ? across.dw() : across.dz();
    BiPoly along_d = b.by_z ? along.dw() : along.dz();
    TruncSeries num = restrict_to_branch(across_d, b) - b.series.derivative() * restrict_to_branch(along_d, b);
    TruncSeries den = restrict_to_branch(along, b);
    return series_residue(num, den);
  });
}

// Node rule: Z adds with -2, CS adds with +2.
inline IndexRecord combine_at_node(IndexKind kind, const IndexRecord& left, const IndexRecord& right) {
  if (!(left.point == right.point))
    throw Error(ErrorKind::MismatchedPoints, left.point.str() + " vs " + right.point.str());
  if (left.kind != kind || right.kind != kind || kind == IndexKind::Tang)
    throw Error(ErrorKind::InvalidArgument, "node rule applies to matching Z or CS records");
  IndexRecord out = left;
  out.value = left.value + right.value + (kind == IndexKind::Z ? Rat(-2) : Rat(2));
  out.curve = left.curve == right.curve ? left.curve : left.curve + "+" + right.curve;
  return out;
}

// Z and CS of an invariant curve {f = 0} at p: smooth point or ordinary node.
struct CurveIndices {
  std::vector<Branch> branches;
  std::vector<IndexRecord> per_branch;  // Z then CS for each branch
  IndexRecord z;
  IndexRecord cs;
};

inline CurveIndices invariant_curve_indices(const FoliationGerm& germ, const BiPoly& f, const Point& p,
                                            const std::string& curve = "C",
                                            unsigned cap = kDefaultTruncationCap) {
  CurveIndices out;
  BiPoly local = f.translate(p);
  if (!local.coeff(0, 0).is_zero())
    throw Error(ErrorKind::InvalidArgument, "curve does not pass through " + p.str());
  bool smooth = !local.coeff(1, 0).is_zero() || !local.coeff(0, 1).is_zero();
  if (smooth) {
    out.branches.push_back(solve_smooth_branch(f, p, detail::kInitialOrder));
  } else {
    try {
      auto [b1, b2] = factor_at_node(f, p, detail::kInitialOrder);
      out.branches = {b1, b2};
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotANode)
        throw Error(ErrorKind::UnsupportedBranch,
                    "only smooth points and ordinary nodes are supported: " + std::string(e.what()));
      throw;
    }
  }
  for (const auto& b : out.branches) {
    out.per_branch.push_back({IndexKind::Z, Rat(z_index(germ, b, cap)), p, curve, 1});
    out.per_branch.push_back({IndexKind::CS, cs_index(germ, b, cap), p, curve, 1});
  }
  if (out.branches.size() == 1) {
    out.z = out.per_branch[0];
    out.cs = out.per_branch[1];
  } else {
    out.z = combine_at_node(IndexKind::Z, out.per_branch[0], out.per_branch[2]);
    out.cs = combine_at_node(IndexKind::CS, out.per_branch[1], out.per_branch[3]);
  }
  return out;
}

}  // namespace folia
