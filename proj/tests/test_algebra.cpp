#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "folia/branch.hpp"
#include "folia/intersection.hpp"
#include "oracles.hpp"

using namespace folia;

namespace {

BiPoly Z() { return BiPoly::z(); }
BiPoly W() { return BiPoly::w(); }

Rat random_rat(std::mt19937& rng, int lo, int hi) {
  std::uniform_int_distribution<int> n(lo, hi), d(1, 5);
  return Rat(n(rng), d(rng));
}

}  // namespace

TEST(Rat, CanonicalForm) {
  Rat r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rat::parse("10/4"), Rat(5, 2));
  EXPECT_EQ(Rat::parse("-7"), Rat(-7));
  EXPECT_THROW(Rat(1) / Rat(0), Error);
  EXPECT_THROW(Rat::parse("1/0"), Error);
  EXPECT_THROW(Rat::parse("x"), Error);
}

TEST(Rat, RationalSqrt) {
  Rat root;
  EXPECT_TRUE(rational_sqrt(Rat(9, 4), root));
  EXPECT_EQ(root, Rat(3, 2));
  EXPECT_FALSE(rational_sqrt(Rat(45), root));
  EXPECT_FALSE(rational_sqrt(Rat(-1), root));
}

TEST(UPoly, GcdAndRoots) {
  UPoly x = UPoly::x();
  UPoly a = (x - UPoly(Rat(1))) * (x + UPoly(Rat(2))) * (x * x - UPoly(Rat(2)));
  UPoly b = (x - UPoly(Rat(1))) * (x * x - UPoly(Rat(2)));
  EXPECT_EQ(gcd(a, b), b.monic());
  auto roots = rational_roots(a);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0], Rat(-2));
  EXPECT_EQ(roots[1], Rat(1));
  EXPECT_EQ(strip_rational_roots(a).monic(), (x * x - UPoly(Rat(2))).monic());
  auto half = rational_roots(UPoly(Rat(2)) * x - UPoly(Rat(1)));
  ASSERT_EQ(half.size(), 1u);
  EXPECT_EQ(half[0], Rat(1, 2));
}

TEST(BiPoly, CanonicalPrinting) {
  BiPoly f = Z() * Z() - BiPoly(Rat(3, 2)) * Z() * W() + BiPoly(1);
  EXPECT_EQ(f.str(), "z^2 - 3/2*z*w + 1");
  EXPECT_EQ((W() - Z() * Z()).str(), "-z^2 + w");
  EXPECT_EQ(BiPoly().str(), "0");
  EXPECT_EQ(f.order(), 0);
  EXPECT_EQ((Z() * W() + W().pow(3)).order(), 2);
  EXPECT_EQ(BiPoly().order(), -1);
}

TEST(BiPoly, GcdAndResultant) {
  BiPoly g = gcd((Z() - W()) * (Z() * Z() + W()), (Z() - W()) * (W() + BiPoly(1)));
  EXPECT_EQ(g, Z() - W());
  // w^2 - z and w - 1 meet where z = 1
  UPoly r = resultant_w(W() * W() - Z(), W() - BiPoly(1));
  EXPECT_EQ(r.monic(), (UPoly::x() - UPoly(Rat(1))));
}

TEST(Intersection, KnownValues) {
  EXPECT_EQ(local_intersection_multiplicity(Z(), W()), 1u);
  EXPECT_EQ(local_intersection_multiplicity(W() - Z() * Z(), W()), 2u);
  EXPECT_EQ(local_intersection_multiplicity(W() * W() - Z().pow(3), W() * W() + Z().pow(3)), 6u);
  EXPECT_EQ(local_intersection_multiplicity(Z() * W(), Z()), std::nullopt);
  EXPECT_EQ(local_intersection_multiplicity(Z() + BiPoly(1), W()), 0u);
  EXPECT_EQ(local_intersection_multiplicity(Z() - BiPoly(1), W(), Point{Rat(1), Rat(0)}), 1u);
}

TEST(Intersection, OracleFrozenValue) {
  // frozen from the truncated monomial quotient
  EXPECT_EQ(oracle::monomial_multiplicity(W() * W() - Z().pow(3), W() * W() + Z().pow(3), kOrigin), 6u);
}

TEST(Intersection, SymmetricAndMatchesOracle) {
  auto curves = corpus::curves();
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i; j < curves.size(); ++j) {
      auto a = local_intersection_multiplicity(curves[i], curves[j]);
      EXPECT_EQ(a, local_intersection_multiplicity(curves[j], curves[i]));
      if (a && *a > 12) continue;
      EXPECT_EQ(a, oracle::monomial_multiplicity(curves[i], curves[j], kOrigin, 14))
          << curves[i].str() << " / " << curves[j].str();
    }
}

TEST(Intersection, ProductOfOrdersBound) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_poly = [&](unsigned lo, unsigned hi) {
    BiPoly f;
    for (unsigned d = lo; d <= hi; ++d)
      for (unsigned i = 0; i <= d; ++i) f += BiPoly::term(Rat(coef(rng)), i, d - i);
    return f;
  };
  int equal_cases = 0;
  for (int trial = 0; trial < 40; ++trial) {
    BiPoly f = random_poly(1, 3), g = random_poly(1, 3);
    if (f.is_zero() || g.is_zero()) continue;
    auto m = local_intersection_multiplicity(f, g);
    if (!m) continue;
    unsigned of = static_cast<unsigned>(f.order()), og = static_cast<unsigned>(g.order());
    EXPECT_GE(*m, of * og);
    BiPoly lf = f.homogeneous_part(of), lg = g.homogeneous_part(og);
    if (gcd(lf, lg).is_constant()) {
      EXPECT_EQ(*m, of * og);
      ++equal_cases;
    }
  }
  EXPECT_GT(equal_cases, 0);
}

TEST(Series, ResidueExamples) {
  Rat lambda(-2, 3);
  EXPECT_EQ(series_residue(TruncSeries::constant(lambda, 4), TruncSeries({0, 1}, 4, true)), lambda);
  EXPECT_EQ(series_residue(TruncSeries::constant(Rat(1), 4), TruncSeries({0, 0, 1}, 4, true)), Rat(0));
  EXPECT_EQ(series_residue(TruncSeries({0, 1, 1}, 2, true), TruncSeries({0, 0, 1}, 2, true)), Rat(1));
}

TEST(Series, ResidueNeedsPrecision) {
  // den known only to order 1: its valuation cannot be certified
  EXPECT_THROW(series_residue(TruncSeries({1}, 3, false), TruncSeries({0, 0}, 1, false)), Error);
  TruncSeries s({1, 2}, 1, false);
  EXPECT_THROW((void)s[2], Error);
}

TEST(Series, ResidueUnitInvariance) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    unsigned order = 10;
    std::vector<Rat> n(order + 1), d(order + 1), u(order + 1);
    unsigned v = 1 + trial % 3;
    for (unsigned k = 0; k <= order; ++k) {
      n[k] = random_rat(rng, -4, 4);
      d[k] = k < v ? Rat(0) : random_rat(rng, -4, 4);
      u[k] = random_rat(rng, -4, 4);
    }
    if (d[v].is_zero()) d[v] = Rat(1);
    if (u[0].is_zero()) u[0] = Rat(2);
    TruncSeries num(n, order, false), den(d, order, false), unit(u, order, false);
    Rat base = series_residue(num, den) * den[v];
    Rat scaled = series_residue(num * unit, den * unit) * (den * unit)[v];
    // the residue itself is unchanged; lead coefficients scale by u(0)
    EXPECT_EQ(series_residue(num * unit, den * unit), series_residue(num, den));
    EXPECT_EQ(scaled, base * u[0]);
  }
}

TEST(Branch, SmoothExamples) {
  Branch b = solve_smooth_branch(W() - Z() * Z(), kOrigin, 4);
  EXPECT_TRUE(b.by_z);
  EXPECT_EQ(b.series.to_upoly(), UPoly::x() * UPoly::x());
  Branch c = solve_smooth_branch(W() + Z() + Z() * W(), kOrigin, 3);
  EXPECT_EQ(c.series[1], Rat(-1));
  EXPECT_EQ(c.series[2], Rat(1));
  EXPECT_EQ(c.series[3], Rat(-1));
  EXPECT_THROW(solve_smooth_branch(Z() * Z() + W() * W(), kOrigin, 2), Error);
  try {
    solve_smooth_branch(Z() * Z() + W() * W(), kOrigin, 2);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSmoothHere);
  }
}

TEST(Branch, BackSubstitutionVanishes) {
  for (const auto& f : corpus::curves()) {
    BiPoly local = f;
    if (local.coeff(1, 0).is_zero() && local.coeff(0, 1).is_zero()) continue;
    for (unsigned order : {3u, 7u, 12u}) {
      Branch b = solve_smooth_branch(f, kOrigin, order);
      TruncSeries s = restrict_to_branch(f, b);
      for (unsigned k = 0; k <= s.order(); ++k) EXPECT_TRUE(s[k].is_zero()) << f.str();
    }
  }
  // off the origin
  BiPoly circle = Z() * Z() + W() * W() - BiPoly(25);
  Branch b = solve_smooth_branch(circle, {Rat(3), Rat(4)}, 9);
  TruncSeries s = restrict_to_branch(circle, b);
  for (unsigned k = 0; k <= s.order(); ++k) EXPECT_TRUE(s[k].is_zero());
}

TEST(Branch, NodeFactoring) {
  auto [a, b] = factor_at_node(Z() * W(), kOrigin);
  EXPECT_TRUE(restrict_to_branch(W(), a).is_exact_zero() || restrict_to_branch(Z(), a).is_exact_zero());
  EXPECT_TRUE(restrict_to_branch(W(), b).is_exact_zero() || restrict_to_branch(Z(), b).is_exact_zero());
  auto [c, d] = factor_at_node(W() * W() - Z() * Z(), kOrigin);
  EXPECT_EQ(c.series[1], Rat(-1));
  EXPECT_EQ(d.series[1], Rat(1));
  try {
    factor_at_node(W() * W() - BiPoly(2) * Z() * Z(), kOrigin);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IrrationalTangents);
  }
  try {
    factor_at_node(W() * W() - Z().pow(3), kOrigin);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotANode);
  }
}

TEST(Branch, NodeBranchesLieOnCurve) {
  BiPoly nodal = W() * W() - Z() * Z() - Z().pow(3);
  auto [a, b] = factor_at_node(nodal, kOrigin, 10);
  for (const Branch* br : {&a, &b}) {
    TruncSeries s = restrict_to_branch(nodal, *br);
    for (unsigned k = 0; k <= s.order(); ++k) EXPECT_TRUE(s[k].is_zero());
  }
  EXPECT_NE(a.slope, b.slope);
}
