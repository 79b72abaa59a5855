#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "folia/surface.hpp"

using namespace folia;
using namespace fixtures;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

// C carries one reduced singularity (Z = 1) where it meets D; D is elliptic so
// it stays K_F-nonnegative.
SurfaceModel contractible(unsigned k, unsigned l) {
  SurfaceModel m;
  Curve c = rational("C", k > 1 ? std::vector<unsigned>{k} : std::vector<unsigned>{});
  Rat self = -Rat(static_cast<long>(l), static_cast<long>(k));
  c.singularities->push_back(rec("p", 1, self));
  c.kx_degree = Rat(-2) + Rat(1) - Rat(1, static_cast<long>(k)) - self;
  add(m, c, self);
  Curve d;
  d.id = "D";
  d.genus = 1;
  d.singularities = std::vector<SingularityRecord>{rec("p", 1, Rat(1) / self)};
  d.kx_degree = Rat(0);
  add(m, d, Rat(0));
  edge(m, "C", "D", Rat(1));
  return m;
}

}  // namespace

TEST(Intersect, Bilinear) {
  SurfaceModel m;
  add(m, rational("A"), Rat(-1));
  add(m, rational("B"), Rat(-1));
  add(m, rational("C"), Rat(-2));
  edge(m, "A", "B", Rat(1));
  EXPECT_EQ(intersect(QDivisor::of("C"), QDivisor::of("C"), m), Rat(-2));
  EXPECT_EQ(intersect(QDivisor::of("A") + QDivisor::of("C"), QDivisor(), m), Rat(0));
  EXPECT_EQ(intersect(QDivisor::of("A", Rat(2)), QDivisor::of("B", Rat(3)), m), Rat(6));
  EXPECT_EQ(kind_of([&] { intersect(QDivisor::of("X"), QDivisor::of("A"), m); }), ErrorKind::UnknownCurve);
}

TEST(Intersect, OrbifoldSelfIntersection) {
  SurfaceModel m;
  add(m, rational("C", {3}), Rat(-2, 3));
  EXPECT_EQ(intersect(QDivisor::of("C", Rat(3)), QDivisor::of("C"), m), Rat(-2));
}

TEST(ChiOrb, KnownValues) {
  SurfaceModel m;
  add(m, rational("P"), Rat(0));
  add(m, rational("T", {2, 3, 6}), Rat(0));
  add(m, rational("K", {5}), Rat(0));
  EXPECT_EQ(chi_orb("P", m), Rat(2));
  EXPECT_EQ(chi_orb("T", m), Rat(0));
  EXPECT_EQ(chi_orb("K", m), Rat(1) + Rat(1, 5));
  Curve n = rational("N");
  n.nodes = 1;
  add(m, n, Rat(0));
  EXPECT_EQ(chi_orb("N", m), Rat(0));
}

TEST(ChiOrb, AdjunctionCrossCheck) {
  SurfaceModel m;
  Curve c = rational("C");
  c.kx_degree = Rat(-1);
  add(m, c, Rat(-1));
  EXPECT_EQ(chi_orb("C", m), Rat(2));
  m.curves[0].kx_degree = Rat(0);
  EXPECT_EQ(kind_of([&] { chi_orb("C", m); }), ErrorKind::InconsistentModel);
  m.curves[0].genus.reset();
  EXPECT_EQ(chi_orb("C", m), Rat(1));
  m.curves[0].kx_degree.reset();
  EXPECT_EQ(kind_of([&] { chi_orb("C", m); }), ErrorKind::InsufficientData);
}

TEST(KfDegree, KnownValues) {
  SurfaceModel m;
  Curve fibre = rational("F");
  fibre.invariant = false;
  add(m, fibre, Rat(0));
  EXPECT_EQ(kf_degree("F", m), Rat(0));
  EXPECT_TRUE(kf_degree_report("F", m).transverse);

  add(m, rational("G"), Rat(0));
  EXPECT_EQ(kf_degree("G", m), Rat(-2));

  add(m, rational("M"), Rat(-2));
  curve(m, "M").singularities = std::vector<SingularityRecord>{rec("p", 1, Rat(-1)), rec("q", 1, Rat(-1))};
  EXPECT_EQ(kf_degree("M", m), Rat(0));

  Curve t = rational("T");
  t.invariant = false;
  t.singularities->push_back({"p", std::nullopt, std::nullopt, Rat(2)});
  add(m, t, Rat(1));
  KfReport r = kf_degree_report("T", m);
  EXPECT_EQ(r.degree, Rat(1));
  EXPECT_EQ(r.positivity, Rat(2));
  EXPECT_FALSE(r.transverse);

  curve(m, "M").singularities.reset();
  EXPECT_EQ(kind_of([&] { kf_degree("M", m); }), ErrorKind::MissingIndices);
}

TEST(CamachoSad, KnownValues) {
  SurfaceModel m;
  add(m, rational("C"), Rat(0));
  EXPECT_TRUE(verify_camacho_sad("C", m).pass());

  Archetype b = archetype('b');
  for (const auto& id : b.component) EXPECT_TRUE(verify_camacho_sad(id, b.model).pass());

  add(m, rational("D"), Rat(-1));
  curve(m, "D").singularities = std::vector<SingularityRecord>{rec("p", 1, Rat(1, 2)), rec("q", 1, Rat(1, 2))};
  CsReport r = verify_camacho_sad("D", m);
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.residual, Rat(2));

  curve(m, "D").invariant = false;
  EXPECT_EQ(kind_of([&] { verify_camacho_sad("D", m); }), ErrorKind::InvalidArgument);
}

TEST(Nef, KnownValues) {
  SurfaceModel m;
  add(m, rational("C"), Rat(-1));
  add(m, rational("F"), Rat(0));
  EXPECT_TRUE(is_nef(QDivisor(), m).nef);
  NefResult r = is_nef(QDivisor::of("C"), m);
  EXPECT_FALSE(r.nef);
  EXPECT_EQ(r.witness, "C");
  EXPECT_EQ(r.witness_pairing, Rat(-1));
  EXPECT_TRUE(is_nef(QDivisor::of("F", Rat(5)), m).nef);
}

TEST(Zariski, KnownValues) {
  SurfaceModel m;
  add(m, rational("A"), Rat(-2));
  add(m, rational("B"), Rat(-2));
  add(m, rational("F"), Rat(0));
  edge(m, "A", "B", Rat(1));

  ZariskiDecomposition nef = zariski_decompose(QDivisor::of("F"), m);
  EXPECT_EQ(nef.positive, QDivisor::of("F"));
  EXPECT_TRUE(nef.negative.is_zero());

  ZariskiDecomposition ab = zariski_decompose(QDivisor::of("A"), m);
  EXPECT_TRUE(ab.positive.is_zero());
  EXPECT_EQ(ab.negative, QDivisor::of("A"));

  SurfaceModel one;
  add(one, rational("A"), Rat(-1));
  ZariskiDecomposition single = zariski_decompose(QDivisor::of("A"), one);
  EXPECT_TRUE(single.positive.is_zero());
  EXPECT_EQ(single.negative, QDivisor::of("A"));
}

TEST(Zariski, NonTrivialPositivePart) {
  // H meets the end of an A2 chain; only C1 is negative against L
  SurfaceModel m;
  add(m, rational("C1"), Rat(-2));
  add(m, rational("C2"), Rat(-2));
  add(m, rational("H"), Rat(1));
  edge(m, "C1", "C2", Rat(1));
  edge(m, "H", "C1", Rat(1));
  QDivisor l = QDivisor::of("H") + QDivisor::of("C1", Rat(2));
  ZariskiDecomposition z = zariski_decompose(l, m);
  EXPECT_EQ(z.negative, QDivisor::of("C1", Rat(3, 2)));
  EXPECT_EQ(z.positive + z.negative, l);
  EXPECT_EQ(intersect(z.positive, QDivisor::of("C1"), m), Rat(0));
  EXPECT_EQ(intersect(z.positive, QDivisor::of("C2"), m), Rat(1, 2));

  // with H through both ends of the chain the support is all of it
  edge(m, "H", "C2", Rat(1));
  ZariskiDecomposition both = zariski_decompose(QDivisor::of("H") + QDivisor::of("C1", Rat(3)) + QDivisor::of("C2", Rat(3)), m);
  EXPECT_EQ(both.support, (std::vector<std::string>{"C1", "C2"}));
  EXPECT_EQ(both.negative, QDivisor::of("C1", Rat(2)) + QDivisor::of("C2", Rat(2)));
}

TEST(Zariski, PermutationInvariant) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 15; ++trial) {
    Configuration c = random_configuration(rng);
    QDivisor l = QDivisor::of("H");
    for (const auto& id : c.ids) l.set(id, Rat(static_cast<long>(rng() % 3)));
    ZariskiDecomposition base = zariski_decompose(l, c.model);
    std::vector<std::size_t> perm(c.model.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    ZariskiDecomposition other = zariski_decompose(l, permuted(c.model, perm));
    EXPECT_EQ(base.positive, other.positive);
    EXPECT_EQ(base.negative, other.negative);
    EXPECT_EQ(base.support, other.support);
  }
}

TEST(Zariski, NotDecomposable) {
  SurfaceModel m;
  add(m, rational("A"), Rat(1));
  EXPECT_EQ(kind_of([&] { zariski_decompose(QDivisor::of("A", Rat(-1)), m); }), ErrorKind::NotDecomposable);
}

TEST(Contraction, OrdersAndCorrection) {
  struct Case {
    unsigned k, l;
  };
  for (Case cs : {Case{1, 1}, Case{1, 2}, Case{2, 1}, Case{3, 2}}) {
    SurfaceModel m = contractible(cs.k, cs.l);
    ContractionResult r = contract_negative_curve("C", m);
    EXPECT_EQ(r.k, cs.k);
    EXPECT_EQ(r.l, cs.l);
    ASSERT_EQ(r.model.size(), 1u);
    const Curve& d = r.model.curves[0];
    if (cs.l == 1)
      EXPECT_TRUE(d.orbifold_orders.empty());
    else
      EXPECT_EQ(d.orbifold_orders, std::vector<unsigned>{cs.l});
    EXPECT_EQ(r.model.matrix[0][0], Rat(static_cast<long>(cs.k), static_cast<long>(cs.l)));
    EXPECT_TRUE(d.singularities->empty());
    EXPECT_EQ(r.neighbours, std::vector<std::string>{"D"});
  }
}

TEST(Contraction, ProfileViolations) {
  SurfaceModel m = contractible(1, 1);
  curve(m, "C").singularities->push_back(rec("q", 1, Rat(0)));
  EXPECT_EQ(kind_of([&] { contract_negative_curve("C", m); }), ErrorKind::NotContractible);

  SurfaceModel gcd_fail = contractible(2, 1);
  gcd_fail.matrix[0][0] = Rat(-1);  // l = 2, not prime to k = 2
  gcd_fail.curves[0].kx_degree.reset();
  EXPECT_EQ(kind_of([&] { contract_negative_curve("C", gcd_fail); }), ErrorKind::NotContractible);

  SurfaceModel noninv = contractible(1, 2);
  curve(noninv, "C").invariant = false;
  EXPECT_EQ(kind_of([&] { contract_negative_curve("C", noninv); }), ErrorKind::NotContractible);
}

TEST(Contraction, BlowUpRoundTrip) {
  SurfaceModel m;
  Curve d = rational("D");
  d.kx_degree = Rat(-3);
  add(m, d, Rat(1));
  Curve g = rational("G");
  g.invariant = false;
  g.kx_degree = Rat(-2);
  add(m, g, Rat(0));
  edge(m, "D", "G", Rat(1));

  SurfaceModel up = blow_up_point(m, {"D", "G"}, "E");
  EXPECT_EQ(up.pairing("D", "D"), Rat(0));
  EXPECT_EQ(up.pairing("D", "G"), Rat(0));
  EXPECT_EQ(up.pairing("E", "E"), Rat(-1));
  curve(up, "E").singularities = std::vector<SingularityRecord>{rec("p", 1, Rat(-1))};
  ContractionResult back = contract_negative_curve("E", up);
  EXPECT_EQ(back.model.matrix, m.matrix);
  for (std::size_t i = 0; i < m.size(); ++i) EXPECT_EQ(back.model.curves[i].kx_degree, m.curves[i].kx_degree);

  SurfaceModel down = blow_down("E", blow_up_point(m, {"D", "G"}, "E"));
  EXPECT_EQ(down.matrix, m.matrix);
}

TEST(NefModel, FixpointAndOrder) {
  SurfaceModel flat;
  add(flat, rational("F"), Rat(0));
  curve(flat, "F").invariant = false;
  NefModelResult same = nef_model(flat);
  EXPECT_TRUE(same.contracted.empty());
  EXPECT_EQ(same.model.matrix, flat.matrix);

  NefModelResult one = nef_model(contractible(1, 2));
  EXPECT_EQ(one.contracted, std::vector<std::string>{"C"});
  EXPECT_EQ(one.model.curves[0].orbifold_orders, std::vector<unsigned>{2});

  // C1 - C2 - D: C2 becomes contractible once C1 is gone
  SurfaceModel chain;
  add(chain, rational("C1"), Rat(-1));
  add(chain, rational("C2"), Rat(-2));
  Curve d;
  d.id = "D";
  d.genus = 1;
  d.singularities = std::vector<SingularityRecord>{};
  add(chain, d, Rat(0));
  edge(chain, "C1", "C2", Rat(1));
  edge(chain, "C2", "D", Rat(1));
  crossing(chain, "C1", "C2", "p");
  crossing(chain, "C2", "D", "q");
  NefModelResult two = nef_model(chain);
  EXPECT_EQ(two.contracted, (std::vector<std::string>{"C1", "C2"}));
  ASSERT_EQ(two.model.size(), 1u);
  EXPECT_EQ(two.model.curves[0].id, "D");
  EXPECT_EQ(nef_model(chain).contracted, two.contracted);
}

TEST(NefModel, ReportsStuckCurves) {
  SurfaceModel m;
  add(m, rational("P"), Rat(-3));
  NefModelResult r = nef_model(m);
  EXPECT_TRUE(r.contracted.empty());
  ASSERT_EQ(r.inconsistencies.size(), 1u);
  EXPECT_EQ(r.inconsistencies[0].first, "P");
}

TEST(Kodaira, Numerical) {
  SurfaceModel m;
  add(m, rational("H"), Rat(3));
  EXPECT_EQ(numerical_kodaira(QDivisor::of("H"), m), 2);

  SurfaceModel f;
  add(f, rational("F"), Rat(0));
  add(f, rational("S"), Rat(0));
  edge(f, "F", "S", Rat(1));
  EXPECT_EQ(numerical_kodaira(QDivisor::of("F"), f), 1);
  EXPECT_EQ(numerical_kodaira(QDivisor(), f), 0);

  SurfaceModel neg;
  add(neg, rational("C"), Rat(-1));
  EXPECT_EQ(kind_of([&] { numerical_kodaira(QDivisor::of("C"), neg); }), ErrorKind::NotNef);
}

TEST(Classifier, Archetypes) {
  for (char k : {'a', 'b', 'c', 'd', 'e'}) {
    Archetype a = archetype(k);
    EXPECT_EQ(classify_component(a.component, a.model), k);
    for (const auto& [name, bad] : corruptions(k)) {
      auto got = classify_component(bad.component, bad.model);
      EXPECT_TRUE(!got || *got != k) << k << ": " << name;
    }
  }
}

TEST(Classifier, NodalRationalCurve) {
  SurfaceModel m;
  Curve n = rational("N");
  n.nodes = 1;
  n.singularities->push_back(rec("node", 0, Rat(0)));
  add(m, n, Rat(0));
  EXPECT_EQ(classify_component({"N"}, m), 'b');
}

TEST(Classifier, BlowDownOfTwoCycleGivesNodalCurve) {
  // C1.C2 = 2 with reduced saddles at both crossings
  SurfaceModel m;
  add(m, rational("C1"), Rat(-4));
  add(m, rational("C2"), Rat(-1));
  edge(m, "C1", "C2", Rat(2));
  crossing(m, "C1", "C2", "p", 1, Rat(-2), 1, Rat(-1, 2));
  crossing(m, "C1", "C2", "q", 1, Rat(-2), 1, Rat(-1, 2));
  for (const auto& id : {"C1", "C2"}) EXPECT_TRUE(verify_camacho_sad(id, m).pass());
  EXPECT_EQ(classify_component({"C1", "C2"}, m), 'b');

  SurfaceModel down = blow_down("C2", m);
  ASSERT_EQ(down.size(), 1u);
  EXPECT_EQ(down.curves[0].nodes, 1);
  EXPECT_EQ(down.matrix[0][0], Rat(0));
  ASSERT_EQ(down.curves[0].singularities->size(), 1u);
  EXPECT_EQ(down.curves[0].singularities->front().z, 0);
  EXPECT_TRUE(verify_camacho_sad("C1", down).pass());
  EXPECT_EQ(kf_degree("C1", down), Rat(0));
  EXPECT_EQ(classify_component({"C1"}, down), 'b');
}

TEST(Classifier, RejectsDisconnected) {
  SurfaceModel m;
  add(m, rational("A"), Rat(-2));
  add(m, rational("B"), Rat(-2));
  EXPECT_EQ(kind_of([&] { classify_component({"A", "B"}, m); }), ErrorKind::InvalidArgument);
}
