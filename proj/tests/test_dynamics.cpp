#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace tltest;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(TL_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LtiSystem exab() { return parse_system(slurp("exab.sys")); }
LtiSystem exab_t() { return parse_system(slurp("exab_transposed.sys")); }

const std::vector<TropVector> kColumns = {{0, NI(), NI()}, {1, 5, NI()}, {2, 7, 11}, {3, 9, 14},
                                          {4, 11, 17},     {5, 13, 20},  {6, 15, 23}};

LtiSystem random_system(Rng& rng, std::size_t n, std::size_t p, std::size_t q) {
  return LtiSystem(rng.mat(n, n, -3, 3, 0.3), rng.mat(n, p, -3, 3, 0.3), rng.mat(q, n, -3, 3, 0.3));
}

}  // namespace

TEST(LtiSystem, Validation) {
  TropMatrix a = exab().a();
  EXPECT_THROW(LtiSystem(a, TropMatrix(2, 1)), DimensionError);
  EXPECT_THROW(LtiSystem(TropMatrix(2, 3), TropMatrix(2, 1)), DimensionError);
  EXPECT_THROW(LtiSystem(a, TropMatrix(3, 1), TropMatrix(1, 2)), DimensionError);
  EXPECT_THROW(LtiSystem(a, TropMatrix(3, 1, Flavor::MinPlus)), FlavorError);
  TropMatrix top = a;
  top(0, 0) = PI();
  EXPECT_THROW(LtiSystem(top, TropMatrix(3, 1)), Error);
  EXPECT_THROW(LtiSystem(a, TropMatrix(3, 1)).c(), Error);
}

TEST(SystemText, RoundTripAndErrors) {
  LtiSystem s = exab();
  EXPECT_EQ(parse_system(format_system(s)), s);
  EXPECT_THROW(parse_system("A:\nmaxplus 1 1\n0\n"), ParseError);
  EXPECT_THROW(parse_system("A:\nmaxplus 1 1\n0\nA:\nmaxplus 1 1\n0\n"), ParseError);
  EXPECT_THROW(parse_system("X:\nmaxplus 1 1\n0\n"), ParseError);
  EXPECT_THROW(parse_system("A:\nmaxplus 1 1\n0\nB:\nmaxplus 2 1\n0\n0\n"), ParseError);
}

TEST(Reach, ColumnsOfTandemExample) {
  TropMatrix r = reach_k(exab(), 7);
  ASSERT_EQ(r.cols(), 7u);
  EXPECT_EQ(r.columns(), kColumns);
  EXPECT_EQ(reach_k(exab(), 0).cols(), 0u);
}

TEST(Reach, OmegaOfTandemExample) {
  ReachOmega r = reach_omega(exab());
  ASSERT_EQ(r.certificates.size(), 1u);
  EXPECT_EQ(r.certificates[0].transient, 2u);
  EXPECT_EQ(r.certificates[0].period, 1u);
  EXPECT_EQ(r.certificates[0].increments, (std::vector<Period>{{1, 2, 3}}));
  SemilinearSet expected = set_union(SemilinearSet::points(3, {{0, NI(), NI()}, {1, 5, NI()}}),
                                     SemilinearSet::linear({2, 7, 11}, {{1, 2, 3}}));
  EXPECT_TRUE(equal_on_box(r.generators.set(), expected, {{-20, 40}, {-20, 40}, {-20, 40}}).equal);
  EXPECT_EQ(r.generators.set(), expected);
}

TEST(Reach, ReducedGeneratorsGrowStrictly) {
  for (std::size_t k = 1; k <= 6; ++k) {
    auto cols = reach_k(exab(), k).columns();
    EXPECT_EQ(reduce_generators(GeneratorSet::finite(3, cols)).vectors().size(), k);
  }
}

TEST(Observe, SecondExample) {
  LtiSystem s = exab();
  TropMatrix o = obs_k(s, 5);
  std::vector<TropVector> rows;
  for (std::size_t i = 0; i < o.rows(); ++i) rows.push_back(o.row(i));
  EXPECT_EQ(rows, (std::vector<TropVector>{
                      {NI(), NI(), 3}, {NI(), 9, 6}, {14, 12, 9}, {17, 15, 12}, {20, 18, 15}}));
  CongruenceBasis b = obs_omega(s);
  ASSERT_EQ(b.rows.size(), 1u);
  EXPECT_EQ(b.transient(), 2u);
  EXPECT_EQ(b.period(), 1u);
  EXPECT_EQ(b.rows[0].increments, (std::vector<Period>{{3, 3, 3}}));
  EXPECT_EQ(b.block().rows(), 3u);
  EXPECT_TRUE(congruent(b, {-5, -3, 0}, {-6, -3, 0}));
  EXPECT_FALSE(congruent(b, {-5, -3, 0}, {-4, -3, 0}));
  EXPECT_EQ(class_max(b, {-5, -3, 0}), (TropVector{-5, -3, 0}));
  EXPECT_EQ(class_max(b, {-9, -3, 0}), (TropVector{-5, -3, 0}));
}

TEST(Observe, TransposedSystemClasses) {
  CongruenceBasis b = obs_omega(exab_t());
  for (long long alpha : {-7, -8, -12}) EXPECT_TRUE(congruent(b, {-2, -7, -11}, {-2, alpha, -11}));
  EXPECT_FALSE(congruent(b, {-2, -7, -11}, {-2, -6, -11}));
  EXPECT_EQ(class_max(b, {-2, -9, -11}), (TropVector{-2, -7, -11}));
  EXPECT_EQ(class_max(b, {0, 0, 0}), (TropVector{0, 0, 0}));
  for (int i = -3; i <= 3; ++i)
    for (int j = -3; j <= 3; ++j)
      for (int k = -3; k <= 3; ++k) {
        TropVector x{i, j, k};
        if (x != TropVector{0, 0, 0}) ASSERT_FALSE(congruent(b, {0, 0, 0}, x));
      }
  EXPECT_THROW(congruent(b, {0, 0}, {0, 0}), DimensionError);
}

TEST(Observe, NeedsC) { EXPECT_THROW(obs_k(LtiSystem(exab().a(), exab().b()), 2), Error); }

TEST(Detection, FailsWithinTightLimits) {
  // Orbit patterns alternate, so no period 1 exists.
  TropMatrix swap = parse_matrix("maxplus 2 2\n-inf 0\n0 -inf\n");
  DetectionParams p;
  p.max_period = 1;
  p.max_transient = 10;
  EXPECT_THROW(detect_cyclicity(swap, {0, NI()}, p), DetectionFailed);
  p.max_period = 2;
  auto cert = detect_cyclicity(swap, {0, NI()}, p);
  EXPECT_EQ(cert.period, 2u);
  EXPECT_EQ(cert.transient, 0u);
  p.window = 0;
  EXPECT_THROW(detect_cyclicity(swap, {0, NI()}, p), Error);
}

TEST(Control, TandemTargets) {
  LtiSystem s = exab();
  auto u = control_solve(s, 3, {2, 7, 11});
  ASSERT_TRUE(u);
  EXPECT_EQ(*u, (TropVector{2, 1, 0}));
  EXPECT_EQ(mv(reach_k(s, 3), *u), (TropVector{2, 7, 11}));
  auto chrono = chronological_inputs(*u, 1);
  EXPECT_EQ(chrono, (std::vector<TropVector>{{0}, {1}, {2}}));
  EXPECT_EQ(simulate(s, chrono).back(), (TropVector{2, 7, 11}));
  EXPECT_FALSE(control_solve(s, 1, {0, 0, 0}));
  EXPECT_THROW(control_solve(s, 0, {0, 0, 0}), Error);
}

TEST(Simulate, LinearInputsTraceReachableColumns) {
  std::vector<TropVector> u;
  for (int k = 1; k <= 7; ++k) u.push_back({k - 1});
  EXPECT_EQ(simulate(exab(), u), kColumns);
}

TEST(Simulate, AugmentedSystemUsesRunningMaximum) {
  LtiSystem s = exab();
  LtiSystem aug = nondecreasing_augment(s);
  EXPECT_EQ(aug.states(), 4u);
  EXPECT_EQ(aug.outputs(), 1u);
  std::vector<TropVector> u = {{3}, {0}, {NI()}, {7}, {2}};
  std::vector<TropVector> hull;
  ExtInt top = NI();
  for (const auto& x : u) hull.push_back({top = max_oplus(top, x[0])});
  auto xs = simulate(aug, u);
  auto ref = simulate(s, hull);
  for (std::size_t k = 0; k < u.size(); ++k) {
    EXPECT_EQ(TropVector(xs[k].begin(), xs[k].begin() + 3), ref[k]);
    EXPECT_EQ(xs[k][3], hull[k][0]);
  }
}

TEST(DynamicsProperty, CertificateExtrapolatesOrbit) {
  Rng rng(501);
  for (int t = 0; t < 200; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    TropMatrix a = rng.mat(n, n, -3, 3, 0.3);
    TropVector x0 = rng.vec(n, -3, 3, 0.3);
    auto cert = detect_cyclicity(a, x0);
    TropVector x = x0;
    for (std::size_t k = 0; k < 80; ++k, x = mv(a, x)) ASSERT_EQ(cert.at(k), x) << "k=" << k;
  }
}

TEST(DynamicsProperty, WindowDoublingKeepsCertificate) {
  Rng rng(502);
  for (int t = 0; t < 200; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    TropMatrix a = rng.mat(n, n, -3, 3, 0.3);
    TropVector x0 = rng.vec(n, -3, 3, 0.3);
    DetectionParams p, q;
    q.window = 2 * p.window;
    auto c1 = detect_cyclicity(a, x0, p), c2 = detect_cyclicity(a, x0, q);
    ASSERT_EQ(c1.transient, c2.transient);
    ASSERT_EQ(c1.period, c2.period);
    ASSERT_EQ(c1.increments, c2.increments);
  }
}

TEST(DynamicsProperty, ReachOmegaContainsEveryReachColumn) {
  Rng rng(503);
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto p = static_cast<std::size_t>(rng.uniform(1, 2));
    LtiSystem s = random_system(rng, n, p, 1);
    ReachOmega r = reach_omega(s);
    TropMatrix rk = reach_k(s, 30);
    for (const auto& c : rk.columns()) ASSERT_TRUE(member(r.generators.set(), c));
    for (const auto& g : sample_elements(r.generators.set(), 3)) {
      bool found = false;
      for (const auto& c : rk.columns()) found = found || c == g;
      ASSERT_TRUE(found) << format_vector(g);
    }
  }
}

TEST(DynamicsProperty, CongruenceMatchesLongObservation) {
  Rng rng(504);
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    LtiSystem s = random_system(rng, n, 1, static_cast<std::size_t>(rng.uniform(1, 2)));
    CongruenceBasis b = obs_omega(s);
    TropMatrix o = obs_k(s, 120);
    for (int q = 0; q < 30; ++q) {
      TropVector x = rng.vec(n, -3, 3, 0.2), y = rng.vec(n, -3, 3, 0.2);
      if (q % 3 == 0) y = x, y[0] = ExtInt(rng.uniform(-4, 4));
      ASSERT_EQ(congruent(b, x, y), mv(o, x) == mv(o, y)) << format_vector(x) << " / " << format_vector(y);
    }
  }
}

TEST(DynamicsProperty, ClassMaxIsGreatestInClass) {
  Rng rng(505);
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    LtiSystem s = random_system(rng, n, 1, 1);
    CongruenceBasis b = obs_omega(s);
    TropMatrix o = obs_k(s, 120);
    for (int q = 0; q < 10; ++q) {
      TropVector x = rng.vec(n, -3, 3, 0.2);
      TropVector m = class_max(b, x);
      ASSERT_TRUE(leq(x, m));
      ASSERT_EQ(mv(o, m), mv(o, x));
      ASSERT_TRUE(congruent(b, x, m));
      for (int r = 0; r < 20; ++r) {
        TropVector y = rng.vec(n, -5, 5, 0.2);
        if (mv(o, y) == mv(o, x)) ASSERT_TRUE(leq(y, m));
      }
    }
  }
}

TEST(DynamicsProperty, ControlAgreesWithBruteForce) {
  Rng rng(506);
  for (int t = 0; t < 60; ++t) {
    LtiSystem s = random_system(rng, 2, 1, 1);
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 2));
    TropMatrix r = reach_k(s, k);
    TropVector z = rng.vec(2, -4, 4, 0.2);
    bool brute = false;
    for_each_mult(k, 24, [&](const std::vector<int>& y) {
      TropVector u;
      for (int v : y) u.push_back(ExtInt(v - 12));
      brute = brute || mv(r, u) == z;
    });
    // the all -inf input also counts
    brute = brute || mv(r, TropVector(k, NI())) == z;
    auto u = control_solve(s, k, z);
    if (brute) ASSERT_TRUE(u);
    if (u) ASSERT_EQ(mv(r, *u), z);
  }
}
