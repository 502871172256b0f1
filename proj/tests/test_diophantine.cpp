#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

using namespace tltest;

namespace {

LinSystem sys(std::vector<IntVec> m, IntVec rhs = {}) {
  LinSystem s;
  s.unknowns = m.front().size();
  s.matrix = std::move(m);
  s.rhs = rhs.empty() ? IntVec(s.matrix.size(), 0) : std::move(rhs);
  return s;
}

// All solutions in [0, bound]^k.
std::vector<IntVec> brute(const LinSystem& s, std::int64_t bound) {
  std::vector<IntVec> out;
  IntVec y(s.unknowns, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < s.matrix.size() && ok; ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < y.size(); ++j) acc += s.matrix[i][j] * y[j];
      ok = acc == s.rhs[i];
    }
    if (ok) out.push_back(y);
    std::size_t j = 0;
    while (j < y.size() && ++y[j] > bound) y[j++] = 0;
    if (j == y.size()) break;
  }
  return out;
}

bool leq_vec(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<IntVec> minimal_elements(const std::vector<IntVec>& v) {
  std::vector<IntVec> out;
  for (const auto& a : v) {
    bool minimal = std::none_of(v.begin(), v.end(), [&](const IntVec& b) { return b != a && leq_vec(b, a); });
    if (minimal) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Nonzero homogeneous solutions that are not a sum of two nonzero ones.
std::vector<IntVec> irreducible(const std::vector<IntVec>& sols) {
  std::set<IntVec> all(sols.begin(), sols.end());
  std::vector<IntVec> out;
  for (const auto& a : sols) {
    if (std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v == 0; })) continue;
    bool split = false;
    for (const auto& b : sols) {
      if (b == a || std::all_of(b.begin(), b.end(), [](std::int64_t v) { return v == 0; })) continue;
      if (!leq_vec(b, a)) continue;
      IntVec c(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
      if (all.count(c)) {
        split = true;
        break;
      }
    }
    if (!split) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVec> inside(const std::vector<IntVec>& v, std::int64_t bound) {
  std::vector<IntVec> out;
  for (const auto& a : v)
    if (std::all_of(a.begin(), a.end(), [&](std::int64_t x) { return x <= bound; })) out.push_back(a);
  return out;
}

// y - m is an N-combination of the basis (searched recursively).
bool decomposes(IntVec y, const std::vector<IntVec>& basis, std::size_t from = 0) {
  if (std::all_of(y.begin(), y.end(), [](std::int64_t v) { return v == 0; })) return true;
  for (std::size_t b = from; b < basis.size(); ++b) {
    if (!leq_vec(basis[b], y)) continue;
    IntVec r = y;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= basis[b][i];
    if (decomposes(r, basis, b)) return true;
  }
  return false;
}

}  // namespace

TEST(HilbertBasis, SmallSystems) {
  EXPECT_EQ(hilbert_basis(sys({{1, -1}})), (std::vector<IntVec>{{1, 1}}));
  EXPECT_EQ(hilbert_basis(sys({{2, -3}})), (std::vector<IntVec>{{3, 2}}));
  EXPECT_EQ(hilbert_basis(sys({{1, 1, -2}})), (std::vector<IntVec>{{0, 2, 1}, {1, 1, 1}, {2, 0, 1}}));
  EXPECT_TRUE(hilbert_basis(sys({{1, 1}})).empty());
}

TEST(HilbertBasis, AgreesWithBruteForce) {
  LinSystem s = sys({{2, -3}});
  EXPECT_EQ(hilbert_basis(s), irreducible(brute(s, 6)));
  LinSystem t = sys({{1, 1, -2}});
  EXPECT_EQ(hilbert_basis(t), irreducible(brute(t, 4)));
}

TEST(MinSolutions, SmallSystems) {
  EXPECT_EQ(min_solutions(sys({{2, 1}}, {3})), (std::vector<IntVec>{{0, 3}, {1, 1}}));
  EXPECT_EQ(min_solutions(sys({{2, 1}}, {3})), minimal_elements(brute(sys({{2, 1}}, {3}), 3)));
  EXPECT_TRUE(min_solutions(sys({{2}}, {3})).empty());
  EXPECT_EQ(min_solutions(sys({{1, -1}})), (std::vector<IntVec>{{0, 0}}));
}

TEST(Diophantine, FindSolutionAndErrors) {
  auto y = find_solution(sys({{3, 5}}, {8}));
  ASSERT_TRUE(y);
  EXPECT_TRUE(satisfies(sys({{3, 5}}, {8}), *y));
  EXPECT_FALSE(find_solution(sys({{2, 4}}, {3})));
  EXPECT_THROW(hilbert_basis(sys({{1}}, {1})), Error);
  LinSystem empty;
  EXPECT_THROW(solve(empty), DimensionError);
}

TEST(Diophantine, BudgetExhaustion) {
  SolveOptions opt;
  opt.node_budget = 5;
  EXPECT_THROW(solve(sys({{7, -11, 13, -17}}), opt), BudgetExhausted);
}

TEST(DiophantineProperty, CompletenessAgainstBruteForce) {
  Rng rng(201);
  const std::int64_t bound = 8;
  for (int t = 0; t < 150; ++t) {
    const auto k = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto m = static_cast<std::size_t>(rng.uniform(1, 2));
    std::vector<IntVec> mat(m, IntVec(k));
    IntVec rhs(m);
    for (auto& row : mat)
      for (auto& v : row) v = rng.uniform(-3, 3);
    for (auto& v : rhs) v = rng.uniform(-4, 4);
    LinSystem s = sys(mat, rhs);
    LinSystem h = sys(mat);
    SolutionSet out = solve(s);

    // Nothing in the outputs dominates anything else, and all of it solves.
    for (const auto& a : out.minimal) {
      ASSERT_TRUE(satisfies(s, a));
      for (const auto& b : out.minimal) ASSERT_TRUE(a == b || !leq_vec(a, b));
    }
    for (const auto& a : out.hilbert) {
      ASSERT_TRUE(satisfies(h, a));
      for (const auto& b : out.hilbert) ASSERT_TRUE(a == b || !leq_vec(a, b));
    }
    ASSERT_TRUE(std::is_sorted(out.minimal.begin(), out.minimal.end()));
    ASSERT_TRUE(std::is_sorted(out.hilbert.begin(), out.hilbert.end()));

    // Exact agreement inside the box.
    auto sols = brute(s, bound);
    ASSERT_EQ(inside(out.minimal, bound), minimal_elements(sols));
    ASSERT_EQ(inside(out.hilbert, bound), irreducible(brute(h, bound)));

    // Every solution is a minimal one plus a combination of the basis.
    for (const auto& y : sols) {
      bool ok = false;
      for (const auto& mn : out.minimal) {
        if (!leq_vec(mn, y)) continue;
        IntVec r = y;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= mn[i];
        if (decomposes(r, out.hilbert)) {
          ok = true;
          break;
        }
      }
      ASSERT_TRUE(ok);
    }
    // And such combinations solve the system.
    for (const auto& mn : out.minimal)
      for (const auto& hb : out.hilbert) {
        IntVec y = mn;
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += 2 * hb[i];
        ASSERT_TRUE(satisfies(s, y));
      }
  }
}
