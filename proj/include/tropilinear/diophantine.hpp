#pragma once

// Nonnegative integer solutions of linear systems M y = c.
//
// Both the Hilbert basis of the homogeneous system and the minimal
// solutions of the inhomogeneous one come out of a single run of the
// Contejean-Devie completion on the extended system [M | -c] (y, z) = 0,
// with the extra unknown z capped at 1: irreducible solutions with z = 0
// form the Hilbert basis, those with z = 1 are the minimal solutions.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "ext_int.hpp"

namespace tropilinear {

using IntVec = std::vector<std::int64_t>;

struct LinSystem {
  std::size_t unknowns = 0;
  std::vector<IntVec> matrix;  // one row per equation
  IntVec rhs;                  // empty or one entry per equation

  bool homogeneous() const {
    return std::all_of(rhs.begin(), rhs.end(), [](std::int64_t v) { return v == 0; });
  }
};

/// Default node budget, overridable through the TROPILINEAR_BUDGET variable.
inline std::size_t default_budget() {
  if (const char* env = std::getenv("TROPILINEAR_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

struct SolveOptions {
  std::size_t node_budget = default_budget();
  bool stop_at_first_solution = false;
};

struct SolutionSet {
  std::vector<IntVec> minimal;  // componentwise-minimal solutions of M y = c
  std::vector<IntVec> hilbert;  // Hilbert basis of M y = 0
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in Diophantine solver");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in Diophantine solver");
  return r;
}

inline bool dominates(const IntVec& big, const IntVec& small) {
  for (std::size_t i = 0; i < big.size(); ++i)
    if (big[i] < small[i]) return false;
  return true;
}

struct Node {
  IntVec y;
  IntVec residual;  // M' y
};

}  // namespace detail

inline std::int64_t to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw Error("value " + v.str() + " exceeds the 64-bit range of the Diophantine solver");
  return static_cast<std::int64_t>(v);
}

/// Runs the completion on the extended system and splits the result.
inline SolutionSet solve(const LinSystem& sys, const SolveOptions& opt = {}) {
  const std::size_t k = sys.unknowns;
  const std::size_t m = sys.matrix.size();
  if (k == 0) throw DimensionError("linear system needs at least one unknown");
  for (const auto& row : sys.matrix) require_dims(row.size() == k, "linear system row length");
  require_dims(sys.rhs.empty() || sys.rhs.size() == m, "linear system rhs length");

  // Column j of the extended matrix; column k is -rhs.
  const std::size_t ext = k + 1;
  std::vector<IntVec> col(ext, IntVec(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) col[j][i] = sys.matrix[i][j];
    col[k][i] = sys.rhs.empty() ? 0 : detail::checked_mul(-1, sys.rhs[i]);
  }

  std::vector<IntVec> found;
  std::vector<detail::Node> frontier;
  for (std::size_t j = 0; j < ext; ++j) {
    IntVec y(ext, 0);
    y[j] = 1;
    frontier.push_back({std::move(y), col[j]});
  }

  std::size_t nodes = frontier.size();
  auto is_zero = [](const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
  };

  while (!frontier.empty()) {
    std::vector<detail::Node> next;
    for (auto& node : frontier) {
      if (is_zero(node.residual)) {
        bool dominated = std::any_of(found.begin(), found.end(), [&](const IntVec& s) {
          return detail::dominates(node.y, s);
        });
        if (!dominated) {
          found.push_back(node.y);
          if (opt.stop_at_first_solution && node.y[k] == 1) {
            return SolutionSet{{IntVec(node.y.begin(), node.y.end() - 1)}, {}};
          }
        }
        continue;
      }
      for (std::size_t j = 0; j < ext; ++j) {
        if (j == k && node.y[k] >= 1) continue;
        std::int64_t d = 0;
        for (std::size_t i = 0; i < m; ++i)
          d = detail::checked_add(d, detail::checked_mul(node.residual[i], col[j][i]));
        if (d >= 0) continue;
        IntVec y = node.y;
        ++y[j];
        bool dominated = std::any_of(found.begin(), found.end(), [&](const IntVec& s) {
          return detail::dominates(y, s);
        });
        if (dominated) continue;
        IntVec r(m);
        for (std::size_t i = 0; i < m; ++i) r[i] = detail::checked_add(node.residual[i], col[j][i]);
        next.push_back({std::move(y), std::move(r)});
      }
    }
    std::sort(next.begin(), next.end(),
              [](const detail::Node& a, const detail::Node& b) { return a.y < b.y; });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const detail::Node& a, const detail::Node& b) { return a.y == b.y; }),
               next.end());
    nodes += next.size();
    if (nodes > opt.node_budget)
      throw BudgetExhausted("Diophantine completion exceeded " + std::to_string(opt.node_budget) +
                            " nodes");
    frontier = std::move(next);
  }

  SolutionSet out;
  for (auto& s : found) {
    bool inhom = s[k] == 1;
    s.pop_back();
    (inhom ? out.minimal : out.hilbert).push_back(std::move(s));
  }
  std::sort(out.minimal.begin(), out.minimal.end());
  std::sort(out.hilbert.begin(), out.hilbert.end());
  return out;
}

/// Minimal generating set of {y in N^k : M y = 0}.
inline std::vector<IntVec> hilbert_basis(const LinSystem& sys, const SolveOptions& opt = {}) {
  if (!sys.homogeneous()) throw Error("hilbert_basis expects a homogeneous system");
  return solve(sys, opt).hilbert;
}

/// Componentwise-minimal elements of {y in N^k : M y = c}; empty iff infeasible.
inline std::vector<IntVec> min_solutions(const LinSystem& sys, const SolveOptions& opt = {}) {
  return solve(sys, opt).minimal;
}

/// Some solution of M y = c in N^k, if any.
inline std::optional<IntVec> find_solution(const LinSystem& sys, SolveOptions opt = {}) {
  opt.stop_at_first_solution = true;
  auto s = solve(sys, opt);
  if (s.minimal.empty()) return std::nullopt;
  return s.minimal.front();
}

/// Checks M y = c exactly.
inline bool satisfies(const LinSystem& sys, const IntVec& y) {
  if (y.size() != sys.unknowns) return false;
  for (std::size_t i = 0; i < sys.matrix.size(); ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < y.size(); ++j) acc += Integer(sys.matrix[i][j]) * y[j];
    if (acc != Integer(sys.rhs.empty() ? 0 : sys.rhs[i])) return false;
  }
  return true;
}

}  // namespace tropilinear
