#pragma once

// Simon's min-plus automaton and the reachable space built on it.
//
// s(w) = alpha nu(w) beta grows like sqrt(|w|): the shortest word with
// s(w) >= n has length (n^2 + n) / 2. Appending the block D = diag(-1, 0)
// gives a 6-dimensional morphism mu with C mu(w) B = (s(w), -|w|, 0).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "ext_int.hpp"
#include "matrix.hpp"

namespace tropilinear {

struct WordAutomaton {
  std::vector<TropMatrix> letters;  // mu(a_1), ..., mu(a_r)
  TropVector initial;               // row alpha
  TropVector final;                 // column beta

  std::size_t dim() const { return initial.size(); }
};

namespace gallery {

inline ExtInt inf() { return ExtInt::pos_inf(); }

inline TropMatrix nu(std::size_t letter) {
  const ExtInt I = inf();
  if (letter == 0)
    return TropMatrix(4, 4,
                      {0, I, I, I,
                       I, 1, 1, I,
                       I, I, I, I,
                       I, I, I, 0},
                      Flavor::MinPlus);
  if (letter == 1)
    return TropMatrix(4, 4,
                      {1, 1, I, I,
                       I, I, I, 0,
                       I, I, I, 0,
                       I, I, I, 0},
                      Flavor::MinPlus);
  throw Error("letter index out of range");
}

inline WordAutomaton simon() {
  return {{nu(0), nu(1)}, {0, inf(), inf(), inf()}, {0, inf(), inf(), 0}};
}

/// mu(a) = diag(nu(a), D) with D = diag(-1, 0).
inline TropMatrix mu(std::size_t letter) {
  TropMatrix m(6, 6, Flavor::MinPlus);
  TropMatrix n = nu(letter);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = n(i, j);
  m(4, 4) = ExtInt(-1);
  m(5, 5) = ExtInt(0);
  return m;
}

inline TropVector mu_b() { return {0, inf(), inf(), 0, 0, 0}; }

/// Picks coordinates 1, 5 and 6.
inline TropMatrix mu_c() {
  TropMatrix c(3, 6, Flavor::MinPlus);
  c(0, 0) = ExtInt(0);
  c(1, 4) = ExtInt(0);
  c(2, 5) = ExtInt(0);
  return c;
}

/// Letters of a word written as a string over {'1', '2'}.
inline std::vector<std::size_t> parse_word(std::string_view w) {
  std::vector<std::size_t> out;
  for (char ch : w) {
    if (ch != '1' && ch != '2') throw Error(std::string("invalid letter '") + ch + "'");
    out.push_back(static_cast<std::size_t>(ch - '1'));
  }
  return out;
}

}  // namespace gallery

/// alpha nu(w) beta.
inline ExtInt simon_s(const std::vector<std::size_t>& word) {
  WordAutomaton a = gallery::simon();
  TropVector row = a.initial;
  for (std::size_t l : word) {
    if (l >= a.letters.size()) throw Error("letter index out of range");
    row = apply_left(row, a.letters[l]);
  }
  return dot(row, a.final, Flavor::MinPlus);
}

/// Least |w| with s(w) >= n, by breadth-first search over the distinct
/// vectors alpha nu(w) reached at each length.
inline std::size_t simon_growth(std::size_t n, std::size_t max_len = 64) {
  if (n == 0) throw Error("growth target must be positive");
  WordAutomaton a = gallery::simon();
  auto reached = [&](const TropVector& row) { return dot(row, a.final, Flavor::MinPlus) >= ExtInt(Integer(n)); };
  std::set<TropVector> level{a.initial};
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (const auto& row : level)
      if (reached(row)) return len;
    std::set<TropVector> next;
    for (const auto& row : level)
      for (const auto& m : a.letters) next.insert(apply_left(row, m));
    level = std::move(next);
  }
  throw BudgetExhausted("no word of length <= " + std::to_string(max_len) + " reaches " + std::to_string(n));
}

struct CsPoint {
  Integer s;       // s(w)
  Integer length;  // |w|

  TropVector coords() const { return {ExtInt(s), ExtInt(Integer(-length)), ExtInt(0)}; }
  friend bool operator==(const CsPoint&, const CsPoint&) = default;
  friend bool operator<(const CsPoint& a, const CsPoint& b) {
    return a.s != b.s ? a.s < b.s : a.length < b.length;
  }
};

struct CsPoints {
  std::vector<CsPoint> all;        // distinct (s(w), |w|) for |w| <= max_len
  std::vector<CsPoint> extremal;   // no other point has s' >= s and |w'| <= |w|
};

/// Enumerates C mu(w) B over words up to max_len through the 6-dimensional
/// morphism, and filters the extremal points.
inline CsPoints fig_cs_points(std::size_t max_len) {
  if (max_len > 22) throw BudgetExhausted("fig_cs_points: max_len above 22");
  const TropMatrix c = gallery::mu_c();
  const TropMatrix letters[2] = {gallery::mu(0), gallery::mu(1)};
  std::set<CsPoint> pts;
  // mu(w) B for w of the current length, deduplicated.
  std::set<TropVector> level{gallery::mu_b()};
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (const auto& v : level) {
      TropVector y = mat_apply(c, v);
      if (!y[0].is_finite() || !y[1].is_finite()) throw Error("unexpected infinite coordinate");
      pts.insert({y[0].value(), Integer(-y[1].value())});
    }
    if (len == max_len) break;
    std::set<TropVector> next;
    for (const auto& v : level)
      for (const auto& m : letters) next.insert(mat_apply(m, v));
    level = std::move(next);
  }
  CsPoints out;
  out.all.assign(pts.begin(), pts.end());
  for (const auto& p : out.all) {
    bool dominated = std::any_of(out.all.begin(), out.all.end(), [&](const CsPoint& o) {
      return !(o == p) && o.s >= p.s && o.length <= p.length;
    });
    if (!dominated) out.extremal.push_back(p);
  }
  return out;
}

/// gamma_E(n) = -min { |w| : s(w) >= n } over the enumerated points.
inline std::optional<Integer> gamma_e(const CsPoints& pts, const Integer& n) {
  std::optional<Integer> best;
  for (const auto& p : pts.all)
    if (p.s >= n && (!best || p.length < *best)) best = p.length;
  if (!best) return std::nullopt;
  return Integer(-*best);
}

}  // namespace tropilinear
