#pragma once

// Max-plus linear systems x(k) = A x(k-1) (+) B u(k), y(k) = C x(k):
// finite and infinite horizon reachability and observability, observable
// congruence, and control by residuation.
//
// The infinite horizon is handled by detecting ultimate periodicity of the
// orbits A^k b (one per column b of B): after a transient N, the pattern of
// A^k b depends only on k mod c and A^{k+c} b = A^k b + delta_{(k-N) mod c}
// on finite coordinates. Detection is a semi-decision checked over a
// window; failure is reported, never guessed.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ext_int.hpp"
#include "matrix.hpp"
#include "semilinear.hpp"
#include "semimodule.hpp"

namespace tropilinear {

class LtiSystem {
 public:
  LtiSystem(TropMatrix a, TropMatrix b, std::optional<TropMatrix> c = std::nullopt)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    require_dims(a_.rows() == a_.cols(), "system: A must be square");
    require_dims(b_.rows() == a_.rows(), "system: B rows != state dimension");
    if (c_) require_dims(c_->cols() == a_.rows(), "system: C cols != state dimension");
    check(a_);
    check(b_);
    if (c_) check(*c_);
  }

  std::size_t states() const noexcept { return a_.rows(); }
  std::size_t inputs() const noexcept { return b_.cols(); }
  std::size_t outputs() const { return c_ ? c_->rows() : 0; }
  const TropMatrix& a() const noexcept { return a_; }
  const TropMatrix& b() const noexcept { return b_; }
  bool has_c() const noexcept { return c_.has_value(); }
  const TropMatrix& c() const {
    if (!c_) throw Error("system has no output matrix C");
    return *c_;
  }

  friend bool operator==(const LtiSystem&, const LtiSystem&) = default;

 private:
  static void check(const TropMatrix& m) {
    if (m.flavor() != Flavor::MaxPlus) throw FlavorError("system matrices must be max-plus");
    for (const auto& e : m.entries())
      if (e.is_pos_inf()) throw Error("system matrices may not contain +inf");
  }

  TropMatrix a_, b_;
  std::optional<TropMatrix> c_;
};

/// Ultimate periodicity of one orbit x_k = A^k x_0.
struct CyclicityCertificate {
  std::size_t transient = 0;          // N
  std::size_t period = 1;             // c
  std::vector<Period> increments;     // delta_l, l = 0..c-1; 0 where x is infinite
  std::size_t window = 0;             // W
  std::vector<TropVector> orbit;      // x_0 .. x_{N+c-1}

  /// x_k for any k, using the periodic regime past the transient.
  TropVector at(std::size_t k) const {
    if (k < orbit.size()) return orbit[k];
    const std::size_t l = (k - transient) % period;
    const Integer m = (k - transient) / period;
    return detail::shift(orbit[transient + l], increments[l], m);
  }
};

struct DetectionParams {
  std::size_t window = 3;
  std::size_t max_period = 24;
  std::size_t max_transient = 0;  // 0 means 200 * n
};

struct ReachOmega {
  GeneratorSet generators;
  std::vector<CyclicityCertificate> certificates;  // one per column of B
};

/// (B, AB, ..., A^{k-1} B).
inline TropMatrix reach_k(const LtiSystem& sys, std::size_t k) {
  std::vector<TropVector> cols;
  TropMatrix block = sys.b();
  for (std::size_t i = 0; i < k; ++i) {
    for (auto& c : block.columns()) cols.push_back(std::move(c));
    block = mat_mul(sys.a(), block);
  }
  return TropMatrix::from_columns(sys.states(), cols);
}

/// Stacked rows C, CA, ..., CA^{k-1}.
inline TropMatrix obs_k(const LtiSystem& sys, std::size_t k) {
  std::vector<TropVector> rows;
  TropMatrix block = sys.c();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t r = 0; r < block.rows(); ++r) rows.push_back(block.row(r));
    block = mat_mul(block, sys.a());
  }
  return TropMatrix::from_rows(sys.states(), rows);
}

namespace detail {

// m -> max_j (slope_j m + intercept_j) on m in N, or identically +inf / -inf.
struct MaxAffine {
  bool pos_inf = false;
  std::vector<std::pair<Integer, Integer>> lines;  // (slope, intercept)

  ExtInt at(const Integer& m) const {
    if (pos_inf) return ExtInt::pos_inf();
    if (lines.empty()) return ExtInt::neg_inf();
    Integer best = lines.front().first * m + lines.front().second;
    for (const auto& [s, b] : lines) best = std::max(best, Integer(s * m + b));
    return ExtInt(best);
  }

  // Integer points bracketing every crossing of two lines, plus 0.
  void critical(std::vector<Integer>& pts) const {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        Integer ds = lines[i].first - lines[j].first;
        if (ds == 0) continue;
        Integer num = lines[j].second - lines[i].second;
        if (ds < 0) {
          ds = -ds;
          num = -num;
        }
        Integer fl = num / ds;
        if (num % ds != 0 && num < 0) fl -= 1;
        if (fl >= 0) pts.push_back(fl);
        if (fl + 1 >= 0) pts.push_back(fl + 1);
      }
    }
  }
};

// Row family r_m = base + m delta (finite coordinates of base) against xi.
inline MaxAffine row_dot(const TropVector& base, const Period& delta, const TropVector& xi) {
  MaxAffine f;
  for (std::size_t j = 0; j < base.size(); ++j) {
    if (base[j].is_neg_inf() || xi[j].is_neg_inf()) continue;
    if (xi[j].is_pos_inf()) {
      f.pos_inf = true;
      continue;
    }
    f.lines.emplace_back(delta[j], base[j].value() + xi[j].value());
  }
  return f;
}

inline std::vector<Integer> critical_points(const MaxAffine& f, const MaxAffine& g) {
  std::vector<Integer> pts{0};
  f.critical(pts);
  g.critical(pts);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  pts.push_back(pts.back() + 1);
  return pts;
}

// x_{N+l+cm} = x_{N+l} + m delta_l for every m, by induction on single steps:
// both sides of A x_{N+l+cm} = x_{N+l+1+cm} are max-affine in m.
inline bool periodic_regime_holds(const TropMatrix& a, const std::vector<TropVector>& orbit, std::size_t n,
                                  std::size_t c, const std::vector<Period>& delta) {
  for (std::size_t l = 0; l < c; ++l) {
    const TropVector& cur = orbit[n + l];
    const bool wraps = l + 1 == c;
    const TropVector& next = orbit[wraps ? n : n + l + 1];
    const Period& nd = delta[wraps ? 0 : l + 1];
    for (std::size_t i = 0; i < a.rows(); ++i) {
      MaxAffine f, g;
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (a(i, j).is_finite() && cur[j].is_finite())
          f.lines.emplace_back(delta[l][j], a(i, j).value() + cur[j].value());
      if (next[i].is_finite())
        g.lines.emplace_back(nd[i], next[i].value() + (wraps ? nd[i] : Integer(0)));
      for (const auto& m : critical_points(f, g))
        if (f.at(m) != g.at(m)) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Finds the least transient N and, for it, the least period c. Candidates
/// that survive the window check are then proved for every k.
inline CyclicityCertificate detect_cyclicity(const TropMatrix& a, const TropVector& x0,
                                             const DetectionParams& p = {}) {
  if (p.window == 0 || p.max_period == 0) throw Error("detection parameters must be positive");
  const std::size_t n_max = p.max_transient ? p.max_transient : 200 * std::max<std::size_t>(a.rows(), 1);
  std::vector<TropVector> orbit{x0};
  auto x = [&](std::size_t k) -> const TropVector& {
    while (orbit.size() <= k) orbit.push_back(mat_apply(a, orbit.back()));
    return orbit[k];
  };
  auto diff = [](const TropVector& hi, const TropVector& lo) {
    Period d(hi.size(), 0);
    for (std::size_t i = 0; i < hi.size(); ++i)
      if (hi[i].is_finite()) d[i] = hi[i].value() - lo[i].value();
    return d;
  };

  for (std::size_t n = 0; n <= n_max; ++n) {
    for (std::size_t c = 1; c <= p.max_period; ++c) {
      std::vector<Period> delta(c);
      bool ok = true;
      for (std::size_t k = n; ok && k <= n + p.window * c; ++k) {
        const TropVector hi = x(k + c);
        const TropVector& lo = x(k);
        if (!same_pattern(lo, hi)) {
          ok = false;
          break;
        }
        Period d = diff(hi, lo);
        const std::size_t l = (k - n) % c;
        if (k < n + c) delta[l] = std::move(d);
        else ok = d == delta[l];
      }
      if (!ok) continue;
      x(n + c);
      if (!detail::periodic_regime_holds(a, orbit, n, c, delta)) continue;
      CyclicityCertificate cert;
      cert.transient = n;
      cert.period = c;
      cert.increments = std::move(delta);
      cert.window = p.window;
      for (std::size_t k = 0; k < n + c; ++k) cert.orbit.push_back(x(k));
      return cert;
    }
  }
  throw DetectionFailed("no cyclicity with transient <= " + std::to_string(n_max) +
                        " and period <= " + std::to_string(p.max_period));
}

/// Linear sets covering one certified orbit.
inline std::vector<LinearSet> orbit_components(const CyclicityCertificate& cert) {
  std::vector<LinearSet> out;
  for (std::size_t k = 0; k < cert.transient; ++k) out.push_back({cert.orbit[k], {}});
  for (std::size_t l = 0; l < cert.period; ++l)
    out.push_back({cert.orbit[cert.transient + l], {cert.increments[l]}});
  return out;
}

/// Semilinear generating family of the reachable space over all horizons.
inline ReachOmega reach_omega(const LtiSystem& sys, const DetectionParams& p = {}) {
  ReachOmega r;
  std::vector<LinearSet> comps;
  for (std::size_t j = 0; j < sys.inputs(); ++j) {
    r.certificates.push_back(detect_cyclicity(sys.a(), sys.b().column(j), p));
    for (auto& c : orbit_components(r.certificates.back())) comps.push_back(std::move(c));
  }
  r.generators = GeneratorSet(SemilinearSet(sys.states(), std::move(comps)));
  return r;
}

/// Observable congruence of a system: the rows C_q A^k for every output q,
/// each family certified periodic.
struct CongruenceBasis {
  std::size_t states = 0;
  std::vector<CyclicityCertificate> rows;  // one per row of C

  std::size_t transient() const {
    std::size_t n = 0;
    for (const auto& r : rows) n = std::max(n, r.transient);
    return n;
  }

  std::size_t period() const {
    std::size_t c = 1;
    for (const auto& r : rows) c = std::lcm(c, r.period);
    return c;
  }

  /// Rows C A^k for k < N + c, stacked block by power.
  TropMatrix block() const {
    const std::size_t len = transient() + period();
    std::vector<TropVector> out;
    for (std::size_t k = 0; k < len; ++k)
      for (const auto& r : rows) out.push_back(r.at(k));
    return TropMatrix::from_rows(states, out);
  }
};

/// Detects the periodic structure of O_omega through the transposed pair
/// (A^T, C^T), whose reachable space is the row space of O_omega.
inline CongruenceBasis obs_omega(const LtiSystem& sys, const DetectionParams& p = {}) {
  const TropMatrix at = sys.a().transpose();
  CongruenceBasis basis;
  basis.states = sys.states();
  for (std::size_t q = 0; q < sys.outputs(); ++q)
    basis.rows.push_back(detect_cyclicity(at, sys.c().row(q), p));
  return basis;
}


/// O_omega xi == O_omega xi'. On each periodic row family both sides are
/// maxima of affine functions of the repetition count m, so equality on N
/// reduces to equality at finitely many integer points.
inline bool congruent(const CongruenceBasis& basis, const TropVector& xi, const TropVector& xi2) {
  require_dims(xi.size() == basis.states && xi2.size() == basis.states, "congruent: dimensions");
  for (const auto& r : basis.rows) {
    for (std::size_t k = 0; k < r.transient; ++k)
      if (dot(r.orbit[k], xi) != dot(r.orbit[k], xi2)) return false;
    for (std::size_t l = 0; l < r.period; ++l) {
      const TropVector& base = r.orbit[r.transient + l];
      auto f = detail::row_dot(base, r.increments[l], xi);
      auto g = detail::row_dot(base, r.increments[l], xi2);
      for (const auto& m : detail::critical_points(f, g))
        if (f.at(m) != g.at(m)) return false;
    }
  }
  return true;
}

/// Greatest element of the congruence class of xi: the residual of
/// O_omega against O_omega xi, taken over every row.
inline TropVector class_max(const CongruenceBasis& basis, const TropVector& xi) {
  require_dims(xi.size() == basis.states, "class_max: dimension");
  const std::size_t n = basis.states;
  TropVector out(n, ExtInt::pos_inf());
  for (const auto& r : basis.rows) {
    for (std::size_t k = 0; k < r.transient; ++k) {
      ExtInt v = dot(r.orbit[k], xi);
      for (std::size_t j = 0; j < n; ++j) out[j] = std::min(out[j], residual(v, r.orbit[k][j]));
    }
    for (std::size_t l = 0; l < r.period; ++l) {
      const TropVector& base = r.orbit[r.transient + l];
      const Period& delta = r.increments[l];
      auto f = detail::row_dot(base, delta, xi);
      auto pts = detail::critical_points(f, f);
      for (std::size_t j = 0; j < n; ++j) {
        if (base[j].is_neg_inf()) continue;  // row entries stay -inf: no constraint
        if (f.pos_inf) continue;
        if (f.lines.empty()) {
          out[j] = ExtInt::neg_inf();
          continue;
        }
        // g(m) = f(m) - (base_j + m delta_j) is convex; its minimum over N
        // sits at a critical point unless the last piece keeps decreasing.
        auto g = [&](const Integer& m) {
          return Integer(f.at(m).value() - base[j].value() - delta[j] * m);
        };
        Integer best = g(pts.front());
        for (const auto& m : pts) best = std::min(best, g(m));
        const Integer& last = pts.back();
        if (g(last + 1) < g(last)) {
          out[j] = ExtInt::neg_inf();
        } else {
          out[j] = std::min(out[j], ExtInt(best));
        }
      }
    }
  }
  return out;
}

/// Inputs U with R_k U = z, ordered (u(k), ..., u(1)) block by block, or
/// nothing when z is not reachable in k steps.
inline std::optional<TropVector> control_solve(const LtiSystem& sys, std::size_t k,
                                               const TropVector& z) {
  if (k == 0) throw Error("control horizon must be positive");
  require_dims(z.size() == sys.states(), "control_solve: target dimension");
  TropMatrix r = reach_k(sys, k);
  TropVector u = residual_left(r, z);
  if (mat_apply(r, u) != z) return std::nullopt;
  return u;
}

/// Reorders a control vector from (u(k), ..., u(1)) to u(1), ..., u(k).
inline std::vector<TropVector> chronological_inputs(const TropVector& u, std::size_t inputs) {
  require_dims(inputs > 0 && u.size() % inputs == 0, "control vector length");
  std::vector<TropVector> out;
  for (std::size_t blk = u.size() / inputs; blk-- > 0;)
    out.emplace_back(u.begin() + static_cast<std::ptrdiff_t>(blk * inputs),
                     u.begin() + static_cast<std::ptrdiff_t>((blk + 1) * inputs));
  return out;
}

/// States x(1..K) from x(0) and inputs u(1..K).
inline std::vector<TropVector> simulate(const LtiSystem& sys, const std::vector<TropVector>& u,
                                        std::optional<TropVector> x0 = std::nullopt) {
  TropVector x = x0 ? *x0 : TropVector(sys.states(), ExtInt::neg_inf());
  require_dims(x.size() == sys.states(), "simulate: initial state dimension");
  std::vector<TropVector> out;
  for (const auto& uk : u) {
    x = vec_oplus(mat_apply(sys.a(), x), mat_apply(sys.b(), uk));
    out.push_back(x);
  }
  return out;
}

/// System driven through v(k) = v(k-1) (+) u(k), so that the effective
/// input v is the nondecreasing hull of u. State is (x, v).
inline LtiSystem nondecreasing_augment(const LtiSystem& sys) {
  const std::size_t n = sys.states(), p = sys.inputs();
  TropMatrix a(n + p, n + p, Flavor::MaxPlus);
  TropMatrix b(n + p, p, Flavor::MaxPlus);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = sys.a()(i, j);
    for (std::size_t j = 0; j < p; ++j) a(i, n + j) = sys.b()(i, j);
    for (std::size_t j = 0; j < p; ++j) b(i, j) = sys.b()(i, j);
  }
  for (std::size_t j = 0; j < p; ++j) {
    a(n + j, n + j) = ExtInt(0);
    b(n + j, j) = ExtInt(0);
  }
  std::optional<TropMatrix> c;
  if (sys.has_c()) {
    TropMatrix cc(sys.outputs(), n + p, Flavor::MaxPlus);
    for (std::size_t i = 0; i < sys.outputs(); ++i)
      for (std::size_t j = 0; j < n; ++j) cc(i, j) = sys.c()(i, j);
    c = std::move(cc);
  }
  return LtiSystem(std::move(a), std::move(b), std::move(c));
}

// ---- system file ----------------------------------------------------------
//
//   A:
//   maxplus 3 3
//   ...
//   B:
//   ...
//   C:        (optional)
//   ...

inline std::string format_system(const LtiSystem& sys) {
  std::string out = "A:\n" + format_matrix(sys.a()) + "B:\n" + format_matrix(sys.b());
  if (sys.has_c()) out += "C:\n" + format_matrix(sys.c());
  return out;
}

inline LtiSystem parse_system(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  std::string line;
  std::optional<TropMatrix> a, b, c;
  while (detail::next_content_line(in, line, lineno)) {
    std::string label = line.substr(line.find_first_not_of(" \t"));
    label.erase(label.find_last_not_of(" \t\r") + 1);
    std::optional<TropMatrix>* slot = nullptr;
    if (label == "A:") slot = &a;
    else if (label == "B:") slot = &b;
    else if (label == "C:") slot = &c;
    else throw ParseError(lineno, "expected block label A:, B: or C:");
    if (slot->has_value()) throw ParseError(lineno, "duplicate block " + label);
    *slot = read_matrix(in, lineno);
  }
  if (!a || !b) throw ParseError(lineno, "system needs blocks A: and B:");
  try {
    return LtiSystem(*a, *b, c);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(lineno, e.what());
  }
}

}  // namespace tropilinear
