#pragma once

// Rational semimodules of (Z u {+-inf})^n: spans of finite or semilinear
// generator sets.
//
// Membership rests on residuation. For a generator g the largest scalar
// with lambda (x) g <= x is lambda(g) = min_i x_i / g_i, and x lies in the
// span iff every coordinate of x that is not -inf is attained by some
// lambda(g) (x) g. Attaining coordinate j means j maximizes g_i - x_i over
// the finite coordinates, which for g = a + P y is a system of linear
// inequalities in y over N^k. Those are decided exactly with the
// Diophantine solver; only budget exhaustion leaves a query undecided.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diophantine.hpp"
#include "errors.hpp"
#include "ext_int.hpp"
#include "matrix.hpp"
#include "semilinear.hpp"

namespace tropilinear {

/// True iff g = lambda (x) h for some finite lambda.
inline bool proportional(const TropVector& g, const TropVector& h) {
  if (!same_pattern(g, h)) return false;
  std::optional<Integer> diff;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!g[i].is_finite()) continue;
    Integer d = g[i].value() - h[i].value();
    if (diff && *diff != d) return false;
    diff = std::move(d);
  }
  return true;
}

/// Generating family of a semimodule; finite when no component has periods.
class GeneratorSet {
 public:
  GeneratorSet() = default;

  explicit GeneratorSet(SemilinearSet gens, Flavor f = Flavor::MaxPlus)
      : gens_(std::move(gens)), flavor_(f) {}

  /// Finite family, deduplicated up to proportionality.
  static GeneratorSet finite(std::size_t dim, const std::vector<TropVector>& gens,
                             Flavor f = Flavor::MaxPlus) {
    GeneratorSet g(SemilinearSet::points(dim, gens), f);
    g.dedupe_proportional();
    return g;
  }

  std::size_t dim() const noexcept { return gens_.dim(); }
  Flavor flavor() const noexcept { return flavor_; }
  bool is_finite() const { return gens_.is_finite_set(); }
  const SemilinearSet& set() const noexcept { return gens_; }

  /// Generators of a finite family, in canonical order.
  std::vector<TropVector> vectors() const {
    if (!is_finite()) throw Error("generator set is not finite");
    std::vector<TropVector> out;
    for (const auto& c : gens_.components()) out.push_back(c.base);
    return out;
  }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  void dedupe_proportional() {
    std::vector<TropVector> kept;
    for (const auto& c : gens_.components()) {
      bool dup = std::any_of(kept.begin(), kept.end(),
                             [&](const TropVector& k) { return proportional(c.base, k); });
      if (!dup) kept.push_back(c.base);
    }
    gens_ = SemilinearSet::points(gens_.dim(), kept);
  }

  SemilinearSet gens_;
  Flavor flavor_ = Flavor::MaxPlus;
};

struct SpanWitness {
  std::vector<TropVector> generators;
  std::vector<ExtInt> scalars;

  TropVector evaluate(std::size_t dim, Flavor f = Flavor::MaxPlus) const {
    TropVector acc(dim, zero(f));
    for (std::size_t i = 0; i < generators.size(); ++i)
      acc = vec_oplus(acc, scale(scalars[i], generators[i], f), f);
    return acc;
  }
};

enum class Decision { Member, NotMember, BoundExhausted };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::Member: return "true";
    case Decision::NotMember: return "false";
    default: return "bound_exhausted";
  }
}

struct SpanResult {
  Decision decision = Decision::NotMember;
  SpanWitness witness;

  bool member() const { return decision == Decision::Member; }
};

namespace detail {

/// lambda(g) = min_i x_i / g_i.
inline ExtInt max_scalar(const TropVector& g, const TropVector& x) {
  ExtInt lambda = ExtInt::pos_inf();
  for (std::size_t i = 0; i < g.size(); ++i) lambda = std::min(lambda, residual(x[i], g[i]));
  return lambda;
}

inline TropVector negate(const TropVector& v) {
  TropVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

inline void add_pair(SpanWitness& w, const TropVector& g, const ExtInt& lambda) {
  for (std::size_t i = 0; i < w.generators.size(); ++i)
    if (w.generators[i] == g && w.scalars[i] == lambda) return;
  w.generators.push_back(g);
  w.scalars.push_back(lambda);
}

inline SpanResult span_member_maxplus(const std::vector<TropVector>& gens, const TropVector& x) {
  std::vector<ExtInt> lambdas;
  TropVector acc(x.size(), ExtInt::neg_inf());
  for (const auto& g : gens) {
    lambdas.push_back(max_scalar(g, x));
    acc = vec_oplus(acc, scale(lambdas.back(), g));
  }
  if (acc != x) return {};
  // Greedy cover of the attained coordinates: at most one generator per coordinate.
  SpanResult r{Decision::Member, {}};
  std::vector<bool> covered(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) covered[j] = x[j].is_neg_inf();
  while (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    std::size_t best = 0, best_count = 0;
    for (std::size_t u = 0; u < gens.size(); ++u) {
      std::size_t count = 0;
      for (std::size_t j = 0; j < x.size(); ++j)
        if (!covered[j] && max_otimes(lambdas[u], gens[u][j]) == x[j]) ++count;
      if (count > best_count) best = u, best_count = count;
    }
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!covered[j] && max_otimes(lambdas[best], gens[best][j]) == x[j]) covered[j] = true;
    add_pair(r.witness, gens[best], lambdas[best]);
  }
  return r;
}

}  // namespace detail

/// Membership in the span of a finite family, with a witness of at most n
/// generators (one per coordinate of x that is not the zero element).
inline SpanResult span_member(const GeneratorSet& g, const TropVector& x) {
  require_dims(x.size() == g.dim(), "span_member: vector dimension");
  auto gens = g.vectors();
  if (g.flavor() == Flavor::MaxPlus) return detail::span_member_maxplus(gens, x);
  for (auto& v : gens) v = detail::negate(v);
  SpanResult r = detail::span_member_maxplus(gens, detail::negate(x));
  for (auto& v : r.witness.generators) v = detail::negate(v);
  for (auto& s : r.witness.scalars) s = -s;
  return r;
}

namespace detail {

/// Finds y with coordinate j attaining the residuation minimum for the
/// generator family of one linear component, or reports why not.
struct AttainOutcome {
  bool found = false;
  bool exhausted = false;
  TropVector generator;
};

inline bool pattern_compatible(const TropVector& base, const TropVector& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (base[i].is_neg_inf()) continue;
    if (x[i].is_neg_inf()) return false;
    if (base[i].is_pos_inf() && x[i].is_finite()) return false;
  }
  return true;
}

inline AttainOutcome attain(const LinearSet& c, const TropVector& x, std::size_t j,
                            const SolveOptions& opt) {
  AttainOutcome out;
  if (!pattern_compatible(c.base, x)) return out;
  std::vector<std::size_t> fx;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (c.base[i].is_finite() && x[i].is_finite()) fx.push_back(i);

  if (x[j].is_pos_inf()) {
    if (c.base[j].is_pos_inf() || (c.base[j].is_finite() && fx.empty())) {
      out.found = true;
      out.generator = c.base;
    }
    return out;
  }
  if (!c.base[j].is_finite()) return out;

  // (P_j - P_i) y >= (a_i - x_i) - (a_j - x_j) for every other i in fx.
  const std::size_t k = c.periods.size();
  std::vector<std::pair<IntVec, Integer>> rows;
  const Integer offset_j = c.base[j].value() - x[j].value();
  for (std::size_t i : fx) {
    if (i == j) continue;
    IntVec coef(k);
    for (std::size_t t = 0; t < k; ++t)
      coef[t] = to_int64(Integer(c.periods[t][j] - c.periods[t][i]));
    rows.emplace_back(std::move(coef), Integer(c.base[i].value() - x[i].value() - offset_j));
  }
  if (k == 0) {
    for (const auto& [coef, rhs] : rows)
      if (rhs > 0) return out;
    out.found = true;
    out.generator = c.base;
    return out;
  }
  if (rows.empty()) {
    out.found = true;
    out.generator = c.base;
    return out;
  }
  LinSystem sys;
  sys.unknowns = k + rows.size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    IntVec row(sys.unknowns, 0);
    std::copy(rows[r].first.begin(), rows[r].first.end(), row.begin());
    row[k + r] = -1;
    sys.matrix.push_back(std::move(row));
    sys.rhs.push_back(to_int64(rows[r].second));
  }
  try {
    auto sol = find_solution(sys, opt);
    if (!sol) return out;
    IntVec y(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(k));
    out.found = true;
    out.generator = evaluate(c, y);
  } catch (const BudgetExhausted&) {
    out.exhausted = true;
  }
  return out;
}

}  // namespace detail

/// Membership in the span of a semilinear generator set (max-plus).
inline SpanResult span_member_semilinear(const GeneratorSet& g, const TropVector& x,
                                         const SolveOptions& opt = {}) {
  require_dims(x.size() == g.dim(), "span_member_semilinear: vector dimension");
  if (g.flavor() != Flavor::MaxPlus) throw FlavorError("semilinear span membership is max-plus");
  SpanResult r{Decision::Member, {}};
  bool exhausted = false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j].is_neg_inf()) continue;
    bool hit = false;
    for (const auto& c : g.set().components()) {
      auto o = detail::attain(c, x, j, opt);
      exhausted = exhausted || o.exhausted;
      if (!o.found) continue;
      ExtInt lambda = detail::max_scalar(o.generator, x);
      detail::add_pair(r.witness, o.generator, lambda);
      hit = true;
      break;
    }
    if (!hit) return {exhausted ? Decision::BoundExhausted : Decision::NotMember, {}};
  }
  return r;
}

/// Dispatches on the kind of generator set.
inline SpanResult span_contains(const GeneratorSet& g, const TropVector& x,
                                const SolveOptions& opt = {}) {
  if (g.is_finite()) return span_member(g, x);
  return span_member_semilinear(g, x, opt);
}

/// Extremal generators of a finite family: drops proportional copies and
/// every generator lying in the span of the others.
inline GeneratorSet reduce_generators(const GeneratorSet& g) {
  auto gens = g.vectors();  // already free of proportional duplicates
  std::vector<TropVector> kept;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<TropVector> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (!span_member(GeneratorSet::finite(g.dim(), others, g.flavor()), gens[i]).member())
      kept.push_back(gens[i]);
  }
  return GeneratorSet::finite(g.dim(), kept, g.flavor());
}

/// Semilinear generating set of A(span G) = span A(G).
///
/// On a linear component {a} + P*, each output row is a max of affine
/// functions of the multiplicities y. Fixing which column attains each row
/// cuts N^k into regions given by linear inequalities; on each region the
/// image is affine in y, and the region itself is a finite union of linear
/// sets (minimal solutions plus Hilbert basis, with slack variables).
inline GeneratorSet direct_image(const TropMatrix& a, const GeneratorSet& g,
                                 const SolveOptions& opt = {}) {
  require_dims(a.cols() == g.dim(), "direct_image: matrix cols != generator dimension");
  if (a.flavor() != Flavor::MaxPlus || g.flavor() != Flavor::MaxPlus)
    throw FlavorError("direct_image is max-plus");
  const std::size_t p = a.rows(), n = a.cols();
  std::vector<LinearSet> out;

  for (const auto& c : g.set().components()) {
    const std::size_t k = c.periods.size();
    TropVector fixed(p, ExtInt::neg_inf());
    std::vector<std::vector<std::size_t>> choices(p);
    std::vector<std::size_t> finite_rows;
    for (std::size_t r = 0; r < p; ++r) {
      bool plus_inf = false;
      for (std::size_t col = 0; col < n; ++col) {
        if (a(r, col).is_neg_inf() || c.base[col].is_neg_inf()) continue;
        if (a(r, col).is_pos_inf() || c.base[col].is_pos_inf()) plus_inf = true;
        choices[r].push_back(col);
      }
      if (plus_inf) {
        fixed[r] = ExtInt::pos_inf();
      } else if (!choices[r].empty()) {
        finite_rows.push_back(r);
      }
    }
    // Constant part of row r through column col: A_r,col + a_col.
    auto konst = [&](std::size_t r, std::size_t col) {
      return Integer(a(r, col).value() + c.base[col].value());
    };

    std::vector<std::size_t> pick(finite_rows.size(), 0);
    while (true) {
      std::vector<std::pair<IntVec, Integer>> ineq;  // coef . y >= rhs
      for (std::size_t t = 0; t < finite_rows.size(); ++t) {
        const std::size_t r = finite_rows[t];
        const std::size_t s = choices[r][pick[t]];
        for (std::size_t other : choices[r]) {
          if (other == s) continue;
          IntVec coef(k);
          for (std::size_t j = 0; j < k; ++j)
            coef[j] = to_int64(Integer(c.periods[j][s] - c.periods[j][other]));
          ineq.emplace_back(std::move(coef), Integer(konst(r, other) - konst(r, s)));
        }
      }

      TropVector base = fixed;
      for (std::size_t t = 0; t < finite_rows.size(); ++t) {
        const std::size_t r = finite_rows[t];
        base[r] = ExtInt(konst(r, choices[r][pick[t]]));
      }
      // Row r of the image period for multiplicity vector e_j.
      auto image_period = [&](const IntVec& y) {
        Period q(p, 0);
        for (std::size_t t = 0; t < finite_rows.size(); ++t) {
          const std::size_t r = finite_rows[t];
          const std::size_t s = choices[r][pick[t]];
          for (std::size_t j = 0; j < k; ++j) q[r] += c.periods[j][s] * y[j];
        }
        return q;
      };

      if (k == 0) {
        bool ok = std::all_of(ineq.begin(), ineq.end(),
                              [](const auto& e) { return e.second <= 0; });
        if (ok) out.push_back({base, {}});
      } else if (ineq.empty()) {
        std::vector<Period> periods;
        for (std::size_t j = 0; j < k; ++j) {
          IntVec e(k, 0);
          e[j] = 1;
          periods.push_back(image_period(e));
        }
        out.push_back({base, std::move(periods)});
      } else {
        LinSystem sys;
        sys.unknowns = k + ineq.size();
        for (std::size_t r = 0; r < ineq.size(); ++r) {
          IntVec row(sys.unknowns, 0);
          std::copy(ineq[r].first.begin(), ineq[r].first.end(), row.begin());
          row[k + r] = -1;
          sys.matrix.push_back(std::move(row));
          sys.rhs.push_back(to_int64(ineq[r].second));
        }
        SolutionSet sol = solve(sys, opt);
        std::vector<Period> periods;
        for (const auto& h : sol.hilbert) periods.push_back(image_period(h));
        for (const auto& m : sol.minimal)
          out.push_back({detail::shift(base, image_period(m)), periods});
      }

      std::size_t t = 0;
      while (t < pick.size() && ++pick[t] == choices[finite_rows[t]].size()) pick[t++] = 0;
      if (t == pick.size()) break;
    }
  }
  return GeneratorSet(SemilinearSet(p, std::move(out)));
}

/// x in A^{-1}(span Z) iff A (x) x in span Z.
inline Decision inverse_image_member(const TropMatrix& a, const GeneratorSet& z,
                                     const TropVector& x, const SolveOptions& opt = {}) {
  require_dims(a.rows() == z.dim() && a.cols() == x.size(), "inverse_image_member: shapes");
  return span_contains(z, mat_apply(a, x), opt).decision;
}

/// x in (span X) n (span Y).
inline Decision intersection_member(const GeneratorSet& x_gens, const GeneratorSet& y_gens,
                                    const TropVector& x, const SolveOptions& opt = {}) {
  Decision a = span_contains(x_gens, x, opt).decision;
  if (a == Decision::NotMember) return a;
  Decision b = span_contains(y_gens, x, opt).decision;
  if (b == Decision::NotMember) return b;
  return (a == Decision::Member && b == Decision::Member) ? Decision::Member
                                                          : Decision::BoundExhausted;
}

namespace detail {

// Linear form over variables: sum coef[v] * var[v] + constant.
struct Affine {
  std::map<std::size_t, Integer> coef;
  Integer constant = 0;
};

inline Affine operator-(const Affine& a, const Affine& b) {
  Affine r = a;
  for (const auto& [v, c] : b.coef) r.coef[v] -= c;
  r.constant -= b.constant;
  return r;
}

/// Feasibility of {form >= 0} over variables, the first `free_vars` of which
/// range over Z and the rest over N.
inline std::optional<bool> feasible(const std::vector<Affine>& forms, std::size_t free_vars,
                                    std::size_t nat_vars, const SolveOptions& opt) {
  // Pure difference constraints: decide by Bellman-Ford on potentials.
  bool difference = nat_vars == 0;
  for (const auto& f : forms) {
    int pos = 0, neg = 0;
    for (const auto& [v, c] : f.coef) {
      if (c == 1) ++pos;
      else if (c == -1) ++neg;
      else if (c != 0) difference = false;
    }
    if (pos > 1 || neg > 1) difference = false;
  }
  if (difference) {
    // x_u - x_v <= w  as edge v -> u of weight w; node free_vars is the constant 0.
    const std::size_t nodes = free_vars + 1;
    struct Edge { std::size_t from, to; Integer w; };
    std::vector<Edge> edges;
    for (const auto& f : forms) {
      // f >= 0  <=>  neg_var - pos_var <= constant.
      std::size_t pv = free_vars, nv = free_vars;
      for (const auto& [v, c] : f.coef) {
        if (c == 1) pv = v;
        if (c == -1) nv = v;
      }
      edges.push_back({pv, nv, f.constant});
    }
    std::vector<Integer> dist(nodes, 0);
    for (std::size_t it = 0; it < nodes; ++it) {
      bool changed = false;
      for (const auto& e : edges) {
        if (dist[e.from] + e.w < dist[e.to]) {
          dist[e.to] = dist[e.from] + e.w;
          changed = true;
        }
      }
      if (!changed) return true;
    }
    return false;
  }
  // General case: split free variables into two naturals and add slacks.
  const std::size_t base_vars = 2 * free_vars + nat_vars;
  LinSystem sys;
  sys.unknowns = base_vars + forms.size();
  for (std::size_t r = 0; r < forms.size(); ++r) {
    IntVec row(sys.unknowns, 0);
    for (const auto& [v, c] : forms[r].coef) {
      if (v < free_vars) {
        row[2 * v] += to_int64(c);
        row[2 * v + 1] -= to_int64(c);
      } else {
        row[free_vars + v] += to_int64(c);
      }
    }
    row[base_vars + r] = -1;
    sys.matrix.push_back(std::move(row));
    sys.rhs.push_back(to_int64(Integer(-forms[r].constant)));
  }
  try {
    return find_solution(sys, opt).has_value();
  } catch (const BudgetExhausted&) {
    return std::nullopt;
  }
}

inline void require_no_pos_inf(const TropVector& v, const char* what) {
  for (const auto& e : v)
    if (e.is_pos_inf()) throw Error(std::string(what) + ": +inf entries are not supported");
}

}  // namespace detail

/// u in (span X) - (span Y): is there y in span Y with u (+) y in span X?
///
/// Enumerates the support of the Y-combination, the term attaining each
/// coordinate of w = u (+) y and the X-generator attaining it in the
/// residuation test. Each combination is a system of integer inequalities
/// (difference constraints when X is finite). Entries must be finite or -inf.
inline Decision minus_member(const GeneratorSet& x_gens, const GeneratorSet& y_gens,
                             const TropVector& u, std::size_t budget = default_budget(),
                             const SolveOptions& opt = {}) {
  const std::size_t n = u.size();
  require_dims(x_gens.dim() == n && y_gens.dim() == n, "minus_member: dimensions");
  if (x_gens.flavor() != Flavor::MaxPlus || y_gens.flavor() != Flavor::MaxPlus)
    throw FlavorError("minus_member is max-plus");
  detail::require_no_pos_inf(u, "minus_member");
  std::vector<TropVector> ys;
  for (const auto& v : y_gens.vectors()) {
    detail::require_no_pos_inf(v, "minus_member");
    if (!all_neg_inf(v)) ys.push_back(v);
  }
  for (const auto& c : x_gens.set().components()) detail::require_no_pos_inf(c.base, "minus_member");
  if (ys.size() > 20) throw Error("minus_member: too many Y generators");

  std::size_t spent = 0;
  bool exhausted = false;
  const auto& xcomps = x_gens.set().components();

  for (std::size_t mask = 0; mask < (std::size_t{1} << ys.size()); ++mask) {
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < ys.size(); ++j)
      if (mask >> j & 1) support.push_back(j);
    // Terms of w_i: u_i (tag -1) and mu_t + v^j_i for j = support[t].
    std::vector<std::vector<long>> terms(n);
    std::vector<std::size_t> fin;
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i].is_finite()) terms[i].push_back(-1);
      for (std::size_t t = 0; t < support.size(); ++t)
        if (ys[support[t]][i].is_finite()) terms[i].push_back(static_cast<long>(t));
      if (!terms[i].empty()) fin.push_back(i);
    }
    if (fin.empty()) return Decision::Member;  // w is the zero vector

    // Candidate X-components per finite coordinate of w.
    TropVector wpat(n, ExtInt::neg_inf());
    for (std::size_t i : fin) wpat[i] = ExtInt(0);
    std::vector<std::vector<std::size_t>> gen_opts(n);
    bool dead = false;
    for (std::size_t i : fin) {
      for (std::size_t ci = 0; ci < xcomps.size(); ++ci)
        if (xcomps[ci].base[i].is_finite() && detail::pattern_compatible(xcomps[ci].base, wpat))
          gen_opts[i].push_back(ci);
      if (gen_opts[i].empty()) dead = true;
    }
    if (dead) continue;

    const std::size_t free_vars = support.size();
    auto term_form = [&](std::size_t i, long tag) {
      detail::Affine f;
      if (tag < 0) {
        f.constant = u[i].value();
      } else {
        f.coef[static_cast<std::size_t>(tag)] = 1;
        f.constant = ys[support[static_cast<std::size_t>(tag)]][i].value();
      }
      return f;
    };

    std::vector<std::size_t> src(fin.size(), 0), gen(fin.size(), 0);
    while (true) {
      if (++spent > budget) return Decision::BoundExhausted;
      std::vector<detail::Affine> forms;
      std::vector<detail::Affine> w(n);
      for (std::size_t t = 0; t < fin.size(); ++t) {
        const std::size_t i = fin[t];
        w[i] = term_form(i, terms[i][src[t]]);
        for (std::size_t o = 0; o < terms[i].size(); ++o)
          if (o != src[t]) forms.push_back(w[i] - term_form(i, terms[i][o]));
      }
      // y variables for periodic X components, one block per coordinate.
      std::size_t nat_vars = 0;
      for (std::size_t t = 0; t < fin.size(); ++t) {
        const std::size_t i = fin[t];
        const LinearSet& g = xcomps[gen_opts[i][gen[t]]];
        const std::size_t first = free_vars + nat_vars;
        nat_vars += g.periods.size();
        auto g_at = [&](std::size_t l) {
          detail::Affine f;
          f.constant = g.base[l].value();
          for (std::size_t q = 0; q < g.periods.size(); ++q)
            if (g.periods[q][l] != 0) f.coef[first + q] = g.periods[q][l];
          return f;
        };
        // w_l - w_i >= g_l - g_i for finite g_l, l != i.
        for (std::size_t l : fin) {
          if (l == i || !g.base[l].is_finite()) continue;
          forms.push_back((w[l] - w[i]) - (g_at(l) - g_at(i)));
        }
      }
      auto ok = detail::feasible(forms, free_vars, nat_vars, opt);
      if (!ok) exhausted = true;
      else if (*ok) return Decision::Member;

      std::size_t t = 0;
      while (t < 2 * fin.size()) {
        std::size_t slot = t % fin.size();
        bool is_src = t < fin.size();
        auto& ctr = is_src ? src[slot] : gen[slot];
        std::size_t lim = is_src ? terms[fin[slot]].size() : gen_opts[fin[slot]].size();
        if (++ctr < lim) break;
        ctr = 0;
        ++t;
      }
      if (t == 2 * fin.size()) break;
    }
  }
  return exhausted ? Decision::BoundExhausted : Decision::NotMember;
}

/// x in W^perp: a . x = b . x for every generator (a, b) of W (vectors of length 2n).
inline bool ortho_member(const GeneratorSet& w, const TropVector& x) {
  const std::size_t n = x.size();
  require_dims(w.dim() == 2 * n, "ortho_member: pair dimension must be 2n");
  for (const auto& g : w.vectors()) {
    TropVector a(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(n));
    TropVector b(g.begin() + static_cast<std::ptrdiff_t>(n), g.end());
    if (dot(a, x, w.flavor()) != dot(b, x, w.flavor())) return false;
  }
  return true;
}

/// (a, b) in X^T: a . x = b . x on every generator of X.
inline bool transpose_member(const GeneratorSet& x, const TropVector& a, const TropVector& b) {
  require_dims(a.size() == x.dim() && b.size() == x.dim(), "transpose_member: dimensions");
  for (const auto& g : x.vectors())
    if (dot(a, g, x.flavor()) != dot(b, g, x.flavor())) return false;
  return true;
}

}  // namespace tropilinear
