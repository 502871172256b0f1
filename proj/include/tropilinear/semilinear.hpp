#pragma once

// Semilinear subsets of the commutative monoid ((Z u {+-inf})^n, (x)).
//
// A linear set {a} + P* has a base a that may carry infinite coordinates and
// a finite set P of finite integer periods. Coordinates where the base is
// infinite are absorbing, so period entries there carry no information and
// are stored as 0. A semilinear set is a finite union of linear sets kept in
// a canonical (sorted, duplicate-free) order.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "diophantine.hpp"
#include "errors.hpp"
#include "ext_int.hpp"
#include "matrix.hpp"

namespace tropilinear {

using Period = std::vector<Integer>;

struct LinearSet {
  TropVector base;
  std::vector<Period> periods;

  std::size_t dim() const { return base.size(); }

  friend bool operator==(const LinearSet&, const LinearSet&) = default;

  friend bool operator<(const LinearSet& a, const LinearSet& b) {
    if (a.base != b.base)
      return std::lexicographical_compare(a.base.begin(), a.base.end(), b.base.begin(),
                                          b.base.end());
    return std::lexicographical_compare(
        a.periods.begin(), a.periods.end(), b.periods.begin(), b.periods.end(),
        [](const Period& p, const Period& q) {
          return std::lexicographical_compare(p.begin(), p.end(), q.begin(), q.end());
        });
  }
};

namespace detail {

inline bool is_zero_period(const Period& p) {
  return std::all_of(p.begin(), p.end(), [](const Integer& v) { return v == 0; });
}

/// Zeroes period entries under infinite base coordinates, drops zero
/// periods, sorts and deduplicates.
inline LinearSet canonical(LinearSet l) {
  for (auto& p : l.periods)
    for (std::size_t i = 0; i < p.size(); ++i)
      if (!l.base[i].is_finite()) p[i] = 0;
  l.periods.erase(std::remove_if(l.periods.begin(), l.periods.end(), is_zero_period),
                  l.periods.end());
  auto lex = [](const Period& p, const Period& q) {
    return std::lexicographical_compare(p.begin(), p.end(), q.begin(), q.end());
  };
  std::sort(l.periods.begin(), l.periods.end(), lex);
  l.periods.erase(std::unique(l.periods.begin(), l.periods.end()), l.periods.end());
  return l;
}

inline TropVector shift(const TropVector& base, const Period& p, const Integer& times = 1) {
  TropVector out = base;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i].is_finite()) out[i] = ExtInt(Integer(out[i].value() + p[i] * times));
  return out;
}

}  // namespace detail

class SemilinearSet {
 public:
  SemilinearSet() = default;
  explicit SemilinearSet(std::size_t dim) : dim_(dim) {}

  SemilinearSet(std::size_t dim, std::vector<LinearSet> comps) : dim_(dim) {
    for (auto& c : comps) {
      require_dims(c.base.size() == dim, "linear set base dimension");
      for (const auto& p : c.periods) require_dims(p.size() == dim, "linear set period dimension");
      components_.push_back(detail::canonical(std::move(c)));
    }
    std::sort(components_.begin(), components_.end());
    components_.erase(std::unique(components_.begin(), components_.end()), components_.end());
  }

  static SemilinearSet empty(std::size_t dim) { return SemilinearSet(dim); }

  /// Finite set of points, one periodless component each.
  static SemilinearSet points(std::size_t dim, const std::vector<TropVector>& pts) {
    std::vector<LinearSet> comps;
    for (const auto& p : pts) comps.push_back({p, {}});
    return SemilinearSet(dim, std::move(comps));
  }

  static SemilinearSet linear(TropVector base, std::vector<Period> periods) {
    std::size_t d = base.size();
    return SemilinearSet(d, {LinearSet{std::move(base), std::move(periods)}});
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<LinearSet>& components() const noexcept { return components_; }
  bool is_empty() const noexcept { return components_.empty(); }
  bool is_finite_set() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const LinearSet& l) { return l.periods.empty(); });
  }

  friend bool operator==(const SemilinearSet&, const SemilinearSet&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<LinearSet> components_;
};

inline void require_same_dim(const SemilinearSet& s, const SemilinearSet& t) {
  require_dims(s.dim() == t.dim(), "semilinear operands have different dimensions");
}

// ---- construction --------------------------------------------------------

/// {base} + raw*, where raw periods may hold infinite entries.
///
/// An infinite period r is unfolded once: {b} + (R u {r})* equals
/// {b} + R*  union  {b + r} + (R u {r'})*, where r' is r with its
/// infinite entries replaced by 0 (those coordinates of b + r are absorbing).
inline SemilinearSet normalize(const TropVector& base, const std::vector<TropVector>& raw) {
  const std::size_t n = base.size();
  std::vector<Period> finite;
  std::vector<TropVector> infinite;
  for (const auto& r : raw) {
    require_dims(r.size() == n, "normalize: period dimension");
    if (std::all_of(r.begin(), r.end(), [](const ExtInt& v) { return v.is_finite(); })) {
      Period p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = r[i].value();
      finite.push_back(std::move(p));
    } else {
      infinite.push_back(r);
    }
  }
  std::vector<LinearSet> out;
  std::function<void(TropVector, std::vector<Period>, std::size_t)> unfold =
      [&](TropVector b, std::vector<Period> periods, std::size_t next) {
        if (next == infinite.size()) {
          out.push_back({std::move(b), std::move(periods)});
          return;
        }
        const TropVector& r = infinite[next];
        unfold(b, periods, next + 1);
        TropVector shifted(n);
        Period bar(n);
        for (std::size_t i = 0; i < n; ++i) {
          shifted[i] = max_otimes(b[i], r[i]);
          bar[i] = r[i].is_finite() ? r[i].value() : Integer(0);
        }
        periods.push_back(std::move(bar));
        unfold(std::move(shifted), std::move(periods), next + 1);
      };
  unfold(base, finite, 0);
  return SemilinearSet(n, std::move(out));
}

/// F* = {0} + F*.
inline SemilinearSet star(std::size_t dim, const std::vector<TropVector>& gens) {
  return normalize(TropVector(dim, ExtInt(0)), gens);
}

inline SemilinearSet set_union(const SemilinearSet& s, const SemilinearSet& t) {
  require_same_dim(s, t);
  std::vector<LinearSet> comps = s.components();
  comps.insert(comps.end(), t.components().begin(), t.components().end());
  return SemilinearSet(s.dim(), std::move(comps));
}

/// Monoid product {u (x) v : u in S, v in T}.
inline SemilinearSet msum(const SemilinearSet& s, const SemilinearSet& t) {
  require_same_dim(s, t);
  std::vector<LinearSet> comps;
  for (const auto& a : s.components()) {
    for (const auto& b : t.components()) {
      LinearSet c;
      c.base.resize(s.dim());
      for (std::size_t i = 0; i < s.dim(); ++i) c.base[i] = max_otimes(a.base[i], b.base[i]);
      c.periods = a.periods;
      c.periods.insert(c.periods.end(), b.periods.begin(), b.periods.end());
      comps.push_back(std::move(c));
    }
  }
  return SemilinearSet(s.dim(), std::move(comps));
}

// ---- membership ----------------------------------------------------------

/// Multiplicities y with x = base + sum_j y_j p^j, if x lies in the linear set.
inline std::optional<IntVec> linear_member_witness(const LinearSet& l, const TropVector& x,
                                                   const SolveOptions& opt = {}) {
  require_dims(x.size() == l.dim(), "member: vector dimension");
  if (!same_pattern(l.base, x)) return std::nullopt;
  const std::size_t k = l.periods.size();
  std::vector<std::size_t> fin;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].is_finite()) fin.push_back(i);
  // Infinite coordinates agree because the patterns agree.
  std::vector<Integer> d(fin.size());
  for (std::size_t r = 0; r < fin.size(); ++r)
    d[r] = x[fin[r]].value() - l.base[fin[r]].value();

  if (k == 0) {
    for (const auto& v : d)
      if (v != 0) return std::nullopt;
    return IntVec{};
  }
  if (k == 1) {
    const Period& p = l.periods[0];
    std::optional<Integer> t;
    for (std::size_t r = 0; r < fin.size(); ++r) {
      const Integer& c = p[fin[r]];
      if (c == 0) {
        if (d[r] != 0) return std::nullopt;
        continue;
      }
      if (d[r] % c != 0) return std::nullopt;
      Integer q = d[r] / c;
      if (q < 0 || (t && *t != q)) return std::nullopt;
      t = q;
    }
    return IntVec{t ? to_int64(*t) : 0};
  }

  LinSystem sys;
  sys.unknowns = k;
  for (std::size_t r = 0; r < fin.size(); ++r) {
    IntVec row(k);
    bool all_zero = true;
    for (std::size_t j = 0; j < k; ++j) {
      row[j] = to_int64(l.periods[j][fin[r]]);
      all_zero = all_zero && row[j] == 0;
    }
    if (all_zero) {
      if (d[r] != 0) return std::nullopt;
      continue;
    }
    sys.matrix.push_back(std::move(row));
    sys.rhs.push_back(to_int64(d[r]));
  }
  if (sys.matrix.empty()) return IntVec(k, 0);
  return find_solution(sys, opt);
}

inline bool member(const SemilinearSet& s, const TropVector& x, const SolveOptions& opt = {}) {
  require_dims(x.size() == s.dim(), "member: vector dimension");
  for (const auto& c : s.components())
    if (linear_member_witness(c, x, opt)) return true;
  return false;
}

/// base + sum_j y_j p^j with infinite base coordinates kept.
inline TropVector evaluate(const LinearSet& l, const IntVec& y) {
  TropVector out = l.base;
  for (std::size_t j = 0; j < y.size(); ++j)
    if (y[j] != 0) out = detail::shift(out, l.periods[j], Integer(y[j]));
  return out;
}

// ---- intersection and projection -----------------------------------------

inline SemilinearSet intersect(const SemilinearSet& s, const SemilinearSet& t,
                               const SolveOptions& opt = {}) {
  require_same_dim(s, t);
  const std::size_t n = s.dim();
  std::vector<LinearSet> comps;
  for (const auto& a : s.components()) {
    for (const auto& b : t.components()) {
      // Elements of a linear set share the pattern of its base, and the
      // infinite coordinates are fixed; patterns must therefore coincide.
      if (!same_pattern(a.base, b.base)) continue;
      std::vector<std::size_t> fin;
      for (std::size_t i = 0; i < n; ++i)
        if (a.base[i].is_finite()) fin.push_back(i);
      if (fin.empty()) {
        comps.push_back({a.base, {}});
        continue;
      }
      const std::size_t ka = a.periods.size(), kb = b.periods.size();
      if (ka + kb == 0) {
        if (a.base == b.base) comps.push_back({a.base, {}});
        continue;
      }
      // a + Pa u = b + Pb v  <=>  [Pa | -Pb] (u, v) = b - a on finite coordinates.
      LinSystem sys;
      sys.unknowns = ka + kb;
      for (std::size_t i : fin) {
        IntVec row(ka + kb);
        for (std::size_t j = 0; j < ka; ++j) row[j] = to_int64(a.periods[j][i]);
        for (std::size_t j = 0; j < kb; ++j) row[ka + j] = to_int64(Integer(-b.periods[j][i]));
        sys.matrix.push_back(std::move(row));
        sys.rhs.push_back(to_int64(Integer(b.base[i].value() - a.base[i].value())));
      }
      SolutionSet sol = solve(sys, opt);
      if (sol.minimal.empty()) continue;
      auto image = [&](const IntVec& uv) {
        Period p(n, 0);
        for (std::size_t j = 0; j < ka; ++j)
          for (std::size_t i = 0; i < n; ++i) p[i] += a.periods[j][i] * uv[j];
        return p;
      };
      std::vector<Period> periods;
      for (const auto& h : sol.hilbert) periods.push_back(image(h));
      for (const auto& m : sol.minimal) {
        Period off = image(m);
        comps.push_back({detail::shift(a.base, off), periods});
      }
    }
  }
  return SemilinearSet(n, std::move(comps));
}

/// Keeps the listed coordinates (0-based, taken as a set, ascending).
inline SemilinearSet project(const SemilinearSet& s, std::vector<std::size_t> keep) {
  if (keep.empty()) throw Error("project: keep set is empty");
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.back() >= s.dim()) throw Error("project: coordinate index out of range");
  std::vector<LinearSet> comps;
  for (const auto& c : s.components()) {
    LinearSet l;
    for (std::size_t i : keep) l.base.push_back(c.base[i]);
    for (const auto& p : c.periods) {
      Period q;
      for (std::size_t i : keep) q.push_back(p[i]);
      l.periods.push_back(std::move(q));
    }
    comps.push_back(std::move(l));
  }
  return SemilinearSet(keep.size(), std::move(comps));
}

// ---- bounded semantic comparison ----------------------------------------

struct BoxInterval {
  Integer lo;
  Integer hi;
};

struct BoxComparison {
  bool equal = true;
  std::optional<TropVector> counterexample;
};

/// Compares membership on every point of the box, each coordinate also
/// taking the values -inf and +inf.
inline BoxComparison equal_on_box(const SemilinearSet& s, const SemilinearSet& t,
                                  const std::vector<BoxInterval>& box,
                                  std::size_t cell_cap = 10'000'000) {
  require_same_dim(s, t);
  require_dims(box.size() == s.dim(), "equal_on_box: box dimension");
  std::vector<std::vector<ExtInt>> axis(box.size());
  Integer cells = 1;
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (box[i].hi < box[i].lo) throw Error("equal_on_box: empty interval");
    cells *= Integer(box[i].hi - box[i].lo + 3);
    if (cells > cell_cap) throw BudgetExhausted("equal_on_box: box exceeds the cell cap");
    axis[i].push_back(ExtInt::neg_inf());
    for (Integer v = box[i].lo; v <= box[i].hi; ++v) axis[i].push_back(ExtInt(v));
    axis[i].push_back(ExtInt::pos_inf());
  }
  std::vector<std::size_t> idx(box.size(), 0);
  TropVector x(box.size());
  while (true) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = axis[i][idx[i]];
    if (member(s, x) != member(t, x)) return {false, x};
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == axis[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return {};
}

/// Elements of each component with every multiplicity in 0..max_mult.
inline std::vector<TropVector> sample_elements(const SemilinearSet& s, std::size_t max_mult) {
  std::vector<TropVector> out;
  for (const auto& c : s.components()) {
    IntVec y(c.periods.size(), 0);
    while (true) {
      out.push_back(evaluate(c, y));
      std::size_t j = 0;
      while (j < y.size() && static_cast<std::size_t>(++y[j]) > max_mult) y[j++] = 0;
      if (j == y.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---- text format ---------------------------------------------------------
//
//   dim N
//   base: t1 ... tN
//   period: z1 ... zN
//
// Raw periods may hold -inf/+inf; they are normalized on load.

inline std::string format_semilinear(const SemilinearSet& s) {
  std::ostringstream os;
  os << "dim " << s.dim() << "\n";
  for (const auto& c : s.components()) {
    os << "base: " << format_vector(c.base) << "\n";
    for (const auto& p : c.periods) {
      os << "period:";
      for (const auto& v : p) os << ' ' << v;
      os << "\n";
    }
  }
  return os.str();
}

inline SemilinearSet parse_semilinear(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  if (!detail::next_content_line(in, line, lineno)) throw ParseError(lineno, "expected 'dim N'");
  std::istringstream hs(line);
  std::string kw;
  long long n = -1;
  hs >> kw >> n;
  if (kw != "dim" || hs.fail()) throw ParseError(lineno, "expected 'dim N'");
  if (n <= 0) throw ParseError(lineno, "dimension must be positive");
  const auto dim = static_cast<std::size_t>(n);

  SemilinearSet acc(dim);
  std::optional<TropVector> base;
  std::vector<TropVector> periods;
  auto flush = [&] {
    if (base) acc = set_union(acc, normalize(*base, periods));
    base.reset();
    periods.clear();
  };
  while (detail::next_content_line(in, line, lineno)) {
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(lineno, "expected 'base:' or 'period:'");
    std::string key = line.substr(0, colon);
    key.erase(0, key.find_first_not_of(" \t"));
    TropVector v;
    try {
      v = parse_vector(line.substr(colon + 1));
    } catch (const Error& e) {
      throw ParseError(lineno, e.what());
    }
    if (v.size() != dim) throw ParseError(lineno, "vector length differs from dim");
    if (key == "base") {
      flush();
      base = std::move(v);
    } else if (key == "period") {
      if (!base) throw ParseError(lineno, "period before any base");
      periods.push_back(std::move(v));
    } else {
      throw ParseError(lineno, "unknown key '" + key + "'");
    }
  }
  flush();
  return acc;
}

}  // namespace tropilinear
