#pragma once

// Random generators with fixed seeds and brute-force oracles shared by the
// test suites. Oracles use only ExtInt arithmetic, never the code under test.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "tropilinear/tropilinear.hpp"

namespace tltest {

using namespace tropilinear;

inline ExtInt NI() { return ExtInt::neg_inf(); }
inline ExtInt PI() { return ExtInt::pos_inf(); }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long long uniform(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(gen_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(gen_); }

  // Entry in [lo, hi], or -inf / +inf with the given probabilities.
  ExtInt ext(long long lo, long long hi, double p_neg = 0.15, double p_pos = 0.0) {
    double r = std::uniform_real_distribution<double>(0, 1)(gen_);
    if (r < p_neg) return NI();
    if (r < p_neg + p_pos) return PI();
    return ExtInt(uniform(lo, hi));
  }

  TropVector vec(std::size_t n, long long lo, long long hi, double p_neg = 0.15, double p_pos = 0.0) {
    TropVector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(ext(lo, hi, p_neg, p_pos));
    return v;
  }

  TropMatrix mat(std::size_t r, std::size_t c, long long lo, long long hi, double p_neg = 0.2,
                 double p_pos = 0.0) {
    TropMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = ext(lo, hi, p_neg, p_pos);
    return m;
  }

 private:
  std::mt19937_64 gen_;
};

// base (x) y_1 p^1 (x) ... by repeated monoid addition.
inline TropVector raw_element(const TropVector& base, const std::vector<TropVector>& periods,
                              const std::vector<int>& y) {
  TropVector x = base;
  for (std::size_t j = 0; j < periods.size(); ++j)
    for (int t = 0; t < y[j]; ++t)
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = max_otimes(x[i], periods[j][i]);
  return x;
}

// All multiplicity vectors in [0, bound]^k.
inline void for_each_mult(std::size_t k, int bound, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> y(k, 0);
  while (true) {
    f(y);
    std::size_t j = 0;
    while (j < k && ++y[j] > bound) y[j++] = 0;
    if (j == k) return;
  }
}

inline std::set<TropVector> enumerate_raw(const TropVector& base, const std::vector<TropVector>& periods,
                                          int bound) {
  std::set<TropVector> out;
  for_each_mult(periods.size(), bound,
                [&](const std::vector<int>& y) { out.insert(raw_element(base, periods, y)); });
  return out;
}

inline std::vector<TropVector> period_vectors(const LinearSet& l) {
  std::vector<TropVector> out;
  for (const auto& p : l.periods) {
    TropVector v;
    for (const auto& e : p) v.push_back(ExtInt(e));
    out.push_back(v);
  }
  return out;
}

inline std::set<TropVector> enumerate_set(const SemilinearSet& s, int bound) {
  std::set<TropVector> out;
  for (const auto& c : s.components()) {
    auto part = enumerate_raw(c.base, period_vectors(c), bound);
    out.insert(part.begin(), part.end());
  }
  return out;
}

// Random semilinear set with finite periods.
inline SemilinearSet random_semilinear(Rng& rng, std::size_t dim, std::size_t max_comps,
                                       std::size_t max_periods, long long lo = -5, long long hi = 5,
                                       double p_inf = 0.1) {
  std::vector<LinearSet> comps;
  const auto nc = static_cast<std::size_t>(rng.uniform(1, static_cast<long long>(max_comps)));
  for (std::size_t c = 0; c < nc; ++c) {
    LinearSet l;
    l.base = rng.vec(dim, lo, hi, p_inf / 2, p_inf / 2);
    const auto np = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(max_periods)));
    for (std::size_t j = 0; j < np; ++j) {
      Period p;
      for (std::size_t i = 0; i < dim; ++i) p.push_back(rng.uniform(lo, hi));
      l.periods.push_back(p);
    }
    comps.push_back(l);
  }
  return SemilinearSet(dim, comps);
}

inline TropVector vmax(const TropVector& a, const TropVector& b) {
  TropVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = max_oplus(a[i], b[i]);
  return r;
}

inline TropVector vscale(const ExtInt& l, const TropVector& a) {
  TropVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = max_otimes(l, a[i]);
  return r;
}

inline TropVector mv(const TropMatrix& a, const TropVector& x) {
  TropVector y(a.rows(), NI());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] = max_oplus(y[i], max_otimes(a(i, j), x[j]));
  return y;
}

// Every combination (+)_i lambda_i (x) g^i with lambda_i in {-inf} u [lo, hi].
inline std::set<TropVector> brute_span(const std::vector<TropVector>& gens, std::size_t dim, long long lo,
                                       long long hi) {
  std::set<TropVector> out;
  std::vector<int> idx(gens.size(), 0);
  const int range = static_cast<int>(hi - lo + 2);  // 0 means -inf
  while (true) {
    TropVector acc(dim, NI());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (idx[i] == 0) continue;
      acc = vmax(acc, vscale(ExtInt(lo + idx[i] - 1), gens[i]));
    }
    out.insert(acc);
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == range) idx[j++] = 0;
    if (j == idx.size()) break;
  }
  return out;
}

}  // namespace tltest
