#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "ext_int.hpp"

namespace tropilinear {

using TropVector = std::vector<ExtInt>;

/// Dense row-major matrix over Z u {+-inf} with a fixed semiring flavor.
class TropMatrix {
 public:
  TropMatrix() = default;

  TropMatrix(std::size_t rows, std::size_t cols, Flavor f = Flavor::MaxPlus)
      : rows_(rows), cols_(cols), flavor_(f), entries_(rows * cols, zero(f)) {}

  TropMatrix(std::size_t rows, std::size_t cols, std::vector<ExtInt> entries,
             Flavor f = Flavor::MaxPlus)
      : rows_(rows), cols_(cols), flavor_(f), entries_(std::move(entries)) {
    require_dims(entries_.size() == rows_ * cols_, "matrix: entry count != rows*cols");
  }

  static TropMatrix identity(std::size_t n, Flavor f = Flavor::MaxPlus) {
    TropMatrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one(f);
    return m;
  }

  /// Builds a matrix whose columns are the given vectors.
  static TropMatrix from_columns(std::size_t rows, const std::vector<TropVector>& cols,
                                 Flavor f = Flavor::MaxPlus) {
    TropMatrix m(rows, cols.size(), f);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      require_dims(cols[j].size() == rows, "from_columns: column length");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static TropMatrix from_rows(std::size_t cols, const std::vector<TropVector>& rows,
                              Flavor f = Flavor::MaxPlus) {
    TropMatrix m(rows.size(), cols, f);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require_dims(rows[i].size() == cols, "from_rows: row length");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Flavor flavor() const noexcept { return flavor_; }
  const std::vector<ExtInt>& entries() const noexcept { return entries_; }

  ExtInt& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const ExtInt& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  TropVector column(std::size_t j) const {
    TropVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  TropVector row(std::size_t i) const {
    return TropVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                      entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  std::vector<TropVector> columns() const {
    std::vector<TropVector> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }

  TropMatrix transpose() const {
    TropMatrix t(cols_, rows_, flavor_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const TropMatrix&, const TropMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Flavor flavor_ = Flavor::MaxPlus;
  std::vector<ExtInt> entries_;
};

inline void require_same_flavor(const TropMatrix& a, const TropMatrix& b) {
  if (a.flavor() != b.flavor()) throw FlavorError("operands have different flavors");
}

/// C_ij = (+)_k A_ik (x) B_kj.
inline TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b) {
  require_same_flavor(a, b);
  require_dims(a.cols() == b.rows(), "mat_mul: inner dimensions differ");
  const Flavor f = a.flavor();
  TropMatrix c(a.rows(), b.cols(), f);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      ExtInt acc = zero(f);
      for (std::size_t k = 0; k < a.cols(); ++k)
        acc = oplus(acc, otimes(a(i, k), b(k, j), f), f);
      c(i, j) = std::move(acc);
    }
  }
  return c;
}

inline TropMatrix operator*(const TropMatrix& a, const TropMatrix& b) { return mat_mul(a, b); }

inline TropMatrix mat_add(const TropMatrix& a, const TropMatrix& b) {
  require_same_flavor(a, b);
  require_dims(a.rows() == b.rows() && a.cols() == b.cols(), "mat_add: shapes differ");
  std::vector<ExtInt> e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = oplus(a.entries()[i], b.entries()[i], a.flavor());
  return TropMatrix(a.rows(), a.cols(), std::move(e), a.flavor());
}

inline TropMatrix mat_pow(const TropMatrix& a, std::size_t k) {
  require_dims(a.rows() == a.cols(), "mat_pow: matrix not square");
  TropMatrix r = TropMatrix::identity(a.rows(), a.flavor());
  for (std::size_t i = 0; i < k; ++i) r = mat_mul(r, a);
  return r;
}

/// A (x) x.
inline TropVector mat_apply(const TropMatrix& a, const TropVector& x) {
  require_dims(a.cols() == x.size(), "apply: vector length != matrix cols");
  const Flavor f = a.flavor();
  TropVector y(a.rows(), zero(f));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      y[i] = oplus(y[i], otimes(a(i, k), x[k], f), f);
  return y;
}

/// Row vector times matrix: r (x) A.
inline TropVector apply_left(const TropVector& r, const TropMatrix& a) {
  require_dims(a.rows() == r.size(), "apply_left: vector length != matrix rows");
  const Flavor f = a.flavor();
  TropVector y(a.cols(), zero(f));
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t k = 0; k < a.rows(); ++k)
      y[j] = oplus(y[j], otimes(r[k], a(k, j), f), f);
  return y;
}

inline TropVector vec_oplus(const TropVector& x, const TropVector& y, Flavor f = Flavor::MaxPlus) {
  require_dims(x.size() == y.size(), "vec_oplus: lengths differ");
  TropVector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = oplus(x[i], y[i], f);
  return z;
}

inline TropVector scale(const ExtInt& lambda, const TropVector& x, Flavor f = Flavor::MaxPlus) {
  TropVector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = otimes(lambda, x[i], f);
  return z;
}

/// a . x = (+)_i a_i (x) x_i.
inline ExtInt dot(const TropVector& a, const TropVector& x, Flavor f = Flavor::MaxPlus) {
  require_dims(a.size() == x.size(), "dot: lengths differ");
  ExtInt acc = zero(f);
  for (std::size_t i = 0; i < a.size(); ++i) acc = oplus(acc, otimes(a[i], x[i], f), f);
  return acc;
}

/// Componentwise x <= y in the total order of Z u {+-inf}.
inline bool leq(const TropVector& x, const TropVector& y) {
  require_dims(x.size() == y.size(), "leq: lengths differ");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (y[i] < x[i]) return false;
  return true;
}

/// Greatest x with A (x) x <= b (max-plus): x_j = min_i b_i / A_ij.
inline TropVector residual_left(const TropMatrix& a, const TropVector& b) {
  if (a.flavor() != Flavor::MaxPlus) throw FlavorError("residual_left requires max-plus");
  require_dims(a.rows() == b.size(), "residual_left: rhs length != rows");
  TropVector x(a.cols(), ExtInt::pos_inf());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) x[j] = std::min(x[j], residual(b[i], a(i, j)));
  return x;
}

// ---- pattern map ---------------------------------------------------------

enum class PatternCoord : std::uint8_t { NegInf, Zero, PosInf };

using Pattern = std::vector<PatternCoord>;

inline PatternCoord pattern_of(const ExtInt& x) {
  switch (x.kind()) {
    case ExtInt::Kind::NegInf: return PatternCoord::NegInf;
    case ExtInt::Kind::PosInf: return PatternCoord::PosInf;
    default: return PatternCoord::Zero;
  }
}

/// Sends finite coordinates to 0 and fixes both infinities.
inline Pattern pattern(const TropVector& x) {
  Pattern p(x.size());
  std::transform(x.begin(), x.end(), p.begin(), [](const ExtInt& v) { return pattern_of(v); });
  return p;
}

inline TropVector embed(const Pattern& p) {
  TropVector v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    switch (p[i]) {
      case PatternCoord::NegInf: v[i] = ExtInt::neg_inf(); break;
      case PatternCoord::PosInf: v[i] = ExtInt::pos_inf(); break;
      default: v[i] = ExtInt(0); break;
    }
  }
  return v;
}

inline bool same_pattern(const TropVector& x, const TropVector& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].kind() != y[i].kind()) return false;
  return true;
}

inline bool all_neg_inf(const TropVector& x) {
  return std::all_of(x.begin(), x.end(), [](const ExtInt& v) { return v.is_neg_inf(); });
}

// ---- text format ---------------------------------------------------------
//
//   maxplus R C
//   t11 t12 ... t1C
//   ...
//
// Tokens are decimal integers, -inf or +inf, separated by single spaces on
// output. Any whitespace is accepted on input.

inline std::string format_vector(const TropVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += v[i].str();
  }
  return out;
}

inline TropVector parse_vector(std::string_view text) {
  std::istringstream in{std::string(text)};
  TropVector v;
  std::string tok;
  while (in >> tok) v.push_back(ExtInt::parse(tok));
  return v;
}

inline std::string format_matrix(const TropMatrix& m) {
  std::string out = std::string(to_string(m.flavor())) + " " + std::to_string(m.rows()) + " " +
                    std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) out += format_vector(m.row(i)) + "\n";
  return out;
}

namespace detail {

inline bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace detail

/// Reads one matrix block from `in`, advancing `lineno` for diagnostics.
inline TropMatrix read_matrix(std::istream& in, std::size_t& lineno) {
  std::string line;
  if (!detail::next_content_line(in, line, lineno)) throw ParseError(lineno, "expected matrix header");
  std::istringstream hs(line);
  std::string kind;
  long long r = -1, c = -1;
  hs >> kind >> r >> c;
  Flavor f;
  if (kind == "maxplus") {
    f = Flavor::MaxPlus;
  } else if (kind == "minplus") {
    f = Flavor::MinPlus;
  } else {
    throw ParseError(lineno, "header must start with maxplus or minplus");
  }
  if (hs.fail() || r < 0 || c < 0) throw ParseError(lineno, "bad matrix dimensions");
  std::string extra;
  if (hs >> extra) throw ParseError(lineno, "trailing tokens in header");
  TropMatrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(c), f);
  for (long long i = 0; i < r; ++i) {
    if (!detail::next_content_line(in, line, lineno)) throw ParseError(lineno, "missing matrix row");
    TropVector row;
    try {
      row = parse_vector(line);
    } catch (const Error& e) {
      throw ParseError(lineno, e.what());
    }
    if (row.size() != static_cast<std::size_t>(c)) throw ParseError(lineno, "row has wrong length");
    for (long long j = 0; j < c; ++j)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = row[static_cast<std::size_t>(j)];
  }
  return m;
}

inline TropMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  TropMatrix m = read_matrix(in, lineno);
  std::string line;
  if (detail::next_content_line(in, line, lineno)) throw ParseError(lineno, "trailing content after matrix");
  return m;
}

}  // namespace tropilinear
