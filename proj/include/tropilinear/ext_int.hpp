#pragma once

// Scalars of Z u {-inf, +inf} with max-plus and min-plus semiring laws.
//
// The value itself carries no flavor; the flavor is a parameter of the
// semiring operations. Min-plus is obtained from max-plus by negation
// (which swaps the two infinities), so there is a single code path.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace tropilinear {

using Integer = boost::multiprecision::cpp_int;

enum class Flavor : std::uint8_t { MaxPlus, MinPlus };

inline const char* to_string(Flavor f) {
  return f == Flavor::MaxPlus ? "maxplus" : "minplus";
}

class ExtInt {
 public:
  enum class Kind : std::uint8_t { NegInf = 0, Finite = 1, PosInf = 2 };

  ExtInt() = default;
  ExtInt(Integer v) : value_(std::move(v)) {}  // NOLINT: implicit by intent
  ExtInt(long long v) : value_(v) {}           // NOLINT
  ExtInt(int v) : value_(v) {}                 // NOLINT

  static ExtInt neg_inf() { return ExtInt(Kind::NegInf); }
  static ExtInt pos_inf() { return ExtInt(Kind::PosInf); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }

  /// Finite payload. Infinite values hold 0.
  const Integer& value() const noexcept { return value_; }

  friend bool operator==(const ExtInt& a, const ExtInt& b) {
    return a.kind_ == b.kind_ && a.value_ == b.value_;
  }

  friend std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Order-reversing involution: -(-inf) = +inf, -Fin(a) = Fin(-a).
  ExtInt operator-() const {
    switch (kind_) {
      case Kind::NegInf: return pos_inf();
      case Kind::PosInf: return neg_inf();
      default: return ExtInt(Integer(-value_));
    }
  }

  std::string str() const {
    switch (kind_) {
      case Kind::NegInf: return "-inf";
      case Kind::PosInf: return "+inf";
      default: return value_.str();
    }
  }

  /// Accepts a decimal integer (optional sign), `-inf` or `+inf`.
  static ExtInt parse(std::string_view tok) {
    if (tok == "-inf") return neg_inf();
    if (tok == "+inf") return pos_inf();
    std::size_t i = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
    if (i == tok.size()) throw Error("bad scalar token '" + std::string(tok) + "'");
    for (std::size_t j = i; j < tok.size(); ++j) {
      if (tok[j] < '0' || tok[j] > '9')
        throw Error("bad scalar token '" + std::string(tok) + "'");
    }
    std::string digits(tok.substr(tok[0] == '+' ? 1 : 0));
    return ExtInt(Integer(digits));
  }

 private:
  explicit ExtInt(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  Integer value_{0};
};

inline std::ostream& operator<<(std::ostream& os, const ExtInt& x) {
  return os << x.str();
}

// Max-plus laws. -inf is absorbing for the product, including
// (-inf) + (+inf) = -inf.
inline ExtInt max_oplus(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }

inline ExtInt max_otimes(const ExtInt& a, const ExtInt& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtInt::neg_inf();
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtInt::pos_inf();
  return ExtInt(Integer(a.value() + b.value()));
}

inline ExtInt zero(Flavor f) {
  return f == Flavor::MaxPlus ? ExtInt::neg_inf() : ExtInt::pos_inf();
}
inline ExtInt one(Flavor) { return ExtInt(0); }

inline ExtInt oplus(const ExtInt& a, const ExtInt& b, Flavor f = Flavor::MaxPlus) {
  if (f == Flavor::MaxPlus) return max_oplus(a, b);
  return -max_oplus(-a, -b);
}

inline ExtInt otimes(const ExtInt& a, const ExtInt& b, Flavor f = Flavor::MaxPlus) {
  if (f == Flavor::MaxPlus) return max_otimes(a, b);
  return -max_otimes(-a, -b);
}

/// Residual quotient b / a for max-plus: the greatest t with a (x) t <= b.
inline ExtInt residual(const ExtInt& b, const ExtInt& a) {
  if (a.is_neg_inf()) return ExtInt::pos_inf();
  if (a.is_pos_inf()) return b.is_pos_inf() ? ExtInt::pos_inf() : ExtInt::neg_inf();
  if (!b.is_finite()) return b;
  return ExtInt(Integer(b.value() - a.value()));
}

/// Natural order of the idempotent semiring: x <= y iff x (+) y = y.
inline bool natural_leq(const ExtInt& x, const ExtInt& y, Flavor f = Flavor::MaxPlus) {
  return oplus(x, y, f) == y;
}

}  // namespace tropilinear
