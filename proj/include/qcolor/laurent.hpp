#pragma once

// Exact-integer Laurent polynomials in one variable t.

#include "qcolor/arith.hpp"
#include "qcolor/error.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcolor {

class LaurentPoly {
 public:
  /// The zero polynomial.
  LaurentPoly() = default;

  /// sum coeffs[i] t^(low + i).
  explicit LaurentPoly(std::vector<BigInt> coeffs, int low = 0) : coeffs_(std::move(coeffs)), low_(low) {
    trim();
  }
  LaurentPoly(std::initializer_list<long long> coeffs, int low = 0) : low_(low) {
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static LaurentPoly constant(const BigInt& c) { return LaurentPoly(std::vector<BigInt>{c}); }
  static LaurentPoly monomial(const BigInt& c, int exponent) {
    return LaurentPoly(std::vector<BigInt>{c}, exponent);
  }
  /// The variable t.
  static LaurentPoly t() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
  int low() const noexcept { return low_; }
  /// Highest exponent with a nonzero coefficient.
  int high() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  /// high() - low(); the degree d for a normalized polynomial.
  int span() const noexcept { return is_zero() ? 0 : static_cast<int>(coeffs_.size()) - 1; }

  BigInt coeff(int exponent) const {
    int i = exponent - low_;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
  }
  /// Coefficients from low() to high().
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  BigInt eval_at_one() const {
    BigInt s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  /// Exact value at an integer point; requires low() >= 0 or x = +-1.
  BigInt eval(const BigInt& x) const {
    if (is_zero()) return 0;
    if (low_ < 0 && x != 1 && x != -1) throw std::domain_error("negative powers at a non-unit point");
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    if (low_ >= 0) {
      for (int i = 0; i < low_; ++i) acc *= x;
    } else if (x == -1 && (-low_) % 2 == 1) {
      acc = -acc;
    }
    return acc;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) { return add(x, y, 1); }
  friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) { return add(x, y, -1); }

  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::vector<BigInt> out(x.coeffs_.size() + y.coeffs_.size() - 1);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (x.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < y.coeffs_.size(); ++j) out[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    return LaurentPoly(std::move(out), x.low_ + y.low_);
  }

  LaurentPoly& operator+=(const LaurentPoly& y) { return *this = *this + y; }
  LaurentPoly& operator-=(const LaurentPoly& y) { return *this = *this - y; }
  LaurentPoly& operator*=(const LaurentPoly& y) { return *this = *this * y; }

  /// Exact quotient x / y. Throws std::domain_error when y does not divide x
  /// in Z[t, t^-1].
  friend LaurentPoly divexact(const LaurentPoly& x, const LaurentPoly& y) {
    if (y.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (x.is_zero()) return {};
    if (x.coeffs_.size() < y.coeffs_.size()) throw std::domain_error("inexact polynomial division");
    std::vector<BigInt> rem = x.coeffs_;
    const std::size_t ny = y.coeffs_.size();
    const std::size_t nq = rem.size() - ny + 1;
    std::vector<BigInt> q(nq);
    const BigInt& lead = y.coeffs_.back();
    for (std::size_t k = nq; k-- > 0;) {
      BigInt& top = rem[k + ny - 1];
      if (top == 0) continue;
      BigInt r;
      divide_qr(top, lead, q[k], r);
      if (r != 0) throw std::domain_error("inexact polynomial division");
      for (std::size_t j = 0; j < ny; ++j) rem[k + j] -= q[k] * y.coeffs_[j];
    }
    for (const auto& r : rem)
      if (r != 0) throw std::domain_error("inexact polynomial division");
    return LaurentPoly(std::move(q), x.low_ - y.low_);
  }

  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
    return x.coeffs_ == y.coeffs_ && (x.is_zero() || x.low_ == y.low_);
  }

  /// Shifts so the lowest term has exponent 0 and flips the sign so the
  /// value at t = 1 is positive (for a knot polynomial, exactly 1). Falls
  /// back to a positive leading coefficient when the value at 1 vanishes.
  LaurentPoly normalized() const {
    if (is_zero()) return {};
    LaurentPoly r(coeffs_, 0);
    BigInt one = r.eval_at_one();
    if (one < 0 || (one == 0 && r.coeffs_.back() < 0)) r = -r;
    return r;
  }

  /// Human-readable form, highest power first: "-t^2 + 3t - 1".
  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (int e = high(); e >= low_; --e) {
      BigInt c = coeff(e);
      if (c == 0) continue;
      bool neg = c < 0;
      BigInt mag = neg ? BigInt(-c) : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (mag != 1 || e == 0) out += mag.str();
      if (e != 0) {
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

 private:
  static void divide_qr(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    q = a / b;
    r = a - q * b;
  }

  static LaurentPoly add(const LaurentPoly& x, const LaurentPoly& y, int sign) {
    if (y.is_zero()) return x;
    if (x.is_zero()) return sign > 0 ? y : -y;
    int lo = std::min(x.low_, y.low_);
    int hi = std::max(x.high(), y.high());
    std::vector<BigInt> out(hi - lo + 1);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) out[x.low_ - lo + i] += x.coeffs_[i];
    for (std::size_t i = 0; i < y.coeffs_.size(); ++i) {
      if (sign > 0)
        out[y.low_ - lo + i] += y.coeffs_[i];
      else
        out[y.low_ - lo + i] -= y.coeffs_[i];
    }
    return LaurentPoly(std::move(out), lo);
  }

  void trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0) --last;
    if (first > 0 || last < coeffs_.size()) {
      coeffs_ = std::vector<BigInt>(coeffs_.begin() + first, coeffs_.begin() + last);
      low_ += static_cast<int>(first);
    }
  }

  std::vector<BigInt> coeffs_;
  int low_ = 0;
};

/// sum a_i x^i mod m by Horner, reducing at every step. Negative exponents
/// need x invertible mod m.
inline std::int64_t eval_mod(const LaurentPoly& p, std::int64_t x, std::int64_t m) {
  if (m < 2) throw ParameterError("modulus must be >= 2");
  if (p.is_zero()) return 0;
  const std::int64_t xr = mod(x, m);
  std::int64_t acc = 0;
  const auto& cs = p.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = mod(mul_mod(acc, xr, m) + mod(*it, m), m);
  int shift = p.low();
  std::int64_t base = xr;
  if (shift < 0) {
    auto inv = inverse_mod(xr, m);
    if (!inv) throw ParameterError("evaluation point not invertible modulo m");
    base = *inv;
    shift = -shift;
  }
  for (int i = 0; i < shift; ++i) acc = mul_mod(acc, base, m);
  return acc;
}

/// Checks the knot-polynomial normal form: a_0 != 0 at exponent 0, value 1
/// at t = 1, palindromic, even degree, odd middle coefficient.
inline bool is_knot_normal_form(const LaurentPoly& p) {
  if (p.is_zero() || p.low() != 0) return false;
  if (p.eval_at_one() != 1) return false;
  const int d = p.high();
  if (d % 2 != 0) return false;
  for (int i = 0; i <= d; ++i)
    if (p.coeff(i) != p.coeff(d - i)) return false;
  BigInt mid = p.coeff(d / 2);
  return boost::multiprecision::abs(mid) % 2 == 1;
}

}  // namespace qcolor
