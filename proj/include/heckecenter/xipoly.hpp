#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when an internal consistency check fails (never on bad user input).
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Polynomial in the indeterminate xi with integer coefficients.
///
/// Stored densely: coeff(i) is the coefficient of xi^i. The representation is
/// canonical: no trailing zeros, and the zero polynomial has no coefficients.
class XiPoly {
public:
  XiPoly() = default;
  XiPoly(long c) { if (c != 0) c_.push_back(c); }
  XiPoly(const Int& c) { if (c != 0) c_.push_back(c); }
  explicit XiPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// scale * xi^exp
  static XiPoly xi(int exp = 1, Int scale = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Int(0); }
  Int constant_term() const { return coeff(0); }

  /// True iff every coefficient is >= 0 (membership in N[xi]).
  bool is_nonneg() const;

  XiPoly& operator+=(const XiPoly& o);
  XiPoly& operator-=(const XiPoly& o);
  friend XiPoly operator+(XiPoly a, const XiPoly& b) { a += b; return a; }
  friend XiPoly operator-(XiPoly a, const XiPoly& b) { a -= b; return a; }
  friend XiPoly operator*(const XiPoly& a, const XiPoly& b);
  XiPoly operator-() const;

  friend bool operator==(const XiPoly& a, const XiPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const XiPoly& a, const XiPoly& b) { return !(a == b); }
  friend std::strong_ordering operator<=>(const XiPoly& a, const XiPoly& b);

  /// Exact division; throws internal_error if the remainder is nonzero.
  XiPoly divide_exact(const XiPoly& d) const;

private:
  void trim() { while (!c_.empty() && c_.back() == 0) c_.pop_back(); }
  std::vector<Int> c_;
};

/// Element of Z[q^{1/2}, q^{-1/2}]. Keys are exponents in units of 1/2,
/// so half_exp = 3 means q^{3/2}. No zero values are stored.
class QHalfLaurent {
public:
  QHalfLaurent() = default;

  void add(int half_exp, const Int& v);
  bool is_zero() const { return t_.empty(); }
  const std::map<int, Int>& terms() const { return t_; }

  friend QHalfLaurent operator+(const QHalfLaurent& a, const QHalfLaurent& b);
  friend QHalfLaurent operator*(const QHalfLaurent& a, const QHalfLaurent& b);
  friend bool operator==(const QHalfLaurent& a, const QHalfLaurent& b) { return a.t_ == b.t_; }

private:
  std::map<int, Int> t_;
};

/// Substitute xi -> q^{1/2} - q^{-1/2}, then multiply by q^{length_shift/2}.
QHalfLaurent to_q_half(const XiPoly& a, int length_shift);

/// Polynomial in xi with rational coefficients; same canonical-form rules
/// as XiPoly. Only used inside the linear solve and as the fraction parts
/// of RatXiFrac.
class QXiPoly {
public:
  QXiPoly() = default;
  QXiPoly(long c) { if (c != 0) c_.push_back(c); }
  QXiPoly(const Rat& c) { if (c != 0) c_.push_back(c); }
  explicit QXiPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit QXiPoly(const XiPoly& p);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rat(0); }
  Rat leading() const { return is_zero() ? Rat(0) : c_.back(); }

  /// True iff every coefficient is an integer.
  bool is_integral() const;
  /// Conversion back to XiPoly; throws internal_error unless is_integral().
  XiPoly to_integer() const;

  QXiPoly& operator+=(const QXiPoly& o);
  QXiPoly& operator-=(const QXiPoly& o);
  friend QXiPoly operator+(QXiPoly a, const QXiPoly& b) { a += b; return a; }
  friend QXiPoly operator-(QXiPoly a, const QXiPoly& b) { a -= b; return a; }
  friend QXiPoly operator*(const QXiPoly& a, const QXiPoly& b);
  QXiPoly operator-() const;
  QXiPoly scaled(const Rat& r) const;

  /// Polynomial division with remainder over Q[xi].
  static void divmod(const QXiPoly& a, const QXiPoly& b, QXiPoly& q, QXiPoly& r);

  friend bool operator==(const QXiPoly& a, const QXiPoly& b) { return a.c_ == b.c_; }

private:
  void trim() { while (!c_.empty() && c_.back() == 0) c_.pop_back(); }
  std::vector<Rat> c_;
};

QXiPoly gcd(QXiPoly a, QXiPoly b);

/// Quotient of two polynomials over Q[xi], kept reduced (numerator and
/// denominator coprime) with a monic denominator.
class RatXiFrac {
public:
  RatXiFrac() : num_(0), den_(1) {}
  RatXiFrac(const QXiPoly& n) : num_(n), den_(1) {}
  RatXiFrac(const XiPoly& n) : num_(QXiPoly(n)), den_(1) {}
  RatXiFrac(QXiPoly n, QXiPoly d);

  const QXiPoly& num() const { return num_; }
  const QXiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatXiFrac operator+(const RatXiFrac& a, const RatXiFrac& b);
  friend RatXiFrac operator-(const RatXiFrac& a, const RatXiFrac& b);
  friend RatXiFrac operator*(const RatXiFrac& a, const RatXiFrac& b);
  friend RatXiFrac operator/(const RatXiFrac& a, const RatXiFrac& b);
  friend bool operator==(const RatXiFrac& a, const RatXiFrac& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// The fraction as a polynomial; throws internal_error if den != 1.
  QXiPoly to_poly() const;

private:
  void reduce();
  QXiPoly num_, den_;
};

}  // namespace hecke
