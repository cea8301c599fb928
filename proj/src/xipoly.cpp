#include "heckecenter/xipoly.hpp"

namespace hecke {

XiPoly XiPoly::xi(int exp, Int scale) {
  if (exp < 0) throw std::invalid_argument("xi exponent must be nonnegative");
  if (scale == 0) return XiPoly();
  std::vector<Int> c(static_cast<size_t>(exp) + 1, Int(0));
  c.back() = std::move(scale);
  return XiPoly(std::move(c));
}

bool XiPoly::is_nonneg() const {
  for (const auto& v : c_)
    if (v < 0) return false;
  return true;
}

XiPoly& XiPoly::operator+=(const XiPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

XiPoly& XiPoly::operator-=(const XiPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

XiPoly operator*(const XiPoly& a, const XiPoly& b) {
  if (a.is_zero() || b.is_zero()) return XiPoly();
  std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return XiPoly(std::move(c));
}

XiPoly XiPoly::operator-() const {
  std::vector<Int> c(c_);
  for (auto& v : c) v = -v;
  return XiPoly(std::move(c));
}

std::strong_ordering operator<=>(const XiPoly& a, const XiPoly& b) {
  if (a.c_.size() != b.c_.size())
    return a.c_.size() <=> b.c_.size();
  for (size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

XiPoly XiPoly::divide_exact(const XiPoly& d) const {
  if (d.is_zero()) throw internal_error("XiPoly: division by zero");
  if (is_zero()) return XiPoly();
  QXiPoly q, r;
  QXiPoly::divmod(QXiPoly(*this), QXiPoly(d), q, r);
  if (!r.is_zero()) throw internal_error("XiPoly: inexact division");
  return q.to_integer();
}

void QHalfLaurent::add(int half_exp, const Int& v) {
  if (v == 0) return;
  auto it = t_.find(half_exp);
  if (it == t_.end()) {
    t_.emplace(half_exp, v);
  } else {
    it->second += v;
    if (it->second == 0) t_.erase(it);
  }
}

QHalfLaurent operator+(const QHalfLaurent& a, const QHalfLaurent& b) {
  QHalfLaurent out = a;
  for (const auto& [e, v] : b.t_) out.add(e, v);
  return out;
}

QHalfLaurent operator*(const QHalfLaurent& a, const QHalfLaurent& b) {
  QHalfLaurent out;
  for (const auto& [ea, va] : a.t_)
    for (const auto& [eb, vb] : b.t_) out.add(ea + eb, va * vb);
  return out;
}

QHalfLaurent to_q_half(const XiPoly& a, int length_shift) {
  QHalfLaurent xi_image;          // q^{1/2} - q^{-1/2}
  xi_image.add(1, 1);
  xi_image.add(-1, -1);
  QHalfLaurent acc, pow;
  pow.add(0, 1);
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeff(i) != 0) {
      QHalfLaurent term;
      term.add(length_shift, a.coeff(i));
      acc = acc + term * pow;
    }
    pow = pow * xi_image;
  }
  return acc;
}

QXiPoly::QXiPoly(const XiPoly& p) {
  c_.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c_.emplace_back(v);
  trim();
}

bool QXiPoly::is_integral() const {
  for (const auto& v : c_)
    if (denominator(v) != 1) return false;
  return true;
}

XiPoly QXiPoly::to_integer() const {
  std::vector<Int> out;
  out.reserve(c_.size());
  for (const auto& v : c_) {
    if (denominator(v) != 1) throw internal_error("QXiPoly: non-integer coefficient");
    out.push_back(numerator(v));
  }
  return XiPoly(std::move(out));
}

QXiPoly& QXiPoly::operator+=(const QXiPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QXiPoly& QXiPoly::operator-=(const QXiPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QXiPoly operator*(const QXiPoly& a, const QXiPoly& b) {
  if (a.is_zero() || b.is_zero()) return QXiPoly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return QXiPoly(std::move(c));
}

QXiPoly QXiPoly::operator-() const {
  std::vector<Rat> c(c_);
  for (auto& v : c) v = -v;
  return QXiPoly(std::move(c));
}

QXiPoly QXiPoly::scaled(const Rat& r) const {
  if (r == 0) return QXiPoly();
  std::vector<Rat> c(c_);
  for (auto& v : c) v *= r;
  return QXiPoly(std::move(c));
}

void QXiPoly::divmod(const QXiPoly& a, const QXiPoly& b, QXiPoly& q, QXiPoly& r) {
  if (b.is_zero()) throw internal_error("QXiPoly: division by zero");
  std::vector<Rat> rem(a.c_);
  std::vector<Rat> quo;
  int db = b.degree();
  if (static_cast<int>(rem.size()) - 1 >= db) quo.assign(rem.size() - db, Rat(0));
  const Rat lead = b.c_.back();
  for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
    if (rem[d] == 0) continue;
    Rat f = rem[d] / lead;
    quo[d - db] = f;
    for (int j = 0; j <= db; ++j) rem[d - db + j] -= f * b.c_[j];
  }
  q = QXiPoly(std::move(quo));
  r = QXiPoly(std::move(rem));
}

QXiPoly gcd(QXiPoly a, QXiPoly b) {
  while (!b.is_zero()) {
    QXiPoly q, r;
    QXiPoly::divmod(a, b, q, r);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.scaled(Rat(1) / a.leading());  // monic
}

RatXiFrac::RatXiFrac(QXiPoly n, QXiPoly d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::invalid_argument("RatXiFrac: zero denominator");
  reduce();
}

void RatXiFrac::reduce() {
  if (num_.is_zero()) {
    den_ = QXiPoly(1);
    return;
  }
  QXiPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    QXiPoly q, r;
    QXiPoly::divmod(num_, g, q, r);
    num_ = q;
    QXiPoly::divmod(den_, g, q, r);
    den_ = q;
  }
  Rat lead = den_.leading();
  if (lead != 1) {
    den_ = den_.scaled(Rat(1) / lead);
    num_ = num_.scaled(Rat(1) / lead);
  }
}

RatXiFrac operator+(const RatXiFrac& a, const RatXiFrac& b) {
  return RatXiFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatXiFrac operator-(const RatXiFrac& a, const RatXiFrac& b) {
  return RatXiFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatXiFrac operator*(const RatXiFrac& a, const RatXiFrac& b) {
  return RatXiFrac(a.num_ * b.num_, a.den_ * b.den_);
}

RatXiFrac operator/(const RatXiFrac& a, const RatXiFrac& b) {
  if (b.is_zero()) throw std::invalid_argument("RatXiFrac: division by zero");
  return RatXiFrac(a.num_ * b.den_, a.den_ * b.num_);
}

QXiPoly RatXiFrac::to_poly() const {
  if (den_ == QXiPoly(1)) return num_;
  throw internal_error("RatXiFrac: fraction is not a polynomial");
}

}  // namespace hecke
