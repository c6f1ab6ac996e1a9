#include "stein/qalg.hpp"

#include <algorithm>
#include <sstream>

namespace stein {

QPoly::QPoly(long v) {
  if (v != 0) c_.push_back(Int(v));
}

QPoly::QPoly(Int v) {
  if (v != 0) c_.push_back(std::move(v));
}

QPoly::QPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::q() { return q_pow(1); }

QPoly QPoly::q_pow(long k) {
  QPoly p;
  p.c_.assign(k + 1, Int(0));
  p.c_.back() = 1;
  return p;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
  return c_[i];
}

const Int& QPoly::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return c_.back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly QPoly::pow(long e) const {
  QPoly r(1);
  QPoly base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) r *= base;
    if (e > 1) base *= base;
  }
  return r;
}

Int QPoly::eval_at(const Int& q0) const {
  Int r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q0 + *it;
  return r;
}

QPoly QPoly::div_exact(const QPoly& d) const {
  if (d.is_zero()) throw NotPolynomial("division by zero polynomial");
  std::vector<Int> rem = c_;
  int dd = d.degree();
  int nd = static_cast<int>(rem.size()) - 1;
  if (nd < dd) {
    if (is_zero()) return QPoly();
    throw NotPolynomial("inexact polynomial division");
  }
  std::vector<Int> quot(nd - dd + 1, Int(0));
  for (int k = nd - dd; k >= 0; --k) {
    Int& top = rem[k + dd];
    if (top == 0) continue;
    Int qk, r;
    mpz_tdiv_qr(qk.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), d.leading().get_mpz_t());
    if (r != 0) throw NotPolynomial("inexact polynomial division");
    quot[k] = qk;
    for (int i = 0; i <= dd; ++i) rem[k + i] -= qk * d.c_[i];
  }
  for (const auto& x : rem)
    if (x != 0) throw NotPolynomial("inexact polynomial division");
  return QPoly(std::move(quot));
}

namespace {

Int content(const QPoly& p) {
  Int g(0);
  for (const auto& x : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;  // 0 for the zero polynomial
}

QPoly scale_down(const QPoly& p, const Int& d) {
  std::vector<Int> c = p.coeffs();
  for (auto& x : c) x /= d;
  return QPoly(std::move(c));
}

QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return p;
  Int c = content(p);
  if (p.leading() < 0) c = -c;
  return scale_down(p, c);
}

// Pseudo-remainder of a by b (b nonzero).
QPoly pseudo_rem(QPoly a, const QPoly& b) {
  int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    QPoly shift = QPoly::q_pow(a.degree() - db);
    a = a * QPoly(b.leading()) - b * shift * QPoly(a.leading());
  }
  return a;
}

}  // namespace

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.is_zero() ? QPoly() : primitive_part(b) * QPoly(content(b));
  if (b.is_zero()) return primitive_part(a) * QPoly(content(a));
  Int cg;
  mpz_gcd(cg.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
  QPoly u = primitive_part(a), v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    QPoly r = primitive_part(pseudo_rem(u, v));
    u = std::move(v);
    v = std::move(r);
  }
  return u * QPoly(cg);
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& a = c_[i];
    if (a == 0) continue;
    Int mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? "-" : "+");
    }
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) {
      os << "q";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void QRat::normalize() {
  if (den_.is_zero()) throw std::domain_error("QRat with zero denominator");
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  QPoly g = QPoly::gcd(num_, den_);
  num_ = num_.div_exact(g);
  den_ = den_.div_exact(g);
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QRat& QRat::operator+=(const QRat& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

QRat& QRat::operator/=(const QRat& o) {
  if (o.is_zero()) throw std::domain_error("QRat division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

QRat QRat::operator-() const {
  QRat r = *this;
  r.num_ = -r.num_;
  return r;
}

QPoly QRat::as_polynomial() const {
  if (den_ != QPoly(1)) throw NotPolynomial("QRat " + str() + " is not a polynomial");
  return num_;
}

std::string QRat::str() const {
  if (den_ == QPoly(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

TSeries TSeries::geometric(int tmax) {
  TSeries s(tmax);
  for (int k = 0; k <= tmax; ++k) s.c_[k] = QRat(1);
  return s;
}

TSeries& TSeries::operator+=(const TSeries& o) {
  if (tmax() != o.tmax()) throw std::invalid_argument("TSeries truncation mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TSeries& TSeries::operator*=(const TSeries& o) {
  if (tmax() != o.tmax()) throw std::invalid_argument("TSeries truncation mismatch");
  std::vector<QRat> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; i + j < c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  return *this;
}

TSeries TSeries::inverse() const {
  if (c_[0].is_zero()) throw std::domain_error("TSeries inverse needs nonzero constant term");
  TSeries r(tmax());
  QRat inv0 = QRat(1) / c_[0];
  r.c_[0] = inv0;
  for (int k = 1; k <= tmax(); ++k) {
    QRat acc;
    for (int j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
    r.c_[k] = -acc * inv0;
  }
  return r;
}

void to_json(nlohmann::json& j, const QPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) {
    if (!c.fits_slong_p()) throw std::overflow_error("QPoly coefficient too large for JSON");
    arr.push_back(c.get_si());
  }
  j = nlohmann::json{{"coeffs", arr}};
}

void from_json(const nlohmann::json& j, QPoly& p) {
  std::vector<Int> c;
  for (const auto& v : j.at("coeffs")) c.emplace_back(v.get<long>());
  p = QPoly(std::move(c));
}

void to_json(nlohmann::json& j, const QRat& r) {
  j = nlohmann::json{{"num", r.num()}, {"den", r.den()}};
}

void from_json(const nlohmann::json& j, QRat& r) {
  r = QRat(j.at("num").get<QPoly>(), j.at("den").get<QPoly>());
}

}  // namespace stein
