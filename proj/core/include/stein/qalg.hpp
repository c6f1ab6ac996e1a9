#ifndef STEIN_QALG_HPP
#define STEIN_QALG_HPP

#include <gmpxx.h>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace stein {

using Int = mpz_class;

struct NotPolynomial : std::runtime_error {
  explicit NotPolynomial(const std::string& what) : std::runtime_error(what) {}
};

struct InternalMismatch : std::runtime_error {
  explicit InternalMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Univariate polynomial in q with arbitrary-precision integer coefficients.
/// Canonical form: ascending coefficients, no trailing zeros, zero = empty.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long v);  // NOLINT(google-explicit-constructor)
  QPoly(Int v);   // NOLINT(google-explicit-constructor)
  explicit QPoly(std::vector<Int> coeffs);

  static QPoly q();             // the indeterminate
  static QPoly q_pow(long k);   // q^k

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int i) const;
  const Int& leading() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly operator-() const;

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  QPoly pow(long e) const;

  /// Exact integer evaluation at q = q0.
  Int eval_at(const Int& q0) const;

  /// Exact division; throws NotPolynomial if the remainder is nonzero.
  QPoly div_exact(const QPoly& d) const;

  /// gcd over Z[q], content included; leading coefficient positive.
  static QPoly gcd(const QPoly& a, const QPoly& b);

  std::string str() const;  // human rendering, e.g. "q^2+q"

 private:
  void trim();
  std::vector<Int> c_;
};

/// Reduced fraction of two QPoly; denominator has positive leading coefficient.
class QRat {
 public:
  QRat() : num_(), den_(1) {}
  QRat(QPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  QRat(long v) : num_(v), den_(1) {}              // NOLINT
  QRat(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);
  QRat operator-() const;

  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  friend bool operator==(const QRat& a, const QRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

  /// The underlying polynomial; throws NotPolynomial unless the denominator is 1.
  QPoly as_polynomial() const;

  std::string str() const;

 private:
  void normalize();
  QPoly num_, den_;
};

/// Power series in t truncated at t^tmax, with QRat coefficients.
class TSeries {
 public:
  explicit TSeries(int tmax) : c_(tmax + 1) {}
  TSeries(int tmax, QRat constant) : c_(tmax + 1) { c_[0] = std::move(constant); }

  static TSeries geometric(int tmax);  // 1/(1-t)

  int tmax() const { return static_cast<int>(c_.size()) - 1; }
  const QRat& coeff(int k) const { return c_.at(k); }
  void set_coeff(int k, QRat v) { c_.at(k) = std::move(v); }
  void add_to_coeff(int k, const QRat& v) { c_.at(k) += v; }

  TSeries& operator+=(const TSeries& o);
  TSeries& operator*=(const TSeries& o);
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator*(TSeries a, const TSeries& b) { return a *= b; }
  friend bool operator==(const TSeries& a, const TSeries& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TSeries& a, const TSeries& b) { return !(a == b); }

  /// Multiplicative inverse; requires an invertible constant term.
  TSeries inverse() const;

 private:
  std::vector<QRat> c_;
};

void to_json(nlohmann::json& j, const QPoly& p);
void from_json(const nlohmann::json& j, QPoly& p);
void to_json(nlohmann::json& j, const QRat& r);
void from_json(const nlohmann::json& j, QRat& r);

}  // namespace stein

#endif
