#include <doctest.h>

#include "stein/qalg.hpp"

using namespace stein;

TEST_CASE("polynomial arithmetic and rendering") {
  QPoly q = QPoly::q();
  QPoly p = q * q + QPoly(2) * q - QPoly(3);
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == -3);
  CHECK(p.coeff(1) == 2);
  CHECK(p.coeff(5) == 0);
  CHECK(p.str() == "q^2+2q-3");
  CHECK((-p).str() == "-q^2-2q+3");
  CHECK(QPoly().str() == "0");
  CHECK(p.eval_at(2) == 5);
  CHECK((q + QPoly(1)).pow(3) == q * q * q + QPoly(3) * q * q + QPoly(3) * q + QPoly(1));
  CHECK(QPoly(5).pow(0) == QPoly(1));
}

TEST_CASE("zero normalization") {
  QPoly q = QPoly::q();
  QPoly z = q - q;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z == QPoly());
  CHECK((z * q).is_zero());
}

TEST_CASE("exact division") {
  QPoly q = QPoly::q();
  QPoly p = (q * q - QPoly(1)) * (q + QPoly(2));
  CHECK(p.div_exact(q + QPoly(2)) == q * q - QPoly(1));
  CHECK(p.div_exact(q - QPoly(1)) == (q + QPoly(1)) * (q + QPoly(2)));
  CHECK_THROWS_AS(p.div_exact(q + QPoly(3)), NotPolynomial);
  CHECK_THROWS_AS((QPoly(2) * q).div_exact(QPoly(4)), NotPolynomial);
  CHECK(QPoly().div_exact(q) == QPoly());
}

TEST_CASE("gcd carries content and sign") {
  QPoly q = QPoly::q();
  CHECK(QPoly::gcd(q * q - QPoly(1), q * q - QPoly(2) * q + QPoly(1)) == q - QPoly(1));
  CHECK(QPoly::gcd(QPoly(2) * q + QPoly(2), QPoly(4)) == QPoly(2));
  CHECK(QPoly::gcd(QPoly(), q + QPoly(1)) == q + QPoly(1));
  CHECK(QPoly::gcd(-(q - QPoly(1)), -(q * q - q)) == q - QPoly(1));
}

TEST_CASE("rational normalization") {
  QPoly q = QPoly::q();
  QRat r(q * q - QPoly(1), q - QPoly(1));
  CHECK(r.den() == QPoly(1));
  CHECK(r.as_polynomial() == q + QPoly(1));

  QRat s(q, QPoly(1) - q);  // denominator sign gets flipped
  CHECK(s.den() == q - QPoly(1));
  CHECK(s.num() == -q);

  QRat t = QRat(QPoly(1), q - QPoly(1)) + QRat(QPoly(1), q + QPoly(1));
  CHECK(t == QRat(QPoly(2) * q, q * q - QPoly(1)));
  CHECK_THROWS_AS(t.as_polynomial(), NotPolynomial);
  CHECK((t / t) == QRat(1));
  CHECK_THROWS_AS(QRat(q, QPoly()), std::domain_error);
}

TEST_CASE("truncated series") {
  TSeries geo = TSeries::geometric(5);
  TSeries one_minus_t(5, QRat(1));
  one_minus_t.set_coeff(1, QRat(-1));
  TSeries prod = geo * one_minus_t;
  CHECK(prod.coeff(0) == QRat(1));
  for (int k = 1; k <= 5; ++k) CHECK(prod.coeff(k) == QRat());
  CHECK(one_minus_t.inverse() == geo);
  CHECK(geo.inverse() == one_minus_t);
}

TEST_CASE("json round trips") {
  QPoly q = QPoly::q();
  QPoly p = q * q * q - QPoly(7) * q + QPoly(2);
  nlohmann::json j = p;
  CHECK(j.dump() == R"({"coeffs":[2,-7,0,1]})");
  CHECK(j.get<QPoly>() == p);

  QRat r(q + QPoly(1), q - QPoly(1));
  nlohmann::json jr = r;
  CHECK(jr.get<QRat>() == r);
}
