#include <doctest.h>

#include "stein/counts.hpp"
#include "stein/symfun.hpp"

using namespace stein;

TEST_CASE("partition enumeration and statistics") {
  CHECK(partitions(0) == std::vector<Partition>{{}});
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(6).size() == 11);
  CHECK(z_factor({}) == 1);
  CHECK(z_factor({3}) == 3);
  CHECK(z_factor({1, 1, 1}) == 6);
  CHECK(z_factor({2, 1, 1}) == 4);
  CHECK(z_factor({2, 2}) == 8);
}

TEST_CASE("partitions versus subsets of simple roots") {
  CHECK(subset_of_partition(3, {3}) == 0b11);
  CHECK(subset_of_partition(3, {1, 1, 1}) == 0b00);
  CHECK(subset_of_partition(3, {2, 1}) == 0b01);
  CHECK(partition_of_subset(3, 0b01) == Partition{2, 1});
  CHECK(partition_of_subset(3, 0b10) == Partition{2, 1});
  for (int n = 1; n <= 5; ++n)
    for (const Partition& nu : partitions(n))
      CHECK(partition_of_subset(n, subset_of_partition(n, nu)) == nu);
}

TEST_CASE("multivariate polynomial arithmetic") {
  MPoly a(2);
  a.add_term({1, 0}, QRat(1));
  a.add_term({0, 1}, QRat(1));
  MPoly sq = a * a;
  CHECK(sq.coeff({2, 0}) == QRat(1));
  CHECK(sq.coeff({1, 1}) == QRat(2));
  CHECK(sq.truncate_first(1, 1).coeff({2, 0}) == QRat());
  CHECK(sq.truncate_first(1, 1).coeff({1, 1}) == QRat(2));
  a.add_term({1, 0}, QRat(-1));  // cancels to zero and disappears
  CHECK(a.terms().size() == 1);
}

TEST_CASE("homogeneous plethysm against the closed form") {
  // coefficient of m_nu in h_n[X/(q-1)] is q^{sum nu_i^2} / (q^n prod |GL_{nu_i}|)
  for (int n = 1; n <= 4; ++n) {
    auto h = h_pleth_X(n);
    for (const Partition& nu : partitions(n)) {
      QPoly denom = QPoly::q_pow(n);
      long sq = 0;
      for (int p : nu) {
        sq += static_cast<long>(p) * p;
        QPoly order(1);  // |GL_p|
        for (int i = 0; i < p; ++i) order *= QPoly::q_pow(p) - QPoly::q_pow(i);
        denom *= order;
      }
      CHECK(h.at(nu) == QRat(QPoly::q_pow(sq), denom));
    }
  }
}

TEST_CASE("geometric specialization of complete homogeneous functions") {
  for (int n = 0; n <= 6; ++n) {
    QPoly den(1);
    for (int i = 1; i <= n; ++i) den *= QPoly(1) - QPoly::q_pow(i);
    CHECK(h_pleth_geometric(n) == QRat(QPoly(1), den));
  }
}

TEST_CASE("coproduct of monomial symmetric functions, small cases") {
  auto c2 = coproduct_monomial(2, {2});
  CHECK(c2.size() == 1);
  CHECK(c2.at({{2}, {2}}) == QRat(1));

  auto c11 = coproduct_monomial(2, {1, 1});
  CHECK(c11.at({{2}, {1, 1}}) == QRat(1));
  CHECK(c11.at({{1, 1}, {2}}) == QRat(1));
  CHECK(c11.at({{1, 1}, {1, 1}}) == QRat(2));
  CHECK(c11.count({{2}, {2}}) == 0);

  // total coefficient mass: setting all x_i = y_j = 1 in n variables each
  // turns m_nu(XY) into the number of monomials of m_nu in n^2 variables
  auto c3 = coproduct_monomial(3, {2, 1});
  QRat mass;
  for (const auto& [key, c] : c3) {
    auto count_monomials = [](const Partition& p, int vars) {
      long ways = 1, used = 0;
      int run = 0, prev = -1;
      for (int part : p) {
        run = (part == prev) ? run + 1 : 1;
        ways = ways * (vars - used) / run;
        ++used;
        prev = part;
      }
      return ways;
    };
    mass += c * QRat(QPoly(count_monomials(key.first, 3))) *
            QRat(QPoly(count_monomials(key.second, 3)));
  }
  CHECK(mass == QRat(QPoly(9 * 8)));  // 72 monomials of m_{21} in 9 variables
}

TEST_CASE("generating series for the smallest group") {
  // for n = 1 every coefficient of the series is 1/(q-1)
  BiSeries om = omega_series(1, 3);
  QRat expect(QPoly(1), QPoly::q() - QPoly(1));
  for (int k = 0; k <= 3; ++k) CHECK(om.coeffs.at({{1}, {1}}).coeff(k) == expect);

  auto es = exp_side(1, 3);
  CHECK(es[0].coeffs.at({{}, {}}).coeff(0) == QRat(1));
  for (int k = 1; k <= 3; ++k) CHECK(es[0].coeffs.at({{}, {}}).coeff(k) == QRat());
  for (int k = 0; k <= 3; ++k) CHECK(es[1].coeffs.at({{1}, {1}}).coeff(k) == expect);
}

TEST_CASE("generating series match for rank two") {
  const int tmax = 3;
  BiSeries om = omega_series(2, tmax);
  auto es = exp_side(2, tmax);
  for (const auto& [key, series] : om.coeffs) CHECK(series == es[2].coeffs.at(key));
}
