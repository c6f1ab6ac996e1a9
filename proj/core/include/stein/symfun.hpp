#ifndef STEIN_SYMFUN_HPP
#define STEIN_SYMFUN_HPP

#include <map>
#include <utility>
#include <vector>

#include "stein/qalg.hpp"
#include "stein/rootsys.hpp"

namespace stein {

/// Weakly decreasing positive parts; the empty partition is allowed.
using Partition = std::vector<int>;

std::vector<Partition> partitions(int n);
long z_factor(const Partition& lambda);  // prod r^{m_r} m_r!

/// J(nu) for GL_n: the simple roots alpha_i with i not a partial sum of nu.
SimpleSubset subset_of_partition(int n, const Partition& nu);
Partition partition_of_subset(int n, SimpleSubset J);

/// Multivariate polynomial over Q(q), dense in neither sense: a term map
/// keyed by exponent vectors. Workhorse behind the symmetric-function and
/// plethysm computations.
class MPoly {
 public:
  explicit MPoly(int nvars) : nvars_(nvars) {}
  static MPoly constant(int nvars, QRat c);

  int nvars() const { return nvars_; }
  const std::map<std::vector<int>, QRat>& terms() const { return terms_; }
  void add_term(std::vector<int> exps, QRat c);
  QRat coeff(const std::vector<int>& exps) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator*=(const QRat& c);
  friend MPoly operator*(const MPoly& a, const MPoly& b);

  /// Drop terms whose total degree in the first `half` variables exceeds
  /// `maxdeg` (used to truncate symmetric-function degree).
  MPoly truncate_first(int half, int maxdeg) const;

 private:
  int nvars_;
  std::map<std::vector<int>, QRat> terms_;
};

/// p_r(x_begin, ..., x_{end-1}) inside an nvars-variable ring.
MPoly power_sum(int nvars, int begin, int end, int r);

/// h_k[X/(q-1)] in the monomial basis, computed through power sums:
/// p_r[X/(q-1)] = p_r(X)/(q^r - 1).
std::map<Partition, QRat> h_pleth_X(int k);

/// h_k[XY/(q-1)] as a polynomial in x_0..x_{nvars-1}, y_0..y_{nvars-1}.
MPoly h_pleth_XY(int k, int nvars);

/// h_k[1/(1-q)] through power sums: p_r[1/(1-q)] = 1/(1-q^r).
QRat h_pleth_geometric(int k);

/// Coefficient of m_lambda(X) m_mu(Y) in m_nu(XY), XY = {x_i y_j}: the
/// standard coproduct of symmetric functions on the monomial basis.
std::map<std::pair<Partition, Partition>, QRat> coproduct_monomial(int n,
                                                                   const Partition& nu);

/// Bi-graded piece of a series in t: coefficients indexed by a pair of
/// partitions of n, each a truncated series in t.
struct BiSeries {
  int n = 0;
  int tmax = 0;
  std::map<std::pair<Partition, Partition>, TSeries> coeffs;
};

/// Omega_n: sum over antidominant GL_n weight vectors mu with nonpositive
/// entries of t^{-deg} [Trip_mu]/|Aut(E_mu)|, truncated at t^tmax.
BiSeries omega_series(int n, int tmax);

/// Degree components 0..nmax of Exp[XY/((q-1)(1-t))]
///   = prod_{d>=0} sum_k t^{dk} h_k[XY/(q-1)],
/// truncated at t^tmax. Entry n of the result is the bidegree (n, n) part.
std::vector<BiSeries> exp_side(int nmax, int tmax);

}  // namespace stein

#endif
