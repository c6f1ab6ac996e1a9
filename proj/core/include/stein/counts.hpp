#ifndef STEIN_COUNTS_HPP
#define STEIN_COUNTS_HPP

#include <map>
#include <optional>

#include "stein/qalg.hpp"
#include "stein/rootsys.hpp"
#include "stein/weyl.hpp"

namespace stein {

/// A function on subsets of the simple roots, values rational in q.
using CountFunction = std::map<SimpleSubset, QRat>;

/// Point counts over F_q attached to one reductive group (or a Levi of one),
/// all returned as exact polynomials (or rationals) in q. Holds the
/// enumerated Weyl group, so construction can be expensive; queries are
/// memoized. Not movable: the Weyl group refers into the stored root system.
class CountEngine {
 public:
  explicit CountEngine(const ReductiveDatum& datum);

  /// Engine for a Levi: the subsystem keeps ambient coordinates, and the
  /// torus rank is inherited from the enclosing group.
  CountEngine(RootSystem rs, int torus_rank);

  CountEngine(const CountEngine&) = delete;
  CountEngine& operator=(const CountEngine&) = delete;

  const RootSystem& root_system() const { return rs_; }
  const WeylGroup& weyl() const { return weyl_; }
  int torus_rank() const { return torus_rank_; }
  SimpleSubset simple_mask() const { return rs_.simple_mask(); }

  /// |H(F_q)| = q^{#positive roots} (q-1)^{torus rank} sum_W q^{l(w)}.
  const QPoly& group_order();

  /// Points of the nilpotent cone of Lie H: q^{dim H - rank}.
  QPoly nilcone_order() const;

  /// |L_K(F_q)| for the standard Levi on the subset K.
  const QPoly& levi_order(SimpleSubset K);

  /// Points of the partial Springer variety attached to J: pairs of a
  /// parabolic of type J and a nilpotent element of its radical. Computed
  /// two independent ways and cross-checked.
  const QPoly& sp_count(SimpleSubset J);

  /// Points of the Steinberg-type variety attached to the pair (J1, J2).
  const QPoly& st_count(SimpleSubset J1, SimpleSubset J2);

  /// (Delta f)(J1, J2) = sum over minimal double coset representatives w of
  /// f(J1 intersect w.J2).
  QRat coproduct_eval(const CountFunction& f, SimpleSubset J1, SimpleSubset J2);

  /// J |-> sp_count(J) over every subset of the simple roots.
  CountFunction sp_function();

 private:
  const QPoly& poincare(SimpleSubset K);  // sum q^{l(w)} over W_K
  void check_subset(SimpleSubset J) const;

  RootSystem rs_;
  int torus_rank_;
  WeylGroup weyl_;
  std::optional<QPoly> group_order_;
  std::map<SimpleSubset, QPoly> poincare_memo_, levi_memo_, sp_memo_;
  std::map<std::pair<SimpleSubset, SimpleSubset>, QPoly> st_memo_;
};

}  // namespace stein

#endif
