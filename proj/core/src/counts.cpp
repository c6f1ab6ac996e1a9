#include "stein/counts.hpp"

#include <stdexcept>

namespace stein {

CountEngine::CountEngine(const ReductiveDatum& datum)
    : rs_(build_root_system(datum)),
      torus_rank_(datum.torus_rank),
      weyl_(WeylGroup::enumerate(rs_)) {}

CountEngine::CountEngine(RootSystem rs, int torus_rank)
    : rs_(std::move(rs)), torus_rank_(torus_rank), weyl_(WeylGroup::enumerate(rs_)) {
  if (torus_rank_ < rs_.rank())
    throw std::invalid_argument("torus rank below the rank of the root system");
}

void CountEngine::check_subset(SimpleSubset J) const {
  if ((J & ~rs_.simple_mask()) != 0)
    throw std::invalid_argument("subset " + subset_str(J) +
                                " not contained in the simple roots");
}

const QPoly& CountEngine::poincare(SimpleSubset K) {
  check_subset(K);
  auto it = poincare_memo_.find(K);
  if (it != poincare_memo_.end()) return it->second;
  QPoly p;
  if (K == rs_.simple_mask()) {
    for (std::size_t w = 0; w < weyl_.size(); ++w) p += QPoly::q_pow(weyl_.length(w));
  } else {
    RootSystem sub = levi_subsystem(rs_, K);
    WeylGroup wk = WeylGroup::enumerate(sub);
    for (std::size_t w = 0; w < wk.size(); ++w) p += QPoly::q_pow(wk.length(w));
  }
  return poincare_memo_.emplace(K, std::move(p)).first->second;
}

const QPoly& CountEngine::group_order() {
  if (!group_order_) {
    QPoly qm1 = QPoly::q() - QPoly(1);
    group_order_ = QPoly::q_pow(rs_.n_positive) * qm1.pow(torus_rank_) *
                   poincare(rs_.simple_mask());
  }
  return *group_order_;
}

QPoly CountEngine::nilcone_order() const {
  return QPoly::q_pow(static_cast<long>(rs_.size()));
}

const QPoly& CountEngine::levi_order(SimpleSubset K) {
  check_subset(K);
  auto it = levi_memo_.find(K);
  if (it != levi_memo_.end()) return it->second;
  RootSystem sub = levi_subsystem(rs_, K);
  QPoly qm1 = QPoly::q() - QPoly(1);
  QPoly v = QPoly::q_pow(sub.n_positive) * qm1.pow(torus_rank_) * poincare(K);
  return levi_memo_.emplace(K, std::move(v)).first->second;
}

const QPoly& CountEngine::sp_count(SimpleSubset J) {
  check_subset(J);
  auto it = sp_memo_.find(J);
  if (it != sp_memo_.end()) return it->second;

  RootSystem sub = levi_subsystem(rs_, J);

  // direct route: the fibration over the partial flag variety
  QPoly sum;
  for (std::size_t w : weyl_.min_coset_reps(J)) sum += QPoly::q_pow(weyl_.length(w));
  QPoly direct = QPoly::q_pow(sub.n_positive + rs_.n_positive) * sum;

  // quotient route: |H| / |L_J| times the nilpotent cone of the Levi
  QRat quotient = QRat(group_order()) / QRat(levi_order(J));
  quotient *= QRat(QPoly::q_pow(static_cast<long>(sub.size())));
  if (quotient.as_polynomial() != direct)
    throw InternalMismatch("partial Springer count routes disagree at " + subset_str(J));

  return sp_memo_.emplace(J, std::move(direct)).first->second;
}

const QPoly& CountEngine::st_count(SimpleSubset J1, SimpleSubset J2) {
  check_subset(J1);
  check_subset(J2);
  auto key = std::make_pair(J1, J2);
  auto it = st_memo_.find(key);
  if (it != st_memo_.end()) return it->second;

  QRat acc;
  for (std::size_t w : weyl_.min_double_coset_reps(J1, J2)) {
    SimpleSubset K = weyl_.kilmoyer_intersection(w, J1, J2);
    RootSystem sub = levi_subsystem(rs_, K);
    acc += QRat(QPoly::q_pow(static_cast<long>(sub.size()))) / QRat(levi_order(K));
  }
  acc *= QRat(group_order());
  return st_memo_.emplace(key, acc.as_polynomial()).first->second;
}

QRat CountEngine::coproduct_eval(const CountFunction& f, SimpleSubset J1,
                                 SimpleSubset J2) {
  check_subset(J1);
  check_subset(J2);
  QRat acc;
  for (std::size_t w : weyl_.min_double_coset_reps(J1, J2)) {
    SimpleSubset K = weyl_.kilmoyer_intersection(w, J1, J2);
    auto it = f.find(K);
    if (it == f.end())
      throw std::invalid_argument("count function undefined at " + subset_str(K));
    acc += it->second;
  }
  return acc;
}

CountFunction CountEngine::sp_function() {
  CountFunction f;
  for (SimpleSubset J : all_subsets(rs_.simple_mask())) f[J] = QRat(sp_count(J));
  return f;
}

}  // namespace stein
