#include "stein/bundles.hpp"

#include <numeric>
#include <stdexcept>

namespace stein {

Cocharacter Cocharacter::from_gl_weights(std::vector<int> weights) {
  Cocharacter mu;
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
    if (weights[i] > weights[i + 1])
      throw std::invalid_argument("GL weights must be weakly increasing");
    mu.simple_pairings.push_back(weights[i] - weights[i + 1]);
  }
  mu.gl_weights = std::move(weights);
  return mu;
}

Cocharacter Cocharacter::from_pairings(std::vector<int> pairings) {
  Cocharacter mu;
  for (int a : pairings)
    if (a > 0) throw std::invalid_argument("cocharacter must be antidominant");
  mu.simple_pairings = std::move(pairings);
  return mu;
}

long Cocharacter::degree() const {
  if (!gl_weights) throw std::logic_error("degree needs GL weights");
  return std::accumulate(gl_weights->begin(), gl_weights->end(), 0L);
}

namespace {

SimpleSubset levi_of(const RootSystem& rs, const Cocharacter& mu) {
  if (static_cast<int>(mu.simple_pairings.size()) != rs.ambient_rank())
    throw std::invalid_argument("cocharacter rank mismatch");
  SimpleSubset J = 0;
  for (int i : rs.simple) {
    if (mu.simple_pairings[i] > 0)
      throw std::invalid_argument("cocharacter must be antidominant");
    if (mu.simple_pairings[i] == 0) J |= SimpleSubset{1} << i;
  }
  return J;
}

long unipotent_dim_of(const RootSystem& rs, const Cocharacter& mu) {
  long d = 0;
  for (const RootCoord& r : rs.roots) {
    int p = pairing(r, mu.simple_pairings);
    if (p > 0) d += p + 1;
  }
  return d;
}

}  // namespace

BundleEngine::BundleEngine(CountEngine& ambient, Cocharacter mu)
    : ambient_(ambient),
      mu_(std::move(mu)),
      pi_mu_(levi_of(ambient.root_system(), mu_)),
      unipotent_dim_(unipotent_dim_of(ambient.root_system(), mu_)),
      levi_(levi_subsystem(ambient.root_system(), pi_mu_), ambient.torus_rank()) {}

const QPoly& BundleEngine::aut_order() {
  if (!aut_order_)
    aut_order_ = levi_.group_order() * QPoly::q_pow(unipotent_dim_);
  return *aut_order_;
}

const QPoly& BundleEngine::trip_count(SimpleSubset J0, SimpleSubset Jinf) {
  auto key = std::make_pair(J0, Jinf);
  auto it = trip_memo_.find(key);
  if (it != trip_memo_.end()) return it->second;

  const WeylGroup& W = ambient_.weyl();
  QPoly acc;
  for (std::size_t w : W.min_double_coset_reps(pi_mu_, J0)) {
    SimpleSubset K0 = W.kilmoyer_intersection(w, pi_mu_, J0);
    for (std::size_t w2 : W.min_double_coset_reps(pi_mu_, Jinf)) {
      SimpleSubset Kinf = W.kilmoyer_intersection(w2, pi_mu_, Jinf);
      acc += levi_.st_count(K0, Kinf);
    }
  }
  acc *= QPoly::q_pow(unipotent_dim_);
  return trip_memo_.emplace(key, std::move(acc)).first->second;
}

QPoly BundleEngine::trip_count_expanded(SimpleSubset J0, SimpleSubset Jinf) {
  const WeylGroup& W = ambient_.weyl();
  const WeylGroup& WL = levi_.weyl();
  QRat acc;
  for (std::size_t w : W.min_double_coset_reps(pi_mu_, J0)) {
    SimpleSubset K0 = W.kilmoyer_intersection(w, pi_mu_, J0);
    for (std::size_t w2 : W.min_double_coset_reps(pi_mu_, Jinf)) {
      SimpleSubset Kinf = W.kilmoyer_intersection(w2, pi_mu_, Jinf);
      for (std::size_t w3 : WL.min_double_coset_reps(K0, Kinf)) {
        SimpleSubset K = WL.kilmoyer_intersection(w3, K0, Kinf);
        RootSystem sub = levi_subsystem(levi_.root_system(), K);
        acc += QRat(QPoly::q_pow(static_cast<long>(sub.size()))) /
               QRat(levi_.levi_order(K));
      }
    }
  }
  acc *= QRat(levi_.group_order() * QPoly::q_pow(unipotent_dim_));
  return acc.as_polynomial();
}

}  // namespace stein
