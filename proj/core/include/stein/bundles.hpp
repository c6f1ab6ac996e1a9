#ifndef STEIN_BUNDLES_HPP
#define STEIN_BUNDLES_HPP

#include <map>
#include <optional>
#include <vector>

#include "stein/counts.hpp"

namespace stein {

/// Antidominant cocharacter, given through its pairings with the simple
/// roots. For GL_n data the underlying weight vector is kept too.
struct Cocharacter {
  std::vector<int> simple_pairings;           // <alpha_i, mu>, all <= 0
  std::optional<std::vector<int>> gl_weights;  // m_1 <= ... <= m_n

  /// GL_n weights, weakly increasing. Pairings are consecutive differences.
  static Cocharacter from_gl_weights(std::vector<int> weights);
  static Cocharacter from_pairings(std::vector<int> pairings);

  /// Degree of the associated bundle: sum of the GL weights.
  long degree() const;
};

/// Point counts for the triple spaces attached to the G-bundle E_mu on the
/// projective line: nilpotent endomorphism together with compatible
/// parabolic structures at 0 and infinity.
class BundleEngine {
 public:
  BundleEngine(CountEngine& ambient, Cocharacter mu);

  BundleEngine(const BundleEngine&) = delete;
  BundleEngine& operator=(const BundleEngine&) = delete;

  /// Pi_mu: simple roots pairing to zero with mu (the Levi of Aut(E_mu)).
  SimpleSubset levi_subset() const { return pi_mu_; }
  CountEngine& levi_engine() { return levi_; }

  /// dim Aut(E_mu) - dim L_mu = sum over roots with <alpha, mu> > 0 of
  /// (<alpha, mu> + 1).
  long unipotent_dim() const { return unipotent_dim_; }

  /// |Aut(E_mu)(F_q)| = |L_mu| q^{unipotent dim}.
  const QPoly& aut_order();

  /// |Trip_mu(J0, Jinf)| through the Levi Steinberg counts, memoized.
  const QPoly& trip_count(SimpleSubset J0, SimpleSubset Jinf);

  /// Same count through the expanded double-coset sum, as an independent
  /// route for cross-checking.
  QPoly trip_count_expanded(SimpleSubset J0, SimpleSubset Jinf);

 private:
  CountEngine& ambient_;
  Cocharacter mu_;
  SimpleSubset pi_mu_;
  long unipotent_dim_;
  CountEngine levi_;
  std::optional<QPoly> aut_order_;
  std::map<std::pair<SimpleSubset, SimpleSubset>, QPoly> trip_memo_;
};

}  // namespace stein

#endif
