#ifndef STEIN_WEYL_HPP
#define STEIN_WEYL_HPP

#include <cstdint>
#include <vector>

#include "stein/rootsys.hpp"

namespace stein {

/// A Weyl group element as a permutation of the root list, with cached length.
struct WeylElement {
  std::vector<std::int32_t> perm;  // roots[i] |-> roots[perm[i]]
  int length = 0;
};

/// Full enumeration of the Weyl group of a (sub)system, ordered by
/// (length, lex of permutation). Downstream queries are read-only.
class WeylGroup {
 public:
  /// BFS from the identity by the system's simple reflections.
  /// Throws std::length_error past the size cap (default 10^6, overridable
  /// via the STEINBERG_MAX_WEYL environment variable).
  static WeylGroup enumerate(const RootSystem& rs);

  const RootSystem& root_system() const { return *rs_; }
  std::size_t size() const { return elems_.size(); }
  const WeylElement& element(std::size_t i) const { return elems_[i]; }
  int length(std::size_t i) const { return elems_[i].length; }

  int apply(std::size_t w, int root_idx) const { return elems_[w].perm[root_idx]; }
  int apply_inv(std::size_t w, int root_idx) const { return inv_[w][root_idx]; }

  /// Position in the root list of the simple root with ambient index j.
  int simple_root_pos(int ambient_simple) const;

  /// {w : w(alpha) positive for all alpha in J}; one per coset of W/W_J.
  std::vector<std::size_t> min_coset_reps(SimpleSubset J) const;

  /// Minimal-length representatives of W_J1 \ W / W_J2.
  std::vector<std::size_t> min_double_coset_reps(SimpleSubset J1, SimpleSubset J2) const;

  /// J1 intersected with w.J2, for w minimal in its double coset.
  SimpleSubset kilmoyer_intersection(std::size_t w, SimpleSubset J1,
                                     SimpleSubset J2) const;

  /// Partition of P(Pi) under Phi(J2) = w.Phi(J1); classes sorted by their
  /// lex-min representative, each class sorted ascending.
  std::vector<std::vector<SimpleSubset>> associate_classes() const;

 private:
  const RootSystem* rs_ = nullptr;
  std::vector<WeylElement> elems_;
  std::vector<std::vector<std::int32_t>> inv_;
};

}  // namespace stein

#endif
