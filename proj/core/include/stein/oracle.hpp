#ifndef STEIN_ORACLE_HPP
#define STEIN_ORACLE_HPP

#include <vector>

#include "stein/qalg.hpp"
#include "stein/rootsys.hpp"

namespace stein::oracle {

/// Brute-force point counts for GL_n over a small prime field, by direct
/// enumeration of matrices and flags. Completely independent of the
/// Weyl-group formulas, so the two can cross-check each other.
/// Supported range: n <= 3, q in {2, 3}.

/// Dimensions of the proper flag steps stabilized by a parabolic of type J:
/// {j in 1..n-1 : alpha_j not in J}, ascending.
std::vector<int> flag_dims_of_subset(int n, SimpleSubset J);

/// |GL_n(F_q)| by enumerating invertible matrices.
Int group_order(int n, int q);

/// Pairs (flag of type J, nilpotent matrix preserving it).
Int sp_count(int n, int q, SimpleSubset J);

/// Triples (nilpotent matrix, preserved flag of type J1, preserved flag of
/// type J2).
Int st_count(int n, int q, SimpleSubset J1, SimpleSubset J2);

/// Triples (nilpotent endomorphism x of the bundle O(m_1) + ... + O(m_n)
/// on the projective line, flag of type J0 at the fiber over 0 preserved by
/// x(0), flag of type Jinf at the fiber over infinity preserved by
/// x(infinity)). Weights must be weakly increasing and nonpositive.
Int trip_count(int n, int q, const std::vector<int>& weights, SimpleSubset J0,
               SimpleSubset Jinf);

}  // namespace stein::oracle

#endif
