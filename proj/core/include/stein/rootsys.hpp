#ifndef STEIN_ROOTSYS_HPP
#define STEIN_ROOTSYS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace stein {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Split reductive group given combinatorially: simple components plus torus rank.
struct ReductiveDatum {
  std::vector<std::pair<Series, int>> components;
  int torus_rank = 0;

  int semisimple_rank() const;

  /// CLI syntax: "A2", "B3", "GL3", "SL3", "A1xA1+t2", "t2".
  static ReductiveDatum parse(const std::string& text);
  std::string str() const;
};

/// Bitmask over ambient simple-root indices.
using SimpleSubset = std::uint32_t;

SimpleSubset full_subset(int rank);

/// Root coordinates in the ambient simple-root basis.
using RootCoord = std::vector<int>;

/// A root system, or a Levi subsystem of one. Roots are kept in ambient
/// simple-root coordinates; `simple` lists the ambient indices of this
/// system's own simple roots, so subsets of simple roots never need
/// re-indexing between a group and its Levis.
struct RootSystem {
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<RootCoord> roots;          // sorted by (height, lex), deterministic
  std::vector<int> neg_of;               // index of -root
  std::vector<bool> positive;
  std::vector<int> simple;               // ambient indices, ascending
  std::vector<int> simple_root_pos;      // position in `roots` of each entry of `simple`
  int n_positive = 0;

  int ambient_rank() const { return static_cast<int>(cartan.size()); }
  int rank() const { return static_cast<int>(simple.size()); }
  std::size_t size() const { return roots.size(); }

  int index_of(const RootCoord& r) const;  // -1 if absent
  bool is_simple_root(int root_idx) const;
  /// Ambient simple index of a root that is simple in this system, else -1.
  int simple_index_of_root(int root_idx) const;

  /// Image index of roots[root_idx] under the simple reflection s_j
  /// (j = ambient simple index, must belong to `simple`).
  int reflect(int ambient_simple, int root_idx) const;

  SimpleSubset simple_mask() const;

 private:
  std::map<RootCoord, int> index_;
  friend RootSystem finalize_system(std::vector<std::vector<int>> cartan,
                                    std::vector<RootCoord> roots,
                                    std::vector<int> simple);
};

/// Full root system of a datum: closure of the simple roots under simple
/// reflections. Rejects unsupported series/rank combinations.
RootSystem build_root_system(const ReductiveDatum& datum);

/// Phi_J: roots lying in the integer span of J, with J as simple roots.
RootSystem levi_subsystem(const RootSystem& rs, SimpleSubset J);

/// Connected components of the Dynkin subdiagram on J.
std::vector<SimpleSubset> dynkin_components(const RootSystem& rs, SimpleSubset J);

/// <alpha, mu> extended linearly from the simple pairings a_i = <alpha_i, mu>.
int pairing(const RootCoord& root, const std::vector<int>& simple_pairings);

/// Subsets of `universe` bits, lex order by bitmask value.
std::vector<SimpleSubset> all_subsets(SimpleSubset universe);

std::string subset_str(SimpleSubset J);

}  // namespace stein

#endif
