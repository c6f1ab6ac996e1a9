#include "stein/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace stein {

namespace {

std::size_t weyl_size_cap() {
  if (const char* env = std::getenv("STEINBERG_MAX_WEYL"))
    return static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
  return 1'000'000;
}

}  // namespace

WeylGroup WeylGroup::enumerate(const RootSystem& rs) {
  const std::size_t cap = weyl_size_cap();
  const int nroots = static_cast<int>(rs.size());

  // permutations of the root list induced by the simple reflections
  std::vector<std::vector<std::int32_t>> gens;
  for (int j : rs.simple) {
    std::vector<std::int32_t> g(nroots);
    for (int i = 0; i < nroots; ++i) g[i] = rs.reflect(j, i);
    gens.push_back(std::move(g));
  }

  std::vector<std::int32_t> id(nroots);
  std::iota(id.begin(), id.end(), 0);

  WeylGroup W;
  W.rs_ = &rs;
  std::set<std::vector<std::int32_t>> seen{id};
  std::vector<std::vector<std::int32_t>> frontier{id};
  int depth = 0;
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    for (auto& p : frontier) W.elems_.push_back({p, depth});
    std::vector<std::vector<std::int32_t>> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        std::vector<std::int32_t> pg(nroots);
        for (int i = 0; i < nroots; ++i) pg[i] = p[g[i]];  // p o s_j
        if (seen.insert(pg).second) next.push_back(std::move(pg));
      }
    }
    if (seen.size() > cap) throw std::length_error("Weyl group size cap exceeded");
    frontier = std::move(next);
    ++depth;
  }

  W.inv_.reserve(W.elems_.size());
  for (const auto& e : W.elems_) {
    std::vector<std::int32_t> inv(nroots);
    for (int i = 0; i < nroots; ++i) inv[e.perm[i]] = i;
    W.inv_.push_back(std::move(inv));
  }
  return W;
}

int WeylGroup::simple_root_pos(int ambient_simple) const {
  for (std::size_t k = 0; k < rs_->simple.size(); ++k)
    if (rs_->simple[k] == ambient_simple) return rs_->simple_root_pos[k];
  throw std::invalid_argument("not a simple root of this system");
}

std::vector<std::size_t> WeylGroup::min_coset_reps(SimpleSubset J) const {
  std::vector<int> jpos;
  for (int j : rs_->simple)
    if (J >> j & 1) jpos.push_back(simple_root_pos(j));
  std::vector<std::size_t> reps;
  for (std::size_t w = 0; w < size(); ++w) {
    bool ok = true;
    for (int p : jpos)
      if (!rs_->positive[elems_[w].perm[p]]) {
        ok = false;
        break;
      }
    if (ok) reps.push_back(w);
  }
  return reps;
}

std::vector<std::size_t> WeylGroup::min_double_coset_reps(SimpleSubset J1,
                                                          SimpleSubset J2) const {
  std::vector<int> j1pos, j2pos;
  for (int j : rs_->simple) {
    if (J1 >> j & 1) j1pos.push_back(simple_root_pos(j));
    if (J2 >> j & 1) j2pos.push_back(simple_root_pos(j));
  }
  std::vector<std::size_t> reps;
  for (std::size_t w = 0; w < size(); ++w) {
    bool ok = true;
    for (int p : j2pos)
      if (!rs_->positive[elems_[w].perm[p]]) {
        ok = false;
        break;
      }
    for (int p : j1pos)
      if (ok && !rs_->positive[inv_[w][p]]) ok = false;
    if (ok) reps.push_back(w);
  }
  return reps;
}

SimpleSubset WeylGroup::kilmoyer_intersection(std::size_t w, SimpleSubset J1,
                                              SimpleSubset J2) const {
  SimpleSubset out = 0;
  for (int j : rs_->simple) {
    if (!(J1 >> j & 1)) continue;
    int pre = inv_[w][simple_root_pos(j)];
    int pre_simple = rs_->simple_index_of_root(pre);
    if (pre_simple >= 0 && (J2 >> pre_simple & 1)) {
      out |= SimpleSubset{1} << j;
    } else {
#ifndef NDEBUG
      // for minimal w, w^{-1}(alpha) inside Phi_J2 must be simple
      if (rs_->positive[pre]) {
        const RootCoord& c = rs_->roots[pre];
        bool in_span = true;
        for (std::size_t k = 0; k < c.size(); ++k)
          if (c[k] != 0 && !(J2 >> k & 1)) in_span = false;
        assert(!in_span && "kilmoyer_intersection: non-minimal double coset representative");
      }
#endif
    }
  }
  return out;
}

std::vector<std::vector<SimpleSubset>> WeylGroup::associate_classes() const {
  const SimpleSubset universe = rs_->simple_mask();
  const auto subsets = all_subsets(universe);

  // Phi(J) as a sorted set of root indices, for every J
  std::map<std::vector<int>, SimpleSubset> by_rootset;
  std::vector<std::vector<int>> rootset_of(subsets.size());
  for (std::size_t si = 0; si < subsets.size(); ++si) {
    SimpleSubset J = subsets[si];
    std::vector<int> rset;
    for (std::size_t i = 0; i < rs_->size(); ++i) {
      bool in_span = true;
      const RootCoord& c = rs_->roots[i];
      for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0 && !(J >> k & 1)) in_span = false;
      if (in_span) rset.push_back(static_cast<int>(i));
    }
    by_rootset[rset] = J;
    rootset_of[si] = std::move(rset);
  }

  std::map<SimpleSubset, std::size_t> pos_of;
  for (std::size_t si = 0; si < subsets.size(); ++si) pos_of[subsets[si]] = si;
  std::vector<std::size_t> parent(subsets.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (std::size_t si = 0; si < subsets.size(); ++si) {
    for (std::size_t w = 0; w < size(); ++w) {
      std::vector<int> img;
      img.reserve(rootset_of[si].size());
      for (int i : rootset_of[si]) img.push_back(elems_[w].perm[i]);
      std::sort(img.begin(), img.end());
      auto it = by_rootset.find(img);
      if (it != by_rootset.end()) {
        std::size_t a = find(si), b = find(pos_of[it->second]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }

  std::map<std::size_t, std::vector<SimpleSubset>> classes;
  for (std::size_t si = 0; si < subsets.size(); ++si)
    classes[find(si)].push_back(subsets[si]);
  std::vector<std::vector<SimpleSubset>> out;
  for (auto& [root, members] : classes) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace stein
