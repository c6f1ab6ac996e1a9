#include "stein/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace stein::oracle {

namespace {

void check_range(int n, int q) {
  if (n < 1 || n > 3) throw std::invalid_argument("oracle supports n <= 3 only");
  if (q != 2 && q != 3) throw std::invalid_argument("oracle supports q in {2, 3} only");
}

// Vectors in F_q^n are coded as base-q integers, matrices are row-major.
using Mat = std::vector<int>;

int add_codes(int a, int b, int n, int q) {
  int out = 0, mult = 1;
  for (int i = 0; i < n; ++i) {
    out += (a % q + b % q) % q * mult;
    a /= q;
    b /= q;
    mult *= q;
  }
  return out;
}

int apply(const Mat& m, int n, int q, int vcode) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) {
    v[i] = vcode % q;
    vcode /= q;
  }
  int out = 0, mult = 1;
  for (int i = 0; i < n; ++i) {
    int acc = 0;
    for (int j = 0; j < n; ++j) acc += m[i * n + j] * v[j];
    out += acc % q * mult;
    mult *= q;
  }
  return out;
}

Mat multiply(const Mat& a, const Mat& b, int n, int q) {
  Mat c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        c[i * n + j] = (c[i * n + j] + a[i * n + k] * b[k * n + j]) % q;
  return c;
}

bool is_zero_mat(const Mat& m) {
  return std::all_of(m.begin(), m.end(), [](int x) { return x == 0; });
}

bool is_nilpotent(const Mat& m, int n, int q) {
  Mat p = m;
  for (int e = 1; e < n; ++e) p = multiply(p, m, n, q);
  return is_zero_mat(p);
}

struct Subspace {
  std::uint32_t members;  // bit v set iff vector code v lies in the subspace
  int dim;
  std::vector<int> basis;
};

struct Space {
  int n, q, npts;
  std::vector<Subspace> subs;
  std::vector<std::vector<int>> by_dim;  // indices into subs, per dimension
};

Space build_space(int n, int q) {
  Space sp;
  sp.n = n;
  sp.q = q;
  sp.npts = 1;
  for (int i = 0; i < n; ++i) sp.npts *= q;

  std::map<std::uint32_t, Subspace> seen;
  Subspace zero{1u, 0, {}};
  seen[zero.members] = zero;
  std::vector<Subspace> frontier{zero};
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const auto& s : frontier) {
      for (int v = 1; v < sp.npts; ++v) {
        if (s.members >> v & 1) continue;
        // span of s and v is the union of the translates a*v + s
        std::uint32_t mem = 0;
        for (int a = 0, av = 0; a < q; ++a, av = add_codes(av, v, n, q))
          for (int w = 0; w < sp.npts; ++w)
            if (s.members >> w & 1) mem |= 1u << add_codes(av, w, n, q);
        if (seen.count(mem)) continue;
        Subspace bigger{mem, s.dim + 1, s.basis};
        bigger.basis.push_back(v);
        seen[mem] = bigger;
        next.push_back(bigger);
      }
    }
    frontier = std::move(next);
  }

  sp.by_dim.resize(n + 1);
  for (auto& [mem, s] : seen) {
    sp.by_dim[s.dim].push_back(static_cast<int>(sp.subs.size()));
    sp.subs.push_back(s);
  }
  return sp;
}

bool preserves(const Mat& m, const Space& sp, const Subspace& s) {
  for (int b : s.basis)
    if (!(s.members >> apply(m, sp.n, sp.q, b) & 1)) return false;
  return true;
}

// Flags of the given step dimensions with every step m-invariant.
long count_invariant_flags(const Mat& m, const Space& sp, const std::vector<int>& dims) {
  std::vector<char> inv(sp.subs.size());
  for (std::size_t i = 0; i < sp.subs.size(); ++i) inv[i] = preserves(m, sp, sp.subs[i]);

  long total = 0;
  auto rec = [&](auto&& self, std::size_t level, std::uint32_t prev_members) -> void {
    if (level == dims.size()) {
      ++total;
      return;
    }
    for (int idx : sp.by_dim[dims[level]]) {
      const Subspace& s = sp.subs[idx];
      if (!inv[idx]) continue;
      if ((prev_members & s.members) != prev_members) continue;  // not a chain
      self(self, level + 1, s.members);
    }
  };
  rec(rec, 0, 1u);
  return total;
}

std::vector<Mat> nilpotent_matrices(int n, int q) {
  long total = 1;
  for (int i = 0; i < n * n; ++i) total *= q;
  std::vector<Mat> out;
  Mat m(n * n, 0);
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < n * n; ++i) {
      m[i] = static_cast<int>(c % q);
      c /= q;
    }
    if (is_nilpotent(m, n, q)) out.push_back(m);
  }
  return out;
}

void check_subset(int n, SimpleSubset J) {
  if ((J & ~full_subset(n - 1)) != 0)
    throw std::invalid_argument("subset out of range for GL_" + std::to_string(n));
}

}  // namespace

std::vector<int> flag_dims_of_subset(int n, SimpleSubset J) {
  check_subset(n, J);
  std::vector<int> dims;
  for (int j = 1; j < n; ++j)
    if (!(J >> (j - 1) & 1)) dims.push_back(j);
  return dims;
}

Int group_order(int n, int q) {
  check_range(n, q);
  long total = 1;
  for (int i = 0; i < n * n; ++i) total *= q;
  long count = 0;
  Mat m(n * n, 0);
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < n * n; ++i) {
      m[i] = static_cast<int>(c % q);
      c /= q;
    }
    // invertible iff m^k hits the identity ... cheaper: rank via image size
    std::uint32_t image = 0;
    int npts = 1;
    for (int i = 0; i < n; ++i) npts *= q;
    for (int v = 0; v < npts; ++v) image |= 1u << apply(m, n, q, v);
    int sz = 0;
    for (int v = 0; v < npts; ++v) sz += image >> v & 1;
    if (sz == npts) ++count;
  }
  return Int(count);
}

Int sp_count(int n, int q, SimpleSubset J) {
  check_range(n, q);
  Space sp = build_space(n, q);
  auto dims = flag_dims_of_subset(n, J);
  long total = 0;
  for (const Mat& m : nilpotent_matrices(n, q)) total += count_invariant_flags(m, sp, dims);
  return Int(total);
}

Int st_count(int n, int q, SimpleSubset J1, SimpleSubset J2) {
  check_range(n, q);
  Space sp = build_space(n, q);
  auto d1 = flag_dims_of_subset(n, J1);
  auto d2 = flag_dims_of_subset(n, J2);
  long total = 0;
  for (const Mat& m : nilpotent_matrices(n, q))
    total += count_invariant_flags(m, sp, d1) * count_invariant_flags(m, sp, d2);
  return Int(total);
}

namespace {

// Endomorphism of O(m_1) + ... + O(m_n): entry (i, j) is a polynomial in the
// affine coordinate of degree at most m_i - m_j, absent when that is negative.
struct PolyMat {
  int n = 0;
  std::vector<std::vector<int>> entry;  // coefficients, ascending; empty = 0

  static PolyMat zeros(int n, const std::vector<int>& w) {
    PolyMat pm;
    pm.n = n;
    pm.entry.resize(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int d = w[i] - w[j];
        if (d >= 0) pm.entry[i * n + j].assign(d + 1, 0);
      }
    return pm;
  }
};

PolyMat pm_multiply(const PolyMat& a, const PolyMat& b, const std::vector<int>& w, int q) {
  PolyMat c = PolyMat::zeros(a.n, w);
  int n = a.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto& out = c.entry[i * n + j];
      if (out.empty()) continue;
      for (int k = 0; k < n; ++k) {
        const auto& p = a.entry[i * n + k];
        const auto& r = b.entry[k * n + j];
        for (std::size_t u = 0; u < p.size(); ++u)
          for (std::size_t v = 0; v < r.size(); ++v)
            out[u + v] = (out[u + v] + p[u] * r[v]) % q;
      }
    }
  return c;
}

bool pm_is_zero(const PolyMat& m) {
  for (const auto& e : m.entry)
    for (int c : e)
      if (c != 0) return false;
  return true;
}

}  // namespace

Int trip_count(int n, int q, const std::vector<int>& weights, SimpleSubset J0,
               SimpleSubset Jinf) {
  check_range(n, q);
  if (static_cast<int>(weights.size()) != n)
    throw std::invalid_argument("weight vector length must equal n");
  for (int i = 0; i + 1 < n; ++i)
    if (weights[i] > weights[i + 1])
      throw std::invalid_argument("weights must be weakly increasing");
  if (!weights.empty() && weights.back() > 0)
    throw std::invalid_argument("weights must be nonpositive");

  // positions of the free coefficients
  std::vector<std::pair<int, int>> slots;  // (entry index, coefficient index)
  PolyMat base = PolyMat::zeros(n, weights);
  for (int e = 0; e < n * n; ++e)
    for (std::size_t c = 0; c < base.entry[e].size(); ++c)
      slots.emplace_back(e, static_cast<int>(c));

  long assignments = 1;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    assignments *= q;
    if (assignments > 5'000'000)
      throw std::invalid_argument("weights out of brute-force range");
  }

  Space sp = build_space(n, q);
  auto d0 = flag_dims_of_subset(n, J0);
  auto dinf = flag_dims_of_subset(n, Jinf);

  long total = 0;
  for (long code = 0; code < assignments; ++code) {
    PolyMat pm = base;
    long c = code;
    for (const auto& [e, ci] : slots) {
      pm.entry[e][ci] = static_cast<int>(c % q);
      c /= q;
    }
    PolyMat pw = pm;
    for (int e = 1; e < n; ++e) pw = pm_multiply(pw, pm, weights, q);
    if (!pm_is_zero(pw)) continue;

    Mat at0(n * n, 0), atinf(n * n, 0);
    for (int e = 0; e < n * n; ++e)
      if (!pm.entry[e].empty()) {
        at0[e] = pm.entry[e].front();  // value in the chart at 0
        atinf[e] = pm.entry[e].back();  // top coefficient: value in the chart at infinity
      }
    total += count_invariant_flags(at0, sp, d0) * count_invariant_flags(atinf, sp, dinf);
  }
  return Int(total);
}

}  // namespace stein::oracle
