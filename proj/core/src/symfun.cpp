#include "stein/symfun.hpp"

#include <algorithm>
#include <stdexcept>

#include "stein/bundles.hpp"
#include "stein/counts.hpp"

namespace stein {

namespace {

void partitions_rec(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions of a negative integer");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

long z_factor(const Partition& lambda) {
  long z = 1;
  int run = 0, prev = 0;
  for (int p : lambda) {
    z *= p;
    run = (p == prev) ? run + 1 : 1;
    z *= run;
    prev = p;
  }
  return z;
}

SimpleSubset subset_of_partition(int n, const Partition& nu) {
  int total = 0;
  for (int p : nu) total += p;
  if (total != n) throw std::invalid_argument("partition size mismatch");
  SimpleSubset J = full_subset(n - 1);
  int s = 0;
  for (int p : nu) {
    s += p;
    if (s < n) J &= ~(SimpleSubset{1} << (s - 1));
  }
  return J;
}

Partition partition_of_subset(int n, SimpleSubset J) {
  if ((J & ~full_subset(n - 1)) != 0)
    throw std::invalid_argument("subset out of range for GL_" + std::to_string(n));
  Partition blocks;
  int run = 1;
  for (int i = 1; i < n; ++i) {
    if (J >> (i - 1) & 1) {
      ++run;
    } else {
      blocks.push_back(run);
      run = 1;
    }
  }
  if (n > 0) blocks.push_back(run);
  std::sort(blocks.rbegin(), blocks.rend());
  return blocks;
}

MPoly MPoly::constant(int nvars, QRat c) {
  MPoly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), std::move(c));
  return p;
}

void MPoly::add_term(std::vector<int> exps, QRat c) {
  if (static_cast<int>(exps.size()) != nvars_)
    throw std::invalid_argument("exponent vector length mismatch");
  auto [it, fresh] = terms_.try_emplace(std::move(exps), std::move(c));
  if (!fresh) it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

QRat MPoly::coeff(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? QRat() : it->second;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator*=(const QRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  MPoly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e = ea;
      for (int i = 0; i < a.nvars_; ++i) e[i] += eb[i];
      out.add_term(std::move(e), ca * cb);
    }
  return out;
}

MPoly MPoly::truncate_first(int half, int maxdeg) const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int i = 0; i < half; ++i) d += e[i];
    if (d <= maxdeg) out.add_term(e, c);
  }
  return out;
}

MPoly power_sum(int nvars, int begin, int end, int r) {
  MPoly p(nvars);
  for (int i = begin; i < end; ++i) {
    std::vector<int> e(nvars, 0);
    e[i] = r;
    p.add_term(std::move(e), QRat(1));
  }
  return p;
}

namespace {

QRat inv_q_pow_minus_one(int r) {
  return QRat(QPoly(1), QPoly::q_pow(r) - QPoly(1));
}

std::vector<int> padded(const Partition& nu, int len) {
  std::vector<int> e(nu.begin(), nu.end());
  e.resize(len, 0);
  return e;
}

}  // namespace

std::map<Partition, QRat> h_pleth_X(int k) {
  std::map<Partition, QRat> out;
  if (k == 0) {
    out[{}] = QRat(1);
    return out;
  }
  MPoly acc(k);
  for (const Partition& lam : partitions(k)) {
    MPoly term = MPoly::constant(k, QRat(1));
    QRat scalar(QRat(1) / QRat(QPoly(z_factor(lam))));
    for (int r : lam) {
      term = term * power_sum(k, 0, k, r);
      scalar *= inv_q_pow_minus_one(r);
    }
    term *= scalar;
    acc += term;
  }
  for (const Partition& nu : partitions(k)) {
    QRat c = acc.coeff(padded(nu, k));
    if (!c.is_zero()) out[nu] = c;
  }
  return out;
}

MPoly h_pleth_XY(int k, int nvars) {
  if (nvars < k) throw std::invalid_argument("need at least k variables per alphabet");
  MPoly acc(2 * nvars);
  if (k == 0) return MPoly::constant(2 * nvars, QRat(1));
  for (const Partition& lam : partitions(k)) {
    MPoly term = MPoly::constant(2 * nvars, QRat(1));
    QRat scalar(QRat(1) / QRat(QPoly(z_factor(lam))));
    for (int r : lam) {
      term = term * power_sum(2 * nvars, 0, nvars, r);
      term = term * power_sum(2 * nvars, nvars, 2 * nvars, r);
      scalar *= inv_q_pow_minus_one(r);
    }
    term *= scalar;
    acc += term;
  }
  return acc;
}

QRat h_pleth_geometric(int k) {
  QRat acc;
  for (const Partition& lam : partitions(k)) {
    QRat term(QRat(1) / QRat(QPoly(z_factor(lam))));
    for (int r : lam) term *= QRat(QPoly(1), QPoly(1) - QPoly::q_pow(r));
    acc += term;
  }
  if (k == 0) acc = QRat(1);
  return acc;
}

std::map<std::pair<Partition, Partition>, QRat> coproduct_monomial(int n,
                                                                   const Partition& nu) {
  // expand m_nu in the n^2 product variables x_i y_j, then read off the
  // coefficients of the dominant monomials x^lambda y^mu
  std::vector<int> pattern = padded(nu, n * n);
  std::sort(pattern.begin(), pattern.end());
  MPoly expanded(2 * n);
  do {
    std::vector<int> e(2 * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int v = pattern[i * n + j];
        e[i] += v;
        e[n + j] += v;
      }
    expanded.add_term(std::move(e), QRat(1));
  } while (std::next_permutation(pattern.begin(), pattern.end()));

  std::map<std::pair<Partition, Partition>, QRat> out;
  for (const Partition& lam : partitions(n))
    for (const Partition& mu : partitions(n)) {
      std::vector<int> key = padded(lam, n);
      std::vector<int> tail = padded(mu, n);
      key.insert(key.end(), tail.begin(), tail.end());
      QRat c = expanded.coeff(key);
      if (!c.is_zero()) out[{lam, mu}] = c;
    }
  return out;
}

namespace {

void weights_rec(int n, int tleft, int maxval, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  // entries are built from the right: weakly increasing, nonpositive
  for (int m = maxval; -m <= tleft; --m) {
    cur.push_back(m);
    weights_rec(n, tleft + m, m, cur, out);
    cur.pop_back();
  }
}

}  // namespace

BiSeries omega_series(int n, int tmax) {
  BiSeries out;
  out.n = n;
  out.tmax = tmax;
  auto parts = partitions(n);
  for (const Partition& a : parts)
    for (const Partition& b : parts) out.coeffs.emplace(std::make_pair(a, b), TSeries(tmax));
  if (n == 0) {
    out.coeffs.at({{}, {}}).set_coeff(0, QRat(1));
    return out;
  }

  CountEngine engine(ReductiveDatum::parse("GL" + std::to_string(n)));

  // weight vectors listed from the largest entry downward, then reversed
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  weights_rec(n, tmax, 0, cur, all);

  for (auto w : all) {
    std::reverse(w.begin(), w.end());
    int twt = 0;
    for (int m : w) twt -= m;
    BundleEngine be(engine, Cocharacter::from_gl_weights(w));
    QRat inv_aut = QRat(1) / QRat(be.aut_order());
    for (const Partition& a : parts)
      for (const Partition& b : parts) {
        const QPoly& trip =
            be.trip_count(subset_of_partition(n, a), subset_of_partition(n, b));
        if (!trip.is_zero())
          out.coeffs.at({a, b}).add_to_coeff(twt, QRat(trip) * inv_aut);
      }
  }
  return out;
}

std::vector<BiSeries> exp_side(int nmax, int tmax) {
  const int nv = 2 * nmax;
  std::vector<MPoly> acc(tmax + 1, MPoly(nv));
  acc[0] = MPoly::constant(nv, QRat(1));

  std::vector<MPoly> hk;
  for (int k = 0; k <= nmax; ++k) hk.push_back(h_pleth_XY(k, nmax));

  for (int d = 0; d <= tmax; ++d) {
    std::vector<MPoly> factor(tmax + 1, MPoly(nv));
    for (int k = 0; k <= nmax; ++k) {
      long tdeg = static_cast<long>(d) * k;  // d = 0 stacks every k at t^0
      if (tdeg > tmax) break;
      factor[tdeg] += hk[k];
    }
    std::vector<MPoly> next(tmax + 1, MPoly(nv));
    for (int i = 0; i <= tmax; ++i)
      for (int j = 0; i + j <= tmax; ++j)
        next[i + j] += (acc[i] * factor[j]).truncate_first(nmax, nmax);
    acc = std::move(next);
  }

  std::vector<BiSeries> out;
  for (int n = 0; n <= nmax; ++n) {
    BiSeries bs;
    bs.n = n;
    bs.tmax = tmax;
    for (const Partition& a : partitions(n))
      for (const Partition& b : partitions(n)) {
        std::vector<int> key = padded(a, nmax);
        std::vector<int> tail = padded(b, nmax);
        key.insert(key.end(), tail.begin(), tail.end());
        TSeries s(tmax);
        for (int j = 0; j <= tmax; ++j) s.set_coeff(j, acc[j].coeff(key));
        bs.coeffs.emplace(std::make_pair(a, b), std::move(s));
      }
    out.push_back(std::move(bs));
  }
  return out;
}

}  // namespace stein
