#include "stein/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stein {

int ReductiveDatum::semisimple_rank() const {
  int r = 0;
  for (const auto& [s, n] : components) r += n;
  return r;
}

namespace {

void check_component(Series s, int rank) {
  auto fail = [&](const std::string& why) {
    std::ostringstream os;
    os << "unsupported component " << static_cast<char>(s) << rank << ": " << why;
    throw std::invalid_argument(os.str());
  };
  switch (s) {
    case Series::A:
      if (rank < 1 || rank > 7) fail("A1..A7 supported");
      break;
    case Series::B:
      if (rank < 2 || rank > 4) fail("B2..B4 supported");
      break;
    case Series::C:
      if (rank < 2 || rank > 4) fail("C2..C4 supported");
      break;
    case Series::D:
      if (rank < 4 || rank > 5) fail("D4..D5 supported");
      break;
    case Series::E:
      if (rank == 7 || rank == 8) fail("Weyl group too large for exhaustive enumeration");
      if (rank != 6) fail("E6 supported");
      break;
    case Series::F:
      if (rank != 4) fail("F4 only");
      break;
    case Series::G:
      if (rank != 2) fail("G2 only");
      break;
  }
}

// cartan[i][j] = <alpha_j, alpha_i^vee>, Bourbaki numbering.
std::vector<std::vector<int>> component_cartan(Series s, int n) {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto chain = [&](int a, int b) { c[a][b] = c[b][a] = -1; };
  switch (s) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      c[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Series::C:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Series::D:
      for (int i = 0; i + 1 < n - 1; ++i) chain(i, i + 1);
      chain(n - 3, n - 1);
      break;
    case Series::E:
      // nodes 1,3,4,5,6 form the chain, node 2 hangs off node 4
      chain(0, 2);
      chain(2, 3);
      chain(3, 4);
      chain(4, 5);
      chain(1, 3);
      break;
    case Series::F:
      chain(0, 1);
      chain(2, 3);
      c[1][2] = -2;
      c[2][1] = -1;
      break;
    case Series::G:
      c[0][1] = -3;
      c[1][0] = -1;
      break;
  }
  return c;
}

int height(const RootCoord& r) { return std::accumulate(r.begin(), r.end(), 0); }

struct RootOrder {
  bool operator()(const RootCoord& a, const RootCoord& b) const {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  }
};

RootCoord reflect_coord(const std::vector<std::vector<int>>& cartan, const RootCoord& r,
                        int i) {
  int pair = 0;
  for (size_t j = 0; j < r.size(); ++j) pair += cartan[i][j] * r[j];
  RootCoord out = r;
  out[i] -= pair;
  return out;
}

}  // namespace

RootSystem finalize_system(std::vector<std::vector<int>> cartan,
                           std::vector<RootCoord> roots, std::vector<int> simple) {
  std::sort(roots.begin(), roots.end(), RootOrder{});
  RootSystem rs;
  rs.cartan = std::move(cartan);
  rs.roots = std::move(roots);
  rs.simple = std::move(simple);
  for (size_t i = 0; i < rs.roots.size(); ++i) rs.index_[rs.roots[i]] = static_cast<int>(i);
  rs.neg_of.resize(rs.roots.size());
  rs.positive.resize(rs.roots.size());
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    RootCoord neg = rs.roots[i];
    bool pos = false;
    for (auto& x : neg) {
      if (x > 0) pos = true;
      x = -x;
    }
    auto it = rs.index_.find(neg);
    if (it == rs.index_.end()) throw std::logic_error("root set not closed under negation");
    rs.neg_of[i] = it->second;
    rs.positive[i] = pos;
    if (pos) ++rs.n_positive;
  }
  for (int s : rs.simple) {
    RootCoord e(rs.cartan.size(), 0);
    e[s] = 1;
    rs.simple_root_pos.push_back(rs.index_of(e));
  }
  return rs;
}

int RootSystem::index_of(const RootCoord& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_simple_root(int root_idx) const {
  return simple_index_of_root(root_idx) >= 0;
}

int RootSystem::simple_index_of_root(int root_idx) const {
  for (size_t k = 0; k < simple.size(); ++k)
    if (simple_root_pos[k] == root_idx) return simple[k];
  return -1;
}

int RootSystem::reflect(int ambient_simple, int root_idx) const {
  RootCoord img = reflect_coord(cartan, roots[root_idx], ambient_simple);
  int idx = index_of(img);
  if (idx < 0) throw std::logic_error("reflection left the root system");
  return idx;
}

SimpleSubset RootSystem::simple_mask() const {
  SimpleSubset m = 0;
  for (int s : simple) m |= SimpleSubset{1} << s;
  return m;
}

SimpleSubset full_subset(int rank) { return (SimpleSubset{1} << rank) - 1; }

RootSystem build_root_system(const ReductiveDatum& datum) {
  for (const auto& [s, n] : datum.components) check_component(s, n);
  int r = datum.semisimple_rank();
  if (datum.torus_rank < r)
    throw std::invalid_argument("torus_rank below semisimple rank");
  if (r > 30) throw std::invalid_argument("semisimple rank too large");

  // block-diagonal Cartan matrix over all components
  std::vector<std::vector<int>> cartan(r, std::vector<int>(r, 0));
  int off = 0;
  for (const auto& [s, n] : datum.components) {
    auto block = component_cartan(s, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cartan[off + i][off + j] = block[i][j];
    off += n;
  }

  std::set<RootCoord> closed;
  std::vector<RootCoord> work;
  for (int i = 0; i < r; ++i) {
    RootCoord e(r, 0);
    e[i] = 1;
    closed.insert(e);
    work.push_back(e);
  }
  while (!work.empty()) {
    RootCoord cur = work.back();
    work.pop_back();
    for (int i = 0; i < r; ++i) {
      RootCoord img = reflect_coord(cartan, cur, i);
      if (closed.insert(img).second) work.push_back(img);
    }
  }

  std::vector<int> simple(r);
  std::iota(simple.begin(), simple.end(), 0);
  return finalize_system(std::move(cartan),
                         std::vector<RootCoord>(closed.begin(), closed.end()),
                         std::move(simple));
}

RootSystem levi_subsystem(const RootSystem& rs, SimpleSubset J) {
  if ((J & ~rs.simple_mask()) != 0)
    throw std::invalid_argument("subset not contained in the system's simple roots");
  std::vector<RootCoord> sub;
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    bool in_span = true;
    for (size_t j = 0; j < rs.roots[i].size(); ++j)
      if (rs.roots[i][j] != 0 && !(J >> j & 1)) in_span = false;
    if (in_span) sub.push_back(rs.roots[i]);
  }
  std::vector<int> simple;
  for (int j = 0; j < rs.ambient_rank(); ++j)
    if (J >> j & 1) simple.push_back(j);
  return finalize_system(rs.cartan, std::move(sub), std::move(simple));
}

std::vector<SimpleSubset> dynkin_components(const RootSystem& rs, SimpleSubset J) {
  std::vector<SimpleSubset> comps;
  SimpleSubset seen = 0;
  for (int j = 0; j < rs.ambient_rank(); ++j) {
    if (!(J >> j & 1) || (seen >> j & 1)) continue;
    SimpleSubset comp = 0;
    std::vector<int> stack{j};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (comp >> v & 1) continue;
      comp |= SimpleSubset{1} << v;
      for (int u = 0; u < rs.ambient_rank(); ++u)
        if ((J >> u & 1) && u != v && rs.cartan[v][u] != 0 && !(comp >> u & 1))
          stack.push_back(u);
    }
    comps.push_back(comp);
    seen |= comp;
  }
  return comps;
}

int pairing(const RootCoord& root, const std::vector<int>& simple_pairings) {
  if (root.size() != simple_pairings.size())
    throw std::invalid_argument("pairing dimension mismatch");
  int acc = 0;
  for (size_t i = 0; i < root.size(); ++i) acc += root[i] * simple_pairings[i];
  return acc;
}

std::vector<SimpleSubset> all_subsets(SimpleSubset universe) {
  std::vector<SimpleSubset> out;
  SimpleSubset sub = 0;
  while (true) {
    out.push_back(sub);
    if (sub == universe) break;
    sub = (sub - universe) & universe;  // next subset of universe
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string subset_str(SimpleSubset J) {
  std::string s;
  for (int i = 0; i < 32; ++i)
    if (J >> i & 1) {
      if (!s.empty()) s += ",";
      s += std::to_string(i + 1);
    }
  return s.empty() ? std::string("{}") : "{" + s + "}";
}

ReductiveDatum ReductiveDatum::parse(const std::string& text) {
  ReductiveDatum d;
  std::string body = text;
  bool explicit_torus = false;
  int extra_torus = 0;
  if (auto pos = body.find("+t"); pos != std::string::npos) {
    explicit_torus = true;
    extra_torus = std::stoi(body.substr(pos + 2));
    body = body.substr(0, pos);
  }
  size_t i = 0;
  bool gl = false, sl = false;
  auto read_int = [&]() {
    size_t start = i;
    while (i < body.size() && isdigit(body[i])) ++i;
    if (start == i) throw std::invalid_argument("cannot parse datum: " + text);
    return std::stoi(body.substr(start, i - start));
  };
  while (i < body.size()) {
    if (body[i] == 'x') {
      ++i;
      continue;
    }
    if (body.compare(i, 2, "GL") == 0 || body.compare(i, 2, "SL") == 0) {
      bool is_gl = body[i] == 'G';
      i += 2;
      int n = read_int();
      if (n < 1 || (!is_gl && n < 2))
        throw std::invalid_argument("cannot parse datum: " + text);
      if (n > 1) d.components.emplace_back(Series::A, n - 1);
      (is_gl ? gl : sl) = true;
      d.torus_rank += is_gl ? n : n - 1;
      continue;
    }
    if (body[i] == 't') {
      ++i;
      int n = read_int();
      d.torus_rank += n;
      explicit_torus = true;
      continue;
    }
    char c = body[i];
    if (c < 'A' || c > 'G') throw std::invalid_argument("cannot parse datum: " + text);
    ++i;
    int n = read_int();
    d.components.emplace_back(static_cast<Series>(c), n);
    d.torus_rank += n;
  }
  (void)gl;
  (void)sl;
  if (explicit_torus && extra_torus > 0) d.torus_rank = extra_torus;  // "+tN" = total rank
  if (d.components.empty() && d.torus_rank == 0)
    throw std::invalid_argument("cannot parse datum: " + text);
  if (d.torus_rank < d.semisimple_rank())
    throw std::invalid_argument("torus rank below semisimple rank in: " + text);
  for (const auto& [s, n] : d.components) check_component(s, n);
  return d;
}

std::string ReductiveDatum::str() const {
  std::ostringstream os;
  for (size_t k = 0; k < components.size(); ++k) {
    if (k) os << "x";
    os << static_cast<char>(components[k].first) << components[k].second;
  }
  if (components.empty() || torus_rank != semisimple_rank()) {
    if (!components.empty()) os << "+";
    os << "t" << torus_rank;
  }
  return os.str();
}

}  // namespace stein
