#include "chamberworks/root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace chamberworks {

namespace {

Vec half_vector(int dim, std::initializer_list<int> signs) {
  Vec v(dim);
  int i = 0;
  for (int s : signs) v[i++] = Rat(s, 2);
  return v;
}

Vec ivec(std::initializer_list<std::int64_t> xs) {
  Vec v((int)xs.size());
  int i = 0;
  for (auto x : xs) v[i++] = Rat(x);
  return v;
}

// e_i - e_j in the given dimension (0-based indices)
Vec diff(int dim, int i, int j) {
  Vec v(dim);
  v[i] = Rat(1);
  v[j] = Rat(-1);
  return v;
}

void close_roots(RootSystem& rs) {
  // Orbit of the simple roots under the simple reflections.
  std::vector<Mat> refl;
  for (const Vec& s : rs.simples) refl.push_back(Mat::reflection(s));
  std::deque<Vec> frontier;
  auto add = [&](const Vec& r) -> bool {
    Vec c = canonical_ray(r);
    if (rs.root_index.count(c)) return false;
    rs.root_index.emplace(c, (int)rs.roots.size());
    rs.roots.push_back(c);
    return true;
  };
  for (const Vec& s : rs.simples)
    if (add(s)) frontier.push_back(canonical_ray(s));
  for (const Vec& s : rs.simples)
    if (add(-s)) frontier.push_back(canonical_ray(-s));
  while (!frontier.empty()) {
    Vec r = frontier.front();
    frontier.pop_front();
    for (const Mat& m : refl) {
      Vec im = m.apply(r);
      if (add(im)) frontier.push_back(canonical_ray(im));
    }
  }
  rs.neg_root.resize(rs.roots.size());
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    auto it = rs.root_index.find(canonical_ray(-rs.roots[i]));
    if (it == rs.root_index.end())
      throw std::logic_error("root system not closed under negation");
    rs.neg_root[i] = it->second;
  }
}

// Dual ray of simples[i]: orthogonal to every other simple root and to the
// constraints, positive pairing with simples[i].
Vec dual_ray(const RootSystem& rs, int i) {
  std::vector<Vec> walls;
  for (int j = 0; j < rs.rank; ++j)
    if (j != i) walls.push_back(rs.simples[j]);
  for (const Vec& c : rs.constraints) walls.push_back(c);
  std::vector<Vec> ambient;
  for (int k = 0; k < rs.ambient; ++k)
    ambient.push_back(Vec::unit(rs.ambient, k));
  std::vector<Vec> comp = orthogonal_complement(walls, ambient);
  if (comp.size() != 1)
    throw std::logic_error("dual ray not unique; degenerate system");
  Vec u = canonical_ray(comp[0]);
  Rat p = dot(u, rs.simples[i]);
  if (p.sign() == 0) throw std::logic_error("dual ray pairing vanished");
  return p.sign() > 0 ? u : canonical_ray(-u);
}

void finish(RootSystem& rs) {
  close_roots(rs);
  if (rs.fundamental_vertices.empty())
    for (int i = 0; i < rs.rank; ++i)
      rs.fundamental_vertices.push_back(dual_ray(rs, i));
  // sanity: dual pairing of the vertex table against the simple roots
  for (int i = 0; i < rs.rank; ++i) {
    for (int j = 0; j < rs.rank; ++j) {
      Rat p = dot(rs.fundamental_vertices[i], rs.simples[j]);
      if (i == j ? p.sign() <= 0 : p.sign() != 0)
        throw std::logic_error("fundamental vertex table fails duality in " +
                               rs.name());
    }
    if (!rs.in_subspace(rs.fundamental_vertices[i]))
      throw std::logic_error("fundamental vertex outside subspace");
  }
}

RootSystem build_a(int n) {
  if (n < 1) throw std::invalid_argument("A_n requires n >= 1");
  if (n + 1 > kMaxDim) throw std::invalid_argument("A_n rank too large");
  RootSystem rs;
  rs.family = "A";
  rs.rank = n;
  rs.ambient = n + 1;
  Vec ones(n + 1);
  for (int i = 0; i <= n; ++i) ones[i] = Rat(1);
  rs.constraints.push_back(ones);
  for (int i = 1; i <= n; ++i) {
    rs.simples.push_back(diff(n + 1, i, i - 1));
    rs.labels.push_back(i);
  }
  // i-vertex: i entries of -(n+1-i) then n+1-i entries of i
  for (int i = 1; i <= n; ++i) {
    Vec v(n + 1);
    for (int k = 0; k < i; ++k) v[k] = Rat(-(n + 1 - i));
    for (int k = i; k <= n; ++k) v[k] = Rat(i);
    rs.fundamental_vertices.push_back(canonical_ray(v));
  }
  finish(rs);
  return rs;
}

RootSystem build_b(int n) {
  if (n < 2) throw std::invalid_argument("B_n requires n >= 2");
  if (n > kMaxDim) throw std::invalid_argument("B_n rank too large");
  RootSystem rs;
  rs.family = "B";
  rs.rank = n;
  rs.ambient = n;
  rs.simples.push_back(Vec::unit(n, 0));
  rs.labels.push_back(1);
  for (int i = 2; i <= n; ++i) {
    rs.simples.push_back(diff(n, i - 1, i - 2));
    rs.labels.push_back(i);
  }
  for (int i = 1; i <= n; ++i) {
    Vec v(n);
    for (int k = i - 1; k < n; ++k) v[k] = Rat(1);
    rs.fundamental_vertices.push_back(v);
  }
  finish(rs);
  return rs;
}

RootSystem build_d(int n) {
  if (n < 4) throw std::invalid_argument("D_n requires n >= 4");
  if (n > kMaxDim) throw std::invalid_argument("D_n rank too large");
  RootSystem rs;
  rs.family = "D";
  rs.rank = n;
  rs.ambient = n;
  Vec r1(n);
  r1[0] = Rat(1);
  r1[1] = Rat(1);
  rs.simples.push_back(r1);
  rs.labels.push_back(1);
  for (int i = 2; i <= n; ++i) {
    rs.simples.push_back(diff(n, i - 1, i - 2));
    rs.labels.push_back(i);
  }
  for (int i = 1; i <= n; ++i) {
    Vec v(n);
    if (i == 1) {
      for (int k = 0; k < n; ++k) v[k] = Rat(1);
    } else if (i == 2) {
      v[0] = Rat(-1);
      for (int k = 1; k < n; ++k) v[k] = Rat(1);
    } else {
      for (int k = i - 1; k < n; ++k) v[k] = Rat(1);
    }
    rs.fundamental_vertices.push_back(v);
  }
  finish(rs);
  return rs;
}

RootSystem build_f4() {
  RootSystem rs;
  rs.family = "F4";
  rs.rank = 4;
  rs.ambient = 4;
  rs.simples = {half_vector(4, {-1, -1, -1, -1}), Vec::unit(4, 0),
                diff(4, 1, 0), diff(4, 2, 1)};
  rs.labels = {1, 2, 3, 4};
  rs.fundamental_vertices = {ivec({0, 0, 0, -1}), ivec({1, 1, 1, -3}),
                             ivec({0, 1, 1, -2}), ivec({0, 0, 1, -1})};
  finish(rs);
  return rs;
}

RootSystem build_e6() {
  // Realized as the unit sphere in {x6 = x7 = x8} inside the R^8 model.
  RootSystem rs;
  rs.family = "E6";
  rs.rank = 6;
  rs.ambient = 8;
  rs.constraints = {diff(8, 7, 6), diff(8, 6, 5)};
  rs.simples = {half_vector(8, {1, 1, 1, -1, -1, -1, -1, -1}),
                diff(8, 1, 0),
                diff(8, 2, 1),
                diff(8, 3, 2),
                diff(8, 4, 3),
                half_vector(8, {1, 1, 1, 1, -1, 1, 1, 1})};
  rs.labels = {1, 2, 3, 4, 5, 6};
  rs.fundamental_vertices = {
      ivec({1, 1, 1, 1, 1, -1, -1, -1}),  ivec({-3, 3, 3, 3, 3, -1, -1, -1}),
      ivec({0, 0, 3, 3, 3, -1, -1, -1}),  ivec({1, 1, 1, 3, 3, -1, -1, -1}),
      ivec({3, 3, 3, 3, 9, -1, -1, -1}),  ivec({3, 3, 3, 3, 3, 1, 1, 1})};
  finish(rs);
  return rs;
}

std::vector<Vec> e8_simples() {
  std::vector<Vec> s;
  s.push_back(half_vector(8, {1, 1, 1, -1, -1, -1, -1, -1}));
  for (int i = 2; i <= 8; ++i) s.push_back(diff(8, i - 1, i - 2));
  return s;
}

RootSystem build_e7() {
  // E8 roots orthogonal to the fundamental 8-vertex ray of the R^8 model.
  RootSystem rs;
  rs.family = "E7";
  rs.rank = 7;
  rs.ambient = 8;
  rs.constraints = {ivec({-1, -1, -1, -1, -1, -1, -1, 1})};
  std::vector<Vec> s8 = e8_simples();
  rs.simples.assign(s8.begin(), s8.begin() + 7);
  rs.labels = {1, 2, 3, 4, 5, 6, 7};
  finish(rs);
  return rs;
}

RootSystem build_e8() {
  RootSystem rs;
  rs.family = "E8";
  rs.rank = 8;
  rs.ambient = 8;
  rs.simples = e8_simples();
  rs.labels = {1, 2, 3, 4, 5, 6, 7, 8};
  finish(rs);
  return rs;
}

} // namespace

const Vec& RootSystem::fundamental_vertex(int label) const {
  return fundamental_vertices[simple_index_of_label(label)];
}

int RootSystem::simple_index_of_label(int label) const {
  for (int i = 0; i < rank; ++i)
    if (labels[i] == label) return i;
  throw std::out_of_range("no simple root with label " + std::to_string(label));
}

std::vector<Vec> RootSystem::subspace_basis() const {
  std::vector<Vec> ambient_basis;
  for (int k = 0; k < ambient; ++k)
    ambient_basis.push_back(Vec::unit(ambient, k));
  if (constraints.empty()) return ambient_basis;
  return orthogonal_complement(constraints, ambient_basis);
}

RootSystem build_root_system(const std::string& family, int rank) {
  if (family == "A" || family == "a") return build_a(rank);
  if (family == "B" || family == "b") return build_b(rank);
  if (family == "D" || family == "d") return build_d(rank);
  if (family == "F4" || family == "f4") return build_f4();
  if (family == "E6" || family == "e6") return build_e6();
  if (family == "E7" || family == "e7") return build_e7();
  if (family == "E8" || family == "e8") return build_e8();
  throw std::invalid_argument("unknown family: " + family);
}

RootSystem build_custom_system(std::vector<Vec> simples,
                               std::vector<int> labels,
                               std::vector<Vec> constraints,
                               std::vector<Vec> fundamental) {
  if (simples.empty()) throw std::invalid_argument("custom: no simple roots");
  RootSystem rs;
  rs.family = "custom";
  rs.rank = (int)simples.size();
  rs.ambient = simples[0].dim();
  rs.constraints = std::move(constraints);
  rs.simples = std::move(simples);
  rs.labels = std::move(labels);
  rs.fundamental_vertices = std::move(fundamental);
  finish(rs);
  return rs;
}

CoxeterGraph coxeter_graph(const RootSystem& rs) {
  CoxeterGraph g;
  g.nodes = rs.labels;
  std::sort(g.nodes.begin(), g.nodes.end());
  for (int i = 0; i < rs.rank; ++i)
    for (int j = i + 1; j < rs.rank; ++j) {
      ExactAngle a = angle(rs.simples[i], rs.simples[j]);
      int m;
      if (a.is_right()) {
        continue;
      } else if (a == ExactAngle(-1, Rat(1, 4))) {
        m = 3;
      } else if (a == ExactAngle(-1, Rat(1, 2))) {
        m = 4;
      } else if (a == ExactAngle(-1, Rat(3, 4))) {
        m = 6;
      } else {
        throw std::logic_error("unexpected angle between simple roots");
      }
      int la = rs.labels[i], lb = rs.labels[j];
      g.edges.push_back({std::min(la, lb), std::max(la, lb), m});
    }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

namespace {

std::string classify_component(const std::vector<int>& nodes,
                               const std::vector<CoxeterEdge>& edges) {
  int n = (int)nodes.size();
  if (n == 1) return "A1";
  std::map<int, std::vector<std::pair<int, int>>> adj; // node -> (nbr, m)
  for (const CoxeterEdge& e : edges) {
    adj[e.a].push_back({e.b, e.m});
    adj[e.b].push_back({e.a, e.m});
  }
  int deg3 = 0, m4 = 0, m6 = 0;
  int branch = -1;
  for (int v : nodes) {
    if ((int)adj[v].size() >= 3) {
      ++deg3;
      branch = v;
    }
  }
  for (const CoxeterEdge& e : edges) {
    if (e.m == 4) ++m4;
    if (e.m == 6) ++m6;
  }
  if ((int)edges.size() != n - 1) return "?" + std::to_string(n);
  if (deg3 == 0) {
    if (m6 == 1 && n == 2) return "G2";
    if (m6) return "?" + std::to_string(n);
    if (m4 == 0) return "A" + std::to_string(n);
    if (m4 == 1) {
      // one double edge on a path: at an end it is B_n, strictly inside a
      // 4-node path it is F4
      for (const CoxeterEdge& e : edges) {
        if (e.m != 4) continue;
        bool at_end = adj[e.a].size() == 1 || adj[e.b].size() == 1;
        if (at_end) return "B" + std::to_string(n);
        return n == 4 ? "F4" : ("?" + std::to_string(n));
      }
    }
    return "?" + std::to_string(n);
  }
  if (deg3 == 1 && m4 == 0 && m6 == 0) {
    // arm lengths from the branch node
    std::vector<int> arms;
    for (auto [nbr, m] : adj[branch]) {
      int len = 1, prev = branch, cur = nbr;
      while ((int)adj[cur].size() == 2) {
        for (auto [nx, mm] : adj[cur])
          if (nx != prev) {
            prev = cur;
            cur = nx;
            ++len;
            break;
          }
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() == 3 && arms[0] == 1) {
      if (arms[1] == 1) return "D" + std::to_string(n);
      if (arms[1] == 2 && arms[2] == 2) return "E6";
      if (arms[1] == 2 && arms[2] == 3) return "E7";
      if (arms[1] == 2 && arms[2] == 4) return "E8";
    }
  }
  return "?" + std::to_string(n);
}

} // namespace

std::vector<std::string> CoxeterGraph::component_types() const {
  // connected components
  std::map<int, std::vector<int>> adj;
  for (const CoxeterEdge& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<std::string> out;
  std::map<int, bool> seen;
  for (int start : nodes) {
    if (seen[start]) continue;
    std::vector<int> comp;
    std::deque<int> q{start};
    seen[start] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      comp.push_back(v);
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          q.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    std::vector<CoxeterEdge> ce;
    for (const CoxeterEdge& e : edges)
      if (std::binary_search(comp.begin(), comp.end(), e.a))
        ce.push_back(e);
    out.push_back(classify_component(comp, ce));
  }
  std::sort(out.begin(), out.end(), [](const std::string& x, const std::string& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x > y; // within same length: rank desc handled, letter desc puts E>D>B>A... keep simple
  });
  return out;
}

std::string CoxeterGraph::type_string() const {
  std::vector<std::string> cs = component_types();
  std::string s;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) s += "x";
    s += cs[i];
  }
  return s;
}

CoxeterGraph CoxeterGraph::without(const std::vector<int>& drop) const {
  CoxeterGraph g;
  auto dropped = [&](int v) {
    return std::find(drop.begin(), drop.end(), v) != drop.end();
  };
  for (int v : nodes)
    if (!dropped(v)) g.nodes.push_back(v);
  for (const CoxeterEdge& e : edges)
    if (!dropped(e.a) && !dropped(e.b)) g.edges.push_back(e);
  return g;
}

unsigned long long weyl_order_formula(const std::string& family, int rank) {
  auto fact = [](int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  if (family == "A") return fact(rank + 1);
  if (family == "B") return (1ull << rank) * fact(rank);
  if (family == "D") return (1ull << (rank - 1)) * fact(rank);
  if (family == "F4") return 1152;
  if (family == "E6") return 51840;
  if (family == "E7") return 2903040;
  if (family == "E8") return 696729600;
  throw std::invalid_argument("no closed-form order for " + family);
}

} // namespace chamberworks
