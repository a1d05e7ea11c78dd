#include "chamberworks/aut.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace chamberworks {

std::vector<std::vector<int>> graph_automorphisms(const CoxeterGraph& g) {
  std::vector<int> nodes = g.nodes;
  std::vector<std::vector<int>> out;
  std::vector<int> perm = nodes;
  std::sort(perm.begin(), perm.end());
  auto edge_order = [&](int a, int b) -> int {
    for (const CoxeterEdge& e : g.edges)
      if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.m;
    return 2;
  };
  do {
    std::map<int, int> m;
    for (std::size_t i = 0; i < nodes.size(); ++i) m[nodes[i]] = perm[i];
    bool ok = true;
    for (std::size_t i = 0; i < nodes.size() && ok; ++i)
      for (std::size_t j = i + 1; j < nodes.size() && ok; ++j)
        if (edge_order(nodes[i], nodes[j]) !=
            edge_order(m[nodes[i]], m[nodes[j]]))
          ok = false;
    if (ok) {
      std::vector<int> lp(9, 0); // label -> label, labels are 1-based <= 8
      for (auto [a, b] : m) lp[a] = b;
      out.push_back(lp);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::optional<std::vector<std::int32_t>> automorphism_from_label_perm(
    const ComplexLattice& cc, const std::vector<int>& label_perm) {
  const auto& adj = cc.chamber_adjacency();
  int c0 = cc.first_chamber();

  std::vector<std::int32_t> vperm(cc.num_vertices(), -1);
  std::vector<std::int32_t> cimage(cc.num_chambers(), -1);

  // seed: the fundamental chamber maps to itself with vertices permuted
  // by the label permutation
  int fund = cc.fundamental_face(cc.rs().labels);
  auto fvs = cc.face_vertices(fund);
  for (std::int32_t v : fvs) {
    int target_label = label_perm[cc.vertex_label(v)];
    std::int32_t image = -1;
    for (std::int32_t u : fvs)
      if (cc.vertex_label(u) == target_label) image = u;
    if (image < 0) return std::nullopt;
    vperm[v] = image;
  }
  cimage[fund - c0] = fund;

  std::deque<int> queue{fund};
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    int d = cimage[c - c0];
    for (auto [panel, nbr] : adj[c - c0]) {
      // the vertex of nbr that is not on the shared panel
      auto pvs = cc.face_vertices(panel);
      auto nvs = cc.face_vertices(nbr);
      std::int32_t fresh = -1;
      for (std::int32_t v : nvs)
        if (!std::binary_search(pvs.begin(), pvs.end(), v)) fresh = v;

      // image panel; the image of nbr is the chamber across it from d
      std::vector<std::int32_t> ip;
      for (std::int32_t v : pvs) ip.push_back(vperm[v]);
      std::sort(ip.begin(), ip.end());
      int ipanel = cc.face_id(ip);
      if (ipanel < 0) return std::nullopt;
      int dnbr = -1;
      for (auto [p2, n2] : adj[d - c0])
        if (p2 == ipanel) dnbr = n2;
      if (dnbr < 0) return std::nullopt;
      auto dnvs = cc.face_vertices(dnbr);
      std::int32_t dfresh = -1;
      for (std::int32_t v : dnvs)
        if (!std::binary_search(ip.begin(), ip.end(), v)) dfresh = v;

      if (vperm[fresh] < 0) {
        vperm[fresh] = dfresh;
      } else if (vperm[fresh] != dfresh) {
        return std::nullopt;
      }
      if (cimage[nbr - c0] < 0) {
        cimage[nbr - c0] = dnbr;
        queue.push_back(nbr);
      } else if (cimage[nbr - c0] != dnbr) {
        return std::nullopt;
      }
    }
  }

  for (std::int32_t v : vperm)
    if (v < 0) return std::nullopt;
  // must be a bijection
  std::vector<char> hit(cc.num_vertices(), 0);
  for (std::int32_t v : vperm) {
    if (hit[v]) return std::nullopt;
    hit[v] = 1;
  }
  return vperm;
}

AutGroup automorphism_group(const ComplexLattice& cc) {
  if (!cc.weyl_enumerable())
    throw std::invalid_argument("automorphism group not enumerable for " +
                                cc.name());
  const WeylEnumeration& we = cc.weyl();
  if (we.order() * (std::size_t)cc.num_vertices() > 30'000'000ull)
    throw std::invalid_argument("automorphism group too large to materialize");

  AutGroup out;
  out.inner_order = we.order();

  // inner part
  std::vector<int> id_label(9);
  for (int l = 0; l <= 8; ++l) id_label[l] = l;
  for (std::size_t i = 0; i < we.order(); ++i) {
    Mat m = we.matrix_of(i);
    out.elements.push_back({cc.vertex_perm_of_matrix(m), true, id_label});
  }

  // outer parts: one propagation per nontrivial diagram symmetry
  std::vector<std::vector<int>> lps = graph_automorphisms(cc.graph());
  out.outer_classes = lps.size();
  for (const auto& lp : lps) {
    bool trivial = true;
    for (int l : cc.rs().labels)
      if (lp[l] != l) trivial = false;
    if (trivial) continue;
    auto alpha = automorphism_from_label_perm(cc, lp);
    if (!alpha)
      throw std::logic_error("diagram symmetry does not lift on " + cc.name());
    // compose every inner element with alpha
    std::size_t inner_count = out.inner_order;
    for (std::size_t i = 0; i < inner_count; ++i) {
      const auto& w = out.elements[i].vperm;
      std::vector<std::int32_t> comp(w.size());
      for (std::size_t v = 0; v < w.size(); ++v)
        comp[v] = (*alpha)[w[v]];
      out.elements.push_back({std::move(comp), false, lp});
    }
  }
  return out;
}

} // namespace chamberworks
