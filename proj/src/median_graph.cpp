// cubecomb: recognizing median graphs and rebuilding their halfspace
// structure.
//
// SPDX-License-Identifier: MIT
#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cubecomb/cube_complex.hpp"
#include "cubecomb/errors.hpp"

namespace cubecomb {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

MedianIngest from_median_graph(const Graph& g) {
  if (g.n == 0) throw Error(Errc::BadParams, "graph has no vertices");
  for (auto [u, v] : g.edges)
    if (u >= g.n || v >= g.n || u == v)
      throw Error(Errc::BadParams, "bad edge endpoints");
  if (!g.connected()) throw Error(Errc::BadParams, "graph is disconnected");

  const std::size_t V = g.n;
  std::vector<std::vector<std::uint32_t>> dist(V);
  for (std::size_t s = 0; s < V; ++s) dist[s] = g.distances_from(s);

  // Every triple must have exactly one vertex lying on geodesics between all
  // three pairs. Intervals are precomputed as vertex bitsets so the triple
  // scan is a few bit operations each.
  std::vector<std::vector<Bits>> interval(V, std::vector<Bits>(V));
  for (std::size_t u = 0; u < V; ++u)
    for (std::size_t v = u; v < V; ++v) {
      Bits b(V);
      for (std::size_t m = 0; m < V; ++m)
        if (dist[u][m] + dist[m][v] == dist[u][v]) b.set(m);
      interval[u][v] = b;
      interval[v][u] = std::move(b);
    }
  for (std::size_t u = 0; u < V; ++u)
    for (std::size_t v = u; v < V; ++v)
      for (std::size_t w = v; w < V; ++w) {
        Bits m = interval[u][v] & interval[v][w] & interval[u][w];
        if (m.count() != 1) {
          std::ostringstream os;
          os << "triple (" << u << ", " << v << ", " << w << ") has "
             << m.count() << " medians";
          throw Error(Errc::NotMedian, os.str());
        }
      }

  // Djokovic-Winkler relation on edges, closed transitively: uv ~ xy iff
  // d(u,x) + d(v,y) != d(u,y) + d(v,x). Its classes are the hyperplanes.
  const std::size_t E = g.edges.size();
  UnionFind uf(E == 0 ? 1 : E);
  for (std::size_t i = 0; i < E; ++i)
    for (std::size_t j = i + 1; j < E; ++j) {
      auto [u, v] = g.edges[i];
      auto [x, y] = g.edges[j];
      if (dist[u][x] + dist[v][y] != dist[u][y] + dist[v][x]) uf.unite(i, j);
    }
  std::vector<std::size_t> class_of(E);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < E; ++i) {
    std::size_t r = uf.find(i);
    auto it = std::find(reps.begin(), reps.end(), r);
    if (it == reps.end()) {
      class_of[i] = reps.size();
      reps.push_back(r);
    } else {
      class_of[i] = static_cast<std::size_t>(it - reps.begin());
    }
  }
  const std::size_t np = reps.size();

  // Sides of each hyperplane: nearer to one endpoint of a representative
  // edge. In a median graph distances to the two endpoints never tie.
  std::vector<Bits> side(2 * np, Bits(V));
  for (std::size_t q = 0; q < np; ++q) {
    auto [u, v] = g.edges[reps[q]];
    for (std::size_t w = 0; w < V; ++w) {
      if (dist[w][u] == dist[w][v])
        throw std::logic_error("hyperplane side tie in a median graph");
      side[2 * q + (dist[w][u] < dist[w][v] ? 0 : 1)].set(w);
    }
  }
  // Consistency: every edge of a class must cross its hyperplane.
  for (std::size_t i = 0; i < E; ++i) {
    auto [u, v] = g.edges[i];
    std::size_t q = class_of[i];
    if (side[2 * q].test(u) == side[2 * q].test(v))
      throw std::logic_error("edge does not cross its own hyperplane");
  }

  // Halfspace order = strict containment of sides; involution pairs are the
  // two sides. Orient so that halfspace 2q is the side containing vertex 0
  // of the input graph; any orientation works, this one is deterministic.
  for (std::size_t q = 0; q < np; ++q)
    if (!side[2 * q].test(0)) std::swap(side[2 * q], side[2 * q + 1]);
  std::vector<std::pair<HalfspaceId, HalfspaceId>> rel;
  for (std::size_t a = 0; a < 2 * np; ++a)
    for (std::size_t b = 0; b < 2 * np; ++b)
      if (a != b && side[a].is_proper_subset_of(side[b]))
        rel.emplace_back(static_cast<HalfspaceId>(a),
                         static_cast<HalfspaceId>(b));

  MedianIngest out{Pocset::from_generators(np, rel), CubeComplex{}, {}};
  out.complex = CubeComplex::build(out.pocset);
  if (out.complex.vertex_count() != V)
    throw std::logic_error("rebuilt complex has a different vertex count");

  out.to_complex.resize(V);
  std::vector<char> hit(V, 0);
  for (std::size_t w = 0; w < V; ++w) {
    Bits mask(2 * np);
    for (std::size_t h = 0; h < 2 * np; ++h)
      if (side[h].test(w)) mask.set(h);
    auto idx = out.complex.find_vertex(mask);
    if (!idx) throw std::logic_error("graph vertex not realized in complex");
    if (hit[*idx]) throw std::logic_error("vertex correspondence collides");
    hit[*idx] = 1;
    out.to_complex[w] = *idx;
  }
  if (out.complex.edge_count() != E)
    throw std::logic_error("rebuilt complex has a different edge count");
  for (auto [u, v] : g.edges)
    if (out.complex.distance(out.to_complex[u], out.to_complex[v]) != 1)
      throw std::logic_error("edge not preserved by the correspondence");
  return out;
}

MedianIngest subdivision(const CubeComplex& c) {
  return from_median_graph(c.face_graph());
}

}  // namespace cubecomb
