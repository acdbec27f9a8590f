// cubecomb: dual complex construction and median geometry.
//
// SPDX-License-Identifier: MIT
#include "cubecomb/cube_complex.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace cubecomb {

namespace {

// Bit blocks as a byte string, used as a hash key for vertex lookup.
std::string bits_key(const Bits& b) {
  std::vector<Bits::block_type> blocks(b.num_blocks());
  boost::to_block_range(b, blocks.begin());
  return std::string(reinterpret_cast<const char*>(blocks.data()),
                     blocks.size() * sizeof(Bits::block_type));
}

}  // namespace

std::vector<std::vector<VertexId>> Graph::adjacency() const {
  std::vector<std::vector<VertexId>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::vector<std::uint32_t> Graph::distances_from(VertexId s) const {
  auto adj = adjacency();
  std::vector<std::uint32_t> d(n, std::numeric_limits<std::uint32_t>::max());
  std::queue<VertexId> q;
  d[s] = 0;
  q.push(s);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (VertexId w : adj[v])
      if (d[w] == std::numeric_limits<std::uint32_t>::max()) {
        d[w] = d[v] + 1;
        q.push(w);
      }
  }
  return d;
}

bool Graph::connected() const {
  if (n == 0) return false;
  auto d = distances_from(0);
  return std::all_of(d.begin(), d.end(), [](std::uint32_t x) {
    return x != std::numeric_limits<std::uint32_t>::max();
  });
}

CubeComplex CubeComplex::build(Pocset p, std::size_t cap) {
  CubeComplex c;
  c.verts_ = p.ultrafilters(cap);
  c.p_ = std::move(p);
  const std::size_t V = c.verts_.size();
  const std::size_t H = c.p_.halfspaces();
  const std::size_t np = c.p_.pairs();

  c.side_.assign(H, Bits(V));
  for (std::size_t v = 0; v < V; ++v)
    for (std::size_t h = c.verts_[v].find_first(); h != Bits::npos;
         h = c.verts_[v].find_next(h))
      c.side_[h].set(v);

  for (std::size_t v = 0; v < V; ++v)
    c.index_.emplace(bits_key(c.verts_[v]), static_cast<VertexId>(v));

  // Edges: flip one hyperplane and look the result up.
  c.adj_.assign(V, {});
  for (std::size_t v = 0; v < V; ++v)
    for (std::uint32_t q = 0; q < np; ++q) {
      Bits flipped = c.verts_[v];
      flipped.flip(side_of(q, false));
      flipped.flip(side_of(q, true));
      auto it = c.index_.find(bits_key(flipped));
      if (it != c.index_.end() && it->second > v) {
        c.adj_[v].emplace_back(it->second, q);
        c.adj_[it->second].emplace_back(static_cast<VertexId>(v), q);
        ++c.edges_;
      }
    }

  // All-pairs distances; the complex is a median graph, so BFS suffices.
  c.dist_.assign(V, std::vector<std::uint16_t>(V, 0xffff));
  for (std::size_t s = 0; s < V; ++s) {
    auto& d = c.dist_[s];
    std::queue<VertexId> bfs;
    d[s] = 0;
    bfs.push(static_cast<VertexId>(s));
    while (!bfs.empty()) {
      VertexId v = bfs.front();
      bfs.pop();
      for (auto [w, q] : c.adj_[v])
        if (d[w] == 0xffff) {
          d[w] = static_cast<std::uint16_t>(d[v] + 1);
          bfs.push(w);
        }
    }
  }
  return c;
}

std::optional<VertexId> CubeComplex::find_vertex(
    const Bits& halfspace_mask) const {
  auto it = index_.find(bits_key(halfspace_mask));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

unsigned CubeComplex::distance(VertexId u, VertexId v) const {
  return dist_[u][v];
}

Bits CubeComplex::separating(VertexId u, VertexId v) const {
  return verts_[v] & ~verts_[u];
}

Bits CubeComplex::interval_vertices(VertexId u, VertexId v) const {
  Bits common = verts_[u] & verts_[v];
  Bits out(verts_.size());
  for (std::size_t w = 0; w < verts_.size(); ++w)
    if ((common & ~verts_[w]).none()) out.set(w);
  return out;
}

VertexId CubeComplex::median(VertexId u, VertexId v, VertexId w) const {
  Bits m = (verts_[u] & verts_[v]) | (verts_[v] & verts_[w]) |
           (verts_[w] & verts_[u]);
  auto idx = find_vertex(m);
  if (!idx) throw std::logic_error("median vertex not realized");
  return *idx;
}

Graph CubeComplex::edge_graph() const {
  Graph g;
  g.n = verts_.size();
  for (std::size_t v = 0; v < verts_.size(); ++v)
    for (auto [w, q] : adj_[v])
      if (w > v) g.edges.emplace_back(static_cast<VertexId>(v), w);
  return g;
}

std::optional<VertexId> CubeComplex::opposite(VertexId v) const {
  Bits flipped = ~verts_[v];
  return find_vertex(flipped);
}

std::optional<std::pair<VertexId, VertexId>> CubeComplex::interval_witness()
    const {
  // The whole complex is I(u, v) iff u and v share no halfspace, i.e. they
  // are opposite vertices.
  for (std::size_t u = 0; u < verts_.size(); ++u)
    if (auto v = opposite(static_cast<VertexId>(u)))
      return std::make_pair(static_cast<VertexId>(u), *v);
  return std::nullopt;
}

IntervalEmbedding CubeComplex::interval_embedding(VertexId u,
                                                  VertexId v) const {
  IntervalEmbedding e;
  e.u = u;
  e.v = v;
  std::vector<HalfspaceId> sep;
  {
    Bits s = separating(u, v);
    for (std::size_t h = s.find_first(); h != Bits::npos; h = s.find_next(h))
      sep.push_back(static_cast<HalfspaceId>(h));
  }
  const std::size_t m = sep.size();
  if (m == 0) return e;

  // Longest containment chain among the separating halfspaces (this is the
  // l^inf diameter; it is independent of the chain partition below).
  {
    std::vector<unsigned> memo(m, 0);
    auto longest = [&](auto&& self, std::size_t i) -> unsigned {
      if (memo[i]) return memo[i];
      unsigned best = 1;
      for (std::size_t j = 0; j < m; ++j)
        if (p_.less(sep[j], sep[i]))
          best = std::max(best, 1 + self(self, j));
      return memo[i] = best;
    };
    for (std::size_t i = 0; i < m; ++i)
      e.d_inf = std::max(e.d_inf, longest(longest, i));
  }

  // Minimum chain partition via Dilworth: min path cover of the (closed)
  // containment DAG = m - maximum bipartite matching on comparable pairs.
  std::vector<int> match_right(m, -1), match_left(m, -1);
  std::vector<char> visited(m);
  auto try_kuhn = [&](auto&& self, std::size_t a) -> bool {
    for (std::size_t b = 0; b < m; ++b) {
      if (!p_.less(sep[b], sep[a]) || visited[b]) continue;  // a -> b: b inside a
      visited[b] = 1;
      if (match_right[b] < 0 || self(self, match_right[b])) {
        match_right[b] = static_cast<int>(a);
        match_left[a] = static_cast<int>(b);
        return true;
      }
    }
    return false;
  };
  for (std::size_t a = 0; a < m; ++a) {
    std::fill(visited.begin(), visited.end(), 0);
    try_kuhn(try_kuhn, a);
  }
  // Chain heads are halfspaces that are nobody's successor.
  std::vector<char> is_successor(m, 0);
  for (std::size_t b = 0; b < m; ++b)
    if (match_right[b] >= 0) is_successor[b] = 1;
  for (std::size_t a = 0; a < m; ++a) {
    if (is_successor[a]) continue;
    std::vector<HalfspaceId> chain;
    for (int cur = static_cast<int>(a); cur >= 0; cur = match_left[cur])
      chain.push_back(sep[cur]);
    e.chains.push_back(std::move(chain));
  }
  return e;
}

std::vector<int> CubeComplex::embedding_coordinate(const IntervalEmbedding& e,
                                                   VertexId w) const {
  std::vector<int> coord;
  coord.reserve(e.chains.size());
  for (const auto& chain : e.chains) {
    int x = 0;
    for (HalfspaceId h : chain)
      if (vertex_in(w, h)) ++x;
    coord.push_back(x);
  }
  return coord;
}

std::vector<Cube> CubeComplex::cubes() const {
  std::vector<Cube> out;
  std::vector<std::uint32_t> label;
  std::vector<VertexId> corners;

  for (std::size_t v = 0; v < verts_.size(); ++v) {
    // Grow label sets only toward even sides not containing v, so each cube
    // is produced exactly once from its minimal corner.
    std::vector<std::uint32_t> candidates;
    for (auto [w, q] : adj_[v])
      if (!vertex_in(static_cast<VertexId>(v), side_of(q, false)) &&
          vertex_in(w, side_of(q, false)))
        candidates.push_back(q);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    label.clear();
    corners.assign(1, static_cast<VertexId>(v));
    out.push_back({static_cast<VertexId>(v), {}});

    auto rec = [&](auto&& self, std::size_t from) -> void {
      for (std::size_t ci = from; ci < candidates.size(); ++ci) {
        std::uint32_t q = candidates[ci];
        // All current corners must have a neighbor across q.
        std::vector<VertexId> shifted;
        shifted.reserve(corners.size());
        bool ok = true;
        for (VertexId x : corners) {
          Bits flipped = verts_[x];
          flipped.flip(side_of(q, false));
          flipped.flip(side_of(q, true));
          auto y = find_vertex(flipped);
          if (!y) {
            ok = false;
            break;
          }
          shifted.push_back(*y);
        }
        if (!ok) continue;
        std::size_t old = corners.size();
        corners.insert(corners.end(), shifted.begin(), shifted.end());
        label.push_back(q);
        out.push_back({static_cast<VertexId>(v), label});
        self(self, ci + 1);
        label.pop_back();
        corners.resize(old);
      }
    };
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph CubeComplex::face_graph() const {
  auto cs = cubes();
  std::map<Cube, VertexId> id;
  for (std::size_t i = 0; i < cs.size(); ++i)
    id.emplace(cs[i], static_cast<VertexId>(i));

  Graph g;
  g.n = cs.size();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Cube& b = cs[i];
    for (std::uint32_t q : b.pairs) {
      std::vector<std::uint32_t> rest;
      for (std::uint32_t r : b.pairs)
        if (r != q) rest.push_back(r);
      // Near facet: q fixed at the base side.
      auto near = id.find(Cube{b.base, rest});
      // Far facet: q fixed at the other side; its minimal corner is the
      // base pushed across q.
      Bits flipped = verts_[b.base];
      flipped.flip(side_of(q, false));
      flipped.flip(side_of(q, true));
      auto far_base = find_vertex(flipped);
      if (near == id.end() || !far_base)
        throw std::logic_error("facet of an enumerated cube is missing");
      auto far = id.find(Cube{*far_base, rest});
      if (far == id.end())
        throw std::logic_error("facet of an enumerated cube is missing");
      g.edges.emplace_back(static_cast<VertexId>(i), near->second);
      g.edges.emplace_back(static_cast<VertexId>(i), far->second);
    }
  }
  return g;
}

}  // namespace cubecomb
