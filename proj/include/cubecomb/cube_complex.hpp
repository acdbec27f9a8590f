// cubecomb: the dual cube complex of a finite pocset.
//
// Vertices are the principal ultrafilters; two vertices are adjacent iff
// they differ in exactly one hyperplane. For valid pocsets the resulting
// graph is a median graph and every halfspace h is realized as the vertex
// set {v : h in v}, so order containment among halfspaces coincides with
// containment of those vertex sets.
//
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubecomb/pocset.hpp"

namespace cubecomb {

using VertexId = std::uint32_t;

// Plain undirected graph (used for edge graphs, face graphs and median-graph
// ingestion).
struct Graph {
  std::size_t n = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;

  std::vector<std::vector<VertexId>> adjacency() const;
  // BFS distances from s (entries of size n; unreachable = UINT32_MAX).
  std::vector<std::uint32_t> distances_from(VertexId s) const;
  bool connected() const;
};

// A cube of the complex: a base vertex together with the set of hyperplanes
// spanning the cube. `base` is the corner whose even-side mask is smallest,
// making the representation canonical. pairs is sorted.
struct Cube {
  VertexId base = 0;
  std::vector<std::uint32_t> pairs;

  bool operator==(const Cube& o) const {
    return base == o.base && pairs == o.pairs;
  }
  bool operator<(const Cube& o) const {
    return base != o.base ? base < o.base : pairs < o.pairs;
  }
};

// Isometric chain coordinates for the interval between two vertices u, v:
// the separating halfspaces (oriented toward v) are partitioned into
// `chains`, each listed outermost first. A vertex w of the interval gets
// the coordinate vector (#chain_0 members containing w, ...); the l^1
// distance between coordinate vectors equals the graph distance. d_inf is
// the length of the longest containment chain among the separating
// halfspaces (the l^infinity diameter of the tightest such embedding).
struct IntervalEmbedding {
  VertexId u = 0, v = 0;
  std::vector<std::vector<HalfspaceId>> chains;
  unsigned d_inf = 0;
};

class CubeComplex {
 public:
  // Enumerates the ultrafilters of p and assembles the complex. Throws
  // whatever p.ultrafilters() throws; callers should validate() first if the
  // pocset comes from untrusted input.
  static CubeComplex build(Pocset p,
                           std::size_t cap = kDefaultUltrafilterCap);

  const Pocset& pocset() const { return p_; }
  std::size_t vertex_count() const { return verts_.size(); }
  std::size_t edge_count() const { return edges_; }

  // Vertex v as the bitset of halfspaces containing it.
  const Bits& vertex_bits(VertexId v) const { return verts_[v]; }
  // Vertices lying in halfspace h, as a vertex bitset.
  const Bits& side(HalfspaceId h) const { return side_[h]; }
  bool vertex_in(VertexId v, HalfspaceId h) const {
    return side_[h].test(v);
  }
  std::optional<VertexId> find_vertex(const Bits& halfspace_mask) const;

  // Neighbors of v with the hyperplane crossed by each edge.
  const std::vector<std::pair<VertexId, std::uint32_t>>& neighbors(
      VertexId v) const {
    return adj_[v];
  }

  unsigned distance(VertexId u, VertexId v) const;

  // Halfspaces separating u from v, oriented toward v (contain v, miss u).
  // Its size equals distance(u, v); reversing u, v yields the partner set.
  Bits separating(VertexId u, VertexId v) const;

  // Vertices w with w between u and v (every halfspace containing both u
  // and v contains w), as a vertex bitset.
  Bits interval_vertices(VertexId u, VertexId v) const;

  // The median: memberships decided by majority vote among u, v, w.
  VertexId median(VertexId u, VertexId v, VertexId w) const;

  // The graph whose vertices are the complex's vertices and whose edges are
  // the cube-complex edges.
  Graph edge_graph() const;

  // The vertex opposite to v (every membership flipped), if realized.
  std::optional<VertexId> opposite(VertexId v) const;

  // If the whole complex is the interval between two vertices, returns such
  // a pair (u, v); otherwise nullopt. A pair works iff u and v share no
  // halfspace, i.e. v is the opposite vertex of u.
  std::optional<std::pair<VertexId, VertexId>> interval_witness() const;

  // Chain coordinates for the interval [u, v]; see IntervalEmbedding.
  IntervalEmbedding interval_embedding(VertexId u, VertexId v) const;
  // Coordinate of w (a vertex of the interval) under the embedding.
  std::vector<int> embedding_coordinate(const IntervalEmbedding& e,
                                        VertexId w) const;

  // All cubes (of every dimension >= 0: vertices are 0-cubes, edges
  // 1-cubes, ...), deduplicated via canonical base corners, sorted.
  std::vector<Cube> cubes() const;

  // Face graph of the cubical subdivision: one vertex per cube, an edge
  // whenever one cube is a facet (codimension-1 face) of the other.
  Graph face_graph() const;

 private:
  Pocset p_;
  std::vector<Bits> verts_;
  std::vector<Bits> side_;
  std::vector<std::vector<std::pair<VertexId, std::uint32_t>>> adj_;
  std::size_t edges_ = 0;
  std::vector<std::vector<std::uint16_t>> dist_;
  std::unordered_map<std::string, VertexId> index_;
};

// Result of recognizing a median graph: the derived pocset, its dual
// complex, and the vertex correspondence input graph -> complex.
struct MedianIngest {
  Pocset pocset;
  CubeComplex complex;
  std::vector<VertexId> to_complex;
};

// Recognizes a finite median graph: derives hyperplanes as the transitive
// closure of the Djokovic-Winkler edge relation, halfspaces as their sides,
// and rebuilds the dual complex. Throws Error{NotMedian} with a witness
// triple if some triple of vertices has zero or several medians, and
// Error{BadParams} if g is empty or disconnected.
MedianIngest from_median_graph(const Graph& g);

// The cubical subdivision: the complex dual to the face graph of c (each
// k-cube is split into 2^k smaller ones). Implemented by ingesting the face
// graph through from_median_graph.
MedianIngest subdivision(const CubeComplex& c);

}  // namespace cubecomb
