// cubecomb: automorphisms of pocsets and halfspace separation patterns.
//
// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cubecomb/cube_complex.hpp"
#include "cubecomb/pocset.hpp"

namespace cubecomb {

// An automorphism is the image table of halfspace ids; it must commute with
// the involution and preserve < in both directions.
using Automorphism = std::vector<HalfspaceId>;

// Collects violations: IdOutOfRange (wrong size / bad entry / not a
// bijection), BreaksInvolution, BreaksOrder.
std::vector<Diagnostic> check_automorphism(const Pocset& p,
                                           const Automorphism& g);

Automorphism identity_automorphism(const Pocset& p);
Automorphism compose(const Automorphism& g, const Automorphism& h);  // g o h
Automorphism inverse(const Automorphism& g);

// Image of an ultrafilter (hence of a vertex) under g.
Bits apply_to_bits(const Automorphism& g, const Bits& ultrafilter);
VertexId apply_to_vertex(const CubeComplex& c, const Automorphism& g,
                         VertexId v);

// How g moves one halfspace:
//   Flips    iff g(h*) <= h   (g carries the complement into h; equality
//            allowed, as for a half turn of a square),
//   Skewers  iff g(h) < h     (strictly; impossible for finite pocsets,
//            kept for contract completeness),
//   Neither  otherwise.
enum class SkewFlip { Flips, Skewers, Neither };
SkewFlip classify_halfspace(const Pocset& p, const Automorphism& g,
                            HalfspaceId h);

// Hyperplanes i, j are strongly separated iff they are not transverse and
// no third hyperplane is transverse to both.
bool strongly_separated(const Pocset& p, std::uint32_t pair_i,
                        std::uint32_t pair_j);

// All unordered triples {h, k, l} of pairwise facing halfspaces (pairwise
// disjoint sides), each triple sorted ascending.
std::vector<std::array<HalfspaceId, 3>> facing_triples(const Pocset& p);

// n-disjointness of a facing pair (h1, h2): there must be distinct
// halfspaces k_1 < ... < k_l, consecutive ones tightly nested, lying
// strictly between h1 and h2* (h1 < k_1 and k_l < h2*), with l >= n.
// `witness` is a longest such chain (possibly empty). Throws
// Error{NotFacing} if h1, h2 are not facing.
struct NDisjointResult {
  bool satisfied = false;
  std::vector<HalfspaceId> witness;  // ascending, strictly between
};
NDisjointResult n_disjoint(const Pocset& p, HalfspaceId h1, HalfspaceId h2,
                           unsigned n);

// Connected components of the transversality-complement graph on
// hyperplanes: factors of the finest product decomposition.
struct Decomposition {
  std::vector<std::vector<std::uint32_t>> components;  // pair ids, sorted
  std::vector<Pocset> factors;
  // factor f's halfspace id x maps to global id to_global[f][x]
  std::vector<std::vector<HalfspaceId>> to_global;
};
Decomposition irreducible_decomposition(const Pocset& p);

// A finitely generated action: generator automorphisms, an orbit basepoint
// and a word-length cap for orbit exploration.
struct ActionSpec {
  std::vector<Automorphism> generators;
  VertexId basepoint = 0;
  unsigned depth = 12;
};

// Orbit of the basepoint under words of length <= depth in the generators
// and their inverses (sorted, deduplicated).
std::vector<VertexId> orbit_vertices(const CubeComplex& c,
                                     const ActionSpec& spec);

// Distance from vertex v to the hyperplane `pair`: the minimum graph
// distance from v to an endpoint of an edge crossing that hyperplane.
unsigned hyperplane_distance(const CubeComplex& c, VertexId v,
                             std::uint32_t pair);

// A hyperplane is essential at scale R when both of its sides contain orbit
// vertices at hyperplane-distance >= R. essential/inessential partition the
// pair ids; the explored orbit is returned for reporting.
struct EssentialReport {
  Bits essential;    // one bit per pair
  Bits inessential;  // complement
  std::vector<VertexId> orbit;
};
EssentialReport essential_at_scale(const CubeComplex& c,
                                   const ActionSpec& spec, unsigned R);

// A halfspace set W (upward closed, at most one side per hyperplane, and
// nonempty sides: see below) induces a lifting decomposition: the vertices
// of c containing all of W form a subcomplex isomorphic to the dual of the
// pocset restricted to the hyperplanes untouched by W u W*.
//
//   sub        the restricted pocset (ids renumbered),
//   complex    its dual complex,
//   to_global  sub halfspace id -> halfspace id of c,
//   embed      sub vertex -> vertex of c          (the isometric embedding),
//   project    vertex of c -> sub vertex          (the nearest-point map).
//
// Throws Error{InconsistentW} if W contains partner halfspaces or is not
// upward closed.
struct Lift {
  Pocset sub;
  CubeComplex complex;
  std::vector<HalfspaceId> to_global;
  std::vector<VertexId> embed;
  std::vector<VertexId> project;
};
Lift lift_embed(const CubeComplex& c, const Bits& w);

}  // namespace cubecomb
