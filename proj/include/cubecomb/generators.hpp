// cubecomb: generators for standard example pocsets.
//
// Vertex ids of the dual complexes are canonical (ultrafilters sorted by
// their even-side mask), which gives these generators predictable
// coordinates: path(L) vertices are numbered along the path, cube(k)
// vertices by corner bitmask, grid(a, b) row-major.
//
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cubecomb/cube_complex.hpp"
#include "cubecomb/pocset.hpp"

namespace cubecomb {

// k independent hyperplanes: the k-cube, 2^k vertices. k <= 20.
Pocset cube_pocset(unsigned k);

// A chain h_1 > h_2 > ... > h_L: the path with L edges. Pair i-1 carries
// h_i; the even side 2(i-1) is the "far" side {v_i, ..., v_L}.
Pocset path_pocset(unsigned length);

// Three legs of `leg` edges glued at a center. Pairs are leg-major: leg x
// first, then y, then z; within a leg, outermost hyperplane first. The even
// side is the leaf side.
Pocset tripod_pocset(unsigned leg);

// product(path(a), path(b)).
Pocset grid_pocset(unsigned a, unsigned b);

// Disjoint union of the pocsets (no relations across factors); the dual
// complex is the cartesian product. q's halfspace ids are shifted by
// a.halfspaces().
Pocset product_pocset(const Pocset& a, const Pocset& b);

// Two squares glued at a single corner (7 vertices, 4 hyperplanes).
Pocset bowtie_pocset();

// The median closure of `seeds` inside the k-cube (seed = k-bit corner
// mask): closes under the coordinatewise-majority median, then builds the
// pocset of the induced halfspaces (constant or duplicate coordinate splits
// are dropped). The dual complex has exactly one vertex per closed point.
// Throws BadParams for k == 0, k > 16, empty seeds, or out-of-range seeds.
Pocset median_closure_pocset(unsigned k, std::vector<std::uint32_t> seeds);

// The closed vertex set itself (sorted masks), for cross-checking.
std::vector<std::uint32_t> median_closure_points(
    unsigned k, std::vector<std::uint32_t> seeds);

// Parses a kind expression and generates the pocset. Accepted forms:
//   cube(K) path(L) tripod(L) grid(A,B) bowtie
//   product(EXPR,EXPR)
//   median_closure(K;BITS,BITS,...)  e.g. median_closure(3;000,110,011)
// Seed bitstrings list coordinates 0..k-1 left to right. Throws
// Error{BadParams} on malformed expressions.
Pocset generate(const std::string& kind_expr);

// Random median-closure pocset: k in [1, max_k], seed corners drawn from
// the given engine (count uniform in [3, min(2^k, 12)]).
Pocset random_median_closure(std::mt19937_64& rng, unsigned max_k);

// Random tree on n vertices (uniform attachment), returned as a graph; every
// tree is a median graph.
Graph random_tree(std::mt19937_64& rng, unsigned n);

}  // namespace cubecomb
