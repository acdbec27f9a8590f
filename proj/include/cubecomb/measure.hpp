// cubecomb: exact probability measures on vertices and the combinatorics of
// balanced halfspaces.
//
// SPDX-License-Identifier: MIT
#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <utility>
#include <vector>

#include "cubecomb/action.hpp"
#include "cubecomb/cube_complex.hpp"
#include "cubecomb/pocset.hpp"

namespace cubecomb {

using Rat = boost::rational<long long>;

// weight[v] is the mass of vertex v; weights must be nonnegative and sum to
// exactly 1.
struct Measure {
  std::vector<Rat> weight;
};

// NotAProbabilityMeasure diagnostics (wrong size, negative weight, sum != 1).
std::vector<Diagnostic> check_measure(const CubeComplex& c, const Measure& m);

Rat measure_of_side(const CubeComplex& c, const Measure& m, HalfspaceId h);

// balanced = {h : mu(h) = mu(h*)}, heavy = {mu(h) > 1/2}, light = partners
// of heavy. The three sets partition the halfspaces; balanced is closed
// under the involution, which maps heavy onto light.
struct BalancedPartition {
  Bits balanced, heavy, light;
};
BalancedPartition balanced_partition(const CubeComplex& c, const Measure& m);

// Terminal elements of a halfspace subset S:
//   minimal h: every k in S is transverse to h, or h <= k, or h <= k*;
//   maximal h: every k in S is transverse to h, or k <= h, or k* <= h.
// (Non-strict: a halfspace compares successfully against itself and its
// partner.) terminal = minimal u maximal.
struct TerminalElements {
  Bits minimal, maximal, terminal;
};
TerminalElements terminal_elements(const Pocset& p, const Bits& s);

// The subcomplex spanned by the balanced halfspaces, realized inside c by
// lifting along W = heavy. The result is always an interval; `witness` is a
// pair of opposite vertices of lift.complex realizing it.
struct BalancedSubcomplex {
  Lift lift;
  std::pair<VertexId, VertexId> witness;
};
BalancedSubcomplex balanced_subcomplex(const CubeComplex& c, const Measure& m);

// Push-forward of m along the vertex action of g.
Measure push_forward(const CubeComplex& c, const Automorphism& g,
                     const Measure& m);

}  // namespace cubecomb
