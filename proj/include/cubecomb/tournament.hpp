// cubecomb: complete directed graphs (tournaments, with 2-cycles allowed)
// and greedy extraction of transitive subtournaments.
//
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cubecomb/pocset.hpp"  // Bits

namespace cubecomb {

// Every unordered pair must carry at least one directed edge; both
// directions may be present simultaneously.
struct Tournament {
  unsigned n = 0;
  Bits adj;  // adj[u * n + v] set iff edge u -> v

  static Tournament empty(unsigned n);
  static Tournament from_edges(
      unsigned n, const std::vector<std::pair<unsigned, unsigned>>& edges);

  bool edge(unsigned u, unsigned v) const { return adj.test(u * n + v); }
  void set_edge(unsigned u, unsigned v) { adj.set(u * n + v); }
  unsigned outdegree(unsigned v) const;

  // A pair with no edge in either direction, if any (completeness witness).
  std::optional<std::pair<unsigned, unsigned>> incomplete_witness() const;
};

// A vertex of maximum out-degree (smallest id on ties). Its out-degree is
// always >= (n - 1) / 2 by edge counting. Throws NotComplete (with the
// offending pair) and BadParams for the empty tournament.
unsigned high_outdegree_vertex(const Tournament& t);

// Greedy transitive subtournament: repeatedly take a maximum-out-degree
// vertex of the current set and recurse on its out-neighborhood within the
// set. Returns vertices v_1, ..., v_D with v_i -> v_j for all i < j, plus
// the sizes of the candidate sets at every step (the shrink trace: each
// entry is >= ceil(previous / 5), which is why |V| >= 5^D suffices).
//
// Throws NotComplete always; throws TooFewVertices when |V| < 5^D unless
// `force` is set, in which case the greedy runs anyway and `ok` reports
// honestly whether D vertices were found.
struct TransitiveResult {
  bool ok = false;
  std::vector<unsigned> chain;
  std::vector<std::size_t> sizes;
};
TransitiveResult transitive_subtournament(const Tournament& t, unsigned target,
                                          bool force = false);

// Exhaustive search for a transitive subtournament of the given size
// (cross-check oracle; intended for n <= 8).
std::optional<std::vector<unsigned>> brute_force_transitive(
    const Tournament& t, unsigned target);

}  // namespace cubecomb
