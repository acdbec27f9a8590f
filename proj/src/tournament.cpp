// cubecomb: tournaments and greedy transitive subtournaments.
//
// SPDX-License-Identifier: MIT
#include "cubecomb/tournament.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cubecomb/errors.hpp"

namespace cubecomb {

Tournament Tournament::empty(unsigned n) {
  Tournament t;
  t.n = n;
  t.adj = Bits(static_cast<std::size_t>(n) * n);
  return t;
}

Tournament Tournament::from_edges(
    unsigned n, const std::vector<std::pair<unsigned, unsigned>>& edges) {
  Tournament t = empty(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n || u == v) {
      std::ostringstream os;
      os << "edge (" << u << ", " << v << ")";
      throw Error(Errc::IdOutOfRange, os.str());
    }
    t.set_edge(u, v);
  }
  return t;
}

unsigned Tournament::outdegree(unsigned v) const {
  unsigned d = 0;
  for (unsigned w = 0; w < n; ++w)
    if (w != v && edge(v, w)) ++d;
  return d;
}

std::optional<std::pair<unsigned, unsigned>> Tournament::incomplete_witness()
    const {
  for (unsigned u = 0; u < n; ++u)
    for (unsigned v = u + 1; v < n; ++v)
      if (!edge(u, v) && !edge(v, u)) return std::make_pair(u, v);
  return std::nullopt;
}

unsigned high_outdegree_vertex(const Tournament& t) {
  if (t.n == 0) throw Error(Errc::BadParams, "empty tournament");
  if (auto w = t.incomplete_witness()) {
    std::ostringstream os;
    os << "pair (" << w->first << ", " << w->second << ") has no edge";
    throw Error(Errc::NotComplete, os.str());
  }
  unsigned best = 0;
  for (unsigned v = 1; v < t.n; ++v)
    if (t.outdegree(v) > t.outdegree(best)) best = v;
  return best;
}

TransitiveResult transitive_subtournament(const Tournament& t, unsigned target,
                                          bool force) {
  if (auto w = t.incomplete_witness()) {
    std::ostringstream os;
    os << "pair (" << w->first << ", " << w->second << ") has no edge";
    throw Error(Errc::NotComplete, os.str());
  }
  if (!force) {
    // 5^target vertices guarantee success: each greedy step keeps at least
    // ceil((s - 1) / 2) >= ceil(s / 5) candidates (s >= 2).
    std::size_t need = 1;
    for (unsigned i = 0; i < target; ++i) {
      if (need > t.n) break;
      need *= 5;
    }
    if (t.n < need) {
      std::ostringstream os;
      os << t.n << " vertices < 5^" << target;
      throw Error(Errc::TooFewVertices, os.str());
    }
  }

  TransitiveResult r;
  std::vector<unsigned> cur(t.n);
  for (unsigned v = 0; v < t.n; ++v) cur[v] = v;
  while (r.chain.size() < target && !cur.empty()) {
    r.sizes.push_back(cur.size());
    // Maximum out-degree within cur; cur stays ascending, so replacing only
    // on strict improvement keeps the smallest id among ties.
    unsigned best = cur[0];
    unsigned best_deg = 0;
    bool first = true;
    for (unsigned v : cur) {
      unsigned d = 0;
      for (unsigned w : cur)
        if (w != v && t.edge(v, w)) ++d;
      if (first || d > best_deg) {
        best = v;
        best_deg = d;
        first = false;
      }
    }
    r.chain.push_back(best);
    std::vector<unsigned> next;
    for (unsigned w : cur)
      if (w != best && t.edge(best, w)) next.push_back(w);
    cur = std::move(next);
  }
  r.ok = r.chain.size() >= target;
  return r;
}

std::optional<std::vector<unsigned>> brute_force_transitive(
    const Tournament& t, unsigned target) {
  std::vector<unsigned> chain;
  auto rec = [&](auto&& self, unsigned start) -> bool {
    if (chain.size() == target) return true;
    for (unsigned v = start; v < t.n; ++v) {
      bool ok = true;
      for (unsigned u : chain)
        if (!t.edge(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chain.push_back(v);
      if (self(self, 0)) return true;
      chain.pop_back();
    }
    return false;
  };
  if (rec(rec, 0)) return chain;
  return std::nullopt;
}

}  // namespace cubecomb
