// cubecomb: automorphisms, separation patterns and lifting decompositions.
//
// SPDX-License-Identifier: MIT
#include "cubecomb/action.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cubecomb/errors.hpp"

namespace cubecomb {

std::vector<Diagnostic> check_automorphism(const Pocset& p,
                                           const Automorphism& g) {
  std::vector<Diagnostic> out;
  const std::size_t H = p.halfspaces();
  if (g.size() != H) {
    out.push_back({Errc::IdOutOfRange, "image table has the wrong size"});
    return out;
  }
  std::vector<char> hit(H, 0);
  for (std::size_t h = 0; h < H; ++h) {
    if (g[h] >= H) {
      std::ostringstream os;
      os << "image of " << h << " is " << g[h];
      out.push_back({Errc::IdOutOfRange, os.str()});
      return out;
    }
    if (hit[g[h]]) {
      std::ostringstream os;
      os << "image " << g[h] << " repeated";
      out.push_back({Errc::IdOutOfRange, os.str()});
      return out;
    }
    hit[g[h]] = 1;
  }
  for (std::size_t h = 0; h < H; ++h)
    if (g[partner(static_cast<HalfspaceId>(h))] != partner(g[h])) {
      std::ostringstream os;
      os << "g(" << partner(static_cast<HalfspaceId>(h)) << ") != g(" << h
         << ")*";
      out.push_back({Errc::BreaksInvolution, os.str()});
    }
  for (HalfspaceId a = 0; a < H; ++a)
    for (HalfspaceId b = 0; b < H; ++b)
      if (p.less(a, b) != p.less(g[a], g[b])) {
        std::ostringstream os;
        os << "order of (" << a << ", " << b << ") not preserved";
        out.push_back({Errc::BreaksOrder, os.str()});
        return out;
      }
  return out;
}

Automorphism identity_automorphism(const Pocset& p) {
  Automorphism g(p.halfspaces());
  for (std::size_t h = 0; h < g.size(); ++h)
    g[h] = static_cast<HalfspaceId>(h);
  return g;
}

Automorphism compose(const Automorphism& g, const Automorphism& h) {
  Automorphism out(h.size());
  for (std::size_t x = 0; x < h.size(); ++x) out[x] = g[h[x]];
  return out;
}

Automorphism inverse(const Automorphism& g) {
  Automorphism out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[g[x]] = static_cast<HalfspaceId>(x);
  return out;
}

Bits apply_to_bits(const Automorphism& g, const Bits& ultrafilter) {
  Bits out(ultrafilter.size());
  for (std::size_t h = ultrafilter.find_first(); h != Bits::npos;
       h = ultrafilter.find_next(h))
    out.set(g[h]);
  return out;
}

VertexId apply_to_vertex(const CubeComplex& c, const Automorphism& g,
                         VertexId v) {
  auto w = c.find_vertex(apply_to_bits(g, c.vertex_bits(v)));
  if (!w) throw std::logic_error("automorphism image is not a vertex");
  return *w;
}

SkewFlip classify_halfspace(const Pocset& p, const Automorphism& g,
                            HalfspaceId h) {
  if (p.less(g[h], h)) return SkewFlip::Skewers;
  if (p.leq(g[partner(h)], h)) return SkewFlip::Flips;
  return SkewFlip::Neither;
}

bool strongly_separated(const Pocset& p, std::uint32_t pair_i,
                        std::uint32_t pair_j) {
  auto transverse = [&p](std::uint32_t a, std::uint32_t b) {
    return p.relation(side_of(a, false), side_of(b, false)) ==
           RelationKind::Transverse;
  };
  if (pair_i == pair_j || transverse(pair_i, pair_j)) return false;
  for (std::uint32_t q = 0; q < p.pairs(); ++q)
    if (q != pair_i && q != pair_j && transverse(q, pair_i) &&
        transverse(q, pair_j))
      return false;
  return true;
}

std::vector<std::array<HalfspaceId, 3>> facing_triples(const Pocset& p) {
  const std::size_t H = p.halfspaces();
  auto facing = [&p](HalfspaceId a, HalfspaceId b) {
    return p.relation(a, b) == RelationKind::Facing;
  };
  std::vector<std::array<HalfspaceId, 3>> out;
  for (HalfspaceId a = 0; a < H; ++a)
    for (HalfspaceId b = a + 1; b < H; ++b) {
      if (!facing(a, b)) continue;
      for (HalfspaceId c = b + 1; c < H; ++c)
        if (facing(a, c) && facing(b, c)) out.push_back({a, b, c});
    }
  return out;
}

NDisjointResult n_disjoint(const Pocset& p, HalfspaceId h1, HalfspaceId h2,
                           unsigned n) {
  if (p.relation(h1, h2) != RelationKind::Facing) {
    std::ostringstream os;
    os << "halfspaces " << h1 << " and " << h2 << " are "
       << relation_name(p.relation(h1, h2)) << ", not facing";
    throw Error(Errc::NotFacing, os.str());
  }
  // Candidates lie strictly between h1 and h2*.
  std::vector<HalfspaceId> mid;
  for (HalfspaceId k = 0; k < p.halfspaces(); ++k)
    if (p.less(h1, k) && p.less(k, partner(h2))) mid.push_back(k);

  // Longest chain of tightly nested steps within the candidates.
  const std::size_t m = mid.size();
  std::vector<unsigned> best(m, 0);
  std::vector<int> succ(m, -1);
  // Process in an order compatible with <: count of halfspaces below.
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.below(mid[a]).count() > p.below(mid[b]).count();
  });
  for (std::size_t oi : order) {
    best[oi] = 1;
    for (std::size_t j = 0; j < m; ++j)
      if (p.less(mid[oi], mid[j]) && p.tightly_nested(mid[j], mid[oi]) &&
          best[j] + 1 > best[oi]) {
        best[oi] = best[j] + 1;
        succ[oi] = static_cast<int>(j);
      }
  }
  NDisjointResult r;
  if (m != 0) {
    std::size_t top = 0;
    for (std::size_t i = 1; i < m; ++i)
      if (best[i] > best[top]) top = i;
    for (int cur = static_cast<int>(top); cur >= 0; cur = succ[cur])
      r.witness.push_back(mid[cur]);
    // Built from the smallest element upward already; succ goes outward.
  }
  r.satisfied = r.witness.size() >= n;
  return r;
}

Decomposition irreducible_decomposition(const Pocset& p) {
  const std::size_t np = p.pairs();
  Decomposition d;
  if (np == 0) {
    d.components.push_back({});
    d.factors.push_back(Pocset::from_generators(0, {}));
    d.to_global.push_back({});
    return d;
  }
  // Union pairs that are NOT transverse (they must share a factor).
  std::vector<std::uint32_t> comp(np, UINT32_MAX);
  for (std::uint32_t q = 0; q < np; ++q) {
    if (comp[q] != UINT32_MAX) continue;
    std::uint32_t id = static_cast<std::uint32_t>(d.components.size());
    d.components.push_back({});
    std::queue<std::uint32_t> bfs;
    comp[q] = id;
    bfs.push(q);
    while (!bfs.empty()) {
      std::uint32_t a = bfs.front();
      bfs.pop();
      d.components[id].push_back(a);
      for (std::uint32_t b = 0; b < np; ++b)
        if (comp[b] == UINT32_MAX &&
            p.relation(side_of(a, false), side_of(b, false)) !=
                RelationKind::Transverse) {
          comp[b] = id;
          bfs.push(b);
        }
    }
    std::sort(d.components[id].begin(), d.components[id].end());
  }
  for (auto& pairs : d.components) {
    std::vector<HalfspaceId> to_global;
    std::vector<std::pair<HalfspaceId, HalfspaceId>> gen;
    for (std::uint32_t q : pairs) {
      to_global.push_back(side_of(q, false));
      to_global.push_back(side_of(q, true));
    }
    for (std::size_t x = 0; x < to_global.size(); ++x)
      for (std::size_t y = 0; y < to_global.size(); ++y)
        if (p.less(to_global[x], to_global[y]))
          gen.emplace_back(static_cast<HalfspaceId>(x),
                           static_cast<HalfspaceId>(y));
    d.factors.push_back(Pocset::from_generators(pairs.size(), gen));
    d.to_global.push_back(std::move(to_global));
  }
  return d;
}

std::vector<VertexId> orbit_vertices(const CubeComplex& c,
                                     const ActionSpec& spec) {
  std::vector<Automorphism> moves;
  for (const auto& g : spec.generators) {
    moves.push_back(g);
    moves.push_back(inverse(g));
  }
  std::set<VertexId> seen{spec.basepoint};
  std::vector<VertexId> frontier{spec.basepoint};
  for (unsigned d = 0; d < spec.depth && !frontier.empty(); ++d) {
    std::vector<VertexId> next;
    for (VertexId v : frontier)
      for (const auto& g : moves) {
        VertexId w = apply_to_vertex(c, g, v);
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

unsigned hyperplane_distance(const CubeComplex& c, VertexId v,
                             std::uint32_t pair) {
  unsigned best = std::numeric_limits<unsigned>::max();
  for (std::size_t u = 0; u < c.vertex_count(); ++u)
    for (auto [w, q] : c.neighbors(static_cast<VertexId>(u)))
      if (q == pair) {
        best = std::min(best, c.distance(v, static_cast<VertexId>(u)));
        break;
      }
  return best;
}

EssentialReport essential_at_scale(const CubeComplex& c,
                                   const ActionSpec& spec, unsigned R) {
  EssentialReport rep;
  rep.orbit = orbit_vertices(c, spec);
  rep.essential = Bits(c.pocset().pairs());
  rep.inessential = Bits(c.pocset().pairs());
  for (std::uint32_t q = 0; q < c.pocset().pairs(); ++q) {
    bool deep_even = false, deep_odd = false;
    for (VertexId v : rep.orbit) {
      if (hyperplane_distance(c, v, q) < R) continue;
      if (c.vertex_in(v, side_of(q, false)))
        deep_even = true;
      else
        deep_odd = true;
      if (deep_even && deep_odd) break;
    }
    if (deep_even && deep_odd)
      rep.essential.set(q);
    else
      rep.inessential.set(q);
  }
  return rep;
}

Lift lift_embed(const CubeComplex& c, const Bits& w) {
  const Pocset& p = c.pocset();
  if (w.size() != p.halfspaces())
    throw Error(Errc::InconsistentW, "halfspace mask has the wrong size");
  for (std::size_t h = w.find_first(); h != Bits::npos; h = w.find_next(h)) {
    if (w.test(partner(static_cast<HalfspaceId>(h)))) {
      std::ostringstream os;
      os << "contains both sides of hyperplane " << (h >> 1);
      throw Error(Errc::InconsistentW, os.str());
    }
    const Bits& up = p.above(static_cast<HalfspaceId>(h));
    if ((up & ~w).any()) {
      std::ostringstream os;
      os << "not upward closed at halfspace " << h;
      throw Error(Errc::InconsistentW, os.str());
    }
  }

  Lift lift;
  std::vector<std::pair<HalfspaceId, HalfspaceId>> gen;
  for (std::uint32_t q = 0; q < p.pairs(); ++q)
    if (!w.test(side_of(q, false)) && !w.test(side_of(q, true))) {
      lift.to_global.push_back(side_of(q, false));
      lift.to_global.push_back(side_of(q, true));
    }
  for (std::size_t x = 0; x < lift.to_global.size(); ++x)
    for (std::size_t y = 0; y < lift.to_global.size(); ++y)
      if (p.less(lift.to_global[x], lift.to_global[y]))
        gen.emplace_back(static_cast<HalfspaceId>(x),
                         static_cast<HalfspaceId>(y));
  lift.sub = Pocset::from_generators(lift.to_global.size() / 2, gen);
  lift.complex = CubeComplex::build(lift.sub);

  // Embed: a sub vertex keeps its memberships on the untouched hyperplanes
  // and takes W-orientations elsewhere; the remaining hyperplanes (W*) get
  // the complement orientation.
  lift.embed.resize(lift.complex.vertex_count());
  for (std::size_t sv = 0; sv < lift.complex.vertex_count(); ++sv) {
    Bits mask(p.halfspaces());
    for (std::size_t h = w.find_first(); h != Bits::npos; h = w.find_next(h))
      mask.set(h);
    const Bits& sub_bits = lift.complex.vertex_bits(static_cast<VertexId>(sv));
    for (std::size_t x = sub_bits.find_first(); x != Bits::npos;
         x = sub_bits.find_next(x))
      mask.set(lift.to_global[x]);
    auto gv = c.find_vertex(mask);
    if (!gv) throw std::logic_error("lifted vertex is not realized");
    lift.embed[sv] = *gv;
  }

  // Project: forget the touched hyperplanes.
  lift.project.resize(c.vertex_count());
  for (std::size_t gv = 0; gv < c.vertex_count(); ++gv) {
    Bits mask(lift.to_global.size());
    for (std::size_t x = 0; x < lift.to_global.size(); ++x)
      if (c.vertex_in(static_cast<VertexId>(gv), lift.to_global[x]))
        mask.set(x);
    auto sv = lift.complex.find_vertex(mask);
    if (!sv) throw std::logic_error("projected vertex is not realized");
    lift.project[gv] = *sv;
  }
  return lift;
}

}  // namespace cubecomb
