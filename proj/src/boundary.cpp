// cubecomb: inseparable closures, unidirectional window checks, and the
// transfer character over unions of Z-chains.
//
// SPDX-License-Identifier: MIT
#include "cubecomb/boundary.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cubecomb/errors.hpp"

namespace cubecomb {

bool separates(const Pocset& p, std::uint32_t w_pair, std::uint32_t a_pair,
               std::uint32_t b_pair) {
  if (w_pair == a_pair || w_pair == b_pair) return false;
  for (HalfspaceId h : {side_of(a_pair, false), side_of(a_pair, true)})
    for (HalfspaceId k : {side_of(b_pair, false), side_of(b_pair, true)})
      for (HalfspaceId w : {side_of(w_pair, false), side_of(w_pair, true)})
        if (p.leq(h, w) && p.leq(k, partner(w))) return true;
  return false;
}

Bits inseparable_closure(const Pocset& p, const Bits& pairs) {
  Bits cur = pairs;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint32_t w = 0; w < p.pairs(); ++w) {
      if (cur.test(w)) continue;
      bool sep = false;
      for (std::size_t a = cur.find_first(); a != Bits::npos && !sep;
           a = cur.find_next(a))
        for (std::size_t b = cur.find_next(a); b != Bits::npos && !sep;
             b = cur.find_next(b))
          sep = separates(p, w, static_cast<std::uint32_t>(a),
                          static_cast<std::uint32_t>(b));
      if (sep) {
        cur.set(w);
        grew = true;
      }
    }
  }
  return cur;
}

UbsReport ubs_window_check(const Pocset& p, const Bits& pairs) {
  UbsReport r;
  if (pairs.none()) {
    r.inseparable = r.unidirectional = r.facing_triple_free = true;
    r.empty_warning = true;
    return r;
  }
  const std::size_t count = pairs.count();

  Bits closed = inseparable_closure(p, pairs);
  r.inseparable = closed == pairs;
  if (!r.inseparable) {
    Bits added = closed & ~pairs;
    std::ostringstream os;
    os << "closure adds hyperplane " << added.find_first();
    r.witness = os.str();
  }

  // Unidirectional (window form): each member hyperplane must have a side
  // containing strictly fewer than half of the other members' hyperplanes
  // (side k "contains" member m iff some orientation of m is <= k).
  r.unidirectional = true;
  for (std::size_t q = pairs.find_first(); q != Bits::npos && r.unidirectional;
       q = pairs.find_next(q)) {
    bool has_thin_side = false;
    for (HalfspaceId w : {side_of(static_cast<std::uint32_t>(q), false),
                          side_of(static_cast<std::uint32_t>(q), true)}) {
      std::size_t inside = 0;
      for (std::size_t m = pairs.find_first(); m != Bits::npos;
           m = pairs.find_next(m)) {
        if (m == q) continue;
        if (p.leq(side_of(static_cast<std::uint32_t>(m), false), w) ||
            p.leq(side_of(static_cast<std::uint32_t>(m), true), w))
          ++inside;
      }
      if (2 * inside < count) has_thin_side = true;
    }
    if (!has_thin_side) {
      r.unidirectional = false;
      if (r.witness.empty()) {
        std::ostringstream os;
        os << "hyperplane " << q << " has no thin side";
        r.witness = os.str();
      }
    }
  }

  r.facing_triple_free = true;
  std::vector<std::uint32_t> qs;
  for (std::size_t q = pairs.find_first(); q != Bits::npos;
       q = pairs.find_next(q))
    qs.push_back(static_cast<std::uint32_t>(q));
  auto facing = [&](std::uint32_t a, std::uint32_t b, bool sa, bool sb) {
    return p.relation(side_of(a, sa), side_of(b, sb)) == RelationKind::Facing;
  };
  for (std::size_t i = 0; i < qs.size() && r.facing_triple_free; ++i)
    for (std::size_t j = i + 1; j < qs.size() && r.facing_triple_free; ++j)
      for (std::size_t k = j + 1; k < qs.size() && r.facing_triple_free; ++k)
        for (int mask = 0; mask < 8; ++mask) {
          bool si = mask & 1, sj = mask & 2, sk = mask & 4;
          if (facing(qs[i], qs[j], si, sj) && facing(qs[i], qs[k], si, sk) &&
              facing(qs[j], qs[k], sj, sk)) {
            r.facing_triple_free = false;
            if (r.witness.empty()) {
              std::ostringstream os;
              os << "hyperplanes (" << qs[i] << ", " << qs[j] << ", " << qs[k]
                 << ") carry a facing triple";
              r.witness = os.str();
            }
            break;
          }
        }
  return r;
}

// --- Z-chain universe ----------------------------------------------------

ZSet ZSet::tails(unsigned rays, std::vector<char> neg, std::vector<char> pos) {
  if (neg.size() != rays || pos.size() != rays)
    throw Error(Errc::BadParams, "tail vectors must have one entry per ray");
  ZSet z;
  z.rays = rays;
  z.neg_tail = std::move(neg);
  z.pos_tail = std::move(pos);
  z.toggles.resize(rays);
  return z;
}

bool ZSet::contains(unsigned ray, long long i) const {
  bool base = i >= 0 ? pos_tail[ray] : neg_tail[ray];
  if (toggles[ray].count(i)) return !base;
  return base;
}

void ZSet::toggle(unsigned ray, long long i) {
  auto [it, inserted] = toggles[ray].insert(i);
  if (!inserted) toggles[ray].erase(it);
}

std::optional<long long> ZSet::finite_symmetric_difference(
    const ZSet& o) const {
  if (rays != o.rays || neg_tail != o.neg_tail || pos_tail != o.pos_tail)
    return std::nullopt;
  long long diff = 0;
  for (unsigned r = 0; r < rays; ++r) {
    std::set<long long> cells = toggles[r];
    cells.insert(o.toggles[r].begin(), o.toggles[r].end());
    for (long long i : cells)
      if (contains(r, i) != o.contains(r, i)) ++diff;
  }
  return diff;
}

ZAction ZAction::identity(unsigned rays) {
  ZAction g;
  g.ray_perm.resize(rays);
  g.shift.assign(rays, 0);
  for (unsigned r = 0; r < rays; ++r) g.ray_perm[r] = r;
  return g;
}

bool ZAction::valid() const {
  if (shift.size() != ray_perm.size()) return false;
  std::vector<char> hit(ray_perm.size(), 0);
  for (std::uint32_t r : ray_perm) {
    if (r >= ray_perm.size() || hit[r]) return false;
    hit[r] = 1;
  }
  return true;
}

ZAction compose(const ZAction& g, const ZAction& h) {
  // (g o h)(r, i) = g(h(r, i)) = (g.perm[h.perm[r]], i + h.shift[r] +
  // g.shift[h.perm[r]]).
  ZAction out;
  out.ray_perm.resize(h.ray_perm.size());
  out.shift.resize(h.ray_perm.size());
  for (std::size_t r = 0; r < h.ray_perm.size(); ++r) {
    out.ray_perm[r] = g.ray_perm[h.ray_perm[r]];
    out.shift[r] = h.shift[r] + g.shift[h.ray_perm[r]];
  }
  return out;
}

ZAction inverse(const ZAction& g) {
  ZAction out;
  out.ray_perm.resize(g.ray_perm.size());
  out.shift.resize(g.ray_perm.size());
  for (std::size_t r = 0; r < g.ray_perm.size(); ++r) {
    out.ray_perm[g.ray_perm[r]] = static_cast<std::uint32_t>(r);
    out.shift[g.ray_perm[r]] = -g.shift[r];
  }
  return out;
}

ZSet preimage(const ZAction& g, const ZSet& m) {
  if (!g.valid() || g.ray_perm.size() != m.rays)
    throw Error(Errc::BadParams, "action does not act on this universe");
  // x = (r, i) lies in the preimage iff g(x) = (perm[r], i + shift[r]) lies
  // in m. Tails transport accordingly; a toggle of m at (s, j) pulls back to
  // (perm^{-1} s, j - shift[perm^{-1} s]).
  ZSet out;
  out.rays = m.rays;
  out.neg_tail.resize(m.rays);
  out.pos_tail.resize(m.rays);
  out.toggles.assign(m.rays, {});
  for (unsigned r = 0; r < m.rays; ++r) {
    unsigned s = g.ray_perm[r];
    long long sh = g.shift[r];
    out.neg_tail[r] = m.neg_tail[s];
    out.pos_tail[r] = m.pos_tail[s];
    // Candidate cells where membership may deviate from the tail default:
    // pulled-back toggles of m, and the window where the shift crosses the
    // tail boundary at 0.
    std::set<long long> candidates;
    for (long long j : m.toggles[s]) candidates.insert(j - sh);
    if (sh > 0)
      for (long long i = -sh; i < 0; ++i) candidates.insert(i);
    else if (sh < 0)
      for (long long i = 0; i < -sh; ++i) candidates.insert(i);
    for (long long i : candidates) {
      bool want = m.contains(s, i + sh);
      bool def = i >= 0 ? out.pos_tail[r] : out.neg_tail[r];
      if (want != def) out.toggles[r].insert(i);
    }
  }
  return out;
}

long long transfer_character(const ZSet& m, const ZAction& g) {
  ZSet pre = preimage(g, m);
  // #(M \ g^{-1}M) - #(g^{-1}M \ M): both finite iff tails agree.
  if (m.neg_tail != pre.neg_tail || m.pos_tail != pre.pos_tail)
    throw Error(Errc::NotRepresentable,
                "tail constants change along the ray permutation");
  long long tr = 0;
  for (unsigned r = 0; r < m.rays; ++r) {
    std::set<long long> cells = m.toggles[r];
    cells.insert(pre.toggles[r].begin(), pre.toggles[r].end());
    for (long long i : cells) {
      bool in_m = m.contains(r, i);
      bool in_pre = pre.contains(r, i);
      if (in_m && !in_pre) ++tr;
      if (!in_m && in_pre) --tr;
    }
  }
  return tr;
}

}  // namespace cubecomb
