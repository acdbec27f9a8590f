// cubecomb: pocset core — order closure, validation, relation
// classification, dimension, tight sequences, ultrafilter enumeration.
//
// SPDX-License-Identifier: MIT
#include "cubecomb/pocset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cubecomb {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvolutionNotOrderReversing: return "InvolutionNotOrderReversing";
    case Errc::CycleInOrder: return "CycleInOrder";
    case Errc::PartnerComparable: return "PartnerComparable";
    case Errc::SameOrPartner: return "SameOrPartner";
    case Errc::IdOutOfRange: return "IdOutOfRange";
    case Errc::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case Errc::NotMedian: return "NotMedian";
    case Errc::BadParams: return "BadParams";
    case Errc::BreaksInvolution: return "BreaksInvolution";
    case Errc::BreaksOrder: return "BreaksOrder";
    case Errc::NotFacing: return "NotFacing";
    case Errc::BadExponent: return "BadExponent";
    case Errc::InconsistentW: return "InconsistentW";
    case Errc::NotAProbabilityMeasure: return "NotAProbabilityMeasure";
    case Errc::NotComplete: return "NotComplete";
    case Errc::TooFewVertices: return "TooFewVertices";
    case Errc::NotRepresentable: return "NotRepresentable";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownSection: return "UnknownSection";
  }
  return "UnknownError";
}

const char* relation_name(RelationKind r) noexcept {
  switch (r) {
    case RelationKind::Transverse: return "Transverse";
    case RelationKind::FirstInSecond: return "FirstInSecond";
    case RelationKind::SecondInFirst: return "SecondInFirst";
    case RelationKind::Facing: return "Facing";
    case RelationKind::CoFacing: return "CoFacing";
    case RelationKind::Equal: return "Equal";
    case RelationKind::Partner: return "Partner";
  }
  return "UnknownRelation";
}

namespace {

std::string id_pair(HalfspaceId a, HalfspaceId b) {
  std::ostringstream os;
  os << "halfspaces (" << a << ", " << b << ")";
  return os.str();
}

// Reachability closure of a successor matrix (few hundred nodes at most).
void transitive_close(std::vector<Bits>& m) {
  const std::size_t n = m.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a) {
      Bits acc = m[a];
      for (std::size_t b = acc.find_first(); b != Bits::npos;
           b = acc.find_next(b)) {
        Bits merged = m[a] | m[b];
        if (merged != m[a]) {
          m[a] = std::move(merged);
          changed = true;
        }
      }
    }
  }
}

}  // namespace

void Pocset::fill_below() {
  const std::size_t n = above_.size();
  below_.assign(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = above_[a].find_first(); b != Bits::npos;
         b = above_[a].find_next(b))
      below_[b].set(a);
}

Pocset Pocset::from_generators(
    std::size_t pairs,
    const std::vector<std::pair<HalfspaceId, HalfspaceId>>& strict) {
  const std::size_t n = 2 * pairs;
  Pocset p;
  p.above_.assign(n, Bits(n));
  for (auto [a, b] : strict) {
    if (a >= n || b >= n)
      throw Error(Errc::IdOutOfRange, id_pair(a, b));
    if (a == b || a == partner(b))
      throw Error(Errc::SameOrPartner, id_pair(a, b));
    p.above_[a].set(b);
    p.above_[partner(b)].set(partner(a));  // dual containment
  }
  transitive_close(p.above_);
  for (HalfspaceId h = 0; h < n; ++h) {
    if (p.above_[h].test(h))
      throw Error(Errc::CycleInOrder, id_pair(h, h));
    if (p.above_[h].test(partner(h)) || p.above_[partner(h)].test(h))
      throw Error(Errc::PartnerComparable, id_pair(h, partner(h)));
  }
  p.fill_below();
  return p;
}

Pocset Pocset::from_strict_matrix(std::vector<Bits> above,
                                  bool transitively_close_input) {
  if (above.size() % 2 != 0)
    throw Error(Errc::BadParams, "matrix must cover halfspace pairs");
  for (const auto& row : above)
    if (row.size() != above.size())
      throw Error(Errc::BadParams, "matrix rows must be square");
  Pocset p;
  p.above_ = std::move(above);
  if (transitively_close_input) transitive_close(p.above_);
  p.fill_below();
  return p;
}

RelationKind Pocset::relation(HalfspaceId h, HalfspaceId k) const {
  if (h == k) return RelationKind::Equal;
  if (h == partner(k)) return RelationKind::Partner;
  if (less(h, k)) return RelationKind::FirstInSecond;
  if (less(k, h)) return RelationKind::SecondInFirst;
  if (less(h, partner(k))) return RelationKind::Facing;
  if (less(partner(k), h)) return RelationKind::CoFacing;
  return RelationKind::Transverse;
}

std::vector<Diagnostic> Pocset::validate() const {
  std::vector<Diagnostic> out;
  const std::size_t n = above_.size();
  for (HalfspaceId a = 0; a < n; ++a) {
    if (less(a, a))
      out.push_back({Errc::CycleInOrder, id_pair(a, a) + ": a < a"});
    if (less(a, partner(a)))
      out.push_back({Errc::PartnerComparable, id_pair(a, partner(a))});
  }
  for (HalfspaceId a = 0; a < n; ++a)
    for (std::size_t b = above_[a].find_first(); b != Bits::npos;
         b = above_[a].find_next(b)) {
      if (a == b) continue;
      if (less(b, a))
        out.push_back({Errc::CycleInOrder, id_pair(a, b) + ": a < b < a"});
      // order-reversing involution
      if (!less(partner(b), partner(a)))
        out.push_back({Errc::InvolutionNotOrderReversing,
                       id_pair(a, b) + ": a < b but not b* < a*"});
      // transitivity (the stored relation must already be closed)
      if ((above_[b] & ~above_[a]).any() && !less(b, a))
        out.push_back({Errc::CycleInOrder,
                       id_pair(a, b) + ": a < b but above(b) leaves above(a)"});
    }
  return out;
}

unsigned Pocset::dimension() const {
  const std::size_t np = pairs();
  if (np == 0) return 0;
  // Transversality graph on hyperplanes, then exact max clique
  // (Bron-Kerbosch with greedy pivoting; desk-scale inputs).
  std::vector<Bits> adj(np, Bits(np));
  for (std::uint32_t i = 0; i < np; ++i)
    for (std::uint32_t j = i + 1; j < np; ++j)
      if (relation(side_of(i, false), side_of(j, false)) ==
          RelationKind::Transverse) {
        adj[i].set(j);
        adj[j].set(i);
      }
  unsigned best = 0;
  Bits r(np), p(np), x(np);
  p.set();
  auto bk = [&](auto&& self, Bits rr, Bits pp, Bits xx) -> void {
    if (pp.none() && xx.none()) {
      best = std::max(best, static_cast<unsigned>(rr.count()));
      return;
    }
    if (rr.count() + pp.count() <= best) return;  // bound
    Bits both = pp | xx;
    std::size_t pivot = both.find_first();
    std::size_t bestdeg = 0;
    for (std::size_t u = both.find_first(); u != Bits::npos;
         u = both.find_next(u)) {
      std::size_t deg = (pp & adj[u]).count();
      if (deg >= bestdeg) {
        bestdeg = deg;
        pivot = u;
      }
    }
    Bits cands = pp & ~adj[pivot];
    for (std::size_t v = cands.find_first(); v != Bits::npos;
         v = cands.find_next(v)) {
      Bits r2 = rr;
      r2.set(v);
      self(self, r2, pp & adj[v], xx & adj[v]);
      pp.reset(v);
      xx.set(v);
    }
  };
  bk(bk, r, p, x);
  return best;
}

bool Pocset::tightly_nested(HalfspaceId outer, HalfspaceId inner) const {
  if (!less(inner, outer)) return false;
  return (above_[inner] & below_[outer]).none();
}

std::vector<std::vector<HalfspaceId>> Pocset::tight_sequences(
    unsigned n) const {
  if (n == 0) throw Error(Errc::BadParams, "sequence length must be >= 1");
  const std::size_t H = halfspaces();
  // tight successor lists: tight_inner[h] = all k tightly nested inside h
  std::vector<std::vector<HalfspaceId>> tight_inner(H);
  for (HalfspaceId outer = 0; outer < H; ++outer)
    for (std::size_t inner = below_[outer].find_first(); inner != Bits::npos;
         inner = below_[outer].find_next(inner))
      if ((above_[inner] & below_[outer]).none())
        tight_inner[outer].push_back(static_cast<HalfspaceId>(inner));

  std::vector<std::vector<HalfspaceId>> out;
  std::vector<HalfspaceId> cur;
  auto rec = [&](auto&& self, HalfspaceId last, unsigned depth) -> void {
    if (depth == n) {
      out.push_back(cur);
      return;
    }
    for (HalfspaceId next : tight_inner[last]) {
      cur.push_back(next);
      self(self, next, depth + 1);
      cur.pop_back();
    }
  };
  for (HalfspaceId h = 0; h < H; ++h) {
    cur.assign(1, h);
    rec(rec, h, 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Bits> Pocset::ultrafilters(std::size_t cap) const {
  const std::size_t np = pairs();
  const std::size_t H = halfspaces();
  std::vector<Bits> out;
  Bits chosen(H), chosen_partners(H);
  auto rec = [&](auto&& self, std::uint32_t pair) -> void {
    if (pair == np) {
      out.push_back(chosen);
      if (out.size() > cap)
        throw Error(Errc::EnumerationCapExceeded,
                    "more than " + std::to_string(cap) + " ultrafilters");
      return;
    }
    for (int side = 0; side < 2; ++side) {
      HalfspaceId h = side_of(pair, side == 1);
      // h conflicts with a chosen k iff h < k*; upward closure at
      // completion is equivalent to the absence of such facing pairs.
      if ((above_[h] & chosen_partners).any()) continue;
      if ((below_[partner(h)] & chosen).any()) continue;
      chosen.set(h);
      chosen_partners.set(partner(h));
      self(self, pair + 1);
      chosen.reset(h);
      chosen_partners.reset(partner(h));
    }
  };
  rec(rec, 0);

  // Finite descending-chain sanity: every nonempty ultrafilter has a
  // minimal member.
  for (const Bits& a : out) {
    bool has_min = np == 0;
    for (std::size_t h = a.find_first(); h != Bits::npos && !has_min;
         h = a.find_next(h))
      has_min = (below_[h] & a).none();
    if (!has_min)
      throw std::logic_error("ultrafilter without minimal member");
  }

  // Canonical order: ascending bitmask of chosen even sides.
  std::vector<std::pair<Bits, std::size_t>> keyed;
  keyed.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    Bits key(np);
    for (std::uint32_t q = 0; q < np; ++q)
      if (out[i].test(side_of(q, false))) key.set(q);
    keyed.emplace_back(std::move(key), i);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Bits> sorted;
  sorted.reserve(out.size());
  for (const auto& [key, i] : keyed) sorted.push_back(std::move(out[i]));
  return sorted;
}

bool is_pocset_isomorphism(const Pocset& a, const Pocset& b,
                           const std::vector<HalfspaceId>& image) {
  const std::size_t H = a.halfspaces();
  if (b.halfspaces() != H || image.size() != H) return false;
  Bits seen(H);
  for (HalfspaceId h = 0; h < H; ++h) {
    if (image[h] >= H || seen.test(image[h])) return false;
    seen.set(image[h]);
  }
  for (HalfspaceId h = 0; h < H; ++h)
    if (image[partner(h)] != partner(image[h])) return false;
  for (HalfspaceId h = 0; h < H; ++h)
    for (HalfspaceId k = 0; k < H; ++k)
      if (a.less(h, k) != b.less(image[h], image[k])) return false;
  return true;
}

std::optional<std::vector<HalfspaceId>> find_pocset_isomorphism(
    const Pocset& a, const Pocset& b) {
  const std::size_t H = a.halfspaces();
  if (b.halfspaces() != H) return std::nullopt;
  const std::size_t np = a.pairs();
  // Backtracking on hyperplane images with orientation; prune by local
  // degree signature and by relations against already-mapped pairs.
  auto sig = [](const Pocset& p, HalfspaceId h) {
    return std::pair<std::size_t, std::size_t>{p.above(h).count(),
                                               p.below(h).count()};
  };
  std::vector<HalfspaceId> image(H, 0);
  std::vector<bool> used(np, false);
  auto rec = [&](auto&& self, std::uint32_t q) -> bool {
    if (q == np) return is_pocset_isomorphism(a, b, image);
    HalfspaceId h = side_of(q, false);
    for (std::uint32_t t = 0; t < np; ++t) {
      if (used[t]) continue;
      for (int flip = 0; flip < 2; ++flip) {
        HalfspaceId g = side_of(t, flip == 1);
        if (sig(a, h) != sig(b, g)) continue;
        if (sig(a, partner(h)) != sig(b, partner(g))) continue;
        bool ok = true;
        for (std::uint32_t q2 = 0; ok && q2 < q; ++q2) {
          HalfspaceId h2 = side_of(q2, false);
          ok = a.relation(h, h2) == b.relation(g, image[h2]) &&
               a.relation(h, partner(h2)) == b.relation(g, partner(image[h2]));
        }
        if (!ok) continue;
        image[h] = g;
        image[partner(h)] = partner(g);
        used[t] = true;
        if (self(self, q + 1)) return true;
        used[t] = false;
      }
    }
    return false;
  };
  if (rec(rec, 0)) return image;
  return std::nullopt;
}

}  // namespace cubecomb
