// cubecomb: inseparable closures and window renderings of unidirectional
// boundary sets, plus the transfer character on exactly representable
// commensurated sets over a countable union of Z-chains.
//
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cubecomb/pocset.hpp"

namespace cubecomb {

// Hyperplane w separates hyperplanes a and b iff for some orientations
// h ∈ {a-side}, k ∈ {b-side}: h <= w and k <= w*. Transverse hyperplanes
// are never separated.
bool separates(const Pocset& p, std::uint32_t w_pair, std::uint32_t a_pair,
               std::uint32_t b_pair);

// Least superset of `pairs` (bits over hyperplanes) containing every
// hyperplane that separates two of its members. Idempotent, monotone.
Bits inseparable_closure(const Pocset& p, const Bits& pairs);

// Window rendering of the unbounded-boundary-set predicates for a
// hyperplane subset U of a finite pocset:
//   inseparable          closure adds nothing;
//   unidirectional       every member has a side holding strictly fewer
//                        than |U|/2 other members (window stand-in for
//                        "finitely many"; `window_approx` marks this);
//   facing_triple_free   no three members carry pairwise facing sides.
// An empty U passes everything vacuously with `empty_warning` set.
struct UbsReport {
  bool inseparable = false;
  bool unidirectional = false;
  bool facing_triple_free = false;
  bool empty_warning = false;
  bool window_approx = true;
  std::string witness;  // first failing datum, empty when all pass

  bool pass() const {
    return inseparable && unidirectional && facing_triple_free;
  }
};
UbsReport ubs_window_check(const Pocset& p, const Bits& pairs);

// --- Commensurated sets over a disjoint union of Z-chains ---------------
//
// The universe is {(r, i) : r < rays, i in Z}. A representable set fixes,
// per ray, eventual 0/1 values toward -infinity and +infinity (the cell
// (r, i) defaults to pos_tail[r] for i >= 0 and neg_tail[r] for i < 0) plus
// finitely many exceptional cells where membership is toggled.
struct ZSet {
  unsigned rays = 0;
  std::vector<char> neg_tail, pos_tail;        // one 0/1 per ray
  std::vector<std::set<long long>> toggles;    // per-ray toggled positions

  static ZSet tails(unsigned rays, std::vector<char> neg,
                    std::vector<char> pos);
  bool contains(unsigned ray, long long i) const;
  void toggle(unsigned ray, long long i);
  // Number of cells where this set differs from `o` (both must have the
  // same rays and matching tails, else nullopt: the difference is infinite).
  std::optional<long long> finite_symmetric_difference(const ZSet& o) const;
};

// An automorphism of the universe: g(r, i) = (ray_perm[r], i + shift[r]).
struct ZAction {
  std::vector<std::uint32_t> ray_perm;
  std::vector<long long> shift;

  static ZAction identity(unsigned rays);
  bool valid() const;  // ray_perm a permutation, sizes match
};
ZAction compose(const ZAction& g, const ZAction& h);  // g after h
ZAction inverse(const ZAction& g);
// Preimage g^{-1}(M) = {x : g(x) in M}.
ZSet preimage(const ZAction& g, const ZSet& m);

// tr_M(g) = #(M \ g^{-1}M) - #(g^{-1}M \ M). Exact; requires M and g^{-1}M
// to be commensurate, which holds iff the tail constants of M match along
// the ray permutation — otherwise throws Error{NotRepresentable}.
long long transfer_character(const ZSet& m, const ZAction& g);

}  // namespace cubecomb
