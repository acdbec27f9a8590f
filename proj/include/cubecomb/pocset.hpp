// cubecomb: combinatorics of finite CAT(0) cube complexes given as pocsets.
//
// A pocset ("poset with complementation") is a finite strict partial order on
// an even set of halfspaces {0, 1, ..., 2n-1} together with the involution
// h <-> h^1 (ids 2i and 2i+1 are the two sides of hyperplane i), subject to:
//
//   * the involution is order-reversing:  a < b  iff  b* < a*,
//   * no halfspace is comparable to its partner.
//
// Halfspaces are abstract here; the geometric realization (vertices of the
// dual cube complex = principal ultrafilters) lives in cube_complex.hpp.
//
// SPDX-License-Identifier: MIT
#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubecomb/errors.hpp"

namespace cubecomb {

using HalfspaceId = std::uint32_t;
using Bits = boost::dynamic_bitset<std::uint64_t>;

// The two sides of hyperplane i are ids 2i (the "even" side) and 2i+1.
constexpr HalfspaceId partner(HalfspaceId h) noexcept { return h ^ 1u; }
constexpr std::uint32_t pair_of(HalfspaceId h) noexcept { return h >> 1; }
constexpr HalfspaceId side_of(std::uint32_t pair, bool odd) noexcept {
  return static_cast<HalfspaceId>(2 * pair + (odd ? 1 : 0));
}

// Exhaustive classification of an ordered pair of halfspaces (h, k).
// For distinct, non-partner h, k exactly one of the first five holds.
enum class RelationKind {
  Transverse,     // none of the four containments among {h,h*} x {k,k*}
  FirstInSecond,  // h < k
  SecondInFirst,  // k < h
  Facing,         // h < k*  (equivalently k < h*): disjoint sides
  CoFacing,       // k* < h  (equivalently h* < k): the sides cover everything
  Equal,          // h == k
  Partner,        // h == k*
};

const char* relation_name(RelationKind r) noexcept;

// Hard cap for ultrafilter enumeration (and hence vertex counts).
inline constexpr std::size_t kDefaultUltrafilterCap = std::size_t{1} << 20;

class Pocset {
 public:
  Pocset() = default;  // zero hyperplanes; its dual complex is a point

  // Builds a pocset from generating strict containments (a, b) meaning a < b.
  // The dual containments and the transitive closure are added automatically.
  // Throws Error with code:
  //   IdOutOfRange       if an id is >= 2*pairs,
  //   SameOrPartner      if a generator relates a halfspace to itself or its
  //                      partner,
  //   CycleInOrder       if the closure would force a < a,
  //   PartnerComparable  if the closure would force h < h* or h* < h.
  static Pocset from_generators(
      std::size_t pairs,
      const std::vector<std::pair<HalfspaceId, HalfspaceId>>& strict);

  // Builds from a raw strict-order matrix: above[h] is the bitset of k with
  // h < k. No closure and no checking is performed unless transitively_close
  // is set; invalid inputs are accepted and reported by validate(). This is
  // the entry point for exercising the validator.
  static Pocset from_strict_matrix(std::vector<Bits> above,
                                   bool transitively_close);

  std::size_t pairs() const noexcept { return above_.size() / 2; }
  std::size_t halfspaces() const noexcept { return above_.size(); }

  // a < b (strict containment).
  bool less(HalfspaceId a, HalfspaceId b) const { return above_[a].test(b); }
  bool leq(HalfspaceId a, HalfspaceId b) const { return a == b || less(a, b); }

  // Bitsets of halfspaces strictly above / strictly below h.
  const Bits& above(HalfspaceId h) const { return above_[h]; }
  const Bits& below(HalfspaceId h) const { return below_[h]; }

  RelationKind relation(HalfspaceId h, HalfspaceId k) const;

  // Collects every axiom violation (empty result == valid pocset):
  // CycleInOrder (reflexivity/antisymmetry/transitivity failures),
  // InvolutionNotOrderReversing, PartnerComparable.
  std::vector<Diagnostic> validate() const;
  bool valid() const { return validate().empty(); }

  // Dimension = size of the largest family of pairwise transverse
  // hyperplanes (0 for the empty pocset). Exact (branch and bound).
  unsigned dimension() const;

  // True iff inner < outer with no halfspace strictly between them.
  bool tightly_nested(HalfspaceId outer, HalfspaceId inner) const;

  // All descending sequences (h_1, ..., h_n), outermost first, in which
  // consecutive members are tightly nested; n >= 1 (n == 1 gives every
  // halfspace). Sorted lexicographically. Throws BadParams for n == 0.
  std::vector<std::vector<HalfspaceId>> tight_sequences(unsigned n) const;

  // All principal ultrafilters: subsets picking exactly one side of every
  // hyperplane, closed upward under <. Each is returned as a halfspace
  // bitset. Sorted by the bitmask of chosen even sides, ascending (this is
  // the canonical vertex order of the dual complex). Throws
  // EnumerationCapExceeded if more than `cap` ultrafilters exist.
  std::vector<Bits> ultrafilters(std::size_t cap = kDefaultUltrafilterCap) const;

  bool operator==(const Pocset& o) const { return above_ == o.above_; }

 private:
  void fill_below();

  // above_[h] = strictly larger halfspaces, below_[h] = strictly smaller.
  std::vector<Bits> above_;
  std::vector<Bits> below_;
};

// True iff the map h -> image[h] witnesses an isomorphism of pocsets
// (bijective, commutes with the involution, preserves < both ways).
bool is_pocset_isomorphism(const Pocset& a, const Pocset& b,
                           const std::vector<HalfspaceId>& image);

// Searches for an isomorphism between two pocsets (backtracking on
// hyperplane images; exact). Returns one witness map if any exists.
std::optional<std::vector<HalfspaceId>> find_pocset_isomorphism(
    const Pocset& a, const Pocset& b);

}  // namespace cubecomb
