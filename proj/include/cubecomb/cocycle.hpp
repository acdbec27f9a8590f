// cubecomb: the median kernel and its coboundary on tightly nested
// halfspace sequences.
//
// For vertices u, v let [[u, v]] denote the set of tight descending
// n-sequences all of whose members contain v and miss u; because members are
// nested this reduces to: the innermost contains v, the outermost misses u.
// The kernel is omega_{u,v} = 1_{[[u,v]]} - 1_{[[v,u]]} and the two-sided
// coboundary is
//
//   c(u1, u2, u3) = omega_{u2,u3} - omega_{u1,u3} + omega_{u1,u2},
//
// a vector supported on at most 6 (n-1) D^n sequences (D = dimension).
//
// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "cubecomb/action.hpp"
#include "cubecomb/cube_complex.hpp"
#include "cubecomb/pocset.hpp"

namespace cubecomb {

using Seq = std::vector<HalfspaceId>;

// Integer vector indexed by halfspace sequences, sparse. Keys are kept in
// lexicographic order, which is also the serialization order.
class SparseVec {
 public:
  using Map = std::map<Seq, long long>;

  long long value(const Seq& s) const;
  void add(const Seq& s, long long delta);  // erases entries reaching zero

  std::size_t support_size() const { return e_.size(); }
  const Map& entries() const { return e_; }
  bool operator==(const SparseVec& o) const { return e_ == o.e_; }

  SparseVec& operator+=(const SparseVec& o);
  SparseVec& operator-=(const SparseVec& o);
  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }

  // Lines "h1,...,hn value" in key order.
  void serialize(std::ostream& out) const;

 private:
  Map e_;
};

// Norm data for integer exponents p >= 1 (BadExponent for p == 0):
// l1 = sum |x|, linf = max |x|, lp_pow = sum |x|^p (exact).
struct NormReport {
  std::size_t support = 0;
  long long l1 = 0;
  long long linf = 0;
  long long lp_pow = 0;
  double lp = 0.0;  // lp_pow^(1/p)
};
NormReport norms(const SparseVec& v, unsigned p);

// Precomputed table of the tight n-sequences of a pocset, with the
// outermost/innermost member of each (the only data needed to evaluate
// membership in [[u, v]]).
struct SeqTable {
  unsigned n = 0;
  std::vector<Seq> seqs;  // lexicographically sorted
  std::vector<std::pair<HalfspaceId, HalfspaceId>> outer_inner;

  static SeqTable build(const Pocset& p, unsigned n);
};

// Membership value of one sequence in omega_{u,v}: +1 if the sequence lies
// in [[u, v]], -1 if in [[v, u]], else 0.
int omega_value(const CubeComplex& c, HalfspaceId outer, HalfspaceId inner,
                VertexId u, VertexId v);

SparseVec omega(const CubeComplex& c, const SeqTable& t, VertexId u,
                VertexId v);

SparseVec median_cocycle(const CubeComplex& c, const SeqTable& t, VertexId u1,
                         VertexId u2, VertexId u3);

// Value of the cocycle at a single sequence (avoids building the vector).
int median_cocycle_value(const CubeComplex& c, HalfspaceId outer,
                         HalfspaceId inner, VertexId u1, VertexId u2,
                         VertexId u3);

// The support of the cocycle partitioned into the six difference sets
//   T_sigma = [[u_a, u_c]] \ ([[u_a, u_b]] u [[u_b, u_c]]),
// one per permutation sigma = (a, b, c) of (1, 2, 3); the cocycle is
// constant on each, with value sign[i] (+1 for (a, c) in {(2,3),(3,1),(1,2)},
// else -1).
struct SupportDecomposition {
  std::array<std::array<int, 3>, 6> perms;
  std::array<std::vector<Seq>, 6> sets;
  std::array<int, 6> signs;
};
SupportDecomposition support_decomposition(const CubeComplex& c,
                                           const SeqTable& t, VertexId u1,
                                           VertexId u2, VertexId u3);

// Keeps only entries whose sequence stays inside `allowed` halfspaces.
SparseVec restrict_to(const SparseVec& v, const Bits& allowed);

// Renames every sequence through the automorphism (entry values unchanged).
SparseVec apply_to_vec(const Automorphism& g, const SparseVec& v);

// Splits v by the product decomposition: entry for factor f collects the
// sequences all of whose members belong to component f. Sequences mixing
// components are impossible for tight sequences (cross-factor halfspaces
// are transverse), so the factors sum back to v.
std::vector<SparseVec> split_by_components(const SparseVec& v,
                                           const Decomposition& d);

}  // namespace cubecomb
