// cubecomb: the median kernel and its coboundary.
//
// SPDX-License-Identifier: MIT
#include "cubecomb/cocycle.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "cubecomb/errors.hpp"

namespace cubecomb {

long long SparseVec::value(const Seq& s) const {
  auto it = e_.find(s);
  return it == e_.end() ? 0 : it->second;
}

void SparseVec::add(const Seq& s, long long delta) {
  if (delta == 0) return;
  auto [it, inserted] = e_.emplace(s, delta);
  if (!inserted) {
    it->second += delta;
    if (it->second == 0) e_.erase(it);
  }
}

SparseVec& SparseVec::operator+=(const SparseVec& o) {
  for (const auto& [s, x] : o.e_) add(s, x);
  return *this;
}

SparseVec& SparseVec::operator-=(const SparseVec& o) {
  for (const auto& [s, x] : o.e_) add(s, -x);
  return *this;
}

void SparseVec::serialize(std::ostream& out) const {
  for (const auto& [s, x] : e_) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out << ',';
      out << s[i];
    }
    out << ' ' << x << '\n';
  }
}

NormReport norms(const SparseVec& v, unsigned p) {
  if (p == 0) throw Error(Errc::BadExponent, "exponent must be >= 1");
  NormReport r;
  r.support = v.support_size();
  for (const auto& [s, x] : v.entries()) {
    long long a = x < 0 ? -x : x;
    r.l1 += a;
    r.linf = std::max(r.linf, a);
    long long pw = 1;
    for (unsigned i = 0; i < p; ++i) pw *= a;
    r.lp_pow += pw;
  }
  r.lp = std::pow(static_cast<double>(r.lp_pow), 1.0 / p);
  return r;
}

SeqTable SeqTable::build(const Pocset& p, unsigned n) {
  SeqTable t;
  t.n = n;
  t.seqs = p.tight_sequences(n);
  t.outer_inner.reserve(t.seqs.size());
  for (const auto& s : t.seqs) t.outer_inner.emplace_back(s.front(), s.back());
  return t;
}

int omega_value(const CubeComplex& c, HalfspaceId outer, HalfspaceId inner,
                VertexId u, VertexId v) {
  // Sequences are descending chains, so the whole sequence contains v iff
  // the innermost member does, and misses u iff the outermost does.
  if (c.vertex_in(v, inner) && !c.vertex_in(u, outer)) return 1;
  if (c.vertex_in(u, inner) && !c.vertex_in(v, outer)) return -1;
  return 0;
}

SparseVec omega(const CubeComplex& c, const SeqTable& t, VertexId u,
                VertexId v) {
  SparseVec out;
  for (std::size_t i = 0; i < t.seqs.size(); ++i) {
    auto [o, in] = t.outer_inner[i];
    out.add(t.seqs[i], omega_value(c, o, in, u, v));
  }
  return out;
}

int median_cocycle_value(const CubeComplex& c, HalfspaceId outer,
                         HalfspaceId inner, VertexId u1, VertexId u2,
                         VertexId u3) {
  return omega_value(c, outer, inner, u2, u3) -
         omega_value(c, outer, inner, u1, u3) +
         omega_value(c, outer, inner, u1, u2);
}

SparseVec median_cocycle(const CubeComplex& c, const SeqTable& t, VertexId u1,
                         VertexId u2, VertexId u3) {
  SparseVec out;
  for (std::size_t i = 0; i < t.seqs.size(); ++i) {
    auto [o, in] = t.outer_inner[i];
    out.add(t.seqs[i], median_cocycle_value(c, o, in, u1, u2, u3));
  }
  return out;
}

SupportDecomposition support_decomposition(const CubeComplex& c,
                                           const SeqTable& t, VertexId u1,
                                           VertexId u2, VertexId u3) {
  SupportDecomposition d;
  d.perms = {{{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
  const VertexId u[4] = {0, u1, u2, u3};
  for (std::size_t i = 0; i < 6; ++i) {
    auto [a, b, cc] = std::array<int, 3>{d.perms[i][0], d.perms[i][1],
                                         d.perms[i][2]};
    // Sign +1 exactly when (a, c) reads off a cyclic edge of (1, 2, 3).
    bool cyc = (a == 2 && cc == 3) || (a == 3 && cc == 1) ||
               (a == 1 && cc == 2);
    d.signs[i] = cyc ? 1 : -1;
    for (std::size_t si = 0; si < t.seqs.size(); ++si) {
      auto [o, in] = t.outer_inner[si];
      auto member = [&](int x, int y) {
        return c.vertex_in(u[y], in) && !c.vertex_in(u[x], o);
      };
      if (member(a, cc) && !member(a, b) && !member(b, cc))
        d.sets[i].push_back(t.seqs[si]);
    }
  }
  return d;
}

SparseVec restrict_to(const SparseVec& v, const Bits& allowed) {
  SparseVec out;
  for (const auto& [s, x] : v.entries()) {
    bool inside = std::all_of(s.begin(), s.end(), [&](HalfspaceId h) {
      return allowed.test(h);
    });
    if (inside) out.add(s, x);
  }
  return out;
}

SparseVec apply_to_vec(const Automorphism& g, const SparseVec& v) {
  SparseVec out;
  for (const auto& [s, x] : v.entries()) {
    Seq t(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) t[i] = g[s[i]];
    out.add(t, x);
  }
  return out;
}

std::vector<SparseVec> split_by_components(const SparseVec& v,
                                           const Decomposition& d) {
  std::vector<std::uint32_t> comp_of;
  for (std::size_t f = 0; f < d.components.size(); ++f)
    for (std::uint32_t q : d.components[f]) {
      if (comp_of.size() <= q) comp_of.resize(q + 1, 0);
      comp_of[q] = static_cast<std::uint32_t>(f);
    }
  std::vector<SparseVec> out(d.components.size());
  for (const auto& [s, x] : v.entries()) {
    std::uint32_t f = comp_of[pair_of(s.front())];
    bool pure = std::all_of(s.begin(), s.end(), [&](HalfspaceId h) {
      return comp_of[pair_of(h)] == f;
    });
    if (!pure) throw std::logic_error("tight sequence crosses factors");
    out[f].add(s, x);
  }
  return out;
}

}  // namespace cubecomb
