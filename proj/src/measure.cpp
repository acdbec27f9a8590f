// cubecomb: probability measures on vertices and balanced halfspaces.
//
// SPDX-License-Identifier: MIT
#include "cubecomb/measure.hpp"

#include <sstream>
#include <stdexcept>

#include "cubecomb/errors.hpp"

namespace cubecomb {

std::vector<Diagnostic> check_measure(const CubeComplex& c, const Measure& m) {
  std::vector<Diagnostic> out;
  if (m.weight.size() != c.vertex_count()) {
    std::ostringstream os;
    os << "expected " << c.vertex_count() << " weights, got "
       << m.weight.size();
    out.push_back({Errc::NotAProbabilityMeasure, os.str()});
    return out;
  }
  Rat sum{0};
  for (std::size_t v = 0; v < m.weight.size(); ++v) {
    if (m.weight[v] < Rat{0}) {
      std::ostringstream os;
      os << "weight of vertex " << v << " is negative";
      out.push_back({Errc::NotAProbabilityMeasure, os.str()});
    }
    sum += m.weight[v];
  }
  if (sum != Rat{1}) {
    std::ostringstream os;
    os << "total mass " << sum.numerator() << "/" << sum.denominator();
    out.push_back({Errc::NotAProbabilityMeasure, os.str()});
  }
  return out;
}

Rat measure_of_side(const CubeComplex& c, const Measure& m, HalfspaceId h) {
  Rat sum{0};
  const Bits& side = c.side(h);
  for (std::size_t v = side.find_first(); v != Bits::npos;
       v = side.find_next(v))
    sum += m.weight[v];
  return sum;
}

BalancedPartition balanced_partition(const CubeComplex& c, const Measure& m) {
  BalancedPartition bp;
  const std::size_t H = c.pocset().halfspaces();
  bp.balanced = Bits(H);
  bp.heavy = Bits(H);
  bp.light = Bits(H);
  const Rat half{1, 2};
  for (HalfspaceId h = 0; h < H; ++h) {
    Rat mu = measure_of_side(c, m, h);
    if (mu == half)
      bp.balanced.set(h);
    else if (mu > half)
      bp.heavy.set(h);
    else
      bp.light.set(h);
  }
  return bp;
}

TerminalElements terminal_elements(const Pocset& p, const Bits& s) {
  const std::size_t H = p.halfspaces();
  TerminalElements t{Bits(H), Bits(H), Bits(H)};
  for (std::size_t h = s.find_first(); h != Bits::npos; h = s.find_next(h)) {
    bool minimal = true, maximal = true;
    for (std::size_t k = s.find_first(); k != Bits::npos;
         k = s.find_next(k)) {
      HalfspaceId hh = static_cast<HalfspaceId>(h);
      HalfspaceId kk = static_cast<HalfspaceId>(k);
      auto rel = p.relation(hh, kk);
      if (rel == RelationKind::Transverse || rel == RelationKind::Equal ||
          rel == RelationKind::Partner)
        continue;
      if (!(p.leq(hh, kk) || p.leq(hh, partner(kk)))) minimal = false;
      if (!(p.leq(kk, hh) || p.leq(partner(kk), hh))) maximal = false;
      if (!minimal && !maximal) break;
    }
    if (minimal) t.minimal.set(h);
    if (maximal) t.maximal.set(h);
  }
  t.terminal = t.minimal | t.maximal;
  return t;
}

BalancedSubcomplex balanced_subcomplex(const CubeComplex& c,
                                       const Measure& m) {
  auto bp = balanced_partition(c, m);
  BalancedSubcomplex out{lift_embed(c, bp.heavy), {0, 0}};
  auto w = out.lift.complex.interval_witness();
  if (!w)
    throw std::logic_error("balanced subcomplex is not an interval");
  out.witness = *w;
  return out;
}

Measure push_forward(const CubeComplex& c, const Automorphism& g,
                     const Measure& m) {
  Measure out;
  out.weight.assign(c.vertex_count(), Rat{0});
  for (std::size_t v = 0; v < m.weight.size(); ++v)
    out.weight[apply_to_vertex(c, g, static_cast<VertexId>(v))] +=
        m.weight[v];
  return out;
}

}  // namespace cubecomb
