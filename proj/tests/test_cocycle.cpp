// The median kernel omega, its coboundary on tight sequences, norms,
// support decomposition, restriction and product splitting.
//
// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "cubecomb/action.hpp"
#include "cubecomb/cocycle.hpp"
#include "cubecomb/cube_complex.hpp"
#include "cubecomb/errors.hpp"
#include "cubecomb/generators.hpp"
#include "oracles.hpp"

using namespace cubecomb;

namespace {

CubeComplex cx(const char* expr) { return CubeComplex::build(generate(expr)); }

// Vertex of the factor complex matching v's memberships on the factor's
// halfspaces.
VertexId project_vertex(const CubeComplex& prod, const Decomposition& d,
                        std::size_t f, const CubeComplex& fac, VertexId v) {
  Bits mask(d.factors[f].halfspaces());
  for (HalfspaceId h = 0; h < d.factors[f].halfspaces(); ++h)
    if (prod.vertex_in(v, d.to_global[f][h])) mask.set(h);
  auto found = fac.find_vertex(mask);
  REQUIRE(found.has_value());
  return *found;
}

}  // namespace

TEST_CASE("sparse vectors: arithmetic and serialization") {
  SparseVec v;
  CHECK(v.support_size() == 0);
  v.add({1, 2}, 1);
  v.add({0, 4}, -2);
  v.add({1, 2}, -1);  // cancels to zero and disappears
  CHECK(v.support_size() == 1);
  CHECK(v.value({0, 4}) == -2);
  CHECK(v.value({1, 2}) == 0);

  SparseVec w;
  w.add({0, 4}, 2);
  w.add({3, 0}, 5);
  SparseVec sum = v + w;
  CHECK(sum.support_size() == 1);
  CHECK(sum.value({3, 0}) == 5);
  CHECK((sum - w - v) == SparseVec{});

  SparseVec s;
  s.add({5, 3}, -1);
  s.add({0, 2}, 3);
  std::ostringstream out;
  s.serialize(out);
  CHECK(out.str() == "0,2 3\n5,3 -1\n");
}

TEST_CASE("norm reports are exact; exponent zero is rejected") {
  SparseVec v;
  v.add({0}, 1);
  v.add({2}, -2);
  v.add({4}, 3);
  NormReport r = norms(v, 2);
  CHECK(r.support == 3);
  CHECK(r.l1 == 6);
  CHECK(r.linf == 3);
  CHECK(r.lp_pow == 14);
  CHECK(r.lp == doctest::Approx(std::sqrt(14.0)));

  NormReport r1 = norms(v, 1);
  CHECK(r1.lp_pow == 6);
  CHECK(r1.lp == doctest::Approx(6.0));

  NormReport r3 = norms(v, 3);
  CHECK(r3.lp_pow == 1 + 8 + 27);

  try {
    norms(v, 0);
    FAIL("p = 0 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadExponent);
  }
}

TEST_CASE("sequence tables: frozen contents") {
  Pocset p3 = path_pocset(3);
  SeqTable t2 = SeqTable::build(p3, 2);
  CHECK(t2.seqs == std::vector<Seq>{{0, 2}, {2, 4}, {3, 1}, {5, 3}});
  CHECK(t2.outer_inner[0] == std::pair<HalfspaceId, HalfspaceId>{0, 2});

  SeqTable t3 = SeqTable::build(p3, 3);
  CHECK(t3.seqs == std::vector<Seq>{{0, 2, 4}, {5, 3, 1}});
  CHECK(t3.outer_inner[1] == std::pair<HalfspaceId, HalfspaceId>{5, 1});

  SeqTable t1 = SeqTable::build(p3, 1);
  CHECK(t1.seqs.size() == 6);

  SeqTable tt = SeqTable::build(tripod_pocset(1), 2);
  CHECK(tt.seqs == std::vector<Seq>{{1, 2}, {1, 4}, {3, 0}, {3, 4}, {5, 0},
                                    {5, 2}});
}

TEST_CASE("omega on a path: frozen values and the 2d support rule") {
  CubeComplex c = cx("path(2)");
  SeqTable t = SeqTable::build(c.pocset(), 1);
  SparseVec w = omega(c, t, 0, 2);
  CHECK(w.support_size() == 4);
  CHECK(w.value({0}) == 1);
  CHECK(w.value({2}) == 1);
  CHECK(w.value({1}) == -1);
  CHECK(w.value({3}) == -1);
  CHECK(norms(w, 1).l1 == 2 * 2);

  std::mt19937_64 rng(8080);
  for (int trial = 0; trial < 10; ++trial) {
    Pocset p = random_median_closure(rng, 4);
    CubeComplex cc = CubeComplex::build(p);
    SeqTable t1 = SeqTable::build(p, 1);
    std::uniform_int_distribution<VertexId> pick(
        0, static_cast<VertexId>(cc.vertex_count() - 1));
    VertexId u = pick(rng), v = pick(rng);
    CHECK(norms(omega(cc, t1, u, v), 1).l1 ==
          2 * static_cast<long long>(cc.distance(u, v)));
  }
}

TEST_CASE("omega matches the brute-force oracle and is antisymmetric") {
  std::mt19937_64 rng(1701);
  for (int trial = 0; trial < 12; ++trial) {
    Pocset p = random_median_closure(rng, 4);
    CubeComplex c = CubeComplex::build(p);
    auto masks = oracles::ultrafilter_masks(p);
    REQUIRE(masks.size() == c.vertex_count());
    for (unsigned n = 1; n <= 3; ++n) {
      SeqTable t = SeqTable::build(p, n);
      std::uniform_int_distribution<VertexId> pick(
          0, static_cast<VertexId>(c.vertex_count() - 1));
      for (int i = 0; i < 8; ++i) {
        VertexId u = pick(rng), v = pick(rng);
        SparseVec w = omega(c, t, u, v);
        auto expect = oracles::omega_map(p, masks, n, u, v);
        CHECK(w.entries().size() == expect.size());
        for (const auto& [seq, val] : expect) CHECK(w.value(seq) == val);
        CHECK((w + omega(c, t, v, u)) == SparseVec{});
        CHECK(omega(c, t, u, u) == SparseVec{});
        // The single-sequence evaluator agrees with the vector.
        for (std::size_t s = 0; s < t.seqs.size(); ++s)
          CHECK(omega_value(c, t.outer_inner[s].first,
                            t.outer_inner[s].second, u, v) ==
                w.value(t.seqs[s]));
      }
    }
  }
}

TEST_CASE("the coboundary vanishes for n = 1 and on degenerate triples") {
  std::mt19937_64 rng(42424);
  for (int trial = 0; trial < 10; ++trial) {
    Pocset p = random_median_closure(rng, 4);
    CubeComplex c = CubeComplex::build(p);
    SeqTable t1 = SeqTable::build(p, 1);
    SeqTable t2 = SeqTable::build(p, 2);
    std::uniform_int_distribution<VertexId> pick(
        0, static_cast<VertexId>(c.vertex_count() - 1));
    for (int i = 0; i < 10; ++i) {
      VertexId a = pick(rng), b = pick(rng);
      CHECK(median_cocycle(c, t1, a, b, pick(rng)) == SparseVec{});
      CHECK(median_cocycle(c, t2, a, a, b) == SparseVec{});
      CHECK(median_cocycle(c, t2, a, b, b) == SparseVec{});
      CHECK(median_cocycle(c, t2, a, b, a) == SparseVec{});
    }
  }
}

TEST_CASE("tripod leaf triples: frozen coboundary vectors") {
  CubeComplex t1 = cx("tripod(1)");
  SeqTable tab = SeqTable::build(t1.pocset(), 2);
  SparseVec c = median_cocycle(t1, tab, 1, 2, 3);
  CHECK(c.support_size() == 6);
  CHECK(c.value({1, 2}) == 1);
  CHECK(c.value({1, 4}) == -1);
  CHECK(c.value({3, 0}) == -1);
  CHECK(c.value({3, 4}) == 1);
  CHECK(c.value({5, 0}) == 1);
  CHECK(c.value({5, 2}) == -1);
  NormReport r = norms(c, 2);
  CHECK(r.l1 == 6);
  CHECK(r.linf == 1);
  CHECK(r.lp_pow == 6);

  // Swapping two vertices negates the vector (alternating).
  CHECK((median_cocycle(t1, tab, 2, 1, 3) + c) == SparseVec{});
  CHECK((median_cocycle(t1, tab, 1, 3, 2) + c) == SparseVec{});
  CHECK(median_cocycle(t1, tab, 2, 3, 1) == c);

  // Doubled legs: support stays 6, with the inner x cut against the inner
  // y cut carrying +1.
  CubeComplex t2 = cx("tripod(2)");
  SeqTable tab2 = SeqTable::build(t2.pocset(), 2);
  SparseVec c2 = median_cocycle(t2, tab2, 2, 4, 6);
  CHECK(c2.support_size() == 6);
  CHECK(c2.value({1, 4}) == 1);
  CHECK(norms(c2, 1).l1 == 6);
  CHECK(norms(c2, 1).linf == 1);
}

TEST_CASE("coboundary matches the oracle; values match the vector") {
  std::mt19937_64 rng(90210);
  for (int trial = 0; trial < 10; ++trial) {
    Pocset p = random_median_closure(rng, 4);
    CubeComplex c = CubeComplex::build(p);
    auto masks = oracles::ultrafilter_masks(p);
    REQUIRE(masks.size() == c.vertex_count());
    for (unsigned n = 2; n <= 3; ++n) {
      SeqTable t = SeqTable::build(p, n);
      std::uniform_int_distribution<VertexId> pick(
          0, static_cast<VertexId>(c.vertex_count() - 1));
      for (int i = 0; i < 6; ++i) {
        VertexId u1 = pick(rng), u2 = pick(rng), u3 = pick(rng);
        SparseVec v = median_cocycle(c, t, u1, u2, u3);
        auto expect = oracles::cocycle_map(p, masks, n, u1, u2, u3);
        CHECK(v.entries().size() == expect.size());
        for (const auto& [seq, val] : expect) CHECK(v.value(seq) == val);
        for (std::size_t s = 0; s < t.seqs.size(); ++s)
          CHECK(median_cocycle_value(c, t.outer_inner[s].first,
                                     t.outer_inner[s].second, u1, u2, u3) ==
                v.value(t.seqs[s]));
      }
    }
  }
}

TEST_CASE("coboundary of the coboundary vanishes (4-point identity)") {
  std::mt19937_64 rng(60601);
  for (int trial = 0; trial < 8; ++trial) {
    Pocset p = random_median_closure(rng, 4);
    CubeComplex c = CubeComplex::build(p);
    SeqTable t = SeqTable::build(p, 2);
    std::uniform_int_distribution<VertexId> pick(
        0, static_cast<VertexId>(c.vertex_count() - 1));
    for (int i = 0; i < 12; ++i) {
      VertexId a = pick(rng), b = pick(rng), d = pick(rng), e = pick(rng);
      SparseVec dc = median_cocycle(c, t, b, d, e) -
                     median_cocycle(c, t, a, d, e) +
                     median_cocycle(c, t, a, b, e) -
                     median_cocycle(c, t, a, b, d);
      CHECK(dc == SparseVec{});
    }
  }
}

TEST_CASE("support size stays below 6 (n-1) D^n") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Pocset p = random_median_closure(rng, 4);
    CubeComplex c = CubeComplex::build(p);
    unsigned D = p.dimension();
    if (D == 0) continue;
    std::uniform_int_distribution<VertexId> pick(
        0, static_cast<VertexId>(c.vertex_count() - 1));
    for (unsigned n = 2; n <= 3; ++n) {
      SeqTable t = SeqTable::build(p, n);
      for (int i = 0; i < 8; ++i) {
        SparseVec v = median_cocycle(c, t, pick(rng), pick(rng), pick(rng));
        std::size_t bound = 6 * (n - 1);
        for (unsigned j = 0; j < n; ++j) bound *= D;
        CHECK(v.support_size() <= bound);
      }
    }
  }
}

TEST_CASE("six-set support decomposition") {
  std::mt19937_64 rng(333);
  for (int trial = 0; trial < 8; ++trial) {
    Pocset p = random_median_closure(rng, 4);
    CubeComplex c = CubeComplex::build(p);
    SeqTable t = SeqTable::build(p, 2);
    std::uniform_int_distribution<VertexId> pick(
        0, static_cast<VertexId>(c.vertex_count() - 1));
    for (int i = 0; i < 6; ++i) {
      VertexId u1 = pick(rng), u2 = pick(rng), u3 = pick(rng);
      SparseVec v = median_cocycle(c, t, u1, u2, u3);
      SupportDecomposition sd = support_decomposition(c, t, u1, u2, u3);

      // Signs depend only on the permutation's (a, c) cycle direction.
      for (int s = 0; s < 6; ++s) {
        int a = sd.perms[s][0], cc = sd.perms[s][2];
        bool plus = (a == 2 && cc == 3) || (a == 3 && cc == 1) ||
                    (a == 1 && cc == 2);
        CHECK(sd.signs[s] == (plus ? 1 : -1));
      }

      // The sets are disjoint, cover the support, and carry constant sign.
      SparseVec rebuilt;
      std::size_t total = 0;
      for (int s = 0; s < 6; ++s) {
        total += sd.sets[s].size();
        for (const Seq& q : sd.sets[s]) {
          CHECK(v.value(q) == sd.signs[s]);
          rebuilt.add(q, sd.signs[s]);
        }
      }
      CHECK(total == v.support_size());
      CHECK(rebuilt == v);
    }
  }
}

TEST_CASE("restriction and equivariance") {
  CubeComplex t = cx("tripod(1)");
  SeqTable tab = SeqTable::build(t.pocset(), 2);
  SparseVec c = median_cocycle(t, tab, 1, 2, 3);

  Bits all(t.pocset().halfspaces());
  all.set();
  CHECK(restrict_to(c, all) == c);
  Bits none(t.pocset().halfspaces());
  CHECK(restrict_to(c, none) == SparseVec{});
  Bits partial = all;
  partial.reset(0);  // drop sequences touching halfspace 0
  SparseVec r = restrict_to(c, partial);
  CHECK(r.support_size() == 4);
  CHECK(r.value({3, 0}) == 0);
  CHECK(r.value({1, 2}) == 1);

  // Rotating the legs permutes leaves 1 -> 2 -> 3 -> 1.
  Automorphism rot{2, 3, 4, 5, 0, 1};
  CHECK(apply_to_vertex(t, rot, 1) == 2);
  SparseVec moved = apply_to_vec(rot, c);
  CHECK(moved == median_cocycle(t, tab, 2, 3, 1));
  CHECK(norms(moved, 1).l1 == norms(c, 1).l1);
}

TEST_CASE("product triples split into factor coboundaries") {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 6; ++trial) {
    Pocset a = random_median_closure(rng, 3);
    Pocset b = random_median_closure(rng, 3);
    Pocset prod = product_pocset(a, b);
    CubeComplex c = CubeComplex::build(prod);
    Decomposition d = irreducible_decomposition(prod);
    SeqTable t = SeqTable::build(prod, 2);
    std::uniform_int_distribution<VertexId> pick(
        0, static_cast<VertexId>(c.vertex_count() - 1));
    for (int i = 0; i < 4; ++i) {
      VertexId u1 = pick(rng), u2 = pick(rng), u3 = pick(rng);
      SparseVec v = median_cocycle(c, t, u1, u2, u3);
      auto parts = split_by_components(v, d);
      REQUIRE(parts.size() == d.factors.size());

      SparseVec sum;
      for (const SparseVec& part : parts) sum += part;
      CHECK(sum == v);

      for (std::size_t f = 0; f < d.factors.size(); ++f) {
        CubeComplex fc = CubeComplex::build(d.factors[f]);
        SeqTable ft = SeqTable::build(d.factors[f], 2);
        SparseVec expect = median_cocycle(
            fc, ft, project_vertex(c, d, f, fc, u1),
            project_vertex(c, d, f, fc, u2), project_vertex(c, d, f, fc, u3));
        // Rename the factor's sequences into global ids.
        SparseVec renamed;
        for (const auto& [seq, val] : expect.entries()) {
          Seq g;
          for (HalfspaceId h : seq) g.push_back(d.to_global[f][h]);
          renamed.add(g, val);
        }
        CHECK(renamed == parts[f]);
      }
    }
  }
}

TEST_CASE("interval length bounds the kernel support from below") {
  // Whenever the l^infinity diameter of [u, v] exceeds n, the number of
  // tight n-sequences oriented from u to v is at least d_inf - (n - 1).
  std::mt19937_64 rng(31415);
  int hits = 0;
  for (int trial = 0; trial < 12; ++trial) {
    // Alternate between long thin families (which certainly contain pairs
    // at l^infinity distance > n) and random closures.
    Pocset p = trial % 3 == 0   ? path_pocset(4 + trial / 3)
               : trial % 3 == 1 ? tripod_pocset(2 + trial / 3)
                                : random_median_closure(rng, 5);
    CubeComplex c = CubeComplex::build(p);
    for (unsigned n = 2; n <= 3; ++n) {
      SeqTable t = SeqTable::build(p, n);
      for (VertexId u = 0; u < c.vertex_count(); ++u)
        for (VertexId v = 0; v < c.vertex_count(); ++v) {
          unsigned dinf = c.interval_embedding(u, v).d_inf;
          if (dinf <= n) continue;
          ++hits;
          long long members = 0;
          for (std::size_t s = 0; s < t.seqs.size(); ++s)
            if (omega_value(c, t.outer_inner[s].first,
                            t.outer_inner[s].second, u, v) == 1)
              ++members;
          CHECK(members >= static_cast<long long>(dinf - (n - 1)));
        }
    }
  }
  CHECK(hits > 0);
}
