// Exact vertex measures: balanced/heavy partitions, terminal elements,
// the balanced subcomplex and equivariance.
//
// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubecomb/cube_complex.hpp"
#include "cubecomb/errors.hpp"
#include "cubecomb/generators.hpp"
#include "cubecomb/measure.hpp"
#include "testutil.hpp"

using namespace cubecomb;

namespace {

CubeComplex cx(const char* expr) { return CubeComplex::build(generate(expr)); }

Measure uniform_on(std::size_t vertices, std::vector<VertexId> support) {
  Measure m;
  m.weight.assign(vertices, Rat{0});
  for (VertexId v : support)
    m.weight[v] = Rat{1, static_cast<long long>(support.size())};
  return m;
}

Bits bits_of(std::size_t n, std::vector<HalfspaceId> hs) {
  Bits b(n);
  for (HalfspaceId h : hs) b.set(h);
  return b;
}

}  // namespace

TEST_CASE("measure validation diagnostics") {
  CubeComplex sq = cx("cube(2)");
  CHECK(check_measure(sq, uniform_on(4, {0, 1, 2, 3})).empty());
  CHECK(check_measure(sq, uniform_on(4, {2})).empty());

  Measure short_m = uniform_on(3, {0});
  auto d1 = check_measure(sq, short_m);
  REQUIRE(!d1.empty());
  CHECK(d1[0].code == Errc::NotAProbabilityMeasure);

  Measure neg;
  neg.weight = {Rat{2}, Rat{-1}, Rat{0}, Rat{0}};
  CHECK(!check_measure(sq, neg).empty());

  Measure low;
  low.weight = {Rat{1, 4}, Rat{1, 4}, Rat{1, 4}, Rat{0}};
  auto d3 = check_measure(sq, low);
  REQUIRE(!d3.empty());
  CHECK(d3[0].code == Errc::NotAProbabilityMeasure);
  CHECK(d3[0].witness.find("3/4") != std::string::npos);
}

TEST_CASE("side masses and balanced partitions: frozen examples") {
  CubeComplex sq = cx("cube(2)");
  Measure uni = uniform_on(4, {0, 1, 2, 3});
  for (HalfspaceId h = 0; h < 4; ++h)
    CHECK(measure_of_side(sq, uni, h) == Rat{1, 2});
  auto bp = balanced_partition(sq, uni);
  CHECK(bp.balanced.count() == 4);
  CHECK(bp.heavy.none());
  CHECK(bp.light.none());

  // Dirac mass: heavy = the ultrafilter of the charged vertex.
  Measure dirac = uniform_on(4, {2});
  auto bd = balanced_partition(sq, dirac);
  CHECK(bd.balanced.none());
  CHECK(bd.heavy == sq.vertex_bits(2));
  CHECK(bd.light == bits_of(4, {0, 3}));

  // Uniform mass on the three tripod leaves: the far side of each leg cut
  // carries 2/3.
  CubeComplex t = cx("tripod(1)");
  Measure leaves = uniform_on(4, {1, 2, 3});
  CHECK(measure_of_side(t, leaves, 0) == Rat{1, 3});
  auto bt = balanced_partition(t, leaves);
  CHECK(bt.balanced.none());
  CHECK(bt.heavy == bits_of(6, {1, 3, 5}));
  CHECK(bt.light == bits_of(6, {0, 2, 4}));
}

TEST_CASE("terminal elements: frozen sets") {
  Pocset p3 = path_pocset(3);
  Bits all(p3.halfspaces());
  all.set();
  auto t = terminal_elements(p3, all);
  CHECK(t.minimal == bits_of(6, {1, 4}));
  CHECK(t.maximal == bits_of(6, {0, 5}));
  CHECK(t.terminal == bits_of(6, {0, 1, 4, 5}));

  auto te = terminal_elements(p3, bits_of(6, {0, 2, 4}));
  CHECK(te.minimal == bits_of(6, {4}));
  CHECK(te.maximal == bits_of(6, {0}));

  // All four square halfspaces are both minimal and maximal.
  Pocset sq = cube_pocset(2);
  Bits sall(4);
  sall.set();
  auto ts = terminal_elements(sq, sall);
  CHECK(ts.minimal.count() == 4);
  CHECK(ts.maximal.count() == 4);
  CHECK(ts.terminal.count() == 4);

  CHECK(terminal_elements(p3, Bits(6)).terminal.none());
}

TEST_CASE("pinned regression: involution-closed sets escape the 2d bound") {
  // On a two-edge path with mass 1/2 at each end, every halfspace is
  // balanced and every one is terminal: 4 halfspaces > 2 * dimension = 2.
  // Only partial-choice chain unions obey the halfspace-count bound; the
  // hyperplane count of the terminal set still does.
  CubeComplex p2 = cx("path(2)");
  Measure ends = uniform_on(3, {0, 2});
  auto bp = balanced_partition(p2, ends);
  CHECK(bp.balanced.count() == 4);
  auto t = terminal_elements(p2.pocset(), bp.balanced);
  CHECK(t.minimal == bits_of(4, {1, 2}));
  CHECK(t.maximal == bits_of(4, {0, 3}));
  CHECK(t.terminal.count() == 4);
  CHECK(t.terminal.count() > 2 * p2.pocset().dimension());
  CHECK(testutil::pairs_touched(t.terminal) == 2);
  CHECK(testutil::pairs_touched(t.terminal) <= 2 * p2.pocset().dimension());
}

TEST_CASE("balanced partitions: partition, involution, between, facing") {
  std::mt19937_64 rng(246);
  for (int trial = 0; trial < 60; ++trial) {
    Pocset p = random_median_closure(rng, 4);
    CubeComplex c = CubeComplex::build(p);
    Measure m = testutil::random_measure(rng, c.vertex_count());
    REQUIRE(check_measure(c, m).empty());
    auto bp = balanced_partition(c, m);

    // partition of the halfspaces; involution fixes balanced, swaps the rest
    Bits all = bp.balanced | bp.heavy | bp.light;
    CHECK(all.count() == p.halfspaces());
    CHECK((bp.balanced & bp.heavy).none());
    CHECK((bp.balanced & bp.light).none());
    CHECK((bp.heavy & bp.light).none());
    for (HalfspaceId h = 0; h < p.halfspaces(); ++h) {
      CHECK(bp.balanced.test(h) == bp.balanced.test(partner(h)));
      CHECK(bp.heavy.test(h) == bp.light.test(partner(h)));
      CHECK(bp.balanced.test(h) ==
            (measure_of_side(c, m, h) == Rat{1, 2}));
      CHECK(bp.heavy.test(h) == (measure_of_side(c, m, h) > Rat{1, 2}));
    }

    // nested members trap everything between them, in balanced and in heavy
    for (HalfspaceId h = 0; h < p.halfspaces(); ++h)
      for (HalfspaceId k = 0; k < p.halfspaces(); ++k) {
        if (!p.less(h, k)) continue;
        for (HalfspaceId mid = 0; mid < p.halfspaces(); ++mid) {
          if (!(p.less(h, mid) && p.less(mid, k))) continue;
          if (bp.balanced.test(h) && bp.balanced.test(k))
            CHECK(bp.balanced.test(mid));
          if (bp.heavy.test(h) && bp.heavy.test(k)) CHECK(bp.heavy.test(mid));
        }
        // exact nested-difference mass: mu(k \ h) = 0 for balanced h < k
        if (bp.balanced.test(h) && bp.balanced.test(k)) {
          Rat diff = 0;
          for (VertexId v = 0; v < c.vertex_count(); ++v)
            if (c.vertex_in(v, k) && !c.vertex_in(v, h)) diff += m.weight[v];
          CHECK(diff == Rat{0});
        }
      }

    // no facing triple among balanced halfspaces
    for (const auto& tr : facing_triples(p))
      CHECK_FALSE((bp.balanced.test(tr[0]) && bp.balanced.test(tr[1]) &&
                   bp.balanced.test(tr[2])));
  }
}

TEST_CASE("equivariance of the balanced partition") {
  CubeComplex t = cx("tripod(1)");
  Automorphism rot{2, 3, 4, 5, 0, 1};
  std::mt19937_64 rng(135);
  for (int trial = 0; trial < 20; ++trial) {
    Measure m = testutil::random_measure(rng, t.vertex_count());
    Measure moved = push_forward(t, rot, m);
    REQUIRE(check_measure(t, moved).empty());
    auto before = balanced_partition(t, m);
    auto after = balanced_partition(t, moved);
    for (HalfspaceId h = 0; h < 6; ++h) {
      CHECK(after.balanced.test(rot[h]) == before.balanced.test(h));
      CHECK(after.heavy.test(rot[h]) == before.heavy.test(h));
    }
  }

  // push_forward moves Dirac masses along the vertex action
  Measure d1 = uniform_on(4, {1});
  Measure d2 = push_forward(t, rot, d1);
  CHECK(d2.weight[apply_to_vertex(t, rot, 1)] == Rat{1});
}

TEST_CASE("balanced subcomplexes are intervals realized inside the complex") {
  CubeComplex sq = cx("cube(2)");
  auto bs = balanced_subcomplex(sq, uniform_on(4, {0, 1, 2, 3}));
  CHECK(bs.lift.sub.pairs() == 2);
  CHECK(bs.lift.complex.vertex_count() == 4);
  CHECK(bs.lift.complex.opposite(bs.witness.first) == bs.witness.second);

  auto bd = balanced_subcomplex(sq, uniform_on(4, {2}));
  CHECK(bd.lift.complex.vertex_count() == 1);
  CHECK(bd.witness.first == bd.witness.second);
  CHECK(bd.lift.embed[bd.witness.first] == 2);

  std::mt19937_64 rng(864);
  for (int trial = 0; trial < 40; ++trial) {
    Pocset p = random_median_closure(rng, 4);
    CubeComplex c = CubeComplex::build(p);
    Measure m = testutil::random_measure(rng, c.vertex_count());
    auto bs2 = balanced_subcomplex(c, m);
    auto bp = balanced_partition(c, m);
    CHECK(2 * bs2.lift.sub.pairs() == bp.balanced.count());
    CHECK(bs2.lift.complex.opposite(bs2.witness.first) == bs2.witness.second);
    // the embedded witness endpoints live on the heavy side of every
    // heavy halfspace
    for (std::size_t h = bp.heavy.find_first(); h != Bits::npos;
         h = bp.heavy.find_next(h)) {
      CHECK(c.vertex_in(bs2.lift.embed[bs2.witness.first],
                        static_cast<HalfspaceId>(h)));
      CHECK(c.vertex_in(bs2.lift.embed[bs2.witness.second],
                        static_cast<HalfspaceId>(h)));
    }
  }
}

TEST_CASE("partial-choice chain unions obey the 2d terminal bound") {
  std::mt19937_64 rng(1089);
  int nonempty = 0;
  for (int trial = 0; trial < 80; ++trial) {
    Pocset p = random_median_closure(rng, 4);
    CubeComplex c = CubeComplex::build(p);
    // Uniform measures keep many hyperplanes balanced; alternate with fully
    // random weights so skewed partitions are exercised too.
    Measure m = trial % 2 == 0
                    ? Measure(std::vector<Rat>(c.vertex_count(),
                                               Rat(1, c.vertex_count())))
                    : testutil::random_measure(rng, c.vertex_count());
    auto bp = balanced_partition(c, m);
    Bits s = testutil::random_chain_union(rng, p, bp.balanced);
    if (s.none()) continue;
    ++nonempty;
    auto t = terminal_elements(p, s);
    CHECK(t.terminal.count() <= 2 * p.dimension());
    CHECK(t.terminal.is_subset_of(s));
    // hyperplane count of the full balanced terminal set
    auto tfull = terminal_elements(p, bp.balanced);
    CHECK(testutil::pairs_touched(tfull.terminal) <= 2 * p.dimension());
  }
  CHECK(nonempty > 10);
}
