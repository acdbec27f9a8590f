// Inseparable closures, window UBS predicates, and the transfer character
// over unions of Z-chains.
//
// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cubecomb/boundary.hpp"
#include "cubecomb/errors.hpp"
#include "cubecomb/generators.hpp"

using namespace cubecomb;

namespace {

Bits pairs_bits(std::size_t n, std::vector<std::uint32_t> ps) {
  Bits b(n);
  for (auto q : ps) b.set(q);
  return b;
}

ZAction shift_one_ray(long long k) {
  ZAction g = ZAction::identity(1);
  g.shift[0] = k;
  return g;
}

}  // namespace

TEST_CASE("hyperplane separation: frozen cases") {
  Pocset p3 = path_pocset(3);
  CHECK(separates(p3, 1, 0, 2));
  CHECK(separates(p3, 1, 2, 0));
  CHECK_FALSE(separates(p3, 0, 1, 2));
  CHECK_FALSE(separates(p3, 2, 0, 1));
  CHECK_FALSE(separates(p3, 0, 0, 2));  // w must differ from both

  Pocset sq = cube_pocset(2);
  CHECK_FALSE(separates(sq, 0, 1, 1));

  // In the tripod no leg separates the other two.
  Pocset t = tripod_pocset(1);
  CHECK_FALSE(separates(t, 0, 1, 2));
  CHECK_FALSE(separates(t, 1, 0, 2));
  CHECK_FALSE(separates(t, 2, 0, 1));

  // With doubled legs the inner cut separates its own outer cut from the
  // other legs.
  Pocset t2 = tripod_pocset(2);
  CHECK(separates(t2, 0, 1, 2));
  CHECK_FALSE(separates(t2, 1, 0, 2));
}

TEST_CASE("inseparable closure: frozen, idempotent, monotone") {
  Pocset p3 = path_pocset(3);
  CHECK(inseparable_closure(p3, pairs_bits(3, {0, 2})) ==
        pairs_bits(3, {0, 1, 2}));
  CHECK(inseparable_closure(p3, pairs_bits(3, {0, 1})) ==
        pairs_bits(3, {0, 1}));
  CHECK(inseparable_closure(p3, pairs_bits(3, {1})) == pairs_bits(3, {1}));
  CHECK(inseparable_closure(p3, Bits(3)) == Bits(3));

  std::mt19937_64 rng(1212);
  for (int trial = 0; trial < 30; ++trial) {
    Pocset p = random_median_closure(rng, 4);
    Bits s(p.pairs());
    for (std::uint32_t q = 0; q < p.pairs(); ++q)
      if (rng() % 3 == 0) s.set(q);
    Bits cl = inseparable_closure(p, s);
    CHECK(s.is_subset_of(cl));
    CHECK(inseparable_closure(p, cl) == cl);  // idempotent
    Bits bigger = s;
    if (p.pairs() > 0) bigger.set(rng() % p.pairs());
    CHECK(cl.is_subset_of(inseparable_closure(p, bigger)));  // monotone
    // the closure really contains every separator of two members
    for (std::uint32_t w = 0; w < p.pairs(); ++w)
      for (std::size_t a = cl.find_first(); a != Bits::npos;
           a = cl.find_next(a))
        for (std::size_t b = cl.find_first(); b != Bits::npos;
             b = cl.find_next(b))
          if (separates(p, w, static_cast<std::uint32_t>(a),
                        static_cast<std::uint32_t>(b)))
            CHECK(cl.test(w));
  }
}

TEST_CASE("window UBS predicates") {
  Pocset p5 = path_pocset(5);
  Bits all5(5);
  all5.set();
  UbsReport full = ubs_window_check(p5, all5);
  CHECK(full.inseparable);
  CHECK(full.unidirectional);
  CHECK(full.facing_triple_free);
  CHECK(full.pass());
  CHECK(full.window_approx);
  CHECK_FALSE(full.empty_warning);
  CHECK(full.witness.empty());

  // A gap breaks inseparability and the witness names the missing pair.
  UbsReport gap = ubs_window_check(path_pocset(3), pairs_bits(3, {0, 2}));
  CHECK_FALSE(gap.inseparable);
  CHECK_FALSE(gap.pass());
  CHECK(gap.witness.find("1") != std::string::npos);

  // The tripod legs form a facing triple.
  Bits legs(3);
  legs.set();
  UbsReport tri = ubs_window_check(tripod_pocset(1), legs);
  CHECK(tri.inseparable);
  CHECK(tri.unidirectional);
  CHECK_FALSE(tri.facing_triple_free);
  CHECK_FALSE(tri.pass());
  CHECK_FALSE(tri.witness.empty());

  UbsReport empty = ubs_window_check(p5, Bits(5));
  CHECK(empty.pass());
  CHECK(empty.empty_warning);
}

TEST_CASE("Z-sets: membership, toggles, symmetric differences") {
  ZSet m = ZSet::tails(2, {0, 1}, {1, 0});
  CHECK(m.contains(0, 5));        // pos tail of ray 0 is 1
  CHECK_FALSE(m.contains(0, -5)); // neg tail of ray 0 is 0
  CHECK(m.contains(1, -3));
  CHECK_FALSE(m.contains(1, 0));
  m.toggle(0, 5);
  CHECK_FALSE(m.contains(0, 5));
  m.toggle(0, 5);
  CHECK(m.contains(0, 5));

  ZSet o = ZSet::tails(2, {0, 1}, {1, 0});
  o.toggle(0, 3);
  o.toggle(1, -7);
  auto diff = m.finite_symmetric_difference(o);
  REQUIRE(diff.has_value());
  CHECK(*diff == 2);
  CHECK(*o.finite_symmetric_difference(o) == 0);

  ZSet other_tails = ZSet::tails(2, {1, 1}, {1, 0});
  CHECK_FALSE(m.finite_symmetric_difference(other_tails).has_value());
  ZSet fewer = ZSet::tails(1, {0}, {1});
  CHECK_FALSE(m.finite_symmetric_difference(fewer).has_value());

  CHECK_THROWS_AS(ZSet::tails(2, {0}, {1, 0}), Error);
}

TEST_CASE("Z-actions: composition, inversion, preimages") {
  ZAction id = ZAction::identity(3);
  CHECK(id.valid());
  ZAction g{{1, 2, 0}, {4, -1, 7}};
  CHECK(g.valid());
  ZAction bad{{0, 0, 1}, {0, 0, 0}};
  CHECK_FALSE(bad.valid());
  ZAction short_shift{{0, 1}, {3}};
  CHECK_FALSE(short_shift.valid());

  ZAction gi = inverse(g);
  ZAction round = compose(g, gi);
  CHECK(round.ray_perm == id.ray_perm);
  CHECK(round.shift == id.shift);
  ZAction round2 = compose(gi, g);
  CHECK(round2.ray_perm == id.ray_perm);
  CHECK(round2.shift == id.shift);

  // preimage membership: x in g^{-1}M iff g(x) in M
  std::mt19937_64 rng(515);
  for (int trial = 0; trial < 20; ++trial) {
    ZSet m = ZSet::tails(3, {static_cast<char>(rng() % 2),
                             static_cast<char>(rng() % 2),
                             static_cast<char>(rng() % 2)},
                         {static_cast<char>(rng() % 2),
                          static_cast<char>(rng() % 2),
                          static_cast<char>(rng() % 2)});
    for (int i = 0; i < 6; ++i)
      m.toggle(rng() % 3, static_cast<long long>(rng() % 21) - 10);
    ZSet pre = preimage(g, m);
    for (unsigned r = 0; r < 3; ++r)
      for (long long i = -15; i <= 15; ++i)
        CHECK(pre.contains(r, i) ==
              m.contains(g.ray_perm[r], i + g.shift[r]));
  }

  CHECK_THROWS_AS(preimage(bad, ZSet::tails(3, {0, 0, 0}, {1, 1, 1})), Error);
  CHECK_THROWS_AS(preimage(id, ZSet::tails(2, {0, 0}, {1, 1})), Error);
}

TEST_CASE("transfer character: frozen values") {
  // Half-line on one ray: shifting by k transfers -k.
  ZSet half = ZSet::tails(1, {0}, {1});
  for (long long k = -4; k <= 4; ++k)
    CHECK(transfer_character(half, shift_one_ray(k)) == -k);
  CHECK(transfer_character(half, ZAction::identity(1)) == 0);

  // Finite sets transfer zero under every action.
  ZSet finite = ZSet::tails(1, {0}, {0});
  finite.toggle(0, 2);
  finite.toggle(0, -9);
  for (long long k = -3; k <= 3; ++k)
    CHECK(transfer_character(finite, shift_one_ray(k)) == 0);

  // The complement of a half-line transfers with the opposite sign.
  ZSet cohalf = ZSet::tails(1, {1}, {0});
  for (long long k = -4; k <= 4; ++k)
    CHECK(transfer_character(cohalf, shift_one_ray(k)) == k);

  // Tail mismatch along the ray permutation is not representable.
  ZSet two = ZSet::tails(2, {0, 0}, {1, 0});
  ZAction swap{{1, 0}, {0, 0}};
  try {
    transfer_character(two, swap);
    FAIL("mismatched tails accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotRepresentable);
  }
  // Matching tails across the swapped rays are fine.
  ZSet sym = ZSet::tails(2, {0, 0}, {1, 1});
  sym.toggle(0, 3);
  CHECK(transfer_character(sym, swap) == 0);
}

TEST_CASE("transfer character: invariance and the homomorphism law") {
  std::mt19937_64 rng(2626);
  for (int trial = 0; trial < 40; ++trial) {
    // Same tails on every ray keeps all preimages commensurate.
    unsigned rays = 1 + static_cast<unsigned>(rng() % 3);
    char lo = static_cast<char>(rng() % 2), hi = static_cast<char>(rng() % 2);
    ZSet m = ZSet::tails(rays, std::vector<char>(rays, lo),
                         std::vector<char>(rays, hi));
    for (int i = 0; i < 5; ++i)
      m.toggle(rng() % rays, static_cast<long long>(rng() % 13) - 6);

    auto random_action = [&] {
      std::vector<std::uint32_t> perm(rays);
      for (unsigned r = 0; r < rays; ++r) perm[r] = r;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<long long> sh(rays);
      for (auto& s : sh) s = static_cast<long long>(rng() % 9) - 4;
      return ZAction{perm, sh};
    };
    ZAction g = random_action(), h = random_action();

    // homomorphism
    CHECK(transfer_character(m, compose(g, h)) ==
          transfer_character(m, g) + transfer_character(m, h));
    // inverse = negation
    CHECK(transfer_character(m, inverse(g)) == -transfer_character(m, g));
    // commensuration invariance: finite toggling never moves the value
    ZSet m2 = m;
    for (int i = 0; i < 4; ++i)
      m2.toggle(rng() % rays, static_cast<long long>(rng() % 13) - 6);
    CHECK(transfer_character(m2, g) == transfer_character(m, g));
  }
}
