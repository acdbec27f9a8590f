// cubecomb: generators for standard example pocsets.
//
// SPDX-License-Identifier: MIT
#include "cubecomb/generators.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cubecomb/errors.hpp"

namespace cubecomb {

namespace {

using Gen = std::vector<std::pair<HalfspaceId, HalfspaceId>>;

HalfspaceId even(std::uint32_t pair) { return 2 * pair; }
HalfspaceId odd(std::uint32_t pair) { return 2 * pair + 1; }

}  // namespace

Pocset cube_pocset(unsigned k) {
  if (k > 20) throw Error(Errc::BadParams, "cube rank > 20");
  return Pocset::from_generators(k, {});
}

Pocset path_pocset(unsigned length) {
  Gen gen;
  for (unsigned i = 0; i + 1 < length; ++i)
    gen.emplace_back(even(i + 1), even(i));
  return Pocset::from_generators(length, gen);
}

Pocset tripod_pocset(unsigned leg) {
  if (leg == 0) throw Error(Errc::BadParams, "tripod leg length 0");
  auto pair_at = [leg](unsigned l, unsigned s) { return l * leg + s; };
  Gen gen;
  for (unsigned l = 0; l < 3; ++l)
    for (unsigned s = 0; s + 1 < leg; ++s)
      gen.emplace_back(even(pair_at(l, s + 1)), even(pair_at(l, s)));
  for (unsigned l = 0; l < 3; ++l)
    for (unsigned l2 = 0; l2 < 3; ++l2)
      if (l != l2) gen.emplace_back(even(pair_at(l, 0)), odd(pair_at(l2, 0)));
  return Pocset::from_generators(3 * leg, gen);
}

Pocset grid_pocset(unsigned a, unsigned b) {
  return product_pocset(path_pocset(a), path_pocset(b));
}

Pocset product_pocset(const Pocset& a, const Pocset& b) {
  const std::size_t ha = a.halfspaces();
  Gen gen;
  for (HalfspaceId x = 0; x < ha; ++x)
    for (HalfspaceId y = 0; y < ha; ++y)
      if (a.less(x, y)) gen.emplace_back(x, y);
  for (HalfspaceId x = 0; x < b.halfspaces(); ++x)
    for (HalfspaceId y = 0; y < b.halfspaces(); ++y)
      if (b.less(x, y))
        gen.emplace_back(static_cast<HalfspaceId>(x + ha),
                         static_cast<HalfspaceId>(y + ha));
  return Pocset::from_generators(a.pairs() + b.pairs(), gen);
}

Pocset bowtie_pocset() {
  // Pairs 0, 1 span one square, pairs 2, 3 the other; even sides point away
  // from the shared corner, so each a-halfspace faces each b-halfspace.
  Gen gen;
  for (std::uint32_t i : {0u, 1u})
    for (std::uint32_t j : {2u, 3u}) gen.emplace_back(even(i), odd(j));
  return Pocset::from_generators(4, gen);
}

std::vector<std::uint32_t> median_closure_points(
    unsigned k, std::vector<std::uint32_t> seeds) {
  if (k == 0 || k > 16) throw Error(Errc::BadParams, "ambient rank not in [1, 16]");
  if (seeds.empty()) throw Error(Errc::BadParams, "no seed corners");
  for (auto s : seeds)
    if (s >= (1u << k)) throw Error(Errc::BadParams, "seed corner out of range");

  std::set<std::uint32_t> closed(seeds.begin(), seeds.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint32_t> cur(closed.begin(), closed.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        for (std::size_t l = j + 1; l < cur.size(); ++l) {
          std::uint32_t m = (cur[i] & cur[j]) | (cur[j] & cur[l]) |
                            (cur[l] & cur[i]);
          if (closed.insert(m).second) grew = true;
        }
  }
  return {closed.begin(), closed.end()};
}

Pocset median_closure_pocset(unsigned k, std::vector<std::uint32_t> seeds) {
  auto pts = median_closure_points(k, std::move(seeds));

  // Coordinate splits of the closed set, deduplicated as unordered
  // partitions and with constant coordinates dropped. The even side is the
  // one missing the smallest point, so vertex numbering starts there.
  std::vector<Bits> sides;  // bit i = pts[i] on the even side
  std::set<Bits> seen;
  for (unsigned c = 0; c < k; ++c) {
    Bits on(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
      if ((pts[i] >> c) & 1u) on.set(i);
    if (on.none() || on.all()) continue;
    Bits ev = on.test(0) ? ~on : on;
    if (seen.insert(ev).second) sides.push_back(std::move(ev));
  }

  const std::size_t np = sides.size();
  Gen gen;
  auto side_mask = [&](HalfspaceId h) {
    return h % 2 == 0 ? sides[h / 2] : ~sides[h / 2];
  };
  for (HalfspaceId x = 0; x < 2 * np; ++x)
    for (HalfspaceId y = 0; y < 2 * np; ++y) {
      if (x == y || (x >> 1) == (y >> 1)) continue;
      if (side_mask(x).is_proper_subset_of(side_mask(y)))
        gen.emplace_back(x, y);
    }
  return Pocset::from_generators(np, gen);
}

namespace {

// Minimal recursive-descent parser for kind expressions.
struct KindParser {
  const std::string& s;
  std::size_t i = 0;

  explicit KindParser(const std::string& str) : s(str) {}

  [[noreturn]] void fail(const std::string& why) {
    std::ostringstream os;
    os << "bad kind expression '" << s << "': " << why;
    throw Error(Errc::BadParams, os.str());
  }
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string word() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      ++i;
    if (i == start) fail("expected a name");
    return s.substr(start, i - start);
  }
  unsigned number() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected a number");
    return static_cast<unsigned>(std::stoul(s.substr(start, i - start)));
  }

  Pocset expr() {
    std::string name = word();
    if (name == "bowtie") return bowtie_pocset();
    if (name == "cube") {
      expect('(');
      unsigned k = number();
      expect(')');
      return cube_pocset(k);
    }
    if (name == "path") {
      expect('(');
      unsigned l = number();
      expect(')');
      return path_pocset(l);
    }
    if (name == "tripod") {
      expect('(');
      unsigned l = number();
      expect(')');
      return tripod_pocset(l);
    }
    if (name == "grid") {
      expect('(');
      unsigned a = number();
      expect(',');
      unsigned b = number();
      expect(')');
      return grid_pocset(a, b);
    }
    if (name == "product") {
      expect('(');
      Pocset a = expr();
      expect(',');
      Pocset b = expr();
      expect(')');
      return product_pocset(a, b);
    }
    if (name == "median_closure") {
      expect('(');
      unsigned k = number();
      expect(';');
      std::vector<std::uint32_t> seeds;
      do {
        skip_ws();
        std::uint32_t mask = 0;
        unsigned bits = 0;
        while (i < s.size() && (s[i] == '0' || s[i] == '1')) {
          if (s[i] == '1') mask |= 1u << bits;
          ++bits;
          ++i;
        }
        if (bits != k) fail("seed bitstring length != rank");
        seeds.push_back(mask);
      } while (eat(','));
      expect(')');
      return median_closure_pocset(k, std::move(seeds));
    }
    fail("unknown kind '" + name + "'");
  }
};

}  // namespace

Pocset generate(const std::string& kind_expr) {
  KindParser p(kind_expr);
  Pocset out = p.expr();
  p.skip_ws();
  if (p.i != kind_expr.size()) p.fail("trailing characters");
  return out;
}

Pocset random_median_closure(std::mt19937_64& rng, unsigned max_k) {
  unsigned k = std::uniform_int_distribution<unsigned>(1, max_k)(rng);
  std::uint32_t limit = 1u << k;
  unsigned lo = std::min<std::uint32_t>(3, limit);
  unsigned hi = std::min<std::uint32_t>(limit, 12);
  unsigned count = std::uniform_int_distribution<unsigned>(lo, hi)(rng);
  std::set<std::uint32_t> seeds;
  std::uniform_int_distribution<std::uint32_t> corner(0, limit - 1);
  while (seeds.size() < count && seeds.size() < limit) seeds.insert(corner(rng));
  return median_closure_pocset(k, {seeds.begin(), seeds.end()});
}

Graph random_tree(std::mt19937_64& rng, unsigned n) {
  if (n == 0) throw Error(Errc::BadParams, "tree with no vertices");
  Graph g;
  g.n = n;
  for (unsigned v = 1; v < n; ++v) {
    std::uniform_int_distribution<unsigned> parent(0, v - 1);
    g.edges.emplace_back(parent(rng), v);
  }
  return g;
}

}  // namespace cubecomb
