// cubecomb: parsing and emitting the plain-text document format.
//
// SPDX-License-Identifier: MIT
#include "cubecomb/document.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cubecomb/errors.hpp"

namespace cubecomb {

namespace {

struct Line {
  std::size_t number;  // 1-based, in the original text
  std::string text;    // comment-stripped, trimmed, nonempty
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::size_t b = raw.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = raw.find_last_not_of(" \t\r");
    out.push_back({no, raw.substr(b, e - b + 1)});
  }
  return out;
}

[[noreturn]] void fail(Errc code, std::size_t line, const std::string& why) {
  std::ostringstream os;
  os << "line " << line << ": " << why;
  throw Error(code, os.str());
}

// Splits a line into whitespace-separated tokens.
std::vector<std::string> tokens_of(const Line& l) {
  std::istringstream in(l.text);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

long long parse_int(const Line& l, const std::string& tok) {
  std::size_t used = 0;
  long long v;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    fail(Errc::SyntaxError, l.number, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size())
    fail(Errc::SyntaxError, l.number, "trailing characters in '" + tok + "'");
  return v;
}

unsigned long long parse_count(const Line& l, const std::string& tok) {
  long long v = parse_int(l, tok);
  if (v < 0) fail(Errc::SyntaxError, l.number, "negative count");
  return static_cast<unsigned long long>(v);
}

}  // namespace

Document parse_document(const std::string& text) {
  auto lines = significant_lines(text);
  if (lines.empty())
    throw Error(Errc::SyntaxError, "line 1: missing version line");
  if (lines[0].text != "cubecomb 1")
    fail(Errc::SyntaxError, lines[0].number,
         "expected version line 'cubecomb 1'");

  Document doc;
  std::size_t i = 1;
  auto at_section = [&]() {
    return i < lines.size() && lines[i].text.front() == '[';
  };

  while (i < lines.size()) {
    const Line& head = lines[i];
    if (head.text.front() != '[')
      fail(Errc::SyntaxError, head.number, "expected a [section] header");
    const std::string section = head.text;
    ++i;

    if (section == "[pocset]") {
      if (i >= lines.size())
        fail(Errc::SyntaxError, head.number, "missing pair count");
      std::size_t pairs = parse_count(lines[i], lines[i].text);
      auto counted = lines[i];
      if (tokens_of(counted).size() != 1)
        fail(Errc::SyntaxError, counted.number, "expected a bare pair count");
      ++i;
      std::vector<std::pair<HalfspaceId, HalfspaceId>> gen;
      while (i < lines.size() && !at_section()) {
        auto toks = tokens_of(lines[i]);
        if (toks.size() != 2)
          fail(Errc::SyntaxError, lines[i].number, "expected 'a b'");
        long long a = parse_int(lines[i], toks[0]);
        long long b = parse_int(lines[i], toks[1]);
        if (a < 0 || b < 0 || a >= static_cast<long long>(2 * pairs) ||
            b >= static_cast<long long>(2 * pairs)) {
          std::ostringstream os;
          os << "halfspace id out of range in '" << lines[i].text << "'";
          fail(Errc::IdOutOfRange, lines[i].number, os.str());
        }
        gen.emplace_back(static_cast<HalfspaceId>(a),
                         static_cast<HalfspaceId>(b));
        ++i;
      }
      doc.pocset = Pocset::from_generators(pairs, gen);
    } else if (section == "[graph]") {
      if (i >= lines.size())
        fail(Errc::SyntaxError, head.number, "missing vertex count");
      std::size_t n = parse_count(lines[i], lines[i].text);
      if (tokens_of(lines[i]).size() != 1)
        fail(Errc::SyntaxError, lines[i].number, "expected a bare vertex count");
      ++i;
      Graph g;
      g.n = n;
      while (i < lines.size() && !at_section()) {
        auto toks = tokens_of(lines[i]);
        if (toks.size() != 2)
          fail(Errc::SyntaxError, lines[i].number, "expected 'u v'");
        long long u = parse_int(lines[i], toks[0]);
        long long v = parse_int(lines[i], toks[1]);
        if (u < 0 || v < 0 || u >= static_cast<long long>(n) ||
            v >= static_cast<long long>(n))
          fail(Errc::IdOutOfRange, lines[i].number, "vertex id out of range");
        g.edges.emplace_back(static_cast<VertexId>(u),
                             static_cast<VertexId>(v));
        ++i;
      }
      doc.graph = std::move(g);
    } else if (section == "[automorphisms]") {
      if (!doc.pocset)
        fail(Errc::SyntaxError, head.number,
             "[automorphisms] requires a preceding [pocset]");
      const std::size_t H = doc.pocset->halfspaces();
      while (i < lines.size() && !at_section()) {
        auto toks = tokens_of(lines[i]);
        if (toks.size() != H) {
          std::ostringstream os;
          os << "expected " << H << " image ids, got " << toks.size();
          fail(Errc::SyntaxError, lines[i].number, os.str());
        }
        Automorphism g(H);
        for (std::size_t x = 0; x < H; ++x) {
          long long v = parse_int(lines[i], toks[x]);
          if (v < 0 || v >= static_cast<long long>(H))
            fail(Errc::IdOutOfRange, lines[i].number,
                 "halfspace id out of range");
          g[x] = static_cast<HalfspaceId>(v);
        }
        doc.automorphisms.push_back(std::move(g));
        ++i;
      }
    } else if (section == "[measure]") {
      RawMeasure m;
      while (i < lines.size() && !at_section()) {
        auto toks = tokens_of(lines[i]);
        if (toks.size() != 2)
          fail(Errc::SyntaxError, lines[i].number,
               "expected 'vertex numerator/denominator'");
        long long v = parse_int(lines[i], toks[0]);
        if (v < 0)
          fail(Errc::IdOutOfRange, lines[i].number, "negative vertex id");
        auto slash = toks[1].find('/');
        long long num, den = 1;
        if (slash == std::string::npos) {
          num = parse_int(lines[i], toks[1]);
        } else {
          num = parse_int(lines[i], toks[1].substr(0, slash));
          den = parse_int(lines[i], toks[1].substr(slash + 1));
        }
        if (den <= 0)
          fail(Errc::SyntaxError, lines[i].number, "denominator must be > 0");
        m.weights.emplace_back(static_cast<VertexId>(v), Rat{num, den});
        ++i;
      }
      doc.measure = std::move(m);
    } else if (section == "[tournament]") {
      if (i >= lines.size())
        fail(Errc::SyntaxError, head.number, "missing vertex count");
      std::size_t n = parse_count(lines[i], lines[i].text);
      if (tokens_of(lines[i]).size() != 1)
        fail(Errc::SyntaxError, lines[i].number, "expected a bare vertex count");
      ++i;
      std::vector<std::pair<unsigned, unsigned>> edges;
      while (i < lines.size() && !at_section()) {
        auto toks = tokens_of(lines[i]);
        if (toks.size() != 2)
          fail(Errc::SyntaxError, lines[i].number, "expected 'u v'");
        long long u = parse_int(lines[i], toks[0]);
        long long v = parse_int(lines[i], toks[1]);
        if (u < 0 || v < 0 || u >= static_cast<long long>(n) ||
            v >= static_cast<long long>(n) || u == v)
          fail(Errc::IdOutOfRange, lines[i].number, "vertex id out of range");
        edges.emplace_back(static_cast<unsigned>(u), static_cast<unsigned>(v));
        ++i;
      }
      doc.tournament = Tournament::from_edges(static_cast<unsigned>(n), edges);
    } else if (section == "[universe]") {
      UniverseSection u;
      if (i >= lines.size())
        fail(Errc::SyntaxError, head.number, "missing 'rays <m>' line");
      {
        auto toks = tokens_of(lines[i]);
        if (toks.size() != 2 || toks[0] != "rays")
          fail(Errc::SyntaxError, lines[i].number, "expected 'rays <m>'");
        unsigned rays = static_cast<unsigned>(parse_count(lines[i], toks[1]));
        u.set = ZSet::tails(rays, std::vector<char>(rays, 0),
                            std::vector<char>(rays, 0));
        ++i;
      }
      while (i < lines.size() && !at_section()) {
        auto toks = tokens_of(lines[i]);
        if (toks[0] == "tail") {
          if (toks.size() != 4)
            fail(Errc::SyntaxError, lines[i].number,
                 "expected 'tail <ray> <neg> <pos>'");
          long long r = parse_int(lines[i], toks[1]);
          long long neg = parse_int(lines[i], toks[2]);
          long long pos = parse_int(lines[i], toks[3]);
          if (r < 0 || r >= static_cast<long long>(u.set.rays))
            fail(Errc::IdOutOfRange, lines[i].number, "ray id out of range");
          if ((neg != 0 && neg != 1) || (pos != 0 && pos != 1))
            fail(Errc::SyntaxError, lines[i].number, "tails must be 0 or 1");
          u.set.neg_tail[r] = static_cast<char>(neg);
          u.set.pos_tail[r] = static_cast<char>(pos);
        } else if (toks[0] == "flip") {
          if (toks.size() != 3)
            fail(Errc::SyntaxError, lines[i].number,
                 "expected 'flip <ray> <index>'");
          long long r = parse_int(lines[i], toks[1]);
          if (r < 0 || r >= static_cast<long long>(u.set.rays))
            fail(Errc::IdOutOfRange, lines[i].number, "ray id out of range");
          u.set.toggle(static_cast<unsigned>(r), parse_int(lines[i], toks[2]));
        } else if (toks[0] == "act") {
          const std::size_t rays = u.set.rays;
          if (toks.size() != 2 * rays + 2 || toks[rays + 1] != "/")
            fail(Errc::SyntaxError, lines[i].number,
                 "expected 'act <perm ids> / <shifts>'");
          ZAction g;
          for (std::size_t r = 0; r < rays; ++r) {
            long long v = parse_int(lines[i], toks[1 + r]);
            if (v < 0 || v >= static_cast<long long>(rays))
              fail(Errc::IdOutOfRange, lines[i].number, "ray id out of range");
            g.ray_perm.push_back(static_cast<std::uint32_t>(v));
          }
          for (std::size_t r = 0; r < rays; ++r)
            g.shift.push_back(parse_int(lines[i], toks[rays + 2 + r]));
          if (!g.valid())
            fail(Errc::SyntaxError, lines[i].number,
                 "ray images are not a permutation");
          u.actions.push_back(std::move(g));
        } else {
          fail(Errc::SyntaxError, lines[i].number,
               "expected 'tail', 'flip' or 'act'");
        }
        ++i;
      }
      doc.universe = std::move(u);
    } else {
      fail(Errc::UnknownSection, head.number, "unknown section " + section);
    }
  }
  return doc;
}

Document parse_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::SyntaxError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

void emit_version(std::ostream& out) { out << "cubecomb 1\n"; }

void emit_pocset(std::ostream& out, const Pocset& p) {
  out << "[pocset]\n" << p.pairs() << "\n";
  for (HalfspaceId a = 0; a < p.halfspaces(); ++a)
    for (HalfspaceId b = 0; b < p.halfspaces(); ++b)
      if (p.less(a, b)) out << a << " " << b << "\n";
}

void emit_graph(std::ostream& out, const Graph& g) {
  out << "[graph]\n" << g.n << "\n";
  for (auto [u, v] : g.edges) out << u << " " << v << "\n";
}

void emit_automorphisms(std::ostream& out,
                        const std::vector<Automorphism>& gs) {
  out << "[automorphisms]\n";
  for (const auto& g : gs) {
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (x) out << " ";
      out << g[x];
    }
    out << "\n";
  }
}

void emit_measure(std::ostream& out, const Measure& m) {
  out << "[measure]\n";
  for (std::size_t v = 0; v < m.weight.size(); ++v)
    if (m.weight[v] != Rat{0})
      out << v << " " << m.weight[v].numerator() << "/"
          << m.weight[v].denominator() << "\n";
}

void emit_tournament(std::ostream& out, const Tournament& t) {
  out << "[tournament]\n" << t.n << "\n";
  for (unsigned u = 0; u < t.n; ++u)
    for (unsigned v = 0; v < t.n; ++v)
      if (u != v && t.edge(u, v)) out << u << " " << v << "\n";
}

void emit_universe(std::ostream& out, const UniverseSection& u) {
  out << "[universe]\nrays " << u.set.rays << "\n";
  for (unsigned r = 0; r < u.set.rays; ++r)
    out << "tail " << r << " " << static_cast<int>(u.set.neg_tail[r]) << " "
        << static_cast<int>(u.set.pos_tail[r]) << "\n";
  for (unsigned r = 0; r < u.set.rays; ++r)
    for (long long x : u.set.toggles[r]) out << "flip " << r << " " << x << "\n";
  for (const auto& g : u.actions) {
    out << "act";
    for (std::uint32_t x : g.ray_perm) out << " " << x;
    out << " /";
    for (long long s : g.shift) out << " " << s;
    out << "\n";
  }
}

}  // namespace cubecomb
