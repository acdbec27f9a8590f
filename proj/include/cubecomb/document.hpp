// cubecomb: the plain-text document format shared by the CLI, golden tests
// and the verification reports.
//
// A document is line oriented; `#` starts a comment, blank lines are
// ignored. It must begin with the version line `cubecomb 1`, followed by
// named sections:
//
//   [pocset]          pair count, then generating strict containments:
//     <pairs>         one `a b` line per relation a < b (halfspace ids)
//     <a> <b>
//   [graph]           vertex count, then `u v` edge lines (0-based)
//   [automorphisms]   one automorphism per line: the 2n image ids
//   [measure]         lines `vertex numerator/denominator`
//   [tournament]      vertex count, then `u v` lines meaning edge u -> v
//   [universe]        `rays <m>`, then per-ray lines
//     tail <ray> <neg> <pos>      eventual 0/1 membership at -inf / +inf
//     flip <ray> <index>          toggle one cell
//     act <m perm ids> / <m shifts>
//
// Unknown sections are rejected; every parse error carries its line number.
//
// SPDX-License-Identifier: MIT
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cubecomb/action.hpp"
#include "cubecomb/boundary.hpp"
#include "cubecomb/cube_complex.hpp"
#include "cubecomb/measure.hpp"
#include "cubecomb/pocset.hpp"
#include "cubecomb/tournament.hpp"

namespace cubecomb {

struct RawMeasure {  // resolved against the complex later
  std::vector<std::pair<VertexId, Rat>> weights;
};

struct UniverseSection {
  ZSet set;
  std::vector<ZAction> actions;
};

struct Document {
  int version = 1;
  std::optional<Pocset> pocset;
  std::optional<Graph> graph;
  std::vector<Automorphism> automorphisms;
  std::optional<RawMeasure> measure;
  std::optional<Tournament> tournament;
  std::optional<UniverseSection> universe;
};

// Throws Error{SyntaxError | UnknownSection | IdOutOfRange} with
// "line N: ..." witnesses. Pocset sections are closed and checked on the
// spot (construction errors surface with their own codes).
Document parse_document(const std::string& text);
Document parse_document_file(const std::string& path);

void emit_pocset(std::ostream& out, const Pocset& p);
void emit_graph(std::ostream& out, const Graph& g);
void emit_automorphisms(std::ostream& out,
                        const std::vector<Automorphism>& gs);
void emit_measure(std::ostream& out, const Measure& m);
void emit_tournament(std::ostream& out, const Tournament& t);
void emit_universe(std::ostream& out, const UniverseSection& u);
void emit_version(std::ostream& out);

}  // namespace cubecomb
