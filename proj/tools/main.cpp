// cubecomb command-line tool: generate, validate and analyze finite cube
// complexes given as pocset documents.
//
// Exit codes: 0 = success / all checks pass, 1 = a checked property is
// violated, 2 = input or usage error.
//
// SPDX-License-Identifier: MIT
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cubecomb/action.hpp"
#include "cubecomb/boundary.hpp"
#include "cubecomb/cocycle.hpp"
#include "cubecomb/cube_complex.hpp"
#include "cubecomb/document.hpp"
#include "cubecomb/errors.hpp"
#include "cubecomb/generators.hpp"
#include "cubecomb/measure.hpp"
#include "cubecomb/tournament.hpp"
#include "cubecomb/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

cubecomb::Document load(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return cubecomb::parse_document(buf.str());
  }
  return cubecomb::parse_document_file(path);
}

cubecomb::CubeComplex complex_of(const cubecomb::Document& doc) {
  using namespace cubecomb;
  if (doc.pocset) {
    auto diags = doc.pocset->validate();
    if (!diags.empty())
      throw Error(diags[0].code, diags[0].witness);
    return CubeComplex::build(*doc.pocset);
  }
  if (doc.graph) return from_median_graph(*doc.graph).complex;
  throw Error(Errc::SyntaxError, "document has no [pocset] or [graph] section");
}

std::vector<cubecomb::VertexId> parse_id_list(const std::string& csv,
                                              std::size_t expected) {
  std::vector<cubecomb::VertexId> ids;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ','))
    ids.push_back(static_cast<cubecomb::VertexId>(std::stoul(tok)));
  if (ids.size() != expected) {
    std::ostringstream os;
    os << "expected " << expected << " comma-separated ids, got "
       << ids.size();
    throw cubecomb::Error(cubecomb::Errc::BadParams, os.str());
  }
  return ids;
}

cubecomb::Measure resolve_measure(const cubecomb::CubeComplex& c,
                                  const cubecomb::Document& doc) {
  using namespace cubecomb;
  if (!doc.measure)
    throw Error(Errc::SyntaxError, "document has no [measure] section");
  Measure m;
  m.weight.assign(c.vertex_count(), Rat{0});
  for (auto [v, r] : doc.measure->weights) {
    if (v >= c.vertex_count()) {
      std::ostringstream os;
      os << "measure vertex " << v << " out of range";
      throw Error(Errc::IdOutOfRange, os.str());
    }
    m.weight[v] += r;
  }
  auto diags = check_measure(c, m);
  if (!diags.empty()) throw Error(diags[0].code, diags[0].witness);
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace cubecomb;
  CLI::App app{
      "cubecomb: combinatorics of finite cube complexes given as pocsets"};
  app.require_subcommand(1);

  // --- gen ---------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a pocset document");
  std::string gen_kind;
  unsigned gen_k = 0, gen_a = 0, gen_b = 0;
  std::string gen_expr;
  gen->add_option("--kind", gen_kind,
                  "cube | path | tripod | grid | bowtie | expr");
  gen->add_option("--k", gen_k, "size parameter (cube/path/tripod)");
  gen->add_option("--a", gen_a, "grid rows");
  gen->add_option("--b", gen_b, "grid columns");
  gen->add_option("--expr", gen_expr,
                  "kind expression, e.g. product(path(2),path(3))");

  // --- document-consuming commands ----------------------------------------
  std::string in_path = "-";
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--in", in_path, "input document (default: stdin)");
  };

  auto* validate = app.add_subcommand(
      "validate", "check pocset axioms and report diagnostics");
  add_input(validate);

  auto* median = app.add_subcommand("median", "median of a vertex triple");
  add_input(median);
  std::string median_triple;
  median->add_option("--triple", median_triple, "u1,u2,u3")->required();

  auto* cocycle = app.add_subcommand(
      "cocycle", "median cocycle of a vertex triple with norm data");
  add_input(cocycle);
  std::string cocycle_triple;
  unsigned cocycle_n = 2, cocycle_p = 1;
  bool cocycle_entries = false;
  cocycle->add_option("--triple", cocycle_triple, "u1,u2,u3")->required();
  cocycle->add_option("--n", cocycle_n, "sequence length (default 2)");
  cocycle->add_option("--p", cocycle_p, "norm exponent (default 1)");
  cocycle->add_flag("--entries", cocycle_entries, "also print the entries");

  auto* decompose = app.add_subcommand(
      "decompose", "finest product decomposition of the hyperplanes");
  add_input(decompose);

  auto* essential = app.add_subcommand(
      "essential", "essential hyperplanes at a scale, under [automorphisms]");
  add_input(essential);
  unsigned ess_scale = 0, ess_depth = 12;
  VertexId ess_base = 0;
  essential->add_option("--scale", ess_scale, "scale R (default 0)");
  essential->add_option("--basepoint", ess_base, "orbit basepoint");
  essential->add_option("--depth", ess_depth, "orbit word-length cap");

  auto* balanced = app.add_subcommand(
      "balanced", "balanced/heavy/light halfspaces of [measure]");
  add_input(balanced);

  auto* tournament = app.add_subcommand(
      "tournament", "greedy transitive subtournament of [tournament]");
  add_input(tournament);
  unsigned tour_target = 2;
  bool tour_force = false;
  tournament->add_option("--target", tour_target, "chain length D");
  tournament->add_flag("--force", tour_force, "run even when |V| < 5^D");

  auto* transfer = app.add_subcommand(
      "transfer", "transfer character of every action in [universe]");
  add_input(transfer);

  auto* verify = app.add_subcommand(
      "verify", "run the invariant suites; nonzero exit on any violation");
  add_input(verify);
  VerifyOptions vopt;
  bool verify_no_doc = false;
  verify->add_option("--seed", vopt.seed, "RNG seed (default 42)");
  verify->add_option("--complexes", vopt.complexes,
                     "random complexes to generate");
  verify->add_option("--tuples", vopt.tuples, "samples per complex");
  verify->add_option("--max-k", vopt.max_k, "ambient cube for random corpora");
  verify->add_flag("--no-doc", verify_no_doc,
                   "skip reading a document, run only random campaigns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (gen->parsed()) {
      Pocset p = [&] {
        if (!gen_expr.empty()) return generate(gen_expr);
        if (gen_kind == "cube") return cube_pocset(gen_k);
        if (gen_kind == "path") return path_pocset(gen_k);
        if (gen_kind == "tripod") return tripod_pocset(gen_k);
        if (gen_kind == "grid") return grid_pocset(gen_a, gen_b);
        if (gen_kind == "bowtie") return bowtie_pocset();
        throw Error(Errc::BadParams, "unknown --kind '" + gen_kind + "'");
      }();
      emit_version(std::cout);
      emit_pocset(std::cout, p);
      return kExitOk;
    }

    if (validate->parsed()) {
      // Order-axiom violations detected while closing the input relations
      // are findings of this subcommand, not usage errors.
      Document doc;
      try {
        doc = load(in_path);
      } catch (const Error& e) {
        if (e.code() == Errc::SameOrPartner ||
            e.code() == Errc::PartnerComparable ||
            e.code() == Errc::CycleInOrder ||
            e.code() == Errc::InvolutionNotOrderReversing) {
          std::cout << errc_name(e.code()) << ": " << e.witness() << "\n";
          return kExitViolation;
        }
        throw;
      }
      if (!doc.pocset)
        throw Error(Errc::SyntaxError, "document has no [pocset] section");
      auto diags = doc.pocset->validate();
      for (const auto& d : diags)
        std::cout << errc_name(d.code) << ": " << d.witness << "\n";
      if (diags.empty()) {
        CubeComplex c = CubeComplex::build(*doc.pocset);
        std::cout << "valid pocset: " << doc.pocset->pairs()
                  << " hyperplanes, " << c.vertex_count() << " vertices, "
                  << c.edge_count() << " edges, dimension "
                  << doc.pocset->dimension() << "\n";
        return kExitOk;
      }
      return kExitViolation;
    }

    if (median->parsed()) {
      Document doc = load(in_path);
      CubeComplex c = complex_of(doc);
      auto ids = parse_id_list(median_triple, 3);
      for (VertexId v : ids)
        if (v >= c.vertex_count())
          throw Error(Errc::IdOutOfRange, "vertex id out of range");
      std::cout << "median " << c.median(ids[0], ids[1], ids[2]) << "\n";
      return kExitOk;
    }

    if (cocycle->parsed()) {
      Document doc = load(in_path);
      CubeComplex c = complex_of(doc);
      auto ids = parse_id_list(cocycle_triple, 3);
      for (VertexId v : ids)
        if (v >= c.vertex_count())
          throw Error(Errc::IdOutOfRange, "vertex id out of range");
      SeqTable table = SeqTable::build(c.pocset(), cocycle_n);
      SparseVec vec = median_cocycle(c, table, ids[0], ids[1], ids[2]);
      NormReport nr = norms(vec, cocycle_p);
      std::cout << "support " << nr.support << "\n"
                << "l1 " << nr.l1 << "\n"
                << "linf " << nr.linf << "\n"
                << "l" << cocycle_p << "^" << cocycle_p << " " << nr.lp_pow
                << "\n";
      if (cocycle_entries) vec.serialize(std::cout);
      return kExitOk;
    }

    if (decompose->parsed()) {
      Document doc = load(in_path);
      if (!doc.pocset)
        throw Error(Errc::SyntaxError, "document has no [pocset] section");
      auto d = irreducible_decomposition(*doc.pocset);
      std::cout << "factors " << d.components.size() << "\n";
      for (std::size_t f = 0; f < d.components.size(); ++f) {
        std::cout << "factor " << f << " hyperplanes";
        for (auto q : d.components[f]) std::cout << " " << q;
        std::cout << "\n";
      }
      return kExitOk;
    }

    if (essential->parsed()) {
      Document doc = load(in_path);
      CubeComplex c = complex_of(doc);
      ActionSpec spec;
      spec.generators = doc.automorphisms;
      spec.basepoint = ess_base;
      spec.depth = ess_depth;
      for (const auto& g : spec.generators) {
        auto diags = check_automorphism(c.pocset(), g);
        if (!diags.empty()) throw Error(diags[0].code, diags[0].witness);
      }
      auto rep = essential_at_scale(c, spec, ess_scale);
      std::cout << "orbit " << rep.orbit.size() << "\n";
      std::cout << "essential";
      for (std::size_t q = rep.essential.find_first(); q != Bits::npos;
           q = rep.essential.find_next(q))
        std::cout << " " << q;
      std::cout << "\ninessential";
      for (std::size_t q = rep.inessential.find_first(); q != Bits::npos;
           q = rep.inessential.find_next(q))
        std::cout << " " << q;
      std::cout << "\n";
      return kExitOk;
    }

    if (balanced->parsed()) {
      Document doc = load(in_path);
      CubeComplex c = complex_of(doc);
      Measure m = resolve_measure(c, doc);
      auto bp = balanced_partition(c, m);
      auto print_set = [](const char* name, const Bits& b) {
        std::cout << name;
        for (std::size_t h = b.find_first(); h != Bits::npos;
             h = b.find_next(h))
          std::cout << " " << h;
        std::cout << "\n";
      };
      print_set("balanced", bp.balanced);
      print_set("heavy", bp.heavy);
      print_set("light", bp.light);
      auto bs = balanced_subcomplex(c, m);
      std::cout << "interval witness (" << bs.witness.first << ", "
                << bs.witness.second << ") in a subcomplex with "
                << bs.lift.complex.vertex_count() << " vertices\n";
      return kExitOk;
    }

    if (tournament->parsed()) {
      Document doc = load(in_path);
      if (!doc.tournament)
        throw Error(Errc::SyntaxError, "document has no [tournament] section");
      auto res = transitive_subtournament(*doc.tournament, tour_target,
                                          tour_force);
      std::cout << (res.ok ? "found" : "FAILED") << " chain";
      for (unsigned v : res.chain) std::cout << " " << v;
      std::cout << "\nsizes";
      for (std::size_t s : res.sizes) std::cout << " " << s;
      std::cout << "\n";
      return res.ok ? kExitOk : kExitViolation;
    }

    if (transfer->parsed()) {
      Document doc = load(in_path);
      if (!doc.universe)
        throw Error(Errc::SyntaxError, "document has no [universe] section");
      for (std::size_t i = 0; i < doc.universe->actions.size(); ++i) {
        long long tr =
            transfer_character(doc.universe->set, doc.universe->actions[i]);
        std::cout << "action " << i << " transfer " << tr << "\n";
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      Document doc;
      if (!verify_no_doc && in_path != "-") doc = load(in_path);
      auto results = verify_document(doc, vopt);
      int failures = render_report(std::cout, results);
      return failures == 0 ? kExitOk : kExitViolation;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << errc_name(e.code()) << ": " << e.witness()
              << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
