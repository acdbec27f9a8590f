// cubecomb: the self-check battery behind `cubecomb verify`.
//
// SPDX-License-Identifier: MIT
#include "cubecomb/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "cubecomb/cocycle.hpp"
#include "cubecomb/errors.hpp"
#include "cubecomb/generators.hpp"
#include "cubecomb/measure.hpp"

namespace cubecomb {

namespace {

std::string repro_of(const Pocset& p, const std::string& note) {
  std::ostringstream os;
  emit_version(os);
  if (!note.empty()) os << "# " << note << "\n";
  emit_pocset(os, p);
  return os.str();
}

struct Battery {
  std::vector<CheckResult>& out;
  std::mt19937_64 rng;

  void add(const std::string& name, bool ok, const std::string& witness,
           const std::string& repro) {
    out.push_back({name, ok, ok ? "" : witness, ok ? "" : repro});
  }

  VertexId pick_vertex(const CubeComplex& c) {
    return std::uniform_int_distribution<VertexId>(
        0, static_cast<VertexId>(c.vertex_count() - 1))(rng);
  }

  // Exercises the metric/median invariants of one complex, folding any
  // failure into a single named check each.
  void complex_suite(const std::string& tag, const CubeComplex& c,
                     unsigned tuples) {
    const Pocset& p = c.pocset();

    {  // vertex <-> pocset duality round trip
      bool ok = true;
      std::string w;
      try {
        auto ingest = from_median_graph(c.edge_graph());
        auto iso = find_pocset_isomorphism(p, ingest.pocset);
        if (!iso) {
          ok = false;
          w = "rebuilt pocset not isomorphic";
        }
      } catch (const Error& e) {
        ok = false;
        w = std::string(errc_name(e.code())) + ": " + e.witness();
      }
      add(tag + "-duality-round-trip", ok, w, ok ? "" : repro_of(p, w));
    }

    {  // median = majority = distance median, sampled
      bool ok = true;
      std::string w;
      for (unsigned t = 0; t < tuples && ok; ++t) {
        VertexId a = pick_vertex(c), b = pick_vertex(c), d = pick_vertex(c);
        VertexId m = c.median(a, b, d);
        unsigned slack = (c.distance(a, m) + c.distance(m, b) -
                          c.distance(a, b)) +
                         (c.distance(b, m) + c.distance(m, d) -
                          c.distance(b, d)) +
                         (c.distance(a, m) + c.distance(m, d) -
                          c.distance(a, d));
        if (slack != 0) {
          ok = false;
          std::ostringstream os;
          os << "median of (" << a << ", " << b << ", " << d
             << ") is off geodesics";
          w = os.str();
        }
      }
      add(tag + "-median-geodesic", ok, w, ok ? "" : repro_of(p, w));
    }

    {  // separating sets measure distance; embeddings are isometric
      bool ok = true;
      std::string w;
      for (unsigned t = 0; t < tuples && ok; ++t) {
        VertexId a = pick_vertex(c), b = pick_vertex(c);
        if (c.separating(a, b).count() != c.distance(a, b)) {
          ok = false;
          w = "separating-set size differs from the graph distance";
          break;
        }
        auto emb = c.interval_embedding(a, b);
        if (emb.chains.size() > p.dimension() && !emb.chains.empty()) {
          ok = false;
          w = "more chains than the dimension";
          break;
        }
        auto ca = c.embedding_coordinate(emb, a);
        auto cb = c.embedding_coordinate(emb, b);
        long long l1 = 0;
        for (std::size_t i = 0; i < ca.size(); ++i)
          l1 += std::abs(ca[i] - cb[i]);
        if (l1 != static_cast<long long>(c.distance(a, b))) {
          ok = false;
          w = "chain coordinates are not isometric on the endpoints";
        }
      }
      add(tag + "-interval-embedding", ok, w, ok ? "" : repro_of(p, w));
    }
  }

  void cocycle_suite(const std::string& tag, const CubeComplex& c,
                     unsigned n, unsigned tuples) {
    const Pocset& p = c.pocset();
    SeqTable table = SeqTable::build(p, n);
    const std::size_t S = table.seqs.size();

    {  // coboundary of the kernel vanishes, value-wise
      bool ok = true;
      std::string w;
      for (unsigned t = 0; t < tuples && ok && S > 0; ++t) {
        auto [o, in] = table.outer_inner[std::uniform_int_distribution<
            std::size_t>(0, S - 1)(rng)];
        VertexId v0 = pick_vertex(c), v1 = pick_vertex(c),
                 v2 = pick_vertex(c), v3 = pick_vertex(c);
        int dc = median_cocycle_value(c, o, in, v1, v2, v3) -
                 median_cocycle_value(c, o, in, v0, v2, v3) +
                 median_cocycle_value(c, o, in, v0, v1, v3) -
                 median_cocycle_value(c, o, in, v0, v1, v2);
        if (dc != 0) {
          ok = false;
          std::ostringstream os;
          os << "coboundary nonzero at (" << v0 << ", " << v1 << ", " << v2
             << ", " << v3 << ")";
          w = os.str();
        }
      }
      add(tag + "-coboundary-vanishes", ok, w, ok ? "" : repro_of(p, w));
    }

    {  // support bound and alternation for one sampled triple
      bool ok = true;
      std::string w;
      VertexId u1 = pick_vertex(c), u2 = pick_vertex(c), u3 = pick_vertex(c);
      SparseVec v = median_cocycle(c, table, u1, u2, u3);
      if (n >= 2) {
        unsigned long long d = p.dimension();
        unsigned long long bound = 6 * (n - 1);
        for (unsigned i = 0; i < n; ++i) bound *= std::max<unsigned long long>(d, 1);
        if (v.support_size() > bound) {
          ok = false;
          w = "support exceeds 6 (n-1) D^n";
        }
      }
      SparseVec flipped = median_cocycle(c, table, u2, u1, u3);
      flipped += v;
      if (flipped.support_size() != 0) {
        ok = false;
        w = "swapping two arguments does not negate the vector";
      }
      add(tag + "-cocycle-shape", ok, w, ok ? "" : repro_of(p, w));
    }

    {  // kernel norm and membership-count lower bounds, sampled pairs
      bool ok = true;
      std::string w;
      for (unsigned t = 0; t < std::min(tuples, 16u) && ok; ++t) {
        VertexId a = pick_vertex(c), b = pick_vertex(c);
        unsigned dinf = c.interval_embedding(a, b).d_inf;
        long long members = 0;
        for (std::size_t i = 0; i < S; ++i) {
          auto [o, in] = table.outer_inner[i];
          if (omega_value(c, o, in, a, b) == 1) ++members;
        }
        if (dinf > n &&
            members < static_cast<long long>(dinf - (n - 1))) {
          ok = false;
          w = "fewer tight sequences than the chain bound";
        }
      }
      add(tag + "-kernel-count-bound", ok, w, ok ? "" : repro_of(p, w));
    }
  }
};

}  // namespace

std::vector<CheckResult> verify_document(const Document& doc,
                                         const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  Battery bat{out, std::mt19937_64(opt.seed)};

  if (doc.pocset) {
    const Pocset& p = *doc.pocset;
    auto diags = p.validate();
    std::string w = diags.empty() ? ""
                                  : std::string(errc_name(diags[0].code)) +
                                        ": " + diags[0].witness;
    bat.add("pocset-valid", diags.empty(), w, repro_of(p, w));
    if (diags.empty()) {
      try {
        CubeComplex c = CubeComplex::build(p, 1u << 16);
        bat.complex_suite("pocset", c, opt.tuples);
        bat.cocycle_suite("pocset", c, 2, opt.tuples);

        for (std::size_t i = 0; i < doc.automorphisms.size(); ++i) {
          auto ds = check_automorphism(p, doc.automorphisms[i]);
          std::ostringstream name;
          name << "automorphism-" << i;
          std::string aw =
              ds.empty() ? ""
                         : std::string(errc_name(ds[0].code)) + ": " +
                               ds[0].witness;
          bat.add(name.str(), ds.empty(), aw, repro_of(p, aw));
        }

        if (doc.measure) {
          Measure m;
          m.weight.assign(c.vertex_count(), Rat{0});
          bool resolved = true;
          for (auto [v, r] : doc.measure->weights) {
            if (v >= c.vertex_count()) {
              bat.add("measure-valid", false, "vertex id out of range",
                      repro_of(p, "measure vertex out of range"));
              resolved = false;
              break;
            }
            m.weight[v] += r;
          }
          if (resolved) {
            auto ds = check_measure(c, m);
            std::string mw =
                ds.empty() ? ""
                           : std::string(errc_name(ds[0].code)) + ": " +
                                 ds[0].witness;
            bat.add("measure-valid", ds.empty(), mw, repro_of(p, mw));
            if (ds.empty()) {
              auto bs = balanced_subcomplex(c, m);
              bool iv = bs.lift.complex.interval_witness().has_value();
              bat.add("balanced-interval", iv,
                      "balanced subcomplex is not an interval",
                      repro_of(p, "balanced subcomplex"));
            }
          }
        }
      } catch (const Error& e) {
        bat.add("pocset-complex", false,
                std::string(errc_name(e.code())) + ": " + e.witness(),
                repro_of(p, e.witness()));
      }
    }
  }

  if (doc.graph) {
    bool ok = true;
    std::string w;
    try {
      from_median_graph(*doc.graph);
    } catch (const Error& e) {
      ok = false;
      w = std::string(errc_name(e.code())) + ": " + e.witness();
    }
    bat.add("graph-median", ok, w, "");
  }

  if (doc.tournament) {
    const Tournament& t = *doc.tournament;
    auto missing = t.incomplete_witness();
    bat.add("tournament-complete", !missing.has_value(),
            "a pair carries no edge", "");
    if (!missing) {
      auto res = transitive_subtournament(t, 2, /*force=*/true);
      bool chain_ok = true;
      for (std::size_t i = 0; i < res.chain.size() && chain_ok; ++i)
        for (std::size_t j = i + 1; j < res.chain.size(); ++j)
          if (!t.edge(res.chain[i], res.chain[j])) {
            chain_ok = false;
            break;
          }
      bat.add("tournament-greedy-chain", chain_ok,
              "greedy chain is not transitive", "");
    }
  }

  if (doc.universe) {
    const auto& u = *doc.universe;
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < u.actions.size() && ok; ++i)
      for (std::size_t j = 0; j < u.actions.size() && ok; ++j) {
        try {
          long long lhs = transfer_character(u.set, compose(u.actions[i],
                                                            u.actions[j]));
          long long rhs = transfer_character(u.set, u.actions[i]) +
                          transfer_character(u.set, u.actions[j]);
          if (lhs != rhs) {
            ok = false;
            std::ostringstream os;
            os << "transfer not additive on actions " << i << ", " << j;
            w = os.str();
          }
        } catch (const Error&) {
          // Non-commensurating pairs are outside the homomorphism's domain.
        }
      }
    bat.add("transfer-homomorphism", ok, w, "");
  }

  for (unsigned i = 0; i < opt.complexes; ++i) {
    Pocset p = random_median_closure(bat.rng, opt.max_k);
    std::ostringstream tag;
    tag << "random-" << i;
    CubeComplex c = CubeComplex::build(p);
    bat.complex_suite(tag.str(), c, std::max(1u, opt.tuples / 8));
    bat.cocycle_suite(tag.str(), c, 2, std::max(1u, opt.tuples / 8));
  }
  return out;
}

int render_report(std::ostream& out, const std::vector<CheckResult>& results) {
  int failures = 0;
  for (const auto& r : results) {
    out << std::left << std::setw(44) << r.name << (r.ok ? "ok" : "FAIL");
    if (!r.ok) {
      ++failures;
      out << "  " << r.witness;
    }
    out << "\n";
    if (!r.ok && !r.repro_document.empty()) {
      out << "--- repro ---\n" << r.repro_document << "--- end ---\n";
    }
  }
  out << (failures == 0 ? "all checks passed" : "CHECKS FAILED") << " ("
      << results.size() << " run, " << failures << " failed)\n";
  return failures;
}

}  // namespace cubecomb
