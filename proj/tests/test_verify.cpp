// The self-check battery: deterministic reports, green runs on healthy
// inputs, and witnessed failures on broken documents.
//
// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cubecomb/document.hpp"
#include "cubecomb/verify.hpp"

using namespace cubecomb;

namespace {

std::string render(const std::vector<CheckResult>& rs, int* failures) {
  std::ostringstream out;
  int f = render_report(out, rs);
  if (failures) *failures = f;
  return out.str();
}

}  // namespace

TEST_CASE("the generated-corpus battery passes and is deterministic") {
  VerifyOptions opt;
  opt.seed = 7;
  opt.complexes = 4;
  opt.tuples = 40;
  opt.max_k = 4;
  auto r1 = verify_document(Document{}, opt);
  auto r2 = verify_document(Document{}, opt);
  REQUIRE(!r1.empty());
  for (const CheckResult& c : r1) {
    CAPTURE(c.name);
    CHECK(c.ok);
    CHECK(c.repro_document.empty());
  }
  int f1 = 0, f2 = 0;
  std::string t1 = render(r1, &f1), t2 = render(r2, &f2);
  CHECK(t1 == t2);  // byte-identical reruns
  CHECK(f1 == 0);
  CHECK(f2 == 0);
  CHECK(t1.find("all checks passed") != std::string::npos);

  VerifyOptions other = opt;
  other.seed = 8;
  auto r3 = verify_document(Document{}, other);
  for (const CheckResult& c : r3) CHECK(c.ok);
}

TEST_CASE("document sections are verified and failures are witnessed") {
  // healthy document: pocset + matching automorphism + good measure
  Document good = parse_document(
      "cubecomb 1\n"
      "[pocset]\n"
      "2\n"
      "2 0\n"
      "[automorphisms]\n"
      "3 2 1 0\n"
      "[measure]\n"
      "0 1/2\n"
      "2 1/2\n"
      "[tournament]\n"
      "3\n"
      "0 1\n"
      "1 2\n"
      "2 0\n");
  VerifyOptions opt;
  opt.complexes = 0;
  auto results = verify_document(good, opt);
  REQUIRE(!results.empty());
  for (const CheckResult& c : results) {
    CAPTURE(c.name);
    CHECK(c.ok);
  }

  // broken measure: does not sum to one
  Document bad = parse_document(
      "cubecomb 1\n"
      "[pocset]\n"
      "2\n"
      "2 0\n"
      "[measure]\n"
      "0 1/2\n"
      "2 1/4\n");
  auto bad_results = verify_document(bad, opt);
  int failures = 0;
  std::string report = render(bad_results, &failures);
  CHECK(failures > 0);
  CHECK(report.find("FAIL") != std::string::npos);
  CHECK(report.find("CHECKS FAILED") != std::string::npos);
  bool found_repro = false;
  for (const CheckResult& c : bad_results)
    if (!c.ok) {
      CHECK(!c.witness.empty());
      if (!c.repro_document.empty()) {
        found_repro = true;
        // repro documents parse again
        Document d = parse_document(c.repro_document);
        CHECK(d.version == 1);
      }
    }
  CHECK(found_repro);

  // incomplete tournament
  Document incomplete = parse_document(
      "cubecomb 1\n"
      "[tournament]\n"
      "3\n"
      "0 1\n");
  auto tr = verify_document(incomplete, opt);
  bool tfail = false;
  for (const CheckResult& c : tr) tfail = tfail || !c.ok;
  CHECK(tfail);

  // universe actions: transfer homomorphism is exercised
  Document uni = parse_document(
      "cubecomb 1\n"
      "[universe]\n"
      "rays 2\n"
      "tail 0 0 1\n"
      "tail 1 0 1\n"
      "flip 0 2\n"
      "act 1 0 / 1 -1\n"
      "act 0 1 / 3 0\n");
  auto ur = verify_document(uni, opt);
  bool saw_transfer = false;
  for (const CheckResult& c : ur) {
    CAPTURE(c.name);
    CHECK(c.ok);
    saw_transfer = saw_transfer || c.name.find("transfer") != std::string::npos;
  }
  CHECK(saw_transfer);
}
