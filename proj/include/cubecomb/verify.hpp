// cubecomb: the self-check battery behind `cubecomb verify`.
//
// Each check returns ok/fail plus a witness; failing checks serialize a
// minimal reproducing document. The battery is deterministic for a fixed
// seed.
//
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cubecomb/document.hpp"

namespace cubecomb {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string witness;        // short description of the first failure
  std::string repro_document; // serialized minimal repro, empty when ok
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  unsigned complexes = 0;   // random complexes to generate and check
  unsigned tuples = 200;    // vertex tuples sampled per complex
  unsigned max_k = 6;       // ambient cube size for random closures
};

// Invariant suites over the sections present in `doc` (pass a default
// Document to run only the generated-corpus campaigns).
std::vector<CheckResult> verify_document(const Document& doc,
                                         const VerifyOptions& opt);

// Renders results as a fixed-width report; returns the number of failures.
int render_report(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace cubecomb
