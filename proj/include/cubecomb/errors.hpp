// cubecomb: combinatorics of finite CAT(0) cube complexes given as pocsets.
//
// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace cubecomb {

// Machine-readable failure codes. Every throwing operation documents which
// codes it can produce; the CLI maps Error{code} to exit status 1 and prints
// the code name together with the witness text.
enum class Errc {
  // pocset construction / validation
  InvolutionNotOrderReversing,
  CycleInOrder,
  PartnerComparable,
  SameOrPartner,
  IdOutOfRange,
  // complex construction
  EnumerationCapExceeded,
  NotMedian,
  BadParams,
  // automorphisms
  BreaksInvolution,
  BreaksOrder,
  // cocycle / separation
  NotFacing,
  BadExponent,
  // lifting decompositions
  InconsistentW,
  // measures
  NotAProbabilityMeasure,
  // tournaments
  NotComplete,
  TooFewVertices,
  // commensurated Z-chain sets
  NotRepresentable,
  // document parsing
  SyntaxError,
  UnknownSection,
};

const char* errc_name(Errc code) noexcept;

// Exception type used across the library: carries a code plus a short
// human-readable witness (ids, line numbers, ...) describing the offending
// object.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string witness)
      : std::runtime_error(std::string(errc_name(code)) + ": " + witness),
        code_(code),
        witness_(std::move(witness)) {}

  Errc code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::string witness_;
};

// Non-throwing validation result item (validate() collects all problems
// instead of stopping at the first).
struct Diagnostic {
  Errc code;
  std::string witness;
};

}  // namespace cubecomb
