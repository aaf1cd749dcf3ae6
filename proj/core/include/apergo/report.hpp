#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "apergo/decomposition.hpp"
#include "apergo/ergodic.hpp"
#include "apergo/probes.hpp"
#include "apergo/stochastic.hpp"
#include "apergo/subspace_analysis.hpp"

namespace apergo::report {

using json = nlohmann::json;

// One exercised invariant: pass/fail plus the measured value and the bound
// it was checked against.
struct InvariantCheck {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double bound = 0.0;
};

using Ledger = std::vector<InvariantCheck>;

json describe(const Vector& v);
json describe(NormKind kind);
json describe(const ConstantReport& r);
json describe(const ErgodicProfile& p);
json describe(const APProbeResult& r);
json describe(const AAProbeResult& r);
json describe(const C0ProbeResult& r);
json describe(const DecompositionBounds& b);
json describe(const DecompositionResult& r);
json describe(const PapValidationReport& r);
json describe(const EquivalenceReport& r);
json describe(const InvariantCheck& c);
json describe(const Ledger& ledger);

// The single report envelope every subcommand emits: versioned schema,
// command name, seed, digests of file inputs, parameters, results, and the
// invariant ledger.  Keys are sorted by the serializer, so identical content
// renders to identical bytes.
json make_report(const std::string& command, json params, json inputs,
                 json results, const Ledger& ledger, std::uint64_t seed);

// Canonical rendering: two-space indent plus trailing newline.
std::string render(const json& report);

}  // namespace apergo::report
