#pragma once

#include <optional>
#include <string>
#include <vector>

#include "purelie/enumerate.hpp"
#include "purelie/torus.hpp"

namespace purelie {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  bool documented_exception = false;  // listed, never counted as a failure
};

struct BundleOptions {
  std::optional<int> n;  // group parameter override (SL_n, Sp_2n, Spin_2n+1, Spin_2n)
  CertifyOptions caps;
  std::uint64_t hilbert_cap = kDefaultHilbertCap;
};

const std::vector<std::string>& bundle_ids();
// Throws InvalidInput for an unknown id.
std::vector<CheckResult> run_bundle(const std::string& id, const BundleOptions& options = {});

// Small-enough list against the reference rows for one type, both directions.
std::vector<CheckResult> compare_with_reference(const RootSystem& rs, const ReferenceVerdicts& refs);

// Highest weight of the adjoint representation and of the smallest nontrivial one.
Weight adjoint_weight(const RootSystem& rs);
Weight smallest_weight(const RootSystem& rs);

// The eight spinor weights of B7 given by the sign patterns of the Fano-plane
// lines (plus the full set), in fundamental coordinates.
std::vector<Weight> spin15_witness_weights();
std::vector<std::vector<int>> spin15_sign_patterns();
Weight b7_spinor_weight(const std::vector<int>& signs);

}  // namespace purelie
