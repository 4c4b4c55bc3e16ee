#pragma once

#include "purelie/rootsys.hpp"

#include <map>

namespace purelie {

struct RepSpec {
  const RootSystem* rs = nullptr;
  std::vector<std::pair<Weight, std::int64_t>> summands;

  static RepSpec irreducible(const RootSystem& rs, const Weight& lambda);
  std::string describe() const;
};

struct WeightSystem {
  std::map<Weight, std::int64_t> entries;
  BigInt total_dim = 0;

  std::int64_t mult(const Weight& w) const;
  // Distinct nonzero weights.
  std::vector<Weight> nonzero_weights() const;
};

BigInt weyl_dim(const RootSystem& rs, const Weight& lambda);

// Dominant weights of the irreducible module and their multiplicities (Freudenthal).
std::map<Weight, std::int64_t> dominant_multiplicities(const RootSystem& rs, const Weight& lambda);

WeightSystem weight_system(const RepSpec& spec);
WeightSystem weight_system(const RootSystem& rs, const Weight& lambda);

std::int64_t zero_weight_mult(const WeightSystem& ws);

struct WeightBoundsReport {
  bool zero_weight_vs_simple_roots;  // dim V_0 <= sum_i dim V_{alpha_i}
  bool zero_weight_ratio;            // dim V_0 / dim V <= rk / (dim G - rk)
  bool nonzero_weight_count;         // #nonzero weights (with mult) <= rk (dim G + 1)
};

WeightBoundsReport verify_weight_bounds(const RootSystem& rs, const Weight& lambda);

}  // namespace purelie
