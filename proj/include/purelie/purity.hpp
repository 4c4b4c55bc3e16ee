#pragma once

#include "purelie/lattice.hpp"
#include "purelie/repweights.hpp"

#include <optional>

namespace purelie {

// A homomorphism from the weight lattice to Z/order, by its values on the
// fundamental weights; stored as the least element of its orbit under the
// Weyl group and negation.
struct ToralClass {
  std::int64_t order = 0;
  std::vector<std::int64_t> residues;

  // Additive order of the residue vector (divides `order`).
  std::int64_t exact_order() const;
  auto operator<=>(const ToralClass&) const = default;
};

std::string format_class(const ToralClass& t);

constexpr std::uint64_t kDefaultToralCap = 1'000'000;
constexpr std::uint64_t kDefaultHyperplaneCap = 10'000'000;

// Canonical orbit representative of a residue vector (reduced mod order).
ToralClass canonical_class(const RootSystem& rs, std::int64_t order, std::vector<std::int64_t> residues);

std::vector<ToralClass> toral_orbit_reps(const RootSystem& rs, std::int64_t order, bool exact_order,
                                         std::uint64_t cap = kDefaultToralCap);

std::int64_t fixed_dim(const WeightSystem& ws, const ToralClass& t);

enum class VerdictKind { CertifiedImpure, NecessaryConditionFails, Inconclusive };
std::string to_string(VerdictKind k);

struct HyperplaneData {
  std::int64_t max_count = 0;
  IntVector normal;
};

struct PurityVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::optional<std::int64_t> order_used;
  BigInt bound;  // dim V - dim G - 2 for the toral check, dim V - dim G - 1 for hyperplanes
  std::vector<std::pair<ToralClass, std::int64_t>> offending_classes;
  std::optional<std::int64_t> max_non_offending;  // largest fixed_dim among classes within the bound
  std::size_t classes_checked = 0;
  std::optional<HyperplaneData> hyperplane;
};

PurityVerdict toral_impurity_check(const RepSpec& spec, std::int64_t order, bool exact_order = false,
                                   std::uint64_t cap = kDefaultToralCap);

HyperplaneData max_hyperplane_count(const RootSystem& rs, const WeightSystem& ws,
                                    std::uint64_t cap = kDefaultHyperplaneCap);

PurityVerdict hyperplane_necessity_check(const RepSpec& spec, std::uint64_t cap = kDefaultHyperplaneCap);

BigInt kappa(const RootSystem& rs, bool has_zero_weight);

bool stable_witness_check(const RootSystem& rs, const std::vector<Weight>& witness);

}  // namespace purelie
