#pragma once

#include "purelie/lattice.hpp"

#include <optional>
#include <string>

namespace purelie {

// Torus representation: column i of `weights` is the character chi_i on coordinate x_i.
struct TorusRep {
  IntMatrix weights;
  std::vector<std::string> names;

  static TorusRep from_columns(const std::vector<std::vector<long long>>& cols,
                               std::vector<std::string> names = {});
  // "c11,c12;c21,c22;..." (columns separated by ';') or a JSON array of columns.
  // Without any ';' the entries are read as a single row: "1,-1,0" is C^* on K^3.
  static TorusRep parse(const std::string& text);

  std::size_t torus_rank() const { return weights.rows(); }
  std::size_t dim() const { return weights.cols(); }
  std::string name(std::size_t i) const;
  TorusRep restrict(const IndexSet& coords) const;
};

struct MonomialInvariant {
  std::vector<std::int64_t> exponents;
  bool involves(std::size_t i) const { return exponents[i] > 0; }
  IndexSet support() const;
  auto operator<=>(const MonomialInvariant&) const = default;
};

struct SSSComponent {
  IndexSet zero_coords;  // the component is V(x_i : i in zero_coords)
  IntVector witness_lambda;
  auto operator<=>(const SSSComponent&) const = default;
};

struct FactorNode {
  IndexSet coords;
  std::vector<MonomialInvariant> generators;
  bool accepted = false;
  std::vector<FactorNode> children;  // empty for leaves; otherwise {split-off factor, rest}
};

struct ComponentInfo {
  SSSComponent component;
  std::optional<std::size_t> image_dim;  // divisorial components only
  std::optional<bool> cartier;
  std::optional<bool> q_cartier;
};

struct TorusReport {
  bool stable = false;
  IndexSet stable_submodule;
  bool reduced_to_stable = false;
  std::vector<MonomialInvariant> hilbert_basis;
  std::size_t quotient_dim = 0;
  std::vector<ComponentInfo> components;
  std::optional<bool> pure, npure, cnpure;  // not applicable for unreduced unstable input
  bool coregular = false;
  bool cofree = false;
  bool cofree_by_recursion = false;
  FactorNode factorization_tree;
};

constexpr std::uint64_t kDefaultHilbertCap = 2'000'000;

std::vector<MonomialInvariant> hilbert_basis(const TorusRep& t, std::uint64_t cap = kDefaultHilbertCap);

IndexSet stable_submodule(const TorusRep& t);
bool is_stable(const TorusRep& t);

std::vector<SSSComponent> sss_components(const TorusRep& t);
std::vector<IndexSet> sss_brute_force(const TorusRep& t, std::int64_t box);

std::size_t image_dim_of_divisor(const TorusRep& t, std::size_t i);
std::size_t quotient_dim(const TorusRep& t);

bool is_cartier(const std::vector<MonomialInvariant>& hb, std::size_t i);
bool is_q_cartier(const std::vector<MonomialInvariant>& hb, std::size_t i);

std::pair<bool, FactorNode> cofree_by_recursion(const TorusRep& t, std::uint64_t cap = kDefaultHilbertCap);
// Same recursion on an already computed Hilbert basis over coordinates 0..n-1.
std::pair<bool, FactorNode> split_recursively(std::size_t n, const std::vector<MonomialInvariant>& hb);

TorusReport classify_torus(const TorusRep& t, bool reduce_to_stable, std::uint64_t cap = kDefaultHilbertCap);

}  // namespace purelie
