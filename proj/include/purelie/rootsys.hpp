#pragma once

#include "purelie/common.hpp"

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>

namespace purelie {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Family family;
  int rank;

  // "A5", "B8", ... Throws InvalidInput on bad family letter or rank.
  static SimpleType parse(const std::string& text);
  static SimpleType make(Family family, int rank);
  std::string name() const;
  bool classical() const { return family <= Family::D; }
  auto operator<=>(const SimpleType&) const = default;
};

// Coordinates in the fundamental-weight basis.
struct Weight {
  std::vector<std::int64_t> coords;

  Weight() = default;
  explicit Weight(std::size_t rank) : coords(rank, 0) {}
  explicit Weight(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<std::int64_t> c) : coords(c) {}

  std::size_t size() const { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  std::int64_t& operator[](std::size_t i) { return coords[i]; }
  bool is_zero() const;
  bool is_dominant() const;
  std::int64_t width() const;
  std::size_t support() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight scaled(std::int64_t k) const;
  auto operator<=>(const Weight&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);
// "a1,a2,..." form used on the command line.
Weight parse_weight(const std::string& text);
std::string format_weight(const Weight& w);
// Human form such as "2w1+w3"; "0" for the zero weight.
std::string omega_notation(const Weight& w);

class RootSystem {
 public:
  explicit RootSystem(SimpleType type);

  const SimpleType& type() const { return type_; }
  std::size_t rank() const { return rank_; }
  std::int64_t group_dim() const { return group_dim_; }

  // cartan(i, j) = <alpha_i^vee, alpha_j>; column j is alpha_j in fundamental coordinates.
  std::int64_t cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
  // Half squared length of alpha_i, short roots normalized to 1.
  std::int64_t symmetrizer(std::size_t i) const { return half_length_[i]; }

  Weight simple_root(std::size_t i) const;
  Weight rho() const { return Weight(std::vector<std::int64_t>(rank_, 1)); }

  // Positive roots in fundamental coordinates and in simple-root coordinates, same order.
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  const std::vector<std::vector<std::int64_t>>& positive_root_coords() const { return positive_root_coords_; }
  bool is_root(const Weight& w) const;

  Weight simple_reflection(std::size_t i, const Weight& w) const;
  Weight dominant_representative(const Weight& w) const;
  // Whole Weyl orbit, sorted.
  std::vector<Weight> weyl_orbit(const Weight& w) const;

  // Simple-root coordinates of w if w lies in the root lattice.
  std::optional<std::vector<std::int64_t>> root_coords(const Weight& w) const;
  bool in_root_lattice(const Weight& w) const { return root_coords(w).has_value(); }

  // (x, beta) for beta given in simple-root coordinates; integral with this normalization.
  std::int64_t pair_with_root_coords(const Weight& x, const std::vector<std::int64_t>& beta) const;

  Weight dual_weight(const Weight& lambda) const;
  // Images of lambda under duality and the outer diagram symmetries (including lambda).
  std::vector<Weight> outer_images(const Weight& lambda) const;
  // Representative of the outer-symmetry class: the lexicographically greatest
  // coordinate vector, so mass sits on low indices (w2 of A4 rather than w3).
  Weight outer_canonical(const Weight& lambda) const;

  // Fundamental coordinates of sum_i c_i L_i in the orthogonal basis of types B, C, D.
  Weight from_orthogonal(const std::vector<Rational>& c) const;

 private:
  void check_index(std::size_t i) const;
  void check_rank(const Weight& w) const;

  SimpleType type_;
  std::size_t rank_;
  std::vector<std::vector<std::int64_t>> cartan_;
  std::vector<std::int64_t> half_length_;
  std::vector<Weight> positive_roots_;
  std::vector<std::vector<std::int64_t>> positive_root_coords_;
  std::vector<Weight> all_roots_sorted_;
  // det(C) * C^{-1}, for root-lattice membership tests.
  std::vector<std::vector<BigInt>> adjugate_;
  BigInt det_;
  std::int64_t group_dim_;
};

const RootSystem& root_system(SimpleType type);  // cached, immutable

}  // namespace purelie
