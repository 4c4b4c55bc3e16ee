#pragma once

#include "purelie/common.hpp"

#include <optional>
#include <span>

namespace purelie {

using IntVector = std::vector<BigInt>;
using RatVector = std::vector<Rational>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  // Builds from row lists; all rows must share a length.
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  // Columns become matrix columns (the torus weight convention).
  static IntMatrix from_columns(const std::vector<std::vector<long long>>& cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix select_columns(const IndexSet& cols) const;
  IntMatrix select_rows(const IndexSet& rows) const;
  IntMatrix transpose() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

std::size_t rank(const IntMatrix& m);
std::size_t rank(const std::vector<RatVector>& rows);

// Row indices of a maximal independent set of rows, chosen greedily from the top.
IndexSet independent_rows(const IntMatrix& m);

// Lattice basis of {u in Z^cols : M u = 0}; vectors sign-canonical and sorted.
std::vector<IntVector> integer_kernel_basis(const IntMatrix& m);

// Some x >= 0 with A x = b, or nothing. Exact phase-one simplex with Bland's rule.
std::optional<RatVector> find_nonneg_solution(const std::vector<RatVector>& a, const RatVector& b);

bool feasible_nonneg_combination(const IntVector& target, const std::vector<IntVector>& generators);

// Coordinates j outside zero_set for which some u >= 0 with W u = 0, u|zero_set = 0 has u_j > 0.
IndexSet positivizable_support(const IntMatrix& w, const IndexSet& zero_set);

std::size_t cone_dim(const IntMatrix& w, const IndexSet& zero_set);

// Primitive integer normal of span(vectors) when that span is a hyperplane of Q^ambient_dim.
std::optional<IntVector> primitive_normal(const std::vector<RatVector>& vectors, std::size_t ambient_dim);
std::optional<IntVector> primitive_normal(const std::vector<IntVector>& vectors, std::size_t ambient_dim);

// Divides by the gcd and flips so the first nonzero entry is positive.
IntVector make_primitive(IntVector v);
// Clears denominators, then make_primitive.
IntVector make_primitive(const RatVector& v);

BigInt dot(const IntVector& a, const IntVector& b);

}  // namespace purelie
