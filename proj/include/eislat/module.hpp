#pragma once

// Module linear algebra over E: Hermite normal form, membership, kernels,
// fraction-free rank/determinant/inverse and the Smith form of a finite
// quotient.

#include <optional>
#include <string>
#include <vector>

#include "eislat/matrix.hpp"

namespace eislat {

// Row span of a ScaledEMatrix kept in canonical Hermite normal form:
//  - rows are E-independent with strictly increasing pivot columns;
//  - every pivot is a canonical associate;
//  - entries above a pivot are canonical remainders modulo it;
//  - the denominator is minimal.
// Two modules are equal iff their canonical forms are equal.
class EModule {
 public:
  EModule() = default;
  explicit EModule(Eigen::Index ambient_dim);

  const ScaledEMatrix& basis() const { return basis_; }
  const std::vector<Eigen::Index>& pivots() const { return pivots_; }
  Eigen::Index rank() const { return basis_.rows(); }
  Eigen::Index ambient_dim() const { return basis_.cols(); }
  EVector row(Eigen::Index i) const { return basis_.num.row(i); }

  friend bool operator==(const EModule& x, const EModule& y) {
    return x.basis_.den == y.basis_.den && x.basis_.num.rows() == y.basis_.num.rows() &&
           x.basis_.num.cols() == y.basis_.num.cols() && x.basis_.num == y.basis_.num;
  }

 private:
  friend EModule hnf(const ScaledEMatrix& rows);
  ScaledEMatrix basis_;
  std::vector<Eigen::Index> pivots_;
};

EModule hnf(const ScaledEMatrix& rows);
inline EModule hnf(const EMatrix& rows) { return hnf(ScaledEMatrix(rows, 1)); }

// Integral HNF used by hnf(); returns nonzero rows only.
EMatrix hnf_integral(const EMatrix& rows, std::vector<Eigen::Index>* pivots = nullptr);

// Coordinates c with v = c * basis, or nullopt when v is not in the module.
std::optional<EVector> coordinates(const EModule& m, const ScaledEVector& v);
inline std::optional<EVector> coordinates(const EModule& m, const EVector& v) {
  return coordinates(m, ScaledEVector(v, 1));
}

bool contains(const EModule& m, const ScaledEVector& v);
inline bool contains(const EModule& m, const EVector& v) { return contains(m, ScaledEVector(v, 1)); }
// n is a submodule of m
bool contains(const EModule& m, const EModule& n);

// Sum of two submodules of the same ambient space.
EModule sum(const EModule& a, const EModule& b);

// Integral left kernel {c in E^n : c * a == 0}, as a saturated basis in HNF.
EMatrix left_kernel(const EMatrix& a);

// Rank over the fraction field, by fraction-free elimination.
Eigen::Index rank(const EMatrix& m);
Eis determinant(const EMatrix& m);
// Exact inverse over the fraction field; throws on singular input.
ScaledEMatrix inverse(const EMatrix& m);

// gcd of the entries of a vector, together with a combination achieving it:
// coeffs . v == g.
struct VectorGcd {
  Eis g;
  EVector coeffs;
};
VectorGcd vector_gcd(const EVector& v);

// Smith form R * t * C = diag(divisors) of a square nonsingular matrix.
struct SmithForm {
  std::vector<Eis> divisors;  // canonical associates
  EMatrix column_transform;   // C
};
SmithForm smith(const EMatrix& t);

// Structure of B / A for modules A <= B of equal rank.
struct QuotientStructure {
  std::int64_t order = 1;
  std::vector<Eis> elementary_divisors;  // non-unit divisors only
  bool omega_acts_trivially = true;      // every divisor divides w - 1
  std::string field_tag;                 // "0", "F3^k", "F4^k" or "mixed"

  // coordinates of B's basis after the Smith column transform
  EModule big;
  EMatrix column_transform;
  std::vector<Eis> all_divisors;
};

QuotientStructure quotient_structure(const EModule& small, const EModule& big);

// Canonical coset label of v (an element of B) modulo A; the zero label is
// the all-zero vector.
std::vector<Eis> coset_label(const QuotientStructure& q, const ScaledEVector& v);

}  // namespace eislat
