#pragma once

// Vector-space linear algebra over F3 and F4, and invariant-subspace
// spinning under coordinate permutations.

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

namespace eislat {

enum class Field : std::uint8_t { F3 = 3, F4 = 4 };

std::string to_string(Field f);

// Elements are stored as small integers: F3 as 0,1,2; F4 as bit pairs a + 2b
// meaning a + b*p with p^2 = p + 1.
using FElem = std::uint8_t;
using FVector = std::vector<FElem>;

FElem fadd(Field f, FElem x, FElem y);
FElem fsub(Field f, FElem x, FElem y);
FElem fmul(Field f, FElem x, FElem y);
FElem finv(Field f, FElem x);
FElem fneg(Field f, FElem x);
// Identity on F3, Frobenius on F4.
FElem fconj(Field f, FElem x);

struct FMatrix {
  Field field = Field::F3;
  Eigen::Matrix<FElem, Eigen::Dynamic, Eigen::Dynamic> m;

  FMatrix() = default;
  FMatrix(Field f, Eigen::Index rows, Eigen::Index cols);
  FMatrix(Field f, const std::vector<FVector>& rows, Eigen::Index cols);

  Eigen::Index rows() const { return m.rows(); }
  Eigen::Index cols() const { return m.cols(); }
  FVector row(Eigen::Index i) const;
  std::vector<FVector> row_list() const;
};

// Reduced row echelon form with zero rows removed.
FMatrix rref(const FMatrix& a);
Eigen::Index rank(const FMatrix& a);
// Basis (as rows) of {x : a * x^T = 0}.
FMatrix kernel(const FMatrix& a);

// Incrementally built subspace kept in reduced echelon form.
class Subspace {
 public:
  Subspace(Field f, std::size_t dim) : field_(f), dim_(dim) {}

  // Adds v; returns true iff the dimension grew.
  bool insert(FVector v);
  bool contains(FVector v) const;
  std::size_t dimension() const { return basis_.size(); }
  std::size_t ambient_dim() const { return dim_; }
  Field field() const { return field_; }
  const std::vector<FVector>& basis() const { return basis_; }
  FMatrix matrix() const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  // Reduce v against the basis in place; returns the first nonzero index or -1.
  int reduce(FVector& v) const;

  Field field_;
  std::size_t dim_;
  std::vector<FVector> basis_;
  std::vector<int> pivots_;
};

// A permutation of coordinates: p[i] is the image of coordinate i.
using Perm = std::vector<int>;

FVector permute(const Perm& p, const FVector& v);

// Smallest subspace containing every seed and closed under all generators.
Subspace spin(Field f, std::size_t dim, const std::vector<FVector>& seeds, const std::vector<Perm>& gens);
Subspace spin(Field f, const FVector& seed, const std::vector<Perm>& gens);

// Every vector of the span of the rows of g (q^k vectors, k <= 12).
std::vector<FVector> enumerate_span(const FMatrix& g);

std::size_t weight(const FVector& v);
std::string to_string(Field f, const FVector& v);

}  // namespace eislat
