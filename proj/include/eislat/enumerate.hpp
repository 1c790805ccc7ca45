#pragma once

// Short-vector enumeration for definite lattices.
//
// Work happens on the integral real form Q with entries 2 Re <.,.> on the
// Z-basis {b_i, w b_i}: x Q x^T = 2 |v|^2 (times the Gram denominator). LLL
// preconditions Q, Fincke-Pohst walks the reduced form, and every candidate is
// re-checked with exact integer arithmetic before it is reported.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "eislat/lattice.hpp"

namespace eislat {

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t partial) : std::runtime_error(what), partial_count(partial) {}
  std::size_t partial_count;
};

class IndefiniteError : public std::domain_error {
  using std::domain_error::domain_error;
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

struct LllResult {
  IntMatrix transform;  // unimodular; reduced = transform * Q * transform^T
  IntMatrix reduced;
};
// LLL with Lovasz parameter delta on a positive definite integer Gram matrix.
LllResult lll_reduce(const IntMatrix& q, double delta = 0.99);
// Exact check of the size and Lovasz conditions on a reduced Gram.
bool is_lll_reduced(const IntMatrix& q, double delta = 0.99);

// Nonzero lattice vectors (as coordinates over the lattice basis) with
// |v|^2 <= bound, sorted lexicographically.
std::vector<EVector> vectors_up_to(const ScaledEMatrix& gram, const Fraction& bound,
                                   std::size_t cap = kDefaultEnumerationCap);
// Vectors of norm exactly n.
std::vector<EVector> vectors_of_norm(const ScaledEMatrix& gram, const Fraction& n,
                                     std::size_t cap = kDefaultEnumerationCap);

inline std::vector<EVector> enumerate_short(const HermitianLattice& L, const Fraction& n,
                                            std::size_t cap = kDefaultEnumerationCap) {
  return vectors_of_norm(L.gram(), n, cap);
}
inline std::vector<EVector> roots(const HermitianLattice& L, std::size_t cap = kDefaultEnumerationCap) {
  return vectors_of_norm(L.gram(), Fraction(3), cap);
}

// Minimum nonzero norm; 0 for the zero lattice.
Fraction min_norm(const ScaledEMatrix& gram, std::size_t cap = kDefaultEnumerationCap);
inline Fraction min_norm(const HermitianLattice& L, std::size_t cap = kDefaultEnumerationCap) {
  return min_norm(L.gram(), cap);
}

// One representative per unit class, the one whose first nonzero coordinate
// is a canonical associate.
std::vector<EVector> collapse_units(const std::vector<EVector>& vs);

}  // namespace eislat
