#pragma once

// Invariants of definite lattices: automorphism counts, root-system
// components and minimal norms of the cosets of theta L' / L.

#include <map>
#include <string>
#include <vector>

#include "eislat/enumerate.hpp"
#include "eislat/lattice.hpp"
#include "eislat/module.hpp"

namespace eislat {

// Number of E-linear isometries of L, by backtracking over images of a basis
// made of minimal vectors. Throws std::domain_error when the minimal vectors
// do not span L.
std::uint64_t aut_order_definite(const HermitianLattice& L, std::size_t cap = kDefaultEnumerationCap);

struct RootComponent {
  Eigen::Index rank = 0;
  std::size_t roots = 0;
  std::string type;  // A2, D4, E6, E8

  friend bool operator==(const RootComponent&, const RootComponent&) = default;
};

class UnclassifiedComponent : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Components of the root system under non-orthogonality, sorted by
// (rank, root count).
std::vector<RootComponent> root_components(const HermitianLattice& L, std::size_t cap = kDefaultEnumerationCap);
std::vector<RootComponent> root_components(const HermitianLattice& L, const std::vector<EVector>& roots);

struct CosetMinimum {
  std::vector<Eis> label;
  Fraction norm;
  ScaledEVector representative;  // lexicographically first minimal vector (ambient)
};

struct CosetNorms {
  QuotientStructure quotient;
  std::vector<CosetMinimum> cosets;  // nonzero cosets, sorted by label
};
CosetNorms coset_min_norms(const HermitianLattice& L, std::size_t cap = kDefaultEnumerationCap);

}  // namespace eislat
