#pragma once

// The four indecomposable Eisenstein root lattices with their invariants, the
// glued Eisenstein Niemeier lattices, the Leech lattice as a null quotient of
// L13,1, and the type of a primitive null vector of L13,1.

#include <optional>
#include <string>
#include <vector>

#include "eislat/invariants.hpp"
#include "eislat/lattice.hpp"
#include "eislat/report.hpp"

namespace eislat {

enum class RootLatticeKind { A2, D4, E6, E8 };
std::string to_string(RootLatticeKind k);

// A2 = theta E; D4 = {(x,x,y) : x = y mod theta}; E6 = {(x,y,z) : x = y = z
// mod theta}; E8 = preimage of the tetracode in E^4. All with the standard form.
HermitianLattice root_lattice(RootLatticeKind k);

struct Table1Record {
  RootLatticeKind kind = RootLatticeKind::A2;
  std::size_t roots = 0;
  std::uint64_t reflection_group_order = 0;  // |R|
  std::uint64_t aut_order = 0;
  std::int64_t glue_order = 1;
  std::string glue_tag;                   // "F3^1", "F4^1" or "0"
  std::optional<Fraction> coset_min_norm;  // none when theta L' = L

  friend bool operator==(const Table1Record&, const Table1Record&) = default;
};

Table1Record expected_table1(RootLatticeKind k);
// Computes every column from scratch.
Table1Record compute_table1(RootLatticeKind k, std::size_t closure_cap = 200000);
// One record per column, plus the structural checks on the lattice.
std::vector<VerificationRecord> verify_table1(RootLatticeKind k, std::size_t closure_cap = 200000);

enum class NiemeierKind { A2_12, D4_6, E6_4, E8_3 };
std::string to_string(NiemeierKind k);
struct NiemeierData {
  GlueDatum glue;          // code is empty for E8^3
  HermitianLattice lattice;
  HermitianLattice base;   // L0, the direct sum of the components
};
// golay, when given, replaces the built-in ternary Golay generator.
NiemeierData niemeier(NiemeierKind k, const FMatrix* golay = nullptr);
std::size_t expected_niemeier_roots(NiemeierKind k);
std::vector<VerificationRecord> niemeier_checks(NiemeierKind k, std::size_t cap, const FMatrix* golay = nullptr);

HermitianLattice leech_from_l131();
std::vector<VerificationRecord> leech_checks(std::size_t cap);

enum class NullType { A2type, D4type, E6type, E8type, LeechType };
std::string to_string(NullType t);
// Throws std::invalid_argument for a non-null, imprimitive or non-member
// vector, and std::runtime_error for an unrecognized component multiset.
NullType classify_null(const EVector& rho, std::size_t cap = kDefaultEnumerationCap);

struct NullExample {
  std::string label;
  EVector rho;
  NullType expected;
};
// The five example null vectors, with placements fixed by the plane labels.
std::vector<NullExample> null_examples();
std::vector<VerificationRecord> null_type_checks(std::size_t cap);

}  // namespace eislat
