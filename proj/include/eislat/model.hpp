#pragma once

// The Lorentzian lattice L13,1 as vectors (x0; x1..x13) over E with the
// negative coordinate first and one coordinate per point of P^2 F3, its point
// and line roots, the Y555 root system, and the derivation of the roots with
// inner product theta against the null vector (-4-w; 1^13).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eislat/lattice.hpp"
#include "eislat/plane.hpp"
#include "eislat/report.hpp"

namespace eislat {

struct L131Model {
  PlaneCodes codes;
  EMatrix form;  // diag(-1, 1^13)
  HermitianLattice lattice;
};
const L131Model& l131();

// Membership by residues: x0 = x1 + ... + x13 (mod theta) and the residues of
// x1..x13 lie in C-perp. Independent of the lattice basis.
bool model_contains(const EVector& x);
Eis model_inner(const EVector& x, const EVector& y);
inline Eis model_norm(const EVector& x) { return model_inner(x, x); }

// (x0; values at points) from a point -> value map; unset points are 0.
EVector model_vector(const Eis& x0, const std::map<int, Eis>& at);
EVector point_root(int point);  // (0; theta at the point)
EVector line_root(int line);    // (1; 1 on the line)
EVector null_rho();             // (-4-w; 1^13)
std::string show(const EVector& v);

// The 16 roots attached to an embedding, in diagram order.
std::vector<EVector> y555_roots(const Y555Embedding& e);

std::vector<VerificationRecord> model_checks();
std::vector<VerificationRecord> y555_root_checks(const Y555Embedding& e);
std::vector<VerificationRecord> chain_span_checks(const Y555Embedding& e);

// Invariant subspaces of the coordinate-sum-zero space Z of F3^13 under
// L3(3): spin scan over every line of C, every line of Z/C and every line of
// Z outside C.
struct EnlargementScan {
  std::size_t lines_in_C = 0;
  std::size_t lines_in_quotient = 0;
  std::size_t lines_outside_C = 0;
  std::size_t failures = 0;
  std::string witness;  // first failing seed
};
EnlargementScan enlargement_scan(unsigned threads = 1);
std::vector<VerificationRecord> enlargement_checks(unsigned threads = 1);

// A coordinate pattern (x0; value^count, ...) and all its placements in L.
struct Pattern {
  Eis x0;
  std::vector<std::pair<Eis, int>> values;
  std::string str() const;
};
std::vector<EVector> placements(const Pattern& p);

// Unit scalar times coordinatewise cube roots taking v to a vector with the
// given x0 and coordinates in {0, 1, -1}; nullopt if none exists.
std::optional<EVector> normalize_monomial(const EVector& v, const Eis& x0);

struct DerivationStep {
  std::string name;
  EVector a, b;
  Eis expected_inner;  // <a, b>
  Pattern family;      // the roots the step provides
};
// Steps 1-5 with their witnesses, plus the conjugate variant of step 4.
std::vector<DerivationStep> derivation_steps();

// The two batches: 156 roots (2+theta; 0^3, wb^3, -1^7) indexed by ordered
// line pairs (zeros on the first line, wb on the second), and 234 roots
// (-2wb; wb^4, -1^3, 0^6) indexed by triangles.
struct RootBatches {
  std::vector<EVector> first;
  std::vector<std::pair<int, int>> first_lines;
  std::vector<EVector> second;
};
const RootBatches& root_batches();

std::vector<VerificationRecord> derivation_checks();
std::vector<VerificationRecord> derived_span_checks();

struct SixthRoot {
  std::optional<Eis> zeta_r_first;    // apply T_r, then T_{rho+r}
  std::optional<Eis> zeta_sum_first;  // apply T_{rho+r}, then T_r
};
SixthRoot sixth_root(const EVector& r);
bool is_primitive_sixth_root(const Eis& z);
std::vector<VerificationRecord> sixth_root_checks();

}  // namespace eislat
