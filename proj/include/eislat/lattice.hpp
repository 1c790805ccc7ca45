#pragma once

// Hermitian lattices over E.
//
// A lattice is the row span of a basis in an ambient space E^m carrying a
// Hermitian form <x,y> = x F y^*, linear in the first argument. An abstract
// Gram matrix G is the special case basis = I, F = G.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eislat/field.hpp"
#include "eislat/module.hpp"

namespace eislat {

class DegenerateError : public std::domain_error {
  using std::domain_error::domain_error;
};

class HermitianLattice {
 public:
  HermitianLattice() = default;
  // Span of the generator rows (zero rows allowed) in the ambient space with form F.
  HermitianLattice(const ScaledEMatrix& generators, EMatrix form);
  HermitianLattice(const EMatrix& generators, EMatrix form) : HermitianLattice(ScaledEMatrix(generators, 1), form) {}

  // Ambient form diag(signs).
  static HermitianLattice diagonal(const std::vector<int>& signs, const ScaledEMatrix& generators);
  static HermitianLattice from_gram(const EMatrix& gram);

  const ScaledEMatrix& basis() const { return module_.basis(); }
  const EModule& module() const { return module_; }
  const EMatrix& form() const { return form_; }
  Eigen::Index rank() const { return module_.rank(); }
  Eigen::Index ambient_dim() const { return form_.rows(); }

  // Gram matrix of the basis rows; entries are num / den.
  const ScaledEMatrix& gram() const { return gram_; }

  ScaledEVector ambient(const EVector& coords) const;
  std::optional<EVector> coords(const ScaledEVector& v) const { return coordinates(module_, v); }
  std::optional<EVector> coords(const EVector& v) const { return coordinates(module_, v); }
  bool contains(const ScaledEVector& v) const { return eislat::contains(module_, v); }
  bool contains(const EVector& v) const { return eislat::contains(module_, v); }
  bool contains(const HermitianLattice& sub) const { return eislat::contains(module_, sub.module_); }

  friend bool operator==(const HermitianLattice& x, const HermitianLattice& y) {
    return x.module_ == y.module_ && x.form_ == y.form_;
  }

 private:
  EModule module_;
  EMatrix form_;
  ScaledEMatrix gram_;
};

// Exact inner product in the ambient space, as a Scaled value num/den.
struct ScaledEis {
  Eis num;
  std::int64_t den = 1;
  bool is_integral() const { return den == 1; }
  std::string str() const;
};
ScaledEis inner(const HermitianLattice& L, const ScaledEVector& x, const ScaledEVector& y);
Fraction norm(const HermitianLattice& L, const ScaledEVector& x);
// Norm of a lattice vector given by coordinates.
Fraction coord_norm(const ScaledEMatrix& gram, const EVector& c);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};
// Signature of a Hermitian matrix over E, by exact congruence diagonalization.
Signature signature(const EMatrix& hermitian);
Signature signature(const HermitianLattice& L);

struct GramInfo {
  ScaledEMatrix gram;
  bool in_theta_dual = false;      // L <= theta L'
  bool equals_theta_dual = false;  // L = theta L'
  Fraction det;                    // det of the Gram matrix (real)
  bool degenerate = false;
};
GramInfo gram_and_integrality(const HermitianLattice& L);

// theta L' inside the rational span of L.
HermitianLattice theta_dual(const HermitianLattice& L);

// Real Gram of the Z-basis {b_i, w b_i}, entries 2 Re <.,.>. Requires an
// integral Gram; throws naming the offending pair otherwise.
IntMatrix real_gram(const EMatrix& gram);
// The same matrix without the integrality check.
IntMatrix real_form(const EMatrix& gram);
IntMatrix real_gram(const HermitianLattice& L);
// Checks that (2/3) Re gives an even integral form.
bool real_form_even(const IntMatrix& real);

// {v in L : <v,s> = 0 for s in S}; S given as ambient rows.
HermitianLattice orth_complement(const HermitianLattice& L, const std::vector<ScaledEVector>& S);

struct NullSplit {
  ScaledEVector rho;
  ScaledEVector w;             // <rho,w> = theta, |w|^2 = 0
  HermitianLattice complement;  // orthogonal to rho and w
};
NullSplit split_null(const HermitianLattice& L, const ScaledEVector& rho);

HermitianLattice direct_sum(const HermitianLattice& L, int copies);

// Gluing of L0^n along a code. Symbols map to multiples of one representative
// v in theta L0' / L0: over F3, s -> lift(s) v; over F4, a + b p -> (a + b w) v.
struct GlueDatum {
  HermitianLattice component;
  int copies = 1;
  FMatrix code;
  ScaledEVector representative;
};
ScaledEVector glue_vector(const GlueDatum& d, const FVector& word);
HermitianLattice glue(const GlueDatum& d);

// Triflection x -> x + (w-1) <x,r>/3 r.
// Ambient form: matrix acting on ambient rows, denominator 3.
ScaledEMatrix triflection(const EMatrix& form, const ScaledEVector& r);
// On lattice coordinates, given the Gram and the coordinates of r; integral
// whenever L <= theta L'.
EMatrix triflection_coords(const ScaledEMatrix& gram, const EVector& r);

}  // namespace eislat
