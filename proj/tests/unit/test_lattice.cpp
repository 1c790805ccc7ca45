#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <random>
#include <set>

#include "doctest.h"
#include "eislat/enumerate.hpp"
#include "eislat/lattice.hpp"

using namespace eislat;

namespace {

const Eis T = Eis::theta();
const Eis W = Eis::omega();

HermitianLattice standard(const EMatrix& gens) {
  return HermitianLattice(gens, identity(gens.cols()));
}

HermitianLattice a2() {
  EMatrix g(1, 1);
  g << T;
  return standard(g);
}

HermitianLattice d4() {
  EMatrix g(2, 3);
  g << Eis(1), Eis(1), Eis(1), Eis(0), Eis(0), T;
  return standard(g);
}

HermitianLattice e6() {
  EMatrix g(3, 3);
  g << Eis(1), Eis(1), Eis(1), Eis(0), T, Eis(0), Eis(0), Eis(0), T;
  return standard(g);
}

HermitianLattice e8() {
  EMatrix g = zeros(6, 4);
  for (int i = 0; i < 4; ++i) g(i, i) = T;
  g.row(4) << Eis(0), Eis(1), Eis(1), Eis(1);
  g.row(5) << Eis(1), Eis(0), Eis(1), Eis(-1);
  return standard(g);
}

std::complex<double> embed(const Eis& x) {
  return double(x.a()) + double(x.b()) * std::complex<double>(-0.5, std::sqrt(3.0) / 2);
}

// Brute-force oracle: all coordinate vectors in a box that provably contains
// every vector of norm <= bound, using the smallest eigenvalue of the Gram.
std::set<std::vector<std::int64_t>> brute_force(const ScaledEMatrix& gram, double bound) {
  const Eigen::Index n = gram.rows();
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = embed(gram.num(i, j)) / double(gram.den);
  double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(g).eigenvalues().minCoeff();
  REQUIRE(lmin > 0);
  // |c_i|^2 = a^2 - ab + b^2 >= max(a^2, b^2) / 4 ... use the safe factor 4
  const int box = static_cast<int>(std::ceil(std::sqrt(4 * bound / (0.99 * lmin)))) + 1;
  std::set<std::vector<std::int64_t>> out;
  std::vector<int> c(static_cast<std::size_t>(2 * n), -box);
  for (;;) {
    EVector v(n);
    bool nz = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      v(i) = Eis(c[static_cast<std::size_t>(2 * i)], c[static_cast<std::size_t>(2 * i + 1)]);
      nz |= !v(i).is_zero();
    }
    if (nz && coord_norm(gram, v) <= Fraction(static_cast<std::int64_t>(std::llround(bound * 6)), 6)) {
      std::vector<std::int64_t> key;
      for (Eigen::Index i = 0; i < n; ++i) {
        key.push_back(v(i).a());
        key.push_back(v(i).b());
      }
      out.insert(key);
    }
    std::size_t k = 0;
    while (k < c.size() && c[k] == box) c[k++] = -box;
    if (k == c.size()) break;
    ++c[k];
  }
  return out;
}

std::set<std::vector<std::int64_t>> as_set(const std::vector<EVector>& vs) {
  std::set<std::vector<std::int64_t>> out;
  for (const auto& v : vs) {
    std::vector<std::int64_t> key;
    for (Eigen::Index i = 0; i < v.cols(); ++i) {
      key.push_back(v(i).a());
      key.push_back(v(i).b());
    }
    out.insert(key);
  }
  return out;
}

}  // namespace

TEST_CASE("root counts of the small root lattices") {
  CHECK(roots(a2()).size() == 6);
  CHECK(roots(d4()).size() == 24);
  CHECK(roots(e6()).size() == 72);
  CHECK(roots(e8()).size() == 240);
}

TEST_CASE("A2 roots match a brute-force box search") {
  // roots of theta E are theta times units: search |a|,|b| <= 2 directly
  int found = 0;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      Eis x = Eis(a, b) * T;
      if (norm(x) == 3) ++found;
    }
  CHECK(found == 6);
}

TEST_CASE("integrality flags and theta duals") {
  GramInfo ia = gram_and_integrality(a2());
  CHECK(ia.in_theta_dual);
  CHECK(!ia.equals_theta_dual);
  GramInfo i8 = gram_and_integrality(e8());
  CHECK(i8.in_theta_dual);
  CHECK(i8.equals_theta_dual);
  CHECK(theta_dual(e8()) == e8());
  CHECK(theta_dual(a2()) == standard(identity(1)));
  // theta E6' = {x + y + z = 0 mod theta}
  EMatrix g(3, 3);
  g << Eis(1), Eis(-1), Eis(0), Eis(0), Eis(1), Eis(-1), T, Eis(0), Eis(0);
  CHECK(theta_dual(e6()) == standard(g));
}

TEST_CASE("real gram") {
  IntMatrix r = real_gram(a2());
  CHECK(r.rows() == 2);
  IntMatrix s = r / 3;
  CHECK(s.cast<double>().determinant() == doctest::Approx(3));
  CHECK(s(0, 0) == 2);
  CHECK(real_form_even(r));
  IntMatrix r8 = real_gram(e8());
  CHECK(real_form_even(r8));
  CHECK((r8 / 3).cast<double>().determinant() == doctest::Approx(1));
  for (Eigen::Index i = 0; i < 4; ++i) CHECK(r8(2 * i, 2 * i) == 2 * e8().gram().num(i, i).a());
  CHECK_THROWS(real_gram(standard(identity(2))));
}

TEST_CASE("LLL") {
  IntMatrix id = IntMatrix::Identity(3, 3);
  LllResult r = lll_reduce(id);
  CHECK(r.transform == id);
  IntMatrix q = real_gram(e8());
  LllResult l = lll_reduce(q);
  CHECK(is_lll_reduced(l.reduced));
  CHECK(std::llround(l.transform.cast<double>().determinant()) * std::llround(l.transform.cast<double>().determinant()) == 1);
  CHECK(l.reduced.cast<double>().determinant() == doctest::Approx(q.cast<double>().determinant()));
  IntMatrix bad(2, 2);
  bad << 1, 2, 2, 1;
  CHECK_THROWS_AS(lll_reduce(bad), IndefiniteError);
}

TEST_CASE("enumeration agrees with brute force on rank <= 2") {
  std::vector<ScaledEMatrix> grams;
  grams.push_back(a2().gram());
  grams.push_back(d4().gram());
  grams.push_back(theta_dual(d4()).gram());
  grams.push_back(theta_dual(a2()).gram());
  EMatrix skew(2, 2);
  skew << Eis(9), Eis(7, 3) * T, conj(Eis(7, 3) * T), Eis(60);
  grams.push_back(ScaledEMatrix(skew, 1));
  for (const auto& g : grams) {
    for (double bound : {1.0, 1.5, 3.0, 6.0, 9.0}) {
      Fraction fb(static_cast<std::int64_t>(bound * 2), 2);
      CHECK(as_set(vectors_up_to(g, fb)) == brute_force(g, bound));
    }
  }
}

TEST_CASE("minimum norms") {
  CHECK(min_norm(e8()) == Fraction(3));
  CHECK(min_norm(theta_dual(d4())) == Fraction(3, 2));
  CHECK(min_norm(theta_dual(e6()).gram()) == Fraction(2));
  CHECK(collapse_units(roots(e8())).size() == 40);
}

TEST_CASE("signature") {
  EMatrix h(2, 2);
  h << Eis(0), T, conj(T), Eis(0);
  CHECK(signature(h) == Signature{1, 1, 0});
  EMatrix d = zeros(3, 3);
  d(0, 0) = Eis(-1);
  d(1, 1) = Eis(1);
  CHECK(signature(d) == Signature{1, 1, 1});
  CHECK(signature(e8()) == Signature{4, 0, 0});
}

TEST_CASE("orthogonal complement") {
  HermitianLattice l = e8();
  ScaledEVector r(row_vector({Eis(0), Eis(0), Eis(0), T}), 1);
  HermitianLattice c = orth_complement(l, {r});
  CHECK(c.rank() == 3);
  CHECK(roots(c).size() == 72);
  CHECK(gram_and_integrality(c).det == gram_and_integrality(e6()).det);
  CHECK(orth_complement(l, {}) == l);
  std::vector<ScaledEVector> all;
  for (Eigen::Index i = 0; i < l.rank(); ++i) all.push_back(l.ambient(EVector(identity(4).row(i))));
  CHECK(orth_complement(l, all).rank() == 0);
}

TEST_CASE("triflections") {
  HermitianLattice l = e8();
  auto rs = roots(l);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const EVector& r = rs[rng() % rs.size()];
    EMatrix t = triflection_coords(l.gram(), r);
    CHECK(EVector(multiply(r, t)) == EVector(r.unaryExpr([](const Eis& x) { return W * x; })));
    CHECK(multiply(multiply(t, t), t) == identity(4));
    // preserves the form: T G T^* = G
    CHECK(multiply(multiply(t, l.gram().num), adjoint(t)) == l.gram().num);
    // conjugation: T_{rM} = M^{-1} T_r M for an isometry M
    const EVector& s = rs[rng() % rs.size()];
    EMatrix m = triflection_coords(l.gram(), s);
    EMatrix minv = multiply(m, m);
    EVector rm = EVector(multiply(r, m));
    CHECK(triflection_coords(l.gram(), rm) == multiply(multiply(minv, t), m));
  }
  // ambient version
  ScaledEVector r(row_vector({Eis(1), Eis(1), Eis(1)}), 1);
  ScaledEMatrix ta = triflection(identity(3), r);
  CHECK(r * ta == ScaledEVector(row_vector({W, W, W}), 1));
  CHECK_THROWS(triflection(identity(3), ScaledEVector(row_vector({Eis(1), Eis(0), Eis(0)}), 1)));
}

TEST_CASE("split of a hyperbolic plane plus E8") {
  // E8 + hyperbolic plane with Gram [[0, theta], [-theta, 0]]
  EMatrix f = zeros(6, 6);
  f.block(0, 0, 4, 4) = e8().gram().num;
  f(4, 5) = T;
  f(5, 4) = conj(T);
  HermitianLattice l = HermitianLattice::from_gram(f);
  CHECK(gram_and_integrality(l).equals_theta_dual);
  ScaledEVector rho(row_vector({Eis(0), Eis(0), Eis(0), Eis(0), Eis(1), Eis(0)}), 1);
  NullSplit s = split_null(l, rho);
  CHECK(inner(l, s.rho, s.w).num == T);
  CHECK(norm(l, s.w) == Fraction(0));
  CHECK(s.complement.rank() == 4);
  CHECK(roots(s.complement).size() == 240);
  // round trip
  EMatrix gens(6, 6);
  gens.row(0) = s.rho.num;
  gens.row(1) = s.w.num;
  gens.bottomRows(4) = s.complement.basis().num;
  CHECK(hnf(gens) == l.module());
  CHECK_THROWS(split_null(l, ScaledEVector(row_vector({T, Eis(0), Eis(0), Eis(0), Eis(0), Eis(0)}), 1)));
}
