#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>
#include <set>

#include "doctest.h"
#include "eislat/model.hpp"

using namespace eislat;

namespace {

using C = std::complex<double>;
const C w_c(-0.5, std::sqrt(3.0) / 2);
const Eis T = Eis::theta();

C embed(const Eis& x) { return double(x.a()) + double(x.b()) * w_c; }

Eigen::VectorXcd embed(const EVector& v) {
  Eigen::VectorXcd out(v.cols());
  for (Eigen::Index i = 0; i < v.cols(); ++i) out(i) = embed(v(i));
  return out;
}

// <x,y> = -x0 conj(y0) + sum x_i conj(y_i)
C ip(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
  C s = -x(0) * std::conj(y(0));
  for (Eigen::Index i = 1; i < x.size(); ++i) s += x(i) * std::conj(y(i));
  return s;
}

bool near(C a, C b) { return std::abs(a - b) < 1e-9; }

Eigen::VectorXcd reflect(const Eigen::VectorXcd& x, const Eigen::VectorXcd& r) {
  return x + (w_c - 1.0) * ip(x, r) / 3.0 * r;
}

Eigen::Index gram_rank(const std::vector<EVector>& vs) {
  Eigen::MatrixXcd g(static_cast<Eigen::Index>(vs.size()), static_cast<Eigen::Index>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = ip(embed(vs[i]), embed(vs[j]));
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(g);
  lu.setThreshold(1e-9);
  return lu.rank();
}

}  // namespace

TEST_CASE("membership predicate agrees with the lattice span") {
  const HermitianLattice& L = l131().lattice;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> small(-2, 2);
  int members = 0;
  for (int trial = 0; trial < 400; ++trial) {
    EVector x(1, 14);
    for (Eigen::Index i = 0; i < 14; ++i) x(i) = Eis(small(rng), small(rng));
    CHECK(model_contains(x) == L.contains(x));
    // integer combinations of the basis are always members
    EVector c(1, L.rank());
    for (Eigen::Index i = 0; i < L.rank(); ++i) c(i) = Eis(small(rng), small(rng));
    ScaledEVector y = L.ambient(c);
    REQUIRE(y.den == 1);
    CHECK(model_contains(y.num));
    // a lattice vector moved in one coordinate: a mix of members and not
    EVector z = y.num;
    z(static_cast<Eigen::Index>(rng() % 14)) += Eis(small(rng), small(rng));
    CHECK(model_contains(z) == L.contains(z));
    members += model_contains(z);
  }
  CHECK(members > 0);
  CHECK(members < 400);
  CHECK(model_contains(null_rho()));
}

TEST_CASE("point and line roots by floating arithmetic") {
  const Plane& P = plane();
  for (int i = 0; i < 13; ++i) {
    CHECK(near(ip(embed(point_root(i)), embed(point_root(i))), 3.0));
    CHECK(near(ip(embed(line_root(i)), embed(line_root(i))), 3.0));
    for (int j = 0; j < 13; ++j)
      CHECK(near(ip(embed(point_root(i)), embed(line_root(j))), P.on(i, j) ? embed(T) : C(0)));
  }
  CHECK(near(ip(embed(null_rho()), embed(null_rho())), 0.0));
  std::vector<EVector> all;
  for (int i = 0; i < 13; ++i) all.push_back(point_root(i));
  for (int i = 0; i < 13; ++i) all.push_back(line_root(i));
  CHECK(gram_rank(all) == 14);
}

TEST_CASE("Y555 roots have a rank 14 Gram matrix") {
  auto e = analyze_embeddings(plane()).first;
  CHECK(gram_rank(y555_roots(e)) == 14);
  std::vector<EVector> f;
  for (int i : y555_chain_F()) f.push_back(y555_roots(e)[static_cast<std::size_t>(i)]);
  CHECK(gram_rank(f) == 4);
}

TEST_CASE("the two batches") {
  const RootBatches& B = root_batches();
  // ordered pairs of lines; triangles of points
  CHECK(B.first.size() == 13 * 12);
  CHECK(B.second.size() == 13 * 12 * 9 / 6);
  std::set<std::string> seen;
  const auto rho = embed(null_rho());
  for (const auto* batch : {&B.first, &B.second})
    for (const auto& r : *batch) {
      seen.insert(show(r));
      CHECK(model_contains(r));
      CHECK(near(ip(embed(r), embed(r)), 3.0));
      CHECK(near(ip(embed(r), rho), embed(T)));
    }
  CHECK(seen.size() == 390);
  // (2+theta; 0^3, wb^3, -1^7) against rho, written out
  C x0 = 2.0 + embed(T), wb = std::conj(w_c);
  C direct = -x0 * std::conj(embed(Eis(-4, -1))) + 3.0 * wb - 7.0;
  CHECK(near(direct, embed(T)));
  CHECK(near(ip(embed(B.first[0]), rho), direct));
}

TEST_CASE("delta vectors by floating arithmetic") {
  const RootBatches& B = root_batches();
  std::map<std::pair<int, int>, Eigen::VectorXcd> r;
  for (std::size_t i = 0; i < B.first.size(); ++i) r[B.first_lines[i]] = embed(B.first[i]);
  auto delta = [&](int i, int j) -> Eigen::VectorXcd { return -w_c * (r.at({i, j}) - r.at({j, i})); };
  CHECK(near(ip(delta(0, 1), delta(0, 1)), 6.0));
  CHECK(near(ip(delta(0, 1), delta(1, 2)), -3.0));
  CHECK(near(ip(delta(0, 1), delta(2, 3)), 0.0));
  CHECK((delta(0, 1) + delta(1, 0)).norm() < 1e-9);
}

TEST_CASE("composed triflections scale rho by a primitive sixth root") {
  const RootBatches& B = root_batches();
  const auto rho = embed(null_rho());
  for (const EVector& r : {point_root(0), B.first[0], B.second[0]}) {
    auto er = embed(r);
    auto es = embed(EVector(null_rho() + r));
    // T_r first, then T_(rho+r)
    Eigen::VectorXcd img = reflect(reflect(rho, er), es);
    C zeta = img(0) / rho(0);
    CHECK((img - zeta * rho).norm() < 1e-9);
    CHECK(near(zeta * zeta * zeta, -1.0));
    CHECK(!near(zeta, -1.0));
    SixthRoot z = sixth_root(r);
    REQUIRE(z.zeta_r_first);
    CHECK(near(embed(*z.zeta_r_first), zeta));
    CHECK(is_primitive_sixth_root(*z.zeta_r_first));
  }
  CHECK(is_primitive_sixth_root(-Eis::omega()));
  CHECK(!is_primitive_sixth_root(Eis::omega()));
  CHECK(!is_primitive_sixth_root(Eis(-1)));
}

TEST_CASE("placements and monomial normalization") {
  auto ps = placements({T, {{1, 3}, {-1, 3}, {0, 7}}});
  CHECK(ps.size() == 156);
  for (const auto& v : ps) CHECK(model_contains(v));
  EVector v = model_vector(Eis::omega() * T, {{0, Eis::omega()}, {1, -Eis::omega_bar()}});
  auto n = normalize_monomial(v, T);
  REQUIRE(n);
  CHECK((*n)(1) == Eis(1));
  CHECK((*n)(2) == Eis(-1));
  CHECK(!normalize_monomial(model_vector(T, {{0, Eis(2)}}), T));
}

TEST_CASE("derivation steps") {
  for (const auto& s : derivation_steps()) {
    CAPTURE(s.name);
    CHECK(near(ip(embed(s.a), embed(s.b)), embed(s.expected_inner)));
    CHECK(near(ip(embed(s.a + s.b), embed(s.a + s.b)), 3.0));
  }
}

TEST_CASE("spin scan counts") {
  EnlargementScan s = enlargement_scan(2);
  const std::size_t lines_C = (729 - 1) / 2, lines_Z = (531441 - 1) / 2;
  CHECK(s.lines_in_C == lines_C);
  CHECK(s.lines_in_quotient == lines_C);
  CHECK(s.lines_outside_C == lines_Z - lines_C);
  CHECK(s.failures == 0);
  CHECK(s.witness.empty());
}
