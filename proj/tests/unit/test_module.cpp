#include <algorithm>
#include <random>

#include "doctest.h"
#include "eislat/module.hpp"

using namespace eislat;

namespace {

EMatrix random_matrix(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  EMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Eis(d(rng), d(rng));
  return m;
}

// Random unimodular matrix: product of elementary row operations and unit scalings.
EMatrix random_unimodular(std::mt19937_64& rng, Eigen::Index n) {
  EMatrix u = identity(n);
  std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);
  std::uniform_int_distribution<int> c(-2, 2), unit(0, 5);
  for (int s = 0; s < 3 * n; ++s) {
    Eigen::Index i = pick(rng), j = pick(rng);
    if (i == j) {
      Eis v = units()[static_cast<std::size_t>(unit(rng))];
      u.row(i) = u.row(i).unaryExpr([&](const Eis& x) { return v * x; });
    } else {
      Eis q(c(rng), c(rng));
      for (Eigen::Index k = 0; k < n; ++k) u(i, k) += q * u(j, k);
    }
  }
  return u;
}

}  // namespace

TEST_CASE("hnf of (3, theta) is the canonical associate of theta") {
  EMatrix m(2, 1);
  m << Eis(3), Eis::theta();
  EModule h = hnf(m);
  REQUIRE(h.rank() == 1);
  CHECK(h.basis().num(0, 0) == canonical_associate(Eis::theta()));
  CHECK(h.basis().den == 1);
}

TEST_CASE("hnf of an identity basis") {
  // the canonical associate of 1 is 1 + w, the unit maximizing (a, b)
  const Eis one = canonical_associate(Eis(1));
  CHECK(one == Eis(1, 1));
  EModule h = hnf(identity(4));
  CHECK(h.basis().num == identity(4).unaryExpr([&](const Eis& x) { return one * x; }));
  EMatrix u = identity(3);
  u(1, 1) = Eis::omega();
  CHECK(hnf(u) == hnf(identity(3)));
}

TEST_CASE("hnf canonicity under row shuffles and unimodular mixing") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index r = 2 + trial % 4, c = 1 + trial % 5;
    EMatrix m = random_matrix(rng, r, c, 6);
    EModule h = hnf(m);
    // idempotence
    CHECK(hnf(h.basis()) == h);
    // shuffle
    std::vector<Eigen::Index> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EMatrix p(r, c);
    for (Eigen::Index i = 0; i < r; ++i) p.row(i) = m.row(perm[static_cast<std::size_t>(i)]);
    CHECK(hnf(p) == h);
    // unimodular mixing
    CHECK(hnf(multiply(random_unimodular(rng, r), m)) == h);
  }
}

TEST_CASE("membership") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    EMatrix m = random_matrix(rng, 3, 4, 5);
    EModule h = hnf(m);
    EMatrix coeff = random_matrix(rng, 1, 3, 3);
    EVector v = EVector(multiply(coeff, m));
    auto c = coordinates(h, v);
    REQUIRE(c.has_value());
    CHECK(EVector(multiply(*c, h.basis().num)) == v);
    Eis s(2, -1);
    CHECK(contains(h, EVector(v.unaryExpr([&](const Eis& x) { return s * x; }))));
  }
  EVector v = row_vector({Eis(1), Eis(2, 1)});
  EModule single = hnf(EMatrix(v));
  auto c = coordinates(single, v);
  REQUIRE(c.has_value());
  CHECK(unit_index((*c)(0)) >= 0);
  CHECK(!contains(single, row_vector({Eis(1), Eis(0)})));
  // scaled membership: v/2 is not in the module
  CHECK(!contains(single, ScaledEVector(v, 2)));
}

TEST_CASE("kernel, rank, determinant, inverse") {
  EMatrix a(3, 2);
  a << Eis(1), Eis(2), Eis(2), Eis(4), Eis(0, 1), Eis(0, 2);
  CHECK(rank(a) == 1);
  EMatrix k = left_kernel(a);
  CHECK(k.rows() == 2);
  CHECK(is_zero(multiply(k, a)));

  EMatrix m(2, 2);
  m << Eis(2), Eis(1), Eis(1), Eis(1, 1);
  Eis d = determinant(m);
  CHECK(d == Eis(2) * Eis(1, 1) - Eis(1));
  ScaledEMatrix inv = inverse(m);
  ScaledEMatrix prod = ScaledEMatrix(m, 1) * inv;
  CHECK(prod == ScaledEMatrix(identity(2), 1));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    EMatrix r = random_matrix(rng, 3, 3, 4);
    if (determinant(r).is_zero()) continue;
    CHECK((ScaledEMatrix(r, 1) * inverse(r)) == ScaledEMatrix(identity(3), 1));
  }
}

TEST_CASE("vector gcd") {
  EVector v = row_vector({Eis(3), Eis::theta() * Eis(2), Eis(6)});
  VectorGcd g = vector_gcd(v);
  Eis s(0);
  for (Eigen::Index i = 0; i < v.cols(); ++i) s += g.coeffs(i) * v(i);
  CHECK(s == g.g);
  CHECK(canonical_associate(g.g) == canonical_associate(Eis::theta()));
}

TEST_CASE("smith form and quotients") {
  // theta E^2 inside E^2: quotient F3^2
  EMatrix a = identity(2).unaryExpr([](const Eis& x) { return x * Eis::theta(); });
  QuotientStructure q = quotient_structure(hnf(a), hnf(identity(2)));
  CHECK(q.order == 9);
  CHECK(q.field_tag == "F3^2");
  CHECK(q.omega_acts_trivially);

  // 2E inside E: F4
  EMatrix two(1, 1);
  two << Eis(2);
  QuotientStructure q4 = quotient_structure(hnf(two), hnf(identity(1)));
  CHECK(q4.order == 4);
  CHECK(q4.field_tag == "F4^1");
  CHECK(!q4.omega_acts_trivially);

  QuotientStructure triv = quotient_structure(hnf(identity(3)), hnf(identity(3)));
  CHECK(triv.order == 1);
  CHECK(triv.field_tag == "0");

  // coset labels separate cosets and vanish on the small module
  CHECK(coset_label(q, ScaledEVector(row_vector({Eis::theta(), Eis(0)}), 1)) == std::vector<Eis>{Eis(0), Eis(0)});
  auto l1 = coset_label(q, ScaledEVector(row_vector({Eis(1), Eis(0)}), 1));
  auto l2 = coset_label(q, ScaledEVector(row_vector({Eis::omega(), Eis::theta()}), 1));
  CHECK(l1 == l2);
  auto l3 = coset_label(q, ScaledEVector(row_vector({Eis(0), Eis(1)}), 1));
  CHECK(l1 != l3);
}
