#include <random>
#include <set>

#include "doctest.h"
#include "eislat/enumerate.hpp"
#include "eislat/group.hpp"
#include "eislat/lattice.hpp"

using namespace eislat;

namespace {

const Eis T = Eis::theta();

// Plain breadth-first closure, kept separate from the library's.
std::size_t naive_order(const std::vector<ScaledEMatrix>& gens) {
  std::set<std::vector<std::int64_t>> seen;
  std::vector<ScaledEMatrix> todo{ScaledEMatrix(identity(gens.front().num.rows()), 1)};
  seen.insert(flat_key(todo.front()));
  while (!todo.empty()) {
    ScaledEMatrix g = todo.back();
    todo.pop_back();
    for (const auto& h : gens) {
      ScaledEMatrix x = g * h;
      if (seen.insert(flat_key(x)).second) todo.push_back(x);
    }
  }
  return seen.size();
}

ScaledEMatrix tri(std::initializer_list<Eis> r) { return triflection(identity(static_cast<Eigen::Index>(r.size())), ScaledEVector(row_vector(r), 1)); }

}  // namespace

TEST_CASE("closure orders of small triflection groups") {
  auto a = tri({Eis(1), Eis(1), Eis(1)});
  auto b = tri({Eis(0), Eis(0), T});
  auto c = tri({T, Eis(0), Eis(0)});
  // a and b braid: |<a,b>|^2 = 3
  CHECK(closure_group(std::vector<ScaledEMatrix>{a}).order == 3);
  CHECK(closure_group(std::vector<ScaledEMatrix>{a, b}).order == naive_order({a, b}));
  CHECK(naive_order({a, b}) == 24);
  // b and c are orthogonal: Z/3 x Z/3
  CHECK(closure_group(std::vector<ScaledEMatrix>{b, c}).order == 9);
  CHECK(closure_group(std::vector<ScaledEMatrix>{a, b, c}).order == naive_order({a, b, c}));
}

TEST_CASE("closure cap") {
  auto a = tri({Eis(1), Eis(1), Eis(1)});
  auto b = tri({Eis(0), Eis(0), T});
  CHECK_THROWS_AS(closure_group(std::vector<ScaledEMatrix>{a, b}, 10), CapExceeded);
}

TEST_CASE("kept elements and membership") {
  auto a = tri({Eis(1), Eis(1), Eis(1)});
  auto b = tri({Eis(0), Eis(0), T});
  MatrixGroup g = closure_group(std::vector<ScaledEMatrix>{a, b}, 1000, true);
  REQUIRE(g.elements.size() == 24);
  CHECK(g.elements.front() == ScaledEMatrix(identity(3), 1));
  CHECK(g.contains(a * b * a));
  CHECK(!g.contains(tri({T, Eis(0), Eis(0)})));
}

TEST_CASE("permutation closure") {
  Perm cycle{1, 2, 3, 4, 0}, swap{1, 0, 2, 3, 4};
  CHECK(perm_closure({cycle, swap}, 5).order() == 120);
  CHECK(perm_closure({cycle}, 5).order() == 5);
  PermGroup g = perm_closure({Perm{1, 0, 2, 3}}, 4);
  CHECK(g.orbit(0) == std::vector<int>{0, 1});
  CHECK(g.orbit(3) == std::vector<int>{3});
  Perm p{2, 0, 1}, q{1, 2, 0};
  CHECK(compose(p, inverse(p)) == identity_perm(3));
  // p first, then q
  CHECK(compose(p, q)[0] == q[p[0]]);
}

TEST_CASE("triflection conjugation under random isometries") {
  // E8 as the tetracode preimage; isometries drawn as random words in its
  // triflections.
  EMatrix g = zeros(6, 4);
  for (Eigen::Index i = 0; i < 4; ++i) g(i, i) = T;
  g.row(4) = row_vector({Eis(0), Eis(1), Eis(1), Eis(1)});
  g.row(5) = row_vector({Eis(1), Eis(0), Eis(1), Eis(-1)});
  HermitianLattice l(g, identity(4));
  auto rs = roots(l);
  REQUIRE(rs.size() == 240);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    EMatrix m = identity(4);
    for (int k = 0; k < 6; ++k) m = multiply(m, triflection_coords(l.gram(), rs[rng() % rs.size()]));
    REQUIRE(multiply(multiply(m, l.gram().num), adjoint(m)) == l.gram().num);
    ScaledEMatrix inv = inverse(m);
    REQUIRE(inv.den == 1);
    const EMatrix& minv = inv.num;
    const EVector& r = rs[rng() % rs.size()];
    EMatrix t = triflection_coords(l.gram(), r);
    CHECK(triflection_coords(l.gram(), EVector(multiply(r, m))) == multiply(multiply(minv, t), m));
  }
}
