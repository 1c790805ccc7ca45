#include <functional>
#include <map>
#include <set>

#include "doctest.h"
#include "eislat/catalog.hpp"
#include "eislat/enumerate.hpp"
#include "eislat/model.hpp"

using namespace eislat;

namespace {

const Eis T = Eis::theta();

// Norm-3 vectors of L by a box search over the ambient coordinates. A root
// has every coordinate of norm at most 3, so |a|,|b| <= 2 suffices.
std::size_t box_roots(const HermitianLattice& L) {
  const Eigen::Index n = L.ambient_dim();
  std::vector<Eis> box;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      if (norm(Eis(a, b)) <= 3) box.push_back(Eis(a, b));
  std::size_t count = 0;
  EVector v = zeros(1, n);
  std::function<void(Eigen::Index, std::int64_t)> rec = [&](Eigen::Index i, std::int64_t used) {
    if (i == n) {
      count += used == 3 && L.contains(v);
      return;
    }
    for (const Eis& x : box) {
      if (used + norm(x) > 3) continue;
      v(i) = x;
      rec(i + 1, used + norm(x));
    }
    v(i) = 0;
  };
  rec(0, 0);
  return count;
}

}  // namespace

TEST_CASE("root lattices match their defining congruences") {
  HermitianLattice d4 = root_lattice(RootLatticeKind::D4);
  CHECK(d4.contains(row_vector({Eis::omega(), Eis::omega(), Eis(1)})));
  CHECK(!d4.contains(row_vector({Eis(1), Eis(0), Eis(1)})));
  HermitianLattice e6 = root_lattice(RootLatticeKind::E6);
  CHECK(e6.contains(row_vector({Eis(1), Eis::omega(), Eis::omega_bar()})));
  CHECK(!e6.contains(row_vector({Eis(1), Eis(1), Eis(0)})));
  HermitianLattice e8 = root_lattice(RootLatticeKind::E8);
  CHECK(e8.contains(row_vector({Eis(0), Eis(1), Eis(1), Eis(1)})));
  CHECK(!e8.contains(row_vector({Eis(1), Eis(1), Eis(0), Eis(0)})));
  CHECK(gram_and_integrality(e8).equals_theta_dual);
}

TEST_CASE("root counts by box search") {
  CHECK(box_roots(root_lattice(RootLatticeKind::A2)) == 6);
  CHECK(box_roots(root_lattice(RootLatticeKind::D4)) == 24);
  CHECK(box_roots(root_lattice(RootLatticeKind::E6)) == 72);
  CHECK(box_roots(root_lattice(RootLatticeKind::E8)) == 240);
}

TEST_CASE("table rows") {
  // |R(E6)| = 27 |SL2(3)|; |Aut E6| = 2 * 155520 / 240
  CHECK(expected_table1(RootLatticeKind::E6).reflection_group_order == 27 * 24);
  CHECK(expected_table1(RootLatticeKind::E6).aut_order == 2 * 155520 / 240);
  for (auto k : {RootLatticeKind::A2, RootLatticeKind::D4, RootLatticeKind::E6}) {
    CAPTURE(to_string(k));
    Table1Record got = compute_table1(k);
    CHECK(got == expected_table1(k));
    CHECK(got.roots == box_roots(root_lattice(k)));
  }
}

TEST_CASE("verify_table1 names failing columns through the cap") {
  auto recs = verify_table1(RootLatticeKind::E6, 100);
  bool capped = false;
  for (const auto& r : recs) capped = capped || (r.id == "table1.E6.cap" && !r.pass);
  CHECK(capped);
}

TEST_CASE("Niemeier gluings") {
  for (auto k : {NiemeierKind::A2_12, NiemeierKind::D4_6, NiemeierKind::E6_4, NiemeierKind::E8_3}) {
    CAPTURE(to_string(k));
    NiemeierData d = niemeier(k);
    CHECK(d.lattice.rank() == 12);
    CHECK(gram_and_integrality(d.lattice).equals_theta_dual);
    // no new roots: the root count equals that of L0
    CHECK(roots(d.lattice).size() == roots(d.base).size());
  }
}

TEST_CASE("Leech quotient") {
  HermitianLattice L = leech_from_l131();
  CHECK(L.rank() == 12);
  CHECK(roots(L).empty());
  CHECK(min_norm(L) == Fraction(6));
  // every vector of the quotient is orthogonal to rho
  const EVector rho = null_rho();
  for (Eigen::Index i = 0; i < L.rank(); ++i) {
    ScaledEVector b = L.ambient(EVector(identity(L.rank()).row(i)));
    REQUIRE(b.den == 1);
    CHECK(model_inner(b.num, rho).is_zero());
  }
}

TEST_CASE("null types") {
  for (const auto& ex : null_examples()) {
    CAPTURE(ex.label);
    CHECK(model_norm(ex.rho).is_zero());
    CHECK(classify_null(ex.rho) == ex.expected);
  }
  // constant on unit multiples
  const EVector rho = null_examples()[1].rho;
  for (const Eis& u : units()) CHECK(classify_null(EVector(rho * u)) == NullType::E6type);
  // the E8 example with the thetas at another four points in general position
  const Plane& P = plane();
  std::vector<int> last;
  for (int a = 0; a < 13; ++a)
    for (int b = a + 1; b < 13; ++b)
      for (int c = b + 1; c < 13; ++c)
        for (int d = c + 1; d < 13; ++d) {
          const int q[4] = {a, b, c, d};
          bool general = true;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              for (int k = j + 1; k < 4; ++k) general = general && !P.on(q[k], P.join(q[i], q[j]));
          if (general) last = {a, b, c, d};
        }
  REQUIRE(last.size() == 4);
  std::map<int, Eis> at;
  for (int p : last) at[p] = T;
  CHECK(classify_null(model_vector(Eis(2) * T, at)) == NullType::E8type);
  CHECK_THROWS_AS(classify_null(point_root(0)), std::invalid_argument);
  CHECK_THROWS_AS(classify_null(EVector(null_rho() * T)), std::invalid_argument);
}
