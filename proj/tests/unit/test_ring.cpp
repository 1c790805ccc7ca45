#include <complex>
#include <random>

#include "doctest.h"
#include "eislat/ring.hpp"

using namespace eislat;

namespace {

// Independent oracle: embed a + bw into C with w = exp(2 pi i / 3).
std::complex<double> embed(const Eis& x) {
  const std::complex<double> w(-0.5, std::sqrt(3.0) / 2);
  return double(x.a()) + double(x.b()) * w;
}

bool close(std::complex<double> u, std::complex<double> v) { return std::abs(u - v) < 1e-9; }

}  // namespace

TEST_CASE("basic identities") {
  const Eis w = Eis::omega(), t = Eis::theta();
  CHECK(t * conj(t) == Eis(3));
  CHECK(w * w + w + Eis(1) == Eis(0));
  CHECK(conj(t) == -t);
  CHECK(conj(t) == Eis(-1, -2));
  CHECK(norm(t) == 3);
  CHECK((w - Eis(1)) * t == Eis(3) * w * w);
  CHECK(units().size() == 6);
}

TEST_CASE("divmod examples") {
  const Eis t = Eis::theta();
  auto r = divmod(Eis(3), t);
  CHECK(r.r == Eis(0));
  CHECK(r.q * t == Eis(3));
  CHECK(Eis(3) == -(t * t));

  Eis x(7, -4);
  auto one = divmod(x, Eis(1));
  CHECK(one.q == x);
  CHECK(one.r == Eis(0));

  auto d = divmod(Eis::omega() - Eis(1), t);
  CHECK(d.r == Eis(0));
  CHECK(d.q == Eis(1, 1));
  CHECK_THROWS_AS(divmod(x, Eis(0)), DivisionByZero);
}

TEST_CASE("ties round toward zero") {
  // 1/2 and -1/2 in the a coordinate: both quotients have a = 0
  CHECK(divmod(Eis(1), Eis(2)).q == Eis(0));
  CHECK(divmod(Eis(-1), Eis(2)).q == Eis(0));
  CHECK(divmod(Eis(3), Eis(2)).q == Eis(1));
  CHECK(divmod(Eis(-3), Eis(2)).q == Eis(-1));
}

TEST_CASE("residues") {
  auto rt = residues(Eis::theta());
  CHECK(rt.mod_theta.v == 0);
  CHECK(rt.mod_two.v == 1);
  auto rw = residues(Eis::omega());
  CHECK(rw.mod_theta.v == 1);
  CHECK(rw.mod_two.v == 2);
  auto r0 = residues(Eis(0));
  CHECK(r0.mod_theta.v == 0);
  CHECK(r0.mod_two.v == 0);
}

TEST_CASE("residue maps are ring homomorphisms on a box") {
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int d = -3; d <= 3; ++d) {
          Eis x(a, b), y(c, d);
          CHECK(residue_mod_theta(x + y) == residue_mod_theta(x) + residue_mod_theta(y));
          CHECK(residue_mod_theta(x * y) == residue_mod_theta(x) * residue_mod_theta(y));
          CHECK(residue_mod_2(x + y) == residue_mod_2(x) + residue_mod_2(y));
          CHECK(residue_mod_2(x * y) == residue_mod_2(x) * residue_mod_2(y));
          CHECK(residue_mod_2(conj(x)) == conj(residue_mod_2(x)));
        }
  // kernel of the mod-theta map is theta E
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b) {
      Eis x(a, b);
      CHECK((residue_mod_theta(x).v == 0) == divmod(x, Eis::theta()).r.is_zero());
      CHECK((residue_mod_2(x).v == 0) == divmod(x, Eis(2)).r.is_zero());
    }
}

TEST_CASE("randomized ring axioms and Euclidean property") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> dist(-1000, 1000);
  auto draw = [&] { return Eis(dist(rng), dist(rng)); };
  int cases = 0;
  for (int i = 0; i < 20000; ++i) {
    Eis x = draw(), y = draw(), z = draw();
    REQUIRE(close(embed(x * y), embed(x) * embed(y)));
    REQUIRE(close(embed(conj(x)), std::conj(embed(x))));
    REQUIRE(norm(x) == static_cast<std::int64_t>(std::llround(std::norm(embed(x)))));
    REQUIRE(norm(x * y) == norm(x) * norm(y));
    REQUIRE(conj(x * y) == conj(x) * conj(y));
    REQUIRE(x * (y + z) == x * y + x * z);
    REQUIRE((x * y) * z == x * (y * z));
    REQUIRE(two_re(x) == 2 * x.a() - x.b());
    if (!y.is_zero()) {
      auto qr = divmod(x, y);
      REQUIRE(qr.q * y + qr.r == x);
      REQUIRE(norm(qr.r) < norm(y));
      auto qc = divmod_canonical(x, y);
      REQUIRE(qc.q * y + qc.r == x);
      REQUIRE(norm(qc.r) < norm(y));
    }
    ++cases;
  }
  CHECK(cases >= 10000);
}

TEST_CASE("canonical associates and gcd") {
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b) {
      Eis x(a, b);
      if (x.is_zero()) continue;
      Eis c = canonical_associate(x);
      for (const Eis& u : units()) {
        CHECK(canonical_associate(u * x) == c);
        CHECK(!(c < u * x));
      }
    }
  CHECK(canonical_associate(gcd(Eis(3), Eis::theta())) == canonical_associate(Eis::theta()));
  CHECK(unit_index(gcd(Eis(2), Eis::theta())) >= 0);
}

TEST_CASE("overflow is detected") {
  Eis big(std::numeric_limits<std::int64_t>::max() / 2, 1);
  CHECK_THROWS_AS(big * big, OverflowError);
  CHECK_THROWS_AS(Eis(std::numeric_limits<std::int64_t>::max()) + Eis(1), OverflowError);
}

TEST_CASE("F3 and F4 field axioms") {
  for (std::uint8_t x = 1; x < 3; ++x) CHECK(F3{x} * inverse(F3{x}) == F3{1});
  for (std::uint8_t x = 1; x < 4; ++x) {
    CHECK(F4{x} * inverse(F4{x}) == F4{1});
    CHECK(conj(F4{x}) == F4{x} * F4{x});
  }
  // p^2 = p + 1
  CHECK(F4{2} * F4{2} == F4{3});
  CHECK(lift(F3{2}) == Eis(-1));
  CHECK(lift(F4{3}) == Eis(1, 1));
}

TEST_CASE("string form") {
  CHECK(to_string(Eis(1, -2)) == "1-2w");
  CHECK(to_string(Eis(0, -1)) == "-w");
  CHECK(to_string(Eis(3)) == "3");
}
