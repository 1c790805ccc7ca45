#include <map>
#include <set>

#include "doctest.h"
#include "eislat/codes.hpp"

using namespace eislat;

namespace {

using Words = std::set<std::vector<int>>;

// Every combination of the rows, with the field arithmetic written out here:
// F3 mod 3, F4 as bit pairs (addition is xor, multiplication via logs).
Words span_f3(const std::vector<std::vector<int>>& rows) {
  Words out{std::vector<int>(rows.front().size(), 0)};
  for (const auto& r : rows) {
    Words next;
    for (const auto& w : out)
      for (int c = 0; c < 3; ++c) {
        auto v = w;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + c * r[i]) % 3;
        next.insert(v);
      }
    out = next;
  }
  return out;
}

int f4_mul(int x, int y) {
  if (x == 0 || y == 0) return 0;
  static const int log[4] = {-1, 0, 1, 2}, exp[3] = {1, 2, 3};
  return exp[(log[x] + log[y]) % 3];
}

Words span_f4(const std::vector<std::vector<int>>& rows) {
  Words out{std::vector<int>(rows.front().size(), 0)};
  for (const auto& r : rows) {
    Words next;
    for (const auto& w : out)
      for (int c = 0; c < 4; ++c) {
        auto v = w;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] ^= f4_mul(c, r[i]);
        next.insert(v);
      }
    out = next;
  }
  return out;
}

std::map<std::size_t, std::size_t> weights(const Words& ws) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& w : ws) {
    std::size_t n = 0;
    for (int x : w) n += x != 0;
    ++out[n];
  }
  return out;
}

std::vector<std::vector<int>> rows_of(const Code& c) {
  std::vector<std::vector<int>> out;
  for (const auto& r : c.generator().row_list()) out.emplace_back(r.begin(), r.end());
  return out;
}

}  // namespace

TEST_CASE("standard codes against a direct enumeration") {
  const StandardCodes& s = standard_codes();
  auto tetra = span_f3(rows_of(s.tetracode));
  auto hexa = span_f4(rows_of(s.hexacode));
  auto golay = span_f3(rows_of(s.golay));
  CHECK(tetra.size() == 9);
  CHECK(hexa.size() == 64);
  CHECK(golay.size() == 729);
  CHECK(weights(tetra) == std::map<std::size_t, std::size_t>{{0, 1}, {3, 8}});
  CHECK(weights(hexa) == std::map<std::size_t, std::size_t>{{0, 1}, {4, 45}, {6, 18}});
  CHECK(weights(golay) == std::map<std::size_t, std::size_t>{{0, 1}, {6, 264}, {9, 440}, {12, 24}});
  CHECK(code_ops(s.golay).weights == weights(golay));
  CHECK(code_ops(s.hexacode).weights == weights(hexa));
  CHECK(code_ops(s.tetracode).weights == weights(tetra));
}

TEST_CASE("self-duality by pairwise products") {
  const StandardCodes& s = standard_codes();
  for (const Code* c : {&s.tetracode, &s.golay}) {
    auto rows = rows_of(*c);
    for (const auto& x : rows)
      for (const auto& y : rows) {
        int d = 0;
        for (std::size_t i = 0; i < x.size(); ++i) d += x[i] * y[i];
        CHECK(d % 3 == 0);
      }
    CHECK(code_ops(*c).self_dual);
  }
  // Hermitian: sum x_i * conj(y_i), conj squares on F4
  auto rows = rows_of(s.hexacode);
  for (const auto& x : rows)
    for (const auto& y : rows) {
      int d = 0;
      for (std::size_t i = 0; i < x.size(); ++i) d ^= f4_mul(x[i], f4_mul(y[i], y[i]));
      CHECK(d == 0);
    }
  CHECK(code_ops(s.hexacode).self_dual);
}

TEST_CASE("dual and membership") {
  Code rep(FMatrix(Field::F3, {{1, 1, 1}}, 3));
  Code d = dual(rep);
  CHECK(d.dimension() == 2);
  CHECK(d.contains(FVector{1, 2, 0}));
  CHECK(!d.contains(FVector{1, 0, 0}));
  CHECK(dual(d) == rep);
}

TEST_CASE("self-checks reject a damaged Golay generator") {
  FMatrix g = golay_generator();
  CHECK(check_golay(Code(g)).empty());
  g.m(0, 7) = static_cast<FElem>((g.m(0, 7) + 1) % 3);
  CHECK(!check_golay(Code(g)).empty());
  CHECK(!check_hexacode(standard_codes().tetracode).empty());
}
