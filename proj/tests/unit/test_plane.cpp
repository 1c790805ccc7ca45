#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "eislat/plane.hpp"

using namespace eislat;

namespace {

// Points and lines rebuilt from scratch: nonzero triples up to sign.
std::vector<Triple> projective_triples() {
  std::vector<Triple> out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        Triple t{a, b, c};
        int first = a ? a : (b ? b : c);
        if (first == 1) out.push_back(t);
      }
  return out;
}

bool incident(const Triple& p, const Triple& l) { return (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % 3 == 0; }

std::vector<std::vector<int>> line_vectors() {
  auto ts = projective_triples();
  std::vector<std::vector<int>> out;
  for (const auto& l : ts) {
    std::vector<int> v;
    for (const auto& p : ts) v.push_back(incident(p, l));
    out.push_back(v);
  }
  return out;
}

std::set<std::vector<int>> span(const std::vector<std::vector<int>>& rows) {
  std::set<std::vector<int>> out{std::vector<int>(13, 0)};
  for (const auto& r : rows) {
    std::set<std::vector<int>> next;
    for (const auto& w : out)
      for (int c = 0; c < 3; ++c) {
        auto v = w;
        for (int i = 0; i < 13; ++i) v[static_cast<std::size_t>(i)] = (v[static_cast<std::size_t>(i)] + c * r[static_cast<std::size_t>(i)]) % 3;
        next.insert(v);
      }
    out = next;
  }
  return out;
}

}  // namespace

TEST_CASE("plane matches a direct construction") {
  const Plane& P = plane();
  auto ts = projective_triples();
  REQUIRE(ts.size() == 13);
  CHECK(P.points == ts);
  for (int p = 0; p < 13; ++p)
    for (int l = 0; l < 13; ++l) CHECK(P.on(p, l) == incident(ts[static_cast<std::size_t>(p)], ts[static_cast<std::size_t>(l)]));
  for (int l = 0; l < 13; ++l) CHECK(P.points_on(l).size() == 4);
  CHECK(P.on(P.meet(0, 1), 0));
  CHECK(P.on(P.meet(0, 1), 1));
  CHECK(P.on(P.meet(3, 7), 3));
  CHECK(P.on(5, P.join(5, 9)));
}

TEST_CASE("line codes against a direct span") {
  auto lines = line_vectors();
  std::vector<std::vector<int>> diffs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<int> d(13);
    for (int k = 0; k < 13; ++k) d[static_cast<std::size_t>(k)] = (lines[i][static_cast<std::size_t>(k)] - lines[0][static_cast<std::size_t>(k)] + 3) % 3;
    diffs.push_back(d);
  }
  auto C = span(diffs);
  auto Cperp = span(lines);
  CHECK(C.size() == 729);
  CHECK(Cperp.size() == 2187);

  std::map<CensusKey, std::size_t> c2, c3;
  for (const auto& w : C) {
    int ones = static_cast<int>(std::count(w.begin(), w.end(), 1)), twos = static_cast<int>(std::count(w.begin(), w.end(), 2));
    ++c2[{ones + twos, std::min(ones, twos), std::max(ones, twos)}];
  }
  for (const auto& w : Cperp) {
    int ones = static_cast<int>(std::count(w.begin(), w.end(), 1)), twos = static_cast<int>(std::count(w.begin(), w.end(), 2));
    if ((ones + 2 * twos) % 3 == 1) ++c3[{ones + twos, ones, twos}];
  }
  // The class sizes listed for C and for the sum-1 words of C-perp.
  Census table2{{{0, 0, 0}, 1}, {{6, 3, 3}, 156}, {{9, 0, 9}, 26}, {{9, 3, 6}, 468}, {{12, 6, 6}, 78}};
  Census table3{{{4, 4, 0}, 13},    {{7, 1, 6}, 78},   {{7, 4, 3}, 234}, {{10, 4, 6}, 234},
                {{10, 7, 3}, 156}, {{13, 4, 9}, 13}, {{13, 13, 0}, 1}};
  CHECK(c2 == table2);
  CHECK(c3 == table3);

  PlaneCodes pc = build_plane_codes(plane());
  CHECK(pc.census_C == c2);
  CHECK(pc.census_perp_sum1 == c3);
  CHECK(pc.self_orthogonal);
  CHECK(pc.perp_spanned_by_lines);
}

TEST_CASE("collineation group order") {
  // |GL3(F3)| / |scalars| by counting invertible matrices.
  std::size_t invertible = 0;
  for (int code = 0; code < 19683; ++code) {
    int m[9], x = code;
    for (int& e : m) {
      e = x % 3;
      x /= 3;
    }
    int det = m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) + m[2] * (m[3] * m[7] - m[4] * m[6]);
    invertible += ((det % 3) + 3) % 3 != 0;
  }
  CHECK(invertible / 2 == 5616);
  CHECK(l33_group().order() == invertible / 2);
  for (const auto& g : l33_generators(plane())) CHECK_NOTHROW(line_action(plane(), g));
}

TEST_CASE("first Y555 embedding is induced and color-preserving") {
  const Plane& P = plane();
  EmbeddingSummary s = analyze_embeddings(P);
  const ColoredGraph y = y555_diagram(true);
  const auto& img = s.first.image;
  REQUIRE(img.size() == 16);
  CHECK(std::set<int>(img.begin(), img.end()).size() == 16);
  auto node_adjacent = [&](int a, int b) {
    if ((a < 13) == (b < 13)) return false;
    int p = a < 13 ? a : b, l = (a < 13 ? b : a) - 13;
    return P.on(p, l);
  };
  for (int i = 0; i < 16; ++i) {
    CHECK((img[static_cast<std::size_t>(i)] < 13) == (y.color[static_cast<std::size_t>(i)] == 0));
    for (int j = i + 1; j < 16; ++j) CHECK(node_adjacent(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]) == y.adjacent(i, j));
  }
  CHECK(s.one_orbit_black);
  CHECK(s.one_orbit_white);
  CHECK(s.count_center_black == s.count_center_white);
}

TEST_CASE("induced 11-paths and phi") {
  const Plane& P = plane();
  GraphClaims g = graph_claims(P, analyze_embeddings(P).first);
  CHECK(g.induced_11_paths > 0);
  CHECK(g.unique_cycle == g.induced_11_paths);
  CHECK(g.complement_4_path == g.induced_11_paths);
  CHECK(g.counterexample.empty());
  CHECK(g.phi_extends);
  // phi is an involution of the diagram fixing the center
  Perm phi = y555_phi();
  CHECK(compose(phi, phi) == identity_perm(16));
  CHECK(phi[0] == 0);
}
