#pragma once

// The projective plane P^2 F3, its line codes, the collineation group L3(3),
// the point-line incidence graph and embeddings of the Y555 diagram into it.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "eislat/codes.hpp"
#include "eislat/field.hpp"
#include "eislat/group.hpp"

namespace eislat {

using Triple = std::array<int, 3>;

// Points and lines are triples over F3 with first nonzero entry 1, sorted
// lexicographically. Point p lies on line l iff p . l = 0.
struct Plane {
  std::vector<Triple> points;
  std::vector<Triple> lines;
  std::array<std::array<bool, 13>, 13> incidence{};  // [point][line]

  bool on(int point, int line) const { return incidence[static_cast<std::size_t>(point)][static_cast<std::size_t>(line)]; }
  std::vector<int> points_on(int line) const;
  std::vector<int> lines_through(int point) const;
  int join(int p, int q) const;  // the line through two distinct points
  int meet(int l, int m) const;  // the point on two distinct lines
  int point_index(Triple t) const;  // t need not be normalized; -1 for zero
  int line_index(Triple t) const;
};

const Plane& plane();
Triple normalize(Triple t);

// Characteristic vector of a line in F3^13.
FVector line_word(const Plane& P, int line);

// Census keys: Table-2 style (support, min(#1,#2), max(#1,#2)) for C and
// (support, #(+1), #(-1)) for the coordinate-sum-1 words of C-perp.
using CensusKey = std::tuple<int, int, int>;
using Census = std::map<CensusKey, std::size_t>;

struct PlaneCodes {
  Code C;      // spanned by differences of lines
  Code Cperp;  // its dual
  bool perp_spanned_by_lines = false;
  bool self_orthogonal = false;
  std::size_t size_C = 0;
  Census census_C;
  Census census_perp_sum1;
};
PlaneCodes build_plane_codes(const Plane& P);

// L3(3) acting on points. Generators are the images of a cyclic permutation
// matrix and an elementary transvection, acting by p -> p M.
std::vector<Perm> l33_generators(const Plane& P);
const PermGroup& l33_group();
Perm point_action(const Plane& P, const std::array<std::array<int, 3>, 3>& m);
// The permutation of lines induced by a permutation of points; throws if the
// point permutation is not a collineation.
Perm line_action(const Plane& P, const Perm& points);
// Action on the 26 nodes of the incidence graph: points 0..12, lines 13..25.
Perm delta_action(const Plane& P, const Perm& points);

struct ColoredGraph {
  int n = 0;
  std::vector<int> color;  // 0 black, 1 white
  std::vector<std::vector<int>> adj;

  bool adjacent(int a, int b) const;
  // Subgraph induced on the nodes is a path visiting them in this order.
  bool is_induced_path(const std::vector<int>& nodes) const;
};

// Points black (0..12), lines white (13..25).
ColoredGraph incidence_graph(const Plane& P);
// Center 0; arm k is 1+5k, ..., 5+5k with 1+5k joined to the center.
// Center colored black when center_black, colors alternating along arms.
ColoredGraph y555_diagram(bool center_black = true);
// The swap of points and lines with equal coordinates.
Perm delta_duality(const Plane& P);

struct Y555Embedding {
  bool center_black = true;
  std::vector<int> image;  // diagram node -> node of the incidence graph
};

// All induced, color-preserving embeddings for one diagram coloring.
std::vector<Y555Embedding> y555_embeddings(const ColoredGraph& delta, bool center_black);

struct EmbeddingSummary {
  std::size_t count_center_black = 0;
  std::size_t count_center_white = 0;
  std::size_t image_sets_black = 0;
  std::size_t image_sets_white = 0;
  bool one_orbit_black = false;  // image node-sets form one L3(3)-orbit
  bool one_orbit_white = false;
  bool duality_swaps = false;    // duality maps one family of image sets onto the other
  Y555Embedding first;           // lexicographically first with the center black
};
EmbeddingSummary analyze_embeddings(const Plane& P);

// Automorphisms of a colored graph extending a partial map given as pairs;
// returns the first found in lexicographic search order.
std::optional<Perm> extend_automorphism(const ColoredGraph& g, const std::vector<std::pair<int, int>>& partial,
                                        bool preserve_colors = true);

struct GraphClaims {
  std::size_t induced_11_paths = 0;  // up to reversal
  std::size_t unique_cycle = 0;      // paths with exactly one 12-cycle extension
  std::size_t complement_4_path = 0; // of those, nodes not joined to the cycle induce a 4-path
  std::string counterexample;        // empty when every path passes
  bool phi_extends = false;
  bool phi_in_l33 = false;
  std::size_t orbits_colored = 0;  // orbits of L3(3) on induced 11-paths
  std::size_t orbits_with_duality = 0;
};
// Y555 pieces used by the claims: the 11-chain through arms a, b and the
// center, and the 4-chain of arm c without its node next to the center.
std::vector<int> y555_chain_E(int arm_a = 0, int arm_b = 1);
std::vector<int> y555_chain_F(int arm_c = 2);
// phi fixes F and the center, and swaps arms a and b node by node.
Perm y555_phi(int arm_a = 0, int arm_b = 1);
GraphClaims graph_claims(const Plane& P, const Y555Embedding& e);

}  // namespace eislat
