#include "eislat/plane.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace eislat {

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }

int dot(const Triple& a, const Triple& b) { return mod3(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]); }

Plane build_plane() {
  Plane P;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        Triple t{a, b, c};
        if (t != Triple{0, 0, 0} && normalize(t) == t) P.points.push_back(t);
      }
  std::sort(P.points.begin(), P.points.end());
  P.lines = P.points;
  for (std::size_t i = 0; i < 13; ++i)
    for (std::size_t j = 0; j < 13; ++j) P.incidence[i][j] = dot(P.points[i], P.lines[j]) == 0;
  for (int i = 0; i < 13; ++i)
    if (P.points_on(i).size() != 4 || P.lines_through(i).size() != 4)
      throw std::logic_error("plane: wrong incidence counts");
  return P;
}

}  // namespace

Triple normalize(Triple t) {
  for (auto& x : t) x = mod3(x);
  for (int x : t)
    if (x != 0) {
      if (x == 2)
        for (auto& y : t) y = mod3(2 * y);
      break;
    }
  return t;
}

std::vector<int> Plane::points_on(int line) const {
  std::vector<int> out;
  for (int p = 0; p < 13; ++p)
    if (on(p, line)) out.push_back(p);
  return out;
}

std::vector<int> Plane::lines_through(int point) const {
  std::vector<int> out;
  for (int l = 0; l < 13; ++l)
    if (on(point, l)) out.push_back(l);
  return out;
}

int Plane::join(int p, int q) const {
  if (p == q) throw std::invalid_argument("join: equal points");
  for (int l = 0; l < 13; ++l)
    if (on(p, l) && on(q, l)) return l;
  throw std::logic_error("join: no common line");
}

int Plane::meet(int l, int m) const {
  if (l == m) throw std::invalid_argument("meet: equal lines");
  for (int p = 0; p < 13; ++p)
    if (on(p, l) && on(p, m)) return p;
  throw std::logic_error("meet: no common point");
}

int Plane::point_index(Triple t) const {
  t = normalize(t);
  auto it = std::lower_bound(points.begin(), points.end(), t);
  return it != points.end() && *it == t ? static_cast<int>(it - points.begin()) : -1;
}

int Plane::line_index(Triple t) const {
  t = normalize(t);
  auto it = std::lower_bound(lines.begin(), lines.end(), t);
  return it != lines.end() && *it == t ? static_cast<int>(it - lines.begin()) : -1;
}

const Plane& plane() {
  static const Plane P = build_plane();
  return P;
}

FVector line_word(const Plane& P, int line) {
  FVector v(13, 0);
  for (int p : P.points_on(line)) v[static_cast<std::size_t>(p)] = 1;
  return v;
}

PlaneCodes build_plane_codes(const Plane& P) {
  PlaneCodes out;
  std::vector<FVector> diffs, lines;
  for (int l = 0; l < 13; ++l) lines.push_back(line_word(P, l));
  for (int l = 1; l < 13; ++l) {
    FVector d(13);
    for (std::size_t i = 0; i < 13; ++i) d[i] = fsub(Field::F3, lines[static_cast<std::size_t>(l)][i], lines[0][i]);
    diffs.push_back(d);
  }
  out.C = Code(FMatrix(Field::F3, diffs, 13));
  out.Cperp = dual(out.C);
  out.perp_spanned_by_lines = Code(FMatrix(Field::F3, lines, 13)) == out.Cperp;
  out.self_orthogonal = true;
  for (const auto& r : out.C.generator().row_list()) out.self_orthogonal = out.self_orthogonal && out.Cperp.contains(r);

  for (const auto& w : enumerate_span(out.C.generator())) {
    ++out.size_C;
    int ones = static_cast<int>(std::count(w.begin(), w.end(), 1));
    int twos = static_cast<int>(std::count(w.begin(), w.end(), 2));
    ++out.census_C[{ones + twos, std::min(ones, twos), std::max(ones, twos)}];
  }
  for (const auto& w : enumerate_span(out.Cperp.generator())) {
    int ones = static_cast<int>(std::count(w.begin(), w.end(), 1));
    int twos = static_cast<int>(std::count(w.begin(), w.end(), 2));
    if (mod3(ones - twos) != 1) continue;
    ++out.census_perp_sum1[{ones + twos, ones, twos}];
  }
  return out;
}

Perm point_action(const Plane& P, const std::array<std::array<int, 3>, 3>& m) {
  Perm out(13);
  for (int i = 0; i < 13; ++i) {
    const Triple& p = P.points[static_cast<std::size_t>(i)];
    Triple q{};
    for (int j = 0; j < 3; ++j)
      q[static_cast<std::size_t>(j)] = p[0] * m[0][static_cast<std::size_t>(j)] + p[1] * m[1][static_cast<std::size_t>(j)] +
                                       p[2] * m[2][static_cast<std::size_t>(j)];
    int k = P.point_index(q);
    if (k < 0) throw std::invalid_argument("point_action: singular matrix");
    out[static_cast<std::size_t>(i)] = k;
  }
  return out;
}

std::vector<Perm> l33_generators(const Plane& P) {
  const std::array<std::array<int, 3>, 3> cycle{{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}};
  const std::array<std::array<int, 3>, 3> transvection{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}};
  return {point_action(P, cycle), point_action(P, transvection)};
}

const PermGroup& l33_group() {
  static const PermGroup G = [] {
    PermGroup g = perm_closure(l33_generators(plane()), 13);
    if (g.order() != 5616) throw std::logic_error("l33_group: closure order " + std::to_string(g.order()));
    return g;
  }();
  return G;
}

Perm line_action(const Plane& P, const Perm& points) {
  Perm out(13);
  for (int l = 0; l < 13; ++l) {
    auto pts = P.points_on(l);
    int img = P.join(points[static_cast<std::size_t>(pts[0])], points[static_cast<std::size_t>(pts[1])]);
    for (int p : pts)
      if (!P.on(points[static_cast<std::size_t>(p)], img)) throw std::invalid_argument("line_action: not a collineation");
    out[static_cast<std::size_t>(l)] = img;
  }
  return out;
}

Perm delta_action(const Plane& P, const Perm& points) {
  Perm lines = line_action(P, points);
  Perm out(26);
  for (std::size_t i = 0; i < 13; ++i) {
    out[i] = points[i];
    out[13 + i] = 13 + lines[i];
  }
  return out;
}

bool ColoredGraph::adjacent(int a, int b) const {
  const auto& v = adj[static_cast<std::size_t>(a)];
  return std::find(v.begin(), v.end(), b) != v.end();
}

bool ColoredGraph::is_induced_path(const std::vector<int>& nodes) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i] == nodes[j]) return false;
      if (adjacent(nodes[i], nodes[j]) != (j == i + 1)) return false;
    }
  return true;
}

ColoredGraph incidence_graph(const Plane& P) {
  ColoredGraph g;
  g.n = 26;
  g.color.assign(26, 0);
  g.adj.assign(26, {});
  for (int p = 0; p < 13; ++p)
    for (int l = 0; l < 13; ++l)
      if (P.on(p, l)) {
        g.adj[static_cast<std::size_t>(p)].push_back(13 + l);
        g.adj[static_cast<std::size_t>(13 + l)].push_back(p);
      }
  for (int l = 13; l < 26; ++l) g.color[static_cast<std::size_t>(l)] = 1;
  return g;
}

ColoredGraph y555_diagram(bool center_black) {
  ColoredGraph g;
  g.n = 16;
  g.color.assign(16, 0);
  g.adj.assign(16, {});
  auto join = [&](int a, int b) {
    g.adj[static_cast<std::size_t>(a)].push_back(b);
    g.adj[static_cast<std::size_t>(b)].push_back(a);
  };
  for (int k = 0; k < 3; ++k) {
    join(0, 1 + 5 * k);
    for (int i = 1; i < 5; ++i) join(i + 5 * k, i + 1 + 5 * k);
  }
  const int c0 = center_black ? 0 : 1;
  g.color[0] = c0;
  for (int k = 0; k < 3; ++k)
    for (int i = 1; i <= 5; ++i) g.color[static_cast<std::size_t>(i + 5 * k)] = (c0 + i) % 2;
  return g;
}

Perm delta_duality(const Plane& P) {
  Perm out(26);
  for (int i = 0; i < 13; ++i) {
    out[static_cast<std::size_t>(i)] = 13 + P.line_index(P.points[static_cast<std::size_t>(i)]);
    out[static_cast<std::size_t>(13 + i)] = P.point_index(P.lines[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::vector<Y555Embedding> y555_embeddings(const ColoredGraph& delta, bool center_black) {
  const ColoredGraph d = y555_diagram(center_black);
  // BFS order from the center, with each node's parent already placed.
  const std::vector<int> order{0, 1, 6, 11, 2, 7, 12, 3, 8, 13, 4, 9, 14, 5, 10, 15};
  std::vector<int> parent(16, -1);
  for (int k = 0; k < 3; ++k) {
    parent[static_cast<std::size_t>(1 + 5 * k)] = 0;
    for (int i = 2; i <= 5; ++i) parent[static_cast<std::size_t>(i + 5 * k)] = i - 1 + 5 * k;
  }
  std::vector<Y555Embedding> out;
  std::vector<int> img(16, -1);
  std::vector<bool> used(static_cast<std::size_t>(delta.n), false);
  std::function<void(std::size_t)> rec = [&](std::size_t level) {
    if (level == order.size()) {
      out.push_back({center_black, img});
      return;
    }
    const int x = order[level];
    std::vector<int> cands;
    if (parent[static_cast<std::size_t>(x)] < 0) {
      cands.resize(static_cast<std::size_t>(delta.n));
      std::iota(cands.begin(), cands.end(), 0);
    } else {
      cands = delta.adj[static_cast<std::size_t>(img[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])])];
      std::sort(cands.begin(), cands.end());
    }
    for (int c : cands) {
      if (used[static_cast<std::size_t>(c)] || delta.color[static_cast<std::size_t>(c)] != d.color[static_cast<std::size_t>(x)])
        continue;
      bool ok = true;
      for (std::size_t j = 0; ok && j < level; ++j) {
        const int y = order[j];
        ok = d.adjacent(x, y) == delta.adjacent(c, img[static_cast<std::size_t>(y)]);
      }
      if (!ok) continue;
      img[static_cast<std::size_t>(x)] = c;
      used[static_cast<std::size_t>(c)] = true;
      rec(level + 1);
      used[static_cast<std::size_t>(c)] = false;
      img[static_cast<std::size_t>(x)] = -1;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const Y555Embedding& a, const Y555Embedding& b) { return a.image < b.image; });
  return out;
}

namespace {

using NodeSet = std::vector<int>;

NodeSet image_set(const std::vector<int>& image, const Perm* g = nullptr) {
  NodeSet s;
  for (int x : image) s.push_back(g ? (*g)[static_cast<std::size_t>(x)] : x);
  std::sort(s.begin(), s.end());
  return s;
}

bool one_orbit(const Plane& P, const std::set<NodeSet>& family) {
  if (family.empty()) return false;
  std::set<NodeSet> orbit;
  for (const Perm& g : l33_group().elements) {
    Perm d = delta_action(P, g);
    orbit.insert(image_set(*family.begin(), &d));
  }
  return orbit == family;
}

}  // namespace

EmbeddingSummary analyze_embeddings(const Plane& P) {
  const ColoredGraph delta = incidence_graph(P);
  EmbeddingSummary s;
  auto black = y555_embeddings(delta, true);
  auto white = y555_embeddings(delta, false);
  s.count_center_black = black.size();
  s.count_center_white = white.size();
  std::set<NodeSet> fb, fw;
  for (const auto& e : black) fb.insert(image_set(e.image));
  for (const auto& e : white) fw.insert(image_set(e.image));
  s.image_sets_black = fb.size();
  s.image_sets_white = fw.size();
  s.one_orbit_black = one_orbit(P, fb);
  s.one_orbit_white = one_orbit(P, fw);
  const Perm dual = delta_duality(P);
  std::set<NodeSet> swapped;
  for (const auto& x : fb) swapped.insert(image_set(x, &dual));
  s.duality_swaps = swapped == fw;
  if (!black.empty()) s.first = black.front();
  return s;
}

std::optional<Perm> extend_automorphism(const ColoredGraph& g, const std::vector<std::pair<int, int>>& partial,
                                        bool preserve_colors) {
  const auto n = static_cast<std::size_t>(g.n);
  std::vector<int> m(n, -1);
  std::vector<bool> used(n, false);
  auto consistent = [&](int v, int c) {
    if (used[static_cast<std::size_t>(c)]) return false;
    if (preserve_colors && g.color[static_cast<std::size_t>(v)] != g.color[static_cast<std::size_t>(c)]) return false;
    if (g.adj[static_cast<std::size_t>(v)].size() != g.adj[static_cast<std::size_t>(c)].size()) return false;
    for (std::size_t w = 0; w < n; ++w)
      if (m[w] >= 0 && g.adjacent(v, static_cast<int>(w)) != g.adjacent(c, m[w])) return false;
    return true;
  };
  for (auto [v, c] : partial) {
    if (m[static_cast<std::size_t>(v)] == c) continue;
    if (m[static_cast<std::size_t>(v)] >= 0 || !consistent(v, c)) return std::nullopt;
    m[static_cast<std::size_t>(v)] = c;
    used[static_cast<std::size_t>(c)] = true;
  }
  std::function<bool()> rec = [&]() -> bool {
    // Next: an unmapped node with a mapped neighbor, else the first unmapped.
    int v = -1, anchor = -1;
    for (std::size_t x = 0; x < n && anchor < 0; ++x) {
      if (m[x] >= 0) continue;
      if (v < 0) v = static_cast<int>(x);
      for (int y : g.adj[x])
        if (m[static_cast<std::size_t>(y)] >= 0) {
          v = static_cast<int>(x);
          anchor = y;
          break;
        }
    }
    if (v < 0) return true;
    std::vector<int> cands;
    if (anchor >= 0) {
      cands = g.adj[static_cast<std::size_t>(m[static_cast<std::size_t>(anchor)])];
      std::sort(cands.begin(), cands.end());
    } else {
      cands.resize(n);
      std::iota(cands.begin(), cands.end(), 0);
    }
    for (int c : cands) {
      if (!consistent(v, c)) continue;
      m[static_cast<std::size_t>(v)] = c;
      used[static_cast<std::size_t>(c)] = true;
      if (rec()) return true;
      m[static_cast<std::size_t>(v)] = -1;
      used[static_cast<std::size_t>(c)] = false;
    }
    return false;
  };
  if (!rec()) return std::nullopt;
  return m;
}

std::vector<int> y555_chain_E(int arm_a, int arm_b) {
  std::vector<int> e;
  for (int i = 5; i >= 1; --i) e.push_back(i + 5 * arm_a);
  e.push_back(0);
  for (int i = 1; i <= 5; ++i) e.push_back(i + 5 * arm_b);
  return e;
}

std::vector<int> y555_chain_F(int arm_c) { return {2 + 5 * arm_c, 3 + 5 * arm_c, 4 + 5 * arm_c, 5 + 5 * arm_c}; }

Perm y555_phi(int arm_a, int arm_b) {
  Perm p = identity_perm(16);
  for (int i = 1; i <= 5; ++i) {
    p[static_cast<std::size_t>(i + 5 * arm_a)] = i + 5 * arm_b;
    p[static_cast<std::size_t>(i + 5 * arm_b)] = i + 5 * arm_a;
  }
  return p;
}

namespace {

void induced_paths(const ColoredGraph& g, std::size_t length, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> path;
  std::vector<bool> in(static_cast<std::size_t>(g.n), false);
  std::function<void()> rec = [&]() {
    if (path.size() == length) {
      if (path.front() < path.back()) visit(path);
      return;
    }
    for (int x : g.adj[static_cast<std::size_t>(path.back())]) {
      if (in[static_cast<std::size_t>(x)]) continue;
      bool ok = true;
      for (std::size_t i = 0; ok && i + 1 < path.size(); ++i) ok = !g.adjacent(x, path[i]);
      if (!ok) continue;
      path.push_back(x);
      in[static_cast<std::size_t>(x)] = true;
      rec();
      in[static_cast<std::size_t>(x)] = false;
      path.pop_back();
    }
  };
  for (int s = 0; s < g.n; ++s) {
    path = {s};
    in[static_cast<std::size_t>(s)] = true;
    rec();
    in[static_cast<std::size_t>(s)] = false;
  }
}

std::string show(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s + "]";
}

std::vector<int> oriented(std::vector<int> p) {
  if (p.back() < p.front()) std::reverse(p.begin(), p.end());
  return p;
}

std::size_t count_orbits(const std::vector<std::vector<int>>& paths, const std::vector<Perm>& gens) {
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i]] = i;
  std::vector<std::size_t> parent(paths.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (const Perm& g : gens) {
      std::vector<int> q;
      for (int x : paths[i]) q.push_back(g[static_cast<std::size_t>(x)]);
      auto it = index.find(oriented(q));
      if (it == index.end()) throw std::logic_error("count_orbits: image is not an induced path");
      parent[find(i)] = find(it->second);
    }
  std::size_t n = 0;
  for (std::size_t i = 0; i < paths.size(); ++i) n += find(i) == i;
  return n;
}

}  // namespace

GraphClaims graph_claims(const Plane& P, const Y555Embedding& e) {
  const ColoredGraph g = incidence_graph(P);
  GraphClaims out;
  std::vector<std::vector<int>> paths;
  induced_paths(g, 11, [&](const std::vector<int>& path) {
    paths.push_back(path);
    ++out.induced_11_paths;
    std::vector<int> ext;
    for (int x = 0; x < g.n; ++x) {
      if (std::find(path.begin(), path.end(), x) != path.end()) continue;
      std::vector<int> cyc = path;
      cyc.push_back(x);
      bool ok = g.adjacent(x, path.front()) && g.adjacent(x, path.back());
      for (std::size_t i = 1; ok && i + 1 < path.size(); ++i) ok = !g.adjacent(x, path[i]);
      if (ok) ext.push_back(x);
    }
    if (ext.size() != 1) {
      if (out.counterexample.empty())
        out.counterexample = "path " + show(path) + " has " + std::to_string(ext.size()) + " cycle extensions";
      return;
    }
    ++out.unique_cycle;
    std::vector<int> cyc = path;
    cyc.push_back(ext[0]);
    std::vector<int> far;
    for (int x = 0; x < g.n; ++x) {
      bool joined = std::find(cyc.begin(), cyc.end(), x) != cyc.end();
      for (int c : cyc) joined = joined || g.adjacent(x, c);
      if (!joined) far.push_back(x);
    }
    // A 4-node graph is a path iff it has 3 edges and no node of degree 3.
    bool is_path = far.size() == 4;
    if (is_path) {
      int edges = 0;
      for (int a : far) {
        int deg = 0;
        for (int b : far) deg += g.adjacent(a, b);
        edges += deg;
        is_path = is_path && deg <= 2;
      }
      is_path = is_path && edges == 6;
    }
    if (is_path)
      ++out.complement_4_path;
    else if (out.counterexample.empty())
      out.counterexample = "path " + show(path) + " leaves non-path complement " + show(far);
  });

  std::vector<Perm> gens;
  for (const Perm& p : l33_generators(P)) gens.push_back(delta_action(P, p));
  out.orbits_colored = count_orbits(paths, gens);
  gens.push_back(delta_duality(P));
  out.orbits_with_duality = count_orbits(paths, gens);

  const Perm phi = y555_phi();
  std::vector<std::pair<int, int>> partial;
  for (std::size_t x = 0; x < 16; ++x)
    partial.emplace_back(e.image[x], e.image[static_cast<std::size_t>(phi[x])]);
  auto ext = extend_automorphism(g, partial, true);
  out.phi_extends = ext.has_value();
  if (ext) {
    Perm pts(ext->begin(), ext->begin() + 13);
    out.phi_in_l33 = l33_group().contains(pts) && delta_action(P, pts) == *ext;
  }
  return out;
}

}  // namespace eislat
