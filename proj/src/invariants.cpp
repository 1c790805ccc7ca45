#include "eislat/invariants.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace eislat {

namespace {

EMatrix stack(const std::vector<EVector>& rows, Eigen::Index cols) {
  EMatrix m(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i];
  return m;
}

std::vector<std::vector<Eis>> inner_products(const ScaledEMatrix& gram, const std::vector<EVector>& vs) {
  const std::size_t m = vs.size();
  std::vector<EVector> vg(m);
  for (std::size_t a = 0; a < m; ++a) vg[a] = EVector(multiply(vs[a], gram.num));
  std::vector<std::vector<Eis>> ip(m, std::vector<Eis>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      WideEis acc(0);
      for (Eigen::Index k = 0; k < vs[b].cols(); ++k)
        acc += WideEis::from(vg[a](k)) * conj(WideEis::from(vs[b](k)));
      ip[a][b] = Eis::from(acc);
      ip[b][a] = conj(ip[a][b]);
    }
  return ip;
}

// Indices of vs forming an E-basis of the full coordinate lattice.
std::vector<std::size_t> choose_basis(const std::vector<EVector>& vs, Eigen::Index n) {
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t)> dfs = [&](std::size_t from) -> bool {
    if (static_cast<Eigen::Index>(chosen.size()) == n) {
      std::vector<EVector> rows;
      for (auto i : chosen) rows.push_back(vs[i]);
      return unit_index(determinant(stack(rows, n))) >= 0;
    }
    for (std::size_t i = from; i < vs.size(); ++i) {
      std::vector<EVector> rows;
      for (auto j : chosen) rows.push_back(vs[j]);
      rows.push_back(vs[i]);
      if (rank(stack(rows, n)) != static_cast<Eigen::Index>(rows.size())) continue;
      chosen.push_back(i);
      if (dfs(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!dfs(0)) throw std::domain_error("aut_order_definite: no basis of minimal vectors");
  return chosen;
}

}  // namespace

std::uint64_t aut_order_definite(const HermitianLattice& L, std::size_t cap) {
  const Eigen::Index n = L.rank();
  if (n == 0) return 1;
  const Fraction m = min_norm(L, cap);
  std::vector<EVector> vs = vectors_of_norm(L.gram(), m, cap);
  if (!(hnf(stack(vs, n)) == hnf(identity(n))))
    throw std::domain_error("aut_order_definite: minimal vectors do not span the lattice");
  std::vector<std::size_t> basis = choose_basis(vs, n);
  auto ip = inner_products(L.gram(), vs);

  std::vector<std::size_t> img(static_cast<std::size_t>(n));
  std::uint64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t level) {
    if (level == static_cast<std::size_t>(n)) {
      ++count;
      return;
    }
    const std::size_t src = basis[level];
    for (std::size_t a = 0; a < vs.size(); ++a) {
      bool ok = ip[a][a] == ip[src][src];
      for (std::size_t j = 0; ok && j < level; ++j) ok = ip[a][img[j]] == ip[src][basis[j]];
      if (!ok) continue;
      img[level] = a;
      rec(level + 1);
    }
  };
  rec(0);
  return count;
}

std::vector<RootComponent> root_components(const HermitianLattice& L, std::size_t cap) {
  return root_components(L, roots(L, cap));
}

std::vector<RootComponent> root_components(const HermitianLattice& L, const std::vector<EVector>& rs) {
  const std::size_t m = rs.size();
  auto ip = inner_products(L.gram(), rs);
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (!ip[a][b].is_zero()) parent[find(a)] = find(b);
  std::map<std::size_t, std::vector<EVector>> comps;
  for (std::size_t a = 0; a < m; ++a) comps[find(a)].push_back(rs[a]);

  std::vector<RootComponent> out;
  for (const auto& [root, vs] : comps) {
    RootComponent c;
    c.roots = vs.size();
    c.rank = rank(stack(vs, L.rank()));
    if (c.rank == 1 && c.roots == 6) c.type = "A2";
    else if (c.rank == 2 && c.roots == 24) c.type = "D4";
    else if (c.rank == 3 && c.roots == 72) c.type = "E6";
    else if (c.rank == 4 && c.roots == 240) c.type = "E8";
    else
      throw UnclassifiedComponent("unclassified component of rank " + std::to_string(c.rank) + " with " +
                                  std::to_string(c.roots) + " roots");
    out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const RootComponent& x, const RootComponent& y) {
    return x.rank != y.rank ? x.rank < y.rank : x.roots < y.roots;
  });
  return out;
}

CosetNorms coset_min_norms(const HermitianLattice& L, std::size_t cap) {
  if (!gram_and_integrality(L).in_theta_dual) throw std::domain_error("coset_min_norms: L is not inside theta L'");
  HermitianLattice d = theta_dual(L);
  CosetNorms out;
  out.quotient = quotient_structure(L.module(), d.module());
  const std::size_t need = static_cast<std::size_t>(out.quotient.order - 1);
  std::map<std::vector<Eis>, CosetMinimum> best;
  for (Fraction bound(1); best.size() < need; bound = bound * Fraction(2)) {
    if (Fraction(1 << 12) < bound) throw std::runtime_error("coset_min_norms: cosets not reached");
    best.clear();
    for (const EVector& c : vectors_up_to(d.gram(), bound, cap)) {
      ScaledEVector v = d.ambient(c);
      std::vector<Eis> label = coset_label(out.quotient, v);
      if (std::all_of(label.begin(), label.end(), [](const Eis& x) { return x.is_zero(); })) continue;
      Fraction n = coord_norm(d.gram(), c);
      auto it = best.find(label);
      if (it == best.end() || n < it->second.norm) best[label] = CosetMinimum{label, n, v};
    }
  }
  for (auto& [label, m] : best) out.cosets.push_back(m);
  return out;
}

}  // namespace eislat
