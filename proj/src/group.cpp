#include "eislat/group.hpp"

#include <algorithm>
#include <set>

namespace eislat {

namespace {

ScaledEMatrix normalized(ScaledEMatrix m) {
  m.normalize();
  return m;
}

}  // namespace

bool MatrixGroup::contains(const ScaledEMatrix& m) const { return keys.count(flat_key(normalized(m))) > 0; }

MatrixGroup closure_group(const std::vector<ScaledEMatrix>& gens_in, std::size_t cap, bool keep_elements) {
  MatrixGroup g;
  Eigen::Index n = gens_in.empty() ? 0 : gens_in.front().rows();
  std::vector<ScaledEMatrix> gens;
  std::unordered_set<std::vector<std::int64_t>, FlatKeyHash> seen_gens;
  for (const auto& x : gens_in) {
    if (x.rows() != n || x.cols() != n) throw std::invalid_argument("closure_group: generators differ in shape");
    ScaledEMatrix y = normalized(x);
    if (seen_gens.insert(flat_key(y)).second) gens.push_back(y);
  }
  std::vector<ScaledEMatrix> queue;
  ScaledEMatrix id(identity(n), 1);
  g.keys.insert(flat_key(id));
  queue.push_back(id);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& s : gens) {
      ScaledEMatrix p = queue[head] * s;
      if (g.keys.insert(flat_key(p)).second) {
        if (g.keys.size() > cap) throw CapExceeded("closure cap exceeded", g.keys.size());
        queue.push_back(std::move(p));
      }
    }
  }
  g.order = g.keys.size();
  if (keep_elements) g.elements = std::move(queue);
  return g;
}

MatrixGroup closure_group(const std::vector<EMatrix>& gens, std::size_t cap, bool keep_elements) {
  std::vector<ScaledEMatrix> s;
  for (const auto& m : gens) s.emplace_back(m, 1);
  return closure_group(s, cap, keep_elements);
}

Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i])];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

Perm identity_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  return p;
}

bool PermGroup::contains(const Perm& p) const { return std::binary_search(elements.begin(), elements.end(), p); }

std::vector<int> PermGroup::orbit(int point) const {
  std::set<int> o;
  for (const auto& e : elements) o.insert(e[static_cast<std::size_t>(point)]);
  return {o.begin(), o.end()};
}

PermGroup perm_closure(const std::vector<Perm>& gens, int degree, std::size_t cap) {
  PermGroup g;
  g.generators = gens;
  std::set<Perm> seen;
  std::vector<Perm> queue{identity_perm(degree)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& s : gens) {
      if (static_cast<int>(s.size()) != degree) throw std::invalid_argument("perm_closure: wrong degree");
      Perm p = compose(queue[head], s);
      if (seen.insert(p).second) {
        if (seen.size() > cap) throw CapExceeded("permutation closure cap exceeded", seen.size());
        queue.push_back(std::move(p));
      }
    }
  g.elements.assign(seen.begin(), seen.end());
  return g;
}

}  // namespace eislat
