#pragma once

// Finite groups generated by matrices over E or by permutations, closed by
// breadth-first search with hashed canonical encodings.

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "eislat/enumerate.hpp"
#include "eislat/field.hpp"
#include "eislat/matrix.hpp"

namespace eislat {

inline constexpr std::size_t kDefaultClosureCap = 200'000;

struct MatrixGroup {
  std::size_t order = 0;
  std::vector<ScaledEMatrix> elements;  // BFS order, identity first; empty unless kept
  std::unordered_set<std::vector<std::int64_t>, FlatKeyHash> keys;

  bool contains(const ScaledEMatrix& m) const;
};

// Closure of the generators under multiplication. Matrices act on row
// vectors; all generators must be square of one size. Throws CapExceeded when
// more than cap elements appear.
MatrixGroup closure_group(const std::vector<ScaledEMatrix>& gens, std::size_t cap = kDefaultClosureCap,
                          bool keep_elements = false);
MatrixGroup closure_group(const std::vector<EMatrix>& gens, std::size_t cap = kDefaultClosureCap,
                          bool keep_elements = false);

// Permutations act on points 0..n-1; (p * q)[i] = q[p[i]] (p first).
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
Perm identity_perm(int n);

struct PermGroup {
  std::vector<Perm> generators;
  std::vector<Perm> elements;  // sorted

  std::size_t order() const { return elements.size(); }
  bool contains(const Perm& p) const;
  std::vector<int> orbit(int point) const;
};
PermGroup perm_closure(const std::vector<Perm>& gens, int degree, std::size_t cap = kDefaultClosureCap);

}  // namespace eislat
