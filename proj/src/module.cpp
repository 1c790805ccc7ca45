#include "eislat/module.hpp"

#include <algorithm>

namespace eislat {

namespace {

void row_sub(WideEMatrix& m, Eigen::Index target, Eigen::Index source, const WideEis& q, Eigen::Index from = 0) {
  if (q.is_zero()) return;
  for (Eigen::Index j = from; j < m.cols(); ++j)
    if (!m(source, j).is_zero()) m(target, j) -= q * m(source, j);
}

void row_scale(WideEMatrix& m, Eigen::Index r, const WideEis& u) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) * u;
}

void col_sub(WideEMatrix& m, Eigen::Index target, Eigen::Index source, const WideEis& q) {
  if (q.is_zero()) return;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if (!m(i, source).is_zero()) m(i, target) -= q * m(i, source);
}

WideEis canonical_unit_wide(const WideEis& x) {
  if (x.is_zero()) return WideEis(1);
  WideEis best_u(1), best = x;
  for (const Eis& u : units()) {
    WideEis c = WideEis::from(u) * x;
    if (best < c) {
      best = c;
      best_u = WideEis::from(u);
    }
  }
  return best_u;
}

}  // namespace

EModule::EModule(Eigen::Index ambient_dim) : basis_(EMatrix(0, ambient_dim), 1) {}

EMatrix hnf_integral(const EMatrix& rows, std::vector<Eigen::Index>* pivots) {
  WideEMatrix m = cast_eis<WideEis>(rows);
  const Eigen::Index nr = m.rows(), nc = m.cols();
  std::vector<Eigen::Index> piv;
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < nc && r < nr; ++col) {
    bool found = false;
    for (;;) {
      Eigen::Index best = -1;
      int128 best_norm = 0;
      for (Eigen::Index i = r; i < nr; ++i) {
        if (m(i, col).is_zero()) continue;
        int128 n = norm(m(i, col));
        if (best < 0 || n < best_norm) {
          best = i;
          best_norm = n;
        }
      }
      if (best < 0) break;
      found = true;
      if (best != r) m.row(best).swap(m.row(r));
      bool clean = true;
      for (Eigen::Index i = r + 1; i < nr; ++i) {
        if (m(i, col).is_zero()) continue;
        WideEis q = divmod(m(i, col), m(r, col)).q;
        row_sub(m, i, r, q, col);
        if (!m(i, col).is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    row_scale(m, r, canonical_unit_wide(m(r, col)));
    for (Eigen::Index k = 0; k < r; ++k) {
      if (m(k, col).is_zero()) continue;
      WideEis q = divmod_canonical(m(k, col), m(r, col)).q;
      row_sub(m, k, r, q, col);
    }
    piv.push_back(col);
    ++r;
  }
  if (pivots) *pivots = piv;
  return cast_eis<Eis>(WideEMatrix(m.topRows(r)));
}

EModule hnf(const ScaledEMatrix& rows) {
  EModule out;
  std::vector<Eigen::Index> piv;
  EMatrix h = hnf_integral(rows.num, &piv);
  out.basis_ = ScaledEMatrix(h, rows.den);
  out.basis_.normalize();
  if (h.rows() == 0) out.basis_.den = 1;
  out.pivots_ = piv;
  return out;
}

std::optional<EVector> coordinates(const EModule& m, const ScaledEVector& v) {
  if (v.cols() != m.ambient_dim()) throw std::invalid_argument("coordinates: dimension mismatch");
  const std::int64_t l = common_denominator(v.den, m.basis().den);
  WideEMatrix t = cast_eis<WideEis>(EMatrix(rescale_numerator(v.num, v.den, l)));
  const WideEis f(l / m.basis().den);
  EVector c(m.rank());
  for (Eigen::Index i = 0; i < m.rank(); ++i) {
    const Eigen::Index p = m.pivots()[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < p; ++j)
      if (!t(0, j).is_zero()) return std::nullopt;
    WideEis piv = WideEis::from(m.basis().num(i, p)) * f;
    auto qr = divmod(t(0, p), piv);
    if (!qr.r.is_zero()) return std::nullopt;
    c(i) = Eis::from(qr.q);
    if (!qr.q.is_zero())
      for (Eigen::Index j = p; j < t.cols(); ++j) t(0, j) -= qr.q * WideEis::from(m.basis().num(i, j)) * f;
  }
  for (Eigen::Index j = 0; j < t.cols(); ++j)
    if (!t(0, j).is_zero()) return std::nullopt;
  return c;
}

bool contains(const EModule& m, const ScaledEVector& v) { return coordinates(m, v).has_value(); }

bool contains(const EModule& m, const EModule& n) {
  for (Eigen::Index i = 0; i < n.rank(); ++i)
    if (!contains(m, ScaledEVector(n.row(i), n.basis().den))) return false;
  return true;
}

EModule sum(const EModule& a, const EModule& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: dimension mismatch");
  const std::int64_t l = common_denominator(a.basis().den, b.basis().den);
  EMatrix rows(a.rank() + b.rank(), a.ambient_dim());
  if (a.rank()) rows.topRows(a.rank()) = rescale_numerator(a.basis().num, a.basis().den, l);
  if (b.rank()) rows.bottomRows(b.rank()) = rescale_numerator(b.basis().num, b.basis().den, l);
  return hnf(ScaledEMatrix(rows, l));
}

EMatrix left_kernel(const EMatrix& a) {
  const Eigen::Index n = a.rows(), k = a.cols();
  EMatrix aug(n, k + n);
  aug.leftCols(k) = a;
  aug.rightCols(n) = identity(n);
  std::vector<Eigen::Index> piv;
  EMatrix h = hnf_integral(aug, &piv);
  Eigen::Index first = 0;
  while (first < h.rows() && piv[static_cast<std::size_t>(first)] < k) ++first;
  return h.bottomRows(h.rows() - first).rightCols(n);
}

namespace {

// Fraction-free echelon elimination; returns rank and the last pivot.
struct Elimination {
  Eigen::Index rank = 0;
  WideEis last_pivot{1};
  int swaps = 0;
};

Elimination bareiss(WideEMatrix m) {
  Elimination e;
  WideEis prev(1);
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < m.cols() && r < m.rows(); ++col) {
    Eigen::Index p = r;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      m.row(p).swap(m.row(r));
      ++e.swaps;
    }
    for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
      for (Eigen::Index j = col + 1; j < m.cols(); ++j)
        m(i, j) = exact_div(m(r, col) * m(i, j) - m(i, col) * m(r, j), prev);
      m(i, col) = WideEis(0);
    }
    prev = m(r, col);
    ++r;
  }
  e.rank = r;
  e.last_pivot = prev;
  return e;
}

}  // namespace

Eigen::Index rank(const EMatrix& m) { return bareiss(cast_eis<WideEis>(m)).rank; }

Eis determinant(const EMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  if (m.rows() == 0) return Eis(1);
  auto e = bareiss(cast_eis<WideEis>(m));
  if (e.rank < m.rows()) return Eis(0);
  WideEis d = e.swaps % 2 ? -e.last_pivot : e.last_pivot;
  return Eis::from(d);
}

ScaledEMatrix inverse(const EMatrix& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse: matrix not square");
  WideEMatrix m(n, 2 * n);
  m.leftCols(n) = cast_eis<WideEis>(a);
  m.rightCols(n) = cast_eis<WideEis>(identity(n));
  WideEis prev(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) throw std::domain_error("inverse: singular matrix");
    if (p != k) m.row(p).swap(m.row(k));
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k) continue;
      for (Eigen::Index j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = WideEis(0);
    }
    prev = m(k, k);
  }
  // m = [d I | d a^{-1}]
  WideEis d = prev;
  WideEMatrix adj = m.rightCols(n);
  // Clear a non-rational denominator: x / d = x conj(d) / norm(d).
  WideEis c = conj(d);
  int128 den = norm(d);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) adj(i, j) = adj(i, j) * c;
  ScaledEMatrix out(cast_eis<Eis>(adj), checked::narrow<std::int64_t>(den));
  out.normalize();
  return out;
}

VectorGcd vector_gcd(const EVector& v) {
  const Eigen::Index n = v.cols();
  EMatrix aug(n, 1 + n);
  aug.col(0) = v.transpose();
  aug.rightCols(n) = identity(n);
  std::vector<Eigen::Index> piv;
  EMatrix h = hnf_integral(aug, &piv);
  if (h.rows() == 0 || piv[0] != 0) return {Eis(0), EVector::Constant(n, Eis(0))};
  return {h(0, 0), h.block(0, 1, 1, n)};
}

SmithForm smith(const EMatrix& t) {
  const Eigen::Index n = t.rows();
  if (t.cols() != n) throw std::invalid_argument("smith: matrix not square");
  WideEMatrix m = cast_eis<WideEis>(t);
  WideEMatrix c = cast_eis<WideEis>(identity(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    for (;;) {
      Eigen::Index bi = -1, bj = -1;
      int128 bn = 0;
      for (Eigen::Index i = k; i < n; ++i)
        for (Eigen::Index j = k; j < n; ++j) {
          if (m(i, j).is_zero()) continue;
          int128 nn = norm(m(i, j));
          if (bi < 0 || nn < bn) {
            bi = i;
            bj = j;
            bn = nn;
          }
        }
      if (bi < 0) throw std::domain_error("smith: singular matrix");
      if (bi != k) m.row(bi).swap(m.row(k));
      if (bj != k) {
        m.col(bj).swap(m.col(k));
        c.col(bj).swap(c.col(k));
      }
      bool clean = true;
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (m(i, k).is_zero()) continue;
        row_sub(m, i, k, divmod(m(i, k), m(k, k)).q);
        if (!m(i, k).is_zero()) clean = false;
      }
      for (Eigen::Index j = k + 1; j < n; ++j) {
        if (m(k, j).is_zero()) continue;
        WideEis q = divmod(m(k, j), m(k, k)).q;
        col_sub(m, j, k, q);
        col_sub(c, j, k, q);
        if (!m(k, j).is_zero()) clean = false;
      }
      if (!clean) continue;
      Eigen::Index bad = -1;
      for (Eigen::Index i = k + 1; i < n && bad < 0; ++i)
        for (Eigen::Index j = k + 1; j < n; ++j)
          if (!divmod(m(i, j), m(k, k)).r.is_zero()) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (Eigen::Index j = 0; j < n; ++j) m(k, j) += m(bad, j);
    }
    row_scale(m, k, canonical_unit_wide(m(k, k)));
  }
  SmithForm out;
  for (Eigen::Index k = 0; k < n; ++k) out.divisors.push_back(Eis::from(m(k, k)));
  out.column_transform = cast_eis<Eis>(c);
  return out;
}

QuotientStructure quotient_structure(const EModule& small, const EModule& big) {
  if (small.rank() != big.rank()) throw std::invalid_argument("quotient_structure: ranks differ");
  const Eigen::Index n = big.rank();
  EMatrix t(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    auto c = coordinates(big, ScaledEVector(small.row(i), small.basis().den));
    if (!c) throw std::domain_error("quotient_structure: submodule is not contained in the larger module");
    t.row(i) = *c;
  }
  QuotientStructure q;
  q.big = big;
  if (n == 0) {
    q.field_tag = "0";
    q.column_transform = EMatrix(0, 0);
    return q;
  }
  SmithForm s = smith(t);
  q.column_transform = s.column_transform;
  q.all_divisors = s.divisors;
  const Eis theta = Eis::theta();
  int f3 = 0, f4 = 0, other = 0;
  for (const Eis& d : s.divisors) {
    if (unit_index(d) >= 0) continue;
    q.elementary_divisors.push_back(d);
    q.order = checked::mul(q.order, norm(d));
    if (!divides(d, Eis::omega() - Eis(1))) q.omega_acts_trivially = false;
    if (canonical_associate(d) == canonical_associate(theta)) ++f3;
    else if (canonical_associate(d) == canonical_associate(Eis(2))) ++f4;
    else ++other;
  }
  if (q.elementary_divisors.empty()) q.field_tag = "0";
  else if (other == 0 && f4 == 0) q.field_tag = "F3^" + std::to_string(f3);
  else if (other == 0 && f3 == 0) q.field_tag = "F4^" + std::to_string(f4);
  else q.field_tag = "mixed";
  return q;
}

std::vector<Eis> coset_label(const QuotientStructure& q, const ScaledEVector& v) {
  auto c = coordinates(q.big, v);
  if (!c) throw std::domain_error("coset_label: vector is not in the larger module");
  EVector y = multiply(EMatrix(*c), q.column_transform);
  std::vector<Eis> label;
  for (std::size_t k = 0; k < q.all_divisors.size(); ++k) {
    const Eis& d = q.all_divisors[k];
    if (unit_index(d) >= 0) continue;
    label.push_back(divmod_canonical(y(static_cast<Eigen::Index>(k)), d).r);
  }
  return label;
}

}  // namespace eislat
