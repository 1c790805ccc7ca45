#include "eislat/field.hpp"

#include <stdexcept>

#include "eislat/ring.hpp"

namespace eislat {

std::string to_string(Field f) { return f == Field::F3 ? "F3" : "F4"; }

FElem fadd(Field f, FElem x, FElem y) {
  return f == Field::F3 ? static_cast<FElem>((x + y) % 3) : static_cast<FElem>(x ^ y);
}

FElem fneg(Field f, FElem x) { return f == Field::F3 ? static_cast<FElem>((3 - x) % 3) : x; }

FElem fsub(Field f, FElem x, FElem y) { return fadd(f, x, fneg(f, y)); }

FElem fmul(Field f, FElem x, FElem y) {
  if (f == Field::F3) return static_cast<FElem>((x * y) % 3);
  return (F4{x} * F4{y}).v;
}

FElem finv(Field f, FElem x) {
  if (x == 0) throw DivisionByZero("finite field inverse of zero");
  if (f == Field::F3) return x;
  return inverse(F4{x}).v;
}

FElem fconj(Field f, FElem x) { return f == Field::F3 ? x : conj(F4{x}).v; }

FMatrix::FMatrix(Field f, Eigen::Index rows, Eigen::Index cols) : field(f), m(rows, cols) { m.setZero(); }

FMatrix::FMatrix(Field f, const std::vector<FVector>& rows, Eigen::Index cols)
    : FMatrix(f, static_cast<Eigen::Index>(rows.size()), cols) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != cols) throw std::invalid_argument("FMatrix: ragged rows");
    for (Eigen::Index j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), j) = rows[i][static_cast<std::size_t>(j)];
  }
}

FVector FMatrix::row(Eigen::Index i) const {
  FVector v(static_cast<std::size_t>(cols()));
  for (Eigen::Index j = 0; j < cols(); ++j) v[static_cast<std::size_t>(j)] = m(i, j);
  return v;
}

std::vector<FVector> FMatrix::row_list() const {
  std::vector<FVector> out;
  for (Eigen::Index i = 0; i < rows(); ++i) out.push_back(row(i));
  return out;
}

FMatrix rref(const FMatrix& a) {
  FMatrix r = a;
  const Field f = a.field;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < r.cols() && row < r.rows(); ++col) {
    Eigen::Index p = row;
    while (p < r.rows() && r.m(p, col) == 0) ++p;
    if (p == r.rows()) continue;
    r.m.row(p).swap(r.m.row(row));
    FElem inv = finv(f, r.m(row, col));
    for (Eigen::Index j = 0; j < r.cols(); ++j) r.m(row, j) = fmul(f, r.m(row, j), inv);
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
      if (i == row || r.m(i, col) == 0) continue;
      FElem c = r.m(i, col);
      for (Eigen::Index j = 0; j < r.cols(); ++j) r.m(i, j) = fsub(f, r.m(i, j), fmul(f, c, r.m(row, j)));
    }
    ++row;
  }
  FMatrix out(f, row, a.cols());
  out.m = r.m.topRows(row);
  return out;
}

Eigen::Index rank(const FMatrix& a) { return rref(a).rows(); }

FMatrix kernel(const FMatrix& a) {
  const Field f = a.field;
  FMatrix r = rref(a);
  std::vector<Eigen::Index> pivot_of_row;
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    Eigen::Index j = 0;
    while (r.m(i, j) == 0) ++j;
    pivot_of_row.push_back(j);
    is_pivot[static_cast<std::size_t>(j)] = true;
  }
  std::vector<FVector> basis;
  for (Eigen::Index freec = 0; freec < a.cols(); ++freec) {
    if (is_pivot[static_cast<std::size_t>(freec)]) continue;
    FVector v(static_cast<std::size_t>(a.cols()), 0);
    v[static_cast<std::size_t>(freec)] = 1;
    for (Eigen::Index i = 0; i < r.rows(); ++i)
      v[static_cast<std::size_t>(pivot_of_row[static_cast<std::size_t>(i)])] = fneg(f, r.m(i, freec));
    basis.push_back(v);
  }
  return FMatrix(f, basis, a.cols());
}

// ---------------------------------------------------------------------------

int Subspace::reduce(FVector& v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const int p = pivots_[i];
    const FElem c = v[static_cast<std::size_t>(p)];
    if (c == 0) continue;
    const FVector& b = basis_[i];
    for (std::size_t j = static_cast<std::size_t>(p); j < dim_; ++j)
      if (b[j]) v[j] = fsub(field_, v[j], fmul(field_, c, b[j]));
  }
  for (std::size_t j = 0; j < dim_; ++j)
    if (v[j]) return static_cast<int>(j);
  return -1;
}

bool Subspace::contains(FVector v) const { return reduce(v) < 0; }

bool Subspace::insert(FVector v) {
  if (v.size() != dim_) throw std::invalid_argument("Subspace::insert: dimension mismatch");
  const int p = reduce(v);
  if (p < 0) return false;
  const FElem inv = finv(field_, v[static_cast<std::size_t>(p)]);
  for (auto& x : v) x = fmul(field_, x, inv);
  // keep the basis fully reduced so that it is canonical
  for (auto& b : basis_) {
    const FElem c = b[static_cast<std::size_t>(p)];
    if (c == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) b[j] = fsub(field_, b[j], fmul(field_, c, v[j]));
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

FMatrix Subspace::matrix() const { return FMatrix(field_, basis_, static_cast<Eigen::Index>(dim_)); }

bool operator==(const Subspace& a, const Subspace& b) {
  return a.field_ == b.field_ && a.dim_ == b.dim_ && a.basis_ == b.basis_;
}

FVector permute(const Perm& p, const FVector& v) {
  FVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(p[i])] = v[i];
  return out;
}

Subspace spin(Field f, std::size_t dim, const std::vector<FVector>& seeds, const std::vector<Perm>& gens) {
  Subspace s(f, dim);
  std::vector<FVector> queue;
  for (const auto& v : seeds)
    if (s.insert(v)) queue.push_back(v);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Perm& g : gens) {
      FVector w = permute(g, queue[head]);
      if (s.insert(w)) queue.push_back(std::move(w));
    }
  }
  return s;
}

Subspace spin(Field f, const FVector& seed, const std::vector<Perm>& gens) {
  return spin(f, seed.size(), {seed}, gens);
}

std::vector<FVector> enumerate_span(const FMatrix& g) {
  const Field f = g.field;
  const int q = static_cast<int>(f);
  const Eigen::Index k = g.rows();
  if (k > 12) throw std::length_error("enumerate_span: dimension above 12 refused");
  std::size_t total = 1;
  for (Eigen::Index i = 0; i < k; ++i) total *= static_cast<std::size_t>(q);
  std::vector<FVector> out;
  out.reserve(total);
  std::vector<FElem> coeff(static_cast<std::size_t>(k), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t t = idx;
    for (Eigen::Index i = 0; i < k; ++i) {
      coeff[static_cast<std::size_t>(i)] = static_cast<FElem>(t % static_cast<std::size_t>(q));
      t /= static_cast<std::size_t>(q);
    }
    FVector v(static_cast<std::size_t>(g.cols()), 0);
    for (Eigen::Index i = 0; i < k; ++i) {
      FElem c = coeff[static_cast<std::size_t>(i)];
      if (!c) continue;
      for (Eigen::Index j = 0; j < g.cols(); ++j)
        v[static_cast<std::size_t>(j)] = fadd(f, v[static_cast<std::size_t>(j)], fmul(f, c, g.m(i, j)));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t weight(const FVector& v) {
  std::size_t w = 0;
  for (FElem x : v) w += x != 0;
  return w;
}

std::string to_string(Field f, const FVector& v) {
  static const char* f4names[] = {"0", "1", "p", "P"};  // P = p^2 = 1 + p
  std::string s;
  for (FElem x : v) s += f == Field::F3 ? std::string(1, static_cast<char>('0' + x)) : std::string(f4names[x]);
  return s;
}

}  // namespace eislat
