#include "eislat/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace eislat {

namespace {

using LD = long double;
using I128Mat = Mat<int128>;

bool lex_less(const EVector& x, const EVector& y) {
  return std::lexicographical_compare(x.data(), x.data() + x.size(), y.data(), y.data() + y.size());
}

// Gram-Schmidt data of rows 0..k of an exact Gram matrix, recomputed one row at a time.
struct Gso {
  std::vector<std::vector<LD>> mu, r;
  std::vector<LD> b;
  explicit Gso(Eigen::Index n)
      : mu(static_cast<std::size_t>(n), std::vector<LD>(static_cast<std::size_t>(n), 0)),
        r(mu),
        b(static_cast<std::size_t>(n), 0) {}

  void row(const I128Mat& q, Eigen::Index k) {
    auto K = static_cast<std::size_t>(k);
    for (std::size_t j = 0; j < K; ++j) {
      LD s = static_cast<LD>(q(k, static_cast<Eigen::Index>(j)));
      for (std::size_t l = 0; l < j; ++l) s -= mu[j][l] * r[K][l];
      r[K][j] = s;
      mu[K][j] = s / b[j];
    }
    LD s = static_cast<LD>(q(k, k));
    for (std::size_t j = 0; j < K; ++j) s -= mu[K][j] * r[K][j];
    b[K] = s;
    if (!(s > 0)) throw IndefiniteError("lll_reduce: form is not positive definite");
  }
};

void reduce_row(I128Mat& q, I128Mat& u, Gso& g, Eigen::Index k, Eigen::Index j, int128 c) {
  using checked::mul;
  using checked::sub;
  const Eigen::Index n = q.rows();
  for (Eigen::Index l = 0; l < n; ++l) q(k, l) = sub(q(k, l), mul(c, q(j, l)));
  for (Eigen::Index l = 0; l < n; ++l) q(l, k) = sub(q(l, k), mul(c, q(l, j)));
  for (Eigen::Index l = 0; l < n; ++l) u(k, l) = sub(u(k, l), mul(c, u(j, l)));
  const auto K = static_cast<std::size_t>(k), J = static_cast<std::size_t>(j);
  for (std::size_t l = 0; l < J; ++l) g.mu[K][l] -= static_cast<LD>(c) * g.mu[J][l];
  g.mu[K][J] -= static_cast<LD>(c);
}

I128Mat exact_product(const IntMatrix& u, const IntMatrix& q) {
  using checked::add;
  using checked::mul;
  const Eigen::Index n = q.rows();
  I128Mat uq = I128Mat::Zero(u.rows(), n), out = I128Mat::Zero(u.rows(), u.rows());
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    for (Eigen::Index k = 0; k < n; ++k)
      if (u(i, k))
        for (Eigen::Index j = 0; j < n; ++j) uq(i, j) = add(uq(i, j), mul<int128>(u(i, k), q(k, j)));
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    for (Eigen::Index j = 0; j < u.rows(); ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        if (u(j, k)) out(i, j) = add(out(i, j), mul<int128>(uq(i, k), u(j, k)));
  return out;
}

IntMatrix narrow(const I128Mat& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = checked::narrow<std::int64_t>(m(i, j));
  return out;
}

// Fincke-Pohst over x Q x^T <= R, with Q reduced. The visitor receives every
// nonzero x passing the exact test and the exact value x Q x^T; it may lower R
// by returning a smaller value.
void fincke_pohst(const IntMatrix& q, int128 R, const std::function<int128(const std::vector<std::int64_t>&, int128)>& visit) {
  const Eigen::Index n = q.rows();
  if (n == 0) return;
  Gso g(n);
  I128Mat qw = q.cast<int128>();
  for (Eigen::Index k = 0; k < n; ++k) g.row(qw, k);
  const auto N = static_cast<std::size_t>(n);
  std::vector<std::int64_t> x(N, 0);
  std::vector<LD> rem(N + 1, 0);
  LD bound = static_cast<LD>(R);
  rem[N] = bound;
  const LD eps = 1e-9L;

  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    LD c = 0;
    for (std::size_t j = i + 1; j < N; ++j) c -= g.mu[j][i] * static_cast<LD>(x[j]);
    const LD room = rem[i + 1] + eps * (bound + 1);
    if (room < 0) return;
    const LD rad = std::sqrt(room / g.b[i]);
    const auto lo = static_cast<std::int64_t>(std::ceil(c - rad));
    const auto hi = static_cast<std::int64_t>(std::floor(c + rad));
    for (std::int64_t v = lo; v <= hi; ++v) {
      const LD d = static_cast<LD>(v) - c;
      const LD t = g.b[i] * d * d;
      if (t > room) continue;
      x[i] = v;
      rem[i] = rem[i + 1] - t;
      if (i > 0) {
        rec(i - 1);
        continue;
      }
      bool nonzero = false;
      for (auto y : x) nonzero |= y != 0;
      if (!nonzero) continue;
      int128 val = 0;
      for (std::size_t a = 0; a < N; ++a) {
        if (!x[a]) continue;
        int128 row = 0;
        for (std::size_t b = 0; b < N; ++b)
          row = checked::add(row, checked::mul<int128>(q(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)), x[b]));
        val = checked::add(val, checked::mul<int128>(row, x[a]));
      }
      if (val > R) continue;
      int128 nr = visit(x, val);
      if (nr < R) {
        R = nr;
        bound = static_cast<LD>(R);
      }
    }
    x[i] = 0;
  };
  rec(N - 1);
}

struct Prepared {
  IntMatrix reduced, transform;
};

Prepared prepare(const ScaledEMatrix& gram) {
  IntMatrix q = real_form(gram.num);
  LllResult r = lll_reduce(q);
  return {r.reduced, r.transform};
}

EVector to_coords(const IntMatrix& transform, const std::vector<std::int64_t>& x) {
  const Eigen::Index n = transform.rows();
  std::vector<int128> orig(static_cast<std::size_t>(n), 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!x[static_cast<std::size_t>(i)]) continue;
    for (Eigen::Index j = 0; j < n; ++j)
      orig[static_cast<std::size_t>(j)] = checked::add(orig[static_cast<std::size_t>(j)], checked::mul<int128>(x[static_cast<std::size_t>(i)], transform(i, j)));
  }
  EVector c(n / 2);
  for (Eigen::Index i = 0; i < n / 2; ++i)
    c(i) = Eis(checked::narrow<std::int64_t>(orig[static_cast<std::size_t>(2 * i)]),
               checked::narrow<std::int64_t>(orig[static_cast<std::size_t>(2 * i + 1)]));
  return c;
}

// x Q x^T = 2 gden |v|^2, so |v|^2 <= num/den  <=>  den * xQx <= 2 gden num.
int128 real_bound(const ScaledEMatrix& gram, const Fraction& bound) {
  return checked::mul<int128>(2 * static_cast<int128>(gram.den), bound.num) / bound.den;
}

}  // namespace

LllResult lll_reduce(const IntMatrix& q0, double delta) {
  const Eigen::Index n = q0.rows();
  if (q0.cols() != n) throw std::invalid_argument("lll_reduce: matrix is not square");
  I128Mat q = q0.cast<int128>();
  I128Mat u = I128Mat::Identity(n, n);
  if (n == 0) return {IntMatrix(0, 0), IntMatrix(0, 0)};
  Gso g(n);
  g.row(q, 0);
  Eigen::Index k = 1;
  const LD half = 0.5L + 1e-12L;
  while (k < n) {
    g.row(q, k);
    for (int pass = 0; pass < 8; ++pass) {
      bool changed = false;
      for (Eigen::Index j = k - 1; j >= 0; --j) {
        LD m = g.mu[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        if (std::fabs(m) <= half) continue;
        reduce_row(q, u, g, k, j, static_cast<int128>(std::llround(m)));
        changed = true;
      }
      if (!changed) break;
      g.row(q, k);
    }
    const auto K = static_cast<std::size_t>(k);
    const LD m = g.mu[K][K - 1];
    if (g.b[K] < (static_cast<LD>(delta) - m * m) * g.b[K - 1]) {
      q.row(k).swap(q.row(k - 1));
      q.col(k).swap(q.col(k - 1));
      u.row(k).swap(u.row(k - 1));
      g.row(q, k - 1);
      k = std::max<Eigen::Index>(1, k - 1);
    } else {
      ++k;
    }
  }
  LllResult out;
  out.transform = narrow(u);
  out.reduced = narrow(exact_product(out.transform, q0));
  return out;
}

bool is_lll_reduced(const IntMatrix& q, double delta) {
  const Eigen::Index n = q.rows();
  if (n == 0) return true;
  Gso g(n);
  I128Mat qw = q.cast<int128>();
  for (Eigen::Index k = 0; k < n; ++k) g.row(qw, k);
  const LD tol = 1e-9L;
  for (std::size_t k = 1; k < static_cast<std::size_t>(n); ++k) {
    for (std::size_t j = 0; j < k; ++j)
      if (std::fabs(g.mu[k][j]) > 0.5L + tol) return false;
    if (g.b[k] < (static_cast<LD>(delta) - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.b[k - 1] * (1 - tol)) return false;
  }
  return true;
}

std::vector<EVector> vectors_up_to(const ScaledEMatrix& gram, const Fraction& bound, std::size_t cap) {
  std::vector<EVector> out;
  if (gram.rows() == 0 || bound.num < 0) return out;
  Prepared p = prepare(gram);
  const int128 R = real_bound(gram, bound);
  fincke_pohst(p.reduced, R, [&](const std::vector<std::int64_t>& x, int128) -> int128 {
    if (out.size() >= cap) throw CapExceeded("enumeration cap exceeded", out.size());
    out.push_back(to_coords(p.transform, x));
    return R;
  });
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<EVector> vectors_of_norm(const ScaledEMatrix& gram, const Fraction& n, std::size_t cap) {
  std::vector<EVector> out;
  if (gram.rows() == 0 || n.num <= 0) return out;
  Prepared p = prepare(gram);
  const int128 R = real_bound(gram, n);
  // exact target: den * val == 2 gden num
  const int128 target = checked::mul<int128>(2 * static_cast<int128>(gram.den), n.num);
  fincke_pohst(p.reduced, R, [&](const std::vector<std::int64_t>& x, int128 val) -> int128 {
    if (checked::mul<int128>(val, n.den) != target) return R;
    if (out.size() >= cap) throw CapExceeded("enumeration cap exceeded", out.size());
    out.push_back(to_coords(p.transform, x));
    return R;
  });
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

Fraction min_norm(const ScaledEMatrix& gram, std::size_t cap) {
  if (gram.rows() == 0) return Fraction(0);
  Prepared p = prepare(gram);
  int128 best = p.reduced(0, 0);
  for (Eigen::Index i = 1; i < p.reduced.rows(); ++i) best = std::min<int128>(best, p.reduced(i, i));
  std::size_t visited = 0;
  fincke_pohst(p.reduced, best, [&](const std::vector<std::int64_t>&, int128 val) -> int128 {
    if (++visited > cap) throw CapExceeded("minimum search cap exceeded", visited);
    best = std::min(best, val);
    return best;
  });
  // |v|^2 = val / (2 gden)
  return Fraction(checked::narrow<std::int64_t>(best), checked::mul<std::int64_t>(2, gram.den));
}

std::vector<EVector> collapse_units(const std::vector<EVector>& vs) {
  std::vector<EVector> out;
  for (const EVector& v : vs) {
    Eigen::Index i = 0;
    while (i < v.cols() && v(i).is_zero()) ++i;
    if (i == v.cols()) continue;
    const Eis u = canonicalizing_unit(v(i));
    out.push_back(v.unaryExpr([&](const Eis& x) { return u * x; }));
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end(), [](const EVector& a, const EVector& b) { return a == b; }), out.end());
  return out;
}

}  // namespace eislat
