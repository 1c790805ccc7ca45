#include "eislat/lattice.hpp"

#include <sstream>

namespace eislat {

namespace {

ScaledEMatrix compute_gram(const ScaledEMatrix& b, const EMatrix& form) {
  EMatrix g = multiply(multiply(b.num, form), adjoint(b.num));
  ScaledEMatrix out(g, checked::mul(b.den, b.den));
  out.normalize();
  return out;
}

EMatrix block_diagonal(const std::vector<EMatrix>& blocks) {
  Eigen::Index r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  EMatrix out = zeros(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

bool theta_divides(const Eis& x) { return residue_mod_theta(x).v == 0; }

}  // namespace

HermitianLattice::HermitianLattice(const ScaledEMatrix& generators, EMatrix form)
    : module_(hnf(generators)), form_(std::move(form)) {
  if (form_.rows() != form_.cols() || form_.cols() != generators.cols())
    throw std::invalid_argument("HermitianLattice: form and generators disagree in dimension");
  if (!(form_ == adjoint(form_))) throw std::invalid_argument("HermitianLattice: form is not Hermitian");
  gram_ = compute_gram(module_.basis(), form_);
}

HermitianLattice HermitianLattice::diagonal(const std::vector<int>& signs, const ScaledEMatrix& generators) {
  EMatrix f = zeros(static_cast<Eigen::Index>(signs.size()), static_cast<Eigen::Index>(signs.size()));
  for (std::size_t i = 0; i < signs.size(); ++i) f(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = Eis(signs[i]);
  return HermitianLattice(generators, f);
}

HermitianLattice HermitianLattice::from_gram(const EMatrix& gram) { return HermitianLattice(identity(gram.rows()), gram); }

ScaledEVector HermitianLattice::ambient(const EVector& c) const {
  ScaledEVector v(EVector(multiply(c, basis().num)), basis().den);
  v.normalize();
  return v;
}

std::string ScaledEis::str() const { return den == 1 ? to_string(num) : "(" + to_string(num) + ")/" + std::to_string(den); }

ScaledEis inner(const HermitianLattice& L, const ScaledEVector& x, const ScaledEVector& y) {
  Eis v = hermitian(x.num, L.form(), y.num);
  std::int64_t den = checked::mul(x.den, y.den);
  std::int64_t g = checked::gcd(checked::gcd(v.a(), v.b()), den);
  if (g > 1) {
    v = Eis(v.a() / g, v.b() / g);
    den /= g;
  }
  return {v, den};
}

Fraction norm(const HermitianLattice& L, const ScaledEVector& x) {
  ScaledEis n = inner(L, x, x);
  return Fraction(n.num.a(), n.den);
}

Fraction coord_norm(const ScaledEMatrix& gram, const EVector& c) {
  Eis n = hermitian(c, gram.num, c);
  if (n.b() != 0) throw std::logic_error("coord_norm: Gram is not Hermitian");
  return Fraction(n.a(), gram.den);
}

// ---------------------------------------------------------------------------

Signature signature(const EMatrix& h) {
  if (h.rows() != h.cols() || !(h == adjoint(h))) throw std::invalid_argument("signature: matrix is not Hermitian");
  const Eigen::Index n = h.rows();
  EMatrix g = h;
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  Signature s;
  auto live = [&](Eigen::Index i) { return alive[static_cast<std::size_t>(i)]; };

  for (;;) {
    Eigen::Index k = -1;
    for (Eigen::Index i = 0; i < n && k < 0; ++i)
      if (live(i) && !g(i, i).is_zero()) k = i;
    if (k < 0) {
      // no usable diagonal entry: make one from a nonzero off-diagonal pair
      Eigen::Index pj = -1, pk = -1;
      for (Eigen::Index i = 0; i < n && pj < 0; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
          if (i != j && live(i) && live(j) && !g(i, j).is_zero()) {
            pj = i;
            pk = j;
            break;
          }
      if (pj < 0) {
        for (Eigen::Index i = 0; i < n; ++i) s.zero += live(i);
        return s;
      }
      Eis u(1);
      for (const Eis& cand : units())
        if (two_re(conj(cand) * g(pj, pk)) != 0) {
          u = cand;
          break;
        }
      for (Eigen::Index l = 0; l < n; ++l) g(pj, l) += u * g(pk, l);
      for (Eigen::Index l = 0; l < n; ++l) g(l, pj) += conj(u) * g(l, pk);
      continue;
    }
    const Eis p = g(k, k);
    (p.a() > 0 ? s.positive : s.negative) += 1;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == k || !live(j) || g(j, k).is_zero()) continue;
      const Eis d = gcd(p, g(j, k));
      const Eis a = exact_div(p, d), b = exact_div(g(j, k), d);
      for (Eigen::Index l = 0; l < n; ++l) g(j, l) = a * g(j, l) - b * g(k, l);
      for (Eigen::Index l = 0; l < n; ++l) g(l, j) = conj(a) * g(l, j) - conj(b) * g(l, k);
      // divide out integer content of row/column j when the diagonal allows it
      std::int64_t c = 0;
      for (Eigen::Index l = 0; l < n; ++l) c = checked::gcd(checked::gcd(c, g(j, l).a()), g(j, l).b());
      if (c > 1 && g(j, j).a() % (c * c) == 0) {
        for (Eigen::Index l = 0; l < n; ++l) {
          if (l == j) continue;
          g(j, l) = Eis(g(j, l).a() / c, g(j, l).b() / c);
          g(l, j) = Eis(g(l, j).a() / c, g(l, j).b() / c);
        }
        g(j, j) = Eis(g(j, j).a() / (c * c));
      }
    }
    alive[static_cast<std::size_t>(k)] = false;
  }
}

Signature signature(const HermitianLattice& L) { return signature(L.gram().num); }

GramInfo gram_and_integrality(const HermitianLattice& L) {
  GramInfo info;
  info.gram = L.gram();
  const Eigen::Index n = L.rank();
  Eis d = determinant(info.gram.num);
  if (d.b() != 0) throw std::logic_error("gram_and_integrality: non-real determinant");
  std::int64_t den = 1;
  for (Eigen::Index i = 0; i < n; ++i) den = checked::mul(den, info.gram.den);
  info.det = Fraction(d.a(), den);
  info.degenerate = d.is_zero();
  bool theta = info.gram.is_integral();
  for (Eigen::Index i = 0; theta && i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (!theta_divides(info.gram.num(i, j))) {
        theta = false;
        break;
      }
  info.in_theta_dual = theta;
  std::int64_t p = 1;
  for (Eigen::Index i = 0; i < n; ++i) p = checked::mul<std::int64_t>(p, 3);
  // [theta L' : L] = det^2 / 3^n
  info.equals_theta_dual = theta && !info.degenerate && info.det.den == 1 && checked::mul(info.det.num, info.det.num) == p;
  return info;
}

HermitianLattice theta_dual(const HermitianLattice& L) {
  const ScaledEMatrix& g = L.gram();
  if (determinant(g.num).is_zero()) throw DegenerateError("theta_dual: degenerate Gram matrix");
  ScaledEMatrix inv = inverse(g.num);
  // G^{-1} = den * inverse(num)
  ScaledEMatrix ginv(inv.num.unaryExpr([&](const Eis& x) { return x * Eis(g.den); }), inv.den);
  ginv.normalize();
  ScaledEMatrix rows = scale(ginv, Eis::theta()) * L.basis();
  return HermitianLattice(rows, L.form());
}

IntMatrix real_gram(const EMatrix& gram) {
  for (Eigen::Index i = 0; i < gram.rows(); ++i)
    for (Eigen::Index j = 0; j < gram.cols(); ++j)
      if (!theta_divides(gram(i, j))) {
        std::ostringstream os;
        os << "real_gram: inner product of basis vectors " << i << " and " << j << " is " << to_string(gram(i, j))
           << ", not divisible by theta";
        throw std::domain_error(os.str());
      }
  return real_form(gram);
}

IntMatrix real_form(const EMatrix& gram) {
  const Eigen::Index n = gram.rows();
  IntMatrix r(2 * n, 2 * n);
  const Eis pw[3] = {Eis::omega_bar(), Eis(1), Eis::omega()};  // w^(s-t), s-t = -1, 0, 1
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) r(2 * i + s, 2 * j + t) = two_re(pw[s - t + 1] * gram(i, j));
  return r;
}

IntMatrix real_gram(const HermitianLattice& L) {
  if (!L.gram().is_integral()) throw std::domain_error("real_gram: Gram matrix is not integral");
  return real_gram(L.gram().num);
}

bool real_form_even(const IntMatrix& r) {
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    for (Eigen::Index j = 0; j < r.cols(); ++j)
      if (r(i, j) % 3 != 0) return false;
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    if ((r(i, i) / 3) % 2 != 0) return false;
  return true;
}

HermitianLattice orth_complement(const HermitianLattice& L, const std::vector<ScaledEVector>& S) {
  if (S.empty()) return L;
  EMatrix s(static_cast<Eigen::Index>(S.size()), L.ambient_dim());
  for (std::size_t i = 0; i < S.size(); ++i) s.row(static_cast<Eigen::Index>(i)) = S[i].num;
  EMatrix m = multiply(multiply(L.basis().num, L.form()), adjoint(s));
  EMatrix k = left_kernel(m);
  if (k.rows() == 0) return HermitianLattice(ScaledEMatrix(EMatrix(0, L.ambient_dim()), 1), L.form());
  return HermitianLattice(ScaledEMatrix(multiply(k, L.basis().num), L.basis().den), L.form());
}

NullSplit split_null(const HermitianLattice& L, const ScaledEVector& rho) {
  GramInfo info = gram_and_integrality(L);
  if (!info.equals_theta_dual) throw std::domain_error("split_null: lattice is not theta-self-dual");
  auto c = L.coords(rho);
  if (!c) throw std::domain_error("split_null: vector is not in the lattice");
  if (!(coord_norm(L.gram(), *c) == Fraction(0))) throw std::domain_error("split_null: vector is not null");
  if (unit_index(vector_gcd(*c).g) < 0) throw std::domain_error("split_null: vector is not primitive");

  const EMatrix& g = L.gram().num;
  EVector h = EVector(multiply(*c, g));  // h_i = <rho, b_i>
  EVector ht(h.cols());
  for (Eigen::Index i = 0; i < h.cols(); ++i) ht(i) = exact_div(h(i), Eis::theta());
  VectorGcd vg = vector_gcd(ht);
  if (unit_index(vg.g) < 0) throw std::domain_error("split_null: vector is not primitive in the dual");
  const Eis ginv = conj(unit_inverse(vg.g));
  EVector d(ht.cols());
  for (Eigen::Index i = 0; i < ht.cols(); ++i) d(i) = conj(vg.coeffs(i)) * ginv;

  Fraction wn = coord_norm(L.gram(), d);
  if (wn.den != 1 || wn.num % 3 != 0) throw std::logic_error("split_null: norm of w is not in 3Z");
  const Eis shift = Eis(wn.num / 3) * Eis::omega();
  for (Eigen::Index i = 0; i < d.cols(); ++i) d(i) += shift * (*c)(i);

  NullSplit out;
  out.rho = rho;
  out.w = L.ambient(d);
  if (!(coord_norm(L.gram(), d) == Fraction(0)) || !(hermitian(*c, g, d) == Eis::theta()))
    throw std::logic_error("split_null: hyperbolic pair construction failed");
  out.complement = orth_complement(L, {out.rho, out.w});
  return out;
}

HermitianLattice direct_sum(const HermitianLattice& L, int copies) {
  std::vector<EMatrix> b(static_cast<std::size_t>(copies), L.basis().num);
  std::vector<EMatrix> f(static_cast<std::size_t>(copies), L.form());
  return HermitianLattice(ScaledEMatrix(block_diagonal(b), L.basis().den), block_diagonal(f));
}

ScaledEVector glue_vector(const GlueDatum& d, const FVector& word) {
  const ScaledEVector& rep = d.representative;
  const Eigen::Index m = rep.cols();
  if (static_cast<int>(word.size()) != d.copies) throw std::invalid_argument("glue_vector: word length");
  EVector v(m * d.copies);
  for (int j = 0; j < d.copies; ++j) {
    const FElem x = word[static_cast<std::size_t>(j)];
    const Eis s = d.code.field == Field::F3 ? lift(F3{x}) : lift(F4{x});
    for (Eigen::Index k = 0; k < m; ++k) v(j * m + k) = s * rep.num(k);
  }
  ScaledEVector out(v, rep.den);
  out.normalize();
  return out;
}

HermitianLattice glue(const GlueDatum& d) {
  HermitianLattice base = direct_sum(d.component, d.copies);
  const std::int64_t den = common_denominator(base.basis().den, d.representative.den);
  EMatrix gens(base.rank() + d.code.rows(), base.ambient_dim());
  gens.topRows(base.rank()) = rescale_numerator(base.basis().num, base.basis().den, den);
  for (Eigen::Index i = 0; i < d.code.rows(); ++i) {
    ScaledEVector v = glue_vector(d, d.code.row(i));
    gens.row(base.rank() + i) = rescale_numerator(v.num, v.den, den);
  }
  return HermitianLattice(ScaledEMatrix(gens, den), base.form());
}

ScaledEMatrix triflection(const EMatrix& form, const ScaledEVector& r) {
  Eis n = hermitian(r.num, form, r.num);
  if (!(n == Eis(checked::mul(3 * r.den, r.den)))) throw std::domain_error("triflection: vector does not have norm 3");
  const Eigen::Index m = form.rows();
  const std::int64_t d = checked::mul(3 * r.den, r.den);
  EMatrix outer = multiply(multiply(form, adjoint(r.num)), r.num);
  const Eis wm1 = Eis::omega() - Eis(1);
  EMatrix num = outer.unaryExpr([&](const Eis& x) { return wm1 * x; });
  for (Eigen::Index i = 0; i < m; ++i) num(i, i) += Eis(d);
  ScaledEMatrix t(num, d);
  t.normalize();
  return t;
}

EMatrix triflection_coords(const ScaledEMatrix& gram, const EVector& r) {
  if (!(coord_norm(gram, r) == Fraction(3))) throw std::domain_error("triflection_coords: vector does not have norm 3");
  const std::int64_t d = checked::mul<std::int64_t>(3, gram.den);
  EMatrix outer = multiply(multiply(gram.num, adjoint(r)), r);
  const Eis wm1 = Eis::omega() - Eis(1);
  EMatrix num = outer.unaryExpr([&](const Eis& x) { return wm1 * x; });
  for (Eigen::Index i = 0; i < num.rows(); ++i) num(i, i) += Eis(d);
  ScaledEMatrix t(num, d);
  t.normalize();
  if (!t.is_integral()) throw std::domain_error("triflection_coords: not integral on this lattice");
  return t.num;
}

}  // namespace eislat
