#include "eislat/matrix.hpp"

#include <numeric>
#include <sstream>

namespace eislat {

EMatrix identity(Eigen::Index n) {
  EMatrix m = EMatrix::Constant(n, n, Eis(0));
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Eis(1);
  return m;
}

EMatrix zeros(Eigen::Index r, Eigen::Index c) { return EMatrix::Constant(r, c, Eis(0)); }

EVector row_vector(std::initializer_list<Eis> xs) { return row_vector(std::vector<Eis>(xs)); }

EVector row_vector(const std::vector<Eis>& xs) {
  EVector v(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<Eigen::Index>(i)) = xs[i];
  return v;
}

EMatrix multiply(const EMatrix& a, const EMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  EMatrix out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      WideEis acc(0);
      for (Eigen::Index k = 0; k < a.cols(); ++k) {
        const Eis& x = a(i, k);
        if (x.is_zero()) continue;
        acc += WideEis::from(x) * WideEis::from(b(k, j));
      }
      out(i, j) = Eis::from(acc);
    }
  }
  return out;
}

std::int64_t content(const EMatrix& m) {
  std::int64_t g = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      g = checked::gcd(g, m(i, j).a());
      g = checked::gcd(g, m(i, j).b());
      if (g == 1) return 1;
    }
  return g;
}

// ---------------------------------------------------------------------------

Fraction::Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (d == 0) throw DivisionByZero("Fraction with zero denominator");
  if (den < 0) {
    num = checked::sub<std::int64_t>(0, num);
    den = checked::sub<std::int64_t>(0, den);
  }
  std::int64_t g = checked::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

bool operator<(const Fraction& x, const Fraction& y) {
  return static_cast<int128>(x.num) * y.den < static_cast<int128>(y.num) * x.den;
}

Fraction operator+(const Fraction& x, const Fraction& y) {
  using checked::add;
  using checked::mul;
  return Fraction(add(mul(x.num, y.den), mul(y.num, x.den)), mul(x.den, y.den));
}

Fraction operator*(const Fraction& x, const Fraction& y) {
  return Fraction(checked::mul(x.num, y.num), checked::mul(x.den, y.den));
}

std::string Fraction::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

// ---------------------------------------------------------------------------

ScaledEMatrix operator*(const ScaledEMatrix& a, const ScaledEMatrix& b) {
  ScaledEMatrix out(multiply(a.num, b.num), checked::mul(a.den, b.den));
  out.normalize();
  return out;
}

ScaledEVector operator*(const ScaledEVector& v, const ScaledEMatrix& m) {
  EMatrix row = v.num;
  ScaledEVector out(EVector(multiply(row, m.num)), checked::mul(v.den, m.den));
  out.normalize();
  return out;
}

ScaledEMatrix scale(const ScaledEMatrix& m, const Eis& s) {
  ScaledEMatrix out(m.num.unaryExpr([&](const Eis& x) { return x * s; }), m.den);
  out.normalize();
  return out;
}

std::int64_t common_denominator(std::int64_t d1, std::int64_t d2) {
  return checked::mul(d1 / checked::gcd(d1, d2), d2);
}

EMatrix rescale_numerator(const EMatrix& num, std::int64_t from_den, std::int64_t to_den) {
  if (to_den % from_den != 0) throw std::invalid_argument("rescale_numerator: target is not a multiple");
  const Eis f(to_den / from_den);
  if (f == Eis(1)) return num;
  return num.unaryExpr([&](const Eis& x) { return x * f; });
}

std::vector<std::int64_t> flat_key(const ScaledEMatrix& m) {
  std::vector<std::int64_t> key;
  key.reserve(static_cast<std::size_t>(2 * m.rows() * m.cols() + 1));
  key.push_back(m.den);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      key.push_back(m.num(i, j).a());
      key.push_back(m.num(i, j).b());
    }
  return key;
}

std::size_t FlatKeyHash::operator()(const std::vector<std::int64_t>& k) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::int64_t x : k) {
    h ^= static_cast<std::uint64_t>(x) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h);
}

Eis hermitian(const EVector& x, const EMatrix& form, const EVector& y) {
  WideEis acc(0);
  for (Eigen::Index i = 0; i < x.cols(); ++i) {
    if (x(i).is_zero()) continue;
    WideEis xi = WideEis::from(x(i));
    for (Eigen::Index j = 0; j < y.cols(); ++j) {
      const Eis& f = form(i, j);
      if (f.is_zero() || y(j).is_zero()) continue;
      acc += xi * WideEis::from(f) * conj(WideEis::from(y(j)));
    }
  }
  return Eis::from(acc);
}

std::string to_string(const EVector& v) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < v.cols(); ++i) os << (i ? "," : "") << to_string(v(i));
  os << ")";
  return os.str();
}

std::string to_string(const ScaledEVector& v) {
  return v.den == 1 ? to_string(v.num) : to_string(v.num) + "/" + std::to_string(v.den);
}

std::string to_string(const EMatrix& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) os << to_string(EVector(m.row(i))) << "\n";
  return os.str();
}

}  // namespace eislat
