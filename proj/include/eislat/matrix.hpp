#pragma once

// Dense matrices over E built on Eigen with Eis as a custom scalar.
//
// Vectors are row vectors throughout; a module or lattice is the row span of
// a matrix, and a linear map acts on the right (x -> x * M).

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "eislat/ring.hpp"

namespace Eigen {

template <class Int>
struct NumTraits<eislat::BasicEis<Int>> : GenericNumTraits<eislat::BasicEis<Int>> {
  using Real = eislat::BasicEis<Int>;
  using NonInteger = eislat::BasicEis<Int>;
  using Literal = eislat::BasicEis<Int>;
  using Nested = eislat::BasicEis<Int>;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 12
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Real highest() { return Real(0); }
  static inline Real lowest() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace eislat {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using RowVec = Eigen::Matrix<S, 1, Eigen::Dynamic>;

using EMatrix = Mat<Eis>;
using EVector = RowVec<Eis>;
using WideEMatrix = Mat<WideEis>;
using IntMatrix = Mat<std::int64_t>;

// Entrywise complex conjugate.
template <class Derived>
auto conj(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  return m.unaryExpr([](const S& x) { return conj(x); });
}

// Conjugate transpose. Eigen's adjoint() treats Eis as real, so it is not used.
template <class Derived>
Mat<typename Derived::Scalar> adjoint(const Eigen::MatrixBase<Derived>& m) {
  return conj(m).transpose();
}

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

template <class To, class Derived>
Mat<To> cast_eis(const Eigen::MatrixBase<Derived>& m) {
  Mat<To> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = To::from(m(i, j));
  return out;
}

EMatrix identity(Eigen::Index n);
EMatrix zeros(Eigen::Index r, Eigen::Index c);
EVector row_vector(std::initializer_list<Eis> xs);
EVector row_vector(const std::vector<Eis>& xs);

// Exact matrix product with 128-bit accumulation.
EMatrix multiply(const EMatrix& a, const EMatrix& b);

// Integer content: gcd of every a and b coordinate (0 for the zero matrix).
std::int64_t content(const EMatrix& m);

// ---------------------------------------------------------------------------
// Rational numbers, used for norms of dual-lattice vectors such as 3/2.

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;
  Fraction(std::int64_t n) : num(n), den(1) {}  // NOLINT: implicit from integers
  Fraction(std::int64_t n, std::int64_t d);

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend bool operator<(const Fraction& x, const Fraction& y);
  friend bool operator<=(const Fraction& x, const Fraction& y) { return !(y < x); }
  friend Fraction operator+(const Fraction& x, const Fraction& y);
  friend Fraction operator*(const Fraction& x, const Fraction& y);
  std::string str() const;
};

// ---------------------------------------------------------------------------
// A matrix (or vector) over E with one positive integer denominator. The
// represented value is num / den.

template <class M>
struct Scaled {
  M num;
  std::int64_t den = 1;

  Scaled() = default;
  Scaled(M n, std::int64_t d = 1) : num(std::move(n)), den(d) {  // NOLINT
    if (den <= 0) throw std::invalid_argument("Scaled: denominator must be positive");
  }

  Eigen::Index rows() const { return num.rows(); }
  Eigen::Index cols() const { return num.cols(); }

  // Divide out the common integer content so den is minimal.
  Scaled& normalize() {
    std::int64_t g = checked::gcd(content(num), den);
    if (g > 1) {
      for (Eigen::Index i = 0; i < num.rows(); ++i)
        for (Eigen::Index j = 0; j < num.cols(); ++j) num(i, j) = Eis(num(i, j).a() / g, num(i, j).b() / g);
      den /= g;
    }
    return *this;
  }

  bool is_integral() const { return den == 1; }

  friend bool operator==(const Scaled& x, const Scaled& y) {
    Scaled a = x, b = y;
    a.normalize();
    b.normalize();
    return a.den == b.den && a.num.rows() == b.num.rows() && a.num.cols() == b.num.cols() && a.num == b.num;
  }
};

using ScaledEMatrix = Scaled<EMatrix>;
using ScaledEVector = Scaled<EVector>;

ScaledEMatrix operator*(const ScaledEMatrix& a, const ScaledEMatrix& b);
ScaledEVector operator*(const ScaledEVector& v, const ScaledEMatrix& m);
ScaledEMatrix scale(const ScaledEMatrix& m, const Eis& s);

// Rewrite both operands over their least common denominator.
std::int64_t common_denominator(std::int64_t d1, std::int64_t d2);
EMatrix rescale_numerator(const EMatrix& num, std::int64_t from_den, std::int64_t to_den);

// Stable flat key (den followed by coordinates) for hashing normalized matrices.
std::vector<std::int64_t> flat_key(const ScaledEMatrix& m);

struct FlatKeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& k) const noexcept;
};

// Hermitian form x F y^* for row vectors over E.
Eis hermitian(const EVector& x, const EMatrix& form, const EVector& y);

std::string to_string(const EVector& v);
std::string to_string(const ScaledEVector& v);
std::string to_string(const EMatrix& m);

}  // namespace eislat
