#pragma once

// Exact arithmetic in the Eisenstein integers E = Z[w], w^2 + w + 1 = 0.
//
// Elements are stored as a + b*w. Every operation is overflow-checked; on
// overflow an OverflowError is thrown instead of wrapping.

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace eislat {

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using int128 = __int128;

namespace checked {

template <class T>
inline T add(T x, T y) {
  T r;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

template <class T>
inline T sub(T x, T y) {
  T r;
  if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

template <class T>
inline T mul(T x, T y) {
  T r;
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

template <class To, class From>
inline To narrow(From x) {
  To r = static_cast<To>(x);
  if (static_cast<From>(r) != x) throw OverflowError("integer overflow in narrowing conversion");
  return r;
}

// floor(x / d) for d > 0.
template <class T>
inline T floor_div(T x, T d) {
  T q = x / d;
  if ((x % d != 0) && (x < 0)) --q;
  return q;
}

template <class T>
inline T mod(T x, T d) {
  T r = x % d;
  return r < 0 ? r + d : r;
}

template <class T>
inline T abs(T x) {
  return x < 0 ? sub<T>(0, x) : x;
}

template <class T>
inline T gcd(T x, T y) {
  x = abs(x);
  y = abs(y);
  while (y != 0) {
    T t = x % y;
    x = y;
    y = t;
  }
  return x;
}

}  // namespace checked

template <class Int>
class BasicEis {
 public:
  using IntType = Int;

  constexpr BasicEis() = default;
  constexpr BasicEis(Int a) : a_(a), b_(0) {}  // NOLINT: implicit from integers
  constexpr BasicEis(Int a, Int b) : a_(a), b_(b) {}

  template <class Other>
  static BasicEis from(const BasicEis<Other>& x) {
    return BasicEis(checked::narrow<Int>(x.a()), checked::narrow<Int>(x.b()));
  }

  constexpr Int a() const { return a_; }
  constexpr Int b() const { return b_; }

  static constexpr BasicEis omega() { return BasicEis(0, 1); }
  static constexpr BasicEis omega_bar() { return BasicEis(-1, -1); }
  // theta = w - w_bar = sqrt(-3) = 1 + 2w
  static constexpr BasicEis theta() { return BasicEis(1, 2); }

  constexpr bool is_zero() const { return a_ == 0 && b_ == 0; }

  friend BasicEis operator+(const BasicEis& x, const BasicEis& y) {
    return {checked::add(x.a_, y.a_), checked::add(x.b_, y.b_)};
  }
  friend BasicEis operator-(const BasicEis& x, const BasicEis& y) {
    return {checked::sub(x.a_, y.a_), checked::sub(x.b_, y.b_)};
  }
  friend BasicEis operator-(const BasicEis& x) { return {checked::sub<Int>(0, x.a_), checked::sub<Int>(0, x.b_)}; }
  // (a + bw)(c + dw) = ac - bd + (ad + bc - bd)w
  friend BasicEis operator*(const BasicEis& x, const BasicEis& y) {
    using checked::add;
    using checked::mul;
    using checked::sub;
    Int bd = mul(x.b_, y.b_);
    return {sub(mul(x.a_, y.a_), bd), sub(add(mul(x.a_, y.b_), mul(x.b_, y.a_)), bd)};
  }
  BasicEis& operator+=(const BasicEis& y) { return *this = *this + y; }
  BasicEis& operator-=(const BasicEis& y) { return *this = *this - y; }
  BasicEis& operator*=(const BasicEis& y) { return *this = *this * y; }

  friend constexpr bool operator==(const BasicEis&, const BasicEis&) = default;

  // Lexicographic on (a, b); used for canonical forms only.
  friend constexpr bool operator<(const BasicEis& x, const BasicEis& y) {
    return x.a_ != y.a_ ? x.a_ < y.a_ : x.b_ < y.b_;
  }

 private:
  Int a_ = 0;
  Int b_ = 0;
};

using Eis = BasicEis<std::int64_t>;
using WideEis = BasicEis<int128>;

// conj(a + bw) = (a - b) - bw
template <class Int>
inline BasicEis<Int> conj(const BasicEis<Int>& x) {
  return {checked::sub(x.a(), x.b()), checked::sub<Int>(0, x.b())};
}

// a^2 - ab + b^2
template <class Int>
inline Int norm(const BasicEis<Int>& x) {
  using checked::add;
  using checked::mul;
  using checked::sub;
  return add(sub(mul(x.a(), x.a()), mul(x.a(), x.b())), mul(x.b(), x.b()));
}

// Twice the real part: 2a - b.
template <class Int>
inline Int two_re(const BasicEis<Int>& x) {
  return checked::sub(checked::mul<Int>(2, x.a()), x.b());
}

// Real integers inside E are exactly those with b == 0.
template <class Int>
inline bool is_rational_integer(const BasicEis<Int>& x) {
  return x.b() == 0;
}

// The six units +-1, +-w, +-w^2 in a fixed order.
const std::array<Eis, 6>& units();

// Index i in units() with units()[i] == u, or -1 when u is not a unit.
int unit_index(const Eis& u);
Eis unit_inverse(const Eis& u);

template <class Int>
struct DivMod {
  BasicEis<Int> q;
  BasicEis<Int> r;
};

// x = q*y + r with norm(r) < norm(y). Both coordinates of x/y are rounded to
// the nearest integer, ties toward zero.
DivMod<std::int64_t> divmod(const Eis& x, const Eis& y);
DivMod<int128> divmod(const WideEis& x, const WideEis& y);

// Same bound, but ties round up, so the remainder depends only on the
// residue class of x modulo y. Used wherever remainders must be canonical.
DivMod<std::int64_t> divmod_canonical(const Eis& x, const Eis& y);
DivMod<int128> divmod_canonical(const WideEis& x, const WideEis& y);

// Throws std::domain_error when y does not divide x.
Eis exact_div(const Eis& x, const Eis& y);
WideEis exact_div(const WideEis& x, const WideEis& y);
bool divides(const Eis& d, const Eis& x);

// The unit multiple of x maximizing (a, then b). canonical(0) == 0.
Eis canonical_associate(const Eis& x);
// The unit u with u * x == canonical_associate(x); 1 for x == 0.
Eis canonicalizing_unit(const Eis& x);

Eis gcd(Eis x, Eis y);

// ---------------------------------------------------------------------------
// Residue fields E / theta E = F3 and E / 2E = F4.

// F3 values are 0, 1, 2.
struct F3 {
  std::uint8_t v = 0;
  friend constexpr bool operator==(F3, F3) = default;
};

// F4 values are bit pairs: v = a + 2b represents a + b*p where p is the image
// of w, p^2 = p + 1.
struct F4 {
  std::uint8_t v = 0;
  friend constexpr bool operator==(F4, F4) = default;
};

F3 operator+(F3 x, F3 y);
F3 operator-(F3 x, F3 y);
F3 operator-(F3 x);
F3 operator*(F3 x, F3 y);
F3 inverse(F3 x);

F4 operator+(F4 x, F4 y);
F4 operator-(F4 x, F4 y);
F4 operator*(F4 x, F4 y);
F4 inverse(F4 x);
// Frobenius x -> x^2, which is the F4 image of complex conjugation.
F4 conj(F4 x);

// a + bw  ->  (a + b) mod 3
F3 residue_mod_theta(const Eis& x);
// a + bw  ->  a + b p  in F4
F4 residue_mod_2(const Eis& x);

struct Residues {
  F3 mod_theta;
  F4 mod_two;
};
Residues residues(const Eis& x);

// Lift of an F3 value to {0, 1, -1}.
Eis lift(F3 x);
// Lift of an F4 value to {0, 1, w, 1 + w}.
Eis lift(F4 x);

std::string to_string(const Eis& x);
std::ostream& operator<<(std::ostream& os, const Eis& x);

struct EisHash {
  std::size_t operator()(const Eis& x) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(x.a()) * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::uint64_t>(x.b()) + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace eislat
