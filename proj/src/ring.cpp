#include "eislat/ring.hpp"

#include <ostream>
#include <sstream>

namespace eislat {

const std::array<Eis, 6>& units() {
  static const std::array<Eis, 6> kUnits = {Eis(1, 0), Eis(0, 1), Eis(-1, -1), Eis(-1, 0), Eis(0, -1), Eis(1, 1)};
  return kUnits;
}

int unit_index(const Eis& u) {
  const auto& us = units();
  for (int i = 0; i < 6; ++i)
    if (us[i] == u) return i;
  return -1;
}

Eis unit_inverse(const Eis& u) {
  if (unit_index(u) < 0) throw std::domain_error("unit_inverse: not a unit");
  return conj(u);
}

namespace {

// round(n / d), d > 0, ties toward zero
int128 round_ties_to_zero(int128 n, int128 d) {
  int128 q = n / d;
  int128 r = n % d;
  int128 twice = r < 0 ? -2 * r : 2 * r;
  if (twice > d) q += (n < 0 ? -1 : 1);
  return q;
}

// floor(n / d + 1/2), d > 0
int128 round_ties_up(int128 n, int128 d) { return checked::floor_div<int128>(checked::add<int128>(checked::mul<int128>(2, n), d), checked::mul<int128>(2, d)); }

template <class Int, class Round>
DivMod<Int> divmod_impl(const BasicEis<Int>& x, const BasicEis<Int>& y, Round round) {
  if (y.is_zero()) throw DivisionByZero("Eisenstein division by zero");
  WideEis wx = WideEis::from(x), wy = WideEis::from(y);
  WideEis p = wx * conj(wy);
  int128 n = norm(wy);
  WideEis q(round(p.a(), n), round(p.b(), n));
  WideEis r = wx - q * wy;
  return {BasicEis<Int>::from(q), BasicEis<Int>::from(r)};
}

}  // namespace

DivMod<std::int64_t> divmod(const Eis& x, const Eis& y) { return divmod_impl(x, y, round_ties_to_zero); }
DivMod<int128> divmod(const WideEis& x, const WideEis& y) { return divmod_impl(x, y, round_ties_to_zero); }
DivMod<std::int64_t> divmod_canonical(const Eis& x, const Eis& y) { return divmod_impl(x, y, round_ties_up); }
DivMod<int128> divmod_canonical(const WideEis& x, const WideEis& y) { return divmod_impl(x, y, round_ties_up); }

Eis exact_div(const Eis& x, const Eis& y) {
  auto qr = divmod(x, y);
  if (!qr.r.is_zero()) throw std::domain_error("exact_div: " + to_string(y) + " does not divide " + to_string(x));
  return qr.q;
}

WideEis exact_div(const WideEis& x, const WideEis& y) {
  auto qr = divmod(x, y);
  if (!qr.r.is_zero()) throw std::domain_error("exact_div: inexact Eisenstein division");
  return qr.q;
}

bool divides(const Eis& d, const Eis& x) {
  if (d.is_zero()) return x.is_zero();
  return divmod(x, d).r.is_zero();
}

Eis canonicalizing_unit(const Eis& x) {
  if (x.is_zero()) return Eis(1);
  Eis best_u = units()[0];
  Eis best = x;
  for (const Eis& u : units()) {
    Eis c = u * x;
    if (best < c) {
      best = c;
      best_u = u;
    }
  }
  return best_u;
}

Eis canonical_associate(const Eis& x) { return canonicalizing_unit(x) * x; }

Eis gcd(Eis x, Eis y) {
  while (!y.is_zero()) {
    Eis r = divmod(x, y).r;
    x = y;
    y = r;
  }
  return canonical_associate(x);
}

// ---------------------------------------------------------------------------

F3 operator+(F3 x, F3 y) { return F3{static_cast<std::uint8_t>((x.v + y.v) % 3)}; }
F3 operator-(F3 x, F3 y) { return F3{static_cast<std::uint8_t>((x.v + 3 - y.v) % 3)}; }
F3 operator-(F3 x) { return F3{static_cast<std::uint8_t>((3 - x.v) % 3)}; }
F3 operator*(F3 x, F3 y) { return F3{static_cast<std::uint8_t>((x.v * y.v) % 3)}; }
F3 inverse(F3 x) {
  if (x.v == 0) throw DivisionByZero("F3 inverse of zero");
  return x;  // 1*1 = 1, 2*2 = 1
}

F4 operator+(F4 x, F4 y) { return F4{static_cast<std::uint8_t>(x.v ^ y.v)}; }
F4 operator-(F4 x, F4 y) { return x + y; }
F4 operator*(F4 x, F4 y) {
  // (a + bp)(c + dp) = ac + bd + (ad + bc + bd)p   since p^2 = p + 1
  unsigned a = x.v & 1u, b = (x.v >> 1) & 1u, c = y.v & 1u, d = (y.v >> 1) & 1u;
  unsigned lo = (a & c) ^ (b & d);
  unsigned hi = (a & d) ^ (b & c) ^ (b & d);
  return F4{static_cast<std::uint8_t>(lo | (hi << 1))};
}
F4 inverse(F4 x) {
  if (x.v == 0) throw DivisionByZero("F4 inverse of zero");
  return x * x;  // x^3 = 1
}
F4 conj(F4 x) { return x * x; }

F3 residue_mod_theta(const Eis& x) {
  return F3{static_cast<std::uint8_t>(checked::mod<std::int64_t>(checked::add(x.a(), x.b()), 3))};
}

F4 residue_mod_2(const Eis& x) {
  unsigned a = static_cast<unsigned>(checked::mod<std::int64_t>(x.a(), 2));
  unsigned b = static_cast<unsigned>(checked::mod<std::int64_t>(x.b(), 2));
  return F4{static_cast<std::uint8_t>(a | (b << 1))};
}

Residues residues(const Eis& x) { return {residue_mod_theta(x), residue_mod_2(x)}; }

Eis lift(F3 x) { return x.v == 0 ? Eis(0) : (x.v == 1 ? Eis(1) : Eis(-1)); }
Eis lift(F4 x) { return Eis(x.v & 1, (x.v >> 1) & 1); }

std::string to_string(const Eis& x) {
  std::ostringstream os;
  if (x.b() == 0) {
    os << x.a();
  } else {
    if (x.a() != 0) os << x.a() << (x.b() > 0 ? "+" : "-");
    else if (x.b() < 0) os << "-";
    std::int64_t bb = x.b() < 0 ? -x.b() : x.b();
    if (bb != 1) os << bb;
    os << "w";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Eis& x) { return os << to_string(x); }

}  // namespace eislat
