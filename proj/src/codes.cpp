#include "eislat/codes.hpp"

#include <stdexcept>

namespace eislat {

Code::Code(const FMatrix& generators) : gen_(rref(generators)) {}

bool Code::contains(const FVector& v) const {
  Subspace s(gen_.field, static_cast<std::size_t>(gen_.cols()));
  for (const auto& r : gen_.row_list()) s.insert(r);
  return s.contains(v);
}

FElem code_inner(Field f, const FVector& x, const FVector& y) {
  FElem s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s = fadd(f, s, fmul(f, x[i], fconj(f, y[i])));
  return s;
}

Code dual(const Code& c) {
  FMatrix g = c.generator();
  // x is orthogonal to every row y  <=>  conj(y) . x = 0
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g.m(i, j) = fconj(g.field, g.m(i, j));
  if (g.rows() == 0) {
    FMatrix full(g.field, g.cols(), g.cols());
    for (Eigen::Index i = 0; i < g.cols(); ++i) full.m(i, i) = 1;
    return Code(full);
  }
  return Code(kernel(g));
}

CodeSummary code_ops(const Code& c) {
  if (c.dimension() > 12) throw std::length_error("code_ops: dimension above 12 refused");
  CodeSummary s;
  s.dual = dual(c);
  s.self_dual = s.dual == c;
  for (const auto& w : enumerate_span(c.generator())) {
    ++s.size;
    ++s.weights[weight(w)];
  }
  for (const auto& [w, n] : s.weights)
    if (w > 0) {
      s.min_weight = w;
      break;
    }
  return s;
}

namespace {

std::string expect(bool ok, const std::string& what) { return ok ? "" : what; }

std::string check(const Code& c, Field f, int n, int k, std::size_t d) {
  if (c.field() != f) return "wrong field";
  if (c.length() != n) return "wrong length";
  if (c.dimension() != k) return "wrong dimension";
  CodeSummary s = code_ops(c);
  if (!s.self_dual) return "not self-dual";
  return expect(s.min_weight == d, "minimum weight " + std::to_string(s.min_weight) + ", expected " + std::to_string(d));
}

}  // namespace

std::string check_tetracode(const Code& c) { return check(c, Field::F3, 4, 2, 3); }
std::string check_hexacode(const Code& c) { return check(c, Field::F4, 6, 3, 4); }
std::string check_golay(const Code& c) { return check(c, Field::F3, 12, 6, 6); }

FMatrix golay_generator() {
  // [I | A]
  static const int a[6][6] = {{0, 1, 1, 1, 1, 1}, {1, 0, 1, 2, 2, 1}, {1, 1, 0, 1, 2, 2},
                              {1, 2, 1, 0, 1, 2}, {1, 2, 2, 1, 0, 1}, {1, 1, 2, 2, 1, 0}};
  FMatrix g(Field::F3, 6, 12);
  for (int i = 0; i < 6; ++i) {
    g.m(i, i) = 1;
    for (int j = 0; j < 6; ++j) g.m(i, 6 + j) = static_cast<FElem>(a[i][j]);
  }
  return g;
}

const StandardCodes& standard_codes() {
  static const StandardCodes codes = [] {
    StandardCodes s;
    s.tetracode = Code(FMatrix(Field::F3, {{0, 1, 1, 1}, {1, 0, 1, 2}}, 4));
    // F4 symbols: 2 is the image of w, 3 the image of w-bar
    s.hexacode = Code(FMatrix(Field::F4, {{1, 0, 0, 1, 3, 2}, {0, 1, 0, 1, 2, 3}, {0, 0, 1, 1, 1, 1}}, 6));
    s.golay = Code(golay_generator());
    for (auto [name, msg] : {std::pair{"tetracode", check_tetracode(s.tetracode)},
                             std::pair{"hexacode", check_hexacode(s.hexacode)},
                             std::pair{"ternary Golay code", check_golay(s.golay)}})
      if (!msg.empty()) throw std::logic_error(std::string(name) + " self-check failed: " + msg);
    return s;
  }();
  return codes;
}

}  // namespace eislat
