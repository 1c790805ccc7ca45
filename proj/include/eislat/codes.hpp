#pragma once

// Linear codes over F3 (standard inner product) and F4 (Hermitian inner
// product), with a few fixed constants.

#include <map>
#include <string>
#include <vector>

#include "eislat/field.hpp"

namespace eislat {

class Code {
 public:
  Code() = default;
  // Rows are reduced to echelon form; dependent rows are dropped.
  explicit Code(const FMatrix& generators);

  Field field() const { return gen_.field; }
  int length() const { return static_cast<int>(gen_.cols()); }
  int dimension() const { return static_cast<int>(gen_.rows()); }
  const FMatrix& generator() const { return gen_; }
  bool contains(const FVector& v) const;

  friend bool operator==(const Code& a, const Code& b) { return a.gen_.field == b.gen_.field && a.gen_.m == b.gen_.m; }

 private:
  FMatrix gen_;
};

// Orthogonal complement: sum x_i y_i over F3, sum x_i conj(y_i) over F4.
Code dual(const Code& c);
// Inner product used by dual().
FElem code_inner(Field f, const FVector& x, const FVector& y);

struct CodeSummary {
  Code dual;
  bool self_dual = false;
  std::map<std::size_t, std::size_t> weights;  // weight -> count
  std::size_t size = 0;
  std::size_t min_weight = 0;  // of nonzero words; 0 for the zero code
};
// Exhaustive; refuses dimension above 12.
CodeSummary code_ops(const Code& c);

struct StandardCodes {
  Code tetracode;
  Code hexacode;
  Code golay;
};

// Self-check of the defining properties; returns an empty string on success
// or a description of the first failure.
std::string check_tetracode(const Code& c);
std::string check_hexacode(const Code& c);
std::string check_golay(const Code& c);

// Built-in generator matrices. Throws std::logic_error if a self-check fails.
const StandardCodes& standard_codes();
FMatrix golay_generator();

}  // namespace eislat
