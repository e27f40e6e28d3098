#pragma once
// Runtime-selectable coefficient field (prime field by default, exact
// rationals optional) and the dense linear algebra used by the Hom functor.

#include <cstdint>
#include <string>
#include <vector>

namespace gentle {

// Field elements are opaque int64 handles: residues mod p for prime fields,
// indices into an interning table for rationals.
using FieldElem = std::int64_t;

class Field {
 public:
  static Field prime(std::int64_t p = 1000003);
  static Field rationals();

  FieldElem zero() const { return zero_; }
  FieldElem one() const { return one_; }
  FieldElem from_int(std::int64_t n) const;
  FieldElem from_fraction(std::int64_t num, std::int64_t den) const;
  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem inv(FieldElem a) const;
  bool is_zero(FieldElem a) const;
  std::string to_string(FieldElem a) const;
  FieldElem parse(const std::string& s) const;  // "n" or "n/d"
  std::string name() const;

 private:
  Field() = default;
  bool rational_ = false;
  std::int64_t p_ = 0;
  FieldElem zero_ = 0, one_ = 1;
  // interning table for rationals (canonical reduced num/den pairs)
  struct Rat {
    std::int64_t num, den;
  };
  mutable std::vector<Rat> rats_;
  FieldElem intern(std::int64_t num, std::int64_t den) const;
};

// Row-major dense matrix over a Field.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<FieldElem> a;

  Mat() = default;
  Mat(const Field& F, int r, int c) : rows(r), cols(c), a((size_t)r * c, F.zero()) {}
  FieldElem& at(int i, int j) { return a[(size_t)i * cols + j]; }
  FieldElem at(int i, int j) const { return a[(size_t)i * cols + j]; }
};

int rank(const Field& F, Mat m);
// Basis of the right kernel {x : m x = 0}, as columns.
std::vector<std::vector<FieldElem>> kernel_basis(const Field& F, Mat m);
// Is b in the column span of m?
bool in_column_span(const Field& F, const Mat& m, const std::vector<FieldElem>& b);
// One solution x of m x = b, if any.
bool solve(const Field& F, Mat m, std::vector<FieldElem> b, std::vector<FieldElem>& x);

}  // namespace gentle
