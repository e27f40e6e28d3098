#include "gentle/field.hpp"

#include <numeric>
#include <stdexcept>

namespace gentle {

Field Field::prime(std::int64_t p) {
  if (p < 2) throw std::invalid_argument("field characteristic must be >= 2");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("field characteristic must be prime");
  Field f;
  f.p_ = p;
  f.zero_ = 0;
  f.one_ = 1 % p;
  return f;
}

Field Field::rationals() {
  Field f;
  f.rational_ = true;
  f.rats_ = {{0, 1}, {1, 1}};
  f.zero_ = 0;
  f.one_ = 1;
  return f;
}

FieldElem Field::intern(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  for (size_t i = 0; i < rats_.size(); ++i)
    if (rats_[i].num == num && rats_[i].den == den) return (FieldElem)i;
  rats_.push_back({num, den});
  return (FieldElem)(rats_.size() - 1);
}

FieldElem Field::from_int(std::int64_t n) const {
  if (rational_) return intern(n, 1);
  std::int64_t r = n % p_;
  return r < 0 ? r + p_ : r;
}

FieldElem Field::from_fraction(std::int64_t num, std::int64_t den) const {
  if (rational_) return intern(num, den);
  return mul(from_int(num), inv(from_int(den)));
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
  if (rational_) {
    const Rat &x = rats_[a], &y = rats_[b];
    return intern(x.num * y.den + y.num * x.den, x.den * y.den);
  }
  std::int64_t s = a + b;
  return s >= p_ ? s - p_ : s;
}

FieldElem Field::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem Field::mul(FieldElem a, FieldElem b) const {
  if (rational_) {
    const Rat &x = rats_[a], &y = rats_[b];
    return intern(x.num * y.num, x.den * y.den);
  }
  return (FieldElem)((__int128)a * b % p_);
}

FieldElem Field::neg(FieldElem a) const {
  if (rational_) return intern(-rats_[a].num, rats_[a].den);
  return a == 0 ? 0 : p_ - a;
}

FieldElem Field::inv(FieldElem a) const {
  if (rational_) {
    if (rats_[a].num == 0) throw std::domain_error("inverse of zero");
    return intern(rats_[a].den, rats_[a].num);
  }
  if (a == 0) throw std::domain_error("inverse of zero");
  // extended Euclid
  std::int64_t t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return t < 0 ? t + p_ : t;
}

bool Field::is_zero(FieldElem a) const { return rational_ ? rats_[a].num == 0 : a == 0; }

std::string Field::to_string(FieldElem a) const {
  if (!rational_) return std::to_string(a);
  const Rat& x = rats_[a];
  if (x.den == 1) return std::to_string(x.num);
  return std::to_string(x.num) + "/" + std::to_string(x.den);
}

FieldElem Field::parse(const std::string& s) const {
  size_t slash = s.find('/');
  if (slash == std::string::npos) return from_int(std::stoll(s));
  return from_fraction(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

std::string Field::name() const {
  return rational_ ? "Q" : "F" + std::to_string(p_);
}

namespace {

// Row echelon in place; returns pivot columns.
std::vector<int> echelon(const Field& F, Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int i = row; i < m.rows; ++i)
      if (!F.is_zero(m.at(i, col))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    FieldElem piv = F.inv(m.at(row, col));
    for (int j = col; j < m.cols; ++j) m.at(row, j) = F.mul(m.at(row, j), piv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || F.is_zero(m.at(i, col))) continue;
      FieldElem f = m.at(i, col);
      for (int j = col; j < m.cols; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(const Field& F, Mat m) { return (int)echelon(F, m).size(); }

std::vector<std::vector<FieldElem>> kernel_basis(const Field& F, Mat m) {
  int n = m.cols;
  std::vector<int> pivots = echelon(F, m);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FieldElem>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElem> v(n, F.zero());
    v[free] = F.one();
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = F.neg(m.at((int)r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

bool solve(const Field& F, Mat m, std::vector<FieldElem> b, std::vector<FieldElem>& x) {
  if ((int)b.size() != m.rows) throw std::invalid_argument("solve: size mismatch");
  Mat aug(F, m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<int> pivots = echelon(F, aug);
  for (int c : pivots)
    if (c == m.cols) return false;  // inconsistent
  x.assign(m.cols, F.zero());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at((int)r, m.cols);
  return true;
}

bool in_column_span(const Field& F, const Mat& m, const std::vector<FieldElem>& b) {
  std::vector<FieldElem> x;
  return solve(F, m, b, x);
}

}  // namespace gentle
