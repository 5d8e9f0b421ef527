#include "motive/exact_math.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

#include "motive/errors.hpp"

namespace motive {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw std::domain_error("zero denominator");
  return Rational(q);
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p()) {
    throw std::range_error("rational " + to_string() + " is not a machine integer");
  }
  return v_.get_num().get_si();
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in product");
  RatMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return p;
}

std::vector<std::vector<std::string>> RatMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r].push_back(at(r, c).to_string());
  return out;
}

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Scales every row by the lcm of its denominators.
IntMatrix clear_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).raw().get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& q = m.at(r, c).raw();
      out[r][c] = q.get_num() * (l / q.get_den());
    }
  }
  return out;
}

// Fraction-free forward elimination in place. Returns pivot columns; every
// division is exact because entries stay equal to minors of the input.
std::vector<std::size_t> bareiss(IntMatrix& a, std::size_t col_limit) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  if (rows == 0) return pivots;
  const std::size_t cols = a[0].size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < col_limit && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    // Rows above the pivot row are untouched; rows below the last pivot that
    // were skipped still carry the previous scale, which is fine for rank.
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t mat_rank(const RatMatrix& m) {
  IntMatrix a = clear_denominators(m);
  return bareiss(a, m.cols()).size();
}

RatMatrix mat_inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  // Row scaling D*m; inverse is (D*m)^{-1} * D.
  std::vector<mpz_class> scale(n, 1);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      mpz_lcm(scale[r].get_mpz_t(), scale[r].get_mpz_t(), m.at(r, c).raw().get_den_mpz_t());

  IntMatrix a(n, std::vector<mpz_class>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const mpq_class& q = m.at(r, c).raw();
      a[r][c] = q.get_num() * (scale[r] / q.get_den());
    }
    a[r][n + r] = scale[r];
  }
  auto pivots = bareiss(a, n);
  if (pivots.size() < n) throw Singular();

  // Upper triangular now; back substitution over the rationals.
  RatMatrix inv(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t ii = n; ii-- > 0;) {
      mpq_class acc(a[ii][n + col]);
      for (std::size_t j = ii + 1; j < n; ++j) acc -= mpq_class(a[ii][j]) * inv.at(j, col).raw();
      acc /= mpq_class(a[ii][ii]);
      inv.at(ii, col) = Rational(acc);
    }
  }
  return inv;
}

RatMatrix mat_kernel(const RatMatrix& m) {
  // Reduced row echelon form over Q; fine at the sizes we use.
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m.at(r, c).raw();

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    mpq_class inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  RatMatrix k(cols, free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k.at(free_cols[f], f) = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
      k.at(pivot_cols[i], f) = Rational(mpq_class(-a[i][free_cols[f]]));
  }
  return k;
}

LinearCoeff& LinearCoeff::operator+=(const LinearCoeff& o) {
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

LinearCoeff& LinearCoeff::operator-=(const LinearCoeff& o) {
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

LinearCoeff& LinearCoeff::operator*=(const LinearCoeff& o) {
  if (!d_.is_zero() && !o.d_.is_zero()) throw DegreeOverflow();
  Rational d = c_ * o.d_ + d_ * o.c_;
  c_ *= o.c_;
  d_ = std::move(d);
  return *this;
}

std::string LinearCoeff::to_string() const {
  if (d_.is_zero()) return c_.to_string();
  std::string da = d_ == Rational(1) ? "d_a" : (d_ == Rational(-1) ? "-d_a" : d_.to_string() + "*d_a");
  if (c_.is_zero()) return da;
  if (d_.sign() < 0) {
    std::string mag = -d_ == Rational(1) ? "d_a" : (-d_).to_string() + "*d_a";
    return c_.to_string() + " - " + mag;
  }
  return c_.to_string() + " + " + da;
}

}  // namespace motive
