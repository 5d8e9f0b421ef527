#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace motive {

// Exact rational number in lowest terms, backed by GMP.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class value);
  Rational(const mpz_class& num, const mpz_class& den);

  // Accepts "p", "-p", "p/q".
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  // Throws if not an integer or out of range.
  long to_long() const;

  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Dense exact matrix, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatMatrix transpose() const;
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t mat_rank(const RatMatrix& m);
RatMatrix mat_inverse(const RatMatrix& m);
// Basis of the right kernel as columns of the returned matrix.
RatMatrix mat_kernel(const RatMatrix& m);

// constant + d_a_part * d_a, with d_a a formal symbol of degree one.
class LinearCoeff {
 public:
  LinearCoeff() = default;
  LinearCoeff(Rational constant) : c_(std::move(constant)) {}  // NOLINT
  LinearCoeff(Rational constant, Rational d_a_part) : c_(std::move(constant)), d_(std::move(d_a_part)) {}

  static LinearCoeff d_a() { return LinearCoeff(0, 1); }

  const Rational& constant() const { return c_; }
  const Rational& d_a_part() const { return d_; }
  bool is_zero() const { return c_.is_zero() && d_.is_zero(); }

  LinearCoeff& operator+=(const LinearCoeff& o);
  LinearCoeff& operator-=(const LinearCoeff& o);
  // Throws DegreeOverflow when both operands carry d_a.
  LinearCoeff& operator*=(const LinearCoeff& o);

  friend LinearCoeff operator+(LinearCoeff a, const LinearCoeff& b) { return a += b; }
  friend LinearCoeff operator-(LinearCoeff a, const LinearCoeff& b) { return a -= b; }
  friend LinearCoeff operator*(LinearCoeff a, const LinearCoeff& b) { return a *= b; }
  LinearCoeff operator-() const { return LinearCoeff(-c_, -d_); }
  friend bool operator==(const LinearCoeff&, const LinearCoeff&) = default;

  std::string to_string() const;

 private:
  Rational c_;
  Rational d_;
};

}  // namespace motive
