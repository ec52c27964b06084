#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace embform {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Backed by GMP, so numerators and denominators are unbounded.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)

  template <std::unsigned_integral T>
  Rational(T value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT(implicit)

  Rational(long numerator, long denominator);
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(mpq_class value);

  /// Parses "p", "-p", "p/q" or "-p/q" (decimal digits only).
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  Rational abs() const;

  /// "p" when the denominator is one, otherwise "p/q".
  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using RatVector = std::vector<Rational>;

/// Dense row-major rational matrix. The column count is tracked explicitly so
/// that matrices with zero rows still know their width.
class RatMatrix {
 public:
  explicit RatMatrix(std::size_t cols = 0) : cols_(cols) {}
  /// Rows must all have the same length; an empty list gives a 0x0 matrix.
  explicit RatMatrix(std::vector<RatVector> rows);
  RatMatrix(std::vector<RatVector> rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  static RatMatrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_.empty(); }

  const RatVector& row(std::size_t i) const { return rows_[i]; }
  RatVector& row(std::size_t i) { return rows_[i]; }
  const RatVector& operator[](std::size_t i) const { return rows_[i]; }
  RatVector& operator[](std::size_t i) { return rows_[i]; }

  void add_row(RatVector row);
  RatMatrix transpose() const;

  const std::vector<RatVector>& row_list() const { return rows_; }
  auto begin() const { return rows_.begin(); }
  auto end() const { return rows_.end(); }

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<RatVector> rows_;
};

// Vector helpers ------------------------------------------------------------

RatVector zeros(std::size_t n);
RatVector unit_vector(std::size_t n, std::size_t i);
Rational dot(const RatVector& a, const RatVector& b);
bool is_zero(const RatVector& v);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& v);
RatVector matvec(const RatMatrix& m, const RatVector& v);

/// Scales by a positive factor so all entries are coprime integers.
/// The zero vector is returned unchanged.
RatVector primitive_positive(const RatVector& v);

/// Like primitive_positive, then flips the sign so the first nonzero entry is
/// positive. This is the canonical representative of a line through the origin.
RatVector primitive_normalized(const RatVector& v);

/// Integer image of primitive_positive.
std::vector<mpz_class> to_primitive_integers(const RatVector& v);

std::string to_string(const RatVector& v);

}  // namespace embform
