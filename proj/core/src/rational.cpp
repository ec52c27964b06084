#include "embform/rational.hpp"

#include <ostream>
#include <sstream>

#include "embform/error.hpp"

namespace embform {

Rational::Rational(long numerator, long denominator) : value_(numerator, denominator) {
  if (denominator == 0) throw InvalidArgument("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw InvalidArgument("rational with zero denominator");
  value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
  while (!t.empty() && (t.back() == ' ' || t.back() == '\t' || t.back() == '\r')) t.remove_suffix(1);
  bool negative = false;
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
    negative = t.front() == '-';
    t.remove_prefix(1);
  }
  const auto slash = t.find('/');
  const std::string_view num = t.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : t.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  value_ /= o.value_;
  return *this;
}
Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// RatMatrix -------------------------------------------------------------------

RatMatrix::RatMatrix(std::vector<RatVector> rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : rows_.front().size();
  for (const auto& r : rows_)
    if (r.size() != cols_) throw InvalidArgument("ragged matrix rows");
}

RatMatrix::RatMatrix(std::vector<RatVector> rows, std::size_t cols) : cols_(cols), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.size() != cols_) throw InvalidArgument("matrix row has wrong length");
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.add_row(unit_vector(n, i));
  return m;
}

RatMatrix RatMatrix::zero(std::size_t rows, std::size_t cols) {
  return RatMatrix(std::vector<RatVector>(rows, zeros(cols)), cols);
}

void RatMatrix::add_row(RatVector row) {
  if (row.size() != cols_) throw InvalidArgument("matrix row has wrong length");
  rows_.push_back(std::move(row));
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(rows());
  for (std::size_t j = 0; j < cols_; ++j) {
    RatVector col(rows());
    for (std::size_t i = 0; i < rows(); ++i) col[i] = rows_[i][j];
    t.add_row(std::move(col));
  }
  return t;
}

// Vector helpers ------------------------------------------------------------

RatVector zeros(std::size_t n) { return RatVector(n); }

RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector v(n);
  v.at(i) = 1;
  return v;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("dot product of vectors with different dimensions");
  mpq_class acc;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i].value() * b[i].value();
  return Rational(std::move(acc));
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("vector sum dimension mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("vector difference dimension mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector operator*(const Rational& s, const RatVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

RatVector matvec(const RatMatrix& m, const RatVector& v) {
  RatVector r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) r[i] = dot(m[i], v);
  return r;
}

std::vector<mpz_class> to_primitive_integers(const RatVector& v) {
  mpz_class den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.value().get_den_mpz_t());
  std::vector<mpz_class> ints(v.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].numerator() * (den / v[i].denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : ints) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return ints;
}

RatVector primitive_positive(const RatVector& v) {
  const auto ints = to_primitive_integers(v);
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(ints[i]);
  return r;
}

RatVector primitive_normalized(const RatVector& v) {
  RatVector r = primitive_positive(v);
  for (const auto& x : r) {
    if (x.is_zero()) continue;
    if (x.sign() < 0)
      for (auto& y : r) y = -y;
    break;
  }
  return r;
}

std::string to_string(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace embform
