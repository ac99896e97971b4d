#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace skewhook {

using BigInt = boost::multiprecision::cpp_int;

/// Power series in q known exactly modulo q^(N+1). Binary operations on
/// series of different precision keep the smaller N.
class QPolynomial {
 public:
  explicit QPolynomial(int degree);
  QPolynomial(int degree, std::vector<BigInt> coeffs);

  static QPolynomial zero(int degree) { return QPolynomial(degree); }
  static QPolynomial one(int degree);
  static QPolynomial monomial(int degree, int exponent);
  /// 1/(1 − q^h) = 1 + q^h + q^{2h} + ... truncated.
  static QPolynomial geometric(int degree, int h);

  int degree() const { return degree_; }
  const BigInt& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  BigInt& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// Lowest exponent with a nonzero coefficient, or -1 for the zero series.
  int valuation() const;

  /// Multiplication by q^k.
  QPolynomial shifted(int k) const;
  /// Same series known to a lower precision.
  QPolynomial truncated(int degree) const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator*=(const QPolynomial& other);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  std::string to_string() const;

 private:
  int degree_;
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QPolynomial& p);

}  // namespace skewhook
