#include "skewhook/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "skewhook/errors.hpp"

namespace skewhook {

QPolynomial::QPolynomial(int degree) : degree_(degree) {
  if (degree < 0) throw DomainError("truncation degree must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(degree) + 1, BigInt(0));
}

QPolynomial::QPolynomial(int degree, std::vector<BigInt> coeffs) : QPolynomial(degree) {
  if (coeffs.size() > coeffs_.size()) coeffs.resize(coeffs_.size());
  std::copy(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

QPolynomial QPolynomial::one(int degree) { return monomial(degree, 0); }

QPolynomial QPolynomial::monomial(int degree, int exponent) {
  QPolynomial p(degree);
  if (exponent < 0) throw DomainError("negative exponent");
  if (exponent <= degree) p[exponent] = 1;
  return p;
}

QPolynomial QPolynomial::geometric(int degree, int h) {
  if (h <= 0) throw DomainError("1/(1-q^h) needs h >= 1");
  QPolynomial p(degree);
  for (int k = 0; k <= degree; k += h) p[k] = 1;
  return p;
}

int QPolynomial::valuation() const {
  for (int k = 0; k <= degree_; ++k)
    if (coeffs_[static_cast<std::size_t>(k)] != 0) return k;
  return -1;
}

QPolynomial QPolynomial::shifted(int k) const {
  if (k < 0) throw DomainError("negative shift");
  QPolynomial p(degree_);
  for (int e = 0; e + k <= degree_; ++e) p[e + k] = (*this)[e];
  return p;
}

QPolynomial QPolynomial::truncated(int degree) const {
  if (degree > degree_) throw DomainError("cannot raise the precision of a truncated series");
  return QPolynomial(degree, coeffs_);
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  int n = std::min(degree_, other.degree_);
  if (n < degree_) *this = truncated(n);
  for (int k = 0; k <= n; ++k) (*this)[k] += other[k];
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& other) {
  int n = std::min(degree_, other.degree_);
  QPolynomial p(n);
  for (int a = 0; a <= n; ++a) {
    if ((*this)[a] == 0) continue;
    for (int b = 0; a + b <= n; ++b)
      if (other[b] != 0) p[a + b] += (*this)[a] * other[b];
  }
  *this = std::move(p);
  return *this;
}

std::string QPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree_; ++k) {
    const BigInt& c = (*this)[k];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || c != 1) os << c;
    if (k > 0) os << (c != 1 ? "*" : "") << "q" << (k > 1 ? "^" + std::to_string(k) : "");
  }
  if (first) os << "0";
  os << " + O(q^" << degree_ + 1 << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << p.to_string(); }

}  // namespace skewhook
