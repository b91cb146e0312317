#pragma once

// Exact Laurent polynomials in one variable t over arbitrary-precision
// integers.  Stored sparsely as exponent -> coefficient with no zero
// coefficients.  Canonical form: minimum exponent 0 and value +1 at t=1.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gridknot/errors.hpp"

namespace gridknot {

using BigInt = boost::multiprecision::cpp_int;

class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;  // zero
  explicit LaurentPolynomial(long long constant) {
    if (constant != 0) coeffs_[0] = constant;
  }

  static LaurentPolynomial monomial(int exp, BigInt coeff) {
    LaurentPolynomial p;
    if (coeff != 0) p.coeffs_[exp] = std::move(coeff);
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }

  int min_exp() const { return coeffs_.begin()->first; }   // nonzero only
  int max_exp() const { return coeffs_.rbegin()->first; }  // nonzero only

  BigInt coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  const std::map<int, BigInt>& terms() const { return coeffs_; }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    a += b;
    return a;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    a -= b;
    return a;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const BigInt& s) {
    LaurentPolynomial out;
    if (s != 0)
      for (const auto& [e, c] : a.coeffs_) out.coeffs_[e] = c * s;
    return out;
  }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a) { return a * BigInt(-1); }

  // Multiply by t^k.
  LaurentPolynomial shifted(int k) const {
    LaurentPolynomial out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[e + k] = c;
    return out;
  }

  // Exact quotient; throws NonDivisible when the remainder is nonzero.
  LaurentPolynomial divided_exact(const LaurentPolynomial& d) const {
    if (d.is_zero()) fail(ErrorCode::NonDivisible, "division by zero polynomial");
    if (is_zero()) return {};
    // Strip to ordinary polynomials and divide from the top degree down.
    const int shift = min_exp() - d.min_exp();
    LaurentPolynomial rem = shifted(-min_exp());
    const LaurentPolynomial div = d.shifted(-d.min_exp());
    const int ddeg = div.max_exp();
    const BigInt& dlead = div.coeffs_.rbegin()->second;
    LaurentPolynomial q;
    while (!rem.is_zero()) {
      const int e = rem.max_exp() - ddeg;
      if (e < 0) fail(ErrorCode::NonDivisible, "nonzero remainder");
      const BigInt rlead = rem.coeff(rem.max_exp());
      if (rlead % dlead != 0) fail(ErrorCode::NonDivisible, "nonzero remainder");
      const BigInt c = rlead / dlead;
      q.add_term(e, c);
      rem -= div.shifted(e) * c;
    }
    return q.shifted(shift);
  }

  BigInt eval_at_one() const {
    BigInt v = 0;
    for (const auto& [e, c] : coeffs_) v += c;
    return v;
  }

  BigInt eval_at_minus_one() const {
    BigInt v = 0;
    for (const auto& [e, c] : coeffs_) v += (e % 2 == 0) ? c : -c;
    return v;
  }

  // Shift the minimum exponent to 0 and fix the sign so the value at t=1 is
  // +1.  A value other than +-1 at t=1 signals a normalization bug upstream.
  LaurentPolynomial canonicalized() const {
    if (is_zero()) fail(ErrorCode::ZeroDeterminant, "cannot canonicalize zero");
    LaurentPolynomial p = shifted(-min_exp());
    const BigInt v = p.eval_at_one();
    if (v == 1) return p;
    if (v == -1) return -p;
    fail(ErrorCode::NonDivisible, "value at t=1 is not a unit");
  }

  bool operator==(const LaurentPolynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

  // Ascending coefficient list from exponent 0, e.g. "1,-1,1".  Only defined
  // for polynomials with nonnegative exponents (zero serializes as "0").
  std::string coeff_string() const {
    if (is_zero()) return "0";
    if (min_exp() < 0)
      fail(ErrorCode::ParseError, "negative exponent in coefficient serialization");
    std::string out;
    for (int e = 0; e <= max_exp(); ++e) {
      if (e) out += ',';
      out += coeff(e).str();
    }
    return out;
  }

  static LaurentPolynomial parse_coeffs(const std::string& text) {
    LaurentPolynomial p;
    size_t pos = 0;
    int exp = 0;
    while (pos <= text.size()) {
      size_t comma = text.find(',', pos);
      const std::string field =
          text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      const size_t digits = field.size() - (field.size() && field[0] == '-' ? 1 : 0);
      if (digits == 0 ||
          field.find_first_not_of("0123456789", field[0] == '-' ? 1 : 0) != std::string::npos ||
          (digits > 1 && field[field[0] == '-' ? 1 : 0] == '0') || field == "-0")
        fail(ErrorCode::ParseError, "bad coefficient '" + field + "'");
      p.add_term(exp++, BigInt(field));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return p;
  }

 private:
  void add_term(int exp, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  std::map<int, BigInt> coeffs_;
};

}  // namespace gridknot
