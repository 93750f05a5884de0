#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "feqlab/big_rational.hpp"

namespace feqlab {

/// Dense polynomial in q with arbitrary-precision integer coefficients,
/// stored in ascending degree. Trailing zeros are always stripped, so the
/// zero polynomial has no coefficients and structural equality is equality.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  /// Coefficient of q^i; zero beyond the degree.
  BigInt coefficient(std::size_t i) const;
  const BigInt& leading() const { return coeffs_.back(); }

  /// Non-negative gcd of the coefficients; 0 for the zero polynomial.
  BigInt content() const;
  /// this / content(), with a positive leading coefficient.
  IntPolynomial primitive_part() const;
  /// Largest absolute coefficient.
  BigInt max_norm() const;

  BigRational evaluate(const BigRational& q0) const;
  BigInt evaluate(const BigInt& q0) const;

  /// q -> q^w.
  IntPolynomial substitute_power(unsigned w) const;
  /// Multiplies by q^k.
  IntPolynomial shifted(std::size_t k) const;
  /// Coefficients reversed: q^deg * p(1/q).
  IntPolynomial reversed() const;
  /// q -> -q.
  IntPolynomial negated_variable() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const BigInt& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
  friend IntPolynomial operator*(const BigInt& c, IntPolynomial a) { return a *= c; }
  friend IntPolynomial operator-(IntPolynomial a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  /// Divides every coefficient by c, which must divide them all.
  IntPolynomial divexact(const BigInt& c) const;

  /// Human-readable form such as "q^2 + 4*q + 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPolynomial pow(const IntPolynomial& base, unsigned exponent);

/// Quotient a / b when b divides a in Z[q], std::nullopt otherwise.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Pseudo-remainder of a by b (b non-zero): the remainder of lc(b)^k * a.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

struct GcdResult {
  IntPolynomial gcd;
  IntPolynomial cofactor_a;  // a / gcd
  IntPolynomial cofactor_b;  // b / gcd
};

/// Greatest common divisor in Z[q], content included, normalized to a
/// positive leading coefficient. gcd(0, 0) = 0 with zero cofactors.
GcdResult gcd_with_cofactors(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive pseudo-remainder sequence gcd of two primitive polynomials.
/// Slow but unconditional; kept callable for cross-checking the fast path.
IntPolynomial primitive_prs_gcd(IntPolynomial a, IntPolynomial b);

}  // namespace feqlab
