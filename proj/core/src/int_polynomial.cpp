#include "feqlab/int_polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "feqlab/error.hpp"

namespace feqlab {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt c = content();
  if (leading() < 0) c = -c;
  return c == 1 ? *this : divexact(c);
}

BigInt IntPolynomial::max_norm() const {
  BigInt m = 0;
  for (const auto& c : coeffs_) {
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  }
  return m;
}

BigRational IntPolynomial::evaluate(const BigRational& q0) const {
  // Horner on the numerator with the denominator powers folded in, so the
  // whole evaluation costs a single canonicalization.
  if (is_zero()) return BigRational(0);
  const BigInt num = q0.numerator();
  const BigInt den = q0.denominator();
  BigInt acc = coeffs_.back();
  BigInt den_pow = 1;
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc = acc * num + coeffs_[i] * den_pow;
  }
  return BigRational(acc, den_pow);
}

BigInt IntPolynomial::evaluate(const BigInt& q0) const {
  BigInt acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * q0 + coeffs_[i];
  return acc;
}

IntPolynomial IntPolynomial::substitute_power(unsigned w) const {
  if (w == 0) throw PreconditionError("substitution exponent must be positive");
  if (w == 1 || is_constant()) return *this;
  std::vector<BigInt> v((coeffs_.size() - 1) * w + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * w] = coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigInt> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<BigInt> v(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::negated_variable() const {
  IntPolynomial r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

IntPolynomial IntPolynomial::divexact(const BigInt& c) const {
  IntPolynomial r = *this;
  for (auto& x : r.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "q";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

IntPolynomial pow(const IntPolynomial& base, unsigned exponent) {
  IntPolynomial result{1};
  IntPolynomial b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error("division by zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  if (b.is_constant()) {
    for (const auto& c : a.coefficients()) {
      if (!mpz_divisible_p(c.get_mpz_t(), b.leading().get_mpz_t())) return std::nullopt;
    }
    return a.divexact(b.leading());
  }
  std::vector<BigInt> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<BigInt> quot(rem.size() - db);
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), bc[db].get_mpz_t())) return std::nullopt;
    mpz_divexact(quot[k].get_mpz_t(), top.get_mpz_t(), bc[db].get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), quot[k].get_mpz_t(), bc[j].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (rem[i] != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error("division by zero polynomial");
  std::vector<BigInt> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const BigInt& lb = bc[db];
  while (rem.size() > db && !rem.empty()) {
    const std::size_t shift = rem.size() - 1 - db;
    BigInt top = rem.back();
    for (auto& c : rem) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[shift + j].get_mpz_t(), top.get_mpz_t(), bc[j].get_mpz_t());
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return IntPolynomial(std::move(rem));
}

IntPolynomial primitive_prs_gcd(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.primitive_part();
  }
  return a.primitive_part();
}

namespace {

BigInt symmetric_mod(const BigInt& value, const BigInt& modulus, const BigInt& half) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  if (r > half) r -= modulus;
  return r;
}

// Heuristic gcd of two primitive, non-constant polynomials: evaluate at a
// large integer, take the integer gcd, and read the polynomial back from its
// balanced base-xi digits. Any candidate that divides both inputs is the gcd
// once xi exceeds 2*min(|a|,|b|) + 1, so only the divisibility test can fail.
std::optional<GcdResult> heuristic_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  BigInt xi = 2 * std::min(a.max_norm(), b.max_norm()) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const BigInt av = a.evaluate(xi);
    const BigInt bv = b.evaluate(xi);
    BigInt gv;
    mpz_gcd(gv.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
    const BigInt half = xi / 2;
    std::vector<BigInt> digits;
    while (gv != 0) {
      BigInt d = symmetric_mod(gv, xi, half);
      digits.push_back(d);
      gv -= d;
      mpz_divexact(gv.get_mpz_t(), gv.get_mpz_t(), xi.get_mpz_t());
    }
    IntPolynomial candidate = IntPolynomial(std::move(digits)).primitive_part();
    if (!candidate.is_zero()) {
      auto qa = divide_exact(a, candidate);
      if (qa) {
        auto qb = divide_exact(b, candidate);
        if (qb) return GcdResult{std::move(candidate), std::move(*qa), std::move(*qb)};
      }
    }
    // Non-integral growth factor from the literature keeps successive xi
    // from sharing structure.
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

GcdResult gcd_with_cofactors(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) {
    IntPolynomial g = b.primitive_part() * b.content();
    return {g, IntPolynomial{}, IntPolynomial{b.leading() < 0 ? -1 : 1}};
  }
  if (b.is_zero()) {
    IntPolynomial g = a.primitive_part() * a.content();
    return {g, IntPolynomial{a.leading() < 0 ? -1 : 1}, IntPolynomial{}};
  }
  const BigInt ca = a.content();
  const BigInt cb = b.content();
  BigInt cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPolynomial pa = a.primitive_part();
  IntPolynomial pb = b.primitive_part();
  // Signs and contents are carried on the cofactors so that
  // gcd * cofactor reproduces the inputs exactly.
  const BigInt sa = (a.leading() < 0 ? -ca : ca) / cg;
  const BigInt sb = (b.leading() < 0 ? -cb : cb) / cg;

  if (pa.is_constant() || pb.is_constant()) {
    return {IntPolynomial::constant(cg), pa * sa, pb * sb};
  }
  if (pa == pb) {
    return {pa * cg, IntPolynomial::constant(sa), IntPolynomial::constant(sb)};
  }
  if (auto h = heuristic_gcd(pa, pb)) {
    return {h->gcd * cg, h->cofactor_a * sa, h->cofactor_b * sb};
  }
  IntPolynomial g = primitive_prs_gcd(pa, pb);
  IntPolynomial qa = *divide_exact(pa, g);
  IntPolynomial qb = *divide_exact(pb, g);
  return {g * cg, qa * sa, qb * sb};
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) { return gcd_with_cofactors(a, b).gcd; }

}  // namespace feqlab
