#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace zsl {

int euler_phi(int m);

/// Integer coefficients of the m-th cyclotomic polynomial, constant term
/// first. Computed by dividing x^m - 1 by the lower cyclotomic polynomials;
/// cached per conductor.
const std::vector<mpz_class>& cyclotomic_polynomial(int m);

/// Exact element of Q(zeta_m), stored as its residue modulo the m-th
/// cyclotomic polynomial: a rational vector of length phi(m) in the power
/// basis 1, z, ..., z^{phi(m)-1}.
class CyclotomicNumber {
 public:
  CyclotomicNumber() : CyclotomicNumber(1) {}
  explicit CyclotomicNumber(int conductor);
  CyclotomicNumber(int conductor, const mpq_class& value);
  CyclotomicNumber(int conductor, long value) : CyclotomicNumber(conductor, mpq_class(value)) {}

  static CyclotomicNumber zeta(int conductor, std::int64_t power = 1);

  int conductor() const { return m_; }
  const std::vector<mpq_class>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Throws ArithmeticError unless is_rational().
  mpq_class rational_value() const;

  CyclotomicNumber inverse() const;
  // Same number viewed in Q(zeta_M); m must divide M.
  CyclotomicNumber lift(int new_conductor) const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a * b.inverse();
  }
  CyclotomicNumber operator-() const;

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.m_ == b.m_ && a.c_ == b.c_;
  }

  // "0", "2/3", "1 + 2*z6 - z6^2".
  std::string to_string() const;

 private:
  void require_same(const CyclotomicNumber& o) const;

  int m_;
  std::vector<mpq_class> c_;
};

}  // namespace zsl
