#include "zsl/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "zsl/errors.hpp"

namespace zsl {

namespace {

using QPoly = std::vector<mpq_class>;  // constant term first

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo the monic polynomial f.
void reduce_monic(QPoly& a, const std::vector<mpz_class>& f) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t i = a.size(); i-- > deg;) {
    if (a[i] == 0) continue;
    const mpq_class lead = a[i];
    for (std::size_t j = 0; j <= deg; ++j) a[i - deg + j] -= lead * f[j];
  }
  a.resize(deg);
}

// Quotient and remainder over Q.
std::pair<QPoly, QPoly> divide(QPoly a, const QPoly& b) {
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    const mpq_class coef = a[i] / b.back();
    q[i - db] = coef;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= coef * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

int euler_phi(int m) {
  if (m < 1) throw DomainError("conductor must be positive");
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(int m) {
  if (m < 1) throw DomainError("conductor must be positive");
  static std::mutex mutex;
  static std::map<int, std::vector<mpz_class>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  QPoly p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d) continue;
    const auto& phi_d = cyclotomic_polynomial(d);
    QPoly divisor(phi_d.begin(), phi_d.end());
    p = divide(p, divisor).first;
  }
  std::vector<mpz_class> coeffs;
  for (const auto& c : p) coeffs.push_back(c.get_num());
  std::lock_guard lock(mutex);
  return cache.emplace(m, std::move(coeffs)).first->second;
}

CyclotomicNumber::CyclotomicNumber(int conductor)
    : m_(conductor), c_(static_cast<std::size_t>(euler_phi(conductor))) {}

CyclotomicNumber::CyclotomicNumber(int conductor, const mpq_class& value)
    : CyclotomicNumber(conductor) {
  c_[0] = value;
  c_[0].canonicalize();  // mpq_class(2, 4) is not reduced on construction
}

CyclotomicNumber CyclotomicNumber::zeta(int conductor, std::int64_t power) {
  CyclotomicNumber z(conductor);
  std::int64_t e = power % conductor;
  if (e < 0) e += conductor;
  QPoly p(static_cast<std::size_t>(e) + 1, 0);
  p[static_cast<std::size_t>(e)] = 1;
  if (p.size() > z.c_.size()) reduce_monic(p, cyclotomic_polynomial(conductor));
  p.resize(z.c_.size());
  z.c_ = std::move(p);
  return z;
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : c_) {
    if (c != 0) return false;
  }
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

mpq_class CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw ArithmeticError("value " + to_string() + " is not rational");
  return c_[0];
}

void CyclotomicNumber::require_same(const CyclotomicNumber& o) const {
  if (m_ != o.m_) {
    throw StructuralError("cyclotomic conductors differ: " + std::to_string(m_) + " vs " +
                          std::to_string(o.m_) + " (lift to a common conductor first)");
  }
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  require_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  require_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  require_same(o);
  if (c_.size() == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  QPoly prod(2 * c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
  }
  reduce_monic(prod, cyclotomic_polynomial(m_));
  c_ = std::move(prod);
  return *this;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero in Q(zeta_" + std::to_string(m_) + ")");
  if (c_.size() == 1) return CyclotomicNumber(m_, mpq_class(1) / c_[0]);
  // Extended Euclid: track s with s * a = r (mod Phi_m).
  const auto& phi = cyclotomic_polynomial(m_);
  QPoly r0(phi.begin(), phi.end()), r1 = c_;
  trim(r1);
  QPoly s0, s1{1};
  while (!(r1.size() == 1)) {
    auto [q, r] = divide(r0, r1);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a non-zero constant since Phi_m is irreducible.
  for (auto& c : s1) c /= r1[0];
  if (s1.size() > c_.size()) reduce_monic(s1, phi);
  s1.resize(c_.size());
  CyclotomicNumber out(m_);
  out.c_ = std::move(s1);
  return out;
}

CyclotomicNumber CyclotomicNumber::lift(int new_conductor) const {
  if (new_conductor % m_ != 0) {
    throw DomainError("cannot lift Q(zeta_" + std::to_string(m_) + ") into Q(zeta_" +
                      std::to_string(new_conductor) + ")");
  }
  const int step = new_conductor / m_;
  CyclotomicNumber out(new_conductor);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    out += CyclotomicNumber(new_conductor, c_[i]) *
           zeta(new_conductor, static_cast<std::int64_t>(i) * step);
  }
  return out;
}

std::string CyclotomicNumber::to_string() const {
  std::string out;
  const std::string z = "z" + std::to_string(m_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpq_class c = c_[i];
    const bool negative = c < 0;
    if (negative) c = -c;
    std::string term;
    if (i == 0) {
      term = c.get_str();
    } else {
      term = c == 1 ? "" : c.get_str() + "*";
      term += i == 1 ? z : z + "^" + std::to_string(i);
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace zsl
