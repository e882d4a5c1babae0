#include "excursion/rational.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace excursion {

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::from_double(double d) {
  if (!std::isfinite(d)) throw std::invalid_argument("non-finite double");
  Rat r;
  mpq_set_d(r.v_.get_mpq_t(), d);
  return r;
}

Rat Rat::from_long_double(long double d) {
  if (!std::isfinite((double)d)) throw std::invalid_argument("non-finite long double");
  // Split into mantissa * 2^e with a 64-bit integer mantissa.
  int e = 0;
  long double m = frexpl(d, &e);  // |m| in [0.5, 1)
  long long mi = (long long)ldexpl(m, 62);
  Rat r = Rat(mpz_class((long)mi));
  int shift = e - 62;
  mpz_class two(1);
  mpz_mul_2exp(two.get_mpz_t(), two.get_mpz_t(), (unsigned long)(shift >= 0 ? shift : -shift));
  return shift >= 0 ? r * Rat(two) : r / Rat(two);
}

Rat Rat::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!isspace((unsigned char)c)) s += c;
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class n, d;
    if (n.set_str(s.substr(0, slash), 10) != 0 || d.set_str(s.substr(slash + 1), 10) != 0)
      throw std::invalid_argument("bad rational literal: " + text);
    return Rat(n, d);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    mpz_class n;
    if (digits.empty() || n.set_str(digits, 10) != 0)
      throw std::invalid_argument("bad decimal literal: " + text);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac_len);
    return Rat(n, d);
  }
  mpz_class n;
  if (n.set_str(s, 10) != 0) throw std::invalid_argument("bad integer literal: " + text);
  return Rat(n);
}

long double log2_mpz(const mpz_class& z) {
  if (mpz_sgn(z.get_mpz_t()) <= 0) throw std::domain_error("log2 of non-positive integer");
  size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
  // Take the top <=126 bits exactly, then a long double log.
  unsigned long shift = bits > 126 ? (unsigned long)(bits - 126) : 0ul;
  mpz_class top;
  mpz_fdiv_q_2exp(top.get_mpz_t(), z.get_mpz_t(), shift);
  mpz_class hi, lo;
  mpz_fdiv_q_2exp(hi.get_mpz_t(), top.get_mpz_t(), 63);
  mpz_fdiv_r_2exp(lo.get_mpz_t(), top.get_mpz_t(), 63);
  long double x = ldexpl((long double)hi.get_ui(), 63) + (long double)lo.get_ui();
  return log2l(x) + (long double)shift;
}

long double Rat::log2_abs() const {
  if (is_zero()) throw std::domain_error("log2 of zero");
  mpz_class n = num();
  mpz_abs(n.get_mpz_t(), n.get_mpz_t());
  return log2_mpz(n) - log2_mpz(den());
}

long double Rat::to_long_double() const {
  if (is_zero()) return 0.0L;
  long double l = log2_abs();
  // Values this large/small only appear in logs, never as direct reals.
  if (l > 16000.0L || l < -16000.0L) throw std::overflow_error("rational out of long double range");
  mpz_class n = num();
  mpz_abs(n.get_mpz_t(), n.get_mpz_t());
  mpz_class d = den();
  long nb = (long)mpz_sizeinbase(n.get_mpz_t(), 2);
  long db = (long)mpz_sizeinbase(d.get_mpz_t(), 2);
  // Scale both to ~80 bits and divide.
  long ns = nb - 80, ds = db - 80;
  if (ns < 0) ns = 0;
  if (ds < 0) ds = 0;
  mpz_class nt, dt;
  mpz_fdiv_q_2exp(nt.get_mpz_t(), n.get_mpz_t(), (unsigned long)ns);
  mpz_fdiv_q_2exp(dt.get_mpz_t(), d.get_mpz_t(), (unsigned long)ds);
  mpz_class hi, lo;
  mpz_fdiv_q_2exp(hi.get_mpz_t(), nt.get_mpz_t(), 63);
  mpz_fdiv_r_2exp(lo.get_mpz_t(), nt.get_mpz_t(), 63);
  long double nd = ldexpl((long double)hi.get_ui(), 63) + (long double)lo.get_ui();
  mpz_fdiv_q_2exp(hi.get_mpz_t(), dt.get_mpz_t(), 63);
  mpz_fdiv_r_2exp(lo.get_mpz_t(), dt.get_mpz_t(), 63);
  long double dd = ldexpl((long double)hi.get_ui(), 63) + (long double)lo.get_ui();
  long double v = ldexpl(nd / dd, (int)(ns - ds));
  return sign() < 0 ? -v : v;
}

std::string Rat::str() const { return v_.get_str(); }

mpz_class Rat::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

mpz_class Rat::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

mpz_class Rat::round_nearest() const {
  // floor(x + 1/2) with ties away from zero for negatives handled via sign.
  Rat half(mpz_class(1), mpz_class(2));
  if (sign() >= 0) return (*this + half).floor();
  return (*this - half).ceil();
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Rat r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rat Rat::pow_int(long e) const {
  if (e == 0) return Rat(1);
  Rat base = e > 0 ? *this : inverse();
  unsigned long k = (unsigned long)(e > 0 ? e : -e);
  Rat acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.v_.get_str(); }

mpz_class isqrt(const mpz_class& z) {
  if (mpz_sgn(z.get_mpz_t()) < 0) throw std::domain_error("isqrt of negative");
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

mpz_class floor_sqrt(const Rat& r) {
  if (r.sign() < 0) throw std::domain_error("floor_sqrt of negative");
  // floor(sqrt(n/d)) = floor(sqrt(n*d)/d)
  mpz_class nd = r.num() * r.den();
  mpz_class s = isqrt(nd);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), s.get_mpz_t(), r.den().get_mpz_t());
  return q;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat norm_sq(const RatVec& a) { return dot(a, a); }

Rat det(const RatMat& m) {
  // Fraction-free Gaussian elimination would be overkill at d <= 6.
  RatMat a = m;
  Eigen::Index n = a.rows();
  Rat d(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index r = c; r < n; ++r)
      if (!a(r, c).is_zero()) { p = r; break; }
    if (p < 0) return Rat(0);
    if (p != c) { a.row(p).swap(a.row(c)); d = -d; }
    d *= a(c, c);
    Rat inv = a(c, c).inverse();
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      Rat f = a(r, c) * inv;
      for (Eigen::Index k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return d;
}

RatMat inverse(const RatMat& m) {
  Eigen::Index n = m.rows();
  RatMat a = m;
  RatMat inv = RatMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) inv(i, i) = Rat(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index r = c; r < n; ++r)
      if (!a(r, c).is_zero()) { p = r; break; }
    if (p < 0) throw std::invalid_argument("singular matrix");
    if (p != c) { a.row(p).swap(a.row(c)); inv.row(p).swap(inv.row(c)); }
    Rat piv = a(c, c).inverse();
    for (Eigen::Index k = 0; k < n; ++k) { a(c, k) *= piv; inv(c, k) *= piv; }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      Rat f = a(r, c);
      for (Eigen::Index k = 0; k < n; ++k) {
        a(r, k) -= f * a(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

}  // namespace excursion
