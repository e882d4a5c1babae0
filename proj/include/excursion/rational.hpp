// Exact rational scalar type and dense-matrix aliases used across the library.
//
// Rat is a thin value wrapper over GMP's mpq_class with plain value-returning
// operators, so it can be used as an Eigen scalar (gmpxx expression templates
// cannot). All lattice coordinates are carried exactly; logarithms are taken
// only at report time in long double (64-bit mantissa on x86-64).
#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace excursion {

class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(const mpz_class& n) : v_(n) {}
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(const mpq_class& v) : v_(v) {}

  // Exact conversion; every finite double is a dyadic rational.
  static Rat from_double(double d);
  static Rat from_long_double(long double d);
  // Accepts "p", "p/q", and decimal forms like "-3.25".
  static Rat parse(const std::string& text);

  const mpq_class& raw() const { return v_; }
  mpq_class& raw() { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }

  double to_double() const { return v_.get_d(); }
  long double to_long_double() const;
  // log2 of |value|; requires nonzero.
  long double log2_abs() const;
  std::string str() const;

  mpz_class floor() const;
  mpz_class ceil() const;
  mpz_class round_nearest() const;  // half away from zero

  Rat inverse() const;
  Rat pow_int(long e) const;  // e may be negative (value must be nonzero)

  Rat operator-() const {
    Rat r;
    mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
  }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { v_ /= o.v_; return *this; }

  friend Rat operator+(const Rat& a, const Rat& b) { Rat r(a); r += b; return r; }
  friend Rat operator-(const Rat& a, const Rat& b) { Rat r(a); r -= b; return r; }
  friend Rat operator*(const Rat& a, const Rat& b) { Rat r(a); r *= b; return r; }
  friend Rat operator/(const Rat& a, const Rat& b) { Rat r(a); r /= b; return r; }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

// log2 of a positive big integer, accurate to ~1 ulp of long double.
long double log2_mpz(const mpz_class& z);
// floor(sqrt(z)) for z >= 0.
mpz_class isqrt(const mpz_class& z);
// Largest integer k with k <= sqrt(r); r >= 0.
mpz_class floor_sqrt(const Rat& r);

template <typename S>
using VecX = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <typename S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

using RatVec = VecX<Rat>;
using RatMat = MatX<Rat>;
using Mat2 = Eigen::Matrix<Rat, 2, 2>;
using Vec2 = Eigen::Matrix<Rat, 2, 1>;

// Exact dot product / squared norm helpers (avoid Eigen sqrt paths on Rat).
Rat dot(const RatVec& a, const RatVec& b);
Rat norm_sq(const RatVec& a);
Rat det(const RatMat& m);
RatMat inverse(const RatMat& m);

}  // namespace excursion

namespace Eigen {
template <>
struct NumTraits<excursion::Rat> {
  typedef excursion::Rat Real;
  typedef excursion::Rat NonInteger;
  typedef excursion::Rat Nested;
  typedef excursion::Rat Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 32
  };
  static inline Real epsilon() { return excursion::Rat(0); }
  static inline Real dummy_precision() { return excursion::Rat(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
