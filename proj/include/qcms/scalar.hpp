#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

namespace qcms {

// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
// Parts are always in lowest terms with positive denominators.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(int n) : re_(n), im_(0) {}
  GaussianRational(long n) : re_(n), im_(0) {}
  GaussianRational(const mpz_class& n) : re_(n), im_(0) {}
  GaussianRational(mpq_class re) : re_(std::move(re)), im_(0) {}
  GaussianRational(mpq_class re, mpq_class im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
  // num/den as an exact fraction; den must be nonzero.
  static GaussianRational fraction(long num, long den);
  static GaussianRational fraction(const mpz_class& num, const mpz_class& den);
  // i^k for any integer k (negative allowed).
  static GaussianRational i_power(long k);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conjugate() const { return {re_, -im_}; }
  // |z|^2, a nonnegative rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  // Multiplicative inverse; throws on zero.
  GaussianRational inverse() const;
  GaussianRational pow(unsigned long e) const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
    a += b;
    return a;
  }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
    a -= b;
    return a;
  }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
    a *= b;
    return a;
  }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) {
    a /= b;
    return a;
  }
  friend GaussianRational operator-(const GaussianRational& a) {
    return {-a.re_, -a.im_};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  // Human-readable form: "0", "8", "-2/3", "i", "-2i", "1/2-3i".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& v);

 private:
  mpq_class re_, im_;
};

// "p/q" with the denominator always explicit (e.g. "8/1"); exact and parseable.
std::string rational_exact_string(const mpq_class& q);
// Display form eliding "/1".
std::string rational_display_string(const mpq_class& q);
// Inverse of rational_exact_string / rational_display_string; throws Error on garbage.
mpq_class rational_parse(const std::string& s);

// n! as an exact integer; n must be >= 0.
mpz_class factorial(long n);
// Binomial coefficient C(n, k); zero when k < 0 or k > n.
mpz_class binomial(long n, long k);

}  // namespace qcms
