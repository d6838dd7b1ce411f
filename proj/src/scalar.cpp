#include "qcms/scalar.hpp"

#include <ostream>

#include "qcms/error.hpp"

namespace qcms {

GaussianRational GaussianRational::fraction(long num, long den) {
  return fraction(mpz_class(num), mpz_class(den));
}

GaussianRational GaussianRational::fraction(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw Error("fraction: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return GaussianRational(std::move(q));
}

GaussianRational GaussianRational::i_power(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return GaussianRational(1);
    case 1: return i();
    case 2: return GaussianRational(-1);
    default: return -i();
  }
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(unsigned long e) const {
  GaussianRational acc(1);
  GaussianRational base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  *this *= o.inverse();
  return *this;
}

static std::string imag_part_display(const mpq_class& q) {
  // |q| assumed positive; renders "i", "2i", "2/3i".
  if (q == 1) return "i";
  return rational_display_string(q) + "i";
}

std::string GaussianRational::str() const {
  if (is_zero()) return "0";
  if (is_real()) return rational_display_string(re_);
  std::string im_str = imag_part_display(abs(im_));
  if (sgn(re_) == 0) return sgn(im_) < 0 ? "-" + im_str : im_str;
  return rational_display_string(re_) + (sgn(im_) < 0 ? "-" : "+") + im_str;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& v) {
  return os << v.str();
}

std::string rational_exact_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_display_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return rational_exact_string(q);
}

mpq_class rational_parse(const std::string& s) {
  if (s.empty()) throw Error("rational_parse: empty string");
  for (size_t k = 0; k < s.size(); ++k) {
    char c = s[k];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && (k == 0 || s[k - 1] == '/'));
    if (!ok) throw Error("rational_parse: bad character in \"" + s + "\"");
  }
  try {
    mpq_class q(s);
    // Check before canonicalize(): its gcd division faults on a zero denominator.
    if (sgn(q.get_den()) == 0) throw Error("rational_parse: zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error("rational_parse: malformed rational \"" + s + "\"");
  }
}

mpz_class factorial(long n) {
  if (n < 0) throw Error("factorial of negative");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace qcms
