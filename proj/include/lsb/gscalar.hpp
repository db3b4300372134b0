#ifndef LSB_GSCALAR_HPP
#define LSB_GSCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lsb {

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

struct ScalarSyntaxError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exact Gaussian rational re + im*i. mpq_class keeps both parts canonical.
class GScalar {
 public:
  GScalar() = default;
  GScalar(long v) : re_(v) {}  // NOLINT: implicit by design, mirrors int literals
  GScalar(int v) : re_(v) {}   // NOLINT
  GScalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GScalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GScalar i() { return GScalar(0, 1); }
  static GScalar rational(long num, long den);
  static GScalar parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_pure_imaginary() const { return sgn(re_) == 0; }

  GScalar conj() const { return GScalar(re_, -im_); }
  GScalar real_part() const { return GScalar(re_); }
  GScalar imag_part() const { return GScalar(im_); }
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }
  GScalar inverse() const;

  GScalar& operator+=(const GScalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GScalar& operator-=(const GScalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GScalar& operator*=(const GScalar& o);
  GScalar& operator/=(const GScalar& o) { return *this *= o.inverse(); }

  friend GScalar operator+(GScalar a, const GScalar& b) { return a += b; }
  friend GScalar operator-(GScalar a, const GScalar& b) { return a -= b; }
  friend GScalar operator*(GScalar a, const GScalar& b) { return a *= b; }
  friend GScalar operator/(GScalar a, const GScalar& b) { return a /= b; }
  GScalar operator-() const { return GScalar(-re_, -im_); }

  friend bool operator==(const GScalar& a, const GScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GScalar& a, const GScalar& b) { return !(a == b); }
  // total order for deterministic containers; not a field order
  friend bool operator<(const GScalar& a, const GScalar& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GScalar& s);

GScalar pow(const GScalar& base, int exponent);

// Rational literal "a" or "a/b" (no i).
mpq_class parse_rational(std::string_view text);
std::string rational_str(const mpq_class& q);

}  // namespace lsb

#endif
