#include "lsb/gscalar.hpp"

#include <cctype>
#include <ostream>

namespace lsb {

GScalar GScalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return GScalar(q);
}

GScalar GScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero in Q(i)");
  mpq_class n = norm2();
  return GScalar(re_ / n, -im_ / n);
}

GScalar& GScalar::operator*=(const GScalar& o) {
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

GScalar pow(const GScalar& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  GScalar result(1), b = base;
  while (exponent) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

std::string rational_str(const mpq_class& q) {
  return q.get_str();  // "a" or "a/b", canonical
}

std::string GScalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  if (sgn(im_) != 0) {
    mpz_class num = im_.get_num(), den = im_.get_den();
    if (sgn(num) > 0 && !out.empty()) out += '+';
    if (num == -1)
      out += "-i";
    else if (num == 1)
      out += "i";
    else
      out += num.get_str() + "i";
    if (den != 1) out += "/" + den.get_str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GScalar& s) { return os << s.str(); }

namespace {

struct ScalarReader {
  std::string_view s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw ScalarSyntaxError("bad scalar '" + std::string(s) + "' at offset " +
                            std::to_string(pos) + ": " + why);
  }
  bool at_end() const { return pos >= s.size(); }
  char peek() const { return at_end() ? '\0' : s[pos]; }

  mpz_class digits() {
    size_t start = pos;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (start == pos) fail("expected digits");
    return mpz_class(std::string(s.substr(start, pos - start)));
  }

  // term := digits ['/' digits] | [digits] 'i' ['/' digits]
  void term(int sign, mpq_class& re, mpq_class& im, bool& have_re, bool& have_im) {
    mpz_class num = 1;
    bool has_num = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      num = digits();
      has_num = true;
    }
    bool imag = false;
    if (peek() == 'i') {
      imag = true;
      ++pos;
    } else if (!has_num) {
      fail("expected number or i");
    }
    mpz_class den = 1;
    if (peek() == '/') {
      ++pos;
      den = digits();
      if (den == 0) throw DivisionByZero("zero denominator in '" + std::string(s) + "'");
    }
    mpq_class q(num * sign, den);
    q.canonicalize();
    if (imag) {
      if (have_im) fail("two imaginary parts");
      im = q;
      have_im = true;
    } else {
      if (have_re) fail("two real parts");
      re = q;
      have_re = true;
    }
  }
};

}  // namespace

GScalar GScalar::parse(std::string_view text) {
  ScalarReader r{text};
  mpq_class re = 0, im = 0;
  bool have_re = false, have_im = false;
  int sign = 1;
  if (r.peek() == '+' || r.peek() == '-') {
    sign = r.peek() == '-' ? -1 : 1;
    ++r.pos;
  }
  r.term(sign, re, im, have_re, have_im);
  if (r.peek() == '+' || r.peek() == '-') {
    sign = r.peek() == '-' ? -1 : 1;
    ++r.pos;
    r.term(sign, re, im, have_re, have_im);
  }
  if (!r.at_end()) r.fail("trailing characters");
  return GScalar(re, im);
}

mpq_class parse_rational(std::string_view text) {
  GScalar g = GScalar::parse(text);
  if (!g.is_real()) throw ScalarSyntaxError("expected a rational, got '" + std::string(text) + "'");
  return g.re();
}

}  // namespace lsb
